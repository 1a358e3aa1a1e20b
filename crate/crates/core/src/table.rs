//! Cayley tables of finite magmas with a distinguished zero.

use alloc::vec::Vec;
use core::fmt;

/// An element of a finite algebra, identified by its index.
pub type Element = usize;

/// The distinguished element `θ`.
pub const ZERO: Element = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableError {
    Empty,
    /// The entry count is not `size * size`.
    NotSquare { size: usize, entries: usize },
    /// Row `row` has the wrong number of columns.
    RaggedRow { row: usize, len: usize, size: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::Empty => write!(f, "a table needs at least one element"),
            TableError::NotSquare { size, entries } => {
                write!(f, "{entries} entries do not form a {size}x{size} table")
            }
            TableError::RaggedRow { row, len, size } => {
                write!(f, "row {row} has {len} entries, expected {size}")
            }
            TableError::EntryOutOfRange { row, col, value, size } => {
                write!(f, "entry ({row},{col}) = {value} is not below the table size {size}")
            }
        }
    }
}

impl core::error::Error for TableError {}

/// Full multiplication table `entry(i, j) = i ∗ j` over the elements `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CayleyTable {
    size: usize,
    entries: Vec<Element>,
}

impl CayleyTable {
    /// Builds a table from row-major entries.
    pub fn new(size: usize, entries: Vec<Element>) -> Result<Self, TableError> {
        if size == 0 {
            return Err(TableError::Empty);
        }
        if entries.len() != size * size {
            return Err(TableError::NotSquare { size, entries: entries.len() });
        }
        if let Some(pos) = entries.iter().position(|&e| e >= size) {
            return Err(TableError::EntryOutOfRange {
                row: pos / size,
                col: pos % size,
                value: entries[pos],
                size,
            });
        }
        Ok(CayleyTable { size, entries })
    }

    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self, TableError> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (row, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != size {
                return Err(TableError::RaggedRow { row, len: r.len(), size });
            }
            entries.extend_from_slice(r);
        }
        CayleyTable::new(size, entries)
    }

    /// The one-element algebra `{θ}`.
    pub fn trivial() -> Self {
        CayleyTable { size: 1, entries: alloc::vec![ZERO] }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    /// `x ∗ y`. Panics if either index is out of range.
    #[inline]
    pub fn op(&self, x: Element, y: Element) -> Element {
        assert!(x < self.size && y < self.size, "element out of range");
        self.entries[x * self.size + y]
    }

    #[inline]
    pub fn row(&self, x: Element) -> &[Element] {
        &self.entries[x * self.size..(x + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> + '_ {
        self.entries.chunks(self.size)
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn elements(&self) -> core::ops::Range<Element> {
        0..self.size
    }

    pub fn contains(&self, x: Element) -> bool {
        x < self.size
    }

    /// Returns the table obtained by renaming every element `x` to `perm[x]`.
    ///
    /// `perm` must be a bijection on `0..size`; the result satisfies
    /// `out.op(perm[x], perm[y]) == perm[self.op(x, y)]`.
    pub fn relabel(&self, perm: &[Element]) -> CayleyTable {
        assert_eq!(perm.len(), self.size, "permutation length must equal table size");
        let n = self.size;
        let mut entries = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.op(x, y)];
            }
        }
        CayleyTable { size: n, entries }
    }
}
