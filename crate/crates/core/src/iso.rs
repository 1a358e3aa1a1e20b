//! Isomorphism search between Cayley tables by backtracking over
//! permutations that fix `θ`.

use alloc::vec::Vec;
use core::fmt;

use crate::table::{CayleyTable, Element, ZERO};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoError {
    /// The search is exponential in the table size; larger tables are refused.
    SizeAboveCap { size: usize, cap: usize },
}

impl fmt::Display for IsoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoError::SizeAboveCap { size, cap } => write!(
                f,
                "isomorphism search refused: table size {size} exceeds the cap of {cap}"
            ),
        }
    }
}

impl core::error::Error for IsoError {}

/// A bijection on `0..r`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<Element>);

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation((0..size).collect())
    }

    /// `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<Element>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation(images))
    }

    pub fn apply(&self, x: Element) -> Element {
        self.0[x]
    }

    pub fn images(&self) -> &[Element] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fixes_zero(&self) -> bool {
        self.0.first() == Some(&ZERO)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            inv[y] = x;
        }
        Permutation(inv)
    }

    /// Checks `σ(0) = 0` and `σ(x∗y) = σ(x)∗′σ(y)` entry by entry.
    pub fn is_isomorphism(&self, a: &CayleyTable, b: &CayleyTable) -> bool {
        let n = a.size();
        if b.size() != n || self.0.len() != n || !self.fixes_zero() {
            return false;
        }
        (0..n).all(|x| (0..n).all(|y| self.0[a.op(x, y)] == b.op(self.0[x], self.0[y])))
    }
}

/// Relabeling-invariant fingerprint of one element. Two elements can only
/// correspond under an isomorphism fixing `θ` if their fingerprints agree.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Fingerprint {
    row_zeros: usize,
    col_zeros: usize,
    /// Sorted multiplicities of the values in the row.
    row_profile: Vec<usize>,
    fixed_by_zero: bool,
    idempotent: bool,
}

fn fingerprints(t: &CayleyTable) -> Vec<Fingerprint> {
    let n = t.size();
    (0..n)
        .map(|x| {
            let mut counts = alloc::vec![0usize; n];
            for &v in t.row(x) {
                counts[v] += 1;
            }
            let mut row_profile: Vec<usize> = counts.into_iter().filter(|&c| c > 0).collect();
            row_profile.sort_unstable();
            Fingerprint {
                row_zeros: t.row(x).iter().filter(|&&v| v == ZERO).count(),
                col_zeros: (0..n).filter(|&y| t.op(y, x) == ZERO).count(),
                row_profile,
                fixed_by_zero: t.op(x, ZERO) == x,
                idempotent: t.op(x, x) == x,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoSearch {
    pub cap: usize,
}

impl Default for IsoSearch {
    fn default() -> Self {
        IsoSearch { cap: 10 }
    }
}

impl IsoSearch {
    pub fn with_cap(cap: usize) -> Self {
        IsoSearch { cap }
    }

    /// Finds an isomorphism `a → b` fixing `θ`, if one exists.
    pub fn find(&self, a: &CayleyTable, b: &CayleyTable) -> Result<Option<Permutation>, IsoError> {
        if a.size() != b.size() {
            return Ok(None);
        }
        let n = a.size();
        if n > self.cap {
            return Err(IsoError::SizeAboveCap { size: n, cap: self.cap });
        }
        let fa = fingerprints(a);
        let fb = fingerprints(b);
        if fa[ZERO] != fb[ZERO] {
            return Ok(None);
        }
        let candidates: Vec<Vec<Element>> = (0..n)
            .map(|x| (1..n).filter(|&y| fa[x] == fb[y]).collect())
            .collect();

        let mut state = Search {
            a,
            b,
            image: alloc::vec![None; n],
            used: alloc::vec![false; n],
            candidates,
        };
        state.image[ZERO] = Some(ZERO);
        state.used[ZERO] = true;
        if !state.consistent(ZERO) {
            return Ok(None);
        }
        Ok(state.extend(1).then(|| {
            Permutation(state.image.iter().map(|i| i.expect("complete assignment")).collect())
        }))
    }
}

/// [`IsoSearch::find`] with the default cap.
pub fn are_isomorphic(a: &CayleyTable, b: &CayleyTable) -> Result<Option<Permutation>, IsoError> {
    IsoSearch::default().find(a, b)
}

struct Search<'t> {
    a: &'t CayleyTable,
    b: &'t CayleyTable,
    image: Vec<Option<Element>>,
    used: Vec<bool>,
    candidates: Vec<Vec<Element>>,
}

impl Search<'_> {
    fn extend(&mut self, x: Element) -> bool {
        let n = self.a.size();
        if x == n {
            let perm = Permutation(self.image.iter().map(|i| i.unwrap()).collect());
            return perm.is_isomorphism(self.a, self.b);
        }
        for k in 0..self.candidates[x].len() {
            let y = self.candidates[x][k];
            if self.used[y] {
                continue;
            }
            self.image[x] = Some(y);
            self.used[y] = true;
            if self.consistent(x) && self.extend(x + 1) {
                return true;
            }
            self.image[x] = None;
            self.used[y] = false;
        }
        false
    }

    /// Checks every product with `x` as an operand against the partial map.
    fn consistent(&self, x: Element) -> bool {
        let n = self.a.size();
        for u in 0..n {
            let Some(su) = self.image[u] else { continue };
            let sx = self.image[x].unwrap();
            for (p, target) in [
                (self.a.op(x, u), self.b.op(sx, su)),
                (self.a.op(u, x), self.b.op(su, sx)),
            ] {
                match self.image[p] {
                    Some(sp) if sp != target => return false,
                    // p unmapped: its image is forced, so the target must still be free
                    None if self.used[target] => return false,
                    _ => {}
                }
            }
        }
        true
    }
}
