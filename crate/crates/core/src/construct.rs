//! Code → matrix → algebra, and algebra → code through cut functions.
//!
//! The associated matrix of an admissible code with `m` words of length `q`
//! over `n` symbols has size `r` and a chain block of size `c = r - m`:
//!
//! ```text
//! q <  n - 1:  r = n - 1 + m,  c = n - 1
//! q >= n - 1:  r = m + q + 1,  c = q + 1
//! ```
//!
//! At `q = n - 1` the short-word layout would put the first word on row
//! `q`, where column `q` is the diagonal and its last symbol would be
//! lost, so that shape uses the long-word layout.
//!
//! Row 0 is all zeros and column 0 holds the row index. Chain rows
//! `1..c` carry ones strictly below the diagonal. Word `w_i` (1-based)
//! occupies row `c + i - 1`: its symbols in columns `1..=q`, ones in the
//! filler columns up to the diagonal, zeros from the diagonal on.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::axioms::{check_bck, AxiomReport};
use crate::code::{
    chain_size, validate_admissible, Alphabet, BlockCode, Codeword, ValidationReport,
};
use crate::table::{CayleyTable, Element};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    Inadmissible(ValidationReport),
    /// The constructed table failed the BCK axioms. Unreachable for
    /// admissible codes; reaching it indicates a bug.
    NotBck(AxiomReport),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Inadmissible(r) => {
                write!(f, "code is not admissible ({} rule failures)", r.failures.len())
            }
            BuildError::NotBck(r) => write!(
                f,
                "constructed table is not a BCK-algebra ({} violations)",
                r.violations().len()
            ),
        }
    }
}

impl core::error::Error for BuildError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionCase {
    /// `q < n - 1`
    ShortWords,
    /// `q >= n - 1`
    LongWords,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    pub case: ConstructionCase,
    /// Matrix size `r`.
    pub size: usize,
    /// Chain block size `c = r - m`; the first word sits in row `c`.
    pub chain: usize,
}

impl ConstructionParams {
    /// Dimensions for `m` words of length `q` over `n` symbols, with no
    /// admissibility check.
    pub fn for_shape(n: usize, q: usize, m: usize) -> Self {
        let case = if q + 1 < n { ConstructionCase::ShortWords } else { ConstructionCase::LongWords };
        let chain = chain_size(n, q);
        ConstructionParams { case, size: chain + m, chain }
    }

    pub fn word_count(&self) -> usize {
        self.size - self.chain
    }

    /// Matrix row of the 1-based word `i`.
    pub fn word_row(&self, i: usize) -> usize {
        self.chain + i - 1
    }
}

pub fn dimension(c: &BlockCode) -> Result<ConstructionParams, BuildError> {
    let report = validate_admissible(c);
    if !report.admissible() {
        return Err(BuildError::Inadmissible(report));
    }
    Ok(ConstructionParams::for_shape(c.alphabet_size(), c.length(), c.len()))
}

/// The matrix `α` attached to a code, kept together with the code it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedMatrix {
    params: ConstructionParams,
    table: CayleyTable,
    code: BlockCode,
}

impl AssociatedMatrix {
    /// Fills the matrix for any non-empty code, admissible or not. The
    /// result is always a valid table since every symbol is below `n ≤ r`.
    pub fn from_code_unchecked(c: &BlockCode) -> Self {
        assert!(!c.is_empty(), "the matrix needs at least one word");
        let q = c.length();
        let params = ConstructionParams::for_shape(c.alphabet_size(), q, c.len());
        let r = params.size;
        let mut entries = alloc::vec![0; r * r];
        for s in 1..r {
            entries[s * r] = s;
        }
        for s in 1..params.chain {
            for t in 1..s {
                entries[s * r + t] = 1;
            }
        }
        for (idx, w) in c.words().iter().enumerate() {
            let s = params.word_row(idx + 1);
            for t in 1..s {
                entries[s * r + t] = if t <= q { w.at(t) } else { 1 };
            }
        }
        let table = CayleyTable::new(r, entries).expect("entries are below r");
        AssociatedMatrix { params, table, code: c.clone() }
    }

    pub fn params(&self) -> ConstructionParams {
        self.params
    }

    pub fn entry(&self, s: usize, t: usize) -> usize {
        self.table.op(s, t)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn into_table(self) -> CayleyTable {
        self.table
    }

    pub fn code(&self) -> &BlockCode {
        &self.code
    }
}

pub fn build_matrix(c: &BlockCode) -> Result<AssociatedMatrix, BuildError> {
    dimension(c)?;
    Ok(AssociatedMatrix::from_code_unchecked(c))
}

/// Builds the algebra `i ∗ j = α_ij` and confirms the BCK axioms on it.
pub fn build_algebra(c: &BlockCode) -> Result<CayleyTable, BuildError> {
    let table = build_matrix(c)?.into_table();
    let report = check_bck(&table);
    if !report.verdict() {
        return Err(BuildError::NotBck(report));
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointError {
    NoPoints,
    PointOutOfRange { point: Element, size: usize },
    ElementOutOfRange { element: Element, size: usize },
}

impl fmt::Display for PointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointError::NoPoints => write!(f, "at least one evaluation point is required"),
            PointError::PointOutOfRange { point, size } => {
                write!(f, "evaluation point {point} is not an element of a {size}-element algebra")
            }
            PointError::ElementOutOfRange { element, size } => {
                write!(f, "element {element} is not in a {size}-element algebra")
            }
        }
    }
}

impl core::error::Error for PointError {}

/// The images `f(x_1), …, f(x_L)` at which cut functions are read.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvaluationMap(Vec<Element>);

impl EvaluationMap {
    pub fn new(points: Vec<Element>) -> Result<Self, PointError> {
        if points.is_empty() {
            return Err(PointError::NoPoints);
        }
        Ok(EvaluationMap(points))
    }

    /// Points `1..=q`.
    pub fn first_elements(q: usize) -> Result<Self, PointError> {
        EvaluationMap::new((1..=q).collect())
    }

    pub fn points(&self) -> &[Element] {
        &self.0
    }

    fn check(&self, t: &CayleyTable) -> Result<(), PointError> {
        match self.0.iter().find(|&&p| !t.contains(p)) {
            Some(&point) => Err(PointError::PointOutOfRange { point, size: t.size() }),
            None => Ok(()),
        }
    }
}

/// Codeword of element `s`: symbol `t` is the index `k` with `s ∗ p_t = k`.
pub fn cut_codeword(
    t: &CayleyTable,
    s: Element,
    e: &EvaluationMap,
) -> Result<Codeword, PointError> {
    if !t.contains(s) {
        return Err(PointError::ElementOutOfRange { element: s, size: t.size() });
    }
    e.check(t)?;
    Ok(Codeword::new(e.points().iter().map(|&p| t.op(s, p)).collect()).expect("points non-empty"))
}

/// The distinct cut codewords of all elements, ascending. Symbols are
/// element indices, so the alphabet is `r` (at least 2).
pub fn generate_code(t: &CayleyTable, e: &EvaluationMap) -> Result<BlockCode, PointError> {
    e.check(t)?;
    let words: BTreeSet<Codeword> =
        t.elements().map(|s| cut_codeword(t, s, e)).collect::<Result<_, _>>()?;
    let alphabet = Alphabet::new(t.size().max(2)).expect("size at least 2");
    Ok(BlockCode::new(alphabet, e.points().len(), words.into_iter().collect())
        .expect("cut words share the point count and stay below r"))
}

/// Outcome of rebuilding a code from its own algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub params: ConstructionParams,
    pub algebra: CayleyTable,
    pub generated: BlockCode,
    pub missing: Vec<Codeword>,
}

impl Containment {
    pub fn contained(&self) -> bool {
        self.missing.is_empty()
    }

    /// Largest symbol appearing in the generated code.
    pub fn max_symbol(&self) -> usize {
        self.generated.words().iter().flat_map(|w| w.symbols()).copied().max().unwrap_or(0)
    }
}

/// Builds the algebra, reads its code at points `1..=q` and reports which
/// source words are absent.
pub fn roundtrip_check(c: &BlockCode) -> Result<Containment, BuildError> {
    let params = dimension(c)?;
    let algebra = build_algebra(c)?;
    let points = EvaluationMap::first_elements(c.length()).expect("q >= 1");
    let generated = generate_code(&algebra, &points).expect("points 1..=q are below r");
    let missing = c.words().iter().filter(|w| !generated.contains(w)).cloned().collect();
    Ok(Containment { params, algebra, generated, missing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_of_published_shapes() {
        let p = ConstructionParams::for_shape(7, 4, 3);
        assert_eq!((p.case, p.size, p.chain), (ConstructionCase::ShortWords, 9, 6));
        let p = ConstructionParams::for_shape(4, 5, 3);
        assert_eq!((p.case, p.size, p.chain), (ConstructionCase::LongWords, 9, 6));
        let p = ConstructionParams::for_shape(4, 5, 5);
        assert_eq!((p.size, p.chain), (11, 6));
    }

    #[test]
    fn toy_code_matrix() {
        // n = 3, q = 1, V = {1}: r = 3, c = 2
        let c = BlockCode::from_symbols(3, &[[1]]).unwrap();
        let m = build_matrix(&c).unwrap();
        assert_eq!(m.params().size, 3);
        assert_eq!(m.params().chain, 2);
        let rows: Vec<Vec<usize>> = m.table().rows().map(|r| r.to_vec()).collect();
        assert_eq!(rows, vec![vec![0, 0, 0], vec![1, 0, 0], vec![2, 1, 0]]);
        assert!(build_algebra(&c).is_ok());
    }

    #[test]
    fn inadmissible_code_is_refused() {
        let c = BlockCode::from_symbols(7, &[[1, 2, 1, 1]]).unwrap();
        assert!(matches!(build_matrix(&c), Err(BuildError::Inadmissible(_))));
        assert!(matches!(dimension(&c), Err(BuildError::Inadmissible(_))));
    }

    #[test]
    fn cut_codewords_of_small_algebra() {
        let t = CayleyTable::from_rows(&[[0, 0, 0, 0], [1, 0, 0, 1], [2, 1, 0, 2], [3, 3, 3, 0]])
            .unwrap();
        let e = EvaluationMap::new(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(cut_codeword(&t, 0, &e).unwrap(), Codeword::from([0, 0, 0, 0]));
        assert_eq!(cut_codeword(&t, 1, &e).unwrap(), Codeword::from([1, 0, 0, 1]));
        assert_eq!(
            cut_codeword(&t, 4, &e),
            Err(PointError::ElementOutOfRange { element: 4, size: 4 })
        );
        let bad = EvaluationMap::new(vec![0, 4]).unwrap();
        assert_eq!(cut_codeword(&t, 1, &bad), Err(PointError::PointOutOfRange { point: 4, size: 4 }));
        assert_eq!(EvaluationMap::new(vec![]), Err(PointError::NoPoints));
    }

    #[test]
    fn trivial_algebra_generates_zero_word() {
        let t = CayleyTable::trivial();
        let e = EvaluationMap::new(vec![0, 0, 0]).unwrap();
        let c = generate_code(&t, &e).unwrap();
        assert_eq!(c.words(), &[Codeword::from([0, 0, 0])]);
    }
}
