//! Right ideals, subalgebras and closed ideals of finite algebras.

use alloc::vec::Vec;
use core::fmt;

use crate::table::{CayleyTable, Element, ZERO};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    MemberOutOfRange { member: Element, size: usize },
    /// Exhaustive enumeration would visit too many subsets.
    CapExceeded { size: usize, cap: usize },
    /// The candidate set needs fewer words than elements.
    TooManyWords { words: usize, size: usize },
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::MemberOutOfRange { member, size } => {
                write!(f, "subset member {member} is not an element of a {size}-element algebra")
            }
            IdealError::CapExceeded { size, cap } => write!(
                f,
                "enumeration refused: {size} elements exceed the cap of {cap}; bound the subset size to search anyway"
            ),
            IdealError::TooManyWords { words, size } => {
                write!(f, "{words} words do not fit in a {size}-element algebra")
            }
        }
    }
}

impl core::error::Error for IdealError {}

/// A subset of `0..size`, stored as a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    mask: Vec<bool>,
}

impl ElementSubset {
    pub fn new(size: usize, members: impl IntoIterator<Item = Element>) -> Result<Self, IdealError> {
        let mut mask = alloc::vec![false; size];
        for m in members {
            if m >= size {
                return Err(IdealError::MemberOutOfRange { member: m, size });
            }
            mask[m] = true;
        }
        Ok(ElementSubset { mask })
    }

    pub fn full(size: usize) -> Self {
        ElementSubset { mask: alloc::vec![true; size] }
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<Element> {
        (0..self.mask.len()).filter(|&x| self.mask[x]).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Size of the ambient algebra.
    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn image(&self, perm: &[Element]) -> ElementSubset {
        let mut mask = alloc::vec![false; self.mask.len()];
        for x in self.members() {
            mask[perm[x]] = true;
        }
        ElementSubset { mask }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealClause {
    /// `θ ∈ I`
    ContainsZero,
    /// `x ∈ I, y ∈ X ⇒ x∗y ∈ I`
    RightAbsorbing,
    /// `x, y ∈ I ⇒ x∗y ∈ I`
    Closed,
}

impl IdealClause {
    pub fn tag(self) -> &'static str {
        match self {
            IdealClause::ContainsZero => "contains-zero",
            IdealClause::RightAbsorbing => "right-ideal",
            IdealClause::Closed => "subalgebra",
        }
    }
}

/// `(x, y, x∗y)` with `x∗y` outside the subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IdealWitness {
    pub clause: IdealClause,
    pub x: Element,
    pub y: Element,
    pub product: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub contains_zero: bool,
    pub right_ideal: bool,
    pub subalgebra: bool,
    pub witnesses: Vec<IdealWitness>,
}

impl IdealReport {
    pub fn is_closed_ideal(&self) -> bool {
        self.right_ideal && self.subalgebra && self.contains_zero
    }

    pub fn first_witness(&self, clause: IdealClause) -> Option<&IdealWitness> {
        self.witnesses.iter().find(|w| w.clause == clause)
    }
}

/// Checks the right-ideal and subalgebra conditions, listing every failing
/// product. A missing `θ` is reported with the witness `(θ, θ, θ)`.
pub fn check_subset(t: &CayleyTable, s: &ElementSubset) -> IdealReport {
    let n = t.size();
    debug_assert_eq!(s.universe(), n);
    let mut witnesses = Vec::new();
    let contains_zero = s.contains(ZERO);
    if !contains_zero {
        witnesses.push(IdealWitness {
            clause: IdealClause::ContainsZero,
            x: ZERO,
            y: ZERO,
            product: ZERO,
        });
    }
    let mut absorbing = true;
    let mut closed = true;
    for x in s.members() {
        for y in 0..n {
            let p = t.op(x, y);
            if s.contains(p) {
                continue;
            }
            absorbing = false;
            witnesses.push(IdealWitness { clause: IdealClause::RightAbsorbing, x, y, product: p });
            if s.contains(y) {
                closed = false;
                witnesses.push(IdealWitness { clause: IdealClause::Closed, x, y, product: p });
            }
        }
    }
    IdealReport {
        contains_zero,
        right_ideal: contains_zero && absorbing,
        subalgebra: contains_zero && closed,
        witnesses,
    }
}

fn is_closed_right_ideal(t: &CayleyTable, s: &ElementSubset) -> bool {
    // right absorption implies closure under products of members
    s.contains(ZERO) && s.members().iter().all(|&x| t.row(x).iter().all(|&p| s.contains(p)))
}

pub const DEFAULT_ENUMERATION_CAP: usize = 20;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Every closed right ideal of `t`, ordered by size and then
/// lexicographically by members. `max_size` limits the subset sizes visited.
///
/// Tables larger than `cap` are refused unless `max_size` keeps the number
/// of visited subsets within `2^(cap-1)`.
pub fn enumerate_closed_right_ideals_with_cap(
    t: &CayleyTable,
    max_size: Option<usize>,
    cap: usize,
) -> Result<Vec<ElementSubset>, IdealError> {
    let n = t.size();
    let limit = max_size.unwrap_or(n).min(n);
    if n > cap {
        let budget = 1u128 << (cap.saturating_sub(1)).min(100);
        let visited: u128 = (1..=limit).map(|k| binomial(n - 1, k - 1)).sum();
        if max_size.is_none() || visited > budget {
            return Err(IdealError::CapExceeded { size: n, cap });
        }
    }
    let mut out = Vec::new();
    for k in 1..=limit {
        // subsets {0} ∪ C with C a (k-1)-combination of 1..n, in lex order
        let mut combo: Vec<Element> = (1..k).collect();
        loop {
            let s = ElementSubset::new(n, core::iter::once(ZERO).chain(combo.iter().copied()))
                .expect("members below n");
            if is_closed_right_ideal(t, &s) {
                out.push(s);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(out)
}

/// [`enumerate_closed_right_ideals_with_cap`] with the default cap of 20.
pub fn enumerate_closed_right_ideals(
    t: &CayleyTable,
    max_size: Option<usize>,
) -> Result<Vec<ElementSubset>, IdealError> {
    enumerate_closed_right_ideals_with_cap(t, max_size, DEFAULT_ENUMERATION_CAP)
}

/// Advances an increasing combination drawn from `1..n`.
fn next_combination(combo: &mut [Element], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The index set `{0, 1, r-m, …, r-1}` (θ, the first chain element and the
/// word rows) checked as a closed right ideal. The verdict is whatever the
/// table says; no particular outcome is presumed.
pub fn prop26_candidate(
    t: &CayleyTable,
    m: usize,
) -> Result<(ElementSubset, IdealReport), IdealError> {
    let r = t.size();
    if m == 0 || m >= r {
        return Err(IdealError::TooManyWords { words: m, size: r });
    }
    let members = [ZERO, 1].into_iter().chain(r - m..r);
    let s = ElementSubset::new(r, members)?;
    let report = check_subset(t, &s);
    Ok((s, report))
}
