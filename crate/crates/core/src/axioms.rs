//! Exhaustive BCI/BCK axiom checking and the optional BCK identities.
//!
//! The axiom checkers scan every tuple and report every failing one. The
//! property predicates (`is_commutative` and friends) stop at the first
//! failure in lexicographic order and return it.

use alloc::vec::Vec;
use core::fmt;

use crate::table::{CayleyTable, Element, ZERO};

/// The quantified conditions a table can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `((x∗y)∗(x∗z))∗(z∗y) = θ`
    Bci1,
    /// `(x∗(x∗y))∗y = θ`
    Bci2,
    /// `x∗x = θ`
    Bci3,
    /// `x∗y = θ` and `y∗x = θ` imply `x = y`
    Bci4,
    /// `θ∗x = θ`
    Bck5,
    /// Alternative axiomatization, condition 1; same identity as [`Axiom::Bci1`].
    Alt1,
    /// `x∗(θ∗y) = x`
    Alt2,
    /// Alternative axiomatization, condition 3; antisymmetry.
    Alt3,
}

impl Axiom {
    pub const BCI: [Axiom; 4] = [Axiom::Bci1, Axiom::Bci2, Axiom::Bci3, Axiom::Bci4];

    /// Stable machine-readable tag.
    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Bci1 => "bci-1",
            Axiom::Bci2 => "bci-2",
            Axiom::Bci3 => "bci-3",
            Axiom::Bci4 => "bci-4",
            Axiom::Bck5 => "bck-5",
            Axiom::Alt1 => "alt-1",
            Axiom::Alt2 => "alt-2",
            Axiom::Alt3 => "alt-3",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::Bci1 | Axiom::Alt1 => "((x*y)*(x*z))*(z*y) = 0",
            Axiom::Bci2 => "(x*(x*y))*y = 0",
            Axiom::Bci3 => "x*x = 0",
            Axiom::Bci4 | Axiom::Alt3 => "x*y = 0 and y*x = 0 imply x = y",
            Axiom::Bck5 => "0*x = 0",
            Axiom::Alt2 => "x*(0*y) = x",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Axiom::Bci1 | Axiom::Alt1 => 3,
            Axiom::Bci2 | Axiom::Bci4 | Axiom::Alt2 | Axiom::Alt3 => 2,
            Axiom::Bci3 | Axiom::Bck5 => 1,
        }
    }

    /// Whether the axiom holds at one assignment of its variables.
    ///
    /// `w` must have exactly [`Axiom::arity`] entries, all in range.
    pub fn holds_at(self, t: &CayleyTable, w: &[Element]) -> bool {
        debug_assert_eq!(w.len(), self.arity());
        let op = |a, b| t.op(a, b);
        match self {
            Axiom::Bci1 | Axiom::Alt1 => {
                let (x, y, z) = (w[0], w[1], w[2]);
                op(op(op(x, y), op(x, z)), op(z, y)) == ZERO
            }
            Axiom::Bci2 => op(op(w[0], op(w[0], w[1])), w[1]) == ZERO,
            Axiom::Bci3 => op(w[0], w[0]) == ZERO,
            Axiom::Bci4 | Axiom::Alt3 => {
                let (x, y) = (w[0], w[1]);
                x == y || op(x, y) != ZERO || op(y, x) != ZERO
            }
            Axiom::Bck5 => op(ZERO, w[0]) == ZERO,
            Axiom::Alt2 => op(w[0], op(ZERO, w[1])) == w[0],
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An assignment of one to three variables that falsifies an axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    One(Element),
    Two(Element, Element),
    Three(Element, Element, Element),
}

impl Witness {
    pub fn elements(&self) -> Vec<Element> {
        match *self {
            Witness::One(x) => alloc::vec![x],
            Witness::Two(x, y) => alloc::vec![x, y],
            Witness::Three(x, y, z) => alloc::vec![x, y, z],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl Violation {
    /// Re-evaluates the witness; `true` means the violation is genuine.
    pub fn reproduces(&self, t: &CayleyTable) -> bool {
        let w = self.witness.elements();
        w.len() == self.axiom.arity()
            && w.iter().all(|&e| t.contains(e))
            && !self.axiom.holds_at(t, &w)
    }
}

/// Verdict of an axiom check together with every failing assignment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn verdict(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violations_of(&self, axiom: Axiom) -> impl Iterator<Item = &Violation> + '_ {
        self.violations.iter().filter(move |v| v.axiom == axiom)
    }

    /// Distinct axioms that failed, in declaration order.
    pub fn failed_axioms(&self) -> Vec<Axiom> {
        let mut out: Vec<Axiom> = self.violations.iter().map(|v| v.axiom).collect();
        out.sort();
        out.dedup();
        out
    }

    fn push(&mut self, axiom: Axiom, witness: Witness) {
        self.violations.push(Violation { axiom, witness });
    }

    fn extend(&mut self, other: AxiomReport) {
        self.violations.extend(other.violations);
    }
}

fn scan(t: &CayleyTable, axiom: Axiom, report: &mut AxiomReport) {
    let n = t.size();
    match axiom.arity() {
        1 => {
            for x in 0..n {
                if !axiom.holds_at(t, &[x]) {
                    report.push(axiom, Witness::One(x));
                }
            }
        }
        2 => {
            for x in 0..n {
                // antisymmetry is symmetric in (x, y): report each pair once
                let start = if matches!(axiom, Axiom::Bci4 | Axiom::Alt3) { x + 1 } else { 0 };
                for y in start..n {
                    if !axiom.holds_at(t, &[x, y]) {
                        report.push(axiom, Witness::Two(x, y));
                    }
                }
            }
        }
        _ => {
            for x in 0..n {
                for y in 0..n {
                    let xy = t.op(x, y);
                    for z in 0..n {
                        if t.op(t.op(xy, t.op(x, z)), t.op(z, y)) != ZERO {
                            report.push(axiom, Witness::Three(x, y, z));
                        }
                    }
                }
            }
        }
    }
}

/// Checks BCI axioms (1)–(4) over every tuple.
pub fn check_bci(t: &CayleyTable) -> AxiomReport {
    let mut report = AxiomReport::default();
    for axiom in Axiom::BCI {
        scan(t, axiom, &mut report);
    }
    report
}

/// BCI axioms plus `θ∗x = θ`.
pub fn check_bck(t: &CayleyTable) -> AxiomReport {
    let mut report = check_bci(t);
    let mut five = AxiomReport::default();
    scan(t, Axiom::Bck5, &mut five);
    report.extend(five);
    report
}

/// The three-condition characterization of BCK-algebras.
pub fn check_bck_alt(t: &CayleyTable) -> AxiomReport {
    let mut report = AxiomReport::default();
    for axiom in [Axiom::Alt1, Axiom::Alt2, Axiom::Alt3] {
        scan(t, axiom, &mut report);
    }
    report
}

/// `x∗(x∗y) = y∗(y∗x)` at one pair.
pub fn commutative_holds(t: &CayleyTable, x: Element, y: Element) -> bool {
    t.op(x, t.op(x, y)) == t.op(y, t.op(y, x))
}

/// `x∗(y∗x) = x` at one pair.
pub fn implicative_holds(t: &CayleyTable, x: Element, y: Element) -> bool {
    t.op(x, t.op(y, x)) == x
}

/// `(x∗y)∗z = (x∗z)∗(y∗z)` at one triple.
pub fn positive_implicative_holds(t: &CayleyTable, x: Element, y: Element, z: Element) -> bool {
    t.op(t.op(x, y), z) == t.op(t.op(x, z), t.op(y, z))
}

fn first_failing_pair(
    t: &CayleyTable,
    holds: impl Fn(&CayleyTable, Element, Element) -> bool,
) -> Option<(Element, Element)> {
    let n = t.size();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| !holds(t, x, y))
}

/// `None` if the table is commutative, otherwise the lexicographically
/// smallest failing pair. Meaningful for BCK tables.
pub fn is_commutative(t: &CayleyTable) -> Option<(Element, Element)> {
    first_failing_pair(t, commutative_holds)
}

pub fn is_implicative(t: &CayleyTable) -> Option<(Element, Element)> {
    first_failing_pair(t, implicative_holds)
}

pub fn is_positive_implicative(t: &CayleyTable) -> Option<(Element, Element, Element)> {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !positive_implicative_holds(t, x, y, z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}
