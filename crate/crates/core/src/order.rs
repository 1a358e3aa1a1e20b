//! The relation `x ≤ y ⇔ x∗y = θ`.

use alloc::vec::Vec;

use crate::table::{CayleyTable, Element, ZERO};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    size: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|x| self.leq(x, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.size;
        (0..n).all(|x| (x + 1..n).all(|y| !(self.leq(x, y) && self.leq(y, x))))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                if (0..n).any(|z| self.leq(y, z) && !self.leq(x, z)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// All pairs `(x, y)` with `x ≤ y`, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        let n = self.size;
        (0..n)
            .flat_map(move |x| (0..n).map(move |y| (x, y)))
            .filter(move |&(x, y)| self.leq(x, y))
    }
}

pub fn partial_order(t: &CayleyTable) -> OrderRelation {
    OrderRelation { size: t.size(), leq: t.entries().iter().map(|&e| e == ZERO).collect() }
}
