//! Finite BCK-algebras and the n-ary block codes they generate.
//!
//! The crate covers both directions of the correspondence:
//!
//! - [`construct::build_algebra`] turns an admissible block code into a
//!   lower-triangular Cayley table whose multiplication is a BCK-algebra;
//! - [`construct::generate_code`] reads a block code back out of any finite
//!   algebra through its cut functions.
//!
//! Everything else is exhaustive checking over small Cayley tables: the
//! BCI/BCK axioms ([`axioms`]), the induced order ([`order`]), ideals
//! ([`ideals`]) and isomorphism ([`iso`]).
//!
//! Elements are plain indices `0..r`; index `0` is the distinguished zero.
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod axioms;
pub mod code;
pub mod construct;
pub mod ideals;
pub mod iso;
pub mod order;
pub mod table;

pub use axioms::{
    check_bci, check_bck, check_bck_alt, commutative_holds, implicative_holds, is_commutative,
    is_implicative, is_positive_implicative, positive_implicative_holds, Axiom, AxiomReport,
    Violation, Witness,
};
pub use code::{
    lex_compare, sort_ascending, validate_admissible, Alphabet, BlockCode, CodeError, Codeword,
    Rule, RuleFailure, ValidationReport,
};
pub use construct::{
    build_algebra, build_matrix, cut_codeword, dimension, generate_code, roundtrip_check,
    AssociatedMatrix, BuildError, ConstructionCase, ConstructionParams, Containment,
    EvaluationMap, PointError,
};
pub use ideals::{
    check_subset, enumerate_closed_right_ideals, enumerate_closed_right_ideals_with_cap,
    prop26_candidate, ElementSubset, IdealClause, IdealError, IdealReport, IdealWitness,
    DEFAULT_ENUMERATION_CAP,
};
pub use iso::{are_isomorphic, IsoError, IsoSearch, Permutation};
pub use order::{partial_order, OrderRelation};
pub use table::{CayleyTable, Element, TableError, ZERO};
