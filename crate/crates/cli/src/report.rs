//! Report documents. Each command emits exactly one of these; the JSON
//! field names are a stable interface.

use bckcode_core::{AxiomReport, IdealReport, Permutation, RuleFailure, ValidationReport};
use serde::Serialize;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RuleFailureOut {
    pub rule: &'static str,
    pub description: &'static str,
    pub word: usize,
    pub position: Option<usize>,
}

impl From<&RuleFailure> for RuleFailureOut {
    fn from(f: &RuleFailure) -> Self {
        RuleFailureOut {
            rule: f.rule.tag(),
            description: f.rule.description(),
            word: f.word,
            position: f.position,
        }
    }
}

pub fn failures(r: &ValidationReport) -> Vec<RuleFailureOut> {
    r.failures.iter().map(RuleFailureOut::from).collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ViolationOut {
    pub axiom: &'static str,
    pub statement: &'static str,
    pub witness: Vec<usize>,
}

pub fn violations(r: &AxiomReport) -> Vec<ViolationOut> {
    r.violations()
        .iter()
        .map(|v| ViolationOut {
            axiom: v.axiom.tag(),
            statement: v.axiom.statement(),
            witness: v.witness.elements(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ValidateReport {
    pub command: &'static str,
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub admissible: bool,
    pub failures: Vec<RuleFailureOut>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BuildReport {
    pub command: &'static str,
    pub emit: &'static str,
    pub admissible: bool,
    pub failures: Vec<RuleFailureOut>,
    /// Absent when validation stopped the build.
    pub matrix: Option<MatrixOut>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct MatrixOut {
    pub case: &'static str,
    pub size: usize,
    pub chain: usize,
    pub rows: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    pub bck: bool,
    pub violations: Vec<ViolationOut>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PropertyOut {
    pub holds: bool,
    /// Every failing tuple, in lexicographic order.
    pub witnesses: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct PropertiesOut {
    pub commutative: PropertyOut,
    pub implicative: PropertyOut,
    pub positive_implicative: PropertyOut,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub command: &'static str,
    pub axioms: &'static str,
    pub size: usize,
    pub holds: bool,
    pub violations: Vec<ViolationOut>,
    pub properties: Option<PropertiesOut>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GenerateReport {
    pub command: &'static str,
    pub points: Vec<usize>,
    pub n: usize,
    pub q: usize,
    pub m: usize,
    pub words: Vec<Vec<usize>>,
    pub max_symbol: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StageOut {
    pub stage: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RoundtripReport {
    pub command: &'static str,
    pub stages: Vec<StageOut>,
    pub failed_stage: Option<&'static str>,
    pub failures: Vec<RuleFailureOut>,
    pub violations: Vec<ViolationOut>,
    pub size: Option<usize>,
    pub points: Vec<usize>,
    pub generated: Vec<Vec<usize>>,
    pub missing: Vec<Vec<usize>>,
    pub max_symbol: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealWitnessOut {
    pub clause: &'static str,
    pub x: usize,
    pub y: usize,
    pub product: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SubsetOut {
    pub members: Vec<usize>,
    pub contains_zero: bool,
    pub right_ideal: bool,
    pub subalgebra: bool,
    pub closed_ideal: bool,
    pub witnesses: Vec<IdealWitnessOut>,
}

impl SubsetOut {
    pub fn new(members: Vec<usize>, r: &IdealReport) -> Self {
        SubsetOut {
            members,
            contains_zero: r.contains_zero,
            right_ideal: r.right_ideal,
            subalgebra: r.subalgebra,
            closed_ideal: r.is_closed_ideal(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| IdealWitnessOut {
                    clause: w.clause.tag(),
                    x: w.x,
                    y: w.y,
                    product: w.product,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdealsReport {
    pub command: &'static str,
    pub mode: &'static str,
    pub size: usize,
    /// `subset` and `candidate` modes.
    pub subset: Option<SubsetOut>,
    /// `enumerate` mode.
    pub ideals: Option<Vec<Vec<usize>>>,
    pub max_size: Option<usize>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IsoReport {
    pub command: &'static str,
    pub sizes: [usize; 2],
    pub cap: usize,
    pub isomorphic: bool,
    /// `permutation[x]` is the image of `x`.
    pub permutation: Option<Vec<usize>>,
}

impl IsoReport {
    pub fn new(sizes: [usize; 2], cap: usize, p: Option<&Permutation>) -> Self {
        IsoReport {
            command: "iso",
            sizes,
            cap,
            isomorphic: p.is_some(),
            permutation: p.map(|p| p.images().to_vec()),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ErrorOut {
    pub kind: &'static str,
    pub message: String,
    pub path: Option<String>,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ErrorReport {
    pub command: &'static str,
    pub error: ErrorOut,
}
