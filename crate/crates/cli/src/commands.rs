//! Command dispatch. Exit codes: 0 the property holds, 1 it fails (with
//! witnesses), 2 the input or invocation is unusable.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use bckcode_core::{
    check_bci, check_bck, check_bck_alt, check_subset, commutative_holds, dimension,
    enumerate_closed_right_ideals_with_cap, generate_code, implicative_holds,
    positive_implicative_holds, prop26_candidate, validate_admissible, AssociatedMatrix,
    AxiomReport, BlockCode, CayleyTable, Codeword, ConstructionCase, ElementSubset, EvaluationMap,
    IdealError, IsoError, IsoSearch, PointError, DEFAULT_ENUMERATION_CAP,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::files::{
    default_label, parse_code, parse_table, serialize_code, serialize_table, ParseError, TableFile,
};
use crate::report::*;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bckcode",
    version,
    about = "Block codes and the BCK-algebras built from them"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a code file against the admissibility rules.
    Validate { code: PathBuf },
    /// Build the associated matrix of an admissible code.
    Build(BuildArgs),
    /// Check a table against an axiom system.
    Verify(VerifyArgs),
    /// Collect the cut codewords of every element.
    Generate {
        table: PathBuf,
        /// Comma-separated element indices, e.g. 1,2,3,4.
        #[arg(long)]
        points: String,
    },
    /// Validate, build, verify and regenerate a code, then check containment.
    Roundtrip { code: PathBuf },
    /// Check subsets for the closed right ideal conditions.
    Ideals(IdealsArgs),
    /// Search for an isomorphism fixing 0.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Largest table size searched.
        #[arg(long, default_value_t = 10)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub code: PathBuf,
    #[arg(long, value_enum, default_value_t = Emit::Matrix)]
    pub emit: Emit,
    /// Build even if the code is not admissible. The exit code then
    /// reports whether the result is a BCK-algebra.
    #[arg(long)]
    pub no_validate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// A table file of element indices.
    Matrix,
    /// A labelled multiplication table.
    Table,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub table: PathBuf,
    #[arg(long, value_enum, default_value_t = Axioms::Bck)]
    pub axioms: Axioms,
    /// Also report the commutative, implicative and positive implicative identities.
    #[arg(long)]
    pub properties: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axioms {
    Bci,
    Bck,
    BckAlt,
}

#[derive(Debug, Args)]
pub struct IdealsArgs {
    pub table: PathBuf,
    /// Comma-separated element indices.
    #[arg(long, conflicts_with_all = ["enumerate", "candidate"])]
    pub subset: Option<String>,
    /// List every closed right ideal.
    #[arg(long)]
    pub enumerate: bool,
    /// Largest subset size visited by --enumerate.
    #[arg(long, requires = "enumerate")]
    pub max_size: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP, requires = "enumerate")]
    pub cap: usize,
    /// Check {0, 1, r-m, ..., r-1} for a table built from m words.
    #[arg(long, value_name = "M", conflicts_with = "enumerate")]
    pub candidate: Option<usize>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    kind: &'static str,
    message: String,
    path: Option<String>,
    position: Option<(usize, usize)>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            message: message.into(),
            path: None,
            position: None,
        }
    }

    fn parse(path: &Path, e: ParseError) -> Self {
        Failure {
            kind: "parse",
            message: e.message,
            path: Some(path.display().to_string()),
            position: Some((e.line, e.column)),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = match &cli.command {
        Command::Validate { .. } => "validate",
        Command::Build(_) => "build",
        Command::Verify(_) => "verify",
        Command::Generate { .. } => "generate",
        Command::Roundtrip { .. } => "roundtrip",
        Command::Ideals(_) => "ideals",
        Command::Iso { .. } => "iso",
    };
    let result = match &cli.command {
        Command::Validate { code } => validate(code, cli.format),
        Command::Build(a) => build(a, cli.format),
        Command::Verify(a) => verify(a, cli.format),
        Command::Generate { table, points } => generate(table, points, cli.format),
        Command::Roundtrip { code } => roundtrip(code, cli.format),
        Command::Ideals(a) => ideals(a, cli.format),
        Command::Iso { a, b, cap } => iso(a, b, *cap, cli.format),
    };
    result.unwrap_or_else(|f| error_outcome(name, f, cli.format))
}

fn error_outcome(command: &'static str, f: Failure, format: Format) -> Outcome {
    let mut text = String::from("error: ");
    if let Some(p) = &f.path {
        let _ = write!(text, "{p}:");
        if let Some((l, c)) = f.position {
            let _ = write!(text, "{l}:{c}:");
        }
        text.push(' ');
    }
    let _ = writeln!(text, "{}", f.message);
    let stdout = match format {
        Format::Text => String::new(),
        Format::Json => json(&ErrorReport {
            command,
            error: ErrorOut {
                kind: f.kind,
                message: f.message,
                path: f.path,
                line: f.position.map(|p| p.0),
                column: f.position.map(|p| p.1),
            },
        }),
    };
    Outcome {
        code: EXIT_INPUT,
        stdout,
        stderr: text,
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("reports serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        kind: "io",
        message: e.to_string(),
        path: Some(path.display().to_string()),
        position: None,
    })
}

fn load_code(path: &Path) -> Result<BlockCode, Failure> {
    parse_code(&read(path)?).map_err(|e| Failure::parse(path, e))
}

fn load_table(path: &Path) -> Result<TableFile, Failure> {
    parse_table(&read(path)?).map_err(|e| Failure::parse(path, e))
}

fn parse_indices(flag: &str, list: &str) -> Result<Vec<usize>, Failure> {
    let items: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if items.is_empty() {
        return Err(Failure::usage(format!(
            "--{flag} needs at least one element index"
        )));
    }
    items
        .iter()
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Failure::usage(format!("--{flag}: `{s}` is not an element index")))
        })
        .collect()
}

fn exit(ok: bool) -> i32 {
    if ok {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn word_text(w: &Codeword) -> String {
    w.to_string()
}

fn tuple_text(t: &TableFile, xs: &[usize]) -> String {
    let names: Vec<String> = xs.iter().map(|&x| t.label(x)).collect();
    format!("({})", names.join(", "))
}

fn write_failures(out: &mut String, fs: &[RuleFailureOut]) {
    for f in fs {
        let _ = match f.position {
            Some(p) => writeln!(
                out,
                "  {} word {} position {}: {}",
                f.rule, f.word, p, f.description
            ),
            None => writeln!(out, "  {} word {}: {}", f.rule, f.word, f.description),
        };
    }
}

fn write_violations(out: &mut String, t: &TableFile, vs: &[ViolationOut]) {
    for v in vs {
        let _ = writeln!(
            out,
            "  {} [{}] at {}",
            v.axiom,
            v.statement,
            tuple_text(t, &v.witness)
        );
    }
}

fn validate(path: &Path, format: Format) -> Result<Outcome, Failure> {
    let code = load_code(path)?;
    let r = validate_admissible(&code);
    let doc = ValidateReport {
        command: "validate",
        n: code.alphabet_size(),
        q: code.length(),
        m: code.len(),
        admissible: r.admissible(),
        failures: failures(&r),
    };
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = format!("code: n={} q={} m={}\n", doc.n, doc.q, doc.m);
            for (i, w) in code.words().iter().enumerate() {
                let _ = writeln!(s, "  w_{} = {}", i + 1, word_text(w));
            }
            let _ = writeln!(
                s,
                "admissible: {}",
                if doc.admissible { "yes" } else { "no" }
            );
            write_failures(&mut s, &doc.failures);
            s
        }
    };
    Ok(Outcome {
        code: exit(doc.admissible),
        stdout,
        stderr: String::new(),
    })
}

fn axiom_report(t: &CayleyTable, axioms: Axioms) -> AxiomReport {
    match axioms {
        Axioms::Bci => check_bci(t),
        Axioms::Bck => check_bck(t),
        Axioms::BckAlt => check_bck_alt(t),
    }
}

/// Labelled grid: one header row, then `x | x∗y ...`.
fn labelled_grid(t: &TableFile) -> String {
    let n = t.table.size();
    let labels: Vec<String> = (0..n).map(|x| t.label(x)).collect();
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let pad = |s: &str| format!("{s:>width$}");
    let mut out = format!("{} |", pad("∗"));
    for l in &labels {
        let _ = write!(out, " {}", pad(l));
    }
    out.push('\n');
    for x in 0..n {
        let _ = write!(out, "{} |", pad(&labels[x]));
        for &p in t.table.row(x) {
            let _ = write!(out, " {}", pad(&labels[p]));
        }
        out.push('\n');
    }
    out
}

fn build(a: &BuildArgs, format: Format) -> Result<Outcome, Failure> {
    let code = load_code(&a.code)?;
    let validation = validate_admissible(&code);
    let emit = match a.emit {
        Emit::Matrix => "matrix",
        Emit::Table => "table",
    };
    let mut doc = BuildReport {
        command: "build",
        emit,
        admissible: validation.admissible(),
        failures: failures(&validation),
        matrix: None,
    };
    if !doc.admissible && !a.no_validate {
        let (stdout, stderr) = match format {
            Format::Json => (json(&doc), String::new()),
            Format::Text => {
                let mut s = String::from("code is not admissible; nothing built\n");
                write_failures(&mut s, &doc.failures);
                (String::new(), s)
            }
        };
        return Ok(Outcome {
            code: EXIT_FAILS,
            stdout,
            stderr,
        });
    }
    let m = AssociatedMatrix::from_code_unchecked(&code);
    let params = m.params();
    let file = TableFile::new(m.into_table());
    let report = check_bck(&file.table);
    let mx = MatrixOut {
        case: match params.case {
            ConstructionCase::ShortWords => "short-words",
            ConstructionCase::LongWords => "long-words",
        },
        size: params.size,
        chain: params.chain,
        rows: file.table.rows().map(|r| r.to_vec()).collect(),
        labels: (0..params.size).map(default_label).collect(),
        bck: report.verdict(),
        violations: violations(&report),
    };
    let ok = mx.bck;
    let (stdout, stderr) = match format {
        Format::Json => {
            doc.matrix = Some(mx);
            (json(&doc), String::new())
        }
        Format::Text => {
            let body = match a.emit {
                Emit::Matrix => serialize_table(&file),
                Emit::Table => labelled_grid(&file),
            };
            let mut err = String::new();
            if !doc.admissible {
                err.push_str("warning: code is not admissible\n");
                write_failures(&mut err, &doc.failures);
            }
            if !ok {
                let _ = writeln!(
                    err,
                    "table is not a BCK-algebra ({} violations)",
                    mx.violations.len()
                );
                write_violations(&mut err, &file, &mx.violations);
            }
            (body, err)
        }
    };
    Ok(Outcome {
        code: exit(ok),
        stdout,
        stderr,
    })
}

fn all_failures<const K: usize>(n: usize, holds: impl Fn([usize; K]) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = [0usize; K];
    loop {
        if !holds(t) {
            out.push(t.to_vec());
        }
        let mut i = K;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

fn property(witnesses: Vec<Vec<usize>>) -> PropertyOut {
    PropertyOut {
        holds: witnesses.is_empty(),
        witnesses,
    }
}

fn verify(a: &VerifyArgs, format: Format) -> Result<Outcome, Failure> {
    let file = load_table(&a.table)?;
    let t = &file.table;
    let report = axiom_report(t, a.axioms);
    let n = t.size();
    let properties = a.properties.then(|| PropertiesOut {
        commutative: property(all_failures(n, |[x, y]| commutative_holds(t, x, y))),
        implicative: property(all_failures(n, |[x, y]| implicative_holds(t, x, y))),
        positive_implicative: property(all_failures(n, |[x, y, z]| {
            positive_implicative_holds(t, x, y, z)
        })),
    });
    let doc = VerifyReport {
        command: "verify",
        axioms: match a.axioms {
            Axioms::Bci => "bci",
            Axioms::Bck => "bck",
            Axioms::BckAlt => "bck-alt",
        },
        size: n,
        holds: report.verdict(),
        violations: violations(&report),
        properties,
    };
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = format!(
                "{} axioms on {} elements: {}\n",
                doc.axioms,
                n,
                if doc.holds {
                    "hold".to_string()
                } else {
                    format!("fail ({} violations)", doc.violations.len())
                }
            );
            write_violations(&mut s, &file, &doc.violations);
            if let Some(p) = &doc.properties {
                for (name, prop) in [
                    ("commutative", &p.commutative),
                    ("implicative", &p.implicative),
                    ("positive implicative", &p.positive_implicative),
                ] {
                    let _ = writeln!(s, "{name}: {}", prop.holds);
                    for w in &prop.witnesses {
                        let _ = writeln!(s, "  fails at {}", tuple_text(&file, w));
                    }
                }
            }
            s
        }
    };
    Ok(Outcome {
        code: exit(doc.holds),
        stdout,
        stderr: String::new(),
    })
}

fn point_failure(e: PointError) -> Failure {
    Failure::usage(e.to_string())
}

fn generate(path: &Path, points: &str, format: Format) -> Result<Outcome, Failure> {
    let file = load_table(path)?;
    let points = parse_indices("points", points)?;
    let e = EvaluationMap::new(points.clone()).map_err(point_failure)?;
    let code = generate_code(&file.table, &e).map_err(point_failure)?;
    let words: Vec<Vec<usize>> = code.words().iter().map(|w| w.symbols().to_vec()).collect();
    let doc = GenerateReport {
        command: "generate",
        points,
        n: code.alphabet_size(),
        q: code.length(),
        m: code.len(),
        max_symbol: words.iter().flatten().copied().max().unwrap_or(0),
        words,
    };
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => annotated_code(&code),
    };
    Ok(Outcome {
        code: EXIT_HOLDS,
        stdout,
        stderr: String::new(),
    })
}

/// A code file whose rows carry their digit-string form as a comment.
fn annotated_code(c: &BlockCode) -> String {
    let plain = serialize_code(c);
    let mut lines = plain.lines();
    let mut out = format!("{}\n", lines.next().unwrap_or_default());
    for (line, w) in lines.zip(c.words()) {
        let _ = writeln!(out, "{line}  # {}", word_text(w));
    }
    out
}

/// Remarks on inputs whose published presentation disagrees with the
/// construction.
fn known_notes(code: &BlockCode) -> Vec<String> {
    let words: Vec<String> = code.words().iter().map(word_text).collect();
    let mut notes = Vec::new();
    if code.alphabet_size() == 4 && words == ["21111", "32111", "33111"] {
        notes.push(
            "A published listing of this example gives 32211 among the generated words and a \
             matching multiplication table (a_7*a_3 = a_2). The associated matrix places 3 2 1 1 1 \
             in row 7, so the generated word is 32111; 32211 is an erratum."
                .to_string(),
        );
    }
    if code.alphabet_size() == 4 && words == ["11111", "21111", "31111", "32111", "33111"] {
        notes.push(
            "This code is often shown with its 11-element matrix as an example of the \
             construction, but 31111 breaks R3 and the resulting table violates axioms (1) and \
             (2) at (a_8, θ, a_2) and (a_8, a_2). Use `build --no-validate` to inspect it."
                .to_string(),
        );
    }
    notes
}

fn roundtrip(path: &Path, format: Format) -> Result<Outcome, Failure> {
    let code = load_code(path)?;
    let validation = validate_admissible(&code);
    let mut doc = RoundtripReport {
        command: "roundtrip",
        stages: vec![StageOut {
            stage: "validate",
            passed: validation.admissible(),
        }],
        failed_stage: None,
        failures: failures(&validation),
        violations: Vec::new(),
        size: None,
        points: Vec::new(),
        generated: Vec::new(),
        missing: Vec::new(),
        max_symbol: None,
        notes: known_notes(&code),
    };
    let mut labels = None;
    'stages: {
        if !validation.admissible() {
            doc.failed_stage = Some("validate");
            break 'stages;
        }
        let params = dimension(&code).expect("admissible");
        let t = AssociatedMatrix::from_code_unchecked(&code).into_table();
        doc.size = Some(params.size);
        doc.stages.push(StageOut {
            stage: "build",
            passed: true,
        });
        let report = check_bck(&t);
        doc.violations = violations(&report);
        doc.stages.push(StageOut {
            stage: "verify",
            passed: report.verdict(),
        });
        labels = Some(TableFile::new(t.clone()));
        if !report.verdict() {
            doc.failed_stage = Some("verify");
            break 'stages;
        }
        let e = EvaluationMap::first_elements(code.length()).expect("q >= 1");
        let generated = generate_code(&t, &e).expect("points 1..=q lie below r");
        doc.points = e.points().to_vec();
        doc.generated = generated
            .words()
            .iter()
            .map(|w| w.symbols().to_vec())
            .collect();
        doc.max_symbol = doc.generated.iter().flatten().copied().max();
        doc.stages.push(StageOut {
            stage: "generate",
            passed: true,
        });
        doc.missing = code
            .words()
            .iter()
            .filter(|w| !generated.contains(w))
            .map(|w| w.symbols().to_vec())
            .collect();
        let contained = doc.missing.is_empty();
        doc.stages.push(StageOut {
            stage: "containment",
            passed: contained,
        });
        if !contained {
            doc.failed_stage = Some("containment");
        }
    }
    let ok = doc.failed_stage.is_none();
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = String::new();
            for st in &doc.stages {
                let _ = writeln!(
                    s,
                    "{:<12} {}",
                    st.stage,
                    if st.passed { "pass" } else { "FAIL" }
                );
            }
            write_failures(&mut s, &doc.failures);
            if let Some(t) = &labels {
                write_violations(&mut s, t, &doc.violations);
            }
            if let Some(r) = doc.size {
                let _ = writeln!(s, "algebra size: {r}");
            }
            if !doc.generated.is_empty() {
                let show =
                    |w: &Vec<usize>| word_text(&Codeword::new(w.clone()).expect("non-empty"));
                let gen: Vec<String> = doc.generated.iter().map(show).collect();
                let _ = writeln!(s, "generated ({} words): {}", gen.len(), gen.join(" "));
                let _ = writeln!(s, "max symbol: {}", doc.max_symbol.unwrap_or(0));
                let missing: Vec<String> = doc.missing.iter().map(show).collect();
                let _ = writeln!(
                    s,
                    "source words missing: {}",
                    if missing.is_empty() {
                        "none".to_string()
                    } else {
                        missing.join(" ")
                    }
                );
            }
            let _ = writeln!(
                s,
                "result: {}",
                match doc.failed_stage {
                    None => "pass".to_string(),
                    Some(st) => format!("failed at {st}"),
                }
            );
            for (i, n) in doc.notes.iter().enumerate() {
                let _ = writeln!(s, "[{}] {n}", i + 1);
            }
            s
        }
    };
    Ok(Outcome {
        code: exit(ok),
        stdout,
        stderr: String::new(),
    })
}

const CANDIDATE_NOTE: &str = "Open question: this is the literal index reading {θ, a_1, a_(r-m), ..., a_(r-1)} \
of the claimed closed right ideal. The intended set is ambiguous, so the verdict below is the table's \
answer for this reading only.";

fn ideal_failure(e: IdealError) -> Failure {
    match e {
        IdealError::CapExceeded { .. } => Failure {
            kind: "cap",
            message: e.to_string(),
            path: None,
            position: None,
        },
        other => Failure::usage(other.to_string()),
    }
}

fn ideals(a: &IdealsArgs, format: Format) -> Result<Outcome, Failure> {
    let file = load_table(&a.table)?;
    let t = &file.table;
    let n = t.size();
    let mut doc = IdealsReport {
        command: "ideals",
        mode: "subset",
        size: n,
        subset: None,
        ideals: None,
        max_size: None,
        note: None,
    };
    let code;
    if let Some(list) = &a.subset {
        let members = parse_indices("subset", list)?;
        let s = ElementSubset::new(n, members).map_err(ideal_failure)?;
        let r = check_subset(t, &s);
        code = exit(r.is_closed_ideal());
        doc.subset = Some(SubsetOut::new(s.members(), &r));
    } else if let Some(m) = a.candidate {
        let (s, r) = prop26_candidate(t, m).map_err(ideal_failure)?;
        code = exit(r.is_closed_ideal());
        doc.mode = "candidate";
        doc.note = Some(CANDIDATE_NOTE.to_string());
        doc.subset = Some(SubsetOut::new(s.members(), &r));
    } else if !a.enumerate {
        return Err(Failure::usage(
            "choose one of --subset, --enumerate or --candidate",
        ));
    } else {
        let found =
            enumerate_closed_right_ideals_with_cap(t, a.max_size, a.cap).map_err(ideal_failure)?;
        code = EXIT_HOLDS;
        doc.mode = "enumerate";
        doc.max_size = a.max_size;
        doc.ideals = Some(found.iter().map(|s| s.members()).collect());
    }
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut s = String::new();
            if let Some(note) = &doc.note {
                let _ = writeln!(s, "{note}");
            }
            if let Some(sub) = &doc.subset {
                let names: Vec<String> = sub.members.iter().map(|&x| file.label(x)).collect();
                let _ = writeln!(s, "subset {{{}}}", names.join(", "));
                let _ = writeln!(s, "contains θ:   {}", sub.contains_zero);
                let _ = writeln!(s, "right ideal:  {}", sub.right_ideal);
                let _ = writeln!(s, "subalgebra:   {}", sub.subalgebra);
                let _ = writeln!(s, "closed ideal: {}", sub.closed_ideal);
                for w in &sub.witnesses {
                    if w.clause == "contains-zero" {
                        let _ = writeln!(s, "  {}: θ is missing", w.clause);
                    } else {
                        let _ = writeln!(
                            s,
                            "  {}: {} ∗ {} = {} is outside the subset",
                            w.clause,
                            file.label(w.x),
                            file.label(w.y),
                            file.label(w.product)
                        );
                    }
                }
            }
            if let Some(list) = &doc.ideals {
                let _ = writeln!(s, "closed right ideals: {}", list.len());
                for i in list {
                    let _ = writeln!(
                        s,
                        "  {{{}}}",
                        i.iter()
                            .map(|&x| file.label(x))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
            }
            s
        }
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn iso(a: &Path, b: &Path, cap: usize, format: Format) -> Result<Outcome, Failure> {
    let ta = load_table(a)?;
    let tb = load_table(b)?;
    let found = IsoSearch::with_cap(cap)
        .find(&ta.table, &tb.table)
        .map_err(|e: IsoError| Failure {
            kind: "cap",
            message: format!("{e}; raise --cap to search anyway"),
            path: None,
            position: None,
        })?;
    if let Some(p) = &found {
        assert!(
            p.is_isomorphism(&ta.table, &tb.table),
            "search returned a non-isomorphism"
        );
    }
    let doc = IsoReport::new([ta.table.size(), tb.table.size()], cap, found.as_ref());
    let stdout = match format {
        Format::Json => json(&doc),
        Format::Text => match &doc.permutation {
            Some(p) => {
                let mut s = String::from("isomorphic\n");
                for (x, &y) in p.iter().enumerate() {
                    let _ = writeln!(s, "  {} -> {}", ta.label(x), tb.label(y));
                }
                s
            }
            None => "not isomorphic\n".to_string(),
        },
    };
    Ok(Outcome {
        code: exit(doc.isomorphic),
        stdout,
        stderr: String::new(),
    })
}
