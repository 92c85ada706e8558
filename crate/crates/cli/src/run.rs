use std::fmt::Write as _;

use ncgb_core::coeff::Integers;
use ncgb_core::engine::{buchberger, gb_equivalent, monomial_basis, GBResult, Options, Stats};
use ncgb_core::modlift::gb_zmod;
use ncgb_core::{CoeffRing, DomainKind, Error, EuclideanCoeffs, FreeAlgebra, Poly, ResidueRing};
use serde_json::{json, Map, Value};

use crate::parse::{parse_poly_list, to_ring, Job, ParseError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Settings from the command line; they add to the job's own options.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub reduce: bool,
    pub tail_reduce: bool,
    pub stats: bool,
    pub monomials: Option<usize>,
    /// Contents of the equivalence target file.
    pub equiv: Option<String>,
    pub output: OutputFormat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunError {
    /// Malformed input or an unsatisfiable request: exit code 1.
    Input(String),
    /// Valid input asking for something not implemented: exit code 2.
    Unsupported(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::Unsupported(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            RunError::Input(m) | RunError::Unsupported(m) => m,
        }
    }
}

impl From<ParseError> for RunError {
    fn from(e: ParseError) -> Self {
        RunError::Input(e.to_string())
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::PrimePowerModulus(_) => RunError::Unsupported(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

/// Everything a run produces, already rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub basis: Vec<String>,
    pub flag: String,
    pub stats: Stats,
    pub monomials: Option<Vec<String>>,
    pub equivalent: Option<bool>,
    pub warnings: Vec<String>,
}

fn finish<R: CoeffRing>(
    job: &Job,
    alg: &FreeAlgebra<R>,
    res: GBResult<R::Elem>,
    monomials: Option<usize>,
    equiv: Option<&str>,
) -> Result<Report, RunError> {
    let equivalent = match equiv {
        None => None,
        Some(text) => {
            let src = job.ring.rational_algebra();
            let other: Vec<Poly<R>> = parse_poly_list(&job.ring, text)?.iter().map(|f| to_ring(&src, alg, f)).collect();
            Some(gb_equivalent(alg, &res.basis, &other, job.bound))
        }
    };
    let monomials = monomials.map(|d| monomial_basis(alg, &res.basis, d).iter().map(|w| alg.render_word(w)).collect());
    Ok(Report {
        basis: res.basis.iter().map(|g| alg.render(g)).collect(),
        flag: res.flag.to_string(),
        stats: res.stats,
        monomials,
        equivalent,
        warnings: res.warnings,
    })
}

fn run_euclidean<R: EuclideanCoeffs>(job: &Job, ring: R, opts: &Options, ro: &RunOptions) -> Result<Report, RunError> {
    let src = job.ring.rational_algebra();
    let alg = src.with_ring(ring);
    let gens: Vec<Poly<R>> = job.generators.iter().map(|f| to_ring(&src, &alg, f)).collect();
    let res = buchberger(&alg, &gens, job.bound, opts)?;
    finish(job, &alg, res, ro.monomials.or(job.options.monomial_basis_upto), ro.equiv.as_deref())
}

/// Execute a job.
pub fn run(job: &Job, ro: &RunOptions) -> Result<Report, RunError> {
    let opts = Options {
        reduce: ro.reduce || job.options.reduce,
        tail_reduce: ro.tail_reduce || job.options.tail_reduce,
        ..Options::default()
    };
    match job.ring.domain {
        DomainKind::Integers => run_euclidean(job, Integers, &opts, ro),
        DomainKind::Rationals => {
            let src = job.ring.rational_algebra();
            let res = buchberger(&src, &job.generators, job.bound, &opts)?;
            finish(job, &src, res, ro.monomials.or(job.options.monomial_basis_upto), ro.equiv.as_deref())
        }
        DomainKind::Residue(m) => {
            let src = job.ring.rational_algebra();
            let alg = src.with_ring(ResidueRing::new(m)?);
            let gens: Vec<Poly<ResidueRing>> = job.generators.iter().map(|f| to_ring(&src, &alg, f)).collect();
            let res = gb_zmod(&alg, &gens, job.bound)?;
            finish(job, &alg, res, ro.monomials.or(job.options.monomial_basis_upto), ro.equiv.as_deref())
        }
    }
}

/// Does the job or the command line ask for the stats block?
pub fn wants_stats(job: &Job, ro: &RunOptions) -> bool {
    ro.stats || job.options.stats
}

pub fn render_text(report: &Report, stats: bool) -> String {
    let mut s = String::new();
    for b in &report.basis {
        let _ = writeln!(s, "{b}");
    }
    let _ = writeln!(s, "flag: {}", report.flag);
    if let Some(m) = &report.monomials {
        let _ = writeln!(s, "monomials: {}", m.join(", "));
    }
    if stats {
        let _ = writeln!(s, "stats:");
        for (k, v) in report.stats.entries() {
            let _ = writeln!(s, "{k}={v}");
        }
        for (len, n) in &report.stats.insertions_by_length {
            let _ = writeln!(s, "insertions_length_{len}={n}");
        }
    }
    if let Some(e) = report.equivalent {
        let _ = writeln!(s, "equivalent: {e}");
    }
    s
}

pub fn render_json(report: &Report) -> String {
    let mut stats = Map::new();
    for (k, v) in report.stats.entries() {
        stats.insert(k.to_string(), json!(v));
    }
    let by_len: Map<String, Value> =
        report.stats.insertions_by_length.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    stats.insert("insertions_by_length".into(), Value::Object(by_len));
    let mut out = Map::new();
    out.insert("basis".into(), json!(report.basis));
    out.insert("flag".into(), json!(report.flag));
    out.insert("stats".into(), Value::Object(stats));
    if let Some(m) = &report.monomials {
        out.insert("monomials".into(), json!(m));
    }
    if let Some(e) = report.equivalent {
        out.insert("equivalent".into(), json!(e));
    }
    if !report.warnings.is_empty() {
        out.insert("warnings".into(), json!(report.warnings));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("serializable");
    s.push('\n');
    s
}

/// Parse, run and render; returns the exit code with stdout and stderr text.
pub fn execute(text: &str, ro: &RunOptions) -> (i32, String, String) {
    let job = match crate::parse::parse_job(text) {
        Ok(j) => j,
        Err(e) => return (1, String::new(), format!("error: {e}\n")),
    };
    match run(&job, ro) {
        Ok(report) => {
            let out = match ro.output {
                OutputFormat::Text => render_text(&report, wants_stats(&job, ro)),
                OutputFormat::Json => render_json(&report),
            };
            let err: String = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            (0, out, err)
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {}\n", e.message())),
    }
}
