//! The commands behind the `polyprod` binary. Each returns a typed report
//! that renders either as text or as JSON; the binary only parses flags and
//! reads files.

use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::decomposition::{
    decompose, hochster_cross_check, minimal_nonfaces_of_induced, summand_dimension, verify_wedge_equivalence,
    verify_wedge_equivalence_with, InducedCheck, SphereAssignment, WedgeReport,
};
use crate::enumerate::generate_corpus;
use crate::error::{Error, Result};
use crate::graded_lie::{jacobi_sweep, JacobiSweepEntry, SignConvention};
use crate::homology::HomologyProfile;
use crate::interchange::{corpus_to_json, ComplexRecord};
use crate::proof_replay::{replay, ReplayConfig};
use crate::sign_poly::SignPolynomial;
use crate::vertex::{nonempty_subsets, VertexSet, MAX_ENUMERATION_M};
use crate::whitehead::{degree_of, jacobi_sum, jacobi_terms_match_pinch, pinch_expression, ChainForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Structured,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    VerificationFailed = 1,
    InputError = 2,
    GuardViolation = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn from_error(e: &Error) -> Self {
        match e {
            Error::EnumerationGuard { .. } | Error::AmbientSize { .. } => ExitStatus::GuardViolation,
            _ => ExitStatus::InputError,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok { ExitStatus::Success } else { ExitStatus::VerificationFailed }
    }
}

/// Deliberate faults, used to show that verification catches them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mutations {
    /// Drop the last minimal non-face of every `K_I` before comparing.
    pub corrupt_nonfaces: bool,
    /// Use `[α, γ] = (-1)^{pr} [γ, α]` in the proof replay.
    pub flip_antisymmetry: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Sphere dimensions `n_i`; `None` means `n ≡ 1`. A single entry applies to every vertex.
    pub spheres: Option<Vec<u32>>,
    pub seed: u64,
    pub size: usize,
    pub m: usize,
    pub max_m: usize,
    /// Upper end of the `(p, q, r)` sweep; the lower end is 2.
    pub max_degree: u32,
    pub format: Format,
    pub mutations: Mutations,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            spheres: None,
            seed: 0,
            size: 10,
            m: 3,
            max_m: MAX_ENUMERATION_M,
            max_degree: 8,
            format: Format::Human,
            mutations: Mutations::default(),
        }
    }
}

impl RunConfig {
    pub fn check_m(&self, m: usize) -> Result<()> {
        let max = self.max_m.min(MAX_ENUMERATION_M);
        if m > max {
            return Err(Error::EnumerationGuard { m, max });
        }
        Ok(())
    }

    pub fn spheres_for(&self, m: usize) -> Result<SphereAssignment> {
        match self.spheres.as_deref() {
            None => Ok(SphereAssignment::moment_angle(m)),
            Some([n]) => SphereAssignment::uniform(m, *n),
            Some(dims) => {
                if dims.len() != m {
                    return Err(Error::SphereAssignment(format!("{} dimensions given for {m} vertices", dims.len())));
                }
                SphereAssignment::new(dims.to_vec())
            }
        }
    }
}

/// A finished command: the rendered output and the process exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: ExitStatus,
    pub output: String,
}

fn render<T: Serialize>(format: Format, report: &T, human: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("reports always serialize");
            s.push('\n');
            s
        }
        Format::Human => human(report),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok { "PASS" } else { "FAIL" }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonfaceRow {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    #[serde(rename = "F")]
    pub nonfaces: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummandRow {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    #[serde(rename = "F")]
    pub nonface: VertexSet,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinchRow {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    #[serde(rename = "F")]
    pub nonface: VertexSet,
    pub expression: String,
    pub structured: ChainForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub complex: ComplexRecord,
    pub shifted: bool,
    pub spheres: Vec<u32>,
    pub minimal_nonfaces: Vec<NonfaceRow>,
    pub summands: Option<Vec<SummandRow>>,
    pub pinch_map: Option<Vec<PinchRow>>,
    pub note: Option<String>,
}

fn summand_rows(k: &SimplicialComplex, spheres: &SphereAssignment) -> Result<Vec<SummandRow>> {
    Ok(decompose(k)?
        .into_iter()
        .map(|s| SummandRow { index_set: s.index_set, nonface: s.nonface, dim: summand_dimension(&s, spheres) })
        .collect())
}

pub fn analyze(cfg: &RunConfig, k: &SimplicialComplex) -> Result<AnalyzeReport> {
    cfg.check_m(k.m())?;
    let spheres = cfg.spheres_for(k.m())?;
    let minimal_nonfaces = nonempty_subsets(k.m())?
        .into_iter()
        .map(|i| Ok(NonfaceRow { index_set: i, nonfaces: minimal_nonfaces_of_induced(k, i)? }))
        .collect::<Result<Vec<_>>>()?;
    let shifted = k.is_shifted();
    let (summands, pinch_map, note) = if shifted {
        let summands = summand_rows(k, &spheres)?;
        let pinch = decompose(k)?
            .into_iter()
            .map(|s| {
                let e = pinch_expression(k, &s)?;
                let structured = e.normalize(1).as_chain().expect("pinch expressions are bracket chains");
                Ok(PinchRow { index_set: s.index_set, nonface: s.nonface, expression: e.to_string(), structured })
            })
            .collect::<Result<Vec<_>>>()?;
        (Some(summands), Some(pinch), None)
    } else {
        let note = "the complex is not shifted, so the wedge decomposition and pinch map are not computed".to_string();
        (None, None, Some(note))
    };
    Ok(AnalyzeReport {
        complex: ComplexRecord::from_complex(k),
        shifted,
        spheres: spheres.as_slice().to_vec(),
        minimal_nonfaces,
        summands,
        pinch_map,
        note,
    })
}

fn list(sets: &[VertexSet]) -> String {
    if sets.is_empty() {
        return "-".to_string();
    }
    sets.iter().map(VertexSet::to_string).collect::<Vec<_>>().join(" ")
}

fn human_analyze(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "complex: {}", serde_json::to_string(&r.complex).unwrap());
    let _ = writeln!(s, "shifted: {}", r.shifted);
    let _ = writeln!(s, "spheres: {:?}", r.spheres);
    let _ = writeln!(s, "minimal non-faces through max I:");
    for row in &r.minimal_nonfaces {
        let _ = writeln!(s, "  I = {:<12} {}", row.index_set.to_string(), list(&row.nonfaces));
    }
    if let Some(summands) = &r.summands {
        let _ = writeln!(s, "summands: {}", summands.len());
        for row in summands {
            let _ = writeln!(s, "  I = {:<12} F = {:<12} dim {}", row.index_set.to_string(), row.nonface.to_string(), row.dim);
        }
    }
    if let Some(pinch) = &r.pinch_map {
        let _ = writeln!(s, "pinch map:");
        for row in pinch {
            let _ = writeln!(s, "  ({}, {}): {}", row.index_set, row.nonface, row.expression);
        }
    }
    if let Some(note) = &r.note {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

pub fn cmd_analyze(cfg: &RunConfig, complexes: &[SimplicialComplex]) -> Result<Outcome> {
    let reports = complexes.iter().map(|k| analyze(cfg, k)).collect::<Result<Vec<_>>>()?;
    let output = match reports.as_slice() {
        [one] => render(cfg.format, one, human_analyze),
        many => render(cfg.format, &many, |rs| rs.iter().map(human_analyze).collect::<Vec<_>>().join("\n")),
    };
    Ok(Outcome { status: ExitStatus::Success, output })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeMismatchRow {
    #[serde(rename = "I")]
    pub index_set: VertexSet,
    #[serde(rename = "F")]
    pub nonface: VertexSet,
    pub spheres: Vec<u32>,
    pub expression: i64,
    pub summand: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub assignments: Vec<Vec<u32>>,
    pub checked: usize,
    pub mismatches: Vec<DegreeMismatchRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochsterRow {
    pub hochster: HomologyProfile,
    pub decomposition: HomologyProfile,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub complex: ComplexRecord,
    pub shifted: bool,
    pub summands: Vec<SummandRow>,
    #[serde(rename = "per_I")]
    pub per_i: Vec<InducedCheck>,
    pub hochster: HochsterRow,
    pub degree_check: DegreeCheck,
    pub ok: bool,
}

/// Source dimension of every pinch expression against its summand's
/// dimension, for each assignment.
pub fn degree_check(k: &SimplicialComplex, assignments: &[SphereAssignment]) -> Result<DegreeCheck> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for s in decompose(k)? {
        let e = pinch_expression(k, &s)?;
        for spheres in assignments {
            checked += 1;
            let (expression, summand) = (degree_of(&e, spheres)?, summand_dimension(&s, spheres));
            if expression != summand {
                mismatches.push(DegreeMismatchRow {
                    index_set: s.index_set,
                    nonface: s.nonface,
                    spheres: spheres.as_slice().to_vec(),
                    expression,
                    summand,
                });
            }
        }
    }
    Ok(DegreeCheck {
        assignments: assignments.iter().map(|a| a.as_slice().to_vec()).collect(),
        checked,
        mismatches,
    })
}

pub fn verify(cfg: &RunConfig, k: &SimplicialComplex) -> Result<VerifyReport> {
    cfg.check_m(k.m())?;
    let spheres = cfg.spheres_for(k.m())?;
    let wedge: WedgeReport = if cfg.mutations.corrupt_nonfaces {
        verify_wedge_equivalence_with(k, |induced, top| {
            let mut out = induced.minimal_nonfaces_max(top);
            out.pop();
            out
        })?
    } else {
        verify_wedge_equivalence(k)?
    };
    let cross = hochster_cross_check(k)?;
    let hochster = HochsterRow {
        agrees: cross.agrees == Some(true),
        hochster: cross.hochster,
        decomposition: cross.decomposition.unwrap_or_default(),
    };
    let mut assignments = vec![spheres.clone()];
    for n in 1..=3 {
        let uniform = SphereAssignment::uniform(k.m(), n)?;
        if !assignments.contains(&uniform) {
            assignments.push(uniform);
        }
    }
    let degree_check = degree_check(k, &assignments)?;
    let ok = wedge.ok && hochster.agrees && degree_check.mismatches.is_empty();
    Ok(VerifyReport {
        complex: ComplexRecord::from_complex(k),
        shifted: true,
        summands: summand_rows(k, &spheres)?,
        per_i: wedge.per_i,
        hochster,
        degree_check,
        ok,
    })
}

fn human_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "complex: {}", serde_json::to_string(&r.complex).unwrap());
    let _ = writeln!(s, "summands: {}", r.summands.len());
    for c in &r.per_i {
        let _ = writeln!(s, "  I = {:<12} lhs: {}  rhs: {}  {}", c.index_set.to_string(), c.lhs, c.rhs, verdict(c.ok));
    }
    let _ = writeln!(
        s,
        "wedge equivalence: {}",
        verdict(r.per_i.iter().all(|c| c.ok))
    );
    let _ = writeln!(s, "moment-angle cross-check: {} ({})", verdict(r.hochster.agrees), r.hochster.hochster);
    let _ = writeln!(
        s,
        "degree bookkeeping: {} ({} checks, {} mismatches)",
        verdict(r.degree_check.mismatches.is_empty()),
        r.degree_check.checked,
        r.degree_check.mismatches.len()
    );
    let _ = writeln!(s, "result: {}", verdict(r.ok));
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusVerifyReport {
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    /// Full reports for the complexes that failed.
    pub failures: Vec<VerifyReport>,
    pub ok: bool,
}

fn human_corpus(r: &CorpusVerifyReport) -> String {
    let mut s = String::new();
    for f in &r.failures {
        s.push_str(&human_verify(f));
    }
    let _ = writeln!(s, "complexes: {}  passed: {}  failed: {}", r.count, r.passed, r.failed);
    let _ = writeln!(s, "result: {}", verdict(r.ok));
    s
}

/// Verifies one complex (full report) or a corpus (summary plus failing
/// reports). With no complexes given, verifies a generated corpus.
pub fn cmd_verify(cfg: &RunConfig, complexes: &[SimplicialComplex]) -> Result<Outcome> {
    let generated;
    let complexes = if complexes.is_empty() {
        cfg.check_m(cfg.m)?;
        generated = generate_corpus(cfg.seed, cfg.size, cfg.m)?;
        &generated[..]
    } else {
        complexes
    };
    if let [k] = complexes {
        let report = verify(cfg, k)?;
        return Ok(Outcome { status: ExitStatus::from_ok(report.ok), output: render(cfg.format, &report, human_verify) });
    }
    let reports = complexes.iter().map(|k| verify(cfg, k)).collect::<Result<Vec<_>>>()?;
    let count = reports.len();
    let failures: Vec<VerifyReport> = reports.into_iter().filter(|r| !r.ok).collect();
    let report = CorpusVerifyReport { count, passed: count - failures.len(), failed: failures.len(), ok: failures.is_empty(), failures };
    Ok(Outcome { status: ExitStatus::from_ok(report.ok), output: render(cfg.format, &report, human_corpus) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiTermRow {
    pub i: usize,
    pub coefficient: i64,
    pub expression: String,
    pub structured: ChainForm,
    pub matches_pinch: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayRow {
    pub antisymmetry_exponent: String,
    pub multiplier: String,
    pub rewritten: Vec<String>,
    pub target: Vec<String>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiReport {
    pub m: usize,
    pub identity: String,
    pub terms: Vec<JacobiTermRow>,
    pub proof_replay: ReplayRow,
    pub degree_range: [u32; 2],
    pub sweep: Vec<JacobiSweepEntry>,
    pub ok: bool,
}

pub fn jacobi(cfg: &RunConfig) -> Result<JacobiReport> {
    let m = cfg.m;
    cfg.check_m(m)?;
    let sum = jacobi_sum(m)?;
    let matches = jacobi_terms_match_pinch(m)?;
    let terms = sum
        .terms
        .iter()
        .zip(&matches)
        .enumerate()
        .map(|(idx, ((c, e), &matches_pinch))| JacobiTermRow {
            i: idx + 1,
            coefficient: *c,
            expression: e.to_string(),
            structured: e.normalize(*c).as_chain().expect("Jacobi terms are bracket chains"),
            matches_pinch,
        })
        .collect();

    let mut replay_cfg = ReplayConfig::default();
    if cfg.mutations.flip_antisymmetry {
        replay_cfg.antisymmetry_exponent = &replay_cfg.antisymmetry_exponent + &SignPolynomial::one();
    }
    let run = replay(&replay_cfg);
    let proof_replay = ReplayRow {
        antisymmetry_exponent: replay_cfg.antisymmetry_exponent.to_string(),
        multiplier: replay_cfg.multiplier.to_string(),
        rewritten: run.rewritten.iter().map(ToString::to_string).collect(),
        target: run.target.iter().map(ToString::to_string).collect(),
        ok: run.ok,
    };

    if cfg.max_degree < 2 {
        return Err(Error::Parameter(format!("the degree sweep needs an upper end of at least 2, got {}", cfg.max_degree)));
    }
    let sweep = jacobi_sweep(2, cfg.max_degree, SignConvention::SAMELSON)?;
    let ok = matches.iter().all(|&b| b) && proof_replay.ok && sweep.iter().all(|e| e.residual_zero);
    Ok(JacobiReport { m, identity: sum.to_string(), terms, proof_replay, degree_range: [2, cfg.max_degree], sweep, ok })
}

fn human_jacobi(r: &JacobiReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "higher Jacobi identity, m = {}:", r.m);
    let _ = writeln!(s, "  {}", r.identity);
    let all_match = r.terms.iter().all(|t| t.matches_pinch);
    let _ = writeln!(s, "terms agree with pinch expressions: {}", verdict(all_match));
    let _ = writeln!(
        s,
        "proof replay ([α,γ] = (-1)^({}) [γ,α], multiplier (-1)^({})): {}",
        r.proof_replay.antisymmetry_exponent,
        r.proof_replay.multiplier,
        verdict(r.proof_replay.ok)
    );
    for (got, want) in r.proof_replay.rewritten.iter().zip(&r.proof_replay.target) {
        let _ = writeln!(s, "  {got}    target {want}");
    }
    let zero = r.sweep.iter().filter(|e| e.residual_zero).count();
    let _ = writeln!(
        s,
        "graded Jacobi residuals for p, q, r in [{}, {}]: {}/{} zero: {}",
        r.degree_range[0],
        r.degree_range[1],
        zero,
        r.sweep.len(),
        verdict(zero == r.sweep.len())
    );
    let _ = writeln!(s, "result: {}", verdict(r.ok));
    s
}

pub fn cmd_jacobi(cfg: &RunConfig) -> Result<Outcome> {
    let report = jacobi(cfg)?;
    Ok(Outcome { status: ExitStatus::from_ok(report.ok), output: render(cfg.format, &report, human_jacobi) })
}

/// A seeded corpus in the interchange format (the same text in both formats).
pub fn cmd_generate(cfg: &RunConfig) -> Result<Outcome> {
    cfg.check_m(cfg.m)?;
    let corpus = generate_corpus(cfg.seed, cfg.size, cfg.m)?;
    Ok(Outcome { status: ExitStatus::Success, output: corpus_to_json(&corpus) })
}
