//! Identity verification: evaluate both sides of each registered identity
//! over a parameter grid, optionally cross-check against the brute-force
//! enumerator, and emit structured reports.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::counting::{
    closed_form_rhs, count_covering, count_unrestricted, surjection_count_lhs, IdentityId,
    ParamPoint,
};
use crate::enumerate::count_bruteforce;
use crate::error::Error;
use crate::scalar::to_decimal;
use crate::shape::MatrixShape;
use crate::ExactInt;

/// Whether and when the brute-force oracle runs alongside the formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    /// Run the oracle only where the candidate count fits under the cap.
    WhenFeasible,
    /// Demand the oracle everywhere; points over the cap report an error
    /// state and the run continues.
    Required,
}

/// Outcome of the oracle at one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleStatus {
    NotRun,
    Ran(ExactInt),
    Failed { reason: String },
}

/// One verified parameter point.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub params: ParamPoint,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub oracle: OracleStatus,
    pub lhs_eq_rhs: bool,
    /// Present exactly when the oracle ran.
    pub formula_eq_oracle: Option<bool>,
    /// Informational only; never serialized into machine formats.
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn is_pass(&self) -> bool {
        self.lhs_eq_rhs
            && self.formula_eq_oracle != Some(false)
            && !matches!(self.oracle, OracleStatus::Failed { .. })
    }
}

/// Largest accepted grid or sequence parameter value; sweeps are desk
/// scale, and the bound keeps derived quantities like `k*p` well inside
/// machine range.
pub const MAX_PARAM: u64 = 1_000_000;

/// An inclusive range for one grid variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarRange {
    pub min: u64,
    pub max: u64,
}

impl VarRange {
    fn new(min: u64, max: u64) -> Result<Self, Error> {
        if min < 1 || min > max {
            return Err(Error::Domain(format!(
                "grid range {min}..={max} must satisfy 1 <= min <= max"
            )));
        }
        if max > MAX_PARAM {
            return Err(Error::Domain(format!(
                "grid bound {max} exceeds the supported maximum {MAX_PARAM}"
            )));
        }
        Ok(VarRange { min, max })
    }

    fn iter(&self) -> impl Iterator<Item = u64> {
        self.min..=self.max
    }
}

/// Ranges for the identity's free variables; absent variables are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GridSpec {
    pub n: Option<VarRange>,
    pub k: Option<VarRange>,
    pub p: Option<VarRange>,
    /// Extra grid bound for identities parameterized by (k, p).
    pub max_kp: Option<u64>,
}

/// Partial grid override, as read from a config file or command-line flags.
#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridOverride {
    pub n: Option<[u64; 2]>,
    pub k: Option<[u64; 2]>,
    pub p: Option<[u64; 2]>,
    pub max_kp: Option<u64>,
}

/// Per-identity grid overrides keyed by identity name.
#[derive(Debug, Clone, Default)]
pub struct GridConfig {
    entries: BTreeMap<String, GridOverride>,
}

impl GridConfig {
    /// Parse a JSON object mapping identity names to grid overrides, e.g.
    /// `{"eq3": {"n": [1, 12], "k": [1, 4], "p": [1, 3]}}`.
    pub fn from_json(text: &str) -> Result<Self, Error> {
        let entries: BTreeMap<String, GridOverride> = serde_json::from_str(text)
            .map_err(|e| Error::Domain(format!("malformed grid config: {e}")))?;
        for name in entries.keys() {
            name.parse::<IdentityId>()?;
        }
        Ok(GridConfig { entries })
    }

    pub fn override_for(&self, id: IdentityId) -> Option<&GridOverride> {
        self.entries.get(id.as_str())
    }
}

/// Individual bound overrides from command-line flags.
#[derive(Debug, Clone, Copy, Default)]
pub struct BoundOverrides {
    pub min_n: Option<u64>,
    pub max_n: Option<u64>,
    pub min_k: Option<u64>,
    pub max_k: Option<u64>,
    pub min_p: Option<u64>,
    pub max_p: Option<u64>,
    pub max_kp: Option<u64>,
}

impl BoundOverrides {
    pub fn is_empty(&self) -> bool {
        self.min_n.is_none()
            && self.max_n.is_none()
            && self.min_k.is_none()
            && self.max_k.is_none()
            && self.min_p.is_none()
            && self.max_p.is_none()
            && self.max_kp.is_none()
    }
}

impl GridSpec {
    fn set_range(
        slot: &mut Option<VarRange>,
        var: &str,
        bounds: [u64; 2],
        strict: bool,
    ) -> Result<(), Error> {
        match slot {
            Some(range) => {
                *range = VarRange::new(bounds[0], bounds[1])?;
                Ok(())
            }
            None if strict => Err(Error::Domain(format!(
                "grid variable {var} is not a parameter of this identity"
            ))),
            None => Ok(()),
        }
    }

    /// Apply a whole-range override. With `strict`, mentioning a variable
    /// the identity does not use is an error.
    pub fn apply_override(mut self, over: &GridOverride, strict: bool) -> Result<Self, Error> {
        if let Some(b) = over.n {
            Self::set_range(&mut self.n, "n", b, strict)?;
        }
        if let Some(b) = over.k {
            Self::set_range(&mut self.k, "k", b, strict)?;
        }
        if let Some(b) = over.p {
            Self::set_range(&mut self.p, "p", b, strict)?;
        }
        if over.max_kp.is_some() {
            if self.max_kp.is_none() && strict {
                return Err(Error::Domain(
                    "max_kp applies only to identities parameterized by (k, p)".into(),
                ));
            }
            if self.max_kp.is_some() {
                self.max_kp = over.max_kp;
            }
        }
        Ok(self)
    }

    /// Apply per-bound overrides from flags.
    pub fn apply_bounds(mut self, over: &BoundOverrides, strict: bool) -> Result<Self, Error> {
        let apply = |slot: &mut Option<VarRange>,
                     var: &str,
                     min: Option<u64>,
                     max: Option<u64>|
         -> Result<(), Error> {
            if min.is_none() && max.is_none() {
                return Ok(());
            }
            match slot {
                Some(range) => {
                    let lo = min.unwrap_or(range.min);
                    let hi = max.unwrap_or(range.max);
                    *range = VarRange::new(lo, hi)?;
                    Ok(())
                }
                None if strict => Err(Error::Domain(format!(
                    "grid variable {var} is not a parameter of this identity"
                ))),
                None => Ok(()),
            }
        };
        apply(&mut self.n, "n", over.min_n, over.max_n)?;
        apply(&mut self.k, "k", over.min_k, over.max_k)?;
        apply(&mut self.p, "p", over.min_p, over.max_p)?;
        if let Some(kp) = over.max_kp {
            if self.max_kp.is_none() && strict {
                return Err(Error::Domain(
                    "max_kp applies only to identities parameterized by (k, p)".into(),
                ));
            }
            if self.max_kp.is_some() {
                self.max_kp = Some(kp);
            }
        }
        Ok(self)
    }

    /// All points of the grid in lexicographic (n, k, p) order.
    fn points(&self) -> Vec<ParamPoint> {
        let expand = |r: Option<VarRange>| -> Vec<Option<u64>> {
            match r {
                Some(range) => range.iter().map(Some).collect(),
                None => vec![None],
            }
        };
        let mut out = Vec::new();
        for n in expand(self.n) {
            for k in expand(self.k) {
                for p in expand(self.p) {
                    if let (Some(kp), Some(k), Some(p)) = (self.max_kp, k, p) {
                        if k * p > kp {
                            continue;
                        }
                    }
                    out.push(ParamPoint { n, k, p });
                }
            }
        }
        out
    }
}

/// A registered identity: its side condition, the shape its parameters
/// induce, and evaluators for both sides.
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub free_params: &'static [&'static str],
    /// Human-readable side condition; the skip/error messages quote it.
    pub side_condition: &'static str,
    admits_fn: fn(&ParamPoint) -> bool,
    shape_fn: fn(&ParamPoint) -> MatrixShape,
    lhs_fn: fn(&ParamPoint) -> ExactInt,
    rhs_fn: fn(&ParamPoint) -> Result<ExactInt, Error>,
    pub default_grid: GridSpec,
}

impl IdentityDescriptor {
    pub fn admits(&self, point: &ParamPoint) -> bool {
        (self.admits_fn)(point)
    }

    /// The matrix shape whose covering (or, for the transform, unrestricted)
    /// count the identity speaks about.
    pub fn induced_shape(&self, point: &ParamPoint) -> MatrixShape {
        (self.shape_fn)(point)
    }

    pub fn lhs(&self, point: &ParamPoint) -> ExactInt {
        (self.lhs_fn)(point)
    }

    pub fn rhs(&self, point: &ParamPoint) -> Result<ExactInt, Error> {
        (self.rhs_fn)(point)
    }
}

const fn range(min: u64, max: u64) -> Option<VarRange> {
    Some(VarRange { min, max })
}

fn shape_unchecked(n: u64, k: u64, p: u64) -> MatrixShape {
    MatrixShape::new(n, k, p).expect("identity grids keep n, k >= 1")
}

static DESCRIPTORS: [IdentityDescriptor; 6] = [
    IdentityDescriptor {
        id: IdentityId::Eq1,
        free_params: &["n"],
        side_condition: "n = k, p = 1",
        admits_fn: |_| true,
        shape_fn: |pt| shape_unchecked(pt.n.unwrap(), pt.n.unwrap(), 1),
        lhs_fn: |pt| count_covering(&shape_unchecked(pt.n.unwrap(), pt.n.unwrap(), 1)),
        rhs_fn: |pt| closed_form_rhs(IdentityId::Eq1, pt),
        default_grid: GridSpec {
            n: range(1, 8),
            k: None,
            p: None,
            max_kp: None,
        },
    },
    IdentityDescriptor {
        id: IdentityId::Eq2,
        free_params: &["p"],
        side_condition: "n = 2p, k = 2",
        admits_fn: |_| true,
        shape_fn: |pt| shape_unchecked(2 * pt.p.unwrap(), 2, pt.p.unwrap()),
        lhs_fn: |pt| count_covering(&shape_unchecked(2 * pt.p.unwrap(), 2, pt.p.unwrap())),
        rhs_fn: |pt| closed_form_rhs(IdentityId::Eq2, pt),
        default_grid: GridSpec {
            n: None,
            k: None,
            p: range(1, 5),
            max_kp: None,
        },
    },
    IdentityDescriptor {
        id: IdentityId::Eq3,
        free_params: &["n", "k", "p"],
        side_condition: "n > p*k",
        admits_fn: |pt| pt.n.unwrap() > pt.p.unwrap() * pt.k.unwrap(),
        shape_fn: |pt| shape_unchecked(pt.n.unwrap(), pt.k.unwrap(), pt.p.unwrap()),
        lhs_fn: |pt| count_covering(&shape_unchecked(pt.n.unwrap(), pt.k.unwrap(), pt.p.unwrap())),
        rhs_fn: |pt| closed_form_rhs(IdentityId::Eq3, pt),
        default_grid: GridSpec {
            n: range(1, 12),
            k: range(1, 4),
            p: range(1, 3),
            max_kp: None,
        },
    },
    IdentityDescriptor {
        id: IdentityId::Eq4,
        free_params: &["k", "p"],
        side_condition: "n = k*p",
        admits_fn: |_| true,
        shape_fn: |pt| {
            shape_unchecked(pt.k.unwrap() * pt.p.unwrap(), pt.k.unwrap(), pt.p.unwrap())
        },
        lhs_fn: |pt| {
            count_covering(&shape_unchecked(
                pt.k.unwrap() * pt.p.unwrap(),
                pt.k.unwrap(),
                pt.p.unwrap(),
            ))
        },
        rhs_fn: |pt| closed_form_rhs(IdentityId::Eq4, pt),
        default_grid: GridSpec {
            n: None,
            k: range(1, 10),
            p: range(1, 10),
            max_kp: Some(10),
        },
    },
    IdentityDescriptor {
        id: IdentityId::Eq5,
        free_params: &["n", "k"],
        side_condition: "p = 1, n <= k",
        admits_fn: |pt| pt.n.unwrap() <= pt.k.unwrap(),
        shape_fn: |pt| shape_unchecked(pt.n.unwrap(), pt.k.unwrap(), 1),
        lhs_fn: |pt| surjection_count_lhs(pt.n.unwrap(), pt.k.unwrap()),
        rhs_fn: |pt| closed_form_rhs(IdentityId::Eq5, pt),
        default_grid: GridSpec {
            n: range(1, 7),
            k: range(1, 7),
            p: None,
            max_kp: None,
        },
    },
    IdentityDescriptor {
        id: IdentityId::Transform,
        free_params: &["n", "k", "p"],
        side_condition: "1 <= p <= n",
        admits_fn: |pt| pt.p.unwrap() >= 1 && pt.p.unwrap() <= pt.n.unwrap(),
        shape_fn: |pt| shape_unchecked(pt.n.unwrap(), pt.k.unwrap(), pt.p.unwrap()),
        lhs_fn: |pt| {
            count_unrestricted(&shape_unchecked(pt.n.unwrap(), pt.k.unwrap(), pt.p.unwrap()))
        },
        rhs_fn: |pt| Ok(transform_rhs(pt.n.unwrap(), pt.k.unwrap(), pt.p.unwrap())),
        default_grid: GridSpec {
            n: range(1, 6),
            k: range(1, 4),
            p: range(1, 3),
            max_kp: None,
        },
    },
];

/// `sum_{m=p}^{n} C(n,m) R(m x k, p)`: every unrestricted matrix has a
/// unique set of nonzero rows, so the unrestricted count decomposes over
/// the size of that set.
fn transform_rhs(n: u64, k: u64, p: u64) -> ExactInt {
    let mut acc = ExactInt::from(0);
    for m in p..=n {
        acc += binomial::<ExactInt>(n, m as i64) * count_covering::<ExactInt>(&shape_unchecked(m, k, p));
    }
    acc
}

pub fn descriptor(id: IdentityId) -> &'static IdentityDescriptor {
    DESCRIPTORS.iter().find(|d| d.id == id).expect("all identities registered")
}

pub fn registry() -> &'static [IdentityDescriptor] {
    &DESCRIPTORS
}

/// Result of sweeping one identity over a grid.
#[derive(Debug, Clone)]
pub struct VerifyRun {
    pub identity: IdentityId,
    pub reports: Vec<IdentityReport>,
    /// Grid points that violate the side condition; conditional identities
    /// skip them rather than failing.
    pub skipped: Vec<ParamPoint>,
    pub examined: usize,
}

/// Pass/fail accounting for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub examined: usize,
    pub reported: usize,
    pub skipped: usize,
    pub passed: usize,
    pub failed: usize,
    pub oracle_errors: usize,
}

impl VerifyRun {
    pub fn summary(&self) -> RunSummary {
        let oracle_errors = self
            .reports
            .iter()
            .filter(|r| matches!(r.oracle, OracleStatus::Failed { .. }))
            .count();
        let passed = self.reports.iter().filter(|r| r.is_pass()).count();
        RunSummary {
            examined: self.examined,
            reported: self.reports.len(),
            skipped: self.skipped.len(),
            passed,
            failed: self.reports.len() - passed,
            oracle_errors,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.is_pass())
    }
}

fn evaluate_point(
    desc: &IdentityDescriptor,
    point: ParamPoint,
    oracle_mode: OracleMode,
    cap: u64,
) -> IdentityReport {
    let start = Instant::now();
    let lhs = desc.lhs(&point);
    let rhs = desc.rhs(&point).expect("side condition checked before evaluation");
    let oracle = match oracle_mode {
        OracleMode::Off => OracleStatus::NotRun,
        OracleMode::WhenFeasible | OracleMode::Required => {
            let shape = desc.induced_shape(&point);
            // The transform speaks about the unrestricted set; everything
            // else counts covering matrices.
            let coverage = desc.id != IdentityId::Transform;
            match count_bruteforce::<ExactInt>(&shape, coverage, cap) {
                Ok(v) => OracleStatus::Ran(v),
                Err(err) => match oracle_mode {
                    OracleMode::WhenFeasible => OracleStatus::NotRun,
                    _ => OracleStatus::Failed {
                        reason: err.to_string(),
                    },
                },
            }
        }
    };
    let lhs_eq_rhs = lhs == rhs;
    let formula_eq_oracle = match &oracle {
        OracleStatus::Ran(v) => Some(*v == lhs),
        _ => None,
    };
    IdentityReport {
        identity: desc.id,
        params: point,
        lhs,
        rhs,
        oracle,
        lhs_eq_rhs,
        formula_eq_oracle,
        elapsed: start.elapsed(),
    }
}

/// Sweep `grid` for the given identity. Points violating the side condition
/// are recorded as skipped. Points are evaluated in parallel; the report
/// list is in canonical (lexicographic) parameter order regardless of
/// scheduling.
pub fn verify_identity(
    id: IdentityId,
    grid: &GridSpec,
    oracle_mode: OracleMode,
    cap: u64,
) -> VerifyRun {
    let desc = descriptor(id);
    let mut admissible = Vec::new();
    let mut skipped = Vec::new();
    let points = grid.points();
    let examined = points.len();
    for point in points {
        if desc.admits(&point) {
            admissible.push(point);
        } else {
            skipped.push(point);
        }
    }
    let reports: Vec<IdentityReport> = admissible
        .par_iter()
        .map(|&point| evaluate_point(desc, point, oracle_mode, cap))
        .collect();
    VerifyRun {
        identity: id,
        reports,
        skipped,
        examined,
    }
}

/// Sweep the identity's default grid.
pub fn verify_identity_default(id: IdentityId, oracle_mode: OracleMode, cap: u64) -> VerifyRun {
    verify_identity(id, &descriptor(id).default_grid, oracle_mode, cap)
}

/// The binomial-transform inversion `C(n,p)^k = sum_m C(n,m) R(m x k, p)`
/// over a grid; the oracle (when feasible) is the exhaustive unrestricted
/// count.
pub fn verify_transform(grid: &GridSpec, cap: u64) -> VerifyRun {
    verify_identity(IdentityId::Transform, grid, OracleMode::WhenFeasible, cap)
}

/// Sequence view: the identity's left-hand side as `var` runs over
/// `range`, other parameters fixed. Every point must satisfy the side
/// condition; a violation is an error naming the constraint.
pub fn sequence_emit(
    id: IdentityId,
    var: &str,
    range_bounds: (u64, u64),
    fixed: &ParamPoint,
) -> Result<Vec<(u64, ExactInt)>, Error> {
    let desc = descriptor(id);
    if !desc.free_params.contains(&var) {
        return Err(Error::Domain(format!(
            "{id} is not parameterized by {var}; its parameters are {:?}",
            desc.free_params
        )));
    }
    let (from, to) = range_bounds;
    if from < 1 || from > to {
        return Err(Error::Domain(format!(
            "sequence range {from}..={to} must satisfy 1 <= from <= to"
        )));
    }
    if to > MAX_PARAM {
        return Err(Error::Domain(format!(
            "sequence bound {to} exceeds the supported maximum {MAX_PARAM}"
        )));
    }
    if fixed.entries().iter().any(|&(_, v)| v > MAX_PARAM) {
        return Err(Error::Domain(format!(
            "fixed parameters must not exceed {MAX_PARAM}"
        )));
    }
    // The fixed point must supply exactly the other free parameters.
    let mut expected = ParamPoint::default();
    for &name in desc.free_params {
        if name == var {
            continue;
        }
        expected = match name {
            "n" => expected.with_n(fixed.n.ok_or_else(|| missing_param(id, name))?),
            "k" => expected.with_k(fixed.k.ok_or_else(|| missing_param(id, name))?),
            "p" => expected.with_p(fixed.p.ok_or_else(|| missing_param(id, name))?),
            _ => unreachable!(),
        };
    }
    if expected != *fixed {
        return Err(Error::Domain(format!(
            "{id} with --var {var} takes fixed parameters {:?} only, got {{{fixed}}}",
            desc.free_params.iter().filter(|&&f| f != var).collect::<Vec<_>>()
        )));
    }
    let mut out = Vec::new();
    for value in from..=to {
        let point = match var {
            "n" => fixed.with_n(value),
            "k" => fixed.with_k(value),
            "p" => fixed.with_p(value),
            _ => unreachable!(),
        };
        if !desc.admits(&point) {
            return Err(Error::SideCondition {
                identity: desc.id.as_str(),
                condition: desc.side_condition,
            });
        }
        out.push((value, desc.lhs(&point)));
    }
    Ok(out)
}

fn missing_param(id: IdentityId, name: &str) -> Error {
    Error::Domain(format!("{id} requires fixed parameter {name}"))
}

// --- serialization -----------------------------------------------------

/// JSON mirror of a report: integers as decimal strings, params as a small
/// object, elapsed omitted so output is byte-stable across runs.
#[derive(Debug, Serialize)]
struct ReportJson {
    identity: &'static str,
    params: ParamsJson,
    lhs: String,
    rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_error: Option<String>,
    lhs_eq_rhs: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_eq_oracle: Option<bool>,
}

#[derive(Debug, Serialize)]
struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

#[derive(Debug, Serialize)]
struct RunJson {
    identity: &'static str,
    summary: RunSummary,
    skipped_points: Vec<ParamsJson>,
    reports: Vec<ReportJson>,
}

fn params_json(p: &ParamPoint) -> ParamsJson {
    ParamsJson {
        n: p.n,
        k: p.k,
        p: p.p,
    }
}

fn report_json(r: &IdentityReport) -> ReportJson {
    let (oracle, oracle_error) = match &r.oracle {
        OracleStatus::NotRun => (None, None),
        OracleStatus::Ran(v) => (Some(to_decimal(v)), None),
        OracleStatus::Failed { reason } => (None, Some(reason.clone())),
    };
    ReportJson {
        identity: r.identity.as_str(),
        params: params_json(&r.params),
        lhs: to_decimal(&r.lhs),
        rhs: to_decimal(&r.rhs),
        oracle,
        oracle_error,
        lhs_eq_rhs: r.lhs_eq_rhs,
        formula_eq_oracle: r.formula_eq_oracle,
    }
}

/// Serialize runs as a JSON document: `{"runs": [...]}`.
pub fn runs_to_json(runs: &[VerifyRun]) -> String {
    let body: Vec<RunJson> = runs
        .iter()
        .map(|run| RunJson {
            identity: run.identity.as_str(),
            summary: run.summary(),
            skipped_points: run.skipped.iter().map(params_json).collect(),
            reports: run.reports.iter().map(report_json).collect(),
        })
        .collect();
    let doc = serde_json::json!({ "runs": body });
    serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
}

pub const REPORT_CSV_HEADER: &str =
    "identity,n,k,p,lhs,rhs,oracle,lhs_eq_rhs,formula_eq_oracle";

/// One CSV row per report, fixed column order, empty cells for absent
/// values.
pub fn reports_to_csv(runs: &[VerifyRun]) -> String {
    let mut out = String::from(REPORT_CSV_HEADER);
    out.push('\n');
    let cell = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for run in runs {
        for r in &run.reports {
            let oracle = match &r.oracle {
                OracleStatus::Ran(v) => to_decimal(v),
                _ => String::new(),
            };
            let oracle_match = r
                .formula_eq_oracle
                .map(|b| b.to_string())
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                r.identity,
                cell(r.params.n),
                cell(r.params.k),
                cell(r.params.p),
                to_decimal(&r.lhs),
                to_decimal(&r.rhs),
                oracle,
                r.lhs_eq_rhs,
                oracle_match,
            ));
        }
    }
    out
}
