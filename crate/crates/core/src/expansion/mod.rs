//! Robust neighbourhoods and the audits that certify robust expansion.
//!
//! `RN_ν(S)` is the set of vertices with at least `νn` neighbours in `S`.
//! A graph is a `(ν, τ)`-robust expander when `|RN_ν(S)| ≥ |S| + νn` for
//! every `S` with `τn ≤ |S| ≤ (1−τ)n`. All fractional thresholds are compared
//! exactly: lower size bounds are rounded up, upper bounds down, and a
//! requirement `x ≥ νn` on an integer `x` becomes `x ≥ ⌈νn⌉`.

mod classify;
mod search;

pub use classify::{classify, ClassificationVerdict, ClassifyOptions, Outcome, TraceEntry};

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{PartiteGraph, VertexSet};
use crate::partition::Partition;
use crate::rational::{ceil_usize, floor_usize, format_rational, from_usize, ge_sqrt, le_sqrt_times};
use crate::Rational;

use search::{Candidate, SubsetSearch};

/// Default vertex cap for exhaustive subset enumeration.
pub const DEFAULT_EXACT_CAP: usize = 20;

/// How the subset audits explore `2^V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SearchMode {
    /// Every admissible subset; refuses graphs with more than `cap` vertices.
    Exact { cap: usize },
    /// `samples` admissible subsets drawn from `seed`; can refute, never prove.
    Sampled { seed: u64, samples: usize },
}

impl SearchMode {
    pub fn exact() -> Self {
        SearchMode::Exact {
            cap: DEFAULT_EXACT_CAP,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SearchMode::Exact { .. })
    }
}

impl Default for SearchMode {
    fn default() -> Self {
        SearchMode::exact()
    }
}

/// How [`nu_extremal_witness`] looks for a near-independent half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ExtremalSearch {
    Exact { cap: usize },
    /// Unions of parts pruned down to low internal degree; not exhaustive.
    Heuristic,
}

impl Default for ExtremalSearch {
    fn default() -> Self {
        ExtremalSearch::Exact {
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

pub(crate) fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

fn serialize_opt_rational<S: Serializer>(
    r: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rational(r)),
        None => s.serialize_none(),
    }
}

/// `ν`, `τ`, `γ` and the optional `η`.
///
/// `η` is carried for reporting only; nothing in the crate depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExpanderParams {
    #[serde(serialize_with = "serialize_rational")]
    pub nu: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub tau: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub gamma: Rational,
    #[serde(serialize_with = "serialize_opt_rational")]
    pub eta: Option<Rational>,
}

/// One named inequality between the parameters and whether it holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    pub statement: &'static str,
    pub holds: bool,
}

impl ExpanderParams {
    pub fn new(nu: Rational, tau: Rational, gamma: Rational) -> Result<Self> {
        let unit = |name: &str, x: Rational| {
            if x <= Rational::zero() || x >= Rational::one() {
                Err(Error::invalid(format!(
                    "{name} = {} must lie strictly between 0 and 1",
                    format_rational(&x)
                )))
            } else {
                Ok(())
            }
        };
        unit("nu", nu)?;
        unit("tau", tau)?;
        if gamma < Rational::zero() {
            return Err(Error::invalid("gamma must be non-negative"));
        }
        Ok(ExpanderParams {
            nu,
            tau,
            gamma,
            eta: None,
        })
    }

    pub fn with_eta(mut self, eta: Rational) -> Self {
        self.eta = Some(eta);
        self
    }

    /// The parameters `(ν², τ)` that the two audits certify together.
    pub fn squared(&self) -> ExpanderParams {
        ExpanderParams {
            nu: self.nu * self.nu,
            ..*self
        }
    }

    /// Reports which of the standing parameter inequalities hold for a graph
    /// with the given part sizes. Nothing is enforced.
    pub fn hypotheses(&self, partition: &Partition) -> Vec<Hypothesis> {
        type Wide = Ratio<i128>;
        let wide = |r: Rational| Wide::new(*r.numer() as i128, *r.denom() as i128);
        let (nu, tau, gamma) = (wide(self.nu), wide(self.tau), wide(self.gamma));
        let k = partition.k() as i128;
        let lambda = partition.lambda() as i128;
        let quarter = Wide::new(1, 4);
        let tau2 = tau * tau;
        let mut dichotomy_bound = (gamma * gamma) / 4;
        if k > 1 {
            dichotomy_bound = dichotomy_bound.min(Wide::new(4, (k - 1) * (k - 1)));
        }
        dichotomy_bound = dichotomy_bound.min(tau2 * tau2 / (4 * k * k));
        let stitch_bound = (gamma / 6).min(Wide::new(1, 2 * lambda));
        vec![
            Hypothesis {
                name: "expander-scale",
                statement: "nu <= tau/2",
                holds: nu <= tau / 2,
            },
            Hypothesis {
                name: "audit-scale",
                statement: "nu <= tau^2 <= 1/4",
                holds: nu <= tau2 && tau2 <= quarter,
            },
            Hypothesis {
                name: "sparse-cut-slack",
                statement: "tau <= gamma/4",
                holds: tau <= gamma / 4,
            },
            Hypothesis {
                name: "extremal-dichotomy",
                statement: "nu <= min{4/(k-1)^2, gamma^2/4, tau^4/(4k^2)}",
                holds: nu <= dichotomy_bound,
            },
            Hypothesis {
                name: "extremal-stitching",
                statement: "nu < min{gamma/6, 1/(2 lambda)}",
                holds: nu < stitch_bound,
            },
        ]
    }
}

/// Integer forms of the size and degree thresholds for a fixed `n`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Thresholds {
    /// `⌈νn⌉`: least degree into `S` that puts a vertex in `RN_ν(S)`; also
    /// the required surplus `|RN_ν(S)| − |S|`.
    pub rn: usize,
    /// Admissible `|S|` range `[⌈τn⌉, ⌊(1−τ)n⌋]`.
    pub lo: usize,
    pub hi: usize,
}

impl Thresholds {
    pub fn new(n: usize, nu: Rational, tau: Rational) -> Self {
        let n_r = from_usize(n);
        Thresholds {
            rn: ceil_usize(&(nu * n_r)),
            lo: ceil_usize(&(tau * n_r)),
            hi: floor_usize(&((Rational::one() - tau) * n_r)),
        }
    }
}

fn rn_count(g: &PartiteGraph, s: VertexSet, threshold: usize) -> usize {
    (0..g.n())
        .filter(|&v| (g.neighbors(v) & s).len() >= threshold)
        .count()
}

/// `RN_ν(S)`: vertices with at least `⌈νn⌉` neighbours in `s`.
pub fn robust_neighborhood(g: &PartiteGraph, s: VertexSet, nu: Rational) -> VertexSet {
    let threshold = ceil_usize(&(nu * from_usize(g.n())));
    let s = s & g.vertices();
    (0..g.n())
        .filter(|&v| (g.neighbors(v) & s).len() >= threshold)
        .collect()
}

/// Checks `|RN_ν(S)| ≥ δ(S) − √ν·n`, which must hold whenever
/// `|S| ≥ (√ν + ν)n`.
pub fn robust_degree_bound_check(g: &PartiteGraph, s: VertexSet, nu: Rational) -> Result<bool> {
    let n = g.n();
    if n == 0 || !s.is_subset(g.vertices()) {
        return Err(Error::invalid("set must be a non-empty subset of the vertices"));
    }
    let n_r = from_usize(n);
    let spare = (from_usize(s.len()) - nu * n_r) / n_r;
    if !ge_sqrt(&spare, &nu) {
        return Err(Error::invalid(format!(
            "|S| = {} is below (sqrt(nu) + nu) n for nu = {}",
            s.len(),
            format_rational(&nu)
        )));
    }
    let delta = g.delta_set(s)?;
    let rn = robust_neighborhood(g, s, nu).len();
    let gap = from_usize(delta) - from_usize(rn);
    Ok(le_sqrt_times(&gap, &nu, &n_r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RobustVerdict {
    Expander,
    NotExpander,
    /// Sampled search found no counterexample.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RobustReport {
    pub verdict: RobustVerdict,
    pub witness: Option<VertexSet>,
    pub mode: SearchMode,
    pub params: ExpanderParams,
    pub sets_checked: u64,
}

/// Result of an audit that either passes or exhibits a witness set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum AuditOutcome {
    Pass,
    /// Sampled search found no violation.
    Inconclusive,
    Violation { witness: VertexSet },
}

impl AuditOutcome {
    pub fn witness(&self) -> Option<VertexSet> {
        match self {
            AuditOutcome::Violation { witness } => Some(*witness),
            _ => None,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, AuditOutcome::Pass)
    }

    fn from_search(found: Option<VertexSet>, exhaustive: bool) -> Self {
        match (found, exhaustive) {
            (Some(witness), _) => AuditOutcome::Violation { witness },
            (None, true) => AuditOutcome::Pass,
            (None, false) => AuditOutcome::Inconclusive,
        }
    }
}

/// Checks the robust-expander inequality over all (or sampled) admissible `S`.
///
/// In exact mode the witness is the admissible violating set with the
/// smallest bitmask.
pub fn is_robust_expander(g: &PartiteGraph, params: &ExpanderParams, mode: SearchMode) -> Result<RobustReport> {
    let th = Thresholds::new(g.n(), params.nu, params.tau);
    let search = SubsetSearch::new(g.n(), th.lo, th.hi, mode, "robust expander check")?;
    let violates = |s: VertexSet| rn_count(g, s, th.rn) < s.len() + th.rn;
    let (witness, checked) = search.first(violates);
    let verdict = match (witness, mode.is_exact()) {
        (Some(_), _) => RobustVerdict::NotExpander,
        (None, true) => RobustVerdict::Expander,
        (None, false) => RobustVerdict::Inconclusive,
    };
    Ok(RobustReport {
        verdict,
        witness,
        mode,
        params: *params,
        sets_checked: checked,
    })
}

/// Checks `e(V∖B, B) ≥ 2τ²n²` for every admissible `B`.
///
/// The witness is the sparsest admissible cut (fewest crossing edges, then
/// smallest bitmask).
pub fn sparse_cut_audit(g: &PartiteGraph, tau: Rational, mode: SearchMode) -> Result<AuditOutcome> {
    let n = g.n();
    let th = Thresholds::new(n, Rational::zero(), tau);
    let n_r = from_usize(n);
    let required = ceil_usize(&(tau * tau * n_r * n_r * 2));
    let search = SubsetSearch::new(n, th.lo, th.hi, mode, "sparse cut audit")?;
    let all = g.vertices();
    let found = search.best(|b| {
        let crossing = g.crossing(b, all - b);
        (crossing < required).then_some(crossing as i64)
    });
    Ok(AuditOutcome::from_search(found.map(|c: Candidate| c.set), mode.is_exact()))
}

/// Checks `|RN_ν(S′)| ≥ |S′| + νn` for every `S′` with
/// `τ²n ≤ |S′| ≤ (1−τ²)n` and `Δ(G[S′]) < ν²n`.
///
/// The witness minimises `|RN_ν(S′)| − |S′|`, then the bitmask.
pub fn near_independent_expansion_audit(
    g: &PartiteGraph,
    nu: Rational,
    tau: Rational,
    mode: SearchMode,
) -> Result<AuditOutcome> {
    let n = g.n();
    let th = Thresholds::new(n, nu, tau * tau);
    let internal_cap = ceil_usize(&(nu * nu * from_usize(n)));
    let search = SubsetSearch::new(n, th.lo, th.hi, mode, "near-independent expansion audit")?;
    let found = search.best(|s| {
        if g.max_internal_degree(s) >= internal_cap {
            return None;
        }
        let margin = rn_count(g, s, th.rn) as i64 - s.len() as i64;
        (margin < th.rn as i64).then_some(margin)
    });
    Ok(AuditOutcome::from_search(found.map(|c| c.set), mode.is_exact()))
}

/// Whether `s` satisfies `Δ(G[S]) < ν²n` and
/// `n/2 − νn ≤ |S| ≤ Σ_{V_i ∩ S ≠ ∅} |V_i| ≤ n/2`.
pub fn is_nu_extremal_set(g: &PartiteGraph, s: VertexSet, nu: Rational) -> bool {
    let n = g.n();
    if s.is_empty() || !s.is_subset(g.vertices()) {
        return false;
    }
    let n_r = from_usize(n);
    let internal_cap = ceil_usize(&(nu * nu * n_r));
    let covering = g.parts_meeting(s).len();
    g.max_internal_degree(s) < internal_cap
        && n_r / 2 - nu * n_r <= from_usize(s.len())
        && 2 * covering <= n
}

/// Looks for a set witnessing that `g` is `ν`-extremal.
///
/// Returns the largest such set, ties broken by smallest bitmask. The
/// heuristic search only tries unions of parts (all unions when `k ≤ 12`,
/// otherwise runs of consecutive parts) pruned by repeatedly dropping a
/// vertex of largest internal degree.
pub fn nu_extremal_witness(g: &PartiteGraph, nu: Rational, search: ExtremalSearch) -> Result<Option<VertexSet>> {
    let n = g.n();
    match search {
        ExtremalSearch::Exact { cap } => {
            let n_r = from_usize(n);
            let lo = ceil_usize(&(n_r / 2 - nu * n_r)).max(1);
            let hi = n / 2;
            if lo > hi {
                return Ok(None);
            }
            let mode = SearchMode::Exact { cap };
            let search = SubsetSearch::new(n, lo, hi, mode, "nu-extremal search")?;
            let found = search.best(|s| is_nu_extremal_set(g, s, nu).then_some(-(s.len() as i64)));
            Ok(found.map(|c| c.set))
        }
        ExtremalSearch::Heuristic => Ok(heuristic_extremal(g, nu)),
    }
}

fn heuristic_extremal(g: &PartiteGraph, nu: Rational) -> Option<VertexSet> {
    let k = g.k();
    let n = g.n();
    let internal_cap = ceil_usize(&(nu * nu * from_usize(n)));
    let mut unions: Vec<VertexSet> = Vec::new();
    if k <= 12 {
        for pick in 1u32..(1 << k) {
            let u = (0..k)
                .filter(|&i| pick >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, i| acc | g.part(i));
            unions.push(u);
        }
    } else {
        for start in 0..k {
            let mut u = VertexSet::EMPTY;
            for i in start..k {
                if 2 * (u | g.part(i)).len() > n {
                    break;
                }
                u |= g.part(i);
                unions.push(u);
            }
        }
    }
    unions
        .into_iter()
        .filter(|u| 2 * u.len() <= n)
        .filter_map(|u| {
            let mut s = u;
            while g.max_internal_degree(s) >= internal_cap {
                let worst = s
                    .iter()
                    .max_by_key(|&v| ((g.neighbors(v) & s).len(), std::cmp::Reverse(v)))
                    .expect("non-empty");
                s.remove(worst);
            }
            is_nu_extremal_set(g, s, nu).then_some(s)
        })
        .min_by_key(|s| (std::cmp::Reverse(s.len()), s.bits()))
}
