//! The degree / extremal / expander dichotomy applied to a concrete graph.

use serde::Serialize;

use super::{
    is_robust_expander, near_independent_expansion_audit, nu_extremal_witness, serialize_rational,
    sparse_cut_audit, AuditOutcome, ExpanderParams, ExtremalSearch, Hypothesis, RobustVerdict, SearchMode,
    DEFAULT_EXACT_CAP,
};
use crate::error::Result;
use crate::graph::{DegreeReport, PartiteGraph, VertexSet};
use crate::rational::{ceil_to_i64, format_rational, from_usize};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Search mode for the sparse-cut and near-independent audits.
    pub mode: SearchMode,
    pub extremal: ExtremalSearch,
    /// Run the exact robust-expander check as a cross-check when `n` is at
    /// most this.
    pub cross_check_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            mode: SearchMode::exact(),
            extremal: ExtremalSearch::default(),
            cross_check_cap: DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    /// Both audits passed, so the graph is a `(ν², τ)`-robust expander.
    RobustExpander {
        #[serde(serialize_with = "serialize_rational")]
        nu: Rational,
        #[serde(serialize_with = "serialize_rational")]
        tau: Rational,
    },
    NuExtremal {
        witness: VertexSet,
    },
    DegreeViolation {
        report: DegreeReport,
    },
    /// Neither branch could be established; `witness` is the set that
    /// blocked the expander branch, if any.
    Unresolved {
        reason: String,
        witness: Option<VertexSet>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub stage: &'static str,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationVerdict {
    pub outcome: Outcome,
    /// False when the expander branch rests on sampled audits only.
    pub exhaustive: bool,
    pub params: ExpanderParams,
    pub hypotheses: Vec<Hypothesis>,
    pub trace: Vec<TraceEntry>,
}

/// Degree check with slack `⌈γn⌉`, then `ν`-extremal search, then the two
/// expansion audits (cross-checked exactly on small graphs).
pub fn classify(g: &PartiteGraph, params: &ExpanderParams, options: &ClassifyOptions) -> Result<ClassificationVerdict> {
    let n = g.n();
    let partition = g.partition();
    let mut trace = Vec::new();
    let finish = |outcome, exhaustive, trace| ClassificationVerdict {
        outcome,
        exhaustive,
        params: *params,
        hypotheses: params.hypotheses(&partition),
        trace,
    };

    let slack = ceil_to_i64(&(params.gamma * from_usize(n)));
    let report = g.check_degree_condition(&partition.exact_profile(), slack)?;
    trace.push(TraceEntry {
        stage: "degree-condition",
        result: format!(
            "slack {slack}: {} (min margin {})",
            if report.pass { "pass" } else { "fail" },
            report.min_slack()
        ),
    });
    if !report.pass {
        return Ok(finish(Outcome::DegreeViolation { report }, true, trace));
    }

    let witness = nu_extremal_witness(g, params.nu, options.extremal)?;
    trace.push(TraceEntry {
        stage: "nu-extremal",
        result: match witness {
            Some(s) => format!("witness {s}"),
            None => "none".into(),
        },
    });
    if let Some(witness) = witness {
        return Ok(finish(Outcome::NuExtremal { witness }, true, trace));
    }

    let sparse = sparse_cut_audit(g, params.tau, options.mode)?;
    trace.push(TraceEntry {
        stage: "sparse-cut",
        result: describe(&sparse),
    });
    let near = near_independent_expansion_audit(g, params.nu, params.tau, options.mode)?;
    trace.push(TraceEntry {
        stage: "near-independent",
        result: describe(&near),
    });
    if let Some(w) = sparse.witness() {
        let reason = "sparse cut audit found a cut with fewer than 2 tau^2 n^2 crossing edges".into();
        return Ok(finish(Outcome::Unresolved { reason, witness: Some(w) }, true, trace));
    }
    if let Some(w) = near.witness() {
        let reason = "near-independent set without robust expansion".into();
        return Ok(finish(Outcome::Unresolved { reason, witness: Some(w) }, true, trace));
    }

    let squared = params.squared();
    let mut exhaustive = sparse.is_pass() && near.is_pass();
    if n <= options.cross_check_cap {
        let mode = SearchMode::Exact {
            cap: options.cross_check_cap,
        };
        let exact = is_robust_expander(g, &squared, mode)?;
        trace.push(TraceEntry {
            stage: "exact-cross-check",
            result: format!("{:?}", exact.verdict).to_lowercase(),
        });
        if exact.verdict == RobustVerdict::NotExpander {
            let reason = format!(
                "audits passed but the exact check refutes ({}, {})-robust expansion",
                format_rational(&squared.nu),
                format_rational(&squared.tau)
            );
            let outcome = Outcome::Unresolved {
                reason,
                witness: exact.witness,
            };
            return Ok(finish(outcome, true, trace));
        }
        exhaustive = true;
    }
    let outcome = Outcome::RobustExpander {
        nu: squared.nu,
        tau: squared.tau,
    };
    Ok(finish(outcome, exhaustive, trace))
}

fn describe(outcome: &AuditOutcome) -> String {
    match outcome {
        AuditOutcome::Pass => "pass".into(),
        AuditOutcome::Inconclusive => "no violation among samples".into(),
        AuditOutcome::Violation { witness } => format!("witness {witness}"),
    }
}
