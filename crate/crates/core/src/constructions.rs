//! Graphs one below the degree threshold that have no Hamiltonian cycle.
//!
//! Four families, chosen by which term attains `Φ`:
//!
//! * **F1** (`Φ = f_i`): `S = V₁ ∪ … ∪ V_i`, `T` a set of `|S| − 1` later
//!   vertices; `S` is joined completely to `T`, everything outside `S` is
//!   complete multipartite. `N(S) = T` is too small.
//! * **F2** (`Φ = g`): as F1 with `S` the first `⌊(n − n_μ)/2⌋ + 1` vertices of
//!   `V₁ ∪ … ∪ V_μ` and `T` taken from `V_{μ+1} ∪ … ∪ V_k`.
//! * **F3** (`Φ = h₁`) and **F4** (`Φ = h₂`): pick `X_i ⊆ V_i` for `i ≤ λ`
//!   with `|X₁ ∪ … ∪ X_λ| = ⌈(n+1)/2⌉` and add every cross edge with at most
//!   one endpoint in `S = ∪ X_i`. `S` is independent and larger than `n/2`.
//!
//! Vertex choices are lowest-id first, so the output is a pure function of
//! the partition (and of the case, when forced).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PartiteGraph, VertexSet, MAX_VERTICES};
use crate::partition::Partition;
use crate::ExactProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum TightnessCase {
    /// `Φ = f_index`, `1 ≤ index < μ`.
    F1 { index: usize },
    F2,
    F3,
    F4,
}

impl fmt::Display for TightnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TightnessCase::F1 { index } => write!(f, "F1(i={index})"),
            TightnessCase::F2 => f.write_str("F2"),
            TightnessCase::F3 => f.write_str("F3"),
            TightnessCase::F4 => f.write_str("F4"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    /// `S` independent with `|N(S)| < |S|`.
    SmallNeighborhood,
    /// `S` independent with `|S| > n/2`.
    OversizedIndependent,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::SmallNeighborhood => "small-neighborhood",
            CertificateKind::OversizedIndependent => "oversized-independent",
        })
    }
}

/// An independent set whose size rules out a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonHamiltonicityCertificate {
    pub kind: CertificateKind,
    pub s: VertexSet,
}

impl NonHamiltonicityCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedSets {
    /// F1 / F2: `S` and its neighbourhood `T`.
    Split { s: VertexSet, t: VertexSet },
    /// F3 / F4: `X₁, …, X_λ`.
    Layers { x: Vec<VertexSet> },
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub graph: PartiteGraph,
    pub case: TightnessCase,
    pub certificate: NonHamiltonicityCertificate,
    pub sets: NamedSets,
    pub profile: ExactProfile,
}

/// Deterministic case choice: F1 (smallest index) > F2 > F4 > F3.
pub fn select_case(profile: &ExactProfile) -> TightnessCase {
    if let Some(index) = profile.maximizing_f_index() {
        TightnessCase::F1 { index }
    } else if profile.phi == profile.g {
        TightnessCase::F2
    } else if profile.h == profile.h2 && side_condition_f4(profile) {
        TightnessCase::F4
    } else {
        TightnessCase::F3
    }
}

/// `n_λ ≥ ⌊⌈(n+1)/2⌉ / λ⌋`.
fn side_condition_f4(profile: &ExactProfile) -> bool {
    let p = &profile.partition;
    p.size(profile.lambda) >= layer_floor(p.n(), profile.lambda)
}

/// `⌊⌈(n+1)/2⌉ / λ⌋`.
fn layer_floor(n: usize, lambda: usize) -> usize {
    (n + 2) / 2 / lambda
}

/// Every case whose defining equality holds for this profile.
pub fn applicable_cases(profile: &ExactProfile) -> Vec<TightnessCase> {
    let mut cases: Vec<TightnessCase> = profile
        .f_values
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v == profile.phi)
        .map(|(i, _)| TightnessCase::F1 { index: i + 1 })
        .collect();
    for case in [TightnessCase::F2, TightnessCase::F3, TightnessCase::F4] {
        if case_defect(profile, case).is_none() {
            cases.push(case);
        }
    }
    cases
}

/// Why `case` does not apply, or `None` when its defining equality holds.
fn case_defect(profile: &ExactProfile, case: TightnessCase) -> Option<String> {
    let phi = profile.phi;
    match case {
        TightnessCase::F1 { index } => {
            if index == 0 || index >= profile.mu {
                Some(format!(
                    "index {index} is outside 1..{} (mu = {})",
                    profile.mu, profile.mu
                ))
            } else if profile.f_values[index - 1] != phi {
                Some(format!(
                    "f_{index} = {} != phi = {phi}",
                    profile.f_values[index - 1]
                ))
            } else {
                None
            }
        }
        TightnessCase::F2 => {
            (profile.g != phi).then(|| format!("g = {} != phi = {phi}", profile.g))
        }
        TightnessCase::F3 => {
            if profile.h1 != phi {
                Some(format!("h1 = {} != phi = {phi}", profile.h1))
            } else if profile.h != profile.h1 {
                Some(format!("h = {} != h1 = {}", profile.h, profile.h1))
            } else {
                None
            }
        }
        TightnessCase::F4 => {
            if profile.h2 != phi {
                Some(format!("h2 = {} != phi = {phi}", profile.h2))
            } else if profile.h != profile.h2 {
                Some(format!("h = {} != h2 = {}", profile.h, profile.h2))
            } else {
                None
            }
        }
    }
}

fn check_supported(p: &Partition) -> Result<()> {
    let unsupported = |reason: String| Error::UnsupportedPartition {
        partition: p.to_string(),
        reason,
    };
    if p.k() < 2 {
        return Err(unsupported("at least two parts are required".into()));
    }
    if !p.parts_at_most_half() {
        return Err(unsupported(format!(
            "largest part {} exceeds floor(n/2) = {} (lambda = 1)",
            p.size(1),
            p.n() / 2
        )));
    }
    if p.n() > MAX_VERTICES {
        return Err(unsupported(format!(
            "n = {} exceeds the supported maximum of {MAX_VERTICES}",
            p.n()
        )));
    }
    Ok(())
}

/// Builds the tightness example for the automatically selected case.
pub fn build_tightness(p: &Partition) -> Result<ConstructionResult> {
    check_supported(p)?;
    let profile = p.exact_profile();
    let case = select_case(&profile);
    build_case(profile, case)
}

/// Builds the example for a requested case; fails if its defining equality
/// does not hold.
pub fn build_tightness_with_case(p: &Partition, case: TightnessCase) -> Result<ConstructionResult> {
    check_supported(p)?;
    let profile = p.exact_profile();
    if let Some(reason) = case_defect(&profile, case) {
        return Err(Error::CaseNotApplicable {
            case: case.to_string(),
            reason,
        });
    }
    build_case(profile, case)
}

fn build_case(profile: ExactProfile, case: TightnessCase) -> Result<ConstructionResult> {
    let p = profile.partition.clone();
    let n = p.n();
    let mut graph = PartiteGraph::with_part_sizes(p.parts())?;
    let infeasible = |what: &str| Error::UnsupportedPartition {
        partition: p.to_string(),
        reason: format!("{case}: {what}"),
    };

    let (certificate, sets) = match case {
        TightnessCase::F1 { .. } | TightnessCase::F2 => {
            let (s, pool) = match case {
                TightnessCase::F1 { index } => {
                    let boundary = p.prefix_sum(index);
                    (VertexSet::range(0, boundary), VertexSet::range(boundary, n))
                }
                _ => {
                    let boundary = p.prefix_sum(profile.mu);
                    let size = (n - p.size(profile.mu)) / 2 + 1;
                    if size > boundary {
                        return Err(infeasible("S does not fit in V_1..V_mu"));
                    }
                    (VertexSet::range(0, size), VertexSet::range(boundary, n))
                }
            };
            let need = s.len() - 1;
            if pool.len() < need {
                return Err(infeasible("not enough vertices for T"));
            }
            let t = pool.take_lowest(need);
            let rest = graph.vertices() - s;
            graph.connect_all(s, t);
            graph.connect_all(rest, rest);
            (
                NonHamiltonicityCertificate {
                    kind: CertificateKind::SmallNeighborhood,
                    s,
                },
                NamedSets::Split { s, t },
            )
        }
        TightnessCase::F3 | TightnessCase::F4 => {
            let lambda = profile.lambda;
            let target = (n + 2) / 2;
            let baseline = match case {
                TightnessCase::F3 => p.size(lambda),
                _ => layer_floor(n, lambda),
            };
            let mut sizes = vec![baseline; lambda];
            if (1..=lambda).any(|i| p.size(i) < baseline) || lambda * baseline > target {
                return Err(infeasible("baseline layer sizes do not fit"));
            }
            let mut remainder = target - lambda * baseline;
            for (i, size) in sizes.iter_mut().enumerate() {
                let extra = remainder.min(p.size(i + 1) - *size);
                *size += extra;
                remainder -= extra;
            }
            if remainder > 0 {
                return Err(infeasible("layers cannot reach ceil((n+1)/2) vertices"));
            }
            let x: Vec<VertexSet> = sizes
                .iter()
                .enumerate()
                .map(|(i, &size)| graph.part(i).take_lowest(size))
                .collect();
            let s = x.iter().fold(VertexSet::EMPTY, |acc, &xi| acc | xi);
            let all = graph.vertices();
            graph.connect_all(all - s, all);
            (
                NonHamiltonicityCertificate {
                    kind: CertificateKind::OversizedIndependent,
                    s,
                },
                NamedSets::Layers { x },
            )
        }
    };

    Ok(ConstructionResult {
        graph,
        case,
        certificate,
        sets,
        profile,
    })
}

/// Checks that the certificate's set is independent and satisfies its kind's
/// inequality. Never panics on malformed input.
pub fn verify_certificate(g: &PartiteGraph, cert: &NonHamiltonicityCertificate) -> bool {
    let s = cert.s;
    if s.is_empty() || !s.is_subset(g.vertices()) || !g.is_independent(s) {
        return false;
    }
    match cert.kind {
        CertificateKind::SmallNeighborhood => g.nbhd(s).len() < s.len(),
        CertificateKind::OversizedIndependent => 2 * s.len() > g.n(),
    }
}
