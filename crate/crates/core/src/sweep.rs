//! Tabulates the tightness constructions over all partitions of `n`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{build_tightness, verify_certificate};
use crate::error::{Error, Result};
use crate::hamiltonicity::{find_hamiltonian_cycle, HamiltonOutcome};
use crate::partition::{enumerate_partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Hamiltonian {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Hamiltonian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hamiltonian::Yes => "yes",
            Hamiltonian::No => "no",
            Hamiltonian::Unknown => "unknown",
        })
    }
}

/// One partition's construction and its checks. Field order is the CSV
/// column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub partition: String,
    pub lambda: usize,
    pub mu: usize,
    pub f: i64,
    pub g: i64,
    pub h1: i64,
    pub h2: i64,
    pub phi: i64,
    pub case: String,
    /// `min_i δ(V_i) − (Φ − n_i − 1)`.
    pub min_slack: i64,
    pub certificate_ok: bool,
    pub hamiltonian: Hamiltonian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Run the exact solver only up to this many vertices.
    pub max_n_solver: usize,
    pub budget: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_n_solver: 24,
            budget: crate::hamiltonicity::DEFAULT_BUDGET,
        }
    }
}

/// Builds the tightness graph for `p` and records every check.
pub fn sweep_row(p: &Partition, options: &SweepOptions) -> Result<SweepRow> {
    let built = build_tightness(p)?;
    let profile = &built.profile;
    let report = built.graph.check_degree_condition(profile, -1)?;
    let hamiltonian = if p.n() <= options.max_n_solver {
        match find_hamiltonian_cycle(&built.graph, options.budget).outcome {
            HamiltonOutcome::Cycle { .. } => Hamiltonian::Yes,
            HamiltonOutcome::NoCycle => Hamiltonian::No,
            HamiltonOutcome::Unknown => Hamiltonian::Unknown,
        }
    } else {
        Hamiltonian::Unknown
    };
    Ok(SweepRow {
        partition: p.to_string(),
        lambda: profile.lambda,
        mu: profile.mu,
        f: profile.f,
        g: profile.g,
        h1: profile.h1,
        h2: profile.h2,
        phi: profile.phi,
        case: built.case.to_string(),
        min_slack: report.min_slack(),
        certificate_ok: verify_certificate(&built.graph, &built.certificate),
        hamiltonian,
    })
}

/// Rows for every partition of `n` into `k` parts (every `k ≥ 2` when `k`
/// is `None`) whose largest part is at most `⌊n/2⌋`. Rows come out grouped
/// by `k` and then in lexicographically decreasing partition order, however
/// the work is scheduled.
pub fn sweep(n: usize, k: Option<usize>, options: &SweepOptions) -> Result<Vec<SweepRow>> {
    let ks: Vec<usize> = match k {
        Some(k) if k < 2 || k > n => {
            return Err(Error::invalid(format!("need 2 <= k <= n, got n = {n}, k = {k}")));
        }
        Some(k) => vec![k],
        None => (2..=n).collect(),
    };
    let mut partitions = Vec::new();
    for k in ks {
        partitions.extend(enumerate_partitions(n, k, true)?);
    }
    partitions.par_iter().map(|p| sweep_row(p, options)).collect()
}
