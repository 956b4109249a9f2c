//! Exact Hamiltonicity, the bipartite degree-sequence test and the cycle
//! construction for graphs with a near-independent half.

mod engine;
mod extremal;

pub use engine::{SolveMethod, DP_LIMIT};
pub use extremal::{extremal_construct_cycle, ExtremalCycle, StitchState, StitchStep};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{PartiteGraph, VertexSet};
use engine::{LocalGraph, Search};

/// Node-expansion budget used when none is given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum HamiltonOutcome {
    Cycle {
        cycle: Vec<usize>,
    },
    /// Proven: no Hamiltonian cycle exists.
    #[serde(rename = "none")]
    NoCycle,
    /// The backtracking budget ran out.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonVerdict {
    pub outcome: HamiltonOutcome,
    pub method: SolveMethod,
    /// Search nodes expanded (backtracking only).
    pub expansions: u64,
}

impl HamiltonVerdict {
    pub fn cycle(&self) -> Option<&[usize]> {
        match &self.outcome {
            HamiltonOutcome::Cycle { cycle } => Some(cycle),
            _ => None,
        }
    }

    pub fn is_none(&self) -> bool {
        self.outcome == HamiltonOutcome::NoCycle
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PathOutcome {
    Path {
        path: Vec<usize>,
    },
    #[serde(rename = "none")]
    NoPath,
    Unknown,
}

impl PathOutcome {
    pub fn path(&self) -> Option<&[usize]> {
        match self {
            PathOutcome::Path { path } => Some(path),
            _ => None,
        }
    }
}

/// Searches for a Hamiltonian cycle in `local`, anchored at local vertex 0.
/// The cycle is reported as the anchor followed by the rest of the cycle in
/// the direction the search closed it.
fn local_cycle(local: &LocalGraph, budget: u64) -> HamiltonVerdict {
    let method = if local.len() <= DP_LIMIT {
        SolveMethod::SubsetDp
    } else {
        SolveMethod::Backtracking
    };
    if local.len() < 3 {
        return HamiltonVerdict {
            outcome: HamiltonOutcome::NoCycle,
            method,
            expansions: 0,
        };
    }
    let (search, method, expansions) = local.hamiltonian_path(0, local.neighbours(0), true, budget);
    let outcome = match search {
        Search::Found(mut path) => {
            path[1..].reverse();
            HamiltonOutcome::Cycle {
                cycle: local.global(&path),
            }
        }
        Search::Exhausted => HamiltonOutcome::NoCycle,
        Search::OutOfBudget => HamiltonOutcome::Unknown,
    };
    HamiltonVerdict {
        outcome,
        method,
        expansions,
    }
}

/// Decides whether `g` has a Hamiltonian cycle.
///
/// Exact by subset DP for `n ≤ 24`; above that a budgeted backtracking search
/// that answers `Unknown` when the budget runs out. Graphs with fewer than 3
/// vertices have no Hamiltonian cycle.
pub fn find_hamiltonian_cycle(g: &PartiteGraph, budget: u64) -> HamiltonVerdict {
    let n = g.n();
    // a cycle leaves each part as often as it enters it
    let obstructed = g.parts().iter().any(|p| 2 * p.len() > n) || (0..n).any(|v| g.degree(v) < 2);
    if obstructed && n > DP_LIMIT {
        return HamiltonVerdict {
            outcome: HamiltonOutcome::NoCycle,
            method: SolveMethod::Backtracking,
            expansions: 0,
        };
    }
    local_cycle(&LocalGraph::induced(g, g.vertices()), budget)
}

/// Hamiltonian cycle of the bipartite graph `G[left, right]`.
pub(crate) fn bipartite_hamiltonian_cycle(
    g: &PartiteGraph,
    left: VertexSet,
    right: VertexSet,
    budget: u64,
) -> HamiltonVerdict {
    local_cycle(&LocalGraph::bipartite(g, left, right), budget)
}

/// True iff `seq` lists every vertex exactly once and cyclically
/// consecutive vertices are adjacent.
pub fn verify_cycle(g: &PartiteGraph, seq: &[usize]) -> bool {
    let n = g.n();
    if seq.len() != n || n < 3 {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for &v in seq {
        if v >= n || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..n).all(|i| g.has_edge(seq[i], seq[(i + 1) % n]))
}

fn check_sides(g: &PartiteGraph, left: VertexSet, right: VertexSet) -> Result<()> {
    if left.intersects(right) {
        return Err(Error::invalid(format!("sides overlap in {}", left & right)));
    }
    if !(left | right).is_subset(g.vertices()) {
        return Err(Error::invalid("sides contain vertices outside the graph"));
    }
    Ok(())
}

/// Degree-sequence test for Hamiltonian paths between all cross pairs of the
/// balanced bipartite graph `G[left, right]` with `m` vertices per side.
///
/// With each side's degrees sorted ascending, `j` (resp. `k`) is the least
/// 1-based index with `d(u_j) ≤ j + 1` (resp. `d(v_k) ≤ k + 1`). The test
/// passes when either index is missing or `d(u_j) + d(v_k) ≥ m + 2`. A pass
/// guarantees a path between every cross pair; a failure proves nothing.
pub fn berge_biconnected_check(g: &PartiteGraph, left: VertexSet, right: VertexSet) -> Result<bool> {
    check_sides(g, left, right)?;
    let m = left.len();
    if right.len() != m {
        return Err(Error::invalid(format!(
            "sides have sizes {} and {}; the test needs equal sides",
            m,
            right.len()
        )));
    }
    if m < 2 {
        return Err(Error::invalid("the test needs at least two vertices per side"));
    }
    let first_low = |side: VertexSet, other: VertexSet| -> Option<usize> {
        let mut degrees: Vec<usize> = side.iter().map(|v| (g.neighbors(v) & other).len()).collect();
        degrees.sort_unstable();
        degrees
            .iter()
            .enumerate()
            .find(|&(i, &d)| d <= i + 2)
            .map(|(_, &d)| d)
    };
    Ok(match (first_low(left, right), first_low(right, left)) {
        (Some(du), Some(dv)) => du + dv >= m + 2,
        _ => true,
    })
}

/// Hamiltonian path of `G[left, right]` from `u` to `v`, using only edges
/// between the two sides.
pub fn bipartite_hamiltonian_path(
    g: &PartiteGraph,
    left: VertexSet,
    right: VertexSet,
    u: usize,
    v: usize,
    budget: u64,
) -> Result<PathOutcome> {
    check_sides(g, left, right)?;
    let on_left = |x: usize| -> Result<bool> {
        if left.contains(x) {
            Ok(true)
        } else if right.contains(x) {
            Ok(false)
        } else {
            Err(Error::invalid(format!("vertex {x} is on neither side")))
        }
    };
    if on_left(u)? == on_left(v)? {
        return Err(Error::invalid(format!("endpoints {u} and {v} are on the same side")));
    }
    if left.len() != right.len() {
        return Ok(PathOutcome::NoPath);
    }
    let local = LocalGraph::bipartite(g, left, right);
    let (search, _, _) = local.hamiltonian_path(local.local(u), 1u128 << local.local(v), false, budget);
    Ok(match search {
        Search::Found(path) => PathOutcome::Path {
            path: local.global(&path),
        },
        Search::Exhausted => PathOutcome::NoPath,
        Search::OutOfBudget => PathOutcome::Unknown,
    })
}
