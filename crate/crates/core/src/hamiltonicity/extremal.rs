//! Hamiltonian cycles in graphs with a near-independent half.
//!
//! Given a witness `S`, let `A` be the union of the parts meeting `S` and
//! `B` the rest, with `t = |B| − ⌊n/2⌋` surplus vertices on the `B` side.
//! A path
//!
//! ```text
//! a₁ x₁ y₁ z₁ a₁′ w₂ a₂ x₂ y₂ z₂ a₂′ w₃ … w_t a_t x_t y_t z_t
//! ```
//!
//! (without `z_t` when `n` is odd) absorbs the surplus through the `B`-edges
//! `x_i y_i`, `y_i z_i`. Deleting its interior leaves a balanced bipartite
//! graph between what is left of `A` and `B`, in which a Hamiltonian path
//! joins the two ends of the path and closes the cycle.

use std::fmt;

use serde::Serialize;

use super::{bipartite_hamiltonian_cycle, bipartite_hamiltonian_path, berge_biconnected_check, verify_cycle};
use super::{HamiltonOutcome, HamiltonVerdict, PathOutcome, SolveMethod, DP_LIMIT};
use crate::error::{Error, Result};
use crate::expansion::{is_nu_extremal_set, ExpanderParams};
use crate::graph::{PartiteGraph, VertexSet};
use crate::rational::{ceil_to_i64, format_rational, from_usize};

/// The construction step at which the builder got stuck.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "step", content = "index", rename_all = "kebab-case")]
pub enum StitchStep {
    PickY(usize),
    PickX(usize),
    PickZ(usize),
    PickA(usize),
    PickAPrime(usize),
    PickW(usize),
    /// The two sides left after removing the path differ in size.
    Balance,
    /// No Hamiltonian path between the path's endpoints in the remainder.
    BipartitePath,
    /// `t = 0` and `G[A, B]` has no Hamiltonian cycle.
    DirectCycle,
    /// The search budget ran out.
    Budget,
}

impl fmt::Display for StitchStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StitchStep::PickY(i) => write!(f, "pick y_{i}"),
            StitchStep::PickX(i) => write!(f, "pick x_{i}"),
            StitchStep::PickZ(i) => write!(f, "pick z_{i}"),
            StitchStep::PickA(i) => write!(f, "pick a_{i}"),
            StitchStep::PickAPrime(i) => write!(f, "pick a'_{i}"),
            StitchStep::PickW(i) => write!(f, "pick w_{i}"),
            StitchStep::Balance => write!(f, "balance check"),
            StitchStep::BipartitePath => write!(f, "bipartite path search"),
            StitchStep::DirectCycle => write!(f, "bipartite cycle search"),
            StitchStep::Budget => write!(f, "search budget"),
        }
    }
}

/// Everything the builder chose, for inspection after success or failure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StitchState {
    pub witness: VertexSet,
    pub a_side: VertexSet,
    pub b_side: VertexSet,
    pub b_plus: VertexSet,
    pub b_star: VertexSet,
    pub t: usize,
    pub y: Vec<usize>,
    pub x: Vec<usize>,
    pub z: Vec<usize>,
    pub a: Vec<usize>,
    pub a_prime: Vec<usize>,
    /// `w_2, …, w_t`.
    pub w: Vec<usize>,
    /// The absorbing path, from `a₁` to its end in `B`.
    pub path: Vec<usize>,
    /// `(|A′|, |B′|)` after removing the path's interior.
    pub remainder_sizes: Option<(usize, usize)>,
    /// Degree-sequence test on the remainder, when it has two or more
    /// vertices per side.
    pub berge: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalCycle {
    pub verdict: HamiltonVerdict,
    pub trace: StitchState,
}

struct Builder<'a> {
    g: &'a PartiteGraph,
    state: StitchState,
    used: VertexSet,
}

impl Builder<'_> {
    fn fail(&self, step: StitchStep) -> Error {
        Error::ConstructionFailed {
            step,
            trace: Box::new(self.state.clone()),
        }
    }

    /// Lowest unused vertex of `pool` adjacent to everything in `anchors`.
    fn pick(&mut self, pool: VertexSet, anchors: &[usize], step: StitchStep) -> Result<usize> {
        let candidates = anchors
            .iter()
            .fold(pool - self.used, |acc, &u| acc & self.g.neighbors(u));
        let v = candidates.first().ok_or_else(|| self.fail(step))?;
        self.used.insert(v);
        Ok(v)
    }
}

/// Builds a Hamiltonian cycle from a `ν`-extremal witness.
///
/// The witness and the degree condition `δ(V_i) ≥ Φ − n_i + ⌈γn⌉` are
/// checked first. Every pick takes the lowest-id admissible vertex; the
/// first pick without a candidate is reported as
/// [`Error::ConstructionFailed`] with the partial trace.
pub fn extremal_construct_cycle(
    g: &PartiteGraph,
    witness: VertexSet,
    params: &ExpanderParams,
    budget: u64,
) -> Result<ExtremalCycle> {
    let n = g.n();
    if !is_nu_extremal_set(g, witness, params.nu) {
        return Err(Error::invalid(format!(
            "{witness} does not witness {}-extremality",
            format_rational(&params.nu)
        )));
    }
    let partition = g.partition();
    let slack = ceil_to_i64(&(params.gamma * from_usize(n)));
    let report = g.check_degree_condition(&partition.exact_profile(), slack)?;
    if !report.pass {
        return Err(Error::invalid(format!(
            "degree condition with slack {slack} fails on part {} (margin {})",
            report.worst_part + 1,
            report.min_slack()
        )));
    }

    let a_side = g.parts_meeting(witness);
    let b_side = g.vertices() - a_side;
    let t = b_side.len() - n / 2;
    // parts inside B that are too large to host the y_i
    let asymptotic = partition.asymptotic_profile();
    let n_r = from_usize(n);
    let large = asymptotic.h - n_r / 2 + params.nu * n_r / from_usize(partition.lambda());
    let b_plus = (0..g.k())
        .map(|i| g.part(i))
        .filter(|p| p.is_subset(b_side) && from_usize(p.len()) > large)
        .fold(VertexSet::EMPTY, |acc, p| acc | p);
    let mut b = Builder {
        g,
        state: StitchState {
            witness,
            a_side,
            b_side,
            b_plus,
            b_star: b_side - b_plus,
            t,
            ..StitchState::default()
        },
        used: VertexSet::EMPTY,
    };

    if t == 0 {
        let verdict = bipartite_hamiltonian_cycle(g, a_side, b_side, budget);
        return match verdict.outcome {
            HamiltonOutcome::Cycle { .. } => Ok(ExtremalCycle {
                verdict,
                trace: b.state,
            }),
            HamiltonOutcome::NoCycle => Err(b.fail(StitchStep::DirectCycle)),
            HamiltonOutcome::Unknown => Err(b.fail(StitchStep::Budget)),
        };
    }

    let odd = n % 2 == 1;
    for i in 1..=t {
        let y = b.pick(b.state.b_star, &[], StitchStep::PickY(i))?;
        b.state.y.push(y);
    }
    for i in 1..=t {
        let y = b.state.y[i - 1];
        let x = b.pick(b_side, &[y], StitchStep::PickX(i))?;
        b.state.x.push(x);
        if !(odd && i == t) {
            let z = b.pick(b_side, &[y], StitchStep::PickZ(i))?;
            b.state.z.push(z);
        }
    }
    for i in 1..=t {
        let a = b.pick(witness, &[b.state.x[i - 1]], StitchStep::PickA(i))?;
        b.state.a.push(a);
        if i < t {
            let a2 = b.pick(witness, &[b.state.z[i - 1]], StitchStep::PickAPrime(i))?;
            b.state.a_prime.push(a2);
        }
    }
    for i in 1..t {
        let anchors = [b.state.a_prime[i - 1], b.state.a[i]];
        let w = b.pick(b_side, &anchors, StitchStep::PickW(i + 1))?;
        b.state.w.push(w);
    }

    let s = &b.state;
    let mut path = Vec::with_capacity(5 * t);
    for i in 0..t {
        if i > 0 {
            path.push(s.w[i - 1]);
        }
        path.extend([s.a[i], s.x[i], s.y[i]]);
        if let Some(&z) = s.z.get(i) {
            path.push(z);
        }
        if i + 1 < t {
            path.push(s.a_prime[i]);
        }
    }
    let start = path[0];
    let end = *path.last().expect("t ≥ 1");
    let interior: VertexSet = path[1..path.len() - 1].iter().copied().collect();
    let a_rest = a_side - interior;
    let b_rest = b_side - interior;
    b.state.path = path;
    b.state.remainder_sizes = Some((a_rest.len(), b_rest.len()));
    if a_rest.len() != b_rest.len() {
        return Err(b.fail(StitchStep::Balance));
    }
    if a_rest.len() >= 2 {
        b.state.berge = Some(berge_biconnected_check(g, a_rest, b_rest)?);
    }
    let method = if a_rest.len() * 2 <= DP_LIMIT {
        SolveMethod::SubsetDp
    } else {
        SolveMethod::Backtracking
    };
    let connector = match bipartite_hamiltonian_path(g, a_rest, b_rest, start, end, budget)? {
        PathOutcome::Path { path } => path,
        PathOutcome::NoPath => return Err(b.fail(StitchStep::BipartitePath)),
        PathOutcome::Unknown => return Err(b.fail(StitchStep::Budget)),
    };

    let mut cycle = connector;
    let p = &b.state.path;
    cycle.extend(p[1..p.len() - 1].iter().rev());
    assert!(verify_cycle(g, &cycle), "stitched sequence is not a Hamiltonian cycle");
    Ok(ExtremalCycle {
        verdict: HamiltonVerdict {
            outcome: HamiltonOutcome::Cycle { cycle },
            method,
            expansions: 0,
        },
        trace: b.state,
    })
}
