//! Hamiltonian path search on a small relabelled graph.
//!
//! Both the cycle solver and the bipartite path search reduce to: find a path
//! from `start` through every vertex that ends in a given set of vertices.
//! Up to [`DP_LIMIT`] vertices this is a subset DP over `(visited, endpoint)`
//! with the start vertex factored out; above that it is a depth-first search
//! with degree and connectivity pruning and an expansion budget.

use serde::Serialize;

use crate::graph::{PartiteGraph, VertexSet};

/// Largest vertex count handled by the subset DP.
pub const DP_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    SubsetDp,
    Backtracking,
}

pub(crate) enum Search {
    /// Local vertex indices from `start` to the chosen end.
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

pub(crate) struct LocalGraph {
    ids: Vec<usize>,
    adj: Vec<u128>,
}

impl LocalGraph {
    /// `G[verts]`.
    pub fn induced(g: &PartiteGraph, verts: VertexSet) -> Self {
        Self::build(g, verts, |_, _| true)
    }

    /// The bipartite graph `G[left, right]`: only edges with one end on each side.
    pub fn bipartite(g: &PartiteGraph, left: VertexSet, right: VertexSet) -> Self {
        Self::build(g, left | right, |u, v| left.contains(u) != left.contains(v))
    }

    fn build(g: &PartiteGraph, verts: VertexSet, keep: impl Fn(usize, usize) -> bool) -> Self {
        let ids = verts.to_vec();
        let adj = ids
            .iter()
            .map(|&u| {
                ids.iter()
                    .enumerate()
                    .filter(|&(_, &v)| g.has_edge(u, v) && keep(u, v))
                    .fold(0u128, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        LocalGraph { ids, adj }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn local(&self, v: usize) -> usize {
        self.ids.binary_search(&v).expect("vertex in local graph")
    }

    pub fn global(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&i| self.ids[i]).collect()
    }

    pub fn neighbours(&self, v: usize) -> u128 {
        self.adj[v]
    }

    /// Finds a Hamiltonian path from `start` ending in `ends`. When `closing`
    /// is set the path must later close back to `start`, which the pruning
    /// takes into account.
    pub fn hamiltonian_path(&self, start: usize, ends: u128, closing: bool, budget: u64) -> (Search, SolveMethod, u64) {
        if self.len() <= DP_LIMIT {
            (self.subset_dp(start, ends), SolveMethod::SubsetDp, 0)
        } else {
            let mut bt = Backtrack {
                g: self,
                ends,
                anchor: if closing { 1u128 << start } else { 0 },
                budget,
                expansions: 0,
                path: vec![start],
            };
            let full = low_bits(self.len());
            let outcome = match bt.extend(start, 1u128 << start, full) {
                Some(true) => Search::Found(bt.path),
                Some(false) => Search::Exhausted,
                None => Search::OutOfBudget,
            };
            (outcome, SolveMethod::Backtracking, bt.expansions)
        }
    }

    fn subset_dp(&self, start: usize, ends: u128) -> Search {
        let n = self.len();
        if n == 1 {
            return if ends >> start & 1 == 1 {
                Search::Found(vec![start])
            } else {
                Search::Exhausted
            };
        }
        // others[i] is the local vertex with compressed index i
        let others: Vec<usize> = (0..n).filter(|&v| v != start).collect();
        let m = others.len();
        let squeeze = |mask: u128| -> u32 {
            others
                .iter()
                .enumerate()
                .filter(|&(_, &v)| mask >> v & 1 == 1)
                .fold(0u32, |acc, (i, _)| acc | 1 << i)
        };
        let adj: Vec<u32> = others.iter().map(|&v| squeeze(self.adj[v])).collect();
        let from_start = squeeze(self.adj[start]);
        let ends = squeeze(ends);

        // dp[mask]: endpoints v ∈ mask of a path start → … → v covering mask
        let size = 1usize << m;
        let mut dp = vec![0u32; size];
        for mask in 1..size {
            let mask32 = mask as u32;
            let mut ends_here = 0u32;
            let mut rest = mask32;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let before = mask32 & !(1 << v);
                let reachable = if before == 0 {
                    from_start >> v & 1 == 1
                } else {
                    dp[before as usize] & adj[v as usize] != 0
                };
                if reachable {
                    ends_here |= 1 << v;
                }
            }
            dp[mask] = ends_here;
        }

        let full = size - 1;
        let finals = dp[full] & ends;
        if finals == 0 {
            return Search::Exhausted;
        }
        let mut cur = finals.trailing_zeros();
        let mut mask = full as u32;
        let mut tail = vec![others[cur as usize]];
        while mask.count_ones() > 1 {
            mask &= !(1 << cur);
            cur = (dp[mask as usize] & adj[cur as usize]).trailing_zeros();
            tail.push(others[cur as usize]);
        }
        let mut path = vec![start];
        path.extend(tail.into_iter().rev());
        Search::Found(path)
    }
}

fn low_bits(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

struct Backtrack<'a> {
    g: &'a LocalGraph,
    ends: u128,
    anchor: u128,
    budget: u64,
    expansions: u64,
    path: Vec<usize>,
}

impl Backtrack<'_> {
    /// `Some(true)` when a path was completed, `Some(false)` when this branch
    /// is exhausted, `None` when the budget ran out.
    fn extend(&mut self, cur: usize, visited: u128, full: u128) -> Option<bool> {
        let remaining = full & !visited;
        if remaining == 0 {
            return Some(self.ends >> cur & 1 == 1);
        }
        if self.expansions >= self.budget {
            return None;
        }
        self.expansions += 1;
        if !self.feasible(cur, remaining) {
            return Some(false);
        }
        let mut next: Vec<usize> = VertexSet::from_bits(self.g.adj[cur] & remaining).to_vec();
        next.sort_by_key(|&v| ((self.g.adj[v] & remaining).count_ones(), v));
        for v in next {
            self.path.push(v);
            match self.extend(v, visited | 1 << v, full) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.path.pop();
        }
        Some(false)
    }

    fn feasible(&self, cur: usize, remaining: u128) -> bool {
        if remaining & self.ends == 0 {
            return false;
        }
        let open = remaining | 1 << cur | self.anchor;
        let single_end = self.anchor == 0 && self.ends.count_ones() == 1;
        for w in VertexSet::from_bits(remaining) {
            let avail = (self.g.adj[w] & open).count_ones();
            let needed = if single_end && self.ends >> w & 1 == 1 { 1 } else { 2 };
            if avail < needed {
                return false;
            }
        }
        // every remaining vertex must be reachable from cur through remaining ones
        let mut seen = self.g.adj[cur] & remaining;
        let mut frontier = seen;
        while frontier != 0 {
            let w = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.g.adj[w] & remaining & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == remaining
    }
}
