//! Weak expansion and perfect fractional matchings.
//!
//! A fractional matching here is a spanning subgraph whose components are
//! single edges or odd cycles. One exists iff every vertex set `T` satisfies
//! `|N(T)| ≥ |T|`, and it suffices to check independent sets: if `T` fails,
//! the isolated vertices of `G[T]` fail too.
//!
//! The constructive direction goes through the doubled bipartite graph `H`
//! on `V ⊔ V′` with `xy′ ∈ E(H)` iff `xy ∈ E(G)`. A perfect matching of `H`
//! is a permutation of `V` along edges of `G`; its cycles give the cover
//! (2-cycles become edges, even cycles are split into alternate edges).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PartiteGraph, VertexSet};

/// Spanning union of vertex-disjoint edges and odd cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionalMatching {
    pub edges: Vec<[usize; 2]>,
    pub odd_cycles: Vec<Vec<usize>>,
}

impl FractionalMatching {
    /// Checks disjointness, coverage, odd cycle lengths and edge existence.
    pub fn validate(&self, g: &PartiteGraph) -> std::result::Result<(), String> {
        let mut covered = VertexSet::EMPTY;
        let mut claim = |v: usize| -> std::result::Result<(), String> {
            if v >= g.n() {
                return Err(format!("vertex {v} is out of range"));
            }
            if covered.contains(v) {
                return Err(format!("vertex {v} is covered twice"));
            }
            covered.insert(v);
            Ok(())
        };
        for &[u, v] in &self.edges {
            claim(u)?;
            claim(v)?;
            if !g.has_edge(u, v) {
                return Err(format!("{u}-{v} is not an edge"));
            }
        }
        for cycle in &self.odd_cycles {
            if cycle.len() < 3 || cycle.len() % 2 == 0 {
                return Err(format!("cycle of length {} is not odd", cycle.len()));
            }
            for (i, &v) in cycle.iter().enumerate() {
                claim(v)?;
                let w = cycle[(i + 1) % cycle.len()];
                if !g.has_edge(v, w) {
                    return Err(format!("{v}-{w} is not an edge"));
                }
            }
        }
        if covered != g.vertices() {
            let missing = (g.vertices() - covered).first().unwrap_or(0);
            return Err(format!("vertex {missing} is not covered"));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &PartiteGraph) -> bool {
        self.validate(g).is_ok()
    }
}

/// A set `T` with `|N(T)| < |T|` and the independent core that also fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionViolation {
    pub t: VertexSet,
    pub neighborhood: VertexSet,
    /// Isolated vertices of `G[T]`.
    pub independent_core: VertexSet,
}

impl ExpansionViolation {
    fn from_set(g: &PartiteGraph, t: VertexSet) -> Self {
        let independent_core: VertexSet = t.iter().filter(|&v| g.neighbors(v).is_disjoint(t)).collect();
        ExpansionViolation {
            t,
            neighborhood: g.nbhd(t),
            independent_core,
        }
    }
}

/// Exhaustively checks `|N(S)| ≥ |S|` over independent sets `S`.
///
/// Independent sets are explored in lexicographic order with the bound
/// `|S| + |candidates| ≤ |N(S)|`; the first failing set is then closed under
/// adding independent vertices whose neighbourhood already lies in `N(S)`.
pub fn weak_expansion_audit(g: &PartiteGraph, limit: usize) -> Result<Option<ExpansionViolation>> {
    if g.n() > limit {
        return Err(Error::ResourceLimit {
            what: "weak expansion audit",
            n: g.n(),
            cap: limit,
        });
    }
    let Some(s) = first_violation(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY) else {
        return Ok(None);
    };
    let nb = g.nbhd(s);
    let closure: VertexSet = (g.vertices() - s - nb)
        .iter()
        .filter(|&v| g.neighbors(v).is_subset(nb))
        .collect();
    Ok(Some(ExpansionViolation::from_set(g, s | closure)))
}

fn first_violation(
    g: &PartiteGraph,
    chosen: VertexSet,
    candidates: VertexSet,
    nb: VertexSet,
) -> Option<VertexSet> {
    if chosen.len() > nb.len() {
        return Some(chosen);
    }
    if chosen.len() + candidates.len() <= nb.len() {
        return None;
    }
    for v in candidates {
        let later = candidates - VertexSet::full(v + 1);
        let found = first_violation(
            g,
            chosen | VertexSet::singleton(v),
            later - g.neighbors(v),
            nb | g.neighbors(v),
        );
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Augmenting-path matcher (Kuhn) over adjacency lists.
struct BipartiteMatcher<'a> {
    adj: &'a [Vec<usize>],
    match_left: Vec<Option<usize>>,
    match_right: Vec<Option<usize>>,
}

impl<'a> BipartiteMatcher<'a> {
    fn run(adj: &'a [Vec<usize>], right: usize) -> Self {
        let mut m = BipartiteMatcher {
            adj,
            match_left: vec![None; adj.len()],
            match_right: vec![None; right],
        };
        let mut seen = vec![false; right];
        for u in 0..adj.len() {
            seen.iter_mut().for_each(|s| *s = false);
            m.augment(u, &mut seen);
        }
        m
    }

    fn augment(&mut self, u: usize, seen: &mut [bool]) -> bool {
        for &w in &self.adj[u] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            let free = match self.match_right[w] {
                None => true,
                Some(other) => self.augment(other, seen),
            };
            if free {
                self.match_left[u] = Some(w);
                self.match_right[w] = Some(u);
                return true;
            }
        }
        false
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        self.match_left
            .iter()
            .enumerate()
            .filter_map(|(u, w)| w.map(|w| (u, w)))
            .collect()
    }

    /// Left vertices reachable by alternating paths from unmatched left
    /// vertices (König's construction).
    fn alternating_reach(&self) -> Vec<bool> {
        let mut left: Vec<bool> = self.match_left.iter().map(Option::is_none).collect();
        let mut right = vec![false; self.match_right.len()];
        let mut stack: Vec<usize> = (0..left.len()).filter(|&u| left[u]).collect();
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if right[w] {
                    continue;
                }
                right[w] = true;
                if let Some(next) = self.match_right[w] {
                    if !left[next] {
                        left[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        left
    }
}

/// Maximum matching of a bipartite graph with `left` and `right` vertices.
/// Repeated edges are ignored; output pairs are `(left, right)` sorted by left.
pub fn maximum_bipartite_matching(left: usize, right: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); left];
    for &(u, w) in edges {
        assert!(u < left && w < right, "edge ({u}, {w}) out of range");
        if !adj[u].contains(&w) {
            adj[u].push(w);
        }
    }
    BipartiteMatcher::run(&adj, right).pairs()
}

/// A perfect fractional matching, or a set violating `|N(T)| ≥ |T|`.
pub fn perfect_fractional_matching(
    g: &PartiteGraph,
) -> std::result::Result<FractionalMatching, ExpansionViolation> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let matcher = BipartiteMatcher::run(&adj, n);

    if matcher.match_left.iter().any(Option::is_none) {
        let left = matcher.alternating_reach();
        let t: VertexSet = (0..n).filter(|&v| left[v]).collect();
        return Err(ExpansionViolation::from_set(g, t));
    }

    let successor: Vec<usize> = matcher.match_left.iter().map(|w| w.expect("perfect")).collect();
    let mut visited = VertexSet::EMPTY;
    let mut cover = FractionalMatching::default();
    for start in 0..n {
        if visited.contains(start) {
            continue;
        }
        let mut cycle = vec![start];
        visited.insert(start);
        let mut v = successor[start];
        while v != start {
            cycle.push(v);
            visited.insert(v);
            v = successor[v];
        }
        if cycle.len() % 2 == 1 {
            cover.odd_cycles.push(cycle);
        } else {
            // start is the smallest id on its cycle
            for pair in cycle.chunks(2) {
                cover.edges.push([pair[0].min(pair[1]), pair[0].max(pair[1])]);
            }
        }
    }
    cover.edges.sort_unstable();
    Ok(cover)
}
