//! The k-partite graph type and its degree / neighbourhood primitives.

mod io;
mod vertex_set;

pub use io::GraphFile;
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{Partition, PartitionProfile};

/// A graph on `0..n` whose vertices are split into parts, with edges only
/// between different parts.
///
/// Parts are kept sorted by non-increasing size (stable with respect to the
/// order they were supplied in); [`PartiteGraph::input_label`] maps a sorted
/// part index back to its original position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartiteGraph {
    n: usize,
    parts: Vec<VertexSet>,
    input_order: Vec<usize>,
    part_of: Vec<usize>,
    adj: Vec<VertexSet>,
}

impl PartiteGraph {
    /// Edgeless graph with the given parts (vertex lists covering `0..n`).
    pub fn from_parts(n: usize, parts: &[Vec<usize>]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "graph",
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut seen = VertexSet::EMPTY;
        let mut sets = Vec::with_capacity(parts.len());
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::invalid(format!("part {i} is empty")));
            }
            let mut set = VertexSet::EMPTY;
            for &v in part {
                if v >= n {
                    return Err(Error::invalid(format!(
                        "part {i}: vertex {v} is out of range 0..{n}"
                    )));
                }
                if seen.contains(v) {
                    return Err(Error::invalid(format!(
                        "part {i}: vertex {v} appears in more than one part"
                    )));
                }
                seen.insert(v);
                set.insert(v);
            }
            sets.push(set);
        }
        if seen.len() != n {
            let missing = (VertexSet::full(n) - seen).first().unwrap_or(0);
            return Err(Error::invalid(format!(
                "parts do not cover the vertex set: vertex {missing} is missing"
            )));
        }
        let mut input_order: Vec<usize> = (0..sets.len()).collect();
        input_order.sort_by(|&a, &b| sets[b].len().cmp(&sets[a].len()));
        let parts: Vec<VertexSet> = input_order.iter().map(|&i| sets[i]).collect();
        let mut part_of = vec![0; n];
        for (i, part) in parts.iter().enumerate() {
            for v in *part {
                part_of[v] = i;
            }
        }
        Ok(PartiteGraph {
            n,
            parts,
            input_order,
            part_of,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Edgeless graph whose parts are consecutive id blocks of the given sizes.
    pub fn with_part_sizes(sizes: &[usize]) -> Result<Self> {
        let mut next = 0;
        let parts: Vec<Vec<usize>> = sizes
            .iter()
            .map(|&s| {
                let block = (next..next + s).collect();
                next += s;
                block
            })
            .collect();
        PartiteGraph::from_parts(next, &parts)
    }

    /// Complete multipartite graph with consecutive id blocks.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        let mut g = PartiteGraph::with_part_sizes(sizes)?;
        for v in 0..g.n {
            g.adj[v] = VertexSet::full(g.n) - g.parts[g.part_of[v]];
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Parts in non-increasing size order.
    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> VertexSet {
        self.parts[i]
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// Original (input) index of sorted part `i`.
    pub fn input_label(&self, i: usize) -> usize {
        self.input_order[i]
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn partition(&self) -> Partition {
        Partition::new(self.part_sizes()).expect("parts are non-empty and sorted")
    }

    /// Union of the parts that meet `s`.
    pub fn parts_meeting(&self, s: VertexSet) -> VertexSet {
        self.parts
            .iter()
            .filter(|p| p.intersects(s))
            .fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        if self.part_of[u] == self.part_of[v] {
            return Err(Error::invalid(format!(
                "vertices {u} and {v} lie in the same part"
            )));
        }
        let fresh = !self.adj[u].contains(v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        true
    }

    /// Connects every cross-part pair `(u, v)` with `u ∈ a`, `v ∈ b`.
    pub fn connect_all(&mut self, a: VertexSet, b: VertexSet) {
        for u in a {
            for v in b {
                if u != v && self.part_of[u] != self.part_of[v] {
                    self.adj[u].insert(v);
                    self.adj[v].insert(u);
                }
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                (self.adj[u] - VertexSet::full(u + 1))
                    .iter()
                    .map(move |v| (u, v))
            })
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} is out of range 0..{}",
                self.n
            )));
        }
        Ok(())
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if !s.is_subset(self.vertices()) {
            let bad = (s - self.vertices()).first().unwrap_or(0);
            return Err(Error::invalid(format!(
                "vertex {bad} is out of range 0..{}",
                self.n
            )));
        }
        Ok(())
    }

    /// `N(S)`: vertices with at least one neighbour in `s`.
    pub fn neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.nbhd(s))
    }

    pub(crate) fn nbhd(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `d(v, S) = |N(v) ∩ S|`.
    pub fn degree_into(&self, v: usize, s: VertexSet) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok((self.adj[v] & s).len())
    }

    /// `δ(S)`: minimum degree over `s`.
    pub fn delta_set(&self, s: VertexSet) -> Result<usize> {
        self.check_set(s)?;
        s.iter()
            .map(|v| self.degree(v))
            .min()
            .ok_or_else(|| Error::invalid("minimum degree of an empty set"))
    }

    /// `δ(R, S)`: minimum over `v ∈ r` of `d(v, S)`.
    pub fn delta_between(&self, r: VertexSet, s: VertexSet) -> Result<usize> {
        self.check_set(r)?;
        self.check_set(s)?;
        r.iter()
            .map(|v| (self.adj[v] & s).len())
            .min()
            .ok_or_else(|| Error::invalid("minimum degree over an empty set"))
    }

    /// `e(A, B)` for disjoint `a`, `b`.
    pub fn edge_count_across(&self, a: VertexSet, b: VertexSet) -> Result<usize> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.intersects(b) {
            return Err(Error::invalid(format!(
                "sets overlap in {}",
                a & b
            )));
        }
        Ok(self.crossing(a, b))
    }

    pub(crate) fn crossing(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter().map(|v| (self.adj[v] & b).len()).sum()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `Δ(G[S])`: largest degree inside the induced subgraph (0 when empty).
    pub fn max_internal_degree(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).max().unwrap_or(0)
    }

    /// Per-part check of `δ(V_i) ≥ Φ − n_i + slack`.
    pub fn check_degree_condition(
        &self,
        profile: &PartitionProfile<i64>,
        slack: i64,
    ) -> Result<DegreeReport> {
        if profile.partition.parts() != self.part_sizes().as_slice() {
            return Err(Error::invalid(format!(
                "profile was computed for partition {} but the graph has part sizes {}",
                profile.partition,
                self.partition()
            )));
        }
        let mut min_degrees = Vec::with_capacity(self.k());
        let mut thresholds = Vec::with_capacity(self.k());
        let mut slack_per_part = Vec::with_capacity(self.k());
        for (i, part) in self.parts.iter().enumerate() {
            let delta = part.iter().map(|v| self.degree(v)).min().unwrap_or(0);
            let threshold = profile.threshold(i + 1) + slack;
            min_degrees.push(delta);
            thresholds.push(threshold);
            slack_per_part.push(delta as i64 - threshold);
        }
        let worst_part = slack_per_part
            .iter()
            .enumerate()
            .min_by_key(|&(_, s)| *s)
            .map_or(0, |(i, _)| i);
        Ok(DegreeReport {
            slack,
            pass: slack_per_part.iter().all(|&s| s >= 0),
            min_degrees,
            thresholds,
            slack_per_part,
            worst_part,
        })
    }
}

/// Outcome of checking `δ(V_i) ≥ Φ − n_i + c` part by part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    /// The additive slack `c`.
    pub slack: i64,
    pub min_degrees: Vec<usize>,
    pub thresholds: Vec<i64>,
    pub slack_per_part: Vec<i64>,
    pub pass: bool,
    /// Sorted part index with the smallest slack.
    pub worst_part: usize,
}

impl DegreeReport {
    pub fn min_slack(&self) -> i64 {
        self.slack_per_part.iter().copied().min().unwrap_or(0)
    }
}
