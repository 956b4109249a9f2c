//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use kpartite::{PartiteGraph, Partition, VertexSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `(λ, μ, f, g, h1, h2, Φ)` straight from the definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub lambda: usize,
    pub mu: usize,
    pub f: i64,
    pub g: i64,
    pub h1: i64,
    pub h2: i64,
    pub phi: i64,
}

pub fn oracle_params(parts: &[usize]) -> Params {
    let n = parts.iter().sum::<usize>() as i64;
    let prefix = |i: usize| parts[..i].iter().sum::<usize>() as i64;
    let size = |i: usize| parts[i - 1] as i64;
    let half_up = (n + 2) / 2; // ⌈(n+1)/2⌉
    let lambda = (1..=parts.len()).find(|&l| prefix(l) >= half_up).unwrap();
    let mu = (1..=parts.len())
        .find(|&m| prefix(m) > (n + 1 - size(m)).div_euclid(2))
        .unwrap();
    let f = (1..mu).map(|i| size(i) + prefix(i)).max().unwrap_or(0);
    let g = (n + size(mu) + 1) / 2;
    let ceil_half = (n + 1) / 2;
    let h1 = ceil_half + size(lambda);
    let h2 = ceil_half + half_up / lambda as i64;
    let phi = f.max(g).max(h1.min(h2));
    Params {
        lambda,
        mu,
        f,
        g,
        h1,
        h2,
        phi,
    }
}

/// Number of partitions of `n` into exactly `k` parts, each at most `cap`.
pub fn count_partitions(n: usize, k: usize, cap: usize) -> usize {
    fn go(n: usize, k: usize, cap: usize, memo: &mut HashMap<(usize, usize, usize), usize>) -> usize {
        if k == 0 {
            return usize::from(n == 0);
        }
        if n < k || cap == 0 {
            return 0;
        }
        if let Some(&c) = memo.get(&(n, k, cap)) {
            return c;
        }
        let c = (1..=cap.min(n)).map(|first| go(n - first, k - 1, first, memo)).sum();
        memo.insert((n, k, cap), c);
        c
    }
    go(n, k, cap, &mut HashMap::new())
}

/// Random partition of `n` into `k` parts with largest part at most `n/2`.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Option<Partition> {
    for _ in 0..200 {
        let mut cuts: Vec<usize> = (1..n).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts[..k - 1].to_vec();
        cuts.sort_unstable();
        let mut sizes = Vec::with_capacity(k);
        let mut last = 0;
        for c in cuts.into_iter().chain([n]) {
            sizes.push(c - last);
            last = c;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        if 2 * sizes[0] <= n {
            return Partition::new(sizes).ok();
        }
    }
    None
}

/// Each cross-part pair becomes an edge with probability `p`.
pub fn random_partite(rng: &mut ChaCha8Rng, sizes: &[usize], p: f64) -> PartiteGraph {
    let mut g = PartiteGraph::with_part_sizes(sizes).unwrap();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.part_of(u) != g.part_of(v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Deletes edges in random order, each with probability `q`, as long as both
/// endpoints keep at least `need(part)` neighbours.
pub fn thin(rng: &mut ChaCha8Rng, g: &mut PartiteGraph, q: f64, need: impl Fn(usize) -> usize) {
    let mut edges = g.edges();
    edges.shuffle(rng);
    for (u, v) in edges {
        let ok = |x: usize, g: &PartiteGraph| g.degree(x) > need(g.part_of(x));
        if ok(u, g) && ok(v, g) && rng.gen_bool(q) {
            g.remove_edge(u, v);
        }
    }
}

/// Minimum degree of each part.
pub fn part_min_degrees(g: &PartiteGraph) -> Vec<usize> {
    g.parts()
        .iter()
        .map(|p| p.iter().map(|v| g.neighbors(v).len()).min().unwrap())
        .collect()
}

/// Plain depth-first search over vertex orders starting at 0.
pub fn naive_hamiltonian(g: &PartiteGraph) -> bool {
    fn go(g: &PartiteGraph, v: usize, used: u128, count: usize) -> bool {
        if count == g.n() {
            return g.has_edge(v, 0);
        }
        (0..g.n()).any(|w| used >> w & 1 == 0 && g.has_edge(v, w) && go(g, w, used | 1 << w, count + 1))
    }
    match g.n() {
        0..=2 => false,
        _ => go(g, 0, 1, 1),
    }
}

/// Whether `seq` visits every vertex once along edges and closes up.
pub fn is_hamiltonian_cycle(g: &PartiteGraph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    if seq.len() != g.n() || g.n() < 3 {
        return false;
    }
    for (i, &v) in seq.iter().enumerate() {
        if v >= g.n() || seen[v] || !g.has_edge(v, seq[(i + 1) % seq.len()]) {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Whether the vertices can be covered by disjoint edges and odd cycles.
pub fn brute_force_cover(g: &PartiteGraph) -> bool {
    fn odd_cycles(g: &PartiteGraph, start: usize, v: usize, path: u128, len: usize, free: u128, memo: &mut HashMap<u128, bool>) -> bool {
        if len >= 3 && len % 2 == 1 && g.has_edge(v, start) && cover(g, free & !path, memo) {
            return true;
        }
        (0..g.n()).any(|w| {
            free >> w & 1 == 1
                && path >> w & 1 == 0
                && g.has_edge(v, w)
                && odd_cycles(g, start, w, path | 1 << w, len + 1, free, memo)
        })
    }
    fn cover(g: &PartiteGraph, free: u128, memo: &mut HashMap<u128, bool>) -> bool {
        if free == 0 {
            return true;
        }
        if let Some(&r) = memo.get(&free) {
            return r;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let r = (0..g.n()).any(|u| rest >> u & 1 == 1 && g.has_edge(v, u) && cover(g, rest & !(1 << u), memo))
            || odd_cycles(g, v, v, 1 << v, 1, free, memo);
        memo.insert(free, r);
        r
    }
    cover(g, (1u128 << g.n()) - 1, &mut HashMap::new())
}

/// `|N(S)|` computed vertex by vertex.
pub fn neighborhood_size(g: &PartiteGraph, s: VertexSet) -> usize {
    (0..g.n()).filter(|&v| s.iter().any(|u| g.has_edge(u, v))).count()
}

/// Vertices with at least `threshold` neighbours in `s`.
pub fn robust_count(g: &PartiteGraph, s: VertexSet, threshold: usize) -> usize {
    (0..g.n())
        .filter(|&v| s.iter().filter(|&u| g.has_edge(u, v)).count() >= threshold)
        .count()
}

/// Edges between `b` and its complement, counted pair by pair.
pub fn crossing(g: &PartiteGraph, b: VertexSet) -> usize {
    let mut c = 0;
    for u in b.iter() {
        for v in 0..g.n() {
            if !b.contains(v) && g.has_edge(u, v) {
                c += 1;
            }
        }
    }
    c
}

/// Whether `path` is a Hamiltonian path of the bipartite graph between the
/// two sides from `u` to `v`.
pub fn is_bipartite_path(g: &PartiteGraph, left: VertexSet, right: VertexSet, u: usize, v: usize, path: &[usize]) -> bool {
    let all = left | right;
    if path.len() != all.len() || path.first() != Some(&u) || path.last() != Some(&v) {
        return false;
    }
    let mut seen = VertexSet::EMPTY;
    for (i, &x) in path.iter().enumerate() {
        if !all.contains(x) || seen.contains(x) {
            return false;
        }
        seen.insert(x);
        if let Some(&y) = path.get(i + 1) {
            if left.contains(x) == left.contains(y) || !g.has_edge(x, y) {
                return false;
            }
        }
    }
    true
}

/// Degree-sequence test for bipartite Hamiltonian connectivity, evaluated
/// from scratch.
pub fn oracle_berge(g: &PartiteGraph, left: VertexSet, right: VertexSet) -> bool {
    let m = left.len();
    let first_low = |side: VertexSet, other: VertexSet| {
        let mut d: Vec<usize> = side
            .iter()
            .map(|x| other.iter().filter(|&y| g.has_edge(x, y)).count())
            .collect();
        d.sort_unstable();
        (1..=m).find(|&j| d[j - 1] <= j + 1).map(|j| d[j - 1])
    };
    match (first_low(left, right), first_low(right, left)) {
        (Some(a), Some(b)) => a + b >= m + 2,
        _ => true,
    }
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
