//! Exhaustive and sampled enumeration of vertex subsets within a size range.

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::SearchMode;
use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Largest `n` for which exhaustive enumeration is attempted at all.
const ENUMERATION_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Candidate {
    pub set: VertexSet,
    pub key: i64,
}

/// All subsets of `0..n` with `lo ≤ |S| ≤ hi`, or a seeded sample of them.
#[derive(Debug)]
pub(crate) struct SubsetSearch {
    n: usize,
    lo: usize,
    hi: usize,
    mode: SearchMode,
}

impl SubsetSearch {
    pub fn new(n: usize, lo: usize, hi: usize, mode: SearchMode, what: &'static str) -> Result<Self> {
        if let SearchMode::Exact { cap } = mode {
            let cap = cap.min(ENUMERATION_LIMIT);
            if n > cap {
                return Err(Error::ResourceLimit { what, n, cap });
            }
        }
        Ok(SubsetSearch {
            n,
            lo,
            hi: hi.min(n),
            mode,
        })
    }

    fn admissible(&self, mask: u64) -> bool {
        let c = mask.count_ones() as usize;
        self.lo <= c && c <= self.hi
    }

    fn samples(&self) -> Vec<VertexSet> {
        let SearchMode::Sampled { seed, samples } = self.mode else {
            return Vec::new();
        };
        if self.lo > self.hi {
            return Vec::new();
        }
        let sizes: Vec<usize> = (self.lo..=self.hi).collect();
        let weights: Vec<f64> = sizes.iter().map(|&s| binomial(self.n, s)).collect();
        let Ok(dist) = WeightedIndex::new(&weights) else {
            return Vec::new();
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                let size = sizes[dist.sample(&mut rng)];
                rand::seq::index::sample(&mut rng, self.n, size)
                    .into_iter()
                    .collect()
            })
            .collect()
    }

    /// Number of admissible sets examined (the whole family when exact).
    fn considered(&self) -> u64 {
        match self.mode {
            SearchMode::Exact { .. } if self.lo <= self.hi => {
                (self.lo..=self.hi).map(|s| binomial(self.n, s) as u64).sum()
            }
            SearchMode::Exact { .. } => 0,
            SearchMode::Sampled { samples, .. } => samples as u64,
        }
    }

    /// The admissible set of smallest bitmask (exact) or earliest sample
    /// satisfying `pred`.
    pub fn first(&self, pred: impl Fn(VertexSet) -> bool + Sync) -> (Option<VertexSet>, u64) {
        let found = match self.mode {
            SearchMode::Exact { .. } => (0..1u64 << self.n)
                .into_par_iter()
                .filter(|&m| self.admissible(m))
                .map(|m| VertexSet::from_bits(m as u128))
                .find_first(|&s| pred(s)),
            SearchMode::Sampled { .. } => self.samples().into_iter().find(|&s| pred(s)),
        };
        (found, self.considered())
    }

    /// Among sets where `key` returns a value, the one with the smallest
    /// `(key, bitmask)`.
    pub fn best(&self, key: impl Fn(VertexSet) -> Option<i64> + Sync) -> Option<Candidate> {
        let rank = |c: &Candidate| (c.key, c.set.bits());
        let evaluate = |s: VertexSet| key(s).map(|k| Candidate { set: s, key: k });
        match self.mode {
            SearchMode::Exact { .. } => (0..1u64 << self.n)
                .into_par_iter()
                .filter(|&m| self.admissible(m))
                .filter_map(|m| evaluate(VertexSet::from_bits(m as u128)))
                .min_by_key(rank),
            SearchMode::Sampled { .. } => self
                .samples()
                .into_par_iter()
                .filter_map(evaluate)
                .min_by_key(rank),
        }
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
