//! Partitions of `n` and the threshold parameters derived from them.
//!
//! For a partition `P = (n₁ ≥ n₂ ≥ … ≥ n_k)` of `n`:
//!
//! * `λ` is the least index with `n₁ + … + n_λ ≥ ⌈(n+1)/2⌉`;
//! * `μ` is the least index with `n₁ + … + n_μ ≥ ⌊(n+1)/2 − n_μ/2⌋ + 1`;
//! * `f_i = n_i + (n₁ + … + n_i)` for `i < μ`, `f = max f_i` (0 when `μ = 1`);
//! * `g = ⌈n/2 + n_μ/2⌉`;
//! * `h₁ = ⌈n/2⌉ + n_λ`, `h₂ = ⌈n/2⌉ + ⌊⌈(n+1)/2⌉ / λ⌋`, `h = min(h₁, h₂)`;
//! * `Φ = max(f, g, h)`.
//!
//! The asymptotic variant drops the roundings in `g` and `h₂`
//! (`g = n/2 + n_μ/2`, `h₂ = n/2 + n/(2λ)`, `h₁ = n/2 + n_λ`) and keeps `λ`, `μ`.

use std::fmt;
use std::str::FromStr;

use num_traits::{FromPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// A non-increasing list of positive part sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a partition needs at least one part"));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::invalid(format!("part {} is zero", i + 1)));
        }
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "parts must be non-increasing, but part {} = {} < part {} = {}",
                w + 1,
                parts[w],
                w + 2,
                parts[w + 1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive sizes into a partition.
    pub fn from_sizes(mut sizes: Vec<usize>) -> Result<Self> {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(sizes)
    }

    pub fn balanced(part_size: usize, k: usize) -> Result<Self> {
        Partition::new(vec![part_size; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Size of part `i` (1-based, as in the threshold formulas).
    pub fn size(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// `n₁ + … + n_i` (1-based).
    pub fn prefix_sum(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.parts.first() == self.parts.last()
    }

    /// Largest part is at most `⌊n/2⌋`.
    pub fn parts_at_most_half(&self) -> bool {
        2 * self.parts[0] <= self.n()
    }

    pub fn lambda(&self) -> usize {
        compute_lambda(self)
    }

    pub fn mu(&self) -> usize {
        compute_mu(self)
    }

    pub fn exact_profile(&self) -> PartitionProfile<i64> {
        let n = self.n() as i64;
        let lambda = self.lambda();
        let mu = self.mu();
        let n_mu = self.size(mu) as i64;
        let n_lambda = self.size(lambda) as i64;
        let half_up = (n + 1) / 2; // ⌈n/2⌉
        let majority = (n + 2) / 2; // ⌈(n+1)/2⌉
        let g = (n + n_mu + 1) / 2;
        let h1 = half_up + n_lambda;
        let h2 = half_up + majority / lambda as i64;
        PartitionProfile::assemble(self.clone(), ProfileMode::Exact, lambda, mu, g, h1, h2)
    }

    pub fn asymptotic_profile(&self) -> PartitionProfile<Rational> {
        let n = self.n() as i64;
        let lambda = self.lambda();
        let mu = self.mu();
        let half = Rational::new(n, 2);
        let g = half + Rational::new(self.size(mu) as i64, 2);
        let h1 = half + Rational::from_integer(self.size(lambda) as i64);
        let h2 = half + Rational::new(n, 2 * lambda as i64);
        PartitionProfile::assemble(self.clone(), ProfileMode::Asymptotic, lambda, mu, g, h1, h2)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("`{}` is not a part size in `{s}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Least `λ` with `n₁ + … + n_λ ≥ ⌈(n+1)/2⌉`.
pub fn compute_lambda(p: &Partition) -> usize {
    let target = (p.n() + 2) / 2;
    let mut acc = 0;
    for (i, &size) in p.parts.iter().enumerate() {
        acc += size;
        if acc >= target {
            return i + 1;
        }
    }
    p.k()
}

/// Least `μ` with `n₁ + … + n_μ ≥ ⌊(n+1)/2 − n_μ/2⌋ + 1`, each candidate
/// tested against its own `n_μ`.
pub fn compute_mu(p: &Partition) -> usize {
    mu_candidates(p).position(|ok| ok).map_or(p.k(), |i| i + 1)
}

/// Truth value of the `μ` predicate for each candidate `1..=k`.
pub fn mu_candidates(p: &Partition) -> impl Iterator<Item = bool> + '_ {
    let n = p.n();
    let mut acc = 0;
    p.parts.iter().map(move |&size| {
        acc += size;
        acc > (n + 1 - size) / 2
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileMode {
    Exact,
    Asymptotic,
}

impl FromStr for ProfileMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(ProfileMode::Exact),
            "asymptotic" => Ok(ProfileMode::Asymptotic),
            other => Err(Error::Parse(format!("unknown profile mode `{other}`"))),
        }
    }
}

/// All threshold parameters of a partition, in vertex-count units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionProfile<T> {
    pub partition: Partition,
    pub mode: ProfileMode,
    pub lambda: usize,
    pub mu: usize,
    /// `f_1, …, f_{μ−1}`; empty when `μ = 1`.
    pub f_values: Vec<T>,
    pub f: T,
    pub g: T,
    pub h1: T,
    pub h2: T,
    pub h: T,
    pub phi: T,
}

impl<T> PartitionProfile<T>
where
    T: Copy + Ord + Zero + FromPrimitive,
{
    fn assemble(
        partition: Partition,
        mode: ProfileMode,
        lambda: usize,
        mu: usize,
        g: T,
        h1: T,
        h2: T,
    ) -> Self {
        let f_values: Vec<T> = (1..mu)
            .map(|i| T::from_usize(partition.size(i) + partition.prefix_sum(i)).expect("fits"))
            .collect();
        let f = f_values.iter().copied().max().unwrap_or_else(T::zero);
        let h = h1.min(h2);
        let phi = f.max(g).max(h);
        PartitionProfile {
            partition,
            mode,
            lambda,
            mu,
            f_values,
            f,
            g,
            h1,
            h2,
            h,
            phi,
        }
    }

    /// `Φ − n_i` for part `i` (1-based).
    pub fn threshold(&self, i: usize) -> T
    where
        T: std::ops::Sub<Output = T>,
    {
        self.phi - T::from_usize(self.partition.size(i)).expect("fits")
    }

    /// Smallest `i` with `f_i = Φ`, if any.
    pub fn maximizing_f_index(&self) -> Option<usize> {
        self.f_values.iter().position(|&v| v == self.phi).map(|i| i + 1)
    }

    pub fn map<U>(&self, mut conv: impl FnMut(T) -> U) -> PartitionProfile<U> {
        PartitionProfile {
            partition: self.partition.clone(),
            mode: self.mode,
            lambda: self.lambda,
            mu: self.mu,
            f_values: self.f_values.iter().map(|&v| conv(v)).collect(),
            f: conv(self.f),
            g: conv(self.g),
            h1: conv(self.h1),
            h2: conv(self.h2),
            h: conv(self.h),
            phi: conv(self.phi),
        }
    }
}

/// Profile in either mode, carried as rationals (integral in exact mode).
pub fn profile(p: &Partition, mode: ProfileMode) -> PartitionProfile<Rational> {
    match mode {
        ProfileMode::Exact => p.exact_profile().map(Rational::from_integer),
        ProfileMode::Asymptotic => p.asymptotic_profile(),
    }
}

/// All partitions of `n` into exactly `k` parts, lexicographically decreasing.
/// With `cap_half`, only those whose largest part is at most `⌊n/2⌋`.
pub fn enumerate_partitions(n: usize, k: usize, cap_half: bool) -> Result<Vec<Partition>> {
    if k == 0 || k > n {
        return Err(Error::invalid(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let cap = if cap_half { n / 2 } else { n };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill(n, k, cap, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, slots: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
        }
        return;
    }
    // every later slot needs at least 1, and no slot may exceed `max_part`
    if remaining < slots || remaining > slots * max_part {
        return;
    }
    let hi = max_part.min(remaining - (slots - 1));
    let lo = remaining.div_ceil(slots);
    for first in (lo..=hi).rev() {
        current.push(first);
        fill(remaining - first, slots - 1, first, current, out);
        current.pop();
    }
}
