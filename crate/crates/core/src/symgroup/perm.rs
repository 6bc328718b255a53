use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactmath::factorial;
use crate::partitions::Partition;

/// A bijection of `{1, …, n}`, stored 0-based as the list of images.
///
/// Products compose right to left: `(σ·τ)(p) = σ(τ(p))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// From 1-based images (one-line notation).
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::Parse("one-line notation is 1-based".into()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// From 1-based cycles on `n` points; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} on {n} points")));
                }
                touched[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of the 0-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&p| self.images[p]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles covering every point, each written
    /// `(k, σ(k), σ²(k), …)` from its minimal element, 1-based, ordered by
    /// that minimal element.
    pub fn cycle_decomposition(&self) -> Vec<Vec<usize>> {
        self.cycles_zero_based()
            .into_iter()
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    pub(crate) fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(
            self.cycles_zero_based()
                .iter()
                .map(|c| c.len())
                .collect::<Vec<_>>(),
        )
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles_zero_based().len()
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.num_cycles()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of inversions restricted to positions selected by `mask`:
    /// pairs `p < q` with `σ(p) > σ(q)` and both `mask[p]`, `mask[q]` set.
    pub fn masked_inversions(&self, mask: &[bool]) -> usize {
        let marked: Vec<usize> = (0..self.degree())
            .filter(|&p| mask[p])
            .map(|p| self.images[p])
            .collect();
        marked
            .iter()
            .enumerate()
            .map(|(i, a)| marked[i + 1..].iter().filter(|b| a > b).count())
            .sum()
    }
}

/// Every permutation of `n` points in lexicographic order of image lists.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let it: Box<dyn Iterator<Item = Permutation>> = if n == 0 {
        Box::new(std::iter::once(Permutation::identity(0)))
    } else {
        Box::new((0..n).permutations(n).map(|images| Permutation { images }))
    };
    it
}

/// `z_ρ = ∏_k k^{m_k} m_k!` where `m_k` counts parts equal to `k`.
pub fn centralizer_order(rho: &Partition) -> BigInt {
    rho.parts()
        .iter()
        .copied()
        .counts()
        .into_iter()
        .fold(BigInt::one(), |acc, (k, m)| {
            acc * BigInt::from(k).pow(m as u32) * factorial(m)
        })
}

/// Size of the conjugacy class of cycle type `ρ` in `Σ_{|ρ|}`.
pub fn class_size(rho: &Partition) -> BigInt {
    factorial(rho.size()) / centralizer_order(rho)
}

/// One-line notation, 1-based: `2,3,1`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Accepts one-line notation `"2,3,1"` or cycle notation `"(1 2 3)(4 5)"`.
/// In cycle notation the degree is the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid permutation {s:?}"));
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk.strip_prefix('(').ok_or_else(bad)?;
                let cycle = body
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            let n = cycles.iter().flatten().copied().max().unwrap_or(0);
            Self::from_cycles(n, &cycles)
        } else if s.is_empty() {
            Ok(Self::identity(0))
        } else {
            let images = s
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Self::from_one_line(&images)
        }
    }
}
