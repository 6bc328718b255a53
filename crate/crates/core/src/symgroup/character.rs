//! Irreducible characters of `Σ_n` by the Murnaghan–Nakayama rule.
//!
//! Shapes are handled through beta-sets: a partition with `r` parts maps to
//! the strictly decreasing `β_i = λ_i + r - i`. Removing a border strip of
//! length `k` replaces some `β` by `β - k` (when that slot is free) and the
//! strip's height is the number of beta values jumped over.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::Partition;

fn beta_set(shape: &Partition) -> Vec<usize> {
    let r = shape.len();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + r - 1 - i)
        .collect()
}

fn from_beta_set(mut betas: Vec<usize>) -> Partition {
    betas.sort_unstable_by(|a, b| b.cmp(a));
    let r = betas.len();
    Partition::from_unsorted(
        betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (r - 1 - i))
            .collect::<Vec<_>>(),
    )
}

/// All ways to remove a border strip of length `k`: `(remaining shape, height)`.
pub fn border_strips(shape: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let betas = beta_set(shape);
    let mut out = Vec::new();
    for (idx, &b) in betas.iter().enumerate() {
        if b < k || betas.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = betas.iter().filter(|&&x| x > target && x < b).count();
        let mut next = betas.clone();
        next[idx] = target;
        out.push((from_beta_set(next), height));
    }
    out
}

struct Mn<'a> {
    cycles: &'a [usize],
    memo: HashMap<(Partition, usize), BigInt>,
}

impl Mn<'_> {
    /// χ of `shape` on the cycle type `cycles[pos..]`.
    fn eval(&mut self, shape: &Partition, pos: usize) -> BigInt {
        if pos == self.cycles.len() {
            return if shape.is_empty() {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
        }
        let key = (shape.clone(), pos);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (rest, height) in border_strips(shape, self.cycles[pos]) {
            let v = self.eval(&rest, pos + 1);
            if height % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ_λ(ρ)`, consuming cycles of `ρ` from the largest down with a per-call
/// memo keyed by (remaining shape, remaining cycles).
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|λ| = {} but |ρ| = {}",
            lambda.size(),
            rho.size()
        )));
    }
    let mut mn = Mn {
        cycles: rho.parts(),
        memo: HashMap::new(),
    };
    Ok(mn.eval(lambda, 0))
}
