//! Partitions and Young-diagram combinatorics.
//!
//! Cells are 1-indexed `(row, col)` pairs and `(i, j) ∈ λ` iff `λ_i ≥ j`.
//! Zero parts are never stored; the empty partition is an ordinary value.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, rat, MultiPoly, Rational, Var};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Partition {
    /// Builds a partition from parts, dropping zeros. Fails if the nonzero
    /// parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into();
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the nonzero parts into decreasing order.
    pub fn from_unsorted(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts: Vec<usize> = parts.into();
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.part(c.row) >= c.col
    }

    /// `μ ⊆ λ`: μ has no more parts than λ and `μ_i ≤ λ_i` throughout.
    pub fn contains_partition(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// The maximal hook `(λ_1, 1^{r-1})` together with its length
    /// `λ_1 + r - 1`.
    pub fn max_hook(&self) -> Result<(Partition, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let r = self.len();
        let mut hook = vec![self.0[0]];
        hook.extend(std::iter::repeat_n(1, r - 1));
        Ok((Partition(hook), self.0[0] + r - 1))
    }

    /// Removes the maximal hook: `(λ_2 - 1, …, λ_r - 1)` without zeros.
    pub fn strip_max_hook(&self) -> Result<Partition> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        Ok(Partition::from_unsorted(
            self.0[1..].iter().map(|p| p - 1).collect::<Vec<_>>(),
        ))
    }

    /// Cells `(i, j) ∈ λ` with `(i+1, j+1) ∉ λ`, in row-major order.
    pub fn max_skew_hook(&self) -> Vec<Cell> {
        self.cells()
            .filter(|c| !self.contains_cell(Cell::new(c.row + 1, c.col + 1)))
            .collect()
    }

    /// `h(i, j) = λ_i - j + λ'_j - i + 1`.
    pub fn hook_lengths(&self) -> BTreeMap<Cell, usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let h = self.part(c.row) - c.col + conj.part(c.col) - c.row + 1;
                (c, h)
            })
            .collect()
    }

    /// `dim V_λ = |λ|! / ∏ h(i, j)`.
    pub fn dim_irrep(&self) -> BigInt {
        let hooks: BigInt = self
            .hook_lengths()
            .values()
            .fold(BigInt::one(), |acc, &h| acc * BigInt::from(h));
        factorial(self.size()) / hooks
    }

    /// `cp_λ(t) = ∏ (t + j - i)` at a rational point.
    pub fn content_polynomial_at(&self, t: &Rational) -> Rational {
        self.cells()
            .map(|c| t + rat(c.content()))
            .fold(Rational::one(), |acc, f| acc * f)
    }

    /// `cp_λ` as a polynomial in the chosen variable.
    pub fn content_polynomial(&self, v: Var) -> MultiPoly {
        self.cells()
            .map(|c| &MultiPoly::var(v) + &MultiPoly::constant(rat(c.content())))
            .product()
    }

    /// `μ_i = max(δ_i - d1, 0)` and `ν_i = max(δ'_i - d0, 0)`, zeros dropped.
    pub fn mu_nu_split(&self, d0: usize, d1: usize) -> (Partition, Partition) {
        let shift = |p: &Partition, by: usize| {
            Partition::from_unsorted(
                p.0.iter()
                    .map(|&x| x.saturating_sub(by))
                    .collect::<Vec<_>>(),
            )
        };
        (shift(self, d1), shift(&self.conjugate(), d0))
    }

    /// True iff `(d0+1, d1+1) ∉ λ`, i.e. `λ_{d0+1} ≤ d1`.
    pub fn in_hook(&self, d0: usize, d1: usize) -> bool {
        self.part(d0 + 1) <= d1
    }

    /// Parts in text syntax; the empty partition renders as `0`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// All partitions of `n` in reverse lexicographic order, so `(n)` comes
/// first and `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of sizes `lo..=hi`, grouped by size.
pub fn partitions_up_to(lo: usize, hi: usize) -> Vec<Partition> {
    (lo..=hi).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Comma-separated parts; `""` and `"0"` both denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
