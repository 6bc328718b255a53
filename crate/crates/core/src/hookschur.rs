//! Hook Schur functions `HS_λ(x; y)`.
//!
//! A `(d0, d1)`-semistandard hook tableau fills the diagram of `λ` from the
//! ordered alphabet `x_1 < … < x_{d0} < y_1 < … < y_{d1}` so that rows and
//! columns weakly increase, `x` letters strictly increase down columns and
//! `y` letters strictly increase along rows. `HS_λ` is the sum over such
//! tableaux of the product of the letters' values.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, from_bigint, rat, Rational};
use crate::partitions::{Cell, Partition};

/// A letter of the two-sorted alphabet (0-based index within its sort).
/// The derived order puts every `X` before every `Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X(usize),
    Y(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookTableau {
    shape: Partition,
    /// Row-major entries.
    entries: Vec<Symbol>,
}

impl HookTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn entry(&self, c: Cell) -> Option<Symbol> {
        if !self.shape.contains_cell(c) {
            return None;
        }
        let offset: usize = self.shape.parts()[..c.row - 1].iter().sum();
        Some(self.entries[offset + c.col - 1])
    }

    /// `∏` of symbol values over all cells.
    pub fn weight(&self, xs: &[Rational], ys: &[Rational]) -> Rational {
        self.entries
            .iter()
            .map(|s| match *s {
                Symbol::X(i) => &xs[i],
                Symbol::Y(j) => &ys[j],
            })
            .fold(Rational::one(), |acc, v| acc * v)
    }

    /// Checks every semistandard hook condition from scratch.
    pub fn is_valid(&self) -> bool {
        self.shape.cells().all(|c| {
            let v = self.entry(c).expect("cell in shape");
            let left_ok = c.col == 1 || {
                let l = self.entry(Cell::new(c.row, c.col - 1)).unwrap();
                admissible_right_of(l, v)
            };
            let up_ok = c.row == 1 || {
                let u = self.entry(Cell::new(c.row - 1, c.col)).unwrap();
                admissible_below(u, v)
            };
            left_ok && up_ok
        })
    }
}

/// `v` may sit immediately right of `left`.
fn admissible_right_of(left: Symbol, v: Symbol) -> bool {
    match v {
        Symbol::X(_) => left <= v,
        Symbol::Y(_) => left < v,
    }
}

/// `v` may sit immediately below `up`.
fn admissible_below(up: Symbol, v: Symbol) -> bool {
    match v {
        Symbol::X(_) => up < v,
        Symbol::Y(_) => up <= v,
    }
}

/// Drives a row-major backtracking search and hands each complete filling to
/// `visit`.
fn backtrack(lambda: &Partition, d0: usize, d1: usize, mut visit: impl FnMut(&[Symbol])) {
    let cells: Vec<Cell> = lambda.cells().collect();
    let alphabet: Vec<Symbol> = (0..d0)
        .map(Symbol::X)
        .chain((0..d1).map(Symbol::Y))
        .collect();
    let row_start: Vec<usize> = lambda
        .parts()
        .iter()
        .scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        })
        .collect();

    fn go(
        pos: usize,
        cells: &[Cell],
        alphabet: &[Symbol],
        row_start: &[usize],
        filling: &mut Vec<Symbol>,
        visit: &mut dyn FnMut(&[Symbol]),
    ) {
        if pos == cells.len() {
            visit(filling);
            return;
        }
        let c = cells[pos];
        let left = (c.col > 1).then(|| filling[pos - 1]);
        let up = (c.row > 1).then(|| filling[row_start[c.row - 2] + c.col - 1]);
        for &v in alphabet {
            if left.is_some_and(|l| !admissible_right_of(l, v)) {
                continue;
            }
            if up.is_some_and(|u| !admissible_below(u, v)) {
                continue;
            }
            filling.push(v);
            go(pos + 1, cells, alphabet, row_start, filling, visit);
            filling.pop();
        }
    }

    go(
        0,
        &cells,
        &alphabet,
        &row_start,
        &mut Vec::new(),
        &mut visit,
    );
}

/// Every `(d0, d1)`-semistandard hook tableau of shape `λ`, each once.
pub fn enumerate_hook_tableaux(lambda: &Partition, d0: usize, d1: usize) -> Vec<HookTableau> {
    let mut out = Vec::new();
    backtrack(lambda, d0, d1, |entries| {
        out.push(HookTableau {
            shape: lambda.clone(),
            entries: entries.to_vec(),
        })
    });
    out
}

/// Number of hook tableaux, i.e. `HS_λ(1, …, 1; 1, …, 1)`.
pub fn count_hook_tableaux(lambda: &Partition, d0: usize, d1: usize) -> u64 {
    let mut n = 0;
    backtrack(lambda, d0, d1, |_| n += 1);
    n
}

/// `HS_λ(xs; ys)` summed over tableaux; `d0 = |xs|`, `d1 = |ys|`.
pub fn hs_evaluate(lambda: &Partition, xs: &[Rational], ys: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    backtrack(lambda, xs.len(), ys.len(), |entries| {
        let w = entries
            .iter()
            .map(|s| match *s {
                Symbol::X(i) => &xs[i],
                Symbol::Y(j) => &ys[j],
            })
            .fold(Rational::one(), |acc, v| acc * v);
        total += w;
    });
    total
}

/// The classical Schur polynomial `s_λ(xs)`.
pub fn schur_polynomial(lambda: &Partition, xs: &[Rational]) -> Rational {
    hs_evaluate(lambda, xs, &[])
}

/// `HS_λ(x; y) = ∏_{i,j} (x_i + y_j) · s_μ(x) · s_ν(y)` with
/// `(μ, ν) = mu_nu_split(λ, d0, d1)`.
///
/// Requires the rectangle `(d1^{d0}) ⊆ λ` and `(d0+1, d1+1) ∉ λ`; for
/// `d0, d1 ≥ 1` that is exactly `(d0, d1)` lying on the maximal skew hook.
pub fn hs_factorized(lambda: &Partition, xs: &[Rational], ys: &[Rational]) -> Result<Rational> {
    let (d0, d1) = (xs.len(), ys.len());
    if !lambda.contains_partition(&Partition::rectangle(d0, d1)) || !lambda.in_hook(d0, d1) {
        return Err(Error::HypothesisFails(format!(
            "factorization hypothesis fails for {lambda} with (d0|d1) = ({d0}|{d1})"
        )));
    }
    let (mu, nu) = lambda.mu_nu_split(d0, d1);
    let mut cross = Rational::one();
    for x in xs {
        for y in ys {
            cross *= x + y;
        }
    }
    Ok(cross * schur_polynomial(&mu, xs) * schur_polynomial(&nu, ys))
}

/// `s_λ(1^n) = (dim V_λ / |λ|!) · cp_λ(n)`.
pub fn principal_specialization(lambda: &Partition, n: usize) -> Rational {
    from_bigint(lambda.dim_irrep()) / from_bigint(factorial(lambda.size()))
        * lambda.content_polynomial_at(&rat(n as i64))
}
