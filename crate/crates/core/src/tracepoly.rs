//! The trace polynomial
//!
//! ```text
//! P(δ; a0, a1; t0, t1) = (dim V_δ / r!) Σ_{σ ∈ Σ_r} χ_δ(σ) ∏_{cycles} (a0^l t0 + a1^l t1)
//! ```
//!
//! its factorization at `t0 = d0`, `t1 = -d1` for `(d0, d1)` on the maximal
//! skew hook of `δ`, and the function
//! `y(δ; f_1, …, f_r) = str(d_δ ∘ f_1 ⊗ … ⊗ f_r)` it comes from.
//!
//! `P(δ; 1, 0; t0, ·)` equals `((dim V_δ)² / |δ|!) · cp_δ(t0)`: it is the
//! content polynomial only up to that constant (already `1/2` at `δ = (2)`).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{factorial, from_bigint, rat, MultiPoly, Rational, Var};
use crate::partitions::{partitions_of, Cell, Partition};
use crate::rng::stream;
use crate::superalgebra::{
    cycle_trace_product, evaluate_algebra_element, parity_projections, schur_rank,
    super_trace_of_product, tensor_map, EvenSuperMap, SuperSpace,
};
use crate::symgroup::{all_permutations, central_idempotent, centralizer_order, character};

/// Largest `|δ|` accepted by [`p_polynomial`].
pub const MAX_DELTA_SIZE: usize = 12;

/// How the sum over `Σ_r` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMode {
    /// One term per cycle type, weighted by `1 / z_ρ`.
    Aggregated,
    /// One term per permutation; kept for cross-validation.
    Naive,
}

fn guard(delta: &Partition) -> Result<()> {
    if delta.size() > MAX_DELTA_SIZE {
        return Err(Error::SizeGuard {
            what: "|delta|",
            size: delta.size(),
            limit: MAX_DELTA_SIZE,
        });
    }
    Ok(())
}

/// `a0^k t0 + a1^k t1`, the image of the power sum `p_k`.
pub fn power_sum_image(k: usize) -> MultiPoly {
    let k = k as u32;
    &MultiPoly::monomial(Rational::one(), [k, 0, 1, 0])
        + &MultiPoly::monomial(Rational::one(), [0, k, 0, 1])
}

fn cycle_product(cycle_lengths: &[usize]) -> MultiPoly {
    cycle_lengths.iter().map(|&l| power_sum_image(l)).product()
}

fn dim_over_factorial(delta: &Partition) -> Rational {
    from_bigint(delta.dim_irrep()) / from_bigint(factorial(delta.size()))
}

/// `P(δ; a0, a1; t0, t1)` by cycle-type aggregation.
pub fn p_polynomial(delta: &Partition) -> Result<MultiPoly> {
    p_polynomial_with(delta, SumMode::Aggregated)
}

pub fn p_polynomial_with(delta: &Partition, mode: SumMode) -> Result<MultiPoly> {
    guard(delta)?;
    let r = delta.size();
    match mode {
        SumMode::Aggregated => {
            let dim = from_bigint(delta.dim_irrep());
            let mut total = MultiPoly::zero();
            for rho in partitions_of(r) {
                let chi = character(delta, &rho)?;
                if chi.is_zero() {
                    continue;
                }
                let weight = &dim * from_bigint(chi) / from_bigint(centralizer_order(&rho));
                total = &total + &cycle_product(rho.parts()).scale(&weight);
            }
            Ok(total)
        }
        SumMode::Naive => {
            let mut chars: HashMap<Partition, BigInt> = HashMap::new();
            let mut total = MultiPoly::zero();
            for sigma in all_permutations(r) {
                let rho = sigma.cycle_type();
                let chi = match chars.get(&rho) {
                    Some(c) => c.clone(),
                    None => {
                        let c = character(delta, &rho)?;
                        chars.insert(rho, c.clone());
                        c
                    }
                };
                if chi.is_zero() {
                    continue;
                }
                let lengths: Vec<usize> =
                    sigma.cycle_decomposition().iter().map(Vec::len).collect();
                total = &total + &cycle_product(&lengths).scale(&from_bigint(chi));
            }
            Ok(total.scale(&dim_over_factorial(delta)))
        }
    }
}

/// `P(δ; a0, a1; d0, -d1)`.
pub fn p_specialized(delta: &Partition, d0: usize, d1: usize) -> Result<MultiPoly> {
    Ok(p_polynomial(delta)?.substitute_pair(&rat(d0 as i64), &rat(-(d1 as i64))))
}

fn require_skew_hook(delta: &Partition, d0: usize, d1: usize) -> Result<()> {
    if !delta.max_skew_hook().contains(&Cell::new(d0, d1)) {
        return Err(Error::HypothesisFails(format!(
            "({d0}, {d1}) is not in the maximal skew hook of {delta}"
        )));
    }
    Ok(())
}

/// The closed form
/// `dim V_δ · (-1)^{|ν|} · (dim V_μ/|μ|!) · (dim V_ν/|ν|!) · (a0 - a1)^{d0 d1}
///  · a0^{|μ|} · a1^{|ν|} · cp_μ(d0) · cp_ν(d1)`.
pub fn prop32_rhs(delta: &Partition, d0: usize, d1: usize) -> Result<MultiPoly> {
    require_skew_hook(delta, d0, d1)?;
    let (mu, nu) = delta.mu_nu_split(d0, d1);
    let sign = if nu.size() % 2 == 0 { rat(1) } else { rat(-1) };
    let scalar = from_bigint(delta.dim_irrep())
        * sign
        * dim_over_factorial(&mu)
        * dim_over_factorial(&nu)
        * mu.content_polynomial_at(&rat(d0 as i64))
        * nu.content_polynomial_at(&rat(d1 as i64));
    let diff = &MultiPoly::var(Var::A0) - &MultiPoly::var(Var::A1);
    let monomial = MultiPoly::monomial(scalar, [mu.size() as u32, nu.size() as u32, 0, 0]);
    Ok(&diff.pow((d0 * d1) as u32) * &monomial)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub delta: Partition,
    pub d0: usize,
    pub d1: usize,
    #[serde(serialize_with = "display")]
    pub lhs: MultiPoly,
    #[serde(serialize_with = "display")]
    pub rhs: MultiPoly,
    pub equal: bool,
    pub nonzero: bool,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl FactorizationReport {
    pub fn new(delta: Partition, d0: usize, d1: usize, lhs: MultiPoly, rhs: MultiPoly) -> Self {
        Self {
            equal: lhs == rhs,
            nonzero: !lhs.is_zero(),
            delta,
            d0,
            d1,
            lhs,
            rhs,
        }
    }
}

/// Compares [`p_specialized`] with [`prop32_rhs`] as exact polynomials.
pub fn verify_prop32(delta: &Partition, d0: usize, d1: usize) -> Result<FactorizationReport> {
    require_skew_hook(delta, d0, d1)?;
    let lhs = p_specialized(delta, d0, d1)?;
    let rhs = prop32_rhs(delta, d0, d1)?;
    Ok(FactorizationReport::new(delta.clone(), d0, d1, lhs, rhs))
}

fn check_maps(delta: &Partition, fs: &[EvenSuperMap]) -> Result<()> {
    if fs.len() != delta.size() {
        return Err(Error::SizeMismatch(format!(
            "{} maps for |delta| = {}",
            fs.len(),
            delta.size()
        )));
    }
    if let Some(first) = fs.first() {
        if fs.iter().any(|f| f.space() != first.space()) {
            return Err(Error::SpaceMismatch);
        }
    }
    Ok(())
}

/// `y(δ; f_1, …, f_r)` through the cycle expansion
/// `(dim V_δ / r!) Σ_σ χ_δ(σ) ∏_cycles str(f_{σ^{l-1}k} ∘ … ∘ f_k)`.
pub fn y_function(delta: &Partition, fs: &[EvenSuperMap]) -> Result<Rational> {
    check_maps(delta, fs)?;
    let mut chars: HashMap<Partition, BigInt> = HashMap::new();
    let mut total = Rational::zero();
    for sigma in all_permutations(delta.size()) {
        let rho = sigma.cycle_type();
        let chi = match chars.get(&rho) {
            Some(c) => c.clone(),
            None => {
                let c = character(delta, &rho)?;
                chars.insert(rho, c.clone());
                c
            }
        };
        if chi.is_zero() {
            continue;
        }
        total += from_bigint(chi) * cycle_trace_product(&sigma, fs)?;
    }
    Ok(total * dim_over_factorial(delta))
}

/// `y` computed on explicit matrices: `str(d_δ · f_1 ⊗ … ⊗ f_r)` on `V^{⊗r}`.
pub fn y_matrix_oracle(delta: &Partition, fs: &[EvenSuperMap]) -> Result<Rational> {
    check_maps(delta, fs)?;
    let Some(first) = fs.first() else {
        return Ok(Rational::one());
    };
    let d = evaluate_algebra_element(&central_idempotent(delta)?, first.space())?;
    super_trace_of_product(&d, &tensor_map(fs)?)
}

/// `y(δ; g, …, g)`. With all maps equal the cycle product depends only on
/// the cycle type, so the sum runs over `ρ ⊢ r` with weight `1 / z_ρ`.
pub fn y_equal_maps(delta: &Partition, g: &EvenSuperMap) -> Result<Rational> {
    let r = delta.size();
    let powers: Vec<Rational> = (0..=r).map(|l| g.pow(l as u32).supertrace()).collect();
    let mut total = Rational::zero();
    for rho in partitions_of(r) {
        let chi = character(delta, &rho)?;
        if chi.is_zero() {
            continue;
        }
        let traces: Rational = rho.parts().iter().map(|&l| powers[l].clone()).product();
        total += from_bigint(chi) * traces / from_bigint(centralizer_order(&rho));
    }
    Ok(total * from_bigint(delta.dim_irrep()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RazmyslovReport {
    pub delta: Partition,
    pub d0: usize,
    pub d1: usize,
    pub seed: u64,
    #[serde(serialize_with = "rationals")]
    pub values: Vec<Rational>,
    pub all_zero: bool,
}

fn rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&crate::exactmath::render_rational(q))?;
    }
    seq.end()
}

/// Random even maps for trial `trial` of a seeded run.
pub fn random_maps(space: SuperSpace, count: usize, seed: u64, trial: u64) -> Vec<EvenSuperMap> {
    let mut rng = stream(seed, trial);
    (0..count)
        .map(|_| EvenSuperMap::random(space, &mut rng))
        .collect()
}

/// Evaluates `y(δ; f_1, …, f_r)` on `trials` seeded random tuples of even
/// maps on `(d0|d1)`. Requires `(d0+1, d1+1) ∈ δ`, where every value must
/// vanish.
pub fn razmyslov_vanishing_check(
    delta: &Partition,
    d0: usize,
    d1: usize,
    trials: usize,
    seed: u64,
) -> Result<RazmyslovReport> {
    if !delta.contains_cell(Cell::new(d0 + 1, d1 + 1)) {
        return Err(Error::HypothesisFails(format!(
            "({}, {}) is not a cell of {delta}",
            d0 + 1,
            d1 + 1
        )));
    }
    let space = SuperSpace::new(d0, d1);
    let values = (0..trials as u64)
        .map(|t| y_function(delta, &random_maps(space, delta.size(), seed, t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RazmyslovReport {
        all_zero: values.iter().all(Zero::is_zero),
        delta: delta.clone(),
        d0,
        d1,
        seed,
        values,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeligneReport {
    pub delta: Partition,
    pub d0: usize,
    pub d1: usize,
    #[serde(serialize_with = "display")]
    pub lhs: Rational,
    pub even_dim: usize,
    pub odd_dim: usize,
    pub agree: bool,
}

/// Compares `y(δ; π0 - π1)` with `dim Im(d_δ)^+ + dim Im(d_δ)^-`.
pub fn deligne_specialization_check(
    delta: &Partition,
    d0: usize,
    d1: usize,
) -> Result<DeligneReport> {
    let space = SuperSpace::new(d0, d1);
    let (p0, p1) = parity_projections(space);
    let g = p0.add(&p1.scale(&rat(-1)))?;
    let lhs = y_equal_maps(delta, &g)?;
    let rank = schur_rank(delta, space)?;
    Ok(DeligneReport {
        agree: lhs == rat((rank.even_dim + rank.odd_dim) as i64),
        delta: delta.clone(),
        d0,
        d1,
        lhs,
        even_dim: rank.even_dim,
        odd_dim: rank.odd_dim,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentReport {
    pub delta: Partition,
    #[serde(serialize_with = "display")]
    pub lhs: MultiPoly,
    #[serde(serialize_with = "display")]
    pub rhs: MultiPoly,
    pub equal: bool,
}

/// Compares `P(δ; 1, 0; t0, ·)` with `((dim V_δ)² / |δ|!) · cp_δ(t0)`.
pub fn content_specialization_check(delta: &Partition) -> Result<ContentReport> {
    let lhs = p_polynomial(delta)?
        .substitute(Var::A0, &rat(1))
        .substitute(Var::A1, &rat(0));
    let dim = from_bigint(delta.dim_irrep());
    let constant = &dim * &dim / from_bigint(factorial(delta.size()));
    let rhs = delta.content_polynomial(Var::T0).scale(&constant);
    Ok(ContentReport {
        equal: lhs == rhs,
        delta: delta.clone(),
        lhs,
        rhs,
    })
}

/// A point `(a0, a1)` with small integer coordinates at which
/// `P(δ; a0, a1; d0, -d1)` does not vanish, if the polynomial is nonzero.
pub fn nonvanishing_witness(
    delta: &Partition,
    d0: usize,
    d1: usize,
) -> Result<Option<(Rational, Rational)>> {
    let p = p_specialized(delta, d0, d1)?;
    if p.is_zero() {
        return Ok(None);
    }
    // A nonzero polynomial of degree ≤ r in each variable cannot vanish on
    // the whole (r+1) × (r+1) grid.
    let r = delta.size() as i64;
    for a in 0..=r + 1 {
        for b in 0..=r + 1 {
            let at = [rat(a), rat(b), rat(0), rat(0)];
            if !p.eval(&at).is_zero() {
                return Ok(Some((rat(a), rat(b))));
            }
        }
    }
    unreachable!("nonzero polynomial vanished on a full grid")
}
