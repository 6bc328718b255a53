use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_traits::{One, Zero};

use super::character::character;
use super::perm::{all_permutations, Permutation};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, from_bigint, rat, Rational};
use crate::partitions::Partition;

/// Largest degree for which elements spanning all of `Σ_n` are materialized.
pub const MAX_MATERIALIZED_DEGREE: usize = 7;

fn guard_degree(n: usize) -> Result<()> {
    if n > MAX_MATERIALIZED_DEGREE {
        return Err(Error::SizeGuard {
            what: "group algebra degree",
            size: n,
            limit: MAX_MATERIALIZED_DEGREE,
        });
    }
    Ok(())
}

/// An element of the rational group algebra `ℚΣ_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::basis(Permutation::identity(degree))
    }

    pub fn basis(sigma: Permutation) -> Self {
        let mut x = Self::zero(sigma.degree());
        x.coeffs.insert(sigma, Rational::one());
        x
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Result<Self> {
        let mut x = Self::zero(degree);
        for (s, c) in terms {
            x.add_term(s, c)?;
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> Rational {
        self.coeffs
            .get(sigma)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, sigma: Permutation, c: Rational) -> Result<()> {
        if sigma.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: sigma.degree(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.coeffs.entry(sigma).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(s.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, v)| (s.clone(), v * c))
                .collect(),
        }
    }

    /// Convolution product `(Σ a_σ σ)(Σ b_τ τ) = Σ a_σ b_τ (σ·τ)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut acc: HashMap<Permutation, Rational> = HashMap::new();
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                *acc.entry(s.compose(t)?).or_insert_with(Rational::zero) += a * b;
            }
        }
        Ok(Self {
            degree: self.degree,
            coeffs: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }
}

/// Permutations preserving each block of points (0-based), with their signs.
fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    blocks
        .iter()
        .map(|block| {
            block
                .iter()
                .copied()
                .permutations(block.len())
                .map(|img| (block.clone(), img))
                .collect::<Vec<_>>()
        })
        .multi_cartesian_product()
        .map(|choice| {
            let mut images: Vec<usize> = (0..n).collect();
            for (src, dst) in choice {
                for (a, b) in src.into_iter().zip(dst) {
                    images[a] = b;
                }
            }
            Permutation::from_images(images).expect("block permutation")
        })
        .collect()
}

/// Rows and columns of the canonical tableau, which fills `1..n` row by row
/// (0-based here).
fn canonical_rows_cols(lambda: &Partition) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut rows = Vec::new();
    let mut next = 0;
    for &len in lambda.parts() {
        rows.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    let cols = (0..lambda.part(1))
        .map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    (rows, cols)
}

/// `e_λ = (dim V_λ / n!) · a_λ · b_λ` for the canonical tableau, where `a_λ`
/// sums the row stabilizer and `b_λ` is the signed sum over the column
/// stabilizer. Idempotent.
pub fn young_symmetrizer(lambda: &Partition) -> Result<GroupAlgebraElement> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let n = lambda.size();
    guard_degree(n)?;
    let (rows, cols) = canonical_rows_cols(lambda);
    let a = GroupAlgebraElement::from_terms(
        n,
        block_stabilizer(n, &rows)
            .into_iter()
            .map(|p| (p, Rational::one())),
    )?;
    let b = GroupAlgebraElement::from_terms(
        n,
        block_stabilizer(n, &cols).into_iter().map(|q| {
            let s = q.sign();
            (q, rat(s))
        }),
    )?;
    let scale = from_bigint(lambda.dim_irrep()) / from_bigint(factorial(n));
    Ok(a.multiply(&b)?.scale(&scale))
}

/// `d_λ = (dim V_λ / n!) Σ_σ χ_λ(σ) σ`, the central idempotent of the
/// `λ`-isotypic block.
pub fn central_idempotent(lambda: &Partition) -> Result<GroupAlgebraElement> {
    let n = lambda.size();
    guard_degree(n)?;
    let scale = from_bigint(lambda.dim_irrep()) / from_bigint(factorial(n));
    let mut chars: HashMap<Partition, Rational> = HashMap::new();
    let mut x = GroupAlgebraElement::zero(n);
    for sigma in all_permutations(n) {
        let rho = sigma.cycle_type();
        let c = match chars.get(&rho) {
            Some(c) => c.clone(),
            None => {
                let c = from_bigint(character(lambda, &rho)?) * &scale;
                chars.insert(rho, c.clone());
                c
            }
        };
        x.add_term(sigma, c)?;
    }
    Ok(x)
}
