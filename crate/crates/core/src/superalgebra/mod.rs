//! Brute-force super linear algebra.
//!
//! A super space `(d0|d1)` has basis vectors `0..d0` of even parity followed
//! by `d0..d0+d1` of odd parity. Only even (grading-preserving) maps are
//! modelled. Tensor powers carry the Koszul-signed action of `Σ_r`, and every
//! quantity here is computed on explicit matrices so it can certify the
//! closed-form routes in [`crate::tracepoly`] and [`crate::hookschur`].

mod matrix;
mod tensor;

pub use matrix::RatMatrix;
pub use tensor::{
    cycle_trace_product, evaluate_algebra_element, koszul_action, max_oracle_dim,
    permutation_matrix, schur_rank, super_trace_of, super_trace_of_product, tensor_map, BigMatrix,
    SchurRank, DEFAULT_MAX_ORACLE_DIM, MAX_DIM_ENV,
};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SuperSpace {
    pub d0: usize,
    pub d1: usize,
}

impl SuperSpace {
    pub fn new(d0: usize, d1: usize) -> Self {
        Self { d0, d1 }
    }

    pub fn dim(&self) -> usize {
        self.d0 + self.d1
    }

    /// 0 for even basis vectors, 1 for odd ones.
    pub fn parity(&self, basis: usize) -> usize {
        usize::from(basis >= self.d0)
    }
}

impl std::fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.d0, self.d1)
    }
}

/// A grading-preserving endomorphism, stored as its even and odd diagonal
/// blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSuperMap {
    space: SuperSpace,
    block0: RatMatrix,
    block1: RatMatrix,
}

impl EvenSuperMap {
    pub fn new(block0: RatMatrix, block1: RatMatrix) -> Result<Self> {
        if !block0.is_square() || !block1.is_square() {
            return Err(Error::SizeMismatch("even map blocks must be square".into()));
        }
        Ok(Self {
            space: SuperSpace::new(block0.rows(), block1.rows()),
            block0,
            block1,
        })
    }

    pub fn identity(space: SuperSpace) -> Self {
        Self {
            space,
            block0: RatMatrix::identity(space.d0),
            block1: RatMatrix::identity(space.d1),
        }
    }

    pub fn zero(space: SuperSpace) -> Self {
        Self {
            space,
            block0: RatMatrix::zeros(space.d0, space.d0),
            block1: RatMatrix::zeros(space.d1, space.d1),
        }
    }

    /// `diag(xs) ⊕ diag(ys)`.
    pub fn diagonal(xs: &[Rational], ys: &[Rational]) -> Self {
        Self {
            space: SuperSpace::new(xs.len(), ys.len()),
            block0: RatMatrix::diagonal(xs),
            block1: RatMatrix::diagonal(ys),
        }
    }

    /// `a0·π0 + a1·π1`.
    pub fn graded_scalar(space: SuperSpace, a0: &Rational, a1: &Rational) -> Self {
        Self {
            space,
            block0: RatMatrix::identity(space.d0).scale(a0),
            block1: RatMatrix::identity(space.d1).scale(a1),
        }
    }

    /// Entries drawn uniformly from `{-3, …, 3}`.
    pub fn random<R: Rng + ?Sized>(space: SuperSpace, rng: &mut R) -> Self {
        let mut block = |n: usize| {
            let mut m = RatMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, rat(rng.gen_range(-3..=3)));
                }
            }
            m
        };
        let block0 = block(space.d0);
        let block1 = block(space.d1);
        Self {
            space,
            block0,
            block1,
        }
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn block0(&self) -> &RatMatrix {
        &self.block0
    }

    pub fn block1(&self) -> &RatMatrix {
        &self.block1
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space,
            block0: self.block0.mul(&other.block0)?,
            block1: self.block1.mul(&other.block1)?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(Self {
            space: self.space,
            block0: self.block0.add(&other.block0)?,
            block1: self.block1.add(&other.block1)?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            space: self.space,
            block0: self.block0.scale(c),
            block1: self.block1.scale(c),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.space);
        for _ in 0..k {
            acc = acc.compose(self).expect("same space");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.block0.is_zero() && self.block1.is_zero()
    }

    /// `tr(block0) - tr(block1)`.
    pub fn supertrace(&self) -> Rational {
        self.block0.trace() - self.block1.trace()
    }

    /// Ordinary trace, ignoring the grading.
    pub fn trace(&self) -> Rational {
        self.block0.trace() + self.block1.trace()
    }

    /// The block-diagonal `(d0+d1)`-square matrix.
    pub fn full_matrix(&self) -> RatMatrix {
        let n = self.space.dim();
        let d0 = self.space.d0;
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..d0 {
            for j in 0..d0 {
                m.set(i, j, self.block0.get(i, j).clone());
            }
        }
        for i in 0..self.space.d1 {
            for j in 0..self.space.d1 {
                m.set(d0 + i, d0 + j, self.block1.get(i, j).clone());
            }
        }
        m
    }
}

/// The projections `(π0, π1)` onto the even and odd parts.
pub fn parity_projections(space: SuperSpace) -> (EvenSuperMap, EvenSuperMap) {
    let one = rat(1);
    let zero = rat(0);
    (
        EvenSuperMap::graded_scalar(space, &one, &zero),
        EvenSuperMap::graded_scalar(space, &zero, &one),
    )
}
