//! Exact computation and certification of trace polynomials of the symmetric
//! group acting on tensor powers of super vector spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactmath`]: arbitrary-precision rationals and sparse polynomials in
//!   the four variables `a0, a1, t0, t1`.
//! * [`partitions`]: Young-diagram combinatorics.
//! * [`symgroup`]: permutations, Murnaghan–Nakayama characters and the
//!   rational group algebra (Young symmetrizers, central idempotents).
//! * [`superalgebra`]: brute-force linear algebra on `V^{⊗r}` for a super
//!   space `V = (d0|d1)` with the Koszul-signed permutation action.
//! * [`hookschur`]: hook Schur functions via two-sorted semistandard tableaux.
//! * [`tracepoly`]: the trace polynomial, its factorization over the maximal
//!   skew hook and the accompanying vanishing/specialization checks.
//! * [`verify`]: deterministic sweep drivers producing report records.

pub mod error;
pub mod exactmath;
pub mod hookschur;
pub mod partitions;
pub mod rng;
pub mod superalgebra;
pub mod symgroup;
pub mod tracepoly;
pub mod verify;

pub use error::{Error, Result};
pub use exactmath::{MultiPoly, Rational, Var};
pub use partitions::{Cell, Partition};
pub use superalgebra::{BigMatrix, EvenSuperMap, SuperSpace};
pub use symgroup::{GroupAlgebraElement, Permutation};
