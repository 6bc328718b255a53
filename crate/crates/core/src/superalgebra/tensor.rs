use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{EvenSuperMap, RatMatrix, SuperSpace};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::partitions::Partition;
use crate::symgroup::{central_idempotent, GroupAlgebraElement, Permutation};

pub const DEFAULT_MAX_ORACLE_DIM: usize = 20_000;

/// Environment variable overriding [`DEFAULT_MAX_ORACLE_DIM`].
pub const MAX_DIM_ENV: &str = "HOOKTRACE_MAX_DIM";

pub fn max_oracle_dim() -> usize {
    std::env::var(MAX_DIM_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORACLE_DIM)
}

fn tensor_dim(space: SuperSpace, r: usize) -> Result<usize> {
    let limit = max_oracle_dim();
    let mut dim: usize = 1;
    for _ in 0..r {
        dim = dim.saturating_mul(space.dim());
    }
    if dim > limit {
        return Err(Error::SizeGuard {
            what: "(d0+d1)^r",
            size: dim,
            limit,
        });
    }
    Ok(dim)
}

fn digits(mut idx: usize, base: usize, r: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for slot in out.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * base + d)
}

/// Image of the basis tensor `e_{i_1} ⊗ … ⊗ e_{i_r}` (0-based basis indices)
/// under `σ`: the factor at position `p` moves to position `σ(p)`, with sign
/// `(-1)^k` where `k` counts pairs `p < q` of odd factors with
/// `σ(p) > σ(q)`.
pub fn koszul_action(
    sigma: &Permutation,
    space: SuperSpace,
    factors: &[usize],
) -> (Vec<usize>, i64) {
    let mut out = vec![0; factors.len()];
    for (p, &i) in factors.iter().enumerate() {
        out[sigma.apply(p)] = i;
    }
    let odd: Vec<bool> = factors.iter().map(|&i| space.parity(i) == 1).collect();
    let sign = if sigma.masked_inversions(&odd).is_multiple_of(2) {
        1
    } else {
        -1
    };
    (out, sign)
}

/// A square matrix on `V^{⊗r}` together with the parity of each basis tensor.
///
/// Basis tensors are ordered lexicographically by their factor indices, the
/// first tensor position being most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigMatrix {
    space: SuperSpace,
    power: usize,
    matrix: RatMatrix,
    parities: Vec<u8>,
}

impl BigMatrix {
    fn from_matrix(space: SuperSpace, power: usize, matrix: RatMatrix) -> Self {
        let n = matrix.rows();
        let parities = (0..n)
            .map(|idx| {
                let odd = digits(idx, space.dim(), power)
                    .iter()
                    .filter(|&&i| space.parity(i) == 1)
                    .count();
                (odd % 2) as u8
            })
            .collect();
        Self {
            space,
            power,
            matrix,
            parities,
        }
    }

    pub fn identity(space: SuperSpace, power: usize) -> Result<Self> {
        let n = tensor_dim(space, power)?;
        Ok(Self::from_matrix(space, power, RatMatrix::identity(n)))
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        if self.power != other.power {
            return Err(Error::DegreeMismatch {
                expected: self.power,
                found: other.power,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            matrix: self.matrix.mul(&other.matrix)?,
            ..self.clone()
        })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Ordinary trace.
    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn dump(&self) -> String {
        self.matrix.dump()
    }
}

/// `Σ_i (-1)^{parity(i)} M[i, i]`.
pub fn super_trace_of(m: &BigMatrix) -> Rational {
    let mut acc = Rational::zero();
    for (i, &par) in m.parities.iter().enumerate() {
        let d = m.matrix.get(i, i);
        if par == 0 {
            acc += d;
        } else {
            acc -= d;
        }
    }
    acc
}

/// `super_trace_of(a · b)` without forming the product; zero entries of `a`
/// are skipped.
pub fn super_trace_of_product(a: &BigMatrix, b: &BigMatrix) -> Result<Rational> {
    a.check_compatible(b)?;
    let n = a.dim();
    let mut acc = Rational::zero();
    for i in 0..n {
        let mut row = Rational::zero();
        for k in 0..n {
            let x = a.matrix.get(i, k);
            if x.is_zero() {
                continue;
            }
            let y = b.matrix.get(k, i);
            if !y.is_zero() {
                row += x * y;
            }
        }
        if a.parities[i] == 0 {
            acc += row;
        } else {
            acc -= row;
        }
    }
    Ok(acc)
}

/// The Koszul-signed action of `σ` on `V^{⊗r}`, `r = deg σ`.
pub fn permutation_matrix(sigma: &Permutation, space: SuperSpace) -> Result<BigMatrix> {
    evaluate_algebra_element(&GroupAlgebraElement::basis(sigma.clone()), space)
}

/// `Σ_σ x_σ · permutation_matrix(σ)`.
pub fn evaluate_algebra_element(x: &GroupAlgebraElement, space: SuperSpace) -> Result<BigMatrix> {
    let r = x.degree();
    let n = tensor_dim(space, r)?;
    let base = space.dim();
    let mut m = RatMatrix::zeros(n, n);
    for col in 0..n {
        let src = digits(col, base, r);
        for (sigma, c) in x.terms() {
            let (dst, sign) = koszul_action(sigma, space, &src);
            let row = undigits(&dst, base);
            if sign > 0 {
                m.add_to(row, col, c);
            } else {
                m.add_to(row, col, &-c.clone());
            }
        }
    }
    Ok(BigMatrix::from_matrix(space, r, m))
}

/// `f_1 ⊗ … ⊗ f_r`. Even maps pick up no Koszul signs.
pub fn tensor_map(fs: &[EvenSuperMap]) -> Result<BigMatrix> {
    let Some(first) = fs.first() else {
        return Err(Error::SizeMismatch(
            "tensor_map needs at least one map".into(),
        ));
    };
    let space = first.space();
    if fs.iter().any(|f| f.space() != space) {
        return Err(Error::SpaceMismatch);
    }
    tensor_dim(space, fs.len())?;
    let mut m = first.full_matrix();
    for f in &fs[1..] {
        m = m.kron(&f.full_matrix());
    }
    Ok(BigMatrix::from_matrix(space, fs.len(), m))
}

/// `∏_cycles str(f_{σ^{l-1}(k)} ∘ … ∘ f_{σ(k)} ∘ f_k)`, each cycle started at
/// its minimal element `k`.
pub fn cycle_trace_product(sigma: &Permutation, fs: &[EvenSuperMap]) -> Result<Rational> {
    if sigma.degree() != fs.len() {
        return Err(Error::DegreeMismatch {
            expected: sigma.degree(),
            found: fs.len(),
        });
    }
    if let Some(first) = fs.first() {
        if fs.iter().any(|f| f.space() != first.space()) {
            return Err(Error::SpaceMismatch);
        }
    }
    let mut product = Rational::one();
    for cycle in sigma.cycles_zero_based() {
        let mut composite = fs[cycle[0]].clone();
        for &p in &cycle[1..] {
            composite = fs[p].compose(&composite)?;
        }
        product *= composite.supertrace();
        if product.is_zero() {
            break;
        }
    }
    Ok(product)
}

/// Graded dimension of `d_λ(V^{⊗|λ|})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SchurRank {
    pub total: usize,
    pub even_dim: usize,
    pub odd_dim: usize,
}

/// Rank of `d_λ` acting on `V^{⊗|λ|}`, split by parity.
///
/// Each `σ` permutes tensor factors, so `d_λ` preserves every weight space
/// (basis tensors sharing a multiset of factor indices). The matrix is block
/// diagonal over weight spaces and each block has a single parity; the rank
/// is summed block by block.
pub fn schur_rank(lambda: &Partition, space: SuperSpace) -> Result<SchurRank> {
    let r = lambda.size();
    let n = tensor_dim(space, r)?;
    let d = central_idempotent(lambda)?;
    let base = space.dim();

    let mut weights: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for idx in 0..n {
        let mut key = digits(idx, base, r);
        key.sort_unstable();
        weights.entry(key).or_default().push(idx);
    }

    let mut out = SchurRank {
        total: 0,
        even_dim: 0,
        odd_dim: 0,
    };
    for (key, members) in weights {
        let local: BTreeMap<usize, usize> = members
            .iter()
            .enumerate()
            .map(|(k, &idx)| (idx, k))
            .collect();
        let mut block = RatMatrix::zeros(members.len(), members.len());
        for (col, &idx) in members.iter().enumerate() {
            let src = digits(idx, base, r);
            for (sigma, c) in d.terms() {
                let (dst, sign) = koszul_action(sigma, space, &src);
                let row = local[&undigits(&dst, base)];
                block.add_to(row, col, &(c * rat(sign)));
            }
        }
        let rank = block.rank();
        let odd = key.iter().filter(|&&i| space.parity(i) == 1).count() % 2 == 1;
        out.total += rank;
        if odd {
            out.odd_dim += rank;
        } else {
            out.even_dim += rank;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::frac;
    use crate::partitions::partitions_up_to;
    use crate::rng::stream;
    use crate::superalgebra::parity_projections;
    use crate::symgroup::{all_permutations, young_symmetrizer};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_swaps() {
        let v = SuperSpace::new(2, 1);
        assert_eq!(
            permutation_matrix(&Permutation::identity(3), v).unwrap(),
            BigMatrix::identity(v, 3).unwrap()
        );

        let swap = perm("2,1");
        let odd = permutation_matrix(&swap, SuperSpace::new(0, 1)).unwrap();
        assert_eq!(odd.matrix().get(0, 0), &rat(-1));

        let even = permutation_matrix(&swap, SuperSpace::new(1, 0)).unwrap();
        assert_eq!(even.matrix().get(0, 0), &rat(1));
    }

    #[test]
    fn super_trace_examples() {
        let v = SuperSpace::new(1, 1);
        assert_eq!(super_trace_of(&BigMatrix::identity(v, 2).unwrap()), rat(0));
        assert_eq!(
            super_trace_of(&BigMatrix::identity(SuperSpace::new(3, 0), 4).unwrap()),
            rat(81)
        );
        // ee and oo are fixed by the swap (oo with sign -1, parity even);
        // eo and oe are exchanged. Hence 1 + (-1) = 0 = str(id) on (1|1).
        let swap = permutation_matrix(&perm("2,1"), v).unwrap();
        assert_eq!(super_trace_of(&swap), rat(0));
        let id = EvenSuperMap::identity(v);
        assert_eq!(
            cycle_trace_product(&perm("2,1"), &[id.clone(), id]).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn functoriality() {
        for v in [SuperSpace::new(1, 1), SuperSpace::new(2, 1)] {
            for r in 1..=4 {
                let mats: Vec<_> = all_permutations(r)
                    .map(|s| (s.clone(), permutation_matrix(&s, v).unwrap()))
                    .collect();
                for (s, ms) in &mats {
                    for (t, mt) in &mats {
                        let st = permutation_matrix(&s.compose(t).unwrap(), v).unwrap();
                        assert_eq!(ms.mul(mt).unwrap(), st);
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let v = SuperSpace::new(1, 1);
        let x = young_symmetrizer(&p("2,1")).unwrap();
        let y = central_idempotent(&p("2,1")).unwrap();
        let lhs = evaluate_algebra_element(&x.multiply(&y).unwrap(), v).unwrap();
        let rhs = evaluate_algebra_element(&x, v)
            .unwrap()
            .mul(&evaluate_algebra_element(&y, v).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            evaluate_algebra_element(&GroupAlgebraElement::identity(3), v).unwrap(),
            BigMatrix::identity(v, 3).unwrap()
        );
    }

    #[test]
    fn antisymmetrizer_images() {
        let d = central_idempotent(&p("1,1")).unwrap();
        assert!(evaluate_algebra_element(&d, SuperSpace::new(1, 0))
            .unwrap()
            .is_zero());
        let m = evaluate_algebra_element(&d, SuperSpace::new(1, 1)).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.mul(&m).unwrap(), m);
    }

    #[test]
    fn tensor_map_examples() {
        let v = SuperSpace::new(1, 1);
        let id = EvenSuperMap::identity(v);
        assert_eq!(
            tensor_map(&[id.clone(), id]).unwrap(),
            BigMatrix::identity(v, 2).unwrap()
        );
        let (p0, p1) = parity_projections(v);
        let m = tensor_map(&[p0, p1]).unwrap();
        assert_eq!(m.rank(), 1);
        // e_even ⊗ e_odd has index 0*2 + 1.
        assert_eq!(m.matrix().get(1, 1), &rat(1));
        let f = EvenSuperMap::random(SuperSpace::new(2, 1), &mut stream(3, 0));
        assert_eq!(
            tensor_map(std::slice::from_ref(&f)).unwrap().matrix(),
            &f.full_matrix()
        );
        assert!(tensor_map(&[]).is_err());
    }

    #[test]
    fn cycle_products() {
        let v = SuperSpace::new(2, 1);
        let fs: Vec<_> = (0..3)
            .map(|k| EvenSuperMap::random(v, &mut stream(5, k)))
            .collect();
        let id = cycle_trace_product(&Permutation::identity(3), &fs).unwrap();
        let expected: Rational = fs.iter().map(|f| f.supertrace()).product();
        assert_eq!(id, expected);

        let full = cycle_trace_product(
            &perm("2,3,1"),
            &[fs[0].clone(), fs[0].clone(), fs[0].clone()],
        )
        .unwrap();
        assert_eq!(full, fs[0].pow(3).supertrace());

        let swap = cycle_trace_product(&perm("2,1"), &fs[..2]).unwrap();
        assert_eq!(swap, fs[1].compose(&fs[0]).unwrap().supertrace());
        assert!(cycle_trace_product(&perm("2,1"), &fs).is_err());
    }

    #[test]
    fn schur_rank_examples() {
        let line = SuperSpace::new(1, 0);
        let zero = SchurRank {
            total: 0,
            even_dim: 0,
            odd_dim: 0,
        };
        assert_eq!(schur_rank(&p("1,1"), line).unwrap(), zero);
        assert_eq!(
            schur_rank(&p("2"), line).unwrap(),
            SchurRank {
                total: 1,
                even_dim: 1,
                odd_dim: 0
            }
        );
        assert_eq!(
            schur_rank(&p("1,1"), SuperSpace::new(1, 1)).unwrap(),
            SchurRank {
                total: 2,
                even_dim: 1,
                odd_dim: 1
            }
        );
    }

    #[test]
    fn blocked_rank_matches_dense_rank() {
        for l in partitions_up_to(1, 4) {
            for v in [
                SuperSpace::new(1, 1),
                SuperSpace::new(2, 1),
                SuperSpace::new(0, 2),
            ] {
                let d = central_idempotent(&l).unwrap();
                let dense = evaluate_algebra_element(&d, v).unwrap();
                let blocked = schur_rank(&l, v).unwrap();
                assert_eq!(blocked.total, dense.rank(), "{l} on {v}");
                // An idempotent's rank is its trace; the parity-weighted
                // trace separates the graded pieces.
                let tr = dense.trace();
                let str = super_trace_of(&dense);
                assert_eq!(tr, rat(blocked.total as i64));
                assert_eq!(str, rat(blocked.even_dim as i64 - blocked.odd_dim as i64));
            }
        }
    }

    #[test]
    fn size_guard() {
        let v = SuperSpace::new(5, 5);
        assert!(matches!(
            BigMatrix::identity(v, 5),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn product_supertrace_matches_dense_product() {
        let v = SuperSpace::new(1, 2);
        let fs: Vec<_> = (0..3)
            .map(|k| EvenSuperMap::random(v, &mut stream(9, k)))
            .collect();
        let t = tensor_map(&fs).unwrap();
        let x = young_symmetrizer(&p("2,1")).unwrap().scale(&frac(3, 2));
        let m = evaluate_algebra_element(&x, v).unwrap();
        assert_eq!(
            super_trace_of_product(&m, &t).unwrap(),
            super_trace_of(&m.mul(&t).unwrap())
        );
    }
}
