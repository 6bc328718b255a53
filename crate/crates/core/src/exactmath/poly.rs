use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{is_negative, render_rational, Rational};

/// The four variables of the trace-polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A0,
    A1,
    T0,
    T1,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::A0, Var::A1, Var::T0, Var::T1];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A0 => "a0",
            Var::A1 => "a1",
            Var::T0 => "t0",
            Var::T1 => "t1",
        }
    }
}

/// Exponents of `(a0, a1, t0, t1)`.
pub type Exponents = [u32; 4];

fn total_degree(e: &Exponents) -> u32 {
    e.iter().sum()
}

/// Sparse polynomial in `a0, a1, t0, t1` with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Self::monomial(Rational::one(), e)
    }

    pub fn monomial(c: Rational, exps: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Highest power of `v` occurring in any term.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `(a0, a1, t0, t1)`.
    pub fn eval(&self, at: &[Rational; 4]) -> Rational {
        let mut sum = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in at.iter().zip(e.iter()) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += term;
        }
        sum
    }

    /// Substitutes a value for one variable; the result no longer involves it.
    pub fn substitute(&self, v: Var, value: &Rational) -> Self {
        let i = v.index();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[i] = 0;
            let factor = num_traits::pow(value.clone(), e[i] as usize);
            out.add_term(e2, c * factor);
        }
        out
    }

    /// Substitutes `t0 := t0_val` and `t1 := t1_val`, leaving a polynomial in
    /// `a0, a1` only.
    pub fn substitute_pair(&self, t0_val: &Rational, t1_val: &Rational) -> Self {
        self.substitute(Var::T0, t0_val).substitute(Var::T1, t1_val)
    }

    /// Terms in rendering order: total degree descending, then exponent
    /// tuples in descending lexicographic order.
    fn ordered_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| total_degree(b).cmp(&total_degree(a)).then_with(|| b.cmp(a)));
        v
    }
}

fn render_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match e[v.index()] {
            0 => {}
            1 => parts.push(v.name().to_string()),
            k => parts.push(format!("{}^{}", v.name(), k)),
        }
    }
    parts.join("*")
}

/// `1*a0^2 - 2*a0*a1 + 1*a1^2`; the zero polynomial renders as `0`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let negative = is_negative(c);
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            write!(f, "{}", render_rational(&magnitude))?;
            let mono = render_monomial(e);
            if !mono.is_empty() {
                write!(f, "*{mono}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for MultiPoly {
    fn product<I: Iterator<Item = MultiPoly>>(iter: I) -> Self {
        iter.fold(MultiPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, rat};
    use proptest::prelude::*;

    fn a0() -> MultiPoly {
        MultiPoly::var(Var::A0)
    }
    fn a1() -> MultiPoly {
        MultiPoly::var(Var::A1)
    }
    fn t0() -> MultiPoly {
        MultiPoly::var(Var::T0)
    }
    fn t1() -> MultiPoly {
        MultiPoly::var(Var::T1)
    }

    fn point(a: i64, b: i64, c: i64, d: i64) -> [Rational; 4] {
        [rat(a), rat(b), rat(c), rat(d)]
    }

    #[test]
    fn identities() {
        let p = &(&a0() * &t1()) + &MultiPoly::constant(frac(3, 2));
        assert_eq!(&MultiPoly::zero() + &p, p);
        assert_eq!(&MultiPoly::one() * &p, p);
        let prod = &a0() * &a1();
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(prod.coefficient(&[1, 1, 0, 0]), rat(1));
    }

    #[test]
    fn cancellation_prunes_terms() {
        let p = &a0() - &a0();
        assert!(p.is_zero());
        assert_eq!(p, MultiPoly::zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!((&a0() * &t0()).eval(&point(2, 0, 3, 0)), rat(6));
        assert_eq!((&a0() - &a1()).eval(&point(1, 1, 7, 9)), rat(0));
        assert_eq!((&a0() - &a1()).pow(2).eval(&point(3, 1, 0, 0)), rat(4));
    }

    #[test]
    fn substitute_pair_examples() {
        assert_eq!(
            t0().substitute_pair(&rat(5), &rat(-2)),
            MultiPoly::constant(rat(5))
        );
        let lin = &(&a0() * &t0()) + &(&a1() * &t1());
        assert_eq!(lin.substitute_pair(&rat(1), &rat(-1)), &a0() - &a1());
        let sq = &a0().pow(2) * &t1();
        assert_eq!(
            sq.substitute_pair(&rat(0), &rat(-3)),
            a0().pow(2).scale(&rat(-3))
        );
    }

    #[test]
    fn rendering() {
        let sq = (&a0() - &a1()).pow(2);
        assert_eq!(sq.to_string(), "1*a0^2 - 2*a0*a1 + 1*a1^2");
        let lin = &(&a0() * &t0()) + &(&a1() * &t1());
        assert_eq!(lin.to_string(), "1*a0*t0 + 1*a1*t1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::constant(frac(-1, 2)).to_string(), "-1/2");
        let mixed = &t0().pow(2).scale(&frac(1, 2)) - &MultiPoly::constant(rat(3));
        assert_eq!(mixed.to_string(), "1/2*t0^2 - 3");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::array::uniform4(0u32..4), arb_rational()), 0..20).prop_map(
            |terms| {
                terms
                    .into_iter()
                    .map(|(e, c)| MultiPoly::monomial(c, e))
                    .sum()
            },
        )
    }

    fn arb_point() -> impl Strategy<Value = [Rational; 4]> {
        prop::array::uniform4(arb_rational())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x in arb_point()) {
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }

        #[test]
        fn substitute_pair_agrees_with_eval(p in arb_poly(), x in arb_point()) {
            let sub = p.substitute_pair(&x[2], &x[3]);
            prop_assert_eq!(sub.degree_in(Var::T0), 0);
            prop_assert_eq!(sub.degree_in(Var::T1), 0);
            let probe = [x[0].clone(), x[1].clone(), rat(11), rat(-13)];
            prop_assert_eq!(sub.eval(&probe), p.eval(&x));
        }
    }
}
