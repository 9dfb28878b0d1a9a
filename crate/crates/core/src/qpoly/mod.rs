//! Exact bivariate polynomials in `q` and `t` with integer coefficients,
//! the closed-form products built from q-integers, and empirical joint
//! distributions of statistics over a whole group.

mod closed;
mod distribution;

pub use closed::*;
pub use distribution::*;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeTuple, Serializer};

/// Exponent pair `(a, b)` of the monomial `q^a t^b`.
pub type Exponents = (u32, u32);

/// Sparse polynomial; zero coefficients are never stored, and terms are kept
/// in ascending `q` exponent, then ascending `t` exponent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::monomial(0, 0, 1)
    }

    pub fn q() -> Self {
        BivarPoly::monomial(1, 0, 1)
    }

    pub fn t() -> Self {
        BivarPoly::monomial(0, 1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BivarPoly::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: impl Into<BigInt>) -> Self {
        BivarPoly::from_terms([((a, b), c.into())])
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = BivarPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BivarPoly::from_terms(self.terms.iter().map(|(&e, x)| (e, x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(BivarPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (&(a, b), c)| {
                acc + BigRational::from(c.clone()) * Pow::pow(q0, a) * Pow::pow(t0, b)
            })
    }

    /// Substitutes `q = 1`, leaving a polynomial in `t`.
    pub fn at_q_one(&self) -> Self {
        BivarPoly::from_terms(self.terms.iter().map(|(&(_, b), c)| ((0, b), c.clone())))
    }

    /// Substitutes `t = 1`, leaving a polynomial in `q`.
    pub fn at_t_one(&self) -> Self {
        BivarPoly::from_terms(self.terms.iter().map(|(&(a, _), c)| ((a, 0), c.clone())))
    }

    /// `t^n p(q, 1/t)`; `None` when the `t` degree exceeds `n`.
    pub fn reciprocal_t(&self, n: u32) -> Option<Self> {
        if self.degree_t().is_some_and(|d| d > n) {
            return None;
        }
        Some(BivarPoly::from_terms(
            self.terms
                .iter()
                .map(|(&(a, b), c)| ((a, n - b), c.clone())),
        ))
    }

    /// CSV with header `q,t,coeff`, one row per term in canonical order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,t,coeff\n");
        for (&(a, b), c) in &self.terms {
            out.push_str(&format!("{a},{b},{c}\n"));
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    /// Terms `c*q^a*t^b` in canonical order joined by ` + `; unit
    /// coefficients and zero or unit exponents are elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            let unit = c.abs().is_one();
            if !unit || (a == 0 && b == 0) {
                factors.push(c.abs().to_string());
            }
            match a {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("t".into()),
                _ => factors.push(format!("t^{b}")),
            }
            if c.is_negative() {
                f.write_str("-")?;
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Serialized as a sorted array of `[a, b, c]` triples. Coefficients that do
/// not fit in an `i64` are written as decimal strings.
impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(a, b), c) in &self.terms {
            seq.serialize_element(&Triple(a, b, c))?;
        }
        seq.end()
    }
}

struct Triple<'a>(u32, u32, &'a BigInt);

impl Serialize for Triple<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut tup = s.serialize_tuple(3)?;
        tup.serialize_element(&self.0)?;
        tup.serialize_element(&self.1)?;
        match self.2.to_i64() {
            Some(c) => tup.serialize_element(&c)?,
            None => tup.serialize_element(&self.2.to_string())?,
        }
        tup.end()
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        self + &(-rhs)
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&BivarPoly> for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: &BivarPoly) -> BivarPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Sum for BivarPoly {
    fn sum<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for BivarPoly {
    fn product<I: Iterator<Item = BivarPoly>>(iter: I) -> Self {
        iter.fold(BivarPoly::one(), |acc, p| acc * p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..=5), 0..6)
            .prop_map(|v| BivarPoly::from_terms(v.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    fn canonical(p: &BivarPoly) -> bool {
        p.terms().all(|(_, c)| !c.is_zero())
    }

    /// Independent expansion: collect all pairwise products into a dense grid.
    fn dense_product(p: &BivarPoly, r: &BivarPoly) -> BivarPoly {
        let mut grid = vec![vec![BigInt::zero(); 9]; 9];
        for ((a1, b1), c1) in p.terms() {
            for ((a2, b2), c2) in r.terms() {
                grid[(a1 + a2) as usize][(b1 + b2) as usize] += c1 * c2;
            }
        }
        let mut out = Vec::new();
        for (a, row) in grid.into_iter().enumerate() {
            for (b, c) in row.into_iter().enumerate() {
                out.push(((a as u32, b as u32), c));
            }
        }
        BivarPoly::from_terms(out)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), r in small_poly(), s in small_poly()) {
            prop_assert_eq!(&p + &BivarPoly::zero(), p.clone());
            prop_assert_eq!(&p * &BivarPoly::one(), p.clone());
            prop_assert_eq!(&p + &r, &r + &p);
            prop_assert_eq!(&p * &r, &r * &p);
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
            prop_assert!((&p - &p).is_zero());
            prop_assert!(canonical(&(&p * &r)) && canonical(&(&p + &r)) && canonical(&(&p - &s)));
        }

        #[test]
        fn product_matches_dense_expansion(p in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p * &r, dense_product(&p, &r));
        }

        #[test]
        fn eval_is_a_ring_map(p in small_poly(), r in small_poly(), q0 in -3i64..4, t0 in -3i64..4) {
            let q0 = BigRational::from(BigInt::from(q0));
            let t0 = BigRational::from(BigInt::from(t0));
            prop_assert_eq!((&p * &r).eval(&q0, &t0), p.eval(&q0, &t0) * r.eval(&q0, &t0));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(BivarPoly::zero().to_string(), "0");
        assert_eq!(BivarPoly::t().to_string(), "t");
        let p = BivarPoly::from_terms([
            ((0, 0), BigInt::from(1)),
            ((1, 2), BigInt::from(-3)),
            ((2, 1), BigInt::from(1)),
        ]);
        assert_eq!(p.to_string(), "1 + -3*q*t^2 + q^2*t");
        assert_eq!(p.to_csv(), "q,t,coeff\n0,0,1\n1,2,-3\n2,1,1\n");
    }

    #[test]
    fn substitutions() {
        let p = &(&BivarPoly::q() + &BivarPoly::t()) * &BivarPoly::t();
        assert_eq!(p.reciprocal_t(2).unwrap().to_string(), "1 + q*t");
        assert!(p.reciprocal_t(1).is_none());
        assert_eq!(p.at_q_one().to_string(), "t + t^2");
        assert_eq!(p.at_t_one().to_string(), "1 + q");
    }
}
