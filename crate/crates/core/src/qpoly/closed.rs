use serde::Serialize;

use super::BivarPoly;
use crate::error::{Error, Result};
use crate::group::GroupTag;

/// `[i]_q = 1 + q + ... + q^(i-1)`.
pub fn q_int(i: u32) -> Result<BivarPoly> {
    if i < 1 {
        return Err(Error::Invalid("q-integer [i]_q needs i >= 1".into()));
    }
    Ok(BivarPoly::from_terms((0..i).map(|a| ((a, 0), 1.into()))))
}

fn q_int_unchecked(i: u32) -> BivarPoly {
    q_int(i).expect("i >= 1")
}

/// `1 + t [k]_q - t`.
fn refined_factor(k: u32) -> BivarPoly {
    &BivarPoly::one() + &(&BivarPoly::t() * &(&q_int_unchecked(k) - &BivarPoly::one()))
}

fn check_n(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::Invalid(format!(
            "closed form needs n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// `prod_{i=1..n} (t + [i]_q - 1)`, the joint distribution of `(inv, m)` and
/// of `(sor, cyc)` over `S_n`.
pub fn closed_s(n: u32) -> Result<BivarPoly> {
    check_n(n, 1)?;
    Ok((1..=n)
        .map(|i| &BivarPoly::t() + &(&q_int_unchecked(i) - &BivarPoly::one()))
        .product())
}

/// `t^n S_n(q, 1/t) = prod_{i=1..n} (1 + t[i]_q - t)`.
pub fn closed_s_reciprocal(n: u32) -> Result<BivarPoly> {
    check_n(n, 1)?;
    Ok((1..=n).map(refined_factor).product())
}

/// `prod_{i=1..n} (1 + t[2i]_q - t)`.
pub fn closed_b(n: u32) -> Result<BivarPoly> {
    check_n(n, 1)?;
    Ok((1..=n).map(|i| refined_factor(2 * i)).product())
}

/// `[n]_q prod_{i=1..n-1} [2i]_q`.
pub fn closed_d(n: u32) -> Result<BivarPoly> {
    check_n(n, 2)?;
    Ok(&q_int_unchecked(n)
        * &(1..n)
            .map(|i| q_int_unchecked(2 * i))
            .product::<BivarPoly>())
}

/// `prod_{i=1..n-1} (1 + q^i) [i+1]_q`, the factor-by-factor form of
/// [`closed_d`].
pub fn closed_d_factored(n: u32) -> Result<BivarPoly> {
    check_n(n, 2)?;
    Ok((1..n)
        .map(|i| &(&BivarPoly::one() + &BivarPoly::monomial(i, 0, 1)) * &q_int_unchecked(i + 1))
        .product())
}

/// `prod (1 + t[e_i + 1]_q - t)`.
pub fn closed_w(e: &ExponentList) -> BivarPoly {
    e.iter().map(|x| refined_factor(x + 1)).product()
}

/// `prod [e_i + 1]_q`, the length generating function.
pub fn solomon(e: &ExponentList) -> BivarPoly {
    e.iter().map(|x| q_int_unchecked(x + 1)).product()
}

/// `prod (1 + e_i t)`, the reflection length generating function.
pub fn shepard_todd(e: &ExponentList) -> BivarPoly {
    e.iter()
        .map(|x| &BivarPoly::one() + &BivarPoly::monomial(0, 1, x))
        .product()
}

/// `prod_{i=1..n} [i]_q`.
pub fn mahonian(n: u32) -> BivarPoly {
    (1..=n).map(q_int_unchecked).product()
}

/// `t (t+1) ... (t+n-1)`.
pub fn stirling_cycles(n: u32) -> BivarPoly {
    (0..n)
        .map(|k| &BivarPoly::t() + &BivarPoly::constant(k))
        .product()
}

/// `(1+t)(1+3t) ... (1+(2n-1)t)`.
pub fn type_b_stirling(n: u32) -> BivarPoly {
    (1..=n)
        .map(|i| &BivarPoly::one() + &BivarPoly::monomial(0, 1, 2 * i - 1))
        .product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentList(Vec<u32>);

impl ExponentList {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if exponents.contains(&0) {
            return Err(Error::Invalid("exponents must be positive".into()));
        }
        Ok(ExponentList(exponents))
    }

    /// Exponents of the group a tag and rank denote here: `S_n` has
    /// `1..n-1` (the Cartan label of `S_n` is `A_{n-1}`), `B_n` has
    /// `1, 3, ..., 2n-1`, `D_n` has `1, 3, ..., 2n-3, n-1`.
    pub fn for_group(tag: GroupTag, n: usize) -> Result<Self> {
        let n32 = n as u32;
        let list = match tag {
            GroupTag::A => (1..n32).collect(),
            GroupTag::B => (1..=n32).map(|i| 2 * i - 1).collect(),
            GroupTag::D => {
                tag.check_rank(n)?;
                let mut v: Vec<u32> = (1..n32).map(|i| 2 * i - 1).collect();
                v.push(n32 - 1);
                v
            }
        };
        ExponentList::new(list).map_err(|_| Error::BadRank { tag, n })
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(x: i64) -> BigRational {
        BigRational::from(BigInt::from(x))
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1).unwrap(), BivarPoly::one());
        assert_eq!(q_int(3).unwrap().to_string(), "1 + q + q^2");
        assert!(q_int(0).is_err());
        for i in 1..=6 {
            let lhs = &q_int(i).unwrap() * &(&BivarPoly::one() + &BivarPoly::monomial(i, 0, 1));
            assert_eq!(lhs, q_int(2 * i).unwrap());
        }
    }

    #[test]
    fn closed_s_small() {
        assert_eq!(closed_s(1).unwrap(), BivarPoly::t());
        // t^3 + 2qt^2 + q^2t^2 + q^2t + q^3t, from expanding t (t+q)(t+q+q^2)
        assert_eq!(
            closed_s(3).unwrap().to_string(),
            "t^3 + 2*q*t^2 + q^2*t + q^2*t^2 + q^3*t"
        );
        assert!(closed_s(0).is_err());
        assert_eq!(closed_s(3).unwrap().eval(&rat(1), &rat(1)), rat(6));
        for n in 1..=7 {
            assert_eq!(closed_s(n).unwrap().at_t_one(), mahonian(n));
            assert_eq!(closed_s(n).unwrap().at_q_one(), stirling_cycles(n));
            assert_eq!(
                closed_s(n).unwrap().reciprocal_t(n).unwrap(),
                closed_s_reciprocal(n).unwrap()
            );
        }
    }

    #[test]
    fn closed_b_small() {
        assert_eq!(closed_b(1).unwrap().to_string(), "1 + q*t");
        for n in 1..=6 {
            assert_eq!(closed_b(n).unwrap().at_q_one(), type_b_stirling(n));
        }
    }

    #[test]
    fn closed_d_forms_agree() {
        for n in 2..=8 {
            assert_eq!(closed_d(n).unwrap(), closed_d_factored(n).unwrap());
        }
        assert_eq!(closed_d(4).unwrap().degree_q(), Some(12));
        let mut order = 1i64;
        for n in 2..=6u32 {
            order = if n == 2 { 4 } else { order * 2 * n as i64 };
            assert_eq!(closed_d(n).unwrap().eval(&rat(1), &rat(1)), rat(order));
        }
        assert!(closed_d(1).is_err());
    }

    #[test]
    fn exponent_products() {
        let a3 = ExponentList::new(vec![1, 2]).unwrap();
        let w = closed_w(&a3);
        let expected = &(&BivarPoly::one() + &BivarPoly::monomial(1, 1, 1))
            * &BivarPoly::from_terms([((0, 0), 1.into()), ((1, 1), 1.into()), ((2, 1), 1.into())]);
        assert_eq!(w, expected);
        assert_eq!(w.reciprocal_t(3).unwrap(), closed_s(3).unwrap());
        for n in 1..=5 {
            let b = ExponentList::for_group(GroupTag::B, n).unwrap();
            assert_eq!(closed_w(&b), closed_b(n as u32).unwrap());
        }
        let d4 = ExponentList::for_group(GroupTag::D, 4).unwrap();
        assert_eq!(d4.as_slice(), &[1, 3, 5, 3]);
        assert_eq!(closed_w(&d4).at_t_one(), closed_d(4).unwrap().at_t_one());
        assert_eq!(solomon(&d4), closed_d(4).unwrap());
        assert_eq!(
            shepard_todd(&ExponentList::new(vec![1, 2, 3]).unwrap()).to_string(),
            "1 + 6*t + 11*t^2 + 6*t^3"
        );
        assert!(ExponentList::new(vec![]).is_err());
        assert!(ExponentList::for_group(GroupTag::A, 1).is_err());
    }
}
