//! Sparse Laurent polynomials in q with exact integer coefficients.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial Σ c_e q^e with integer exponents. No zero coefficient
/// is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by q^s.
    pub fn shift(&self, s: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + s, c)).collect(),
        }
    }

    /// Substitute q -> q^{-1}.
    pub fn invert_q(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Coefficients of q^0..q^deg as a dense vector.
    pub fn coeff_range(&self, deg: usize) -> Vec<i64> {
        (0..=deg as i64).map(|e| self.coeff(e)).collect()
    }

    /// Exact evaluation at a rational point. Negative exponents require a
    /// nonzero point.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                q0.pow(e as i32)
            } else {
                if q0.is_zero() {
                    return Err(Error::domain("negative exponent evaluated at q=0"));
                }
                q0.pow(e as i32)
            };
            acc += p * BigRational::from_integer(BigInt::from(c));
        }
        Ok(acc)
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{e}")?,
                (_, 1) => write!(f, "{a}*q")?,
                (_, _) => write!(f, "{a}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        let mut p = LaurentPoly::monomial(1, 1);
        p.add_term(2, 3);
        p.add_term(-1, -1);
        assert_eq!(p.to_string(), "-q^-1 + q + 3*q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }

    #[test]
    fn invert_and_shift() {
        let mut p = LaurentPoly::monomial(2, 1);
        p.add_term(5, 4);
        assert_eq!(p.invert_q().min_exp(), Some(-5));
        assert_eq!(p.shift(3).coeff(5), 1);
        assert_eq!(p.eval_one(), 5);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p.add_term(e, c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.sub(&a), LaurentPoly::zero());
            // no zero coefficient is ever stored
            prop_assert!(a.mul(&b).terms().all(|(_, cf)| cf != 0));
        }

        #[test]
        fn eval_hom(a in arb_poly(), b in arb_poly(), num in -4i64..=4, den in 1i64..=4) {
            let q0 = BigRational::new(num::BigInt::from(num), num::BigInt::from(den));
            if !(q0.is_zero() && (a.min_exp().unwrap_or(0) < 0 || b.min_exp().unwrap_or(0) < 0)) {
                let lhs = a.mul(&b).eval(&q0).unwrap();
                let rhs = a.eval(&q0).unwrap() * b.eval(&q0).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
