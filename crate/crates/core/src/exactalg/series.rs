//! Truncated formal power series in one distinguished symbol.

use super::ratfun::RatFun;
use super::sym::Sym;
use crate::error::{Error, Result};

/// A power series in `var` truncated at a fixed order, with rational-function
/// coefficients. `coeffs[k]` multiplies `var^k` (integer powers).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    var: Sym,
    coeffs: Vec<RatFun>,
}

impl TruncSeries {
    pub fn zero(var: Sym, order: usize) -> Self {
        TruncSeries { var, coeffs: vec![RatFun::zero(); order + 1] }
    }

    pub fn one(var: Sym, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = RatFun::one();
        s
    }

    pub fn from_coeffs(var: Sym, coeffs: Vec<RatFun>) -> Self {
        assert!(!coeffs.is_empty());
        TruncSeries { var, coeffs }
    }

    pub fn var(&self) -> Sym {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &RatFun {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, v: RatFun) {
        self.coeffs[k] = v;
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries { var: self.var, coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var);
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].add(&other.coeffs[k]))
            .collect();
        TruncSeries { var: self.var, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var);
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
            .collect();
        TruncSeries { var: self.var, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var);
        let order = self.order().min(other.order());
        let mut coeffs = vec![RatFun::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        TruncSeries { var: self.var, coeffs }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Series division: `self = other * result` up to the truncation order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.var, other.var);
        if other.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleConstantTerm);
        }
        let order = self.order().min(other.order());
        let inv0 = other.coeffs[0].recip()?;
        let mut out = vec![RatFun::zero(); order + 1];
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 0..k {
                acc = acc.sub(&out[j].mul(&other.coeffs[k - j]));
            }
            out[k] = acc.mul(&inv0);
        }
        Ok(TruncSeries { var: self.var, coeffs: out })
    }

    /// `exp` of a series with vanishing constant term.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs vanishing constant term");
        let order = self.order();
        let mut acc = Self::one(self.var, order);
        let mut term = Self::one(self.var, order);
        let mut factorial = num::BigRational::from(num::BigInt::from(1));
        for k in 1..=order {
            term = term.mul(self);
            factorial *= num::BigRational::from(num::BigInt::from(k as i64));
            acc = acc.add(&term.scale(&RatFun::rational(factorial.recip())));
        }
        acc
    }

    /// Collapses to a single rational function `sum coeffs[k] var^k`.
    pub fn to_ratfun(&self) -> RatFun {
        let mut acc = RatFun::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&RatFun::half_power(self.var, 2 * k as i32)));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_division_is_one() {
        let q = RatFun::var(Sym::Q);
        let s = TruncSeries::from_coeffs(
            Sym::BigQ,
            vec![RatFun::one(), q.clone(), q.pow(3).unwrap(), RatFun::int(7)],
        );
        let r = s.div(&s).unwrap();
        assert!(r.coeff(0).is_one());
        for k in 1..=r.order() {
            assert!(r.coeff(k).is_zero());
        }
    }

    #[test]
    fn geometric_series() {
        // 1/(1-Q) = 1 + Q + Q^2 + ...
        let one = TruncSeries::one(Sym::BigQ, 5);
        let mut den = TruncSeries::one(Sym::BigQ, 5);
        den.set_coeff(1, RatFun::int(-1));
        let r = one.div(&den).unwrap();
        for k in 0..=5 {
            assert!(r.coeff(k).is_one());
        }
    }

    #[test]
    fn non_invertible_constant_term() {
        let one = TruncSeries::one(Sym::BigQ, 2);
        let z = TruncSeries::zero(Sym::BigQ, 2);
        assert_eq!(one.div(&z), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn mul_then_div_roundtrip() {
        let q = RatFun::var(Sym::Q);
        let a = TruncSeries::from_coeffs(
            Sym::BigQ,
            vec![RatFun::one(), q.clone(), q.clone().mul(&q), RatFun::int(-3)],
        );
        let mut b = TruncSeries::one(Sym::BigQ, 3);
        b.set_coeff(1, q.clone());
        b.set_coeff(2, RatFun::int(5));
        let c = a.mul(&b).div(&b).unwrap();
        assert_eq!(c, a);
    }
}
