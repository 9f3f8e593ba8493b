//! Truncated formal power series over an exact coefficient ring.
//!
//! A [`TruncSeries`] stores the coefficients of `1, t, ..., t^{order-1}` and
//! silently drops everything at or above `order`. Results never claim more
//! precision than the least precise input. Nesting (`TruncSeries<TruncSeries<_>>`)
//! gives the bivariate series used for two-variable generating functions.

mod generating;
mod qseries;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, LaurentPoly, Result};

pub use generating::*;
pub use qseries::*;

/// The operations a series needs from its coefficients.
///
/// Elements carry their own shape (a nested series knows its variable and
/// order), so identities are produced from an existing element rather than
/// from the type alone.
pub trait Ring: Clone + PartialEq + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// The multiplicative inverse, when `self` is a unit.
    fn unit_inverse(&self) -> Option<Self>;
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.abs().is_one().then(|| self.clone())
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn unit_inverse(&self) -> Option<Self> {
        LaurentPoly::unit_inverse(self)
    }
}

#[derive(Clone, PartialEq)]
pub struct TruncSeries<R> {
    var: String,
    order: usize,
    zero: R,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// The zero series in `var` modulo `var^order`; `zero` fixes the
    /// coefficient ring.
    pub fn zero(var: &str, order: usize, zero: R) -> Self {
        let coeffs = (0..order).map(|_| zero.clone()).collect();
        TruncSeries { var: var.to_string(), order, zero, coeffs }
    }

    pub fn one(var: &str, order: usize, zero: R) -> Self {
        let mut s = Self::zero(var, order, zero);
        if order > 0 {
            s.coeffs[0] = s.zero.one_like();
        }
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(var: &str, order: usize, zero: R, coeffs: Vec<R>) -> Self {
        let mut s = Self::zero(var, order, zero);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `c var^k`.
    pub fn monomial(var: &str, order: usize, c: R, k: usize) -> Self {
        let mut s = Self::zero(var, order, c.zero_like());
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn set_coeff(&mut self, k: usize, c: R) {
        if k < self.order {
            self.coeffs[k] = c;
        }
    }

    /// A zero element of the coefficient ring.
    pub fn ring_zero(&self) -> &R {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero_elem)
    }

    /// Drops precision down to `order` (never raises it).
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries {
            var: self.var.clone(),
            order,
            zero: self.zero.clone(),
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    fn check_var(&self, rhs: &Self) -> Result<()> {
        if self.var != rhs.var {
            return Err(Error::VariableMismatch { left: self.var.clone(), right: rhs.var.clone() });
        }
        Ok(())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let coeffs = (0..order).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect();
        Ok(TruncSeries { var: self.var.clone(), order, zero: self.zero.clone(), coeffs })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::plus)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, R::minus)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_var(rhs)?;
        let order = self.order.min(rhs.order);
        let mut out = Self::zero(&self.var, order, self.zero.clone());
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero_elem() {
                    out.coeffs[i + j] = out.coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map(R::negated)
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.times(c))
    }

    fn map(&self, f: impl Fn(&R) -> R) -> Self {
        TruncSeries {
            var: self.var.clone(),
            order: self.order,
            zero: self.zero.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Applies `f` to every coefficient, moving to another ring.
    pub fn map_coeffs<S: Ring>(&self, zero: S, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            var: self.var.clone(),
            order: self.order,
            zero,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.var, self.order, self.zero.clone());
        for i in k..self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// `self * (1 + c var^k)`, `k >= 1`.
    pub fn mul_binomial(&self, c: &R, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = self.clone();
        for i in (k..self.order).rev() {
            let extra = self.coeffs[i - k].times(c);
            out.coeffs[i] = out.coeffs[i].plus(&extra);
        }
        out
    }

    /// `self / (1 + c var^k)`, `k >= 1`; always defined because the divisor
    /// has constant term 1.
    pub fn div_binomial(&self, c: &R, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = self.clone();
        for i in k..self.order {
            let back = out.coeffs[i - k].times(c);
            out.coeffs[i] = out.coeffs[i].minus(&back);
        }
        out
    }

    /// The inverse modulo `var^order`; needs a unit constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let mut out = Self::zero(&self.var, self.order, self.zero.clone());
        if self.order == 0 {
            return Ok(out);
        }
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NonUnitConstantTerm)?;
        out.coeffs[0] = inv0.clone();
        for n in 1..self.order {
            let mut acc = self.zero.clone();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero_elem() && !out.coeffs[n - k].is_zero_elem() {
                    acc = acc.plus(&a.times(&out.coeffs[n - k]));
                }
            }
            out.coeffs[n] = acc.times(&inv0).negated();
        }
        Ok(out)
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.var, self.order, self.zero.clone())
    }
    fn one_like(&self) -> Self {
        Self::one(&self.var, self.order, self.zero.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("nested series share their variable")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("nested series share their variable")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("nested series share their variable")
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.reciprocal().ok()
    }
}

/// `c0 + c1*t + c2*t^2 + ... + O(t^order)`, skipping zero coefficients.
/// Compound coefficients are parenthesized.
impl<R: Ring> fmt::Display for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.var;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(' ');
            match (k, compound) {
                (0, false) => write!(f, "{text}")?,
                (0, true) => write!(f, "({text})")?,
                (_, false) => write!(f, "{text}*{v}")?,
                (_, true) => write!(f, "({text})*{v}")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
            f.write_str(" + ")?;
        }
        write!(f, "O({v}^{})", self.order)
    }
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::HalfInt;

    fn t_series(order: usize, c: &[i64]) -> TruncSeries<BigInt> {
        TruncSeries::from_coeffs("t", order, BigInt::zero(), c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn arithmetic_examples() {
        let a = t_series(3, &[1, 1]);
        let b = t_series(3, &[1, -1]);
        assert_eq!(a.try_mul(&b).unwrap(), t_series(3, &[1, 0, -1]));
        let zero = TruncSeries::zero("t", 3, BigInt::zero());
        assert_eq!(a.try_add(&zero).unwrap(), a);
        let geometric = t_series(5, &[1, 1, 1, 1, 1]);
        assert_eq!(geometric.try_mul(&t_series(5, &[1, -1])).unwrap(), t_series(5, &[1]));
    }

    #[test]
    fn order_is_minimum_of_inputs() {
        let a = t_series(6, &[1, 2, 3]);
        let b = t_series(4, &[1, 1]);
        assert_eq!(a.try_add(&b).unwrap().order(), 4);
        assert_eq!(a.try_mul(&b).unwrap().order(), 4);
    }

    #[test]
    fn variable_mismatch() {
        let a = t_series(3, &[1]);
        let z = TruncSeries::one("z", 3, BigInt::zero());
        assert!(matches!(a.try_add(&z), Err(Error::VariableMismatch { .. })));
        assert!(matches!(a.try_mul(&z), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn reciprocal_examples() {
        let r = t_series(6, &[1, -1]).reciprocal().unwrap();
        assert_eq!(r, t_series(6, &[1, 1, 1, 1, 1, 1]));
        // prod_{k<4} (1 + q^k t) round trip
        let mut prod = TruncSeries::one("t", 8, LaurentPoly::zero());
        for k in 0..4 {
            prod = prod.mul_binomial(&LaurentPoly::q_int_pow(k), 1);
        }
        let inv = prod.reciprocal().unwrap();
        assert_eq!(prod.try_mul(&inv).unwrap(), TruncSeries::one("t", 8, LaurentPoly::zero()));
        let bad = TruncSeries::from_coeffs("t", 3, LaurentPoly::zero(), vec![LaurentPoly::from_q_coeffs([1, 1])]);
        assert_eq!(bad.reciprocal().unwrap_err(), Error::NonUnitConstantTerm);
    }

    #[test]
    fn binomial_division_matches_reciprocal() {
        let c = LaurentPoly::monomial(-1, HalfInt::new(3));
        let one = TruncSeries::one("t", 7, LaurentPoly::zero());
        let direct = one.div_binomial(&c, 2);
        let via_recip = one.mul_binomial(&c, 2).reciprocal().unwrap();
        assert_eq!(direct, via_recip);
    }

    #[test]
    fn nested_series_reciprocal() {
        let inner_one = TruncSeries::one("q", 5, BigInt::zero());
        let inner_q = TruncSeries::monomial("q", 5, BigInt::one(), 1);
        // 1 - q z as a series in z over series in q
        let s = TruncSeries::from_coeffs("z", 4, inner_one.zero_like(), vec![inner_one.clone(), inner_q.neg()]);
        let inv = s.reciprocal().unwrap();
        assert_eq!(inv.coeff(3), TruncSeries::monomial("q", 5, BigInt::one(), 3));
        assert_eq!(s.try_mul(&inv).unwrap(), s.one_like());
    }

    #[test]
    fn text_form() {
        let s = t_series(4, &[1, 0, -3]);
        assert_eq!(alloc::format!("{s}"), "1 + -3*t^2 + O(t^4)");
        let p = TruncSeries::from_coeffs("t", 2, LaurentPoly::zero(), vec![LaurentPoly::zero(), LaurentPoly::from_q_coeffs([1, 1])]);
        assert_eq!(alloc::format!("{p}"), "(1 + 1*q^1)*t + O(t^2)");
        assert_eq!(alloc::format!("{}", TruncSeries::zero("z", 3, BigInt::zero())), "O(z^3)");
    }
}
