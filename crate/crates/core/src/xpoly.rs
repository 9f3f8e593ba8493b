//! Polynomials in `x` with Laurent-polynomial coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::qcore::{q_int, BaseStep};
use crate::{HalfInt, LaurentPoly};

/// Coefficients indexed by `x`-degree; the highest stored coefficient is
/// nonzero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<LaurentPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(LaurentPoly::one(), 1)
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c x^deg`.
    pub fn monomial(c: LaurentPoly, deg: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x + v`.
    pub fn linear(v: LaurentPoly) -> Self {
        Self::from_coeffs(vec![v, LaurentPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    /// Coefficient of `x^d`, zero beyond the degree.
    pub fn coeff(&self, d: usize) -> LaurentPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The constant polynomial's value, if `self` has no `x` terms.
    pub fn as_constant(&self) -> Option<LaurentPoly> {
        match self.coeffs.len() {
            0 => Some(LaurentPoly::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f(q^c x)`: the coefficient of `x^n` picks up `q^{cn}`.
    pub fn scale_arg(&self, c: HalfInt) -> Self {
        XPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| a.shift(c.times(n as i64)))
                .collect(),
        }
    }

    /// `x * f(x)`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(LaurentPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    /// Horner evaluation at `x = v`.
    pub fn eval(&self, v: &LaurentPoly) -> LaurentPoly {
        self.coeffs.iter().rev().fold(LaurentPoly::zero(), |acc, c| acc * v + c)
    }

    /// Coefficients at `q = 1`.
    pub fn eval_coeffs_at_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(LaurentPoly::eval_at_one).collect()
    }

    /// The q-derivative `(f(qx) - f(x)) / (qx - x)`, computed termwise as
    /// `x^n -> [n] x^{n-1}`.
    pub fn q_derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, a)| a * &q_int(n as u32, BaseStep::Q))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: XPoly) -> XPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&XPoly> for XPoly {
            type Output = XPoly;
            fn $m(self, rhs: &XPoly) -> XPoly {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

impl From<LaurentPoly> for XPoly {
    fn from(c: LaurentPoly) -> Self {
        XPoly::constant(c)
    }
}

impl core::iter::Sum for XPoly {
    fn sum<I: Iterator<Item = XPoly>>(iter: I) -> Self {
        iter.fold(XPoly::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for XPoly {
    fn product<I: Iterator<Item = XPoly>>(iter: I) -> Self {
        iter.fold(XPoly::one(), |acc, p| acc * p)
    }
}

/// Degree-ascending `(c0) + (c1)*x^1 + ...`; a constant prints as its bare
/// coefficient.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if d > 0 {
                write!(f, "*x^{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(c.iter().copied())
    }

    /// `(f(qx) - f(x)) / ((q - 1) x)` by exact division.
    fn difference_quotient(f: &XPoly) -> XPoly {
        let diff = &f.scale_arg(HalfInt::ONE) - f;
        assert!(diff.coeff(0).is_zero());
        let q_minus_1 = p(&[-1, 1]);
        XPoly::from_coeffs(
            diff.coeffs()
                .iter()
                .skip(1)
                .map(|c| c.exact_div(&q_minus_1).unwrap())
                .collect(),
        )
    }

    #[test]
    fn derivative_of_monomials() {
        let x3 = XPoly::monomial(LaurentPoly::one(), 3);
        assert_eq!(x3.q_derivative(), XPoly::monomial(p(&[1, 1, 1]), 2));
        assert_eq!(XPoly::constant(p(&[4, 5])).q_derivative(), XPoly::zero());
    }

    #[test]
    fn derivative_equals_difference_quotient() {
        let f = XPoly::from_coeffs(alloc::vec![p(&[1, -2]), p(&[0, 3]), LaurentPoly::zero(), p(&[7, 0, 1]), p(&[-1])]);
        assert_eq!(f.q_derivative(), difference_quotient(&f));
    }

    #[test]
    fn argument_scaling_and_evaluation() {
        let f = XPoly::from_coeffs(alloc::vec![p(&[1]), p(&[2]), p(&[3])]);
        let g = f.scale_arg(HalfInt::int(2));
        assert_eq!(g.coeffs(), &[p(&[1]), p(&[0, 0, 2]), p(&[0, 0, 0, 0, 3])]);
        assert_eq!(f.eval(&LaurentPoly::one()), p(&[6]));
        assert_eq!(f.eval(&LaurentPoly::q_int_pow(1)), p(&[1, 2, 3]));
    }

    #[test]
    fn trimming_and_text() {
        let f = XPoly::from_coeffs(alloc::vec![p(&[1]), LaurentPoly::zero()]);
        assert_eq!(f.degree(), Some(0));
        assert_eq!(XPoly::zero().degree(), None);
        let s2 = XPoly::from_coeffs(alloc::vec![p(&[1]), p(&[-1, -1]), p(&[1])]);
        assert_eq!(s2.to_string(), "(1) + (-1 - 1*q^1)*x^1 + (1)*x^2");
        assert_eq!(XPoly::constant(p(&[0, 1])).to_string(), "1*q^1");
    }
}
