//! Sparse Laurent polynomials in `u = q^(1/2)` over big integers.
//!
//! Exponents are stored as integer powers of `u`, so `q^(3/2)` is the term
//! with key `3`. Terms are kept in a vector sorted by exponent with no zero
//! coefficients, which makes equality structural.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, HalfInt, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, HalfInt::ZERO)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: HalfInt) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: vec![(e.twice(), c)] }
    }

    /// `q^e`.
    pub fn q_pow(e: HalfInt) -> Self {
        Self::monomial(1, e)
    }

    /// `q^e` for an integer exponent.
    pub fn q_int_pow(e: i64) -> Self {
        Self::monomial(1, HalfInt::int(e))
    }

    /// `1 - c q^e`, the shape of every Pochhammer factor.
    pub fn one_minus(c: impl Into<BigInt>, e: HalfInt) -> Self {
        Self::one() - Self::monomial(c, e)
    }

    /// Builds from `(u-exponent, coefficient)` pairs in any order; duplicate
    /// exponents are summed and zeros dropped.
    pub fn from_u_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        LaurentPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Dense coefficients of `q^0, q^1, ...` (integer exponents only).
    pub fn from_q_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (2 * i as i64, c.into()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentPoly { terms }
    }

    /// Ascending `(u-exponent, coefficient)` pairs.
    pub fn u_terms(&self) -> impl ExactSizeIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Ascending `(exponent of q, coefficient)` pairs.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (HalfInt, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (HalfInt::new(*e), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn coeff(&self, e: HalfInt) -> BigInt {
        match self.terms.binary_search_by_key(&e.twice(), |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<HalfInt> {
        self.terms.first().map(|(e, _)| HalfInt::new(*e))
    }

    pub fn max_exp(&self) -> Option<HalfInt> {
        self.terms.last().map(|(e, _)| HalfInt::new(*e))
    }

    /// True when every exponent is an integer power of `q`.
    pub fn is_q_integral(&self) -> bool {
        self.terms.iter().all(|(e, _)| e % 2 == 0)
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: HalfInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k + e.twice(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Integer power; negative exponents are only meaningful for units and
    /// are rejected here.
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::InvalidParameter(alloc::format!(
                "negative power {n} of a polynomial"
            )));
        }
        Ok(self.pow_u(n as u64))
    }

    pub fn pow_u(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// When `self = ±q^e`, returns its inverse `±q^-e`.
    pub fn unit_inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(e, c)] if c.abs().is_one() => Some(LaurentPoly { terms: vec![(-e, c.clone())] }),
            _ => None,
        }
    }

    /// The value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Replaces `q` by `q^r`: every exponent `e` becomes `e * r`.
    pub fn substitute_q_power(&self, r: HalfInt) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::InvalidParameter("substitution q -> q^0".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            // u-exponent e is q^(e/2); q^(e/2 * r2/2) has u-exponent e*r2/2
            let scaled = e * r.twice();
            if scaled % 2 != 0 {
                return Err(Error::InvalidParameter(alloc::format!(
                    "q^({e}/2) under q -> q^{r} leaves the half-integer lattice"
                )));
            }
            terms.push((scaled / 2, c.clone()));
        }
        if r.twice() < 0 {
            terms.reverse();
        }
        Ok(LaurentPoly { terms })
    }

    /// The unique `c` with `divisor * c == self`, if it exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Self> {
        let (b_lo, b_hi) = match (divisor.terms.first(), divisor.terms.last()) {
            (Some(lo), Some(hi)) => (lo.0, hi.0),
            _ => return Err(Error::DivisionByZero),
        };
        let (a_lo, a_hi) = match (self.terms.first(), self.terms.last()) {
            (Some(lo), Some(hi)) => (lo.0, hi.0),
            _ => return Ok(Self::zero()),
        };
        if divisor.terms.len() == 1 {
            let d = &divisor.terms[0].1;
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let (quo, rem) = c.div_rem(d);
                if !rem.is_zero() {
                    return Err(Error::NonExactDivision);
                }
                terms.push((e - b_lo, quo));
            }
            return Ok(LaurentPoly { terms });
        }
        // Both sides are u^lo times a polynomial with nonzero constant term,
        // so the quotient is u^(a_lo - b_lo) times an ordinary polynomial.
        let a_deg = (a_hi - a_lo) as usize;
        let b_deg = (b_hi - b_lo) as usize;
        if a_deg < b_deg {
            return Err(Error::NonExactDivision);
        }
        let mut rem = vec![BigInt::zero(); a_deg + 1];
        for (e, c) in &self.terms {
            rem[(e - a_lo) as usize] = c.clone();
        }
        let b: Vec<(usize, &BigInt)> =
            divisor.terms.iter().map(|(e, c)| ((e - b_lo) as usize, c)).collect();
        let lead = b.last().expect("nonempty").1;
        let mut quot: Vec<(i64, BigInt)> = Vec::new();
        for i in (0..=a_deg - b_deg).rev() {
            let top = &rem[i + b_deg];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, bj) in &b {
                let t = &c * *bj;
                rem[i + j] -= t;
            }
            quot.push((i as i64 + a_lo - b_lo, c));
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        quot.reverse();
        Ok(LaurentPoly { terms: quot })
    }

    /// Keeps only terms with `q`-exponent strictly below `bound`.
    pub fn truncate_below(&self, bound: HalfInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().filter(|(e, _)| *e < bound.twice()).cloned().collect(),
        }
    }

    fn merge(&self, rhs: &LaurentPoly, negate_rhs: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        let sgn = |c: &BigInt| if negate_rhs { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((b[j].0, sgn(&b[j].1)));
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let c = if negate_rhs { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (*e, sgn(c))));
        LaurentPoly { terms: out }
    }

    fn product(&self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentPoly { terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect() };
        }
        if self.terms.len() == 1 {
            return rhs.product(self);
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let span = (hi - lo + 1) as usize;
        let work = self.terms.len() * rhs.terms.len();
        if span <= 4 * work + 64 {
            let mut acc = vec![BigInt::zero(); span];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    acc[(ea + eb - lo) as usize] += ca * cb;
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 + lo, c))
                .collect();
            LaurentPoly { terms }
        } else {
            let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &rhs.terms {
                    *map.entry(ea + eb).or_default() += ca * cb;
                }
            }
            LaurentPoly { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.merge(b, false));
forward_binop!(Sub, sub, |a, b| a.merge(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

/// Writes `q^e` in canonical form (no coefficient).
pub(crate) fn fmt_q_power(f: &mut fmt::Formatter<'_>, u_exp: i64) -> fmt::Result {
    if u_exp % 2 == 0 {
        write!(f, "q^{}", u_exp / 2)
    } else {
        write!(f, "q^({u_exp}/2)")
    }
}

/// Canonical text: ascending terms `c`, `c*q^e`, `c*q^(n/2)` joined by
/// ` + ` / ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = if i == 0 {
                write!(f, "{c}")?;
                None
            } else if c.is_negative() {
                f.write_str(" - ")?;
                Some(-c)
            } else {
                f.write_str(" + ")?;
                Some(c.clone())
            };
            if let Some(m) = mag {
                write!(f, "{m}")?;
            }
            if *e != 0 {
                f.write_str("*")?;
                fmt_q_power(f, *e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(coeffs.iter().copied())
    }

    #[test]
    fn square_of_one_plus_q() {
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn additive_identity() {
        let a = p(&[3, 0, -2, 5]);
        assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn product_of_two_binomials() {
        // (1 - q^4)(1 - q^3) = 1 - q^3 - q^4 + q^7
        let lhs = p(&[1, 0, 0, 0, -1]) * p(&[1, 0, 0, -1]);
        assert_eq!(lhs, p(&[1, 0, 0, -1, -1, 0, 0, 1]));
    }

    #[test]
    fn exact_division_cases() {
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        let num = p(&[1, 0, 0, 0, -1]) * p(&[1, 0, 0, -1]);
        let den = p(&[1, -1]) * p(&[1, 0, -1]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, 1, 2, 1, 1]));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[1, -1])), Err(Error::NonExactDivision));
        assert_eq!(p(&[1, 1]).exact_div(&LaurentPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_division_with_negative_exponents() {
        let a = LaurentPoly::q_int_pow(-3) * p(&[1, 2, 1]);
        let b = LaurentPoly::q_pow(HalfInt::new(-1)) * p(&[1, 1]);
        let c = a.exact_div(&b).unwrap();
        assert_eq!(&c * &b, a);
        assert_eq!(c, LaurentPoly::q_pow(HalfInt::new(-5)) * p(&[1, 1]));
    }

    #[test]
    fn negative_power_rejected() {
        assert!(matches!(p(&[1, 1]).pow(-1), Err(Error::InvalidParameter(_))));
        assert_eq!(p(&[1, 1]).pow(0).unwrap(), LaurentPoly::one());
        assert_eq!(p(&[1, 1]).pow(3).unwrap(), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn substitution() {
        let one_plus_q = p(&[1, 1]);
        assert_eq!(one_plus_q.substitute_q_power(HalfInt::int(2)).unwrap(), p(&[1, 0, 1]));
        let half = one_plus_q.substitute_q_power(HalfInt::HALF).unwrap();
        assert_eq!(half, LaurentPoly::one() + LaurentPoly::q_pow(HalfInt::HALF));
        assert_eq!(p(&[1, 1, 1]).substitute_q_power(HalfInt::int(2)).unwrap(), p(&[1, 0, 1, 0, 1]));
        // q^(1/2) under q -> q^(1/2) would be q^(1/4)
        assert!(half.substitute_q_power(HalfInt::HALF).is_err());
        assert!(one_plus_q.substitute_q_power(HalfInt::ZERO).is_err());
        // q -> q^-1 keeps the term order canonical
        let inv = p(&[1, 2]).substitute_q_power(HalfInt::int(-1)).unwrap();
        assert_eq!(inv, LaurentPoly::monomial(2, HalfInt::int(-1)) + LaurentPoly::one());
    }

    #[test]
    fn evaluation_at_one() {
        assert_eq!(p(&[1, 2, 1]).eval_at_one(), BigInt::from(4));
        assert_eq!(p(&[1, 1, 2, 1, 1]).eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 1]).to_string(), "1 + 1*q^1");
        assert_eq!(p(&[0, -1, 0, 2]).to_string(), "-1*q^1 + 2*q^3");
        let t = LaurentPoly::monomial(-3, HalfInt::new(-3)) + LaurentPoly::constant(4)
            - LaurentPoly::q_pow(HalfInt::new(5));
        assert_eq!(t.to_string(), "-3*q^(-3/2) + 4 - 1*q^(5/2)");
    }

    #[test]
    fn unit_inverse_only_for_signed_monomials() {
        let m = LaurentPoly::monomial(-1, HalfInt::new(3));
        assert_eq!(&m * &m.unit_inverse().unwrap(), LaurentPoly::one());
        assert!(LaurentPoly::monomial(2, HalfInt::ZERO).unit_inverse().is_none());
        assert!(p(&[1, 1]).unit_inverse().is_none());
    }
}
