use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::{Error, LaurentPoly, Result};

/// A quotient of Laurent polynomials.
///
/// No gcd reduction is performed. Equality is decided by cross
/// multiplication, and the denominator's lowest-exponent coefficient is kept
/// positive.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let negative = den.u_terms().next().is_some_and(|(_, c)| c.is_negative());
        Ok(if negative {
            RationalFunction { num: -num, den: -den }
        } else {
            RationalFunction { num, den }
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunction { num: p, den: LaurentPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Collapses to denominator 1 when the division is exact.
    pub fn reduced(self) -> Self {
        if self.den.is_one() {
            return self;
        }
        match self.num.exact_div(&self.den) {
            Ok(p) => Self::from_poly(p),
            Err(_) => self,
        }
    }

    /// The polynomial value, when the denominator divides exactly.
    pub fn as_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den).ok()
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<Self> {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    fn combine(&self, rhs: &RationalFunction, subtract: bool) -> RationalFunction {
        if self.den == rhs.den {
            let num = if subtract { &self.num - &rhs.num } else { &self.num + &rhs.num };
            return RationalFunction { num, den: self.den.clone() };
        }
        let (l, r) = (&self.num * &rhs.den, &rhs.num * &self.den);
        let num = if subtract { l - r } else { l + r };
        RationalFunction { num, den: &self.den * &rhs.den }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.combine(rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        // both denominators have positive lowest coefficient, so does the product
        RationalFunction { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
