use std::fmt;

use gaussq_core::{HalfInt, LaurentPoly, RationalFunction, Ring, TruncSeries, XPoly};
use num_bigint::BigInt;
use num_traits::One;

/// An off-by-one corruption of a value: the lowest term `q^e` gains a
/// companion `q^{e+1} - q^e`, so the result always differs from the input.
pub trait Perturb: Sized {
    fn perturb(&self) -> Self;
}

fn bump(e: HalfInt) -> LaurentPoly {
    LaurentPoly::q_pow(e + HalfInt::ONE) - LaurentPoly::q_pow(e)
}

impl Perturb for LaurentPoly {
    fn perturb(&self) -> Self {
        self + &bump(self.min_exp().unwrap_or(HalfInt::ZERO))
    }
}

impl Perturb for XPoly {
    fn perturb(&self) -> Self {
        let mut c = self.coeffs().to_vec();
        if c.is_empty() {
            c.push(LaurentPoly::zero());
        }
        c[0] = c[0].perturb();
        XPoly::from_coeffs(c)
    }
}

impl Perturb for RationalFunction {
    fn perturb(&self) -> Self {
        let e = self.num().min_exp().unwrap_or(HalfInt::ZERO);
        self + &RationalFunction::from_poly(bump(e))
    }
}

impl Perturb for BigInt {
    fn perturb(&self) -> Self {
        self + BigInt::one()
    }
}

/// Moves one unit from the lowest nonzero coefficient to the next one.
impl<R: Ring> Perturb for TruncSeries<R> {
    fn perturb(&self) -> Self {
        let mut out = self.clone();
        let e = self.coeffs().iter().position(|c| !c.is_zero_elem()).unwrap_or(0);
        let one = self.ring_zero().one_like();
        if e < self.order() {
            out.set_coeff(e, self.coeff(e).minus(&one));
        }
        if e + 1 < self.order() {
            out.set_coeff(e + 1, self.coeff(e + 1).plus(&one));
        }
        out
    }
}

impl<T: Perturb + Clone> Perturb for Seq<T> {
    fn perturb(&self) -> Self {
        let mut out = self.clone();
        if let Some(first) = out.0.first_mut() {
            *first = first.perturb();
        }
        out
    }
}

/// A sequence compared elementwise and printed as `[a, b, c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Seq<T>(pub Vec<T>);

impl<T: fmt::Display> fmt::Display for Seq<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl<T> FromIterator<T> for Seq<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Seq(iter.into_iter().collect())
    }
}
