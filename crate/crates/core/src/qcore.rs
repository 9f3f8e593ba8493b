//! Scalar q-analogues: q-integers, q-factorials, Gaussian binomials,
//! Pochhammer products and the alternating / non-alternating binomial sums
//! built from them.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, HalfInt, LaurentPoly, Result};

/// The working base `q^b` for q-integers and binomials, `b != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BaseStep(HalfInt);

impl BaseStep {
    /// Base `q`.
    pub const Q: BaseStep = BaseStep(HalfInt::ONE);
    /// Base `q^2`.
    pub const Q2: BaseStep = BaseStep(HalfInt::int(2));

    pub fn new(step: HalfInt) -> Result<Self> {
        if step.is_zero() {
            return Err(Error::InvalidParameter("base step must be nonzero".into()));
        }
        Ok(BaseStep(step))
    }

    pub fn step(self) -> HalfInt {
        self.0
    }
}

impl Default for BaseStep {
    fn default() -> Self {
        BaseStep::Q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidParameter(alloc::format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `[n]_{q^b} = 1 + q^b + ... + q^{b(n-1)}`.
pub fn q_int(n: u32, b: BaseStep) -> LaurentPoly {
    LaurentPoly::from_u_terms(
        (0..n as i64).map(|i| (b.step().times(i).twice(), 1.into())),
    )
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn q_factorial(n: u32, b: BaseStep) -> LaurentPoly {
    (1..=n).map(|i| q_int(i, b)).product()
}

/// The Gaussian binomial `[n over k]` in base `q^b`; zero outside
/// `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64, b: BaseStep) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    // [n-k+i over i] = [n-k+i-1 over i-1] (1 - Q^{n-k+i}) / (1 - Q^i) stays polynomial
    let mut acc = LaurentPoly::one();
    for i in 1..=k {
        let top = LaurentPoly::one_minus(1, b.step().times(n - k + i));
        acc = (&acc * &top)
            .exact_div(&LaurentPoly::one_minus(1, b.step().times(i)))
            .expect("Gaussian binomial quotient must be exact");
    }
    acc
}

/// The whole row `[n over 0], ..., [n over n]` in base `q^b`, built by
/// `[n over k] = [n over k-1] (1 - Q^{n-k+1}) / (1 - Q^k)`.
pub fn q_binomial_row(n: u32, b: BaseStep) -> Vec<LaurentPoly> {
    let n = n as i64;
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(LaurentPoly::one());
    for k in 1..=n {
        let next = if 2 * k <= n {
            let top = LaurentPoly::one_minus(1, b.step().times(n - k + 1));
            (&row[k as usize - 1] * &top)
                .exact_div(&LaurentPoly::one_minus(1, b.step().times(k)))
                .expect("Gaussian binomial quotient must be exact")
        } else {
            row[(n - k) as usize].clone()
        };
        row.push(next);
    }
    row
}

/// `(a; Q)_len = prod_{k < len} (1 - Q^k a)` with `a = sign * q^a_exp` and
/// `Q = q^step_exp`. Negative steps are allowed for finite products.
pub fn poch(a_sign: Sign, a_exp: HalfInt, step_exp: HalfInt, len: usize) -> LaurentPoly {
    (0..len as i64)
        .map(|k| LaurentPoly::one_minus(a_sign.value(), a_exp + step_exp.times(k)))
        .product()
}

/// `g_i = (1 - q)(1 - q^3)...(1 - q^{2i-1})`, `g_0 = 1`.
pub fn gauss_product(i: usize) -> LaurentPoly {
    poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), i)
}

/// `s_{N|r} = (-1)^N sum_l [N over l] (-q^r)^l`.
pub fn s_sum(n: u32, r: HalfInt) -> LaurentPoly {
    let total: LaurentPoly = q_binomial_row(n, BaseStep::Q)
        .into_iter()
        .enumerate()
        .map(|(l, b)| {
            let b = b.shift(r.times(l as i64));
            if l % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum();
    if n % 2 == 0 {
        total
    } else {
        -total
    }
}

/// `G_k = S_k(1)`: zero for odd `k`, the Gauss product `g_{k/2}` otherwise.
#[allow(non_snake_case)]
pub fn gauss_G(k: usize) -> LaurentPoly {
    if k % 2 == 1 {
        LaurentPoly::zero()
    } else {
        gauss_product(k / 2)
    }
}

/// `sigma_N(gamma) = sum_k [N over k]_{q^2} q^{gamma k}`.
pub fn sigma(n: u32, gamma: HalfInt) -> LaurentPoly {
    q_binomial_row(n, BaseStep::Q2)
        .into_iter()
        .enumerate()
        .map(|(k, b)| b.shift(gamma.times(k as i64)))
        .sum()
}

/// `c_{l|s}` from the product formulas: for `s = 2r`,
/// `[l-r over r]_{q^2} g_{l-r} / g_r`; for `s = 2r+1`,
/// `[l-r-1 over r]_{q^2} g_{l-r} / g_{r+1}`. Zero unless `0 <= s <= l`.
pub fn c_coeff_closed(l: usize, s: i64) -> LaurentPoly {
    if s < 0 || s > l as i64 {
        return LaurentPoly::zero();
    }
    let l = l as i64;
    let r = s / 2;
    let (binom, denom) = if s % 2 == 0 {
        (q_binomial(l - r, r, BaseStep::Q2), gauss_product(r as usize))
    } else {
        (q_binomial(l - r - 1, r, BaseStep::Q2), gauss_product(r as usize + 1))
    };
    let ratio = gauss_product((l - r) as usize)
        .exact_div(&denom)
        .expect("ratio of Gauss products must be exact");
    binom * ratio
}

/// Rows `0..=l_max` of `c_{l|s}` from `c_{0|0} = 1` and
/// `c_{l+1|s} = (q^s - q^{2l+1}) c_{l|s} + c_{l|s-1}`.
pub fn c_coeff_table(l_max: usize) -> Vec<Vec<LaurentPoly>> {
    let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]];
    for l in 0..l_max {
        let prev = &rows[l];
        let next = (0..=l + 1)
            .map(|s| {
                let stay = prev.get(s).map_or_else(LaurentPoly::zero, |c| {
                    let factor = LaurentPoly::q_int_pow(s as i64)
                        - LaurentPoly::q_int_pow(2 * l as i64 + 1);
                    factor * c
                });
                let shift = if s > 0 { prev[s - 1].clone() } else { LaurentPoly::zero() };
                stay + shift
            })
            .collect();
        rows.push(next);
    }
    rows
}

/// `c_{l|s}` by running the recurrence up to row `l`.
pub fn c_coeff_rec(l: usize, s: i64) -> LaurentPoly {
    if s < 0 || s > l as i64 {
        return LaurentPoly::zero();
    }
    c_coeff_table(l)[l][s as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(c.iter().copied())
    }

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::q_int_pow(e)
    }

    fn one_minus_q(e: i64) -> LaurentPoly {
        LaurentPoly::one() - q(e)
    }

    /// Gaussian binomials from the Pascal rule alone.
    fn pascal_oracle(n: usize) -> Vec<Vec<LaurentPoly>> {
        let mut rows = vec![vec![LaurentPoly::one()]];
        for m in 1..=n {
            let prev: &Vec<LaurentPoly> = &rows[m - 1];
            let row = (0..=m)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { LaurentPoly::zero() };
                    let right = prev.get(k).map_or_else(LaurentPoly::zero, |c| c * q(k as i64));
                    left + right
                })
                .collect();
            rows.push(row);
        }
        rows
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(2, BaseStep::Q), p(&[1, 1]));
        assert_eq!(q_int(0, BaseStep::Q), LaurentPoly::zero());
        assert_eq!(q_int(3, BaseStep::Q2), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn q_factorials() {
        assert_eq!(q_factorial(0, BaseStep::Q), LaurentPoly::one());
        assert_eq!(q_factorial(2, BaseStep::Q), p(&[1, 1]));
        assert_eq!(q_factorial(3, BaseStep::Q), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn rows_match_single_binomials() {
        for n in 0..=14u32 {
            for b in [BaseStep::Q, BaseStep::Q2] {
                let row = q_binomial_row(n, b);
                assert_eq!(row.len(), n as usize + 1);
                for (k, v) in row.iter().enumerate() {
                    assert_eq!(v, &q_binomial(n as i64, k as i64, b), "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(4, 2, BaseStep::Q), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0, BaseStep::Q), LaurentPoly::one());
        assert_eq!(q_binomial(3, 5, BaseStep::Q), LaurentPoly::zero());
        assert_eq!(q_binomial(-1, 0, BaseStep::Q), LaurentPoly::zero());
        assert_eq!(q_binomial(3, -1, BaseStep::Q), LaurentPoly::zero());
    }

    #[test]
    fn binomials_match_pascal_oracle() {
        let table = pascal_oracle(18);
        for (n, row) in table.iter().enumerate() {
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&q_binomial(n as i64, k as i64, BaseStep::Q), expected, "n={n} k={k}");
                let b2 = expected.substitute_q_power(HalfInt::int(2)).unwrap();
                assert_eq!(q_binomial(n as i64, k as i64, BaseStep::Q2), b2);
            }
        }
    }

    #[test]
    fn half_integer_base() {
        let b = BaseStep::new(HalfInt::HALF).unwrap();
        let expected = q_binomial(5, 2, BaseStep::Q).substitute_q_power(HalfInt::HALF).unwrap();
        assert_eq!(q_binomial(5, 2, b), expected);
        assert!(BaseStep::new(HalfInt::ZERO).is_err());
    }

    #[test]
    fn pochhammer_products() {
        let one = HalfInt::ONE;
        assert_eq!(poch(Sign::Plus, one, HalfInt::int(2), 2), one_minus_q(1) * one_minus_q(3));
        assert_eq!(poch(Sign::Minus, HalfInt::new(7), HalfInt::new(-3), 0), LaurentPoly::one());
        let down = poch(Sign::Plus, HalfInt::int(5), HalfInt::int(-2), 3);
        assert_eq!(down, one_minus_q(5) * one_minus_q(3) * one_minus_q(1));
        // (-q; q)_2 = (1 + q)(1 + q^2)
        assert_eq!(poch(Sign::Minus, one, one, 2), p(&[1, 1]) * p(&[1, 0, 1]));
        assert!(Sign::of(2).is_err());
    }

    #[test]
    fn gauss_products() {
        assert_eq!(gauss_product(0), LaurentPoly::one());
        assert_eq!(gauss_product(1), one_minus_q(1));
        assert_eq!(gauss_product(3), one_minus_q(1) * one_minus_q(3) * one_minus_q(5));
    }

    #[test]
    fn alternating_sums() {
        assert_eq!(s_sum(2, HalfInt::ZERO), one_minus_q(1));
        assert_eq!(s_sum(3, HalfInt::ZERO), LaurentPoly::zero());
        assert_eq!(s_sum(3, HalfInt::ONE), -(one_minus_q(1) * one_minus_q(3)));
    }

    #[test]
    fn gauss_g_values() {
        assert_eq!(gauss_G(1), LaurentPoly::zero());
        assert_eq!(gauss_G(0), LaurentPoly::one());
        assert_eq!(gauss_G(4), one_minus_q(1) * one_minus_q(3));
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(2, HalfInt::ONE), p(&[1, 1, 1, 1]));
        assert_eq!(sigma(0, HalfInt::int(7)), LaurentPoly::one());
        assert_eq!(sigma(1, HalfInt::int(3)), p(&[1, 0, 0, 1]));
    }

    #[test]
    fn c_coefficients_small() {
        assert_eq!(c_coeff_closed(1, 0), one_minus_q(1));
        assert_eq!(c_coeff_closed(1, 1), LaurentPoly::one());
        assert_eq!(c_coeff_rec(2, 2), LaurentPoly::one());
        assert_eq!(c_coeff_closed(2, 2), LaurentPoly::one());
        assert_eq!(c_coeff_closed(2, 3), LaurentPoly::zero());
        assert_eq!(c_coeff_rec(2, -1), LaurentPoly::zero());
    }

    #[test]
    fn c_closed_matches_recurrence() {
        let table = c_coeff_table(20);
        for (l, row) in table.iter().enumerate() {
            for (s, c) in row.iter().enumerate() {
                assert_eq!(&c_coeff_closed(l, s as i64), c, "l={l} s={s}");
            }
        }
    }

    #[test]
    fn classical_limit_of_binomials() {
        for n in 0..=30i64 {
            let mut classical = BigInt::from(1);
            for k in 0..=n {
                assert_eq!(q_binomial(n, k, BaseStep::Q).eval_at_one(), classical);
                classical = classical * (n - k) / (k + 1);
            }
        }
    }
}
