//! Power series in `q` with integer coefficients.
//!
//! When half-integer exponents occur the series is kept in `u = q^{1/2}`
//! instead (variable name `"u"`, twice the order), so every coefficient index
//! is an integer.

use alloc::format;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Ring, TruncSeries};
use crate::qcore::{poch, q_binomial, BaseStep, Sign};
use crate::{Error, HalfInt, LaurentPoly, Result};

pub type QSeries = TruncSeries<BigInt>;
pub type ZQSeries = TruncSeries<QSeries>;

/// The lattice a q-series lives on: `q` itself, or `u = q^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    half: bool,
}

impl Lattice {
    pub const Q: Lattice = Lattice { half: false };
    pub const U: Lattice = Lattice { half: true };

    /// The coarsest lattice holding all of `exps`.
    pub fn for_exponents(exps: &[HalfInt]) -> Lattice {
        Lattice { half: exps.iter().any(|e| !e.is_integer()) }
    }

    pub fn var(self) -> &'static str {
        if self.half { "u" } else { "q" }
    }

    /// Series length for a precision of `order` powers of `q`.
    pub fn len(self, order: usize) -> usize {
        if self.half { 2 * order } else { order }
    }

    /// Index of `q^e`, or `None` for negative exponents.
    pub fn index(self, e: HalfInt) -> Option<usize> {
        let i = if self.half { e.twice() } else { e.to_integer()? };
        usize::try_from(i).ok()
    }

    pub fn one(self, order: usize) -> QSeries {
        TruncSeries::one(self.var(), self.len(order), BigInt::zero())
    }
}

/// A Laurent polynomial with nonnegative exponents as a q-series modulo
/// `q^order`.
pub fn laurent_to_series(p: &LaurentPoly, lattice: Lattice, order: usize) -> Result<QSeries> {
    let mut s = TruncSeries::zero(lattice.var(), lattice.len(order), BigInt::zero());
    for (e, c) in p.terms() {
        let i = lattice
            .index(e)
            .ok_or_else(|| Error::InvalidParameter(format!("exponent {e} does not fit the {} lattice", lattice.var())))?;
        s.set_coeff(i, c.clone());
    }
    Ok(s)
}

/// `(a; rho)_inf` with `a = sign q^{a_exp}` and `rho = q^{step_exp}`,
/// keeping only the factors visible below `q^order`.
pub fn infinite_poch(sign: Sign, a_exp: HalfInt, step_exp: HalfInt, order: usize) -> Result<QSeries> {
    if a_exp.twice() <= 0 || step_exp.twice() <= 0 {
        return Err(Error::DivergentTruncation(format!(
            "infinite product needs positive exponents, got a = q^{a_exp}, step q^{step_exp}"
        )));
    }
    let lattice = Lattice::for_exponents(&[a_exp, step_exp]);
    let len = lattice.len(order);
    let mut s = lattice.one(order);
    let minus_sign = BigInt::from(-sign.value());
    let mut e = a_exp;
    while let Some(i) = lattice.index(e).filter(|&i| i < len) {
        s = s.mul_binomial(&minus_sign, i);
        e = e + step_exp;
    }
    Ok(s)
}

/// `sigma_inf(gamma) = sum_k q^{gamma k} / (q^2; q^2)_k`.
pub fn sigma_infty(gamma: HalfInt, order: usize) -> Result<QSeries> {
    if gamma.twice() <= 0 {
        return Err(Error::DivergentTruncation(format!("sigma_inf needs gamma > 0, got {gamma}")));
    }
    let lattice = Lattice::for_exponents(&[gamma]);
    let len = lattice.len(order);
    let two = lattice.index(HalfInt::int(2)).expect("positive");
    let mut acc = TruncSeries::zero(lattice.var(), len, BigInt::zero());
    let mut inv_poch = lattice.one(order);
    let minus_one = -BigInt::one();
    for k in 0.. {
        let e = lattice.index(gamma.times(k as i64)).expect("positive");
        if e >= len {
            break;
        }
        acc = acc.try_add(&inv_poch.shift(e)).expect("same lattice");
        inv_poch = inv_poch.div_binomial(&minus_one, two * (k + 1));
    }
    Ok(acc)
}

/// Both sides of `sum_k q^{(2l+1)k}/(q^2;q^2)_k = (q;q^2)_l sum_k q^k/(q^2;q^2)_k`.
pub fn limit_identity_sides(l: usize, order: usize) -> (QSeries, QSeries) {
    let lhs = sigma_infty(HalfInt::int(2 * l as i64 + 1), order).expect("gamma positive");
    let prefix = poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), l);
    let prefix = laurent_to_series(&prefix, Lattice::Q, order).expect("nonnegative exponents");
    let base = sigma_infty(HalfInt::ONE, order).expect("gamma positive");
    (lhs, prefix.try_mul(&base).expect("same lattice"))
}

/// Both sides of `(a; rho)_l = (a; rho)_inf / (rho^l a; rho)_inf`.
pub fn finite_poch_sides(sign: Sign, a_exp: HalfInt, step_exp: HalfInt, l: usize, order: usize) -> Result<(QSeries, QSeries)> {
    let lattice = Lattice::for_exponents(&[a_exp, step_exp]);
    let lhs = laurent_to_series(&poch(sign, a_exp, step_exp, l), lattice, order)?;
    let full = infinite_poch(sign, a_exp, step_exp, order)?;
    let tail = infinite_poch(sign, a_exp + step_exp.times(l as i64), step_exp, order)?;
    let rhs = full.try_mul(&tail.reciprocal()?)?;
    Ok((lhs, rhs))
}

/// Both sides of
/// `(1/(q;q^2)_inf) sum_k z^k/(q^2;q^2)_k = (1/(z;q^2)_inf) sum_k q^k/(q^2;q^2)_k`
/// as series in `z` over series in `q`.
pub fn fine_functional_sides(order_z: usize, order_q: usize) -> (ZQSeries, ZQSeries) {
    let q_one = Lattice::Q.one(order_q);
    let minus_one = -BigInt::one();

    let inv_odd = infinite_poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), order_q)
        .and_then(|s| s.reciprocal())
        .expect("unit constant term");
    let mut lhs = TruncSeries::zero("z", order_z, q_one.zero_like());
    let mut inv_poch = q_one.clone();
    for k in 0..order_z {
        lhs.set_coeff(k, inv_odd.try_mul(&inv_poch).expect("same lattice"));
        inv_poch = inv_poch.div_binomial(&minus_one, 2 * (k + 1));
    }

    // (z; q^2)_inf = prod_j (1 - q^{2j} z), the factors with 2j < order_q
    let mut z_poch = TruncSeries::one("z", order_z, q_one.zero_like());
    for j in (0..order_q).step_by(2) {
        let c = TruncSeries::monomial("q", order_q, minus_one.clone(), j);
        z_poch = z_poch.mul_binomial(&c, 1);
    }
    let sigma1 = sigma_infty(HalfInt::ONE, order_q).expect("gamma positive");
    let rhs = z_poch.reciprocal().expect("unit constant term").scale(&sigma1);
    (lhs, rhs)
}

/// Substitutes `z = q^m` into a series in `z` over q-series. The result is
/// exact modulo `q^{min(order_q, m * order_z)}`.
pub fn substitute_z(s: &ZQSeries, m: usize) -> QSeries {
    let order_q = s.ring_zero().order();
    let order = order_q.min(m * s.order());
    let mut out = TruncSeries::zero("q", order, BigInt::zero());
    for (i, c) in s.coeffs().iter().enumerate() {
        out = out.try_add(&c.truncate(order).shift(m * i)).expect("same lattice");
    }
    out
}

/// `v_N = V_N(q) = sum_s [N+s, s] q^{C(s+1,2)}`.
pub fn v_number(n: usize, order: usize) -> QSeries {
    let mut acc = Lattice::Q.one(order).zero_like();
    for s in 0.. {
        let weight = s * (s + 1) / 2;
        if weight >= order {
            break;
        }
        let b = q_binomial((n + s) as i64, s as i64, BaseStep::Q).shift(HalfInt::int(weight as i64));
        let term = laurent_to_series(&b.truncate_below(HalfInt::int(order as i64)), Lattice::Q, order)
            .expect("nonnegative exponents");
        acc = acc.try_add(&term).expect("same lattice");
    }
    acc
}

/// Which printed form of `v_{2k+1}` a computed series agrees with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddReading {
    /// `1/(q;q^2)_k`
    Short,
    /// `1/((1-q)(1-q^3)...(1-q^{2k+1})) = 1/(q;q^2)_{k+1}`
    Expanded,
    Both,
    Neither,
}

/// The two candidate right sides for `v_{2k+1}`: `1/(q;q^2)_k` and
/// `1/(q;q^2)_{k+1}`.
pub fn fine_v_odd_candidates(k: usize, order: usize) -> (QSeries, QSeries) {
    let inv = |len: usize| {
        laurent_to_series(&poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), len), Lattice::Q, order)
            .and_then(|s| s.reciprocal())
            .expect("unit constant term")
    };
    (inv(k), inv(k + 1))
}

pub fn fine_v_odd_reading(k: usize, order: usize) -> OddReading {
    let v = v_number(2 * k + 1, order);
    let (short, expanded) = fine_v_odd_candidates(k, order);
    match (v == short, v == expanded) {
        (true, true) => OddReading::Both,
        (true, false) => OddReading::Short,
        (false, true) => OddReading::Expanded,
        (false, false) => OddReading::Neither,
    }
}

/// Both sides of `sum_{n>=0} q^{C(n+1,2)} = prod_{n>=1} (1 - q^{2n})/(1 - q^{2n-1})`.
pub fn triangular_sides(order: usize) -> (QSeries, QSeries) {
    let mut lhs = Lattice::Q.one(order).zero_like();
    for n in 0.. {
        let e = n * (n + 1) / 2;
        if e >= order {
            break;
        }
        lhs.set_coeff(e, BigInt::one());
    }
    let minus_one = -BigInt::one();
    let mut rhs = Lattice::Q.one(order);
    for n in 1..=order / 2 {
        rhs = rhs.mul_binomial(&minus_one, 2 * n);
    }
    for n in 1..=order.div_ceil(2) {
        rhs = rhs.div_binomial(&minus_one, 2 * n - 1);
    }
    (lhs, rhs)
}

/// The two printed right sides for `v_{2k}`:
/// `(1/(q^2;q^2)_k) sum_n q^{C(n+1,2)}` and the product form.
pub fn fine_v_even_candidates(k: usize, order: usize) -> (QSeries, QSeries) {
    let inv = laurent_to_series(&poch(Sign::Plus, HalfInt::int(2), HalfInt::int(2), k), Lattice::Q, order)
        .and_then(|s| s.reciprocal())
        .expect("unit constant term");
    let (sum, prod) = triangular_sides(order);
    (inv.try_mul(&sum).expect("same lattice"), inv.try_mul(&prod).expect("same lattice"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn qs(order: usize, c: &[i64]) -> QSeries {
        TruncSeries::from_coeffs("q", order, BigInt::zero(), c.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Coefficients of `sum_k q^k/(q^2;q^2)_k` by counting pairs
    /// (k, partition of the rest into even parts <= 2k).
    fn sigma1_oracle(order: usize) -> Vec<i64> {
        // number of partitions of m into parts from {2, 4, ..., 2k}
        fn parts(m: usize, max_part: usize) -> i64 {
            if m == 0 {
                return 1;
            }
            (1..=max_part / 2).map(|j| 2 * j).filter(|&p| p <= m).map(|p| parts(m - p, p)).sum()
        }
        (0..order).map(|n| (0..=n).map(|k| parts(n - k, 2 * k)).sum()).collect()
    }

    #[test]
    fn sigma_infty_examples() {
        let s = sigma_infty(HalfInt::ONE, 4).unwrap();
        assert_eq!(s, qs(4, &[1, 1, 1, 2]));
        let want = sigma1_oracle(20);
        assert_eq!(sigma_infty(HalfInt::ONE, 20).unwrap(), qs(20, &want));
        assert!(matches!(sigma_infty(HalfInt::ZERO, 5), Err(Error::DivergentTruncation(_))));
        assert!(sigma_infty(HalfInt::new(3), 6).unwrap().var() == "u");
    }

    #[test]
    fn limit_identity_low() {
        for l in 0..6 {
            let (lhs, rhs) = limit_identity_sides(l, 30);
            assert_eq!(lhs, rhs, "l={l}");
        }
    }

    #[test]
    fn infinite_poch_examples() {
        let s = infinite_poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), 4).unwrap();
        assert_eq!(s, qs(4, &[1, -1, 0, -1]));
        assert!(matches!(
            infinite_poch(Sign::Plus, HalfInt::ONE, HalfInt::int(-2), 4),
            Err(Error::DivergentTruncation(_))
        ));
        let (lhs, rhs) = finite_poch_sides(Sign::Plus, HalfInt::ONE, HalfInt::int(2), 2, 12).unwrap();
        assert_eq!(lhs, rhs);
        let (lhs, rhs) = finite_poch_sides(Sign::Minus, HalfInt::HALF, HalfInt::HALF, 3, 10).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn fine_functional_small() {
        let (lhs, rhs) = fine_functional_sides(5, 16);
        assert_eq!(lhs, rhs);
        for l in 0..3 {
            let m = 2 * l + 1;
            let (a, b) = limit_identity_sides(l, 16);
            let odd = infinite_poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), 16).unwrap();
            let sub = substitute_z(&lhs, m);
            let o = sub.order();
            assert_eq!(sub.try_mul(&odd).unwrap(), a.truncate(o));
            assert_eq!(substitute_z(&rhs, m).try_mul(&odd).unwrap(), b.truncate(o));
        }
    }

    #[test]
    fn v_numbers_and_readings() {
        // [1+s, s] = [s+1], so the blocks q^{C(s+1,2)} [s+1] tile the exponents
        assert_eq!(v_number(1, 6), qs(6, &[1, 1, 1, 1, 1, 1]));
        for k in 0..3 {
            assert_eq!(fine_v_odd_reading(k, 20), OddReading::Expanded, "k={k}");
        }
        let (sum, prod) = triangular_sides(30);
        assert_eq!(sum, prod);
        for k in 0..3 {
            let (a, b) = fine_v_even_candidates(k, 20);
            assert_eq!(a, b);
            assert_eq!(v_number(2 * k, 20), a, "k={k}");
        }
    }

    #[test]
    fn laurent_conversion() {
        let p = LaurentPoly::from_q_coeffs([1, 2, 3]);
        assert_eq!(laurent_to_series(&p, Lattice::Q, 2).unwrap(), qs(2, &[1, 2]));
        let h = LaurentPoly::q_pow(HalfInt::HALF);
        assert!(laurent_to_series(&h, Lattice::Q, 3).is_err());
        assert_eq!(laurent_to_series(&h, Lattice::U, 3).unwrap().coeffs(), &vec![0, 1, 0, 0, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>()[..]);
    }
}
