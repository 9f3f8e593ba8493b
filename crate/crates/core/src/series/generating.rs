//! Generating functions in a formal variable `t` (and `z`) with Laurent
//! polynomial coefficients.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TruncSeries;
use crate::qcore::{gauss_product, poch, q_binomial, BaseStep, Sign};
use crate::{HalfInt, LaurentPoly};

pub type TSeries = TruncSeries<LaurentPoly>;
pub type BiSeries = TruncSeries<TSeries>;

fn t_one(order: usize) -> TSeries {
    TruncSeries::one("t", order, LaurentPoly::zero())
}

fn binom2(l: usize) -> i64 {
    (l * l.saturating_sub(1) / 2) as i64
}

/// `1 / (1 +̇ t)^{l+1}` for `l = 0 .. count`, where `(1 +̇ t)^{m}` is
/// `(1 + t)(1 + qt)...(1 + q^{m-1} t)`.
pub fn inverse_rising_powers(count: usize, order: usize) -> Vec<TSeries> {
    let mut out = Vec::with_capacity(count);
    let mut cur = t_one(order);
    for l in 0..count {
        cur = cur.div_binomial(&LaurentPoly::q_int_pow(l as i64), 1);
        out.push(cur.clone());
    }
    out
}

/// `sum_s [N+s, s] t^s` truncated at `order`.
pub fn euler_negative_binomial(n: usize, order: usize) -> TSeries {
    let coeffs = (0..order).map(|s| q_binomial((n + s) as i64, s as i64, BaseStep::Q)).collect();
    TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), coeffs)
}

/// `(1 -̇ t)^{m} = prod_{k<m} (1 - q^k t)` as a series.
pub fn falling_product(m: usize, order: usize) -> TSeries {
    (0..m).fold(t_one(order), |acc, k| acc.mul_binomial(&-LaurentPoly::q_int_pow(k as i64), 1))
}

/// Both sides of `sum_l (q^r t)^l q^{C(l,2)} / (1 +̇ t)^{l+1} = sum_N (1 -̇ q^r)^N (-t)^N`.
pub fn geometric_q_sides(order: usize, r: HalfInt) -> (TSeries, TSeries) {
    let mut lhs = TruncSeries::zero("t", order, LaurentPoly::zero());
    for (l, inv) in inverse_rising_powers(order, order).into_iter().enumerate() {
        let weight = LaurentPoly::q_pow(r.times(l as i64) + HalfInt::int(binom2(l)));
        lhs = lhs.try_add(&inv.shift(l).scale(&weight)).expect("same variable");
    }
    let rhs_coeffs = (0..order)
        .map(|n| {
            let p = poch(Sign::Plus, r, HalfInt::ONE, n);
            if n % 2 == 0 { p } else { -p }
        })
        .collect();
    (lhs, TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), rhs_coeffs))
}

/// Both sides of `sum_k t^k / (1 +̇ t)^{k+1} = 1 + sum_m (1-q)(1-q^3)...(1-q^{2m-1}) t^{2m}`.
pub fn carlitz_sides(order: usize) -> (TSeries, TSeries) {
    let mut lhs = TruncSeries::zero("t", order, LaurentPoly::zero());
    for (k, inv) in inverse_rising_powers(order, order).into_iter().enumerate() {
        lhs = lhs.try_add(&inv.shift(k)).expect("same variable");
    }
    let rhs_coeffs = (0..order)
        .map(|d| if d % 2 == 0 { gauss_product(d / 2) } else { LaurentPoly::zero() })
        .collect();
    (lhs, TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), rhs_coeffs))
}

/// Both sides of `sum_l z^l q^{C(l,2)} / (1 +̇ t)^{l+1} = sum_N (-1)^N (t -̇ z)^N`
/// as series in `z` over series in `t`, with `(t -̇ z)^N = prod_{k<N} (t - q^k z)`.
pub fn bivariate_geometric_sides(order_z: usize, order_t: usize) -> (BiSeries, BiSeries) {
    let inner_zero = TruncSeries::zero("t", order_t, LaurentPoly::zero());
    let lhs_coeffs = inverse_rising_powers(order_z, order_t)
        .into_iter()
        .enumerate()
        .map(|(l, inv)| inv.scale(&LaurentPoly::q_int_pow(binom2(l))))
        .collect();
    let lhs = TruncSeries::from_coeffs("z", order_z, inner_zero.clone(), lhs_coeffs);

    // terms of total degree N in (z, t); once N >= order_z + order_t - 1 every
    // monomial falls outside one of the two windows
    let mut rhs = TruncSeries::zero("z", order_z, inner_zero.clone());
    let mut power = TruncSeries::one("z", order_z, inner_zero.clone());
    for n in 0..(order_z + order_t).saturating_sub(1) {
        let term = if n % 2 == 0 { power.clone() } else { power.neg() };
        rhs = rhs.try_add(&term).expect("same variable");
        // power *= (t - q^n z)
        let mut next = TruncSeries::zero("z", order_z, inner_zero.clone());
        let qn = LaurentPoly::q_int_pow(n as i64);
        for i in 0..order_z {
            let mut c = power.coeff(i).shift(1);
            if i > 0 {
                c = c.try_sub(&power.coeff(i - 1).scale(&qn)).expect("same variable");
            }
            next.set_coeff(i, c);
        }
        power = next;
    }
    (lhs, rhs)
}

/// Sets `q = 1` in every coefficient of a bivariate series.
pub fn bivariate_at_one(s: &BiSeries) -> TruncSeries<TruncSeries<BigInt>> {
    let order_t = s.ring_zero().order();
    let inner_zero = TruncSeries::zero("t", order_t, BigInt::zero());
    s.map_coeffs(inner_zero, |inner| inner.map_coeffs(BigInt::zero(), LaurentPoly::eval_at_one))
}

/// Both sides of the classical `1/(1+t) sum_l (z/(1+t))^l = sum_N (z - t)^N`
/// over the integers.
pub fn classical_bivariate_sides(
    order_z: usize,
    order_t: usize,
) -> (TruncSeries<TruncSeries<BigInt>>, TruncSeries<TruncSeries<BigInt>>) {
    let inner_zero = TruncSeries::zero("t", order_t, BigInt::zero());
    let one_plus_t = TruncSeries::from_coeffs("t", order_t, BigInt::zero(), alloc::vec![BigInt::one(), BigInt::one()]);
    let mut lhs = TruncSeries::zero("z", order_z, inner_zero.clone());
    let mut power = one_plus_t.clone();
    for l in 0..order_z {
        lhs.set_coeff(l, power.reciprocal().expect("unit constant term"));
        power = power.try_mul(&one_plus_t).expect("same variable");
    }
    // coefficient of z^i t^j in (z - t)^{i+j} is C(i+j, i) (-1)^j
    let mut rhs = TruncSeries::zero("z", order_z, inner_zero.clone());
    for i in 0..order_z {
        let mut inner = inner_zero.clone();
        let mut c = BigInt::one();
        for j in 0..order_t {
            if j > 0 {
                c = c * BigInt::from(i + j) / BigInt::from(j);
            }
            inner.set_coeff(j, if j % 2 == 0 { c.clone() } else { -c.clone() });
        }
        rhs.set_coeff(i, inner);
    }
    (lhs, rhs)
}

/// `V_N(t) = sum_s [N+s, s] q^{C(s,2)} t^s`.
pub fn v_generating(n: usize, order: usize) -> TSeries {
    let coeffs = (0..order)
        .map(|s| q_binomial((n + s) as i64, s as i64, BaseStep::Q).shift(HalfInt::int(binom2(s))))
        .collect();
    TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpolyx::euler_binomial_sum;

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(c.iter().copied())
    }

    #[test]
    fn negative_binomial_examples() {
        let s0 = euler_negative_binomial(0, 6);
        assert!(s0.coeffs().iter().all(LaurentPoly::is_one));
        assert_eq!(euler_negative_binomial(1, 4).coeff(2), p(&[1, 1, 1]));
        for n in 0..8 {
            let prod = euler_negative_binomial(n, 20).try_mul(&falling_product(n + 1, 20)).unwrap();
            assert_eq!(prod, t_one(20));
        }
    }

    #[test]
    fn negative_binomial_classical_limit() {
        let s = euler_negative_binomial(4, 10);
        let mut c = BigInt::one();
        for k in 0..10 {
            if k > 0 {
                c = c * BigInt::from(4 + k) / BigInt::from(k);
            }
            assert_eq!(s.coeff(k).eval_at_one(), c);
        }
    }

    #[test]
    fn geometric_examples() {
        let (lhs, rhs) = geometric_q_sides(10, HalfInt::ZERO);
        assert_eq!(lhs, t_one(10));
        assert_eq!(rhs, t_one(10));
        for r2 in [1, 2, 4, 6] {
            let (lhs, rhs) = geometric_q_sides(14, HalfInt::new(r2));
            assert_eq!(lhs, rhs, "r2={r2}");
        }
    }

    #[test]
    fn carlitz_low_coefficients() {
        let (lhs, rhs) = carlitz_sides(8);
        assert_eq!(lhs, rhs);
        assert!(lhs.coeff(1).is_zero());
        assert_eq!(lhs.coeff(2), p(&[1, -1]));
        assert_eq!(lhs.coeff(4), p(&[1, -1]) * p(&[1, 0, 0, -1]));
    }

    #[test]
    fn bivariate_small() {
        let (lhs, rhs) = bivariate_geometric_sides(6, 6);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.coeff(0), inverse_rising_powers(1, 6)[0]);
        let (cl, cr) = classical_bivariate_sides(4, 4);
        assert_eq!(cl, cr);
        assert_eq!(bivariate_at_one(&lhs.truncate(4)).coeff(2).truncate(4), cl.coeff(2));
    }

    #[test]
    fn euler_alternating_sums_regenerate_constant_one() {
        // sum_N (-t)^N sum_l [N,l] (-1)^l q^{C(l,2)} = 1
        let order = 12;
        let coeffs = (0..order)
            .map(|n| {
                let v = euler_binomial_sum(n).eval(&LaurentPoly::one());
                if n % 2 == 0 { v } else { -v }
            })
            .collect();
        assert_eq!(TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), coeffs), t_one(order));
    }

    #[test]
    fn v_generating_constant_term() {
        assert!(v_generating(0, 5).coeff(0).is_one());
        assert_eq!(v_generating(0, 5).coeff(3), LaurentPoly::q_int_pow(3));
    }
}
