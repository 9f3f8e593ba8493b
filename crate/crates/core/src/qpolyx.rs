//! Polynomials in `x` built from Gaussian binomials: Rogers-Szegő
//! polynomials and their expansion in rising powers `(x -. 1)^k`, the
//! q-Taylor expansion, and the one-parameter family `P_N` with its
//! connection coefficients to the `rho_n` basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::qcore::{gauss_G, poch, q_binomial, q_binomial_row, q_factorial, BaseStep, Sign};
use crate::{Error, HalfInt, LaurentPoly, RationalFunction, Result, XPoly};

/// `1` when `N` is even and `0` when `N` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonParity(u8);

impl EpsilonParity {
    pub fn of(n: usize) -> Self {
        EpsilonParity(u8::from(n % 2 == 0))
    }

    /// The same value written as `floor((N+2)/2) - floor((N+1)/2)`.
    pub fn from_floors(n: usize) -> Self {
        EpsilonParity(((n + 2) / 2 - (n + 1) / 2) as u8)
    }

    pub fn value(self) -> usize {
        self.0 as usize
    }
}

pub fn q_derivative(f: &XPoly) -> XPoly {
    f.q_derivative()
}

/// `f(x) -> x f(x) - f(qx)`.
pub fn op_o(f: &XPoly) -> XPoly {
    &f.mul_x() - &f.scale_arg(HalfInt::ONE)
}

/// The rising power `(x +. v)^l = prod_{k < l} (x + q^k v)`.
pub fn rising_x(v: &LaurentPoly, l: usize) -> XPoly {
    (0..l as i64)
        .map(|k| XPoly::linear(v.shift(HalfInt::int(k))))
        .product()
}

/// The scalar rising power `(a +. b)^l = prod_{k < l} (a + q^k b)`.
pub fn rising_scalar(a: &LaurentPoly, b: &LaurentPoly, l: usize) -> LaurentPoly {
    (0..l as i64).map(|k| a + &b.shift(HalfInt::int(k))).product()
}

/// `(x -. 1)^l`.
pub fn rising_minus_one(l: usize) -> XPoly {
    rising_x(&LaurentPoly::constant(-1), l)
}

/// `S_N(x) = (-1)^N sum_l [N over l] (-x)^l`.
pub fn rogers_szego_s(n: usize) -> XPoly {
    XPoly::from_coeffs(
        q_binomial_row(n as u32, BaseStep::Q)
            .into_iter()
            .enumerate()
            .map(|(l, b)| if (n + l) % 2 == 0 { b } else { -b })
            .collect(),
    )
}

/// Coefficient of `(x -. 1)^{N-2k}` in the closed form:
/// `[floor(N/2) over k]_{q^2} (q^{N - eps(N)}; q^{-2})_k`, zero outside
/// `0 <= k <= floor(N/2)`.
pub fn e_coeff(n: usize, k: i64) -> LaurentPoly {
    let half = (n / 2) as i64;
    if k < 0 || k > half {
        return LaurentPoly::zero();
    }
    let top = n as i64 - EpsilonParity::of(n).value() as i64;
    q_binomial(half, k, BaseStep::Q2)
        * poch(Sign::Plus, HalfInt::int(top), HalfInt::int(-2), k as usize)
}

/// `sum_k e_{N|k} (x -. 1)^{N-2k}`.
pub fn closed_form_s_tilde(n: usize) -> XPoly {
    (0..=(n / 2))
        .map(|k| rising_minus_one(n - 2 * k).scale(&e_coeff(n, k as i64)))
        .sum()
}

/// Coefficients `c_k = f^{(k)}(a) / [k]!` of `f` in the basis `(x -. a)^k`.
pub fn q_taylor(f: &XPoly, a: &LaurentPoly) -> Vec<LaurentPoly> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(deg + 1);
    let mut d = f.clone();
    for k in 0..=deg {
        let value = d.eval(a);
        let c = value
            .exact_div(&q_factorial(k as u32, BaseStep::Q))
            .expect("q-Taylor coefficient of a polynomial must be exact");
        out.push(c);
        d = d.q_derivative();
    }
    out
}

/// `sum_k c_k (x -. a)^k`.
pub fn taylor_reconstruct(coeffs: &[LaurentPoly], a: &LaurentPoly) -> XPoly {
    let minus_a = -a;
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| rising_x(&minus_a, k).scale(c))
        .sum()
}

/// Checks both monomial expansions:
/// `x^n = sum_k [n over k] a^{n-k} (x -. a)^k` and
/// `sum_k [n over k] a^{n-k} (x +. b)^k = sum_k [n over k] x^{n-k} (a +. b)^k`.
pub fn monomial_expansion_check(n: usize, a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let (lhs1, rhs1, lhs2, rhs2) = monomial_expansion_sides(n, a, b);
    lhs1 == rhs1 && lhs2 == rhs2
}

/// The four sides compared by [`monomial_expansion_check`].
pub fn monomial_expansion_sides(
    n: usize,
    a: &LaurentPoly,
    b: &LaurentPoly,
) -> (XPoly, XPoly, XPoly, XPoly) {
    let ni = n as i64;
    let xn = XPoly::monomial(LaurentPoly::one(), n);
    let minus_a = -a;
    let mut expansion = XPoly::zero();
    let mut left = XPoly::zero();
    let mut right = XPoly::zero();
    for k in 0..=n {
        let binom = q_binomial(ni, k as i64, BaseStep::Q);
        let weight = &binom * &a.pow_u((n - k) as u64);
        expansion = expansion + rising_x(&minus_a, k).scale(&weight);
        left = left + rising_x(b, k).scale(&weight);
        right = right + XPoly::monomial(&binom * &rising_scalar(a, b, k), n - k);
    }
    (xn, expansion, left, right)
}

fn alpha_exp(alpha2: u32, m: i64) -> HalfInt {
    HalfInt::new(alpha2 as i64 * m)
}

/// `P_N(x) = sum_l [N over l] x^l q^{alpha l^2}` with `alpha = alpha2 / 2`.
#[allow(non_snake_case)]
pub fn P_N(n: usize, alpha2: u32) -> XPoly {
    let ni = n as i64;
    XPoly::from_coeffs(
        (0..=ni)
            .map(|l| q_binomial(ni, l, BaseStep::Q).shift(alpha_exp(alpha2, l * l)))
            .collect(),
    )
}

/// Euler's product `(1 - x)(1 - qx)...(1 - q^{N-1}x)`.
pub fn euler_binomial_product(n: usize) -> XPoly {
    (0..n as i64)
        .map(|k| XPoly::from_coeffs(vec![LaurentPoly::one(), -LaurentPoly::q_int_pow(k)]))
        .product()
}

/// The expanded side `sum_l [N over l] (-x)^l q^{C(l,2)}`.
pub fn euler_binomial_sum(n: usize) -> XPoly {
    let ni = n as i64;
    XPoly::from_coeffs(
        (0..=ni)
            .map(|l| {
                let sign = if l % 2 == 0 { 1 } else { -1 };
                q_binomial(ni, l, BaseStep::Q) * LaurentPoly::monomial(sign, HalfInt::int(l * (l - 1) / 2))
            })
            .collect(),
    )
}

/// `rho_n(x) = q^{(1-2 alpha) C(n,2)} (-q^{(2n-1) alpha} x; q^{-1})_n`.
pub fn rho_n(n: usize, alpha2: u32) -> XPoly {
    let ni = n as i64;
    let prefactor = LaurentPoly::q_int_pow((1 - alpha2 as i64) * ni * (ni - 1) / 2);
    let product: XPoly = (0..ni)
        .map(|k| {
            let e = alpha_exp(alpha2, 2 * ni - 1) - HalfInt::int(k);
            XPoly::from_coeffs(vec![LaurentPoly::one(), LaurentPoly::q_pow(e)])
        })
        .product();
    product.scale(&prefactor)
}

/// Solves `P_N = sum_k [N over k] rho_{N-k} theta_k` for `theta_0..theta_N`
/// at a single `N`, by matching coefficients from `x^N` downwards.
pub fn theta_solve_at(n: usize, alpha2: u32) -> Vec<RationalFunction> {
    let ni = n as i64;
    let p = P_N(n, alpha2);
    let rhos: Vec<XPoly> = (0..=n).map(|m| rho_n(m, alpha2)).collect();
    let binoms: Vec<LaurentPoly> = (0..=ni).map(|k| q_binomial(ni, k, BaseStep::Q)).collect();
    let mut thetas: Vec<RationalFunction> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let d = n - k;
        let mut rest = RationalFunction::from_poly(p.coeff(d));
        for (i, theta) in thetas.iter().enumerate() {
            let c = &binoms[i] * &rhos[n - i].coeff(d);
            if !c.is_zero() {
                rest = &rest - &(&RationalFunction::from_poly(c) * theta);
            }
        }
        // rho_{N-k} has leading coefficient q^{alpha (N-k)^2}
        let di = d as i64;
        let pivot = &binoms[k] * &LaurentPoly::q_pow(alpha_exp(alpha2, di * di));
        let theta = rest
            .div(&RationalFunction::from_poly(pivot))
            .expect("pivot is a nonzero polynomial")
            .reduced();
        thetas.push(theta);
    }
    thetas
}

/// `P_N - sum_k [N over k] rho_{N-k} theta_k`, one rational entry per
/// `x`-degree `0..=N`.
pub fn theta_residual(n: usize, alpha2: u32, thetas: &[RationalFunction]) -> Vec<RationalFunction> {
    let ni = n as i64;
    let p = P_N(n, alpha2);
    let mut residual: Vec<RationalFunction> =
        (0..=n).map(|d| RationalFunction::from_poly(p.coeff(d))).collect();
    for (k, theta) in thetas.iter().enumerate().take(n + 1) {
        let basis = rho_n(n - k, alpha2).scale(&q_binomial(ni, k as i64, BaseStep::Q));
        for (d, c) in basis.coeffs().iter().enumerate() {
            if !c.is_zero() {
                residual[d] = &residual[d] - &(&RationalFunction::from_poly(c.clone()) * theta);
            }
        }
    }
    residual
}

/// Connection coefficients `theta_0..=theta_{n_max}` solved at `N = n_max`.
///
/// The result is accepted only if re-solving at every smaller `N` yields the
/// same leading coefficients and the residual vanishes at every `N`; otherwise
/// [`Error::ThetaInconsistent`] names the first disagreeing index.
pub fn theta_solve(n_max: usize, alpha2: u32) -> Result<Vec<RationalFunction>> {
    let thetas = theta_solve_at(n_max, alpha2);
    for n in 0..n_max {
        let local = theta_solve_at(n, alpha2);
        if let Some(k) = (0..=n).find(|&k| local[k] != thetas[k]) {
            return Err(Error::ThetaInconsistent { k, n_a: n, n_b: n_max });
        }
    }
    for n in 0..=n_max {
        let res = theta_residual(n, alpha2, &thetas);
        if res.iter().any(|r| !r.is_zero()) {
            let k = n;
            return Err(Error::ThetaInconsistent { k, n_a: n, n_b: n_max });
        }
    }
    Ok(thetas)
}

/// The derivative rule and both step recurrences for `P_N`:
/// `D P_N = [N] q^a P_{N-1}(q^{2a} x)`,
/// `P_{N+1} = q^a x P_N(q^{2a} x) + P_N(qx) = q^{N+a} x P_N(q^{2a-1} x) + P_N(x)`.
pub fn recurrence_check_p(n: usize, alpha2: u32) -> bool {
    recurrence_sides_p(n, alpha2).iter().all(|(l, r)| l == r)
}

/// `(lhs, rhs)` for each of the three `P_N` relations, in order.
pub fn recurrence_sides_p(n: usize, alpha2: u32) -> [(XPoly, XPoly); 3] {
    assert!(n >= 1, "P_N recurrences need N >= 1");
    let a = HalfInt::new(alpha2 as i64);
    let two_a = HalfInt::int(alpha2 as i64);
    let p = P_N(n, alpha2);
    let p_prev = P_N(n - 1, alpha2);
    let p_next = P_N(n + 1, alpha2);
    let qa = LaurentPoly::q_pow(a);
    let deriv_rhs = p_prev
        .scale_arg(two_a)
        .scale(&(crate::qcore::q_int(n as u32, BaseStep::Q) * &qa));
    let step_a = &p.scale_arg(two_a).mul_x().scale(&qa) + &p.scale_arg(HalfInt::ONE);
    let step_b = &p
        .scale_arg(two_a - HalfInt::ONE)
        .mul_x()
        .scale(&LaurentPoly::q_pow(HalfInt::int(n as i64) + a))
        + &p;
    [
        (p.q_derivative(), deriv_rhs),
        (p_next.clone(), step_a),
        (p_next, step_b),
    ]
}

/// `theta_k = (-1)^k G_k`, the known values for `alpha = 0`.
pub fn theta_alpha_zero(k: usize) -> LaurentPoly {
    let g = gauss_G(k);
    if k % 2 == 0 {
        g
    } else {
        -g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{gauss_product, q_int, s_sum};

    fn p(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_q_coeffs(c.iter().copied())
    }

    fn xp(c: &[&[i64]]) -> XPoly {
        XPoly::from_coeffs(c.iter().map(|v| p(v)).collect())
    }

    #[test]
    fn epsilon_forms_agree() {
        for n in 0..50 {
            assert_eq!(EpsilonParity::of(n), EpsilonParity::from_floors(n));
        }
        assert_eq!(EpsilonParity::of(4).value(), 1);
        assert_eq!(EpsilonParity::of(3).value(), 0);
    }

    #[test]
    fn operator_examples() {
        assert_eq!(op_o(&XPoly::one()), xp(&[&[-1], &[1]]));
        assert_eq!(op_o(&xp(&[&[-1], &[1]])), xp(&[&[1], &[-1, -1], &[1]]));
        // O((x -. 1)^2) = (x -. 1)^3 + q(1 - q^2)(x -. 1)
        let rhs = &rising_minus_one(3) + &rising_minus_one(1).scale(&p(&[0, 1, 0, -1]));
        assert_eq!(op_o(&rising_minus_one(2)), rhs);
    }

    #[test]
    fn rising_examples() {
        let m1 = LaurentPoly::constant(-1);
        assert_eq!(rising_x(&m1, 2), xp(&[&[0, 1], &[-1, -1], &[1]]));
        assert_eq!(rising_x(&p(&[3, 4]), 0), XPoly::one());
        assert_eq!(rising_x(&m1, 1), xp(&[&[-1], &[1]]));
    }

    #[test]
    fn rogers_szego_examples() {
        assert_eq!(rogers_szego_s(0), XPoly::one());
        assert_eq!(rogers_szego_s(1), xp(&[&[-1], &[1]]));
        assert_eq!(rogers_szego_s(2), xp(&[&[1], &[-1, -1], &[1]]));
        let s4_at_one = rogers_szego_s(4).eval(&LaurentPoly::one());
        assert_eq!(s4_at_one, p(&[1, -1]) * p(&[1, 0, 0, -1]));
        assert_eq!(q_derivative(&rogers_szego_s(3)), rogers_szego_s(2).scale(&q_int(3, BaseStep::Q)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_s_tilde(1), xp(&[&[-1], &[1]]));
        assert_eq!(closed_form_s_tilde(2), xp(&[&[1], &[-1, -1], &[1]]));
        for n in 0..=16 {
            assert_eq!(closed_form_s_tilde(n), rogers_szego_s(n), "N={n}");
        }
    }

    #[test]
    fn e_coefficients() {
        for n in 0..8 {
            assert_eq!(e_coeff(n, 0), LaurentPoly::one());
        }
        assert_eq!(e_coeff(2, 1), p(&[1, -1]));
        assert_eq!(e_coeff(3, 1), p(&[1, 0, 0, -1]));
        assert_eq!(e_coeff(3, 2), LaurentPoly::zero());
    }

    #[test]
    fn taylor_examples() {
        let x2 = XPoly::monomial(LaurentPoly::one(), 2);
        let c = q_taylor(&x2, &LaurentPoly::one());
        assert_eq!(c, alloc::vec![p(&[1]), p(&[1, 1]), p(&[1])]);
        let f = xp(&[&[2, 1], &[0, 0, 3], &[-1]]);
        assert_eq!(q_taylor(&f, &LaurentPoly::zero()), f.coeffs().to_vec());
        let a = LaurentPoly::q_int_pow(1);
        assert_eq!(taylor_reconstruct(&q_taylor(&f, &a), &a), f);
        let n = 6;
        let c = q_taylor(&rogers_szego_s(n), &LaurentPoly::one());
        for (k, ck) in c.iter().enumerate() {
            assert_eq!(ck, &(q_binomial(n as i64, k as i64, BaseStep::Q) * gauss_G(n - k)));
        }
    }

    #[test]
    fn monomial_expansions() {
        assert!(monomial_expansion_check(0, &p(&[1]), &p(&[2])));
        assert!(monomial_expansion_check(2, &LaurentPoly::one(), &LaurentPoly::one()));
        for n in 0..=8 {
            let a = LaurentPoly::monomial(-1, HalfInt::int(2));
            let b = p(&[1, 1]);
            assert!(monomial_expansion_check(n, &a, &b), "n={n}");
        }
    }

    #[test]
    fn p_family_examples() {
        assert_eq!(P_N(2, 0), xp(&[&[1], &[1, 1], &[1]]));
        let s2_neg = rogers_szego_s(2);
        let flipped = XPoly::from_coeffs(
            s2_neg.coeffs().iter().enumerate().map(|(d, c)| if d % 2 == 0 { c.clone() } else { -c }).collect(),
        );
        assert_eq!(P_N(2, 0), flipped);
        for alpha2 in 0..4 {
            let expected = XPoly::from_coeffs(alloc::vec![LaurentPoly::one(), LaurentPoly::q_pow(HalfInt::new(alpha2 as i64))]);
            assert_eq!(P_N(1, alpha2), expected);
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_binomial_product(2), xp(&[&[1], &[-1, -1], &[0, 1]]));
        assert_eq!(euler_binomial_sum(2), euler_binomial_product(2));
        assert_eq!(euler_binomial_product(0), XPoly::one());
        assert_eq!(euler_binomial_sum(5).eval(&LaurentPoly::one()), LaurentPoly::zero());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho_n(0, 1), XPoly::one());
        let expected = &XPoly::linear(LaurentPoly::one()) * &XPoly::linear(p(&[0, 1]));
        assert_eq!(rho_n(2, 0), expected);
        assert_eq!(rho_n(1, 1), XPoly::from_coeffs(alloc::vec![LaurentPoly::one(), LaurentPoly::q_pow(HalfInt::HALF)]));
        for alpha2 in 0..4 {
            for n in 0..8usize {
                let lead = rho_n(n, alpha2).coeff(n);
                assert_eq!(lead, LaurentPoly::q_pow(HalfInt::new((alpha2 as usize * n * n) as i64)));
            }
        }
    }

    #[test]
    fn theta_alpha_zero_matches_gauss_values() {
        let thetas = theta_solve(8, 0).unwrap();
        for (k, t) in thetas.iter().enumerate() {
            assert_eq!(t, &RationalFunction::from_poly(theta_alpha_zero(k)), "k={k}");
        }
        assert_eq!(thetas[2].as_poly().unwrap(), p(&[1, -1]));
        assert!(thetas[1].is_zero());
    }

    #[test]
    fn theta_leading_is_one_and_residual_vanishes() {
        for alpha2 in [0, 1, 2, 3] {
            let thetas = theta_solve(6, alpha2).unwrap();
            assert_eq!(thetas[0], RationalFunction::one());
            for n in 0..=6 {
                assert!(theta_residual(n, alpha2, &thetas).iter().all(RationalFunction::is_zero));
            }
        }
    }

    #[test]
    fn p_recurrences() {
        for alpha2 in [0, 1, 2] {
            for n in 1..=8 {
                assert!(recurrence_check_p(n, alpha2), "N={n} alpha2={alpha2}");
            }
        }
    }

    #[test]
    fn gauss_values_from_sums() {
        for m in 0..6 {
            assert_eq!(s_sum(2 * m + 2, HalfInt::ZERO), gauss_product(m as usize + 1));
        }
    }
}
