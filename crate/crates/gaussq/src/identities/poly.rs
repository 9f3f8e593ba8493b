//! Checks for the polynomial identities: Gaussian binomial sums,
//! Rogers-Szegő polynomials, the operator recurrences and q-Taylor expansions.

use gaussq_core::qcore::{gauss_G, poch, q_binomial, q_binomial_row, q_factorial, q_int, s_sum, BaseStep, Sign};
use gaussq_core::qpolyx::{
    closed_form_s_tilde, e_coeff, euler_binomial_product, euler_binomial_sum, monomial_expansion_sides, op_o,
    q_taylor, recurrence_sides_p, rho_n, rising_minus_one, rising_scalar, rising_x, rogers_szego_s,
    taylor_reconstruct, theta_alpha_zero, theta_residual, theta_solve_at, EpsilonParity, P_N,
};
use gaussq_core::{HalfInt, LaurentPoly, RationalFunction, Result, XPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Checker, Point, PointExt, Seq};

pub(super) fn qb(n: usize, k: i64) -> LaurentPoly {
    q_binomial(n as i64, k, BaseStep::Q)
}

pub(super) fn qb2(n: usize, k: i64) -> LaurentPoly {
    q_binomial(n as i64, k, BaseStep::Q2)
}

pub(super) fn qi(n: usize) -> LaurentPoly {
    q_int(n as u32, BaseStep::Q)
}

pub(super) fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_int_pow(e)
}

pub(super) fn one() -> LaurentPoly {
    LaurentPoly::one()
}

fn signed(p: LaurentPoly, odd: bool) -> LaurentPoly {
    if odd {
        -p
    } else {
        p
    }
}

/// `(q^top; q^{-2})_k`.
fn down_poch(top: i64, k: usize) -> LaurentPoly {
    poch(Sign::Plus, HalfInt::int(top), HalfInt::int(-2), k)
}

/// `prod_{t in ts} (1 - q^t)`.
fn one_minus_product(ts: impl Iterator<Item = i64>) -> LaurentPoly {
    ts.map(|t| one() - qp(t)).product()
}

/// Row `n` of Pascal's triangle over the integers.
pub(super) fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

fn alternate(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c }).collect()
}

/// `f(-x)`.
fn flip_x(f: &XPoly) -> XPoly {
    XPoly::from_coeffs(f.coeffs().iter().enumerate().map(|(d, c)| signed(c.clone(), d % 2 == 1)).collect())
}

/// `(f(qx) - f(x)) / ((q - 1) x)` by exact division.
fn difference_quotient(f: &XPoly) -> Result<XPoly> {
    let diff = &f.scale_arg(HalfInt::ONE) - f;
    let q_minus_one = qp(1) - one();
    let coeffs = diff.coeffs().iter().skip(1).map(|c| c.exact_div(&q_minus_one)).collect::<Result<Vec<_>>>()?;
    Ok(XPoly::from_coeffs(coeffs))
}

fn alpha2(p: &Point) -> Result<u32> {
    let a = p.half("alpha")?.twice();
    u32::try_from(a).map_err(|_| gaussq_core::Error::InvalidParameter(format!("alpha must be >= 0, got {a}/2")))
}

pub(super) fn euler(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let product = euler_binomial_product(n);
    c.eq("(1 -. x)^N = sum [N,l] (-x)^l q^C(l,2)", &product, &euler_binomial_sum(n));
    for l in 0..=n {
        let lhs = qb(n, l as i64) * q_factorial(l as u32, BaseStep::Q) * q_factorial((n - l) as u32, BaseStep::Q);
        c.eq(&format!("[N,{l}] [{l}]! [N-{l}]! = [N]!"), &lhs, &q_factorial(n as u32, BaseStep::Q));
    }
    c.eq("(1 +. (-q))^N = (q; q)_N", &rising_scalar(&one(), &-qp(1), n), &poch(Sign::Plus, HalfInt::ONE, HalfInt::ONE, n));
    let classical = alternate(&pascal_row(n));
    c.eq("q=1: (1 - x)^N = sum C(N,l) (-x)^l", &Seq(product.eval_coeffs_at_one()), &Seq(classical.clone()));
    let alt: BigInt = classical.iter().sum();
    c.eq("q=1: sum C(N,l) (-1)^l = 0", &alt, &BigInt::from(u8::from(n == 0)));
    Ok(())
}

pub(super) fn euler_delta(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let alt = euler_binomial_sum(n).eval(&one());
    let delta = LaurentPoly::constant(u8::from(n == 0));
    c.eq("sum [N,l] (-1)^l q^C(l,2) = delta_N0", &alt, &delta);
    let classical: BigInt = alternate(&pascal_row(n)).iter().sum();
    c.eq("q=1: sum C(N,l) (-1)^l = delta_N0", &alt.eval_at_one(), &classical);
    Ok(())
}

pub(super) fn gauss(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let odd = n % 2 == 1;
    let s = s_sum(n as u32, HalfInt::ZERO);
    let want = if odd { LaurentPoly::zero() } else { one_minus_product((0..(n / 2) as i64).map(|t| 2 * t + 1)) };
    c.eq("s_{N|0} (Gauss)", &s, &want);
    let g_closed = if odd { LaurentPoly::zero() } else { down_poch(n as i64 - 1, n / 2) };
    c.eq("G_N = S_N(1) = (q^{N-1}; q^-2)_{N/2}", &rogers_szego_s(n).eval(&one()), &g_closed);
    let alternating: LaurentPoly = q_binomial_row(n as u32, BaseStep::Q).into_iter().enumerate().map(|(k, b)| signed(b, k % 2 == 1)).sum();
    c.eq("G_N = sum [N,k] (-1)^k", &gauss_G(n), &alternating);
    if n == 2 {
        c.eq("s_{2|0} = 1 - [2] + 1", &s, &(one() - qi(2) + one()));
    }
    Ok(())
}

pub(super) fn s_r1(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let s1 = s_sum(n as u32, HalfInt::ONE);
    if n % 2 == 1 {
        let m = (n - 1) / 2;
        let via_even = -((one() - qp(2 * m as i64 + 1)) * s_sum(2 * m as u32, HalfInt::ZERO));
        c.eq("s_{2m+1|1} = -(1 - q^{2m+1}) s_{2m|0}", &s1, &via_even);
        let product = -one_minus_product((0..=m as i64).map(|t| 2 * t + 1));
        c.eq("s_{2m+1|1} = -prod_{t=0}^m (1 - q^{2t+1})", &s1, &product);
    } else {
        let m = n / 2;
        c.eq("s_{2m|1} = s_{2m|0}", &s1, &s_sum(n as u32, HalfInt::ZERO));
        let product = one_minus_product((1..=m as i64).map(|t| 2 * t - 1));
        c.eq("s_{2m|1} = prod_{t=1}^m (1 - q^{2t-1})", &s1, &product);
    }
    let s_poly = rogers_szego_s(n);
    for r in [HalfInt::ZERO, HalfInt::HALF, HalfInt::ONE, HalfInt::int(2)] {
        c.eq(&format!("s_{{N|{r}}} = S_N(q^{r})"), &s_poly.eval(&LaurentPoly::q_pow(r)), &s_sum(n as u32, r));
    }
    Ok(())
}

/// The closed form written with `m`: odd `N = 2m+1` uses `(q^{2m+1}; q^-2)_k`,
/// even `N = 2m` uses `(q^{2m-1}; q^-2)_k`.
fn closed_form_by_m(n: usize) -> XPoly {
    let m = n / 2;
    let top = if n % 2 == 1 { 2 * m as i64 + 1 } else { 2 * m as i64 - 1 };
    (0..=m).map(|k| rising_minus_one(n - 2 * k).scale(&(qb2(m, k as i64) * down_poch(top, k)))).sum()
}

pub(super) fn main_theorem(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let s = rogers_szego_s(n);
    c.eq("S_N = S~_N", &s, &closed_form_s_tilde(n));
    c.eq("S_N = sum_k [m,k]_{q^2} (x -. 1)^{N-2k} (q^{2m+-1}; q^-2)_k", &s, &closed_form_by_m(n));
    let eps_a = BigInt::from(EpsilonParity::of(n).value());
    let eps_b = BigInt::from(EpsilonParity::from_floors(n).value());
    c.eq("eps(N) = floor((N+2)/2) - floor((N+1)/2)", &eps_a, &eps_b);
    let m = n / 2;
    for k in 0..=m {
        let ki = k as i64;
        let (label, direct) = if n % 2 == 1 {
            ("c_{m|k} = e_{2m+1|k}", qb2(m, ki) * down_poch(2 * m as i64 + 1, k))
        } else {
            ("d_{m|k} = e_{2m|k}", qb2(m, ki) * down_poch(2 * m as i64 - 1, k))
        };
        c.eq(label, &direct, &e_coeff(n, ki));
    }
    c.eq("S_0 = S~_0 = 1", &closed_form_s_tilde(0), &XPoly::one());
    c.eq("S_1 = S~_1 = x - 1", &closed_form_s_tilde(1), &XPoly::linear(LaurentPoly::constant(-1)));
    Ok(())
}

pub(super) fn x_zero(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let h = n / 2;
    let top = n as i64 - EpsilonParity::of(n).value() as i64;
    let sum: LaurentPoly = (0..=h)
        .map(|k| {
            let d = (n - 2 * k) as i64;
            qb2(h, k as i64) * qp(d * (d - 1) / 2) * down_poch(top, k)
        })
        .sum();
    c.eq("sum_k [N/2,k]_{q^2} q^C(N-2k,2) (q^{N-eps}; q^-2)_k = 1", &sum, &one());
    c.eq("S~_N(0) = (-1)^N", &closed_form_s_tilde(n).eval(&LaurentPoly::zero()), &signed(one(), n % 2 == 1));
    Ok(())
}

pub(super) fn q_derivative_rule(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let s = rogers_szego_s(n);
    let st = closed_form_s_tilde(n);
    let prev = n.checked_sub(1).map(rogers_szego_s).unwrap_or_default();
    let prev_t = n.checked_sub(1).map(closed_form_s_tilde).unwrap_or_default();
    c.eq("D_q S_N = [N] S_{N-1}", &s.q_derivative(), &prev.scale(&qi(n)));
    c.eq("D_q S~_N = [N] S~_{N-1}", &st.q_derivative(), &prev_t.scale(&qi(n)));
    c.eq("S_N(1) = S~_N(1)", &s.eval(&one()), &st.eval(&one()));
    c.eq("D_q f = (f(qx) - f(x)) / (qx - x)", &s.q_derivative(), &difference_quotient(&s)?);
    let termwise = XPoly::from_coeffs(
        (1..=n).map(|l| signed(qb(n, l as i64) * qi(l), (n + l) % 2 == 1)).collect(),
    );
    c.eq("D_q S_N termwise", &s.q_derivative(), &termwise);
    Ok(())
}

pub(super) fn factor(p: &Point, c: &mut Checker) -> Result<()> {
    let w = p.size("w")?;
    for l in 0..=w {
        let li = l as i64;
        let rhs = qi(w) * q_binomial(w as i64 - 1, li - 1, BaseStep::Q);
        c.eq(&format!("[w,{l}] [{l}] = [w] [w-1,{l}-1]"), &(qb(w, li) * qi(l)), &rhs);
    }
    Ok(())
}

pub(super) fn rising_derivative(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let vs = [LaurentPoly::constant(-1), qp(1), -LaurentPoly::q_pow(HalfInt::HALF), LaurentPoly::constant(2)];
    for v in &vs {
        let prev = if n == 0 { XPoly::zero() } else { rising_x(v, n - 1).scale(&qi(n)) };
        c.eq(&format!("D_q (x +. ({v}))^N = [N] (x +. ({v}))^(N-1)"), &rising_x(v, n).q_derivative(), &prev);
    }
    Ok(())
}

pub(super) fn shift_rule(p: &Point, c: &mut Checker) -> Result<()> {
    let m = p.size("m")?;
    let top = 2 * m + 3;
    for k in 0..=m + 1 {
        let lhs = qi(top - 2 * k) * down_poch(top as i64, k);
        let rhs = qi(top) * down_poch(top as i64 - 2, k);
        c.eq(&format!("[2m+3-2k] (q^{{2m+3}}; q^-2)_k, k={k}"), &lhs, &rhs);
    }
    Ok(())
}

pub(super) fn base_change(p: &Point, c: &mut Checker) -> Result<()> {
    let m = p.size("m")?;
    for k in 0..=m + 1 {
        let ki = k as i64;
        let lhs = qb2(m + 1, ki) * qi(2 * m + 2 - 2 * k);
        c.eq(&format!("[m+1,k]_{{q^2}} [2m+2-2k] = [2m+2] [m,k]_{{q^2}}, k={k}"), &lhs, &(qi(2 * m + 2) * qb2(m, ki)));
    }
    for u in 0..=m + 1 {
        let lhs = q_int(u as u32, BaseStep::Q2) * qi(2);
        c.eq(&format!("[{u}]_{{q^2}} [2] = [2*{u}]"), &lhs, &qi(2 * u));
    }
    Ok(())
}

pub(super) fn gauss_steps(p: &Point, c: &mut Checker) -> Result<()> {
    let m = p.size("m")?;
    let two_m = 2 * m as u32;
    let s0 = s_sum(two_m, HalfInt::ZERO);
    c.eq("s_{2m|1} = s_{2m|0}", &s_sum(two_m, HalfInt::ONE), &s0);
    let aux: LaurentPoly = (0..=2 * m).map(|l| signed(qb(2 * m, l as i64) * qi(l), l % 2 == 1)).sum();
    c.eq("sum [2m,l] (-1)^l [l] = 0", &aux, &LaurentPoly::zero());
    let odd_sum: LaurentPoly =
        (0..=2 * m as i64 + 1).map(|l| signed(qb(2 * m + 1, l) * qp(l), l % 2 == 1)).sum();
    let even_sum: LaurentPoly = (0..=2 * m as i64).map(|l| signed(qb(2 * m, l), l % 2 == 1)).sum();
    let factor = one() - qp(2 * m as i64 + 1);
    c.eq("sum [2m+1,l] (-q)^l = (1 - q^{2m+1}) sum [2m,l] (-1)^l", &odd_sum, &(&factor * &even_sum));
    for l in 0..=2 * m as i64 + 1 {
        let rhs = qb(2 * m, l) + qp(2 * m as i64 + 1 - l) * qb(2 * m, l - 1);
        c.eq(&format!("[2m+1,{l}] = [2m,{l}] + q^{{2m+1-{l}}} [2m,{l}-1]"), &qb(2 * m + 1, l), &rhs);
    }
    c.eq("s_{2m+2|0} = (1 - q^{2m+1}) s_{2m|0}", &s_sum(two_m + 2, HalfInt::ZERO), &(&factor * &s0));
    Ok(())
}

pub(super) fn pascal(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    for r in 0..=n as i64 + 1 {
        let a = qb(n, r - 1) + qp(r) * qb(n, r);
        c.eq(&format!("[N+1,{r}] = [N,{r}-1] + q^{r} [N,{r}]"), &qb(n + 1, r), &a);
        let b = qp(n as i64 + 1 - r) * qb(n, r - 1) + qb(n, r);
        c.eq(&format!("[N+1,{r}] = q^{{N+1-{r}}} [N,{r}-1] + [N,{r}]"), &qb(n + 1, r), &b);
    }
    let s = rogers_szego_s(n);
    let next = rogers_szego_s(n + 1);
    c.eq("x^0 coefficients give A = -1", &next.coeff(0), &-s.coeff(0));
    c.eq("x^{N+1} coefficients give B b^N = 1", &next.coeff(n + 1), &s.coeff(n));
    for (b, a) in [(HalfInt::ZERO, HalfInt::ONE), (HalfInt::int(-1), HalfInt::ZERO)] {
        let bx = s.scale_arg(b).mul_x().scale(&LaurentPoly::q_pow(b.times(-(n as i64))));
        let rhs = &bx - &s.scale_arg(a);
        c.eq(&format!("S_{{N+1}} = B x S_N(q^{b} x) - S_N(q^{a} x)"), &next, &rhs);
    }
    Ok(())
}

pub(super) fn recurrence(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let s = rogers_szego_s(n);
    let next = rogers_szego_s(n + 1);
    c.eq("S_{N+1} = x S_N(x) - S_N(qx)", &next, &(&s.mul_x() - &s.scale_arg(HalfInt::ONE)));
    let b = &s.scale_arg(HalfInt::int(-1)).mul_x().scale(&qp(n as i64)) - &s;
    c.eq("S_{N+1} = q^N x S_N(x/q) - S_N(x)", &next, &b);
    let st = closed_form_s_tilde(n);
    let st_next = closed_form_s_tilde(n + 1);
    c.eq("S~_{N+1} = x S~_N(x) - S~_N(qx)", &st_next, &(&st.mul_x() - &st.scale_arg(HalfInt::ONE)));
    let at_one = s.eval_coeffs_at_one();
    let mut times_x_minus_one = vec![BigInt::zero(); at_one.len() + 1];
    for (i, v) in at_one.iter().enumerate() {
        times_x_minus_one[i + 1] += v;
        times_x_minus_one[i] -= v;
    }
    c.eq("q=1: S_{N+1} = (x - 1) S_N", &Seq(next.eval_coeffs_at_one()), &Seq(times_x_minus_one));
    Ok(())
}

fn e_step(n: usize, k: i64) -> LaurentPoly {
    let ni = n as i64;
    e_coeff(n, k) + e_coeff(n, k - 1) * qp(ni + 1 - 2 * k) * (one() - qp(ni + 2 - 2 * k))
}

pub(super) fn operator_o(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let st = closed_form_s_tilde(n);
    c.eq("O(S~_N) = S~_{N+1}", &op_o(&st), &closed_form_s_tilde(n + 1));
    c.eq("O(S_N) = S_{N+1}", &op_o(&rogers_szego_s(n)), &rogers_szego_s(n + 1));
    if n >= 1 {
        let rhs = &rising_minus_one(n + 1)
            + &rising_minus_one(n - 1).scale(&(qp(n as i64 - 1) * (one() - qp(n as i64))));
        c.eq("O((x -. 1)^s) = (x -. 1)^{s+1} + q^{s-1} (1 - q^s) (x -. 1)^{s-1}", &op_o(&rising_minus_one(n)), &rhs);
    }
    let termwise: XPoly =
        (0..=(n + 1) / 2).map(|k| rising_minus_one(n + 1 - 2 * k).scale(&e_step(n, k as i64))).sum();
    c.eq("O(S~_N) regrouped by (x -. 1)^{N+1-2k}", &op_o(&st), &termwise);
    Ok(())
}

fn c_mk(m: usize, k: i64) -> LaurentPoly {
    if k < 0 || k as usize > m {
        return LaurentPoly::zero();
    }
    qb2(m, k) * down_poch(2 * m as i64 + 1, k as usize)
}

fn d_mk(m: usize, k: i64) -> LaurentPoly {
    if k < 0 || k as usize > m {
        return LaurentPoly::zero();
    }
    qb2(m, k) * down_poch(2 * m as i64 - 1, k as usize)
}

pub(super) fn e_coefficients(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let ni = n as i64;
    for k in 0..=(n as i64 + 1) / 2 + 1 {
        c.eq(&format!("e_{{N+1|{k}}} recurrence"), &e_coeff(n + 1, k), &e_step(n, k));
    }
    let m = n / 2;
    let mi = m as i64;
    for k in 0..=mi + 1 {
        if n % 2 == 1 {
            let rhs = c_mk(m, k) + c_mk(m, k - 1) * qp(2 * mi + 2 - 2 * k) * (one() - qp(2 * mi + 3 - 2 * k));
            c.eq(&format!("d_{{m+1|{k}}} = c_{{m|{k}}} + ..."), &d_mk(m + 1, k), &rhs);
        } else {
            let rhs = d_mk(m, k) + d_mk(m, k - 1) * qp(2 * mi + 1 - 2 * k) * (one() - qp(2 * mi + 2 - 2 * k));
            c.eq(&format!("c_{{m|{k}}} = d_{{m|{k}}} + ..."), &c_mk(m, k), &rhs);
        }
    }
    for k in 0..=ni + 1 {
        let rhs = qb2(n, k) + qb2(n, k - 1) * qp(2 * (ni + 1 - k));
        c.eq(&format!("[N+1,{k}]_{{q^2}} = [N,{k}]_{{q^2}} + [N,{k}-1]_{{q^2}} q^{{2(N+1-k)}}"), &qb2(n + 1, k), &rhs);
        let lhs = qb(n, k) * q_int(k.max(0) as u32, BaseStep::Q);
        let rhs = qb(n, k - 1) * q_int((ni + 1 - k).max(0) as u32, BaseStep::Q);
        c.eq(&format!("[N,{k}] [{k}] = [N,{k}-1] [N+1-{k}]"), &lhs, &rhs);
    }
    Ok(())
}

fn taylor_points() -> [LaurentPoly; 4] {
    [one(), LaurentPoly::constant(-1), qp(1), LaurentPoly::zero()]
}

pub(super) fn taylor(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("n")?;
    let xn = XPoly::monomial(one(), n);
    let s = rogers_szego_s(n);
    for a in taylor_points() {
        c.eq(&format!("x^n from its q-Taylor coefficients at {a}"), &taylor_reconstruct(&q_taylor(&xn, &a), &a), &xn);
        c.eq(&format!("S_n from its q-Taylor coefficients at {a}"), &taylor_reconstruct(&q_taylor(&s, &a), &a), &s);
        for b in [-&a, qp(1), one()] {
            let (x_pow, expansion, left, right) = monomial_expansion_sides(n, &a, &b);
            c.eq(&format!("x^n = sum [n,k] a^(n-k) (x -. a)^k, a={a}"), &x_pow, &expansion);
            c.eq(&format!("sum [n,k] a^(n-k) (x +. b)^k = sum [n,k] x^(n-k) (a +. b)^k, a={a}, b={b}"), &left, &right);
        }
    }
    let mut d = xn.clone();
    for k in 0..=n {
        let want = XPoly::monomial(q_factorial(k as u32, BaseStep::Q) * qb(n, k as i64), n - k);
        c.eq(&format!("D_q^{k} x^n = [{k}]! [n,{k}] x^(n-{k})"), &d, &want);
        d = d.q_derivative();
    }
    let at_one: Vec<BigInt> = q_taylor(&xn, &one()).iter().map(LaurentPoly::eval_at_one).collect();
    c.eq("q=1: Taylor coefficients of x^n at 1 are C(n,k)", &Seq(at_one), &Seq(pascal_row(n)));
    Ok(())
}

pub(super) fn taylor_s(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let s = rogers_szego_s(n);
    let from_g_low: XPoly = (0..=n).map(|k| rising_minus_one(k).scale(&(qb(n, k as i64) * gauss_G(n - k)))).sum();
    c.eq("S_N = sum [N,k] G_{N-k} (x -. 1)^k", &s, &from_g_low);
    let from_g_high: XPoly = (0..=n).map(|k| rising_minus_one(n - k).scale(&(qb(n, k as i64) * gauss_G(k)))).sum();
    c.eq("S_N = sum [N,k] (x -. 1)^{N-k} G_k", &s, &from_g_high);
    let even: XPoly = (0..=n / 2)
        .map(|k| rising_minus_one(n - 2 * k).scale(&(qb(n, 2 * k as i64) * down_poch(2 * k as i64 - 1, k))))
        .sum();
    c.eq("S_N = sum [N,2k] (x -. 1)^{N-2k} (q^{2k-1}; q^-2)_k", &s, &even);
    let coeffs = q_taylor(&s, &one());
    for (k, ck) in coeffs.iter().enumerate() {
        c.eq(&format!("Taylor coefficient {k} of S_N at 1 = [N,{k}] G_(N-{k})"), ck, &(qb(n, k as i64) * gauss_G(n - k)));
    }
    let mut d = s.clone();
    for k in 0..=n {
        let want = rogers_szego_s(n - k).scale(&(q_factorial(k as u32, BaseStep::Q) * qb(n, k as i64)));
        c.eq(&format!("D_q^{k} S_N = [{k}]! [N,{k}] S_(N-{k})"), &d, &want);
        d = d.q_derivative();
    }
    Ok(())
}

pub(super) fn bridge(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let m = n / 2;
    let top = if n % 2 == 1 { 2 * m as i64 + 1 } else { 2 * m as i64 - 1 };
    for k in 0..=m {
        let lhs = qb(n, 2 * k as i64) * down_poch(2 * k as i64 - 1, k);
        let rhs = qb2(m, k as i64) * down_poch(top, k);
        c.eq(&format!("[N,2k] (q^{{2k-1}}; q^-2)_k = [m,k]_{{q^2}} (q^{{2m+-1}}; q^-2)_k, k={k}"), &lhs, &rhs);
    }
    let direct = XPoly::from_coeffs(
        (0..=n as i64).map(|k| signed(qb(n, k), (n as i64 + k) % 2 == 1)).collect(),
    );
    let expansion: XPoly = (0..=m)
        .map(|k| rising_minus_one(n - 2 * k).scale(&(qb(n, 2 * k as i64) * down_poch(2 * k as i64 - 1, k))))
        .sum();
    c.eq("(-1)^N sum [N,k] (-x)^k = sum [N,2k] (x -. 1)^{N-2k} (q^{2k-1}; q^-2)_k", &direct, &expansion);
    Ok(())
}

pub(super) fn p_recurrences(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let a2 = alpha2(p)?;
    let labels = [
        "D_q P_N = [N] q^a P_{N-1}(q^{2a} x)",
        "P_{N+1} = q^a x P_N(q^{2a} x) + P_N(qx)",
        "P_{N+1} = q^{N+a} x P_N(q^{2a-1} x) + P_N(x)",
    ];
    for (label, (lhs, rhs)) in labels.iter().zip(recurrence_sides_p(n.max(1), a2)) {
        c.eq(label, &lhs, &rhs);
    }
    let pn = P_N(n, a2);
    match a2 {
        0 => c.eq("alpha=0: P_N(x) = (-1)^N S_N(-x)", &pn, &flip_x(&rogers_szego_s(n)).scale(&signed(one(), n % 2 == 1))),
        1 => {
            let product: XPoly =
                (0..n as i64).map(|k| XPoly::from_coeffs(vec![one(), LaurentPoly::q_pow(HalfInt::new(2 * k + 1))])).product();
            c.eq("alpha=1/2: P_N(x) = prod_{k<N} (1 + q^{k+1/2} x)", &pn, &product);
        }
        _ => {
            let direct = XPoly::from_coeffs(
                (0..=n as i64).map(|l| qb(n, l).shift(HalfInt::new(a2 as i64 * l * l))).collect(),
            );
            c.eq("P_N(x) = sum [N,l] x^l q^{a l^2}", &pn, &direct);
        }
    }
    Ok(())
}

pub(super) fn rho(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let a2 = alpha2(p)?;
    let a = HalfInt::new(a2 as i64);
    let r = rho_n(n, a2);
    let prev = if n == 0 {
        XPoly::zero()
    } else {
        rho_n(n - 1, a2).scale_arg(HalfInt::int(a2 as i64)).scale(&(qi(n) * LaurentPoly::q_pow(a)))
    };
    c.eq("D_q rho_n = [n] q^a rho_{n-1}(q^{2a} x)", &r.q_derivative(), &prev);
    // (-y; q^-1)_n = sum_l [n,l] q^{-l(n-l) - C(l,2)} y^l with y = q^{(2n-1)a} x
    let ni = n as i64;
    let pre = HalfInt::int((1 - a2 as i64) * ni * (ni - 1) / 2);
    let expanded = XPoly::from_coeffs(
        (0..=ni)
            .map(|l| {
                let e = pre + HalfInt::int(-l * (ni - l) - l * (l - 1) / 2) + HalfInt::new(a2 as i64 * (2 * ni - 1) * l);
                qb(n, l).shift(e)
            })
            .collect(),
    );
    c.eq("rho_n = q^{(1-2a)C(n,2)} (-q^{(2n-1)a} x; q^-1)_n expanded", &r, &expanded);
    Ok(())
}

pub(super) fn theta(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let a2 = alpha2(p)?;
    let thetas = theta_solve_at(n, a2);
    let zeros = Seq(vec![RationalFunction::zero(); n + 1]);
    c.eq("P_N - sum [N,k] rho_{N-k} theta_k = 0", &Seq(theta_residual(n, a2, &thetas)), &zeros);
    let wider = theta_solve_at(n + 2, a2);
    c.eq("theta_k solved at N and at N+2 agree", &Seq(thetas.clone()), &Seq(wider[..=n].to_vec()));
    if a2 == 0 {
        let known: Seq<RationalFunction> = (0..=n).map(|k| RationalFunction::from_poly(theta_alpha_zero(k))).collect();
        c.eq("alpha=0: theta_k = (-1)^k G_k", &Seq(thetas), &known);
    }
    Ok(())
}
