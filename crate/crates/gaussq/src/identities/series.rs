//! Checks for the generating-function identities, the non-alternating sums
//! `sigma_N(gamma)`, their limits, and the q-difference calculus.

use gaussq_core::qcore::{c_coeff_closed, c_coeff_rec, gauss_G, gauss_product, poch, q_int, s_sum, sigma, BaseStep, Sign};
use gaussq_core::qdiff::{crux_boundary, crux_family, delta_table, reconstruct, reconstruct_table, Theta};
use gaussq_core::qpolyx::euler_binomial_sum;
use gaussq_core::series::{
    bivariate_at_one, bivariate_geometric_sides, carlitz_sides, classical_bivariate_sides, euler_negative_binomial,
    falling_product, geometric_q_sides, inverse_rising_powers, v_generating, TSeries,
};
use gaussq_core::series::{
    fine_functional_sides, fine_v_even_candidates, fine_v_odd_candidates, fine_v_odd_reading, finite_poch_sides,
    infinite_poch, laurent_to_series, limit_identity_sides, sigma_infty, substitute_z, triangular_sides, v_number,
    Lattice, OddReading, QSeries,
};
use gaussq_core::{HalfInt, LaurentPoly, Result, TruncSeries};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{one, pascal_row, qb, qb2, qi, qp};
use super::{Checker, Point, PointExt, Seq};

fn t_series(order: usize, coeffs: Vec<LaurentPoly>) -> TSeries {
    TruncSeries::from_coeffs("t", order, LaurentPoly::zero(), coeffs)
}

fn at_one(s: &TSeries) -> TruncSeries<BigInt> {
    s.map_coeffs(BigInt::zero(), LaurentPoly::eval_at_one)
}

fn int_one(order: usize) -> TruncSeries<BigInt> {
    TruncSeries::one("t", order, BigInt::zero())
}

/// `sum_l t^l / (1 + t)^{l+1}` over the integers.
fn classical_geometric(order: usize) -> Result<TruncSeries<BigInt>> {
    let one_plus_t = TruncSeries::from_coeffs("t", order, BigInt::zero(), vec![BigInt::one(), BigInt::one()]);
    let inv = one_plus_t.reciprocal()?;
    let mut acc = TruncSeries::zero("t", order, BigInt::zero());
    let mut term = inv.clone();
    for l in 0..order {
        acc = acc.try_add(&term.shift(l))?;
        term = term.try_mul(&inv)?;
    }
    Ok(acc)
}

fn alt_t(v: LaurentPoly, n: usize) -> LaurentPoly {
    if n % 2 == 0 {
        v
    } else {
        -v
    }
}

pub(super) fn geometric(p: &Point, c: &mut Checker) -> Result<()> {
    let order = p.size("order")?;
    let r = p.half("r")?;
    let (lhs, rhs) = geometric_q_sides(order, r);
    c.eq("sum (q^r t)^l q^C(l,2) / (1 +. t)^{l+1} = sum (1 -. q^r)^N (-t)^N", &lhs, &rhs);
    if r.is_zero() {
        c.eq("sum t^l q^C(l,2) / (1 +. t)^{l+1} = 1", &lhs, &TruncSeries::one("t", order, LaurentPoly::zero()));
    }
    c.eq("q=1: sum t^l / (1 + t)^{l+1} = 1", &at_one(&lhs), &int_one(order));
    c.eq("classical sum t^l / (1 + t)^{l+1} = 1", &classical_geometric(order)?, &int_one(order));
    let regenerated = t_series(order, (0..order).map(|n| alt_t(euler_binomial_sum(n).eval(&one()), n)).collect());
    c.eq("sum (-t)^N sum [N,l] (-1)^l q^C(l,2) = 1", &regenerated, &TruncSeries::one("t", order, LaurentPoly::zero()));
    Ok(())
}

pub(super) fn carlitz(p: &Point, c: &mut Checker) -> Result<()> {
    let order = p.size("order")?;
    let (lhs, rhs) = carlitz_sides(order);
    c.eq("sum t^k / (1 +. t)^{k+1} = 1 + sum (1-q)...(1-q^{2m-1}) t^{2m}", &lhs, &rhs);
    if order > 4 {
        c.eq("t^2 coefficient is 1 - q", &lhs.coeff(2), &(one() - qp(1)));
        c.eq("t^4 coefficient is (1 - q)(1 - q^3)", &lhs.coeff(4), &((one() - qp(1)) * (one() - qp(3))));
    }
    let g = t_series(order, (0..order).map(|n| alt_t(gauss_G(n), n)).collect());
    c.eq("sum (-t)^N G_N = sum t^k / (1 +. t)^{k+1}", &g, &lhs);
    Ok(())
}

pub(super) fn bivariate(p: &Point, c: &mut Checker) -> Result<()> {
    let oz = p.size("order_z")?;
    let ot = p.size("order_t")?;
    let (lhs, rhs) = bivariate_geometric_sides(oz, ot);
    c.eq("sum z^l q^C(l,2) / (1 +. t)^{l+1} = sum (-1)^N (t -. z)^N", &lhs, &rhs);
    let (cl, cr) = classical_bivariate_sides(oz, ot);
    c.eq("(1/(1+t)) sum (z/(1+t))^l = sum (z - t)^N", &cl, &cr);
    c.eq("q=1 reduces to the classical progression", &bivariate_at_one(&lhs), &cl);
    if oz > 0 {
        c.eq("z^0 coefficient is 1/(1 + t)", &lhs.coeff(0), &inverse_rising_powers(1, ot)[0]);
    }
    Ok(())
}

pub(super) fn negative_binomial(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let order = p.size("order")?;
    let series = euler_negative_binomial(n, order);
    let falling = falling_product(n + 1, order);
    let unit = TruncSeries::one("t", order, LaurentPoly::zero());
    c.eq("(1 -. t)^{N+1} sum [N+s,s] t^s = 1", &series.try_mul(&falling)?, &unit);
    c.eq("1 / (1 -. t)^{N+1} = sum [N+s,s] t^s", &falling.reciprocal()?, &series);
    let classical: Vec<BigInt> = (0..order).map(|s| pascal_row(n + s)[s].clone()).collect();
    let classical = TruncSeries::from_coeffs("t", order, BigInt::zero(), classical);
    c.eq("q=1: coefficients are C(N+s,s)", &at_one(&series), &classical);
    let row = pascal_row(n + 1);
    let one_minus_t_pow = TruncSeries::from_coeffs(
        "t",
        order,
        BigInt::zero(),
        row.iter().enumerate().map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v }).collect(),
    );
    c.eq("1 / (1 - t)^{N+1} = sum C(N+s,s) t^s", &one_minus_t_pow.reciprocal()?, &classical);
    Ok(())
}

pub(super) fn sigma_values(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let nu = n as u32;
    let row_sum: BigInt = pascal_row(n).iter().sum();
    c.eq("sum C(N,l) = 2^N", &row_sum, &(BigInt::one() << n));
    let with_tri: LaurentPoly = (0..=n as i64).map(|l| qb(n, l).shift(HalfInt::int(l * (l + 1) / 2))).sum();
    let rising_q = poch(Sign::Minus, HalfInt::ONE, HalfInt::ONE, n);
    c.eq("sum [N,l] q^C(l+1,2) = (1 +. q)^N", &with_tri, &rising_q);
    let half: LaurentPoly = (0..=n as i64).map(|l| qb(n, l).shift(HalfInt::new(l))).sum();
    c.eq("sum [N,l] q^{l/2} = (-q^{1/2}; q^{1/2})_N", &half, &poch(Sign::Minus, HalfInt::HALF, HalfInt::HALF, n));
    let s1 = sigma(nu, HalfInt::ONE);
    c.eq("sigma_N = sum [N,l]_{q^2} q^l = (1 +. q)^N", &s1, &rising_q);
    let reflected: LaurentPoly = (0..=n as i64).map(|l| qb2(n, l).shift(HalfInt::int(n as i64 - l))).sum();
    c.eq("sum [N,l]_{q^2} q^{N-l} = sigma_N", &reflected, &s1);
    let next = (one() + qp(n as i64 + 1)) * &s1;
    c.eq("sigma_{N+1} = (1 + q^{N+1}) sigma_N", &sigma(nu + 1, HalfInt::ONE), &next);
    c.eq("sigma_N(1) after q -> q^2 in the half-base sum", &half.substitute_q_power(HalfInt::int(2))?, &s1);
    Ok(())
}

pub(super) fn sigma_symmetry(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let g = p.half("gamma")?;
    let lhs = sigma(n as u32, -g);
    c.eq("sigma_N(-gamma) = q^{-gamma N} sigma_N(gamma)", &lhs, &sigma(n as u32, g).shift(-g.times(n as i64)));
    Ok(())
}

pub(super) fn sigma_recurrence(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")? as u32;
    let g = p.half("gamma")?;
    let rhs = sigma(n + 1, g) - sigma(n, g).shift(g);
    c.eq("sigma_N(gamma+2) = sigma_{N+1}(gamma) - q^gamma sigma_N(gamma)", &sigma(n, g + HalfInt::int(2)), &rhs);
    Ok(())
}

/// `sum_s c_{l|s} q^{C(s+1,2)} Q^s` at `Q = q^N`.
fn ratio_at(l: usize, n: usize, coeff: impl Fn(i64) -> LaurentPoly) -> LaurentPoly {
    (0..=l as i64).map(|s| coeff(s).shift(HalfInt::int(s * (s + 1) / 2 + n as i64 * s))).sum()
}

pub(super) fn c_coefficients(p: &Point, c: &mut Checker) -> Result<()> {
    let l = p.size("l")?;
    let li = l as i64;
    for n in 0..=6usize {
        let rhs = sigma(n as u32, HalfInt::ONE) * ratio_at(l, n, |s| c_coeff_closed(l, s));
        c.eq(&format!("sigma_{n}(2l+1) = sigma_{n}(1) sum c_{{l|s}} q^C(s+1,2) Q^s"), &sigma(n as u32, HalfInt::int(2 * li + 1)), &rhs);
    }
    for s in -1..=li + 2 {
        let rhs = (qp(s) - qp(2 * li + 1)) * c_coeff_closed(l, s) + c_coeff_closed(l, s - 1);
        c.eq(&format!("c_{{l+1|{s}}} = (q^{s} - q^{{2l+1}}) c_{{l|{s}}} + c_{{l|{s}-1}}"), &c_coeff_closed(l + 1, s), &rhs);
    }
    c.eq("c_{l|-1} = 0", &c_coeff_closed(l, -1), &LaurentPoly::zero());
    c.eq("c_{l|l+1} = 0", &c_coeff_closed(l, li + 1), &LaurentPoly::zero());
    c.eq("c_{0|0} = 1", &c_coeff_closed(0, 0), &one());
    let closed: Seq<LaurentPoly> = (0..=li).map(|s| c_coeff_closed(l, s)).collect();
    let recurred: Seq<LaurentPoly> = (0..=li).map(|s| c_coeff_rec(l, s)).collect();
    c.eq("product formulas for c_{l|s} solve the recurrence", &closed, &recurred);
    let g_direct: LaurentPoly = (1..=li).map(|t| one() - qp(2 * t - 1)).product();
    c.eq("g_l = prod_{t odd < 2l} (1 - q^t)", &gauss_product(l), &g_direct);
    Ok(())
}

fn om(t: i64) -> LaurentPoly {
    one() - qp(t)
}

/// Reference expansions of `sigma_N(2l+1)/sigma_N(1)`, coefficient of `Q^s`.
fn reference_table(l: usize) -> Option<Vec<LaurentPoly>> {
    let two_2 = q_int(2, BaseStep::Q2);
    let three_2 = q_int(3, BaseStep::Q2);
    Some(match l {
        1 => vec![om(1), qp(1)],
        2 => vec![om(1) * om(3), qp(1) * om(3), qp(3)],
        3 => vec![om(1) * om(3) * om(5), qp(1) * om(3) * om(5), qp(3) * om(3) * &two_2, qp(6)],
        4 => vec![
            om(1) * om(3) * om(5) * om(7),
            qp(1) * om(3) * om(5) * om(7),
            qp(3) * om(3) * om(5) * three_2,
            qp(6) * om(5) * two_2,
            qp(10),
        ],
        _ => return None,
    })
}

pub(super) fn sigma_table(p: &Point, c: &mut Checker) -> Result<()> {
    let l = p.size("l")?;
    let Some(reference) = reference_table(l) else {
        c.skip(format!("no reference expansion for l={l}"));
        return Ok(());
    };
    let computed: Seq<LaurentPoly> =
        (0..=l as i64).map(|s| c_coeff_closed(l, s).shift(HalfInt::int(s * (s + 1) / 2))).collect();
    c.eq("reference Q-expansion of sigma_N(2l+1)/sigma_N(1)", &Seq(reference.clone()), &computed);
    for n in 0..=5usize {
        let ratio: LaurentPoly = reference.iter().enumerate().map(|(s, v)| v.shift(HalfInt::int((n * s) as i64))).sum();
        let rhs = sigma(n as u32, HalfInt::ONE) * ratio;
        c.eq(&format!("sigma_{n}(2l+1) from the reference expansion"), &sigma(n as u32, HalfInt::int(2 * l as i64 + 1)), &rhs);
    }
    Ok(())
}

fn truncated(p: &LaurentPoly, order: usize) -> Result<QSeries> {
    laurent_to_series(&p.truncate_below(HalfInt::int(order as i64)), Lattice::Q, order)
}

pub(super) fn limit(p: &Point, c: &mut Checker) -> Result<()> {
    let l = p.size("l")?;
    let order = p.size("order")?;
    c.eq("Q^0 coefficient of sigma_N(2l+1)/sigma_N(1) is (1-q)(1-q^3)...(1-q^{2l-1})", &c_coeff_closed(l, 0), &gauss_product(l));
    let gamma = HalfInt::int(2 * l as i64 + 1);
    for g in [HalfInt::ONE, gamma] {
        let finite = truncated(&sigma(order as u32, g), order)?;
        c.eq(&format!("sigma_N({g}) -> sigma_inf({g}) mod q^order"), &finite, &sigma_infty(g, order)?);
    }
    let (lhs, rhs) = limit_identity_sides(l, order);
    c.eq("sum q^{(2l+1)k}/(q^2;q^2)_k = (q;q^2)_l sum q^k/(q^2;q^2)_k", &lhs, &rhs);
    Ok(())
}

pub(super) fn fine_functional(p: &Point, c: &mut Checker) -> Result<()> {
    let oz = p.size("order_z")?;
    let oq = p.size("order_q")?;
    let bases = [(Sign::Plus, HalfInt::ONE, HalfInt::int(2)), (Sign::Minus, HalfInt::HALF, HalfInt::HALF)];
    for (sign, a, step) in bases {
        for l in 0..=3 {
            let (lhs, rhs) = finite_poch_sides(sign, a, step, l, oq)?;
            c.eq(&format!("(a; rho)_{l} = (a; rho)_inf / (rho^{l} a; rho)_inf, a={}q^{a}, rho=q^{step}", sign.value()), &lhs, &rhs);
        }
    }
    let (lhs, rhs) = fine_functional_sides(oz, oq);
    c.eq("(1/(q;q^2)_inf) sum z^k/(q^2;q^2)_k = (1/(z;q^2)_inf) sum q^k/(q^2;q^2)_k", &lhs, &rhs);
    let inv_odd = infinite_poch(Sign::Plus, HalfInt::ONE, HalfInt::int(2), oq)?.reciprocal()?;
    for l in 0..=3usize {
        let m = 2 * l + 1;
        let at_z = substitute_z(&lhs, m);
        let order = at_z.order();
        let direct = inv_odd.try_mul(&sigma_infty(HalfInt::int(m as i64), oq)?)?.truncate(order);
        c.eq(&format!("z = q^{m} on the left recovers the limit identity"), &at_z, &direct);
        let tail = infinite_poch(Sign::Plus, HalfInt::int(m as i64), HalfInt::int(2), oq)?.reciprocal()?;
        let direct = tail.try_mul(&sigma_infty(HalfInt::ONE, oq)?)?.truncate(order);
        c.eq(&format!("z = q^{m} on the right recovers the limit identity"), &substitute_z(&rhs, m), &direct);
    }
    c.note("the identity in z is checked as formal power series in (z, q), not by analytic continuation");
    Ok(())
}

fn signed_power(minus: bool, r: HalfInt, s: usize) -> LaurentPoly {
    let v = LaurentPoly::q_pow(r.times(s as i64));
    if minus && s % 2 == 1 {
        -v
    } else {
        v
    }
}

pub(super) fn q_difference(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("n")?;
    for r in [HalfInt::ZERO, HalfInt::HALF, HalfInt::ONE] {
        let b: Vec<_> = (0..=n).map(|s| signed_power(true, r, s)).collect();
        let a = reconstruct(&b, n)?;
        let alt = s_sum(n as u32, r);
        let want = if n % 2 == 1 { -alt } else { alt };
        c.eq(&format!("a_n from boundary (-q^{r})^s = sum [n,l] (-q^{r})^l"), &a[n], &want);
    }
    let b: Vec<_> = (0..=n).map(|s| signed_power(false, HalfInt::HALF, s)).collect();
    let a = reconstruct(&b, n)?;
    c.eq("a_n from boundary q^{s/2} = (-q^{1/2}; q^{1/2})_n", &a[n], &poch(Sign::Minus, HalfInt::HALF, HalfInt::HALF, n));

    let seq: Vec<LaurentPoly> = (0..=n).map(|k| poch(Sign::Minus, HalfInt::ONE, HalfInt::ONE, k) + qp(k as i64 * k as i64)).collect();
    let table = delta_table(&seq, n, &Theta::Canonical)?;
    let boundary = table.boundary();
    let firsts: Vec<LaurentPoly> = table.rows.iter().map(|row| row[0].clone()).collect();
    c.eq("b_k = (Delta^k a)_0", &Seq(boundary.clone()), &Seq(firsts));
    c.eq("a_n = sum [n,s] b_s", &Seq(reconstruct(&boundary, n)?), &Seq(seq.clone()));
    let rebuilt = reconstruct_table(&boundary);
    for k in 0..=n {
        c.eq(&format!("(Delta^{k} a)_n = sum b_{{k+n-s}} [n,s] q^{{ks}}"), &Seq(rebuilt.rows[k].clone()), &Seq(table.rows[k].clone()));
    }
    let theta = Theta::Custom((0..n as i64).map(|k| HalfInt::new(3 - k)).collect());
    let custom = delta_table(&seq, n, &theta)?;
    for k in 0..n {
        let t = theta.at(k).unwrap_or(HalfInt::ZERO);
        let stepped: Vec<LaurentPoly> = custom.rows[k].windows(2).map(|w| &w[1] - &w[0].shift(t)).collect();
        c.eq(&format!("(Delta^{{{k}+1}} a)_n = (Delta^{k} a)_{{n+1}} - q^theta({k}) (Delta^{k} a)_n"), &Seq(custom.rows[k + 1].clone()), &Seq(stepped));
    }
    Ok(())
}

pub(super) fn crux(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("n")?;
    let r = p.size("r")?;
    let rho = p.size("rho")?;
    let a = crux_family(n, r, rho);
    let want = if rho > n {
        LaurentPoly::zero()
    } else {
        qb(n, rho as i64) * sigma((n - rho) as u32, HalfInt::int(2 * r as i64 + 1)).substitute_q_power(HalfInt::HALF)?
    };
    c.eq("a_n = [n,rho] sigma~_{n-rho}(2r+1)", &a, &want);
    let b: Vec<_> = (0..=n).map(|s| crux_boundary(s, r, rho)).collect();
    let direct: LaurentPoly = (0..=n).map(|s| qb(n, s as i64) * &b[s]).sum();
    c.eq("a_n = sum [n,s] [s,rho] q^{(s-rho)(r+1/2)}", &a, &direct);
    if r == 0 && rho == 1 {
        let want = if n == 0 {
            LaurentPoly::zero()
        } else {
            qi(n) * poch(Sign::Minus, HalfInt::HALF, HalfInt::HALF, n - 1)
        };
        c.eq("a_n = [n] (-q^{1/2}; q^{1/2})_{n-1}", &a, &want);
        let classical = if n == 0 { BigInt::zero() } else { BigInt::from(n) << (n - 1) };
        c.eq("q=1: a_n = n 2^{n-1}", &a.eval_at_one(), &classical);
        c.eq("q=1: b_n = n", &crux_boundary(n, 0, 1).eval_at_one(), &BigInt::from(n));
    }
    Ok(())
}

pub(super) fn fine_v(p: &Point, c: &mut Checker) -> Result<()> {
    let n = p.size("N")?;
    let order = p.size("order")?;
    let gen = v_generating(n, order);
    let at_q: LaurentPoly = gen.coeffs().iter().enumerate().map(|(s, v)| v.shift(HalfInt::int(s as i64))).sum();
    let v = v_number(n, order);
    c.eq("v_N = V_N(q)", &truncated(&at_q, order)?, &v);
    if n % 2 == 1 {
        let k = (n - 1) / 2;
        let (_, expanded) = fine_v_odd_candidates(k, order);
        c.eq("v_{2k+1} = 1/((1-q)(1-q^3)...(1-q^{2k+1}))", &v, &expanded);
        let reading = fine_v_odd_reading(k, order);
        match reading {
            OddReading::Short => c.note("reading: short, v_{2k+1} = 1/(q;q^2)_k"),
            OddReading::Expanded => c.note("reading: expanded, v_{2k+1} = 1/(q;q^2)_{k+1}"),
            OddReading::Both | OddReading::Neither => {
                c.fail("v_{2k+1} matches exactly one index reading", format!("{reading:?}"))
            }
        }
    } else {
        let k = n / 2;
        let (sum_form, product_form) = fine_v_even_candidates(k, order);
        c.eq("v_{2k} = (1/(q^2;q^2)_k) sum q^C(n+1,2)", &v, &sum_form);
        c.eq("v_{2k} = (1/(q^2;q^2)_k) prod (1-q^{2n})/(1-q^{2n-1})", &v, &product_form);
        let (tri, prod) = triangular_sides(order);
        c.eq("sum q^C(n+1,2) = prod (1-q^{2n})/(1-q^{2n-1})", &tri, &prod);
    }
    Ok(())
}
