//! Tables emitted by `gaussq table`.

use std::str::FromStr;

use gaussq_core::qcore::{c_coeff_closed, gauss_G, s_sum};
use gaussq_core::qpolyx::theta_solve;
use gaussq_core::{HalfInt, LaurentPoly};

use crate::format::{Cell, Table};
use crate::AppError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    S,
    Sigma,
    Ccoef,
    Theta,
    Gauss,
}

impl FromStr for TableKind {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self, AppError> {
        Ok(match s {
            "s" => TableKind::S,
            "sigma" => TableKind::Sigma,
            "ccoef" => TableKind::Ccoef,
            "theta" => TableKind::Theta,
            "gauss" => TableKind::Gauss,
            _ => return Err(AppError::Usage(format!("unknown table {s:?}; expected s, sigma, ccoef, theta or gauss"))),
        })
    }
}

impl TableKind {
    pub fn default_n_max(self) -> usize {
        match self {
            TableKind::S | TableKind::Gauss => 10,
            TableKind::Sigma => 4,
            TableKind::Ccoef => 6,
            TableKind::Theta => 8,
        }
    }
}

/// `alpha` as the `alpha2` index of the theta family.
pub fn alpha2_of(alpha: HalfInt) -> Result<u32, AppError> {
    u32::try_from(alpha.twice()).map_err(|_| AppError::Usage(format!("alpha must be nonnegative, got {alpha}")))
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Factors of `c_{l|s}`: `[a over r]_{q^2}` and the surviving `(1 - q^t)`.
fn c_factors(l: i64, s: i64) -> (Vec<i64>, Option<(i64, i64)>) {
    let r = s / 2;
    let (top, lo) = if s % 2 == 0 { (l - r, r + 1) } else { (l - r - 1, r + 2) };
    let odd = (lo..=l - r).map(|t| 2 * t - 1).collect();
    let binom = (r > 0 && r < top).then_some((top, r));
    (odd, binom)
}

fn q_text(e: i64) -> String {
    if e == 1 { "q".into() } else { format!("q^{e}") }
}

fn q_tex(e: i64) -> String {
    if e == 1 { "q".into() } else { format!("q^{{{e}}}") }
}

/// `q^{C(s+1,2)} Q^s c_{l|s}` as a product of factors.
fn factored(l: i64, s: i64, with_prefix: bool) -> Cell {
    let (odd, binom) = c_factors(l, s);
    let mut text = Vec::new();
    let mut tex = Vec::new();
    let shift = s * (s + 1) / 2;
    if with_prefix && shift > 0 {
        text.push(q_text(shift));
        tex.push(q_tex(shift));
    }
    if with_prefix && s > 0 {
        text.push(if s == 1 { "Q".into() } else { format!("Q^{s}") });
        tex.push(if s == 1 { "Q".into() } else { format!("Q^{{{s}}}") });
    }
    for t in odd {
        text.push(format!("(1-{})", q_text(t)));
        tex.push(format!("(1-{})", q_tex(t)));
    }
    if let Some((top, r)) = binom {
        if r == 1 || r + 1 == top {
            text.push(format!("[{top}]_{{q^2}}"));
            tex.push(format!("[{top}]_{{q^{{2}}}}"));
        } else {
            text.push(format!("[{top} over {r}]_{{q^2}}"));
            tex.push(format!("\\begin{{bmatrix}} {top} \\\\ {r} \\end{{bmatrix}}_{{q^{{2}}}}"));
        }
    }
    if text.is_empty() {
        return Cell::Factored { text: "1".into(), latex: "1".into() };
    }
    Cell::Factored { text: text.join("*"), latex: tex.join(" ") }
}

pub fn build(kind: TableKind, n_max: usize, alpha: HalfInt) -> Result<Table, AppError> {
    let n = n_max as i64;
    Ok(match kind {
        TableKind::S => Table {
            header: strs(&["N", "r", "s_{N|r}"]),
            rows: (0..=n).map(|m| vec![Cell::Int(m), Cell::Half(alpha), Cell::Poly(s_sum(m as u32, alpha))]).collect(),
        },
        TableKind::Gauss => Table {
            header: strs(&["N", "s_{N|0}", "G_N"]),
            rows: (0..=n)
                .map(|m| vec![Cell::Int(m), Cell::Poly(s_sum(m as u32, HalfInt::ZERO)), Cell::Poly(gauss_G(m as usize))])
                .collect(),
        },
        TableKind::Ccoef => Table {
            header: strs(&["l", "s", "c_{l|s}", "factored"]),
            rows: (0..=n)
                .flat_map(|l| (0..=l).map(move |s| (l, s)))
                .map(|(l, s)| vec![Cell::Int(l), Cell::Int(s), Cell::Poly(c_coeff_closed(l as usize, s)), factored(l, s, false)])
                .collect(),
        },
        TableKind::Sigma => Table {
            header: strs(&["l", "s", "coefficient of Q^s", "factored"]),
            rows: (1..=n)
                .flat_map(|l| (0..=l).map(move |s| (l, s)))
                .map(|(l, s)| {
                    let coef: LaurentPoly = c_coeff_closed(l as usize, s).shift(HalfInt::int(s * (s + 1) / 2));
                    vec![Cell::Int(l), Cell::Int(s), Cell::Poly(coef), factored(l, s, true)]
                })
                .collect(),
        },
        TableKind::Theta => {
            let thetas = theta_solve(n_max, alpha2_of(alpha)?)?;
            Table {
                header: strs(&["k", "theta_k"]),
                rows: thetas.into_iter().enumerate().map(|(k, t)| vec![Cell::Int(k as i64), Cell::Rational(t.reduced())]).collect(),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factored_text(l: i64, s: i64) -> String {
        match factored(l, s, true) {
            Cell::Factored { text, .. } => text,
            _ => unreachable!(),
        }
    }

    #[test]
    fn factored_rows() {
        let row = |l: i64| (0..=l).map(|s| factored_text(l, s)).collect::<Vec<_>>().join(" + ");
        assert_eq!(row(1), "(1-q) + q*Q");
        assert_eq!(row(2), "(1-q)*(1-q^3) + q*Q*(1-q^3) + q^3*Q^2");
        assert_eq!(row(3), "(1-q)*(1-q^3)*(1-q^5) + q*Q*(1-q^3)*(1-q^5) + q^3*Q^2*(1-q^3)*[2]_{q^2} + q^6*Q^3");
        assert_eq!(
            row(4),
            "(1-q)*(1-q^3)*(1-q^5)*(1-q^7) + q*Q*(1-q^3)*(1-q^5)*(1-q^7) + q^3*Q^2*(1-q^3)*(1-q^5)*[3]_{q^2} + q^6*Q^3*(1-q^5)*[2]_{q^2} + q^10*Q^4"
        );
    }

    #[test]
    fn factors_multiply_out() {
        use gaussq_core::qcore::{q_binomial, BaseStep};
        for l in 0..=9i64 {
            for s in 0..=l {
                let (odd, binom) = c_factors(l, s);
                let mut v: LaurentPoly = odd.iter().map(|&t| LaurentPoly::one_minus(1, HalfInt::int(t))).product();
                if let Some((top, r)) = binom {
                    v = v * q_binomial(top, r, BaseStep::Q2);
                }
                assert_eq!(v, c_coeff_closed(l as usize, s), "l={l} s={s}");
            }
        }
    }

    #[test]
    fn sigma_table_shape() {
        let t = build(TableKind::Sigma, 4, HalfInt::ZERO).unwrap();
        assert_eq!(t.rows.len(), 2 + 3 + 4 + 5);
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("l,s,coefficient of Q^s,factored\n1,0,1 - 1*q^1,(1-q)\n1,1,1*q^1,q*Q\n"));
    }

    #[test]
    fn theta_table_at_alpha_zero() {
        let t = build(TableKind::Theta, 4, HalfInt::ZERO).unwrap();
        let g2 = LaurentPoly::from_q_coeffs([1, -1]);
        assert_eq!(t.rows[2][1], Cell::Rational(g2.into()));
        assert_eq!(t.rows[3][1], Cell::Rational(LaurentPoly::zero().into()));
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("ccoef".parse::<TableKind>().unwrap(), TableKind::Ccoef);
        assert!("nope".parse::<TableKind>().is_err());
    }
}
