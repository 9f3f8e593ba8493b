//! JSON, LaTeX and CSV renderings of values and tables.

use gaussq_core::{HalfInt, LaurentPoly, RationalFunction, XPoly};
use num_traits::{One, Signed};
use serde_json::{json, Value};

use crate::expr::{BinOp, Expr, Func, Var};
use crate::AppError;

/// `[[u_exponent, "coefficient"], ...]` with `u = q^{1/2}`.
pub fn laurent_json(p: &LaurentPoly) -> Value {
    Value::Array(p.u_terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

/// One Laurent array per power of `x`, lowest degree first.
pub fn xpoly_json(p: &XPoly) -> Value {
    Value::Array(p.coeffs().iter().map(laurent_json).collect())
}

pub fn rational_json(r: &RationalFunction) -> Value {
    json!({ "num": laurent_json(r.num()), "den": laurent_json(r.den()) })
}

fn q_power_latex(e: HalfInt) -> String {
    match e.to_integer() {
        Some(1) => "q".to_string(),
        Some(n) => format!("q^{{{n}}}"),
        None if e.twice() < 0 => format!("q^{{-\\frac{{{}}}{{2}}}}", -e.twice()),
        None => format!("q^{{\\frac{{{}}}{{2}}}}", e.twice()),
    }
}

pub fn laurent_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if e.is_zero() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&q_power_latex(e));
        }
    }
    out
}

fn grouped_latex(p: &LaurentPoly) -> String {
    if p.len() > 1 {
        format!("\\left({}\\right)", laurent_latex(p))
    } else {
        laurent_latex(p)
    }
}

pub fn xpoly_latex(p: &XPoly) -> String {
    if let Some(c) = p.as_constant() {
        return laurent_latex(&c);
    }
    let mut parts = Vec::new();
    for (d, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xs = match d {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{{{d}}}"),
        };
        let negated = d > 0 && c.terms().all(|(_, v)| v.is_negative());
        let mag = if negated { -c } else { c.clone() };
        let sign = if negated { "-" } else { "" };
        let coef = if d > 0 && mag.is_one() {
            sign.to_string()
        } else if d > 0 {
            format!("{sign}{}", grouped_latex(&mag))
        } else {
            laurent_latex(c)
        };
        parts.push(format!("{coef}{xs}"));
    }
    let mut out = String::new();
    for (i, part) in parts.iter().enumerate() {
        match part.strip_prefix('-') {
            Some(rest) if i > 0 => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            _ => {
                if i > 0 {
                    out.push_str(" + ");
                }
                out.push_str(part);
            }
        }
    }
    out
}

pub fn rational_latex(r: &RationalFunction) -> String {
    if r.den().is_one() {
        laurent_latex(r.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", laurent_latex(r.num()), laurent_latex(r.den()))
    }
}

fn base_latex(args: &[Expr], i: usize) -> String {
    match args.get(i) {
        None => "q".to_string(),
        Some(Expr::Half(h)) => q_power_latex(*h),
        Some(e) => format!("q^{{{}}}", expr_latex(e)),
    }
}

fn level(e: &Expr) -> u8 {
    match e {
        Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
        Expr::Bin(BinOp::Mul, ..) | Expr::Neg(_) => 2,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn wrapped(e: &Expr, min: u8) -> String {
    if level(e) < min {
        format!("\\left({}\\right)", expr_latex(e))
    } else {
        expr_latex(e)
    }
}

/// LaTeX for an expression, with Gaussian binomials in bracket notation.
pub fn expr_latex(e: &Expr) -> String {
    match e {
        Expr::Int(n) => n.to_string(),
        Expr::Half(h) => format!("\\frac{{{}}}{{2}}", h.twice()),
        Expr::Var(Var::Q) => "q".to_string(),
        Expr::Var(Var::U) => "q^{\\frac{1}{2}}".to_string(),
        Expr::Var(Var::X) => "x".to_string(),
        Expr::Neg(a) => format!("-{}", wrapped(a, 3)),
        Expr::Bin(op, a, b) => match op {
            BinOp::Add => format!("{} + {}", wrapped(a, 1), wrapped(b, 2)),
            BinOp::Sub => format!("{} - {}", wrapped(a, 1), wrapped(b, 2)),
            BinOp::Mul => format!("{} \\cdot {}", wrapped(a, 2), wrapped(b, 3)),
        },
        Expr::Pow(a, h) => {
            let exp = match h.to_integer() {
                Some(n) => n.to_string(),
                None => format!("{}/2", h.twice()),
            };
            if matches!(**a, Expr::Var(Var::U)) {
                return format!("\\left(q^{{\\frac{{1}}{{2}}}}\\right)^{{{exp}}}");
            }
            format!("{}^{{{exp}}}", wrapped(a, 5))
        }
        Expr::Call(f, args) => {
            let a = |i: usize| args.get(i).map(expr_latex).unwrap_or_default();
            match f {
                Func::QInt => format!("[{}]_{{{}}}", a(0), base_latex(args, 1)),
                Func::QFact => format!("[{}]_{{{}}}!", a(0), base_latex(args, 1)),
                Func::QBinom => format!("\\begin{{bmatrix}} {} \\\\ {} \\end{{bmatrix}}_{{{}}}", a(0), a(1), base_latex(args, 2)),
                Func::Poch => {
                    let sign = if matches!(args.first(), Some(Expr::Neg(_))) { "-" } else { "" };
                    let base = match args.get(1) {
                        Some(Expr::Half(h)) => q_power_latex(*h),
                        Some(other) => format!("q^{{{}}}", expr_latex(other)),
                        None => String::new(),
                    };
                    format!("({sign}{base}; {})_{{{}}}", base_latex(args, 2), a(3))
                }
                Func::Rising => format!("\\prod_{{k=0}}^{{{}-1}} \\left(x + {} q^{{k}}\\right)", a(1), wrapped(&args[0], 5)),
                Func::S => format!("S_{{{}}}(x)", a(0)),
                Func::STilde => format!("\\tilde{{S}}_{{{}}}(x)", a(0)),
                Func::Sigma => format!("\\sigma_{{{}}}({})", a(0), a(1)),
                Func::SmallS => format!("s_{{{}|{}}}", a(0), a(1)),
                Func::G => format!("G_{{{}}}", a(0)),
                Func::Dq => format!("D_q\\left[{}\\right]", a(0)),
            }
        }
    }
}

/// A table cell; factored cells carry a plain and a LaTeX spelling.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Half(HalfInt),
    Poly(LaurentPoly),
    Rational(RationalFunction),
    Factored { text: String, latex: String },
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Half(h) => h.to_string(),
            Cell::Poly(p) => p.to_string(),
            Cell::Rational(r) => r.to_string(),
            Cell::Factored { text, .. } => text.clone(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Half(h) => match h.to_integer() {
                Some(n) => n.to_string(),
                None => format!("\\frac{{{}}}{{2}}", h.twice()),
            },
            Cell::Poly(p) => laurent_latex(p),
            Cell::Rational(r) => rational_latex(r),
            Cell::Factored { latex, .. } => latex.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => json!(n),
            Cell::Half(h) => json!(h.to_string()),
            Cell::Poly(p) => laurent_json(p),
            Cell::Rational(r) => rational_json(r),
            Cell::Factored { text, .. } => json!(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, AppError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj = self.header.iter().cloned().zip(row.iter().map(Cell::json)).collect();
                Value::Object(obj)
            })
            .collect();
        Value::Array(rows)
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{{}}}\n", "l".repeat(self.header.len()));
        let head: Vec<String> = self.header.iter().map(|h| format!("${h}$")).collect();
        out.push_str(&head.join(" & "));
        out.push_str(" \\\\\n\\hline\n");
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| format!("${}$", c.latex())).collect();
            out.push_str(&cells.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use num_bigint::BigInt;

    #[test]
    fn laurent_renderings() {
        let p = LaurentPoly::from_u_terms([(-1, BigInt::from(2)), (0, BigInt::from(-1)), (3, BigInt::from(1))]);
        assert_eq!(laurent_json(&p), json!([[-1, "2"], [0, "-1"], [3, "1"]]));
        assert_eq!(laurent_latex(&p), "2q^{-\\frac{1}{2}} - 1 + q^{\\frac{3}{2}}");
        assert_eq!(laurent_latex(&LaurentPoly::zero()), "0");
        assert_eq!(laurent_latex(&-LaurentPoly::q_int_pow(2)), "-q^{2}");
    }

    #[test]
    fn xpoly_renderings() {
        let s2 = XPoly::from_coeffs(vec![LaurentPoly::one(), -LaurentPoly::from_q_coeffs([1, 1]), LaurentPoly::one()]);
        assert_eq!(xpoly_latex(&s2), "x^{2} - \\left(1 + q\\right)x + 1");
        assert_eq!(xpoly_json(&s2), json!([[[0, "1"]], [[0, "-1"], [2, "-1"]], [[0, "1"]]]));
    }

    #[test]
    fn binomials_use_brackets() {
        let e = parse("qbinom(4, 2) - qbinom(3, 1, 2)").unwrap();
        assert_eq!(
            expr_latex(&e),
            "\\begin{bmatrix} 4 \\\\ 2 \\end{bmatrix}_{q} - \\begin{bmatrix} 3 \\\\ 1 \\end{bmatrix}_{q^{2}}"
        );
        assert_eq!(expr_latex(&parse("(1 + x)^3/2").unwrap()), "\\left(1 + x\\right)^{3/2}");
    }

    #[test]
    fn table_formats() {
        let t = Table {
            header: vec!["k".into(), "value".into()],
            rows: vec![vec![Cell::Int(0), Cell::Poly(LaurentPoly::from_q_coeffs([1, -1]))]],
        };
        assert_eq!(t.to_csv().unwrap(), "k,value\n0,1 - 1*q^1\n");
        assert_eq!(t.to_json(), json!([{ "k": 0, "value": [[0, "1"], [2, "-1"]] }]));
        assert!(t.to_latex().contains("$0$ & $1 - q$ \\\\"));
    }
}
