//! A small expression language over `q`, `u = q^{1/2}` and `x`, evaluated
//! exactly to polynomials in `x` with Laurent-polynomial coefficients.

mod parse;

use std::fmt;

use gaussq_core::qcore::{gauss_G, poch, q_binomial, q_factorial, q_int, s_sum, sigma, BaseStep, Sign};
use gaussq_core::qpolyx::{closed_form_s_tilde, rising_x, rogers_szego_s};
use gaussq_core::{HalfInt, LaurentPoly, XPoly};
use num_bigint::BigInt;

pub use parse::{parse, ParseError};
use parse::{literal_halfint, literal_int};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    U,
    X,
}

impl Var {
    fn from_name(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "u" => Some(Var::U),
            "x" => Some(Var::X),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::U => "u",
            Var::X => "x",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    QInt,
    QFact,
    QBinom,
    Poch,
    Rising,
    S,
    STilde,
    Sigma,
    SmallS,
    G,
    Dq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    /// An integer literal, possibly negated.
    Int,
    /// An integer or `n/2` literal.
    Half,
    Expr,
}

impl ArgKind {
    fn describe(self) -> &'static str {
        match self {
            ArgKind::Int => "an integer literal",
            ArgKind::Half => "an integer or n/2 literal",
            ArgKind::Expr => "an expression",
        }
    }
}

impl Func {
    pub const ALL: [Func; 11] = [
        Func::QInt,
        Func::QFact,
        Func::QBinom,
        Func::Poch,
        Func::Rising,
        Func::S,
        Func::STilde,
        Func::Sigma,
        Func::SmallS,
        Func::G,
        Func::Dq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::QInt => "qint",
            Func::QFact => "qfact",
            Func::QBinom => "qbinom",
            Func::Poch => "poch",
            Func::Rising => "rising",
            Func::S => "S",
            Func::STilde => "Stilde",
            Func::Sigma => "sigma",
            Func::SmallS => "s",
            Func::G => "G",
            Func::Dq => "dq",
        }
    }

    fn from_name(s: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Argument kinds; `true` marks an optional trailing argument.
    pub fn signature(self) -> &'static [(ArgKind, bool)] {
        use ArgKind::*;
        match self {
            Func::QInt | Func::QFact => &[(Int, false), (Half, true)],
            Func::QBinom => &[(Int, false), (Int, false), (Half, true)],
            Func::Poch => &[(Int, false), (Half, false), (Half, false), (Int, false)],
            Func::Rising => &[(Expr, false), (Int, false)],
            Func::S | Func::STilde | Func::G => &[(Int, false)],
            Func::Sigma | Func::SmallS => &[(Int, false), (Half, false)],
            Func::Dq => &[(Expr, false)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal.
    Int(BigInt),
    /// `n/2` literal; only valid as a function argument.
    Half(HalfInt),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, HalfInt),
    Call(Func, Vec<Expr>),
}

impl Expr {
    /// Binding strength used by the printer.
    fn level(&self) -> u8 {
        match self {
            Expr::Bin(BinOp::Add | BinOp::Sub, ..) => 1,
            Expr::Bin(BinOp::Mul, ..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.level() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

fn write_half(f: &mut fmt::Formatter<'_>, h: HalfInt) -> fmt::Result {
    write!(f, "{}/2", h.twice())
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Half(h) => write_half(f, *h),
            Expr::Var(v) => f.write_str(v.name()),
            Expr::Neg(inner) => {
                f.write_str("-")?;
                write_at(f, inner, 3)
            }
            Expr::Bin(op, a, b) => {
                let (sym, lvl) = match op {
                    BinOp::Add => (" + ", 1),
                    BinOp::Sub => (" - ", 1),
                    BinOp::Mul => ("*", 2),
                };
                write_at(f, a, lvl)?;
                f.write_str(sym)?;
                write_at(f, b, lvl + 1)
            }
            Expr::Pow(base, e) => {
                write_at(f, base, 5)?;
                f.write_str("^")?;
                match (e.to_integer(), e.twice() < 0) {
                    (Some(n), false) => write!(f, "{n}"),
                    (Some(n), true) => write!(f, "({n})"),
                    (None, false) => write_half(f, *e),
                    (None, true) => {
                        f.write_str("(")?;
                        write_half(f, *e)?;
                        f.write_str(")")
                    }
                }
            }
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Core(#[from] gaussq_core::Error),
    #[error("{0}")]
    Domain(String),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError::Domain(msg.into()))
}

fn int_arg(args: &[Expr], i: usize) -> Result<i64, EvalError> {
    args.get(i).and_then(literal_int).map_or_else(|| domain(format!("argument {} must be an integer literal", i + 1)), Ok)
}

fn nonneg(args: &[Expr], i: usize) -> Result<usize, EvalError> {
    let v = int_arg(args, i)?;
    usize::try_from(v).or_else(|_| domain(format!("argument {} must be nonnegative, got {v}", i + 1)))
}

fn half_arg(args: &[Expr], i: usize) -> Result<HalfInt, EvalError> {
    args.get(i).and_then(literal_halfint).map_or_else(|| domain(format!("argument {} must be an integer or n/2 literal", i + 1)), Ok)
}

fn base_arg(args: &[Expr], i: usize) -> Result<BaseStep, EvalError> {
    if args.len() <= i {
        return Ok(BaseStep::Q);
    }
    Ok(BaseStep::new(half_arg(args, i)?)?)
}

fn u32_arg(args: &[Expr], i: usize) -> Result<u32, EvalError> {
    let v = nonneg(args, i)?;
    u32::try_from(v).or_else(|_| domain(format!("argument {} is too large", i + 1)))
}

fn scalar(v: &XPoly, what: &str) -> Result<LaurentPoly, EvalError> {
    v.as_constant().map_or_else(|| domain(format!("{what} must not depend on x")), Ok)
}

fn power(base: XPoly, e: HalfInt) -> Result<XPoly, EvalError> {
    if let Some(n) = e.to_integer().filter(|&n| n >= 0) {
        let n = u32::try_from(n).or_else(|_| domain("exponent too large"))?;
        return Ok(base.pow(n));
    }
    let c = scalar(&base, "a negative or fractional power's base")?;
    let mut terms = c.terms();
    let (a, coef) = match (terms.next(), terms.next()) {
        (Some((a, coef)), None) => (a, coef.clone()),
        _ => return domain(format!("({c})^({e}) is not a Laurent polynomial")),
    };
    let sign = if coef == BigInt::from(1) {
        1
    } else if coef == BigInt::from(-1) && e.is_integer() {
        if e.twice() % 4 == 0 { 1 } else { -1 }
    } else {
        return domain(format!("({c})^({e}) is not a Laurent polynomial"));
    };
    let twice = a.twice() * e.twice();
    if twice % 2 != 0 {
        return domain(format!("({c})^({e}) leaves the half-integer lattice"));
    }
    Ok(XPoly::constant(LaurentPoly::monomial(sign, HalfInt::new(twice / 2))))
}

fn call(func: Func, args: &[Expr]) -> Result<XPoly, EvalError> {
    let c = |p: LaurentPoly| Ok(XPoly::constant(p));
    match func {
        Func::QInt => c(q_int(u32_arg(args, 0)?, base_arg(args, 1)?)),
        Func::QFact => c(q_factorial(u32_arg(args, 0)?, base_arg(args, 1)?)),
        Func::QBinom => c(q_binomial(int_arg(args, 0)?, int_arg(args, 1)?, base_arg(args, 2)?)),
        Func::Poch => {
            let sign = Sign::of(int_arg(args, 0)?)?;
            c(poch(sign, half_arg(args, 1)?, half_arg(args, 2)?, nonneg(args, 3)?))
        }
        Func::Rising => {
            let v = eval(args.first().ok_or_else(|| EvalError::Domain("rising needs a value".into()))?)?;
            Ok(rising_x(&scalar(&v, "the shift of rising")?, nonneg(args, 1)?))
        }
        Func::S => Ok(rogers_szego_s(nonneg(args, 0)?)),
        Func::STilde => Ok(closed_form_s_tilde(nonneg(args, 0)?)),
        Func::Sigma => c(sigma(u32_arg(args, 0)?, half_arg(args, 1)?)),
        Func::SmallS => c(s_sum(u32_arg(args, 0)?, half_arg(args, 1)?)),
        Func::G => c(gauss_G(nonneg(args, 0)?)),
        Func::Dq => {
            let v = eval(args.first().ok_or_else(|| EvalError::Domain("dq needs an argument".into()))?)?;
            Ok(v.q_derivative())
        }
    }
}

/// Exact value of an expression; Laurent polynomials come back as constants.
pub fn eval(e: &Expr) -> Result<XPoly, EvalError> {
    match e {
        Expr::Int(n) => Ok(XPoly::constant(LaurentPoly::constant(n.clone()))),
        Expr::Half(h) => domain(format!("{}/2 is only meaningful as a function argument", h.twice())),
        Expr::Var(Var::Q) => Ok(XPoly::constant(LaurentPoly::q_int_pow(1))),
        Expr::Var(Var::U) => Ok(XPoly::constant(LaurentPoly::q_pow(HalfInt::HALF))),
        Expr::Var(Var::X) => Ok(XPoly::x()),
        Expr::Neg(a) => Ok(-eval(a)?),
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval(a)?, eval(b)?);
            Ok(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                BinOp::Mul => a * b,
            })
        }
        Expr::Pow(base, ex) => power(eval(base)?, *ex),
        Expr::Call(f, args) => call(*f, args),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(s: &str) -> String {
        eval(&parse(s).unwrap()).unwrap().to_string()
    }

    #[test]
    fn examples() {
        let b = LaurentPoly::from_q_coeffs([1, 1, 2, 1, 1]);
        assert_eq!(eval(&parse("qbinom(4,2)").unwrap()).unwrap(), XPoly::constant(b));
        assert_eq!(ev("qbinom(3,5)"), "0");
        let s2 = XPoly::from_coeffs(vec![LaurentPoly::one(), -LaurentPoly::from_q_coeffs([1, 1]), LaurentPoly::one()]);
        assert_eq!(eval(&parse("S(2)").unwrap()).unwrap(), s2);
        let d = XPoly::monomial(LaurentPoly::from_q_coeffs([1, 1, 1]), 2);
        assert_eq!(eval(&parse("dq(x^3)").unwrap()).unwrap(), d);
    }

    #[test]
    fn half_exponents() {
        assert_eq!(parse("q^3/2").unwrap(), Expr::Pow(Box::new(Expr::Var(Var::Q)), HalfInt::new(3)));
        assert_eq!(eval(&parse("q^3/2 * (1 + x)").unwrap()).unwrap(), eval(&parse("u^3 + u^3*x").unwrap()).unwrap());
        assert_eq!(ev("q^(-1/2)*u"), "1");
        assert_eq!(ev("u^(-2)*q"), "1");
        assert_eq!(ev("(-q)^(-3) + q^(-3)"), "0");
    }

    #[test]
    fn functions_match_core() {
        assert_eq!(ev("poch(1, 1, 2, 2) - G(4)"), "0");
        assert_eq!(ev("Stilde(5) - S(5)"), "0");
        assert_eq!(ev("qint(3, 2) * qint(2) - qint(6)"), "0");
        assert_eq!(ev("s(4, 0) - G(4)"), "0");
        assert_eq!(ev("rising(-1, 2) - (x - 1)*(x - q)"), "0");
    }

    #[test]
    fn errors() {
        let e = parse("qint(2").unwrap_err();
        assert_eq!(e.offset, 6);
        assert!(e.expected.contains("')'") && e.expected.contains("','"));
        let e = parse("1 + * 2").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.expected.contains("integer") && e.expected.contains("'('"));
        assert!(parse("qbinom(q, 2)").unwrap_err().message.contains("integer literal"));
        assert!(parse("qint(1, 2, 3)").unwrap_err().message.contains("arguments"));
        assert!(parse("y + 1").unwrap_err().message.contains("unknown variable"));
        assert!(parse("q^1/3").is_err());
        assert!(eval(&parse("(1 + q)^(-1)").unwrap()).is_err());
        assert!(eval(&parse("(2*q)^(-1)").unwrap()).is_err());
        assert!(eval(&parse("u^1/2").unwrap()).is_err());
        assert!(eval(&parse("x^(-1)").unwrap()).is_err());
    }

    fn arb_half() -> impl Strategy<Value = HalfInt> {
        (-9i64..10).prop_map(HalfInt::new)
    }

    fn arb_arg(kind: ArgKind, expr: BoxedStrategy<Expr>) -> BoxedStrategy<Expr> {
        match kind {
            ArgKind::Int => prop_oneof![
                (0u32..9).prop_map(|n| Expr::Int(n.into())),
                (1u32..9).prop_map(|n| Expr::Neg(Box::new(Expr::Int(n.into())))),
            ]
            .boxed(),
            ArgKind::Half => prop_oneof![(0u32..9).prop_map(|n| Expr::Int(n.into())), arb_half().prop_map(Expr::Half)].boxed(),
            ArgKind::Expr => expr,
        }
    }

    fn arb_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            (0u32..20).prop_map(|n| Expr::Int(n.into())),
            prop_oneof![Just(Var::Q), Just(Var::U), Just(Var::X)].prop_map(Expr::Var),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            let boxed = inner.clone().boxed();
            prop_oneof![
                inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
                (prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul)], inner.clone(), inner.clone())
                    .prop_map(|(op, a, b)| Expr::Bin(op, Box::new(a), Box::new(b))),
                (inner.clone(), arb_half()).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
                (0..Func::ALL.len()).prop_flat_map(move |i| {
                    let f = Func::ALL[i];
                    let sig = f.signature();
                    let strategies: Vec<_> = sig.iter().map(|(k, _)| arb_arg(*k, boxed.clone())).collect();
                    strategies.prop_map(move |args| Expr::Call(f, args))
                }),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn print_then_parse_is_identity(e in arb_expr()) {
            let printed = e.to_string();
            let back = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
            prop_assert_eq!(&back, &e, "printed as {}", printed);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
