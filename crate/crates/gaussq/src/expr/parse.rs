//! Recursive-descent parser.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary ('*' unary)*
//! unary    := '-' unary | factor
//! factor   := atom ['^' exponent]
//! atom     := integer | ident | ident '(' args ')' | '(' expr ')'
//! exponent := ['('] ['-'] integer ['/' '2'] [')']
//! args     := arg (',' arg)*
//! arg      := expr | ['-'] integer '/' '2'
//! ```
//!
//! An exponent swallows a trailing `/2`, so `q^3/2` is `q^{3/2}`.

use std::collections::BTreeSet;
use std::fmt;

use gaussq_core::HalfInt;
use num_bigint::BigInt;

use super::{ArgKind, BinOp, Expr, Func, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source.
    pub offset: usize,
    pub expected: BTreeSet<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            let list: Vec<&str> = self.expected.iter().map(String::as_str).collect();
            write!(f, " (expected one of: {})", list.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse::<BigInt>().expect("ascii digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if "+-*^(),/".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            let ch = src[i..].chars().next().unwrap_or(c);
            return Err(ParseError { offset: i, expected: BTreeSet::new(), message: format!("unexpected character {ch:?}") });
        }
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    /// Tokens tried at `pos` since it last advanced.
    expected: BTreeSet<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        self.expected.clear();
        t
    }

    fn at_sym(&mut self, c: char) -> bool {
        self.expected.insert(format!("'{c}'"));
        *self.peek() == Tok::Sym(c)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.at_sym(c);
        if hit {
            self.advance();
        }
        hit
    }

    fn error(&self, message: String) -> ParseError {
        ParseError { offset: self.offset(), expected: self.expected.clone(), message }
    }

    fn unexpected(&self) -> ParseError {
        self.error(format!("unexpected {}", self.peek().describe()))
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn expect_int(&mut self) -> Result<BigInt, ParseError> {
        self.expected.insert("integer".to_string());
        match self.peek().clone() {
            Tok::Int(n) => {
                self.advance();
                Ok(n)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat_sym('+') {
                BinOp::Add
            } else if self.eat_sym('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.term()?;
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(rhs));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat_sym('*') {
            let rhs = self.unary()?;
            lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat_sym('^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn small_int(&self, n: BigInt, start: usize) -> Result<i64, ParseError> {
        i64::try_from(&n).ok().filter(|v| v.abs() < (1 << 40)).ok_or_else(|| ParseError {
            offset: start,
            expected: BTreeSet::new(),
            message: format!("integer {n} is too large here"),
        })
    }

    /// `[-] int ['/' '2']` as a half-integer.
    fn half_literal(&mut self, allow_integer: bool) -> Result<HalfInt, ParseError> {
        let start = self.offset();
        let neg = self.eat_sym('-');
        let n = self.expect_int()?;
        let n = self.small_int(n, start)?;
        let n = if neg { -n } else { n };
        if self.eat_sym('/') {
            let two_at = self.offset();
            let d = self.expect_int()?;
            if d != BigInt::from(2) {
                return Err(ParseError {
                    offset: two_at,
                    expected: ["2".to_string()].into(),
                    message: "only halves are supported after '/'".to_string(),
                });
            }
            Ok(HalfInt::new(n))
        } else if allow_integer {
            Ok(HalfInt::int(n))
        } else {
            Err(self.unexpected())
        }
    }

    fn exponent(&mut self) -> Result<HalfInt, ParseError> {
        if self.eat_sym('(') {
            let e = self.half_literal(true)?;
            self.expect_sym(')')?;
            return Ok(e);
        }
        self.half_literal(true)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.expected.insert("integer".to_string());
        self.expected.insert("identifier".to_string());
        match self.peek().clone() {
            Tok::Int(n) => {
                self.advance();
                Ok(Expr::Int(n))
            }
            Tok::Ident(name) => {
                let start = self.offset();
                self.advance();
                if self.at_sym('(') {
                    let func = Func::from_name(&name).ok_or_else(|| ParseError {
                        offset: start,
                        expected: BTreeSet::new(),
                        message: format!("unknown function {name:?}"),
                    })?;
                    self.advance();
                    let args = self.args()?;
                    self.expect_sym(')')?;
                    check_args(func, &args, start)?;
                    return Ok(Expr::Call(func, args));
                }
                match Var::from_name(&name) {
                    Some(v) => Ok(Expr::Var(v)),
                    None if Func::from_name(&name).is_some() => {
                        Err(self.error(format!("function {name} needs an argument list")))
                    }
                    None => Err(ParseError {
                        offset: start,
                        expected: ["q", "u", "x"].iter().map(|s| s.to_string()).collect(),
                        message: format!("unknown variable {name:?}"),
                    }),
                }
            }
            _ if self.eat_sym('(') => {
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn args(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut args = vec![self.arg()?];
        while self.eat_sym(',') {
            args.push(self.arg()?);
        }
        Ok(args)
    }

    fn arg(&mut self) -> Result<Expr, ParseError> {
        let save = (self.pos, self.expected.clone());
        let e = self.expr()?;
        if self.at_sym('/') {
            // a half literal such as 3/2 or -1/2: re-read it as one
            if literal_int(&e).is_none() {
                return Err(self.error("'/' is only allowed in half-integer literals".to_string()));
            }
            (self.pos, self.expected) = save;
            return Ok(Expr::Half(self.half_literal(false)?));
        }
        Ok(e)
    }
}

fn literal_half(e: &Expr) -> Option<HalfInt> {
    match e {
        Expr::Int(n) => i64::try_from(n).ok().map(HalfInt::int),
        Expr::Half(h) => Some(*h),
        Expr::Neg(inner) => literal_half(inner).map(|h| -h),
        _ => None,
    }
}

/// Integer literal (possibly negated) as an `i64`.
pub(super) fn literal_int(e: &Expr) -> Option<i64> {
    literal_half(e).filter(|_| !matches!(e, Expr::Half(_))).and_then(HalfInt::to_integer)
}

pub(super) fn literal_halfint(e: &Expr) -> Option<HalfInt> {
    literal_half(e)
}

fn check_args(func: Func, args: &[Expr], offset: usize) -> Result<(), ParseError> {
    let kinds = func.signature();
    let required = kinds.iter().filter(|k| !k.1).count();
    if args.len() < required || args.len() > kinds.len() {
        let arity = if required == kinds.len() { format!("{required}") } else { format!("{required} to {}", kinds.len()) };
        return Err(ParseError {
            offset,
            expected: BTreeSet::new(),
            message: format!("{} takes {arity} arguments, got {}", func.name(), args.len()),
        });
    }
    for (i, (arg, (kind, _))) in args.iter().zip(kinds).enumerate() {
        let ok = match kind {
            ArgKind::Int => literal_int(arg).is_some(),
            ArgKind::Half => literal_half(arg).is_some(),
            ArgKind::Expr => !matches!(arg, Expr::Half(_)),
        };
        if !ok {
            return Err(ParseError {
                offset,
                expected: BTreeSet::new(),
                message: format!("argument {} of {} must be {}", i + 1, func.name(), kind.describe()),
            });
        }
    }
    Ok(())
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, pos: 0, expected: BTreeSet::new() };
    let e = p.expr()?;
    p.expected.insert("end of input".to_string());
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(e)
}
