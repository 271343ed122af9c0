//! Text form of scalars and a small expression parser shared with the
//! element grammar.

use super::poly::{var_index, var_name, Mono, Poly, NVARS};
use super::rat::Rat;
use super::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt::Write;

pub fn mono_to_string(m: &Mono) -> String {
    let mut parts = Vec::new();
    for i in 0..NVARS {
        let e = m.0[i];
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(var_name(i));
        } else {
            parts.push(format!("{}^{}", var_name(i), e));
        }
    }
    parts.join("*")
}

fn term_body(m: &Mono, c: &Rat) -> String {
    let c = c.abs();
    if m.is_one() {
        return c.to_string();
    }
    if c.is_one() {
        mono_to_string(m)
    } else {
        format!("{}*{}", c, mono_to_string(m))
    }
}

pub fn poly_to_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (m, c)) in p.display_order().into_iter().enumerate() {
        if k == 0 {
            if c.is_negative() {
                s.push('-');
            }
        } else if c.is_negative() {
            s.push_str(" - ");
        } else {
            s.push_str(" + ");
        }
        let _ = write!(s, "{}", term_body(m, c));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Arithmetic needed by the expression parser.
pub trait ExprValue: Sized + Clone {
    fn from_scalar(s: Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Result<Self, String>;
    fn div(&self, o: &Self) -> Result<Self, String>;
    fn pow(&self, e: i64) -> Result<Self, String>;
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Index(Vec<usize>),
    Op(char),
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
}

fn lex(src: &str) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let ch = chars[i];
        let (l0, c0) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[st..i].iter().collect();
            col += i - st;
            toks.push((Tok::Num(s.parse().unwrap()), l0, c0));
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let st = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let s: String = chars[st..i].iter().collect();
            col += i - st;
            toks.push((Tok::Ident(s), l0, c0));
            continue;
        }
        if ch == '[' {
            let st = i;
            while i < chars.len() && chars[i] != ']' {
                i += 1;
            }
            if i == chars.len() {
                return Err(ParseError { line: l0, col: c0, msg: "unclosed '['".into() });
            }
            let inner: String = chars[st + 1..i].iter().collect();
            i += 1;
            col += i - st;
            let mut idx = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                match part.parse::<usize>() {
                    Ok(v) => idx.push(v),
                    Err(_) => {
                        return Err(ParseError {
                            line: l0,
                            col: c0,
                            msg: format!("bad index '{}'", part),
                        })
                    }
                }
            }
            toks.push((Tok::Index(idx), l0, c0));
            continue;
        }
        if "+-*/^()".contains(ch) {
            toks.push((Tok::Op(ch), l0, c0));
            i += 1;
            col += 1;
            continue;
        }
        return Err(ParseError { line: l0, col: c0, msg: format!("unexpected character '{}'", ch) });
    }
    Ok(Lexer { toks })
}

struct Parser<'a, T, F> {
    toks: &'a [(Tok, usize, usize)],
    pos: usize,
    end: (usize, usize),
    leaf: F,
    _t: std::marker::PhantomData<T>,
}

impl<'a, T: ExprValue, F: FnMut(&str, Option<&[usize]>) -> Result<T, String>> Parser<'a, T, F> {
    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.1, t.2)).unwrap_or(self.end)
    }

    fn err<X>(&self, msg: impl Into<String>) -> Result<X, ParseError> {
        let (line, col) = self.here();
        Err(ParseError { line, col, msg: msg.into() })
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((Tok::Op(c), _, _)) => Some(*c),
            _ => None,
        }
    }

    fn wrap<X>(&self, at: (usize, usize), r: Result<X, String>) -> Result<X, ParseError> {
        r.map_err(|msg| ParseError { line: at.0, col: at.1, msg })
    }

    fn expr(&mut self) -> Result<T, ParseError> {
        let mut neg = false;
        match self.peek_op() {
            Some('-') => {
                neg = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        while let Some(op) = self.peek_op() {
            if op != '+' && op != '-' {
                break;
            }
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<T, ParseError> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek_op() {
            if op != '*' && op != '/' {
                break;
            }
            self.pos += 1;
            let at = self.here();
            let f = self.factor()?;
            acc = if op == '*' { self.wrap(at, acc.mul(&f))? } else { self.wrap(at, acc.div(&f))? };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<T, ParseError> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let at = self.here();
            let mut sign = 1i64;
            if self.peek_op() == Some('-') {
                sign = -1;
                self.pos += 1;
            }
            let e = match self.toks.get(self.pos) {
                Some((Tok::Num(n), _, _)) => {
                    let v: i64 = n.try_into().map_err(|_| ParseError {
                        line: at.0,
                        col: at.1,
                        msg: "exponent too large".into(),
                    })?;
                    self.pos += 1;
                    v * sign
                }
                _ => return self.err("expected integer exponent"),
            };
            return self.wrap(at, base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<T, ParseError> {
        let at = self.here();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Num(n), _, _)) => {
                self.pos += 1;
                Ok(T::from_scalar(Scalar::from_rat(Rat::from_big(BigRational::from_integer(n)))))
            }
            Some((Tok::Ident(name), _, _)) => {
                self.pos += 1;
                let idx = match self.toks.get(self.pos) {
                    Some((Tok::Index(v), _, _)) => {
                        self.pos += 1;
                        Some(v.clone())
                    }
                    _ => None,
                };
                let r = (self.leaf)(&name, idx.as_deref());
                self.wrap(at, r)
            }
            Some((Tok::Op('('), _, _)) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `src` with `leaf` resolving identifiers (optionally followed by a
/// bracketed index list).
pub fn parse_with<T, F>(src: &str, leaf: F) -> Result<T, ParseError>
where
    T: ExprValue,
    F: FnMut(&str, Option<&[usize]>) -> Result<T, String>,
{
    let lx = lex(src)?;
    let last_line = src.lines().count().max(1);
    let last_col = src.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut p = Parser { toks: &lx.toks, pos: 0, end: (last_line, last_col), leaf, _t: std::marker::PhantomData };
    if lx.toks.is_empty() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.pos < lx.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

impl ExprValue for Scalar {
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn mul(&self, o: &Self) -> Result<Self, String> {
        Ok(Scalar::mul(self, o))
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        Scalar::checked_div(self, o).map_err(|e| e.to_string())
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        Scalar::checked_pow(self, e as i32).map_err(|e| e.to_string())
    }
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    parse_with(src, |name, idx| {
        if idx.is_some() {
            return Err(format!("'{}' takes no index in a scalar", name));
        }
        match var_index(name) {
            Some(v) => Ok(Scalar::var(v)),
            None => Err(format!("unknown variable '{}'", name)),
        }
    })
}

#[cfg(test)]
pub(crate) fn parse_poly_for_tests(src: &str) -> Poly {
    let s = parse_scalar(src).unwrap();
    assert!(s.den().is_one());
    s.num().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_order_is_degree_descending() {
        let s = parse_scalar("q^-2 - 1 + q^2").unwrap();
        assert_eq!(s.to_string(), "q^2 - 1 + q^-2");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse_scalar("q + \n  z").unwrap_err();
        assert_eq!((e.line, e.col), (2, 3));
        let e = parse_scalar("(q + 1").unwrap_err();
        assert!(e.msg.contains("')'"));
    }

    #[test]
    fn fractions_round_trip() {
        for src in ["(q + 1)/(q^2 + 1)", "1/2*q - 3", "a1*a2 + l^-1*m", "-q^-1"] {
            let s = parse_scalar(src).unwrap();
            let t = parse_scalar(&s.to_string()).unwrap();
            assert_eq!(s, t, "{}", src);
        }
    }
}
