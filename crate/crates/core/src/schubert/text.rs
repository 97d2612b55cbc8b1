//! Text syntax for Chow classes: integers, `s[a]`, `s[a,b]`, `z` (the
//! tautological class on the flag bundle), `+`, `-`, `*` and parentheses,
//! with an optional trailing `@ N=5`.
//!
//! Printing is the inverse: `6*s[2] + 9*s[1,1] @ N=5`.

use std::fmt::Write;

use super::ChowElement;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Schubert(u32, u32),
    Zeta,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// Operations needed to evaluate an [`Expr`].
pub(crate) trait ClassAlgebra: Sized {
    fn integer(k: i64, n: u32) -> Self;
    fn schubert(a: u32, b: u32, n: u32) -> Result<Self>;
    fn zeta(n: u32) -> Result<Self>;
    fn add(&self, other: &Self) -> Result<Self>;
    fn sub(&self, other: &Self) -> Result<Self>;
    fn mul(&self, other: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
}

impl ClassAlgebra for ChowElement {
    fn integer(k: i64, n: u32) -> Self {
        ChowElement::one(n).scale(k)
    }
    fn schubert(a: u32, b: u32, n: u32) -> Result<Self> {
        ChowElement::schubert(a, b, n)
    }
    fn zeta(_: u32) -> Result<Self> {
        Err(Error::ParseClass("z is only available on the flag bundle".into()))
    }
    fn add(&self, other: &Self) -> Result<Self> {
        ChowElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        ChowElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.multiply(other)
    }
    fn neg(&self) -> Self {
        self.scale(-1)
    }
}

impl Expr {
    pub(crate) fn eval<T: ClassAlgebra>(&self, n: u32) -> Result<T> {
        match self {
            Expr::Int(k) => Ok(T::integer(*k, n)),
            Expr::Schubert(a, b) => T::schubert(*a, *b, n),
            Expr::Zeta => T::zeta(n),
            Expr::Neg(x) => Ok(x.eval::<T>(n)?.neg()),
            Expr::Add(x, y) => x.eval::<T>(n)?.add(&y.eval(n)?),
            Expr::Sub(x, y) => x.eval::<T>(n)?.sub(&y.eval(n)?),
            Expr::Mul(x, y) => x.eval::<T>(n)?.mul(&y.eval(n)?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(u64),
    S,
    Z,
    N,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    At,
    Equals,
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut v: u64 = 0;
            while let Some(&d) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                v = v
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(digit as u64))
                    .ok_or_else(|| Error::ParseClass("integer literal too large".into()))?;
                chars.next();
            }
            out.push(Token::Int(v));
            continue;
        }
        let tok = match c {
            's' => Token::S,
            'z' => Token::Z,
            'N' => Token::N,
            '[' => Token::LBracket,
            ']' => Token::RBracket,
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '@' => Token::At,
            '=' => Token::Equals,
            other => return Err(Error::ParseClass(format!("unexpected character {other:?}"))),
        };
        chars.next();
        out.push(tok);
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        match self.next() {
            Some(t) if t == want => Ok(()),
            Some(t) => Err(Error::ParseClass(format!("expected {want:?}, found {t:?}"))),
            None => Err(Error::ParseClass(format!("expected {want:?}, found end of input"))),
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.next() {
            Some(Token::Int(v)) => Ok(v),
            other => Err(Error::ParseClass(format!("expected integer, found {other:?}"))),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let v = self.int()?;
        u32::try_from(v).map_err(|_| Error::ParseClass(format!("index {v} too large")))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Int(v)) => {
                let k = i64::try_from(v).map_err(|_| Error::ParseClass("integer literal too large".into()))?;
                Ok(Expr::Int(k))
            }
            Some(Token::Minus) => Ok(Expr::Neg(Box::new(self.factor()?))),
            Some(Token::Plus) => self.factor(),
            Some(Token::Z) => Ok(Expr::Zeta),
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Some(Token::S) => {
                self.expect(Token::LBracket)?;
                let a = self.small()?;
                let b = if self.peek() == Some(&Token::Comma) {
                    self.pos += 1;
                    self.small()?
                } else {
                    0
                };
                self.expect(Token::RBracket)?;
                Ok(Expr::Schubert(a, b))
            }
            other => Err(Error::ParseClass(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an expression and its optional `@ N=..` suffix.
pub fn parse_expression(input: &str) -> Result<(Expr, Option<u32>)> {
    let mut p = Parser { tokens: tokenize(input)?, pos: 0 };
    if p.tokens.is_empty() {
        return Err(Error::ParseClass("empty expression".into()));
    }
    let e = p.expr()?;
    let n = if p.peek() == Some(&Token::At) {
        p.pos += 1;
        p.expect(Token::N)?;
        p.expect(Token::Equals)?;
        Some(p.small()?)
    } else {
        None
    };
    if let Some(t) = p.peek() {
        return Err(Error::ParseClass(format!("trailing input at {t:?}")));
    }
    Ok((e, n))
}

/// Resolve the ambient `N` from an explicit suffix and a default; the two must agree.
pub(crate) fn resolve_n(suffix: Option<u32>, default_n: Option<u32>) -> Result<u32> {
    let n = match (suffix, default_n) {
        (Some(a), Some(b)) if a != b => return Err(Error::ContextMismatch(a, b)),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(Error::ParseClass("missing '@ N=..' suffix".into())),
    };
    if n == 0 {
        return Err(Error::InvalidAmbient);
    }
    Ok(n)
}

/// Parse a class on G(1,N). `default_n` is used when the text has no suffix.
pub fn parse_chow(input: &str, default_n: Option<u32>) -> Result<ChowElement> {
    let (e, suffix) = parse_expression(input)?;
    let n = resolve_n(suffix, default_n)?;
    e.eval(n)
}

/// `6*s[2] + 9*s[1,1]`, optionally with every monomial followed by `*suffix`.
pub fn format_terms(x: &ChowElement, suffix: Option<&str>) -> String {
    let mut out = String::new();
    for (i, (p, c)) in x.terms().enumerate() {
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            write!(out, " {sign} ").unwrap();
        }
        let basis = match (p.a(), p.b(), suffix) {
            (0, 0, Some(z)) => z.to_string(),
            (a, 0, _) if a > 0 || suffix.is_none() => format!("s[{a}]"),
            (a, b, _) => format!("s[{a},{b}]"),
        };
        let basis = match suffix {
            Some(z) if p.codim() > 0 => format!("{basis}*{z}"),
            _ => basis,
        };
        match c.unsigned_abs() {
            1 => out.push_str(&basis),
            k => write!(out, "{k}*{basis}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> ChowElement {
        ChowElement::schubert(a, b, 5).unwrap()
    }

    #[test]
    fn prints_canonical_form() {
        let x = ChowElement::from_terms(5, [((2, 0), 6), ((1, 1), 9)]).unwrap();
        assert_eq!(x.to_string(), "6*s[2] + 9*s[1,1] @ N=5");
        assert_eq!(ChowElement::one(5).to_string(), "s[0] @ N=5");
        assert_eq!(ChowElement::zero(5).to_string(), "0 @ N=5");
        let y = ChowElement::from_terms(5, [((3, 1), -1), ((2, 2), 2)]).unwrap();
        assert_eq!(format_terms(&y, None), "-s[3,1] + 2*s[2,2]");
    }

    #[test]
    fn parses_products() {
        let x = parse_chow("9*s[1,1]*(2*s[1]*s[1] + s[1,1])", Some(5)).unwrap();
        assert_eq!(x, ChowElement::from_terms(5, [((3, 1), 18), ((2, 2), 27)]).unwrap());
        let y: ChowElement = "s[1]*s[1] - s[1,1] @ N=5".parse().unwrap();
        assert_eq!(y, s(2, 0));
        assert_eq!(parse_chow("-s[2] + s[2]", Some(5)).unwrap(), ChowElement::zero(5));
    }

    #[test]
    fn suffix_and_default_must_agree() {
        assert!(parse_chow("s[1] @ N=4", Some(5)).is_err());
        assert!(parse_chow("s[1]", None).is_err());
        assert_eq!(parse_chow("s[1] @ N=4", None).unwrap().n(), 4);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "s[1", "s[5]", "s[1,2]", "2 +", "s[1] s[1]", "z", "s[1] @ N=", "x"] {
            assert!(parse_chow(bad, Some(5)).is_err(), "{bad}");
        }
        // mixed codimension
        assert!(parse_chow("s[1] + s[2]", Some(5)).is_err());
    }

    #[test]
    fn round_trip() {
        let x = ChowElement::from_terms(5, [((4, 1), 6), ((3, 2), -6)]).unwrap();
        assert_eq!(x.to_string().parse::<ChowElement>().unwrap(), x);
    }
}
