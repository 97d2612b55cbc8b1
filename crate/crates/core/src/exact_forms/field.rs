//! Exact scalars: arbitrary-precision rationals or residues modulo an odd prime.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = 10007;

/// An odd prime below 2^32, so products fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;
    fn try_from(p: u64) -> Result<Self> {
        Modulus::new(p)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(Modulus),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        Ok(Field::Prime(Modulus::new(p)?))
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(m) => m.get(),
        }
    }

    pub fn zero(self) -> FieldElement {
        self.int(0)
    }

    pub fn one(self) -> FieldElement {
        self.int(1)
    }

    pub fn int(self, n: i64) -> FieldElement {
        self.bigint(&BigInt::from(n))
    }

    pub fn bigint(self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(m) => {
                let p = BigInt::from(m.get());
                let r = n.mod_floor(&p).to_u64().expect("residue fits in u64");
                FieldElement::Modular(ModInt { value: r, modulus: m })
            }
        }
    }

    /// Map a rational into this field; fails when the denominator vanishes mod p.
    pub fn rational(self, q: &BigRational) -> Result<FieldElement> {
        match self {
            Field::Rationals => Ok(FieldElement::Rational(q.clone())),
            Field::Prime(_) => {
                let num = self.bigint(q.numer());
                let den = self.bigint(q.denom());
                num.checked_div(&den)
            }
        }
    }

    /// Parse `"p/q"` or `"p"` with optional sign.
    pub fn parse(self, literal: &str) -> Result<FieldElement> {
        let q = parse_rational(literal)?;
        self.rational(&q)
    }

    /// Uniform integer in `[-bound, bound]` over Q, uniform residue over F_p.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R, bound: i64) -> FieldElement {
        match self {
            Field::Rationals => self.int(rng.gen_range(-bound..=bound)),
            Field::Prime(m) => FieldElement::Modular(ModInt {
                value: rng.gen_range(0..m.get()),
                modulus: m,
            }),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(m) => write!(f, "F_{}", m.get()),
        }
    }
}

pub fn parse_rational(literal: &str) -> Result<BigRational> {
    let err = || Error::ParseScalar(literal.to_string());
    let s = literal.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        let t = t.trim();
        let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        t.strip_prefix('+').unwrap_or(t).parse::<BigInt>().map_err(|_| err())
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() || d.trim().starts_with(['+', '-']) {
                return Err(err());
            }
            Ok(BigRational::new(parse_int(n)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: Modulus,
}

impl ModInt {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn pow(self, mut e: u64) -> ModInt {
        let p = self.modulus.get();
        let mut base = self.value;
        let mut acc = 1 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        ModInt { value: acc, modulus: self.modulus }
    }
}

/// An exact scalar. Rationals are kept reduced with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Modular(ModInt),
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular(m) => Field::Prime(m.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Modular(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Modular(m) => m.value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Modular(_) => None,
        }
    }

    /// Sign over Q; residues are treated as non-negative.
    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElement::Rational(q) if q.is_negative())
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Modular(m) => FieldElement::Modular(m.pow(m.modulus.get() - 2)),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        if self.field() != rhs.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(num_traits::pow(q.clone(), e as usize)),
            FieldElement::Modular(m) => FieldElement::Modular(m.pow(e as u64)),
        }
    }

    pub fn scale_int(&self, k: i64) -> FieldElement {
        self * &self.field().int(k)
    }

    fn zip(&self, rhs: &FieldElement, op: impl Fn(&BigRational, &BigRational) -> BigRational, mop: impl Fn(u64, u64, u64) -> u64) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(op(a, b)),
            (FieldElement::Modular(a), FieldElement::Modular(b)) if a.modulus == b.modulus => {
                let p = a.modulus.get();
                FieldElement::Modular(ModInt { value: mop(a.value, b.value, p), modulus: a.modulus })
            }
            _ => panic!("arithmetic between elements of {} and {}", self.field(), rhs.field()),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Modular(m) => write!(f, "{}", m.value),
        }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.zip(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.zip(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.zip(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Modular(m) => {
                let p = m.modulus.get();
                FieldElement::Modular(ModInt { value: (p - m.value) % p, modulus: m.modulus })
            }
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
