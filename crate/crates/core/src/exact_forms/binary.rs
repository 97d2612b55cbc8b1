//! Binary forms in (s, t): gcd, square-free pattern, resultant, discriminant.

use std::fmt;

use super::field::{Field, FieldElement};
use super::poly::UniPoly;
use super::ring::{sylvester_resultant, Ring};
use crate::error::{Error, Result};

/// A homogeneous polynomial of declared degree `d`; index `i` holds the
/// coefficient of `s^(d-i) t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<FieldElement>,
}

impl BinaryForm {
    /// Build from `d + 1` coefficients, all in one field.
    pub fn new(coeffs: Vec<FieldElement>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::ZeroForm("a form needs at least one coefficient"));
        };
        let field = first.field();
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty());
        BinaryForm { coeffs: coeffs.iter().map(|&c| field.int(c)).collect() }
    }

    pub fn zero(field: Field, degree: usize) -> Self {
        BinaryForm { coeffs: vec![field.zero(); degree + 1] }
    }

    pub fn constant(c: FieldElement) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// `alpha*s + beta*t`.
    pub fn linear(alpha: FieldElement, beta: FieldElement) -> Self {
        assert_eq!(alpha.field(), beta.field());
        BinaryForm { coeffs: vec![alpha, beta] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &FieldElement {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_zero)
    }

    /// Re-declare the degree of a zero form. Nonzero forms keep theirs.
    pub fn with_degree(self, degree: usize) -> Self {
        if self.is_zero() && self.degree() != degree {
            BinaryForm::zero(self.field(), degree)
        } else {
            self
        }
    }

    pub fn eval(&self, s: &FieldElement, t: &FieldElement) -> FieldElement {
        let d = self.degree() as u32;
        self.coeffs.iter().enumerate().fold(self.field().zero(), |acc, (i, c)| {
            &acc + &(c * &(&s.pow(d - i as u32) * &t.pow(i as u32)))
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.one_like(), |acc, _| acc.times(self))
    }

    /// Partial derivative in `s`; a degree-0 form differentiates to the zero form of degree 0.
    pub fn partial_s(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(self.field(), 0);
        }
        BinaryForm { coeffs: (0..d).map(|i| self.coeffs[i].scale_int((d - i) as i64)).collect() }
    }

    pub fn partial_t(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return BinaryForm::zero(self.field(), 0);
        }
        BinaryForm { coeffs: (1..=d).map(|i| self.coeffs[i].scale_int(i as i64)).collect() }
    }

    /// Exponent of the largest power of `t` dividing the form (`None` for zero).
    pub fn t_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Scale so the first nonzero coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("nonzero");
                BinaryForm { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// Canonical representative of the line spanned by the form: over Q the
    /// integer content is removed and the first nonzero coefficient made
    /// positive; over F_p this is `monic`.
    pub fn primitive(&self) -> Self {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_rational::BigRational;
        use num_traits::{One, Signed, Zero};
        if self.field() != Field::Rationals || self.is_zero() {
            return self.monic();
        }
        let qs: Vec<&BigRational> = self.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
        let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = qs.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let mut content = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if ints.iter().find(|n| !n.is_zero()).is_some_and(|n| n.is_negative()) {
            content = -content;
        }
        BinaryForm {
            coeffs: ints
                .iter()
                .map(|n| FieldElement::Rational(BigRational::from_integer(n / &content)))
                .collect(),
        }
    }

    /// The root `[s0 : t0]` of a linear form, normalised so its first nonzero entry is 1.
    pub fn linear_root(&self) -> Result<(FieldElement, FieldElement)> {
        if self.degree() != 1 {
            return Err(Error::WrongDegree { expected: 1, actual: self.degree() });
        }
        if self.is_zero() {
            return Err(Error::ZeroForm("a zero linear form has no single root"));
        }
        let point = BinaryForm { coeffs: vec![-&self.coeffs[1], self.coeffs[0].clone()] }.monic();
        Ok((point.coeffs[0].clone(), point.coeffs[1].clone()))
    }

    /// Univariate polynomial `f(s, 1)` in ascending order.
    fn dehomogenize(&self) -> UniPoly {
        let d = self.degree();
        UniPoly::new(self.field(), (0..=d).map(|j| self.coeffs[d - j].clone()).collect())
    }

    /// `t^extra * t^deg(p) * p(s/t)`.
    fn homogenize(p: &UniPoly, extra: usize) -> Self {
        let e = p.degree().expect("nonzero polynomial");
        let field = p.coeffs()[0].field();
        let mut coeffs = vec![field.zero(); e + extra + 1];
        for (j, c) in p.coeffs().iter().enumerate() {
            coeffs[e - j + extra] = c.clone();
        }
        BinaryForm { coeffs }
    }

    fn t_power(field: Field, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        BinaryForm { coeffs }
    }
}

impl Ring for BinaryForm {
    fn zero_like(&self) -> Self {
        BinaryForm::zero(self.field(), self.degree())
    }
    fn one_like(&self) -> Self {
        BinaryForm::constant(self.field().one())
    }
    fn plus(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree(), rhs.degree(), "adding binary forms of different degree");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(-1))
    }
    fn times(&self, rhs: &Self) -> Self {
        let field = self.field();
        let mut out = vec![field.zero(); self.degree() + rhs.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BinaryForm { coeffs: out }
    }
    fn scaled(&self, k: i64) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|c| c.scale_int(k)).collect() }
    }
    fn is_zero(&self) -> bool {
        BinaryForm::is_zero(self)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match (d - i, i) {
                (0, 0) => String::new(),
                (a, b) => {
                    let part = |v: &str, e: usize| match e {
                        0 => None,
                        1 => Some(v.to_string()),
                        _ => Some(format!("{v}^{e}")),
                    };
                    [part("s", a), part("t", b)].into_iter().flatten().collect::<Vec<_>>().join("*")
                }
            };
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            let body = match (abs.is_one(), mono.is_empty()) {
                (_, true) => abs.to_string(),
                (true, false) => mono,
                (false, false) => format!("{abs}*{mono}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Monic homogeneous gcd. A zero argument is ignored; both zero is an error.
pub fn binary_gcd(f: &BinaryForm, g: &BinaryForm) -> Result<BinaryForm> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    match (f.t_valuation(), g.t_valuation()) {
        (None, None) => Err(Error::GcdUndefined),
        (None, Some(_)) => Ok(g.monic()),
        (Some(_), None) => Ok(f.monic()),
        (Some(vf), Some(vg)) => {
            let common = f.dehomogenize().gcd(&g.dehomogenize());
            Ok(BinaryForm::homogenize(&common, vf.min(vg)))
        }
    }
}

/// gcd of a list of forms, skipping zeros.
pub fn binary_gcd_all<'a>(forms: impl IntoIterator<Item = &'a BinaryForm>) -> Result<BinaryForm> {
    let mut acc: Option<BinaryForm> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => f.monic(),
            Some(a) => binary_gcd(&a, f)?,
        });
    }
    acc.ok_or(Error::GcdUndefined)
}

/// Square-free decomposition: `(multiplicity, factor)` pairs where each
/// factor is the monic product of the distinct linear factors (over the
/// algebraic closure) occurring with exactly that multiplicity.
pub fn squarefree_decomposition(f: &BinaryForm) -> Result<Vec<(u32, BinaryForm)>> {
    let Some(v) = f.t_valuation() else {
        return Err(Error::ZeroForm("square-free decomposition of the zero form"));
    };
    let p = f.field().characteristic();
    if p != 0 && p as usize <= f.degree() {
        return Err(Error::CharacteristicTooSmall { p, what: "square-free decomposition" });
    }
    let field = f.field();
    let mut parts: Vec<(u32, BinaryForm)> = f
        .dehomogenize()
        .yun()
        .into_iter()
        .map(|(m, q)| (m, BinaryForm::homogenize(&q, 0)))
        .collect();
    if v > 0 {
        let t = BinaryForm::t_power(field, 1);
        match parts.iter_mut().find(|(m, _)| *m as usize == v) {
            Some((_, factor)) => *factor = factor.times(&t),
            None => parts.push((v as u32, t)),
        }
    }
    parts.sort_by_key(|(m, _)| *m);
    Ok(parts)
}

/// Root multiplicity pattern of a nonzero form: sorted pairs
/// `(multiplicity, number of distinct roots with that multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreePattern(pub Vec<(u32, usize)>);

impl SquarefreePattern {
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&(m, d)| m as usize * d).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.0.iter().map(|&(m, _)| m).max().unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.max_multiplicity() <= 1
    }
}

pub fn squarefree_pattern(f: &BinaryForm) -> Result<SquarefreePattern> {
    Ok(SquarefreePattern(
        squarefree_decomposition(f)?.into_iter().map(|(m, q)| (m, q.degree())).collect(),
    ))
}

/// Homogeneous Sylvester resultant; vanishes iff the forms share a projective root.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Result<FieldElement> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroForm("resultant of a zero form"));
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(sylvester_resultant(f.coeffs(), g.coeffs()))
}

/// Classical discriminant `a0^(2d-2) * prod (r_i - r_j)^2`, computed as
/// `(-1)^(d(d-1)/2) * Res(f_s, f_t) / d^(d-2)` so that roots at infinity are
/// handled. On cubics it equals [`disc3`] exactly, and when `a0 != 0` it equals
/// `(-1)^(d(d-1)/2) * Res(f, f_s) / a0`.
pub fn discriminant(f: &BinaryForm) -> Result<FieldElement> {
    if f.is_zero() {
        return Err(Error::ZeroForm("discriminant of the zero form"));
    }
    let d = f.degree();
    if d == 0 {
        return Err(Error::WrongDegree { expected: 1, actual: 0 });
    }
    let field = f.field();
    let p = field.characteristic();
    if p != 0 && d as u64 % p == 0 {
        return Err(Error::CharacteristicTooSmall { p, what: "discriminant" });
    }
    let res = sylvester_resultant(f.partial_s().coeffs(), f.partial_t().coeffs());
    let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
    let norm = if d >= 2 { field.int(d as i64).pow(d as u32 - 2) } else { field.one() };
    Ok(&res.scale_int(sign) / &norm)
}

/// `18 c0 c1 c2 c3 - 4 c1^3 c3 + c1^2 c2^2 - 4 c0 c2^3 - 27 c0^2 c3^2`, the
/// discriminant of `c0 s^3 + c1 s^2 t + c2 s t^2 + c3 t^3` over any ring.
pub fn disc3<R: Ring>(c0: &R, c1: &R, c2: &R, c3: &R) -> R {
    let c1_sq = c1.times(c1);
    let c2_sq = c2.times(c2);
    c0.times(c1).times(c2).times(c3).scaled(18)
        .minus(&c1_sq.times(c1).times(c3).scaled(4))
        .plus(&c1_sq.times(&c2_sq))
        .minus(&c0.times(&c2_sq).times(c2).scaled(4))
        .minus(&c0.times(c0).times(c3).times(c3).scaled(27))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(cs: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(Field::Rationals, cs)
    }

    #[test]
    fn gcd_examples() {
        // s^2 t, s t^2
        assert_eq!(binary_gcd(&form(&[0, 1, 0, 0]), &form(&[0, 0, 1, 0])).unwrap(), form(&[0, 1, 0]));
        // s^3 - s t^2, s^2 - t^2
        assert_eq!(binary_gcd(&form(&[1, 0, -1, 0]), &form(&[1, 0, -1])).unwrap(), form(&[1, 0, -1]));
        assert_eq!(binary_gcd(&form(&[3, 1, 4]), &form(&[1])).unwrap(), form(&[1]));
        assert_eq!(binary_gcd(&form(&[0, 0]), &form(&[0])), Err(Error::GcdUndefined));
        assert_eq!(binary_gcd(&form(&[0, 0, 0]), &form(&[2, 4])).unwrap(), form(&[1, 2]));
    }

    #[test]
    fn pattern_examples() {
        // -s t^2
        assert_eq!(squarefree_pattern(&form(&[0, -1, 0, 0])).unwrap().0, vec![(1, 1), (2, 1)]);
        assert_eq!(squarefree_pattern(&form(&[1, 0, 0, 0])).unwrap().0, vec![(3, 1)]);
        // s t (s + t) = s^2 t + s t^2
        assert_eq!(squarefree_pattern(&form(&[0, 1, 1, 0])).unwrap().0, vec![(1, 3)]);
        assert_eq!(squarefree_pattern(&form(&[0, 0, 0, 5])).unwrap().0, vec![(3, 1)]);
        assert!(squarefree_pattern(&form(&[0, 0])).is_err());
    }

    #[test]
    fn pattern_needs_large_characteristic() {
        let f = BinaryForm::from_ints(Field::prime(3).unwrap(), &[1, 0, 0, 1]);
        assert!(matches!(squarefree_pattern(&f), Err(Error::CharacteristicTooSmall { p: 3, .. })));
    }

    #[test]
    fn disc3_examples() {
        let q = |n| Field::Rationals.int(n);
        assert_eq!(disc3(&q(1), &q(0), &q(0), &q(0)), q(0));
        assert_eq!(disc3(&q(0), &q(1), &q(1), &q(0)), q(1));
    }

    #[test]
    fn resultant_examples() {
        let q = |n| Field::Rationals.int(n);
        assert_eq!(resultant(&form(&[1, 0]), &form(&[0, 1])).unwrap(), q(1));
        assert_eq!(resultant(&form(&[1, -1]), &form(&[1, 1])).unwrap(), q(2));
        let f = form(&[2, -3, 0, 7]);
        assert_eq!(resultant(&f, &f).unwrap(), q(0));
        assert!(resultant(&form(&[0, 0]), &f).is_err());
        // a constant c against a degree-n form gives c^n
        assert_eq!(resultant(&form(&[3]), &form(&[1, 2, 5])).unwrap(), q(9));
    }

    #[test]
    fn discriminant_examples() {
        assert!(!discriminant(&form(&[1, 0, -1])).unwrap().is_zero());
        assert!(discriminant(&form(&[1, -2, 1])).unwrap().is_zero());
        // b^2 - 4ac for a quadratic
        assert_eq!(discriminant(&form(&[2, 5, 3])).unwrap(), Field::Rationals.int(1));
        // root at infinity with multiplicity two
        assert!(discriminant(&form(&[1, 0, 0])).unwrap().is_zero() == true);
        assert!(discriminant(&form(&[0, 0, 1])).unwrap().is_zero());
        assert!(discriminant(&form(&[0, 1, 0])).is_ok_and(|d| !d.is_zero()));
        assert!(discriminant(&form(&[4])).is_err());
    }

    #[test]
    fn linear_root_is_normalised() {
        let (s0, t0) = form(&[2, 4]).linear_root().unwrap();
        assert_eq!((s0.to_string(), t0.to_string()), ("1".into(), "-1/2".into()));
        let (s0, t0) = form(&[0, 3]).linear_root().unwrap();
        assert_eq!((s0.to_string(), t0.to_string()), ("1".into(), "0".into()));
    }

    #[test]
    fn display_and_primitive() {
        assert_eq!(form(&[0, -1, 0, 0]).to_string(), "-s^2*t");
        assert_eq!(form(&[1, 0, -1]).to_string(), "s^2 - t^2");
        assert_eq!(form(&[-4, 6, 0]).primitive(), form(&[2, -3, 0]));
        let half = Field::Rationals.parse("1/2").unwrap();
        let f = BinaryForm::new(vec![half.clone(), Field::Rationals.int(-1)]).unwrap();
        assert_eq!(f.primitive(), form(&[1, -2]));
    }
}
