//! The Chow ring of the flag bundle `Phi -> G(1,N)` of pointed lines,
//! `A(Phi) = A(G)[z] / (z^2 - s1 z + s11)`, and the Chern classes of the
//! bundles of relative principal parts of the determinantal cubic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::schubert::text::{self, ClassAlgebra};
use crate::schubert::ChowElement;

/// Degree of the hypersurface whose jets along a line are taken.
pub const HYPERSURFACE_DEGREE: i64 = 3;
/// `c1` of the relative cotangent bundle is `CHERN_COTANGENT_ZETA * z + s1`.
pub const CHERN_COTANGENT_ZETA: i64 = -2;
/// Highest supported jet order: the rank of the bundle of principal parts.
pub const MAX_JET_ORDER: u32 = 4;

/// `alpha * z + beta` with `alpha`, `beta` in `A(G(1,N))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagElement {
    alpha: ChowElement,
    beta: ChowElement,
}

fn join_degree(x: Option<u32>, y: Option<u32>) -> Result<Option<u32>> {
    match (x, y) {
        (Some(a), Some(b)) if a != b => Err(Error::Grading(format!("degrees {a} and {b} do not match"))),
        (Some(a), _) | (None, Some(a)) => Ok(Some(a)),
        (None, None) => Ok(None),
    }
}

impl FlagElement {
    pub fn new(alpha: ChowElement, beta: ChowElement) -> Result<Self> {
        if alpha.n() != beta.n() {
            return Err(Error::ContextMismatch(alpha.n(), beta.n()));
        }
        let x = FlagElement { alpha, beta };
        x.checked_degree()?;
        Ok(x)
    }

    pub fn zero(n: u32) -> Self {
        FlagElement { alpha: ChowElement::zero(n), beta: ChowElement::zero(n) }
    }

    pub fn one(n: u32) -> Self {
        FlagElement::from_base(ChowElement::one(n))
    }

    /// The tautological class `z`.
    pub fn zeta(n: u32) -> Self {
        FlagElement { alpha: ChowElement::one(n), beta: ChowElement::zero(n) }
    }

    /// Pullback of a class from the Grassmannian.
    pub fn from_base(x: ChowElement) -> Self {
        FlagElement { alpha: ChowElement::zero(x.n()), beta: x }
    }

    pub fn alpha(&self) -> &ChowElement {
        &self.alpha
    }

    pub fn beta(&self) -> &ChowElement {
        &self.beta
    }

    pub fn n(&self) -> u32 {
        self.alpha.n()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    fn checked_degree(&self) -> Result<Option<u32>> {
        join_degree(self.alpha.codim().map(|c| c + 1), self.beta.codim())
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.checked_degree().expect("graded by construction")
    }

    pub fn add(&self, other: &FlagElement) -> Result<FlagElement> {
        join_degree(self.degree(), other.degree())?;
        Ok(FlagElement { alpha: self.alpha.add(&other.alpha)?, beta: self.beta.add(&other.beta)? })
    }

    pub fn sub(&self, other: &FlagElement) -> Result<FlagElement> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> FlagElement {
        FlagElement { alpha: self.alpha.scale(k), beta: self.beta.scale(k) }
    }

    /// Product reduced by `z^2 = s1 z - s11`.
    pub fn multiply(&self, other: &FlagElement) -> Result<FlagElement> {
        if self.n() != other.n() {
            return Err(Error::ContextMismatch(self.n(), other.n()));
        }
        let n = self.n();
        let aa = self.alpha.multiply(&other.alpha)?;
        let alpha = aa
            .pieri(1)
            .add(&self.alpha.multiply(&other.beta)?)?
            .add(&self.beta.multiply(&other.alpha)?)?;
        let beta = self.beta.multiply(&other.beta)?.sub(&aa.multiply(&ChowElement::schubert(1, 1, n)?)?)?;
        FlagElement::new(alpha, beta)
    }

    /// Pushforward to the Grassmannian: the coefficient of `z`.
    pub fn pushforward(&self) -> ChowElement {
        self.alpha.clone()
    }

    pub fn parse(input: &str, default_n: Option<u32>) -> Result<FlagElement> {
        let (e, suffix) = text::parse_expression(input)?;
        e.eval(text::resolve_n(suffix, default_n)?)
    }

    /// Terms without the `@ N=..` suffix.
    pub fn format_terms(&self) -> String {
        let a = text::format_terms(&self.alpha, Some("z"));
        if self.beta.is_zero() {
            return a;
        }
        let b = text::format_terms(&self.beta, None);
        if self.alpha.is_zero() {
            return b;
        }
        match b.strip_prefix('-') {
            Some(rest) => format!("{a} - {rest}"),
            None => format!("{a} + {b}"),
        }
    }
}

impl fmt::Display for FlagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ N={}", self.format_terms(), self.n())
    }
}

impl std::str::FromStr for FlagElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FlagElement::parse(s, None)
    }
}

impl ClassAlgebra for FlagElement {
    fn integer(k: i64, n: u32) -> Self {
        FlagElement::one(n).scale(k)
    }
    fn schubert(a: u32, b: u32, n: u32) -> Result<Self> {
        Ok(FlagElement::from_base(ChowElement::schubert(a, b, n)?))
    }
    fn zeta(n: u32) -> Result<Self> {
        Ok(FlagElement::zeta(n))
    }
    fn add(&self, other: &Self) -> Result<Self> {
        FlagElement::add(self, other)
    }
    fn sub(&self, other: &Self) -> Result<Self> {
        FlagElement::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Result<Self> {
        self.multiply(other)
    }
    fn neg(&self) -> Self {
        self.scale(-1)
    }
}

/// `c1` of the m-th graded piece `O(3) (x) Sym^m(Omega)` of the principal
/// parts filtration: `3z + m(-2z + s1) = (3 - 2m) z + m s1`.
pub fn principal_parts_root(m: u32, n: u32) -> FlagElement {
    let cotangent = FlagElement::zeta(n)
        .scale(CHERN_COTANGENT_ZETA)
        .add(&FlagElement::from_base(ChowElement::special(1, n)))
        .expect("both of degree one");
    FlagElement::zeta(n)
        .scale(HYPERSURFACE_DEGREE)
        .add(&cotangent.scale(m as i64))
        .expect("both of degree one")
}

fn check_order(r: u32) -> Result<()> {
    if !(1..=MAX_JET_ORDER).contains(&r) {
        return Err(Error::RankOutOfRange(r));
    }
    Ok(())
}

/// Top Chern class `c_r(E^r) = prod_{m<r} ((3-2m) z + m s1)` on G(1,5).
pub fn chern_top_principal_parts(r: u32) -> Result<FlagElement> {
    chern_top_principal_parts_on(r, 5)
}

pub fn chern_top_principal_parts_on(r: u32, n: u32) -> Result<FlagElement> {
    check_order(r)?;
    (0..r).try_fold(FlagElement::one(n), |acc, m| acc.multiply(&principal_parts_root(m, n)))
}

/// Graded pieces `c_0, ..., c_r` of the total Chern class
/// `prod_{m<r} (1 + (3-2m) z + m s1)`.
pub fn chern_total_principal_parts(r: u32) -> Result<Vec<FlagElement>> {
    check_order(r)?;
    let n = 5;
    let mut pieces = vec![FlagElement::one(n)];
    for m in 0..r {
        let root = principal_parts_root(m, n);
        let mut next = vec![FlagElement::zero(n); pieces.len() + 1];
        for (d, p) in pieces.iter().enumerate() {
            next[d] = next[d].add(p)?;
            next[d + 1] = next[d + 1].add(&p.multiply(&root)?)?;
        }
        pieces = next;
    }
    Ok(pieces)
}

/// A polynomial in the elementary symmetric functions, `(p, q) -> coeff`
/// meaning `coeff * e1^p * e2^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPoly(pub BTreeMap<(u32, u32), i64>);

impl fmt::Display for SymmetricPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&(p, q), &c) in self.0.iter().rev() {
            let mut factors = Vec::new();
            match p {
                0 => {}
                1 => factors.push("e1".to_string()),
                _ => factors.push(format!("e1^{p}")),
            }
            match q {
                0 => {}
                1 => factors.push("e2".to_string()),
                _ => factors.push(format!("e2^{q}")),
            }
            let k = c.unsigned_abs();
            if k != 1 || factors.is_empty() {
                factors.insert(0, k.to_string());
            }
            let sign = if c < 0 { "-" } else { "+" };
            match (first, c < 0) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            f.write_str(&factors.join("*"))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Rewrite a symmetric polynomial in two roots, given as `(i, j) -> coeff`
/// for `x^i y^j`, in terms of `e1 = x + y` and `e2 = xy`.
pub fn to_elementary(mut poly: BTreeMap<(u32, u32), i64>) -> Result<SymmetricPoly> {
    let mut out = BTreeMap::new();
    poly.retain(|_, c| *c != 0);
    while let Some((&(i, j), &c)) = poly.iter().next_back() {
        if i < j {
            return Err(Error::Grading("polynomial is not symmetric".into()));
        }
        // e1^(i-j) e2^j has leading monomial x^i y^j
        *out.entry((i - j, j)).or_insert(0) += c;
        for k in 0..=(i - j) {
            let binom = binomial(i - j, k);
            let key = (j + (i - j - k), j + k);
            let v = poly.entry(key).or_insert(0);
            *v -= c * binom;
        }
        poly.retain(|_, c| *c != 0);
    }
    Ok(SymmetricPoly(out))
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// `prod_{i=0}^{3} (i x + (3-i) y)`: top Chern class of `Sym^3` of a rank-2
/// bundle with Chern roots `x, y`, reduced to elementary symmetric functions.
pub fn sym3_dual_symmetric_form() -> SymmetricPoly {
    let d = HYPERSURFACE_DEGREE as u32;
    let mut poly: BTreeMap<(u32, u32), i64> = BTreeMap::from([((0, 0), 1)]);
    for i in 0..=d {
        let mut next = BTreeMap::new();
        for (&(p, q), &c) in &poly {
            *next.entry((p + 1, q)).or_insert(0) += c * i as i64;
            *next.entry((p, q + 1)).or_insert(0) += c * (d - i) as i64;
        }
        poly = next;
    }
    to_elementary(poly).expect("product over a symmetric set of roots")
}

/// `c_4(Sym^3 S*)` on G(1,5) via the splitting principle, with `e1 = s1`
/// and `e2 = s11`.
pub fn chern_top_sym3_dual() -> ChowElement {
    let n = 5;
    let e1 = ChowElement::special(1, n);
    let e2 = ChowElement::schubert(1, 1, n).expect("in the box");
    sym3_dual_symmetric_form().0.iter().fold(ChowElement::zero(n), |acc, (&(p, q), &c)| {
        let term = e1.pow(p).multiply(&e2.pow(q)).expect("same context").scale(c);
        acc.add(&term).expect("homogeneous product")
    })
}

/// Multiplicity of the component `O6` in the Fano scheme of lines.
pub const FANO_MULTIPLICITY_O6: i64 = 4;
/// Multiplicity of the component `O7` in the Fano scheme of lines.
pub const FANO_MULTIPLICITY_O7: i64 = 1;

/// `[O7] = [F1(S)] - 4 [O6]`.
pub fn orbit7_class(fano: &ChowElement, o6: &ChowElement) -> Result<ChowElement> {
    let rest = fano.sub(&o6.scale(FANO_MULTIPLICITY_O6))?;
    Ok(rest.scale(FANO_MULTIPLICITY_O7))
}
