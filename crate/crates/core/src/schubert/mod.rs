//! The Chow ring of the Grassmannian G(1,N) of lines in P^N, in the
//! Schubert basis `sigma_{a,b}` with `N-1 >= a >= b >= 0`.
//!
//! Multiplication uses the two-row Pieri rule together with the Giambelli
//! identity `sigma_{a,b} = sigma_a sigma_b - sigma_{a+1} sigma_{b-1}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub mod text;

/// A partition `(a, b)` in the `2 x (N-1)` box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2 {
    a: u32,
    b: u32,
    n: u32,
}

impl Partition2 {
    pub fn new(a: u32, b: u32, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAmbient);
        }
        if a > n - 1 || b > a {
            return Err(Error::OutsideBox { a, b, width: n - 1 });
        }
        Ok(Partition2 { a, b, n })
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn codim(self) -> u32 {
        self.a + self.b
    }

    /// `(N-1-b, N-1-a)`, the Poincaré dual partition.
    pub fn complement(self) -> Partition2 {
        Partition2 { a: self.n - 1 - self.b, b: self.n - 1 - self.a, n: self.n }
    }

    /// Every partition of the box, ordered by codimension then by `a`.
    pub fn all(n: u32) -> Result<Vec<Partition2>> {
        if n == 0 {
            return Err(Error::InvalidAmbient);
        }
        let mut out: Vec<Partition2> =
            (0..n).flat_map(|a| (0..=a).map(move |b| Partition2 { a, b, n })).collect();
        out.sort_by_key(|p| (p.codim(), p.a));
        Ok(out)
    }
}

/// Dimension `2(N-1)` of G(1,N).
pub fn grassmannian_dim(n: u32) -> u32 {
    2 * (n - 1)
}

/// A homogeneous integer combination of Schubert classes on G(1,N).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowElement {
    n: u32,
    terms: BTreeMap<(u32, u32), i64>,
}

impl ChowElement {
    pub fn zero(n: u32) -> Self {
        ChowElement { n, terms: BTreeMap::new() }
    }

    pub fn from_partition(p: Partition2) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((p.a, p.b), 1);
        ChowElement { n: p.n, terms }
    }

    /// `sigma_{a,b}`.
    pub fn schubert(a: u32, b: u32, n: u32) -> Result<Self> {
        Ok(ChowElement::from_partition(Partition2::new(a, b, n)?))
    }

    /// The fundamental class `sigma_0`.
    pub fn one(n: u32) -> Self {
        ChowElement::from_partition(Partition2 { a: 0, b: 0, n })
    }

    /// `sigma_h`; zero when `h` exceeds the box.
    pub fn special(h: u32, n: u32) -> Self {
        match Partition2::new(h, 0, n) {
            Ok(p) => ChowElement::from_partition(p),
            Err(_) => ChowElement::zero(n),
        }
    }

    pub fn point(n: u32) -> Self {
        ChowElement::from_partition(Partition2 { a: n - 1, b: n - 1, n })
    }

    /// Build from `((a, b), coefficient)` pairs, rejecting mixed codimension.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Result<Self> {
        let mut out = ChowElement::zero(n);
        for ((a, b), c) in terms {
            let p = Partition2::new(a, b, n)?;
            out = out.add(&ChowElement::from_partition(p).scale(c))?;
        }
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common codimension of the supported classes, `None` for zero.
    pub fn codim(&self) -> Option<u32> {
        self.terms.keys().next().map(|(a, b)| a + b)
    }

    pub fn coeff(&self, a: u32, b: u32) -> i64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Terms in print order: decreasing `a`.
    pub fn terms(&self) -> impl Iterator<Item = (Partition2, i64)> + '_ {
        self.terms.iter().rev().map(|(&(a, b), &c)| (Partition2 { a, b, n: self.n }, c))
    }

    fn check_context(&self, other: &ChowElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ContextMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn accumulate(&mut self, key: (u32, u32), c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key).or_insert(0);
        *entry = entry.checked_add(c).expect("Chow coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &ChowElement) -> Result<ChowElement> {
        self.check_context(other)?;
        if let (Some(x), Some(y)) = (self.codim(), other.codim()) {
            if x != y {
                return Err(Error::MixedDegree(x, y));
            }
        }
        let mut out = self.clone();
        for (&k, &c) in &other.terms {
            out.accumulate(k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowElement) -> Result<ChowElement> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> ChowElement {
        let mut out = ChowElement::zero(self.n);
        for (&key, &c) in &self.terms {
            out.accumulate(key, c.checked_mul(k).expect("Chow coefficient overflow"));
        }
        out
    }

    /// Product with `sigma_h` by the two-row Pieri rule.
    pub fn pieri(&self, h: u32) -> ChowElement {
        let top = self.n - 1;
        let mut out = ChowElement::zero(self.n);
        for (&(a, b), &c) in &self.terms {
            for b2 in b..=a.min(b + h) {
                let a2 = a + b + h - b2;
                if a2 <= top {
                    out.accumulate((a2, b2), c);
                }
            }
        }
        out
    }

    /// Product with a single `sigma_{a,b}` through Giambelli.
    fn times_schubert(&self, a: u32, b: u32) -> ChowElement {
        let main = self.pieri(b).pieri(a);
        if b == 0 {
            return main;
        }
        let correction = self.pieri(b - 1).pieri(a + 1);
        main.sub(&correction).expect("both summands share one codimension")
    }

    pub fn multiply(&self, other: &ChowElement) -> Result<ChowElement> {
        self.check_context(other)?;
        let mut out = ChowElement::zero(self.n);
        for (&(a, b), &c) in &other.terms {
            let part = self.times_schubert(a, b).scale(c);
            for (&k, &v) in &part.terms {
                out.accumulate(k, v);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> ChowElement {
        (0..e).fold(ChowElement::one(self.n), |acc, _| acc.multiply(self).expect("same context"))
    }

    /// Coefficient of the point class `sigma_{N-1,N-1}`.
    pub fn integral(&self) -> i64 {
        self.coeff(self.n - 1, self.n - 1)
    }

    /// Degree under the Plücker embedding.
    pub fn plucker_degree(&self) -> Result<i64> {
        self.terms().try_fold(0i64, |acc, (p, c)| {
            let d = schubert_degree(p.a, p.b, p.n)?;
            c.checked_mul(d)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow("Plücker degree"))
        })
    }
}

/// Plücker degree of the Schubert cycle `Sigma_{a,b}` in G(1,N):
/// `C(2N-2-a-b, N-1-b) * (a-b+1) / (N-b)`, with the division checked.
pub fn schubert_degree(a: u32, b: u32, n: u32) -> Result<i64> {
    let p = Partition2::new(a, b, n)?;
    let top = (2 * (n - 1) - p.codim()) as u64;
    let k = (n - 1 - b) as u64;
    let binom = binomial(top, k).ok_or(Error::Overflow("Schubert degree"))?;
    let numer = binom.checked_mul((a - b + 1) as u128).ok_or(Error::Overflow("Schubert degree"))?;
    let denom = (n - b) as u128;
    if numer % denom != 0 {
        return Err(Error::NonIntegralDegree { a, b, n });
    }
    i64::try_from(numer / denom).map_err(|_| Error::Overflow("Schubert degree"))
}

fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ N={}", text::format_terms(self, None), self.n)
    }
}

impl std::str::FromStr for ChowElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        text::parse_chow(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> ChowElement {
        ChowElement::schubert(a, b, 5).unwrap()
    }

    #[test]
    fn partition_box() {
        assert!(Partition2::new(4, 3, 5).is_ok());
        assert_eq!(Partition2::new(5, 0, 5), Err(Error::OutsideBox { a: 5, b: 0, width: 4 }));
        assert!(Partition2::new(1, 2, 5).is_err());
        assert_eq!(Partition2::new(0, 0, 0), Err(Error::InvalidAmbient));
        assert_eq!(Partition2::all(5).unwrap().len(), 15);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(s(1, 0).pieri(1), s(2, 0).add(&s(1, 1)).unwrap());
        assert_eq!(s(1, 1).pieri(2), s(3, 1));
        let x = s(2, 1).scale(3).add(&s(3, 0)).unwrap();
        assert_eq!(x.pieri(0), x);
        // sigma_4 * sigma_1 leaves the box except for sigma_{4,1}
        assert_eq!(s(4, 0).pieri(1), s(4, 1));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(s(1, 1).multiply(&s(1, 1)).unwrap(), s(2, 2));
        let sq = s(1, 0).multiply(&s(1, 0)).unwrap();
        assert_eq!(s(1, 1).multiply(&sq).unwrap(), s(3, 1).add(&s(2, 2)).unwrap());
        let inner = sq.scale(2).add(&s(1, 1)).unwrap();
        let fano = s(1, 1).scale(9).multiply(&inner).unwrap();
        assert_eq!(fano, ChowElement::from_terms(5, [((3, 1), 18), ((2, 2), 27)]).unwrap());
        assert!(s(3, 1).multiply(&ChowElement::zero(5)).unwrap().is_zero());
    }

    #[test]
    fn context_and_grading_errors() {
        let other = ChowElement::schubert(1, 0, 4).unwrap();
        assert_eq!(s(1, 0).multiply(&other), Err(Error::ContextMismatch(5, 4)));
        assert_eq!(s(1, 0).add(&s(2, 0)), Err(Error::MixedDegree(1, 2)));
        assert!(ChowElement::from_terms(5, [((1, 0), 1), ((1, 1), 1)]).is_err());
    }

    #[test]
    fn integral_examples() {
        assert_eq!(s(4, 3).multiply(&s(1, 0)).unwrap().integral(), 1);
        assert_eq!(s(4, 2).multiply(&s(1, 1)).unwrap().integral(), 0);
        assert_eq!(ChowElement::one(5).integral(), 0);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(schubert_degree(0, 0, 5), Ok(14));
        assert_eq!(schubert_degree(2, 0, 5), Ok(9));
        assert_eq!(schubert_degree(1, 1, 5), Ok(5));
        assert_eq!(schubert_degree(0, 0, 3), Ok(2));
        assert!(schubert_degree(5, 0, 5).is_err());
        assert_eq!(ChowElement::point(5).plucker_degree(), Ok(1));
    }

    #[test]
    fn plucker_degree_examples() {
        assert_eq!(s(1, 0).scale(6).plucker_degree(), Ok(84));
        let o5 = ChowElement::from_terms(5, [((3, 0), 4), ((2, 1), 8)]).unwrap();
        assert_eq!(o5.plucker_degree(), Ok(56));
        let o8 = ChowElement::from_terms(5, [((4, 1), 6), ((3, 2), 6)]).unwrap();
        assert_eq!(o8.plucker_degree(), Ok(18));
    }

    #[test]
    fn large_ambient_degree_is_catalan() {
        // deg G(1,N) is the Catalan number C_{N-1}
        assert_eq!(schubert_degree(0, 0, 11), Ok(16796));
    }
}
