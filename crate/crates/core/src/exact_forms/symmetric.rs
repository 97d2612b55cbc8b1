//! Symmetric 3x3 matrices in the (a, b, c, h, e, f) layout
//! `[[a, h, e], [h, b, f], [e, f, c]]`, matching the conic
//! `a x^2 + 2h xy + b y^2 + 2e xz + 2f yz + c z^2`.

use super::field::{Field, FieldElement};
use super::ring::{field_rank, Ring};
use crate::error::{Error, Result};

/// Six stored entries over any commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sym3<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub h: R,
    pub e: R,
    pub f: R,
}

pub type SymMatrix3 = Sym3<FieldElement>;

impl<R: Ring> Sym3<R> {
    /// `abc + 2hef - af^2 - be^2 - ch^2`.
    pub fn det(&self) -> R {
        let Sym3 { a, b, c, h, e, f } = self;
        a.times(b).times(c)
            .plus(&h.times(e).times(f).scaled(2))
            .minus(&a.times(f).times(f))
            .minus(&b.times(e).times(e))
            .minus(&c.times(h).times(h))
    }

    /// The adjugate, which is symmetric again. Its six entries are the six
    /// distinct 2x2 minors up to sign.
    pub fn adjugate(&self) -> Sym3<R> {
        let Sym3 { a, b, c, h, e, f } = self;
        Sym3 {
            a: b.times(c).minus(&f.times(f)),
            b: a.times(c).minus(&e.times(e)),
            c: a.times(b).minus(&h.times(h)),
            h: e.times(f).minus(&c.times(h)),
            e: h.times(f).minus(&b.times(e)),
            f: h.times(e).minus(&a.times(f)),
        }
    }

    pub fn entries(&self) -> [&R; 6] {
        [&self.a, &self.b, &self.c, &self.h, &self.e, &self.f]
    }

    pub fn map<S>(&self, g: impl Fn(&R) -> S) -> Sym3<S> {
        Sym3 { a: g(&self.a), b: g(&self.b), c: g(&self.c), h: g(&self.h), e: g(&self.e), f: g(&self.f) }
    }

    pub fn zip_with<S, T>(&self, other: &Sym3<S>, g: impl Fn(&R, &S) -> T) -> Sym3<T> {
        Sym3 {
            a: g(&self.a, &other.a),
            b: g(&self.b, &other.b),
            c: g(&self.c, &other.c),
            h: g(&self.h, &other.h),
            e: g(&self.e, &other.e),
            f: g(&self.f, &other.f),
        }
    }

    /// `tr(self * other)` for symmetric matrices.
    pub fn trace_product(&self, other: &Sym3<R>) -> R {
        self.a.times(&other.a)
            .plus(&self.b.times(&other.b))
            .plus(&self.c.times(&other.c))
            .plus(&self.h.times(&other.h).scaled(2))
            .plus(&self.e.times(&other.e).scaled(2))
            .plus(&self.f.times(&other.f).scaled(2))
    }

    /// Coefficients `[det A, tr(adj(A) B), tr(A adj(B)), det B]` of
    /// `det(sA + tB) = sum_i k_i s^(3-i) t^i`.
    pub fn mixed_det_coefficients(&self, other: &Sym3<R>) -> [R; 4] {
        [
            self.det(),
            self.adjugate().trace_product(other),
            self.trace_product(&other.adjugate()),
            other.det(),
        ]
    }
}

impl SymMatrix3 {
    pub fn from_ints(field: Field, [a, b, c, h, e, f]: [i64; 6]) -> Self {
        Sym3 { a: field.int(a), b: field.int(b), c: field.int(c), h: field.int(h), e: field.int(e), f: field.int(f) }
    }

    /// Matrix of the conic `xx x^2 + yy y^2 + zz z^2 + xy xy + xz xz + yz yz`,
    /// halving the off-diagonal coefficients.
    pub fn from_conic(field: Field, [xx, yy, zz, xy, xz, yz]: [i64; 6]) -> Self {
        let half = field.one().checked_div(&field.int(2)).expect("characteristic is not 2");
        Sym3 {
            a: field.int(xx),
            b: field.int(yy),
            c: field.int(zz),
            h: &field.int(xy) * &half,
            e: &field.int(xz) * &half,
            f: &field.int(yz) * &half,
        }
    }

    /// Parse six literals in the order `[a, b, c, h, e, f]`.
    pub fn parse(field: Field, literals: &[impl AsRef<str>]) -> Result<Self> {
        if literals.len() != 6 {
            return Err(Error::MalformedPencil(format!("expected 6 matrix entries, got {}", literals.len())));
        }
        let v: Vec<FieldElement> = literals.iter().map(|s| field.parse(s.as_ref())).collect::<Result<_>>()?;
        Ok(Sym3 { a: v[0].clone(), b: v[1].clone(), c: v[2].clone(), h: v[3].clone(), e: v[4].clone(), f: v[5].clone() })
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn rows(&self) -> [[FieldElement; 3]; 3] {
        let Sym3 { a, b, c, h, e, f } = self.clone();
        [[a, h.clone(), e.clone()], [h, b, f.clone()], [e, f, c]]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<FieldElement>> = self.rows().into_iter().map(|r| r.to_vec()).collect();
        field_rank(&rows)
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        self.map(|x| x * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    /// `A^T M A` for a 3x3 matrix `A`.
    pub fn congruence(&self, a: &[[FieldElement; 3]; 3]) -> Self {
        let m = self.rows();
        let entry = |i: usize, j: usize| {
            let mut acc = self.field().zero();
            for k in 0..3 {
                for l in 0..3 {
                    acc = &acc + &(&(&a[k][i] * &m[k][l]) * &a[l][j]);
                }
            }
            acc
        };
        Sym3 { a: entry(0, 0), b: entry(1, 1), c: entry(2, 2), h: entry(0, 1), e: entry(0, 2), f: entry(1, 2) }
    }

    /// True when the two matrices span at most a line (including either being zero).
    pub fn is_proportional(&self, other: &Self) -> bool {
        let rows = vec![
            self.entries().iter().map(|x| (*x).clone()).collect::<Vec<_>>(),
            other.entries().iter().map(|x| (*x).clone()).collect::<Vec<_>>(),
        ];
        field_rank(&rows) < 2
    }

    pub fn to_strings(&self) -> [String; 6] {
        self.entries().map(|x| x.to_string())
    }
}

/// `det3` on a field-valued matrix.
pub fn det3(m: &SymMatrix3) -> FieldElement {
    m.det()
}

/// `rank3` on a field-valued matrix.
pub fn rank3(m: &SymMatrix3) -> usize {
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_forms::binary::BinaryForm;

    const Q: Field = Field::Rationals;

    #[test]
    fn det_examples() {
        assert_eq!(det3(&SymMatrix3::from_ints(Q, [1, 1, 1, 0, 0, 0])), Q.int(1));
        assert_eq!(det3(&SymMatrix3::from_ints(Q, [1, 1, 0, 0, 0, 0])), Q.int(0));
    }

    #[test]
    fn det_of_pencil_is_minus_s_t_squared() {
        // x^2 + y^2 and 2xz
        let q = SymMatrix3::from_ints(Q, [1, 1, 0, 0, 0, 0]).map(|x| BinaryForm::linear(x.clone(), Q.zero()));
        let qp = SymMatrix3::from_ints(Q, [0, 0, 0, 0, 1, 0]).map(|x| BinaryForm::linear(Q.zero(), x.clone()));
        let m = q.zip_with(&qp, |x, y| x.plus(y));
        assert_eq!(m.det(), BinaryForm::from_ints(Q, &[0, 0, -1, 0]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank3(&SymMatrix3::from_ints(Q, [0; 6])), 0);
        assert_eq!(rank3(&SymMatrix3::from_ints(Q, [1, 0, 0, 0, 0, 0])), 1);
        assert_eq!(rank3(&SymMatrix3::from_ints(Q, [1, 1, 0, 0, 0, 0])), 2);
        assert_eq!(rank3(&SymMatrix3::from_ints(Q, [2, 3, 5, 1, 0, 1])), 3);
    }

    #[test]
    fn conic_convention_halves_cross_terms() {
        let m = SymMatrix3::from_conic(Q, [1, 0, 0, 0, 1, 0]);
        assert_eq!(m.to_strings(), ["1", "0", "0", "0", "1/2", "0"].map(String::from));
    }

    #[test]
    fn parse_checks_length() {
        assert!(SymMatrix3::parse(Q, &["1", "2"]).is_err());
        assert!(SymMatrix3::parse(Q, &["1", "0", "0", "0", "1/2", "0"]).is_ok());
    }

    #[test]
    fn proportionality() {
        let x2 = SymMatrix3::from_ints(Q, [1, 0, 0, 0, 0, 0]);
        assert!(x2.is_proportional(&x2.scale(&Q.int(2))));
        assert!(x2.is_proportional(&SymMatrix3::from_ints(Q, [0; 6])));
        assert!(!x2.is_proportional(&SymMatrix3::from_ints(Q, [0, 1, 0, 0, 0, 0])));
    }
}
