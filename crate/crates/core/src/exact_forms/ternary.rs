//! Ternary forms in (u0, u1, u2), used for plane cubic sections of the
//! determinantal cubic and their Hessians.

use std::collections::BTreeMap;

use super::binary::BinaryForm;
use super::field::{Field, FieldElement};
use super::ring::Ring;
use super::symmetric::Sym3;
use crate::error::{Error, Result};

pub type Exponent = [u32; 3];

/// Sparse homogeneous form; every stored exponent sums to `degree` and no
/// stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    field: Field,
    degree: u32,
    terms: BTreeMap<Exponent, FieldElement>,
}

impl TernaryForm {
    pub fn zero(field: Field, degree: u32) -> Self {
        TernaryForm { field, degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(field: Field, degree: u32, terms: impl IntoIterator<Item = (Exponent, FieldElement)>) -> Result<Self> {
        let mut out = TernaryForm::zero(field, degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::WrongDegree { expected: degree as usize, actual: e.iter().sum::<u32>() as usize });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// The coordinate `u_i`.
    pub fn variable(field: Field, i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        TernaryForm::monomial(field.one(), e)
    }

    /// `a*u0 + b*u1 + c*u2`.
    pub fn linear(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Self {
        let field = a.field();
        let mut out = TernaryForm::zero(field, 1);
        out.add_term([1, 0, 0], a.clone());
        out.add_term([0, 1, 0], b.clone());
        out.add_term([0, 0, 1], c.clone());
        out
    }

    pub fn monomial(c: FieldElement, e: Exponent) -> Self {
        let mut out = TernaryForm::zero(c.field(), e.iter().sum());
        out.add_term(e, c);
        out
    }

    fn add_term(&mut self, e: Exponent, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeff(&self, e: Exponent) -> FieldElement {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &FieldElement)> {
        self.terms.iter()
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = TernaryForm::zero(self.field, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            out.add_term(e2, c.scale_int(e[var] as i64));
        }
        out
    }

    pub fn eval(&self, point: &[FieldElement; 3]) -> FieldElement {
        self.terms.iter().fold(self.field.zero(), |acc, (e, c)| {
            let m = (0..3).fold(c.clone(), |m, i| &m * &point[i].pow(e[i]));
            &acc + &m
        })
    }

    /// Coefficients as a polynomial in `u2`, highest power first: entry `i`
    /// is the binary form in `(u0, u1)` multiplying `u2^(degree - i)`.
    pub fn coefficients_in_u2(&self) -> Vec<BinaryForm> {
        let d = self.degree as usize;
        (0..=d)
            .map(|i| {
                // u2^(d-i) times a form of degree i in (u0, u1): s = u0, t = u1
                let coeffs = (0..=i)
                    .map(|j| self.coeff([(i - j) as u32, j as u32, (d - i) as u32]))
                    .collect();
                BinaryForm::new(coeffs).expect("nonempty")
            })
            .collect()
    }
}

impl Ring for TernaryForm {
    fn zero_like(&self) -> Self {
        TernaryForm::zero(self.field, self.degree)
    }
    fn one_like(&self) -> Self {
        TernaryForm::monomial(self.field.one(), [0, 0, 0])
    }
    fn plus(&self, rhs: &Self) -> Self {
        if rhs.terms.is_empty() {
            return self.clone();
        }
        if self.terms.is_empty() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding ternary forms of different degree");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.scaled(-1))
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = TernaryForm::zero(self.field, self.degree + rhs.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
    fn scaled(&self, k: i64) -> Self {
        let mut out = TernaryForm::zero(self.field, self.degree);
        for (e, c) in &self.terms {
            out.add_term(*e, c.scale_int(k));
        }
        out
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Determinant of the matrix of second partial derivatives of a cubic.
pub fn hessian(cubic: &TernaryForm) -> Result<TernaryForm> {
    if cubic.degree != 3 {
        return Err(Error::WrongDegree { expected: 3, actual: cubic.degree as usize });
    }
    let d: Vec<TernaryForm> = (0..3).map(|i| cubic.partial(i)).collect();
    let second = |i: usize, j: usize| d[i].partial(j);
    let m = Sym3 {
        a: second(0, 0),
        b: second(1, 1),
        c: second(2, 2),
        h: second(0, 1),
        e: second(0, 2),
        f: second(1, 2),
    };
    Ok(m.det())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> FieldElement {
        Field::Rationals.int(n)
    }

    fn cube_sum() -> TernaryForm {
        TernaryForm::from_terms(Field::Rationals, 3, [([3, 0, 0], q(1)), ([0, 3, 0], q(1)), ([0, 0, 3], q(1))]).unwrap()
    }

    #[test]
    fn hessian_of_fermat_cubic() {
        let h = hessian(&cube_sum()).unwrap();
        assert_eq!(h, TernaryForm::monomial(q(216), [1, 1, 1]));
    }

    #[test]
    fn hessian_of_triangle() {
        let h = hessian(&TernaryForm::monomial(q(1), [1, 1, 1])).unwrap();
        assert_eq!(h, TernaryForm::monomial(q(2), [1, 1, 1]));
    }

    #[test]
    fn hessian_keeps_repeated_factor() {
        // L^2 M only involves two linear forms, so its Hessian vanishes
        // identically and is in particular divisible by L.
        let h = hessian(&TernaryForm::monomial(q(1), [2, 1, 0])).unwrap();
        assert!(h.is_zero());
        let g = TernaryForm::monomial(q(1), [2, 1, 0]).plus(&TernaryForm::monomial(q(1), [2, 0, 1]));
        assert!(hessian(&g).unwrap().is_zero());
        // adding u2^3 leaves the cone; the Hessian becomes -24 u0^2 u2
        let k = g.plus(&TernaryForm::monomial(q(1), [0, 0, 3]));
        assert_eq!(hessian(&k).unwrap(), TernaryForm::monomial(q(-24), [2, 0, 1]));
    }

    #[test]
    fn hessian_rejects_wrong_degree() {
        let f = TernaryForm::monomial(q(1), [1, 1, 0]);
        assert_eq!(hessian(&f), Err(Error::WrongDegree { expected: 3, actual: 2 }));
    }

    #[test]
    fn coefficients_in_u2_layout() {
        let f = cube_sum();
        let cs = f.coefficients_in_u2();
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[0], BinaryForm::from_ints(Field::Rationals, &[1]));
        assert!(cs[1].is_zero() && cs[2].is_zero());
        assert_eq!(cs[3], BinaryForm::from_ints(Field::Rationals, &[1, 0, 0, 1]));
    }

    #[test]
    fn from_terms_checks_degree() {
        assert!(TernaryForm::from_terms(Field::Rationals, 3, [([1, 1, 0], q(1))]).is_err());
    }
}
