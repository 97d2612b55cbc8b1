//! Classical invariants of binary quartics.

use super::binary::BinaryForm;
use super::field::FieldElement;
use super::ring::Ring;
use crate::error::{Error, Result};

/// `a0 x^4 + a1 x^3 y + a2 x^2 y^2 + a3 x y^3 + a4 y^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    pub a: [FieldElement; 5],
}

impl BinaryQuartic {
    pub fn new(a: [FieldElement; 5]) -> Self {
        BinaryQuartic { a }
    }

    pub fn from_form(f: &BinaryForm) -> Result<Self> {
        if f.degree() != 4 {
            return Err(Error::WrongDegree { expected: 4, actual: f.degree() });
        }
        Ok(BinaryQuartic { a: std::array::from_fn(|i| f.coeff(i).clone()) })
    }

    pub fn to_form(&self) -> BinaryForm {
        BinaryForm::new(self.a.to_vec()).expect("five coefficients in one field")
    }

    /// `I = 12 a0 a4 - 3 a1 a3 + a2^2`.
    pub fn invariant_i(&self) -> FieldElement {
        let [a0, a1, a2, a3, a4] = &self.a;
        (a0 * a4).scale_int(12) - (a1 * a3).scale_int(3) + a2 * a2
    }

    /// `J = 72 a0 a2 a4 - 27 a0 a3^2 - 27 a1^2 a4 + 9 a1 a2 a3 - 2 a2^3`.
    pub fn invariant_j(&self) -> FieldElement {
        let [a0, a1, a2, a3, a4] = &self.a;
        (&(a0 * a2) * a4).scale_int(72) - (&(a0 * a3) * a3).scale_int(27) - (&(a1 * a1) * a4).scale_int(27)
            + (&(a1 * a2) * a3).scale_int(9)
            - (&(a2 * a2) * a2).scale_int(2)
    }

    /// The catalecticant matrix `[[12a0, 3a1, 2a2], [3a1, 2a2, 3a3], [2a2, 3a3, 12a4]]`.
    pub fn catalecticant(&self) -> [[FieldElement; 3]; 3] {
        let [a0, a1, a2, a3, a4] = &self.a;
        [
            [a0.scale_int(12), a1.scale_int(3), a2.scale_int(2)],
            [a1.scale_int(3), a2.scale_int(2), a3.scale_int(3)],
            [a2.scale_int(2), a3.scale_int(3), a4.scale_int(12)],
        ]
    }

    /// `J` as a quarter of the catalecticant determinant.
    pub fn invariant_j_catalecticant(&self) -> FieldElement {
        let rows: Vec<Vec<FieldElement>> = self.catalecticant().into_iter().map(|r| r.to_vec()).collect();
        let det = FieldElement::determinant(&rows);
        let four = det.field().int(4);
        det.checked_div(&four).expect("characteristic is not 2")
    }
}

pub fn quartic_i(q: &BinaryQuartic) -> FieldElement {
    q.invariant_i()
}

pub fn quartic_j(q: &BinaryQuartic) -> FieldElement {
    q.invariant_j()
}

/// `256 (1 - l + l^2)^3 / (l^2 (1 - l)^2)`.
pub fn j_of_cross_ratio(lambda: &FieldElement) -> Result<FieldElement> {
    let field = lambda.field();
    let one = field.one();
    let one_minus = &one - lambda;
    if lambda.is_zero() || one_minus.is_zero() {
        return Err(Error::DegenerateCrossRatio);
    }
    let num = (&(&one - lambda) + &(lambda * lambda)).pow(3).scale_int(256);
    let den = &(lambda * lambda) * &(&one_minus * &one_minus);
    num.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_forms::field::Field;

    fn quartic(cs: [i64; 5]) -> BinaryQuartic {
        BinaryQuartic::new(cs.map(|c| Field::Rationals.int(c)))
    }

    #[test]
    fn invariants_of_examples() {
        let q = quartic([1, 0, 0, 0, 1]);
        assert_eq!(q.invariant_i(), Field::Rationals.int(12));
        assert!(q.invariant_j().is_zero());
        for cs in [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]] {
            let q = quartic(cs);
            assert!(q.invariant_i().is_zero());
            assert!(q.invariant_j().is_zero());
            assert!(q.invariant_j_catalecticant().is_zero());
        }
    }

    #[test]
    fn catalecticant_route_agrees() {
        let q = quartic([3, -1, 4, 1, -5]);
        assert_eq!(q.invariant_j(), q.invariant_j_catalecticant());
    }

    #[test]
    fn j_invariant_values() {
        let q = |s: &str| Field::Rationals.parse(s).unwrap();
        assert_eq!(j_of_cross_ratio(&q("-1")).unwrap(), q("1728"));
        assert_eq!(j_of_cross_ratio(&q("2")).unwrap(), q("1728"));
        assert_eq!(j_of_cross_ratio(&q("1/2")).unwrap(), q("1728"));
        assert_eq!(j_of_cross_ratio(&q("0")), Err(Error::DegenerateCrossRatio));
        assert_eq!(j_of_cross_ratio(&q("1")), Err(Error::DegenerateCrossRatio));
    }

    #[test]
    fn j_vanishes_at_primitive_sixth_root() {
        // 3 is a primitive sixth root of unity in F_7: 3^2 - 3 + 1 = 7
        let f = Field::prime(7).unwrap();
        assert!(j_of_cross_ratio(&f.int(3)).unwrap().is_zero());
        // and 5 = 3^5 is the other one
        assert!(j_of_cross_ratio(&f.int(5)).unwrap().is_zero());
    }
}
