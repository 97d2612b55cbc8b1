//! Dense univariate polynomials over a field, used for dehomogenised forms.

use super::field::{Field, FieldElement};

/// Coefficients in ascending order of degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(i as i64))
            .collect();
        UniPoly::new(self.field, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) - rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        UniPoly::new(self.field, coeffs)
    }

    #[cfg(test)]
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::new(self.field, Vec::new());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dlead = divisor.lead().expect("division by the zero polynomial");
        let inv = dlead.inv().expect("nonzero leading coefficient");
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (UniPoly::new(self.field, Vec::new()), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition of a nonzero polynomial: pairs
    /// (multiplicity, monic square-free factor), valid when the
    /// characteristic exceeds the degree.
    pub fn yun(&self) -> Vec<(u32, UniPoly)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut i = 1u32;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = c.sub(&b.derivative());
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a));
            }
            i += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> UniPoly {
        let f = Field::Rationals;
        UniPoly::new(f, cs.iter().map(|&c| f.int(c)).collect())
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = poly(&[-1, 0, 0, 1]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn yun_on_repeated_factors() {
        // (x-1)^2 (x+2)^3
        let x1 = poly(&[-1, 1]);
        let x2 = poly(&[2, 1]);
        let f = x1.mul(&x1).mul(&x2).mul(&x2).mul(&x2);
        let parts = f.yun();
        assert_eq!(parts, vec![(2, x1), (3, x2)]);
    }

    #[test]
    fn gcd_is_monic() {
        let a = poly(&[2, 2]);
        let b = poly(&[-3, 0, 3]);
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
    }
}
