//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use pencil_orbits::schubert::ChowElement;

/// Polynomial in two variables: `(i, j) -> coeff` of `x^i y^j`.
pub type Poly2 = BTreeMap<(u32, u32), i64>;

/// Two-variable Schur polynomial `s_{a,b}(x, y) = (xy)^b h_{a-b}(x, y)`.
pub fn schur(a: u32, b: u32) -> Poly2 {
    (b..=a).map(|i| ((i, a + b - i), 1)).collect()
}

pub fn poly_mul(f: &Poly2, g: &Poly2) -> Poly2 {
    let mut out = Poly2::new();
    for (&(i, j), &c) in f {
        for (&(k, l), &d) in g {
            *out.entry((i + k, j + l)).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Product of Schubert classes computed through symmetric polynomials: expand
/// `s_lambda * s_mu`, multiply by the Vandermonde `x - y`, read off Schur
/// coefficients from the alternant, and drop partitions outside the box.
pub fn schur_product(n: u32, (a, b): (u32, u32), (c, d): (u32, u32)) -> ChowElement {
    let product = poly_mul(&schur(a, b), &schur(c, d));
    let vandermonde: Poly2 = [((1, 0), 1), ((0, 1), -1)].into_iter().collect();
    let alternant = poly_mul(&product, &vandermonde);
    let terms = alternant
        .into_iter()
        .filter(|&((i, j), _)| i > j)
        .map(|((i, j), c)| ((i - 1, j), c))
        .filter(|&((p, _), _)| p < n);
    ChowElement::from_terms(n, terms).expect("homogeneous")
}
