use pencil_orbits::exact_forms::{
    binary_gcd, disc3, discriminant, j_of_cross_ratio, rank3, resultant, squarefree_decomposition, squarefree_pattern,
    BinaryForm, BinaryQuartic, Field, FieldElement, Ring, SymMatrix3,
};
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn form(cs: &[i64]) -> BinaryForm {
    BinaryForm::from_ints(Q, cs)
}

/// Products of linear factors drawn from a small pool, so repeated roots
/// (including the root at infinity) are common.
fn factored_form() -> impl Strategy<Value = BinaryForm> {
    let pool = [[1, 0], [0, 1], [1, 1], [1, -2], [2, 3], [3, -1]];
    (prop::collection::vec(0usize..pool.len(), 1..=6), -3i64..=3)
        .prop_filter("nonzero scale", |(_, k)| *k != 0)
        .prop_map(move |(idx, k)| {
            idx.iter().fold(form(&[k]), |acc, &i| acc.times(&form(&pool[i])))
        })
}

fn dense_form() -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-5i64..=5, 2..=7)
        .prop_filter("nonzero", |cs| cs.iter().any(|&c| c != 0))
        .prop_map(|cs| form(&cs))
}

fn any_form() -> impl Strategy<Value = BinaryForm> {
    prop_oneof![factored_form(), dense_form()]
}

fn sym() -> impl Strategy<Value = SymMatrix3> {
    prop::array::uniform6(-4i64..=4).prop_map(|e| SymMatrix3::from_ints(Q, e))
}

/// Independent evaluation of `det` by the Leibniz formula on full rows.
fn leibniz(m: &SymMatrix3) -> FieldElement {
    let r = m.rows();
    let perms = [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 0, 2], -1)];
    perms.iter().fold(Q.zero(), |acc, (p, sign)| {
        let term = &(&r[0][p[0]] * &r[1][p[1]]) * &r[2][p[2]];
        &acc + &term.scale_int(*sign)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pattern_degrees_sum_to_form_degree(f in any_form()) {
        prop_assert_eq!(squarefree_pattern(&f).unwrap().total_degree(), f.degree());
    }

    #[test]
    fn discriminant_vanishes_iff_partials_share_a_root(f in any_form()) {
        let g = binary_gcd(&f.partial_s(), &f.partial_t());
        let repeated = match g {
            Ok(g) => g.degree() >= 1,
            // both partials vanish only for constants, excluded here
            Err(_) => unreachable!(),
        };
        prop_assert_eq!(discriminant(&f).unwrap().is_zero(), repeated);
        prop_assert_eq!(repeated, !squarefree_pattern(&f).unwrap().is_squarefree());
    }

    #[test]
    fn squarefree_factors_multiply_back(f in factored_form()) {
        let parts = squarefree_decomposition(&f).unwrap();
        let product = parts.iter().fold(form(&[1]), |acc, (m, q)| acc.times(&q.pow(*m)));
        // equal up to the leading scalar
        prop_assert_eq!(product.primitive(), f.primitive());
    }

    #[test]
    fn discriminant_matches_resultant_with_s_derivative(f in dense_form()) {
        prop_assume!(f.degree() >= 2 && !f.coeff(0).is_zero());
        let d = f.degree();
        let sign = if (d * (d - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let via_res = &resultant(&f, &f.partial_s()).unwrap().scale_int(sign) / f.coeff(0);
        prop_assert_eq!(discriminant(&f).unwrap(), via_res);
    }

    #[test]
    fn resultant_detects_common_factor(f in factored_form(), g in factored_form(), l in prop::array::uniform2(-3i64..=3)) {
        prop_assume!(l != [0, 0]);
        let l = form(&l);
        prop_assert!(resultant(&f.times(&l), &g.times(&l)).unwrap().is_zero());
        let shares = binary_gcd(&f, &g).unwrap().degree() >= 1;
        prop_assert_eq!(resultant(&f, &g).unwrap().is_zero(), shares);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn disc3_is_the_cubic_discriminant(cs in prop::array::uniform4(-9i64..=9)) {
        prop_assume!(cs.iter().any(|&c| c != 0));
        let f = form(&cs);
        let [c0, c1, c2, c3] = cs.map(|c| Q.int(c));
        prop_assert_eq!(disc3(&c0, &c1, &c2, &c3), discriminant(&f).unwrap());
    }

    #[test]
    fn j_equals_quarter_catalecticant(cs in prop::array::uniform5(-9i64..=9)) {
        let q = BinaryQuartic::new(cs.map(|c| Q.int(c)));
        prop_assert_eq!(q.invariant_j(), q.invariant_j_catalecticant());
    }

    #[test]
    fn j_is_invariant_under_the_anharmonic_group(num in -50i64..=50, den in 1i64..=50) {
        let l = &Q.int(num) / &Q.int(den);
        prop_assume!(!l.is_zero() && !(&l - &Q.one()).is_zero());
        let j = j_of_cross_ratio(&l).unwrap();
        prop_assert_eq!(j_of_cross_ratio(&l.inv().unwrap()).unwrap(), j.clone());
        prop_assert_eq!(j_of_cross_ratio(&(&Q.one() - &l)).unwrap(), j);
    }

    #[test]
    fn det_of_pencil_is_a_cubic(m in sym(), mp in sym(), s in -5i64..=5, t in -5i64..=5) {
        let pencil = m.map(|x| BinaryForm::linear(x.clone(), Q.zero()))
            .zip_with(&mp.map(|x| BinaryForm::linear(Q.zero(), x.clone())), |a, b| a.plus(b));
        let cubic = pencil.det();
        prop_assert!(cubic.is_zero() || cubic.degree() == 3);
        // closed form and evaluation agree at a point
        let [k0, k1, k2, k3] = m.mixed_det_coefficients(&mp);
        let closed = BinaryForm::new(vec![k0, k1, k2, k3]).unwrap();
        let (s, t) = (Q.int(s), Q.int(t));
        let member = m.scale(&s).add(&mp.scale(&t));
        prop_assert_eq!(closed.eval(&s, &t), leibniz(&member));
        if !cubic.is_zero() {
            prop_assert_eq!(closed, cubic);
        }
    }

    #[test]
    fn rank_matches_det_and_minors(m in sym()) {
        prop_assert_eq!(rank3(&m) == 3, !leibniz(&m).is_zero());
        let minors_vanish = m.adjugate().entries().iter().all(|x| x.is_zero());
        prop_assert_eq!(rank3(&m) <= 1, minors_vanish);
    }
}

#[test]
fn rank_one_matrices_from_squares() {
    // (x + 2y - z)^2 has rank one
    let m = SymMatrix3::from_conic(Q, [1, 4, 1, 4, -2, -4]);
    assert_eq!(rank3(&m), 1);
    assert!(m.adjugate().entries().iter().all(|x| x.is_zero()));
}

#[test]
fn prime_field_discriminant() {
    let f = Field::prime(10007).unwrap();
    // (s - t)^2 (s + t) has a double root
    let g = BinaryForm::from_ints(f, &[1, -1, -1, 1]);
    assert!(discriminant(&g).unwrap().is_zero());
    let h = BinaryForm::from_ints(f, &[1, 0, -1, 0]);
    assert!(!discriminant(&h).unwrap().is_zero());
}
