//! Randomized exact verifications of the enumerative counts, and the
//! reproduction of the table of orbit-closure classes.
//!
//! Every trial draws from its own generator, seeded from the master seed and
//! the trial index, so reports are reproducible trial by trial and do not
//! depend on how the trials are scheduled across threads.

use std::time::Instant;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify, random_pencil_with, random_symmetric, Orbit, SampleMode};
use crate::error::{Error, Result};
use crate::exact_forms::{
    discriminant, hessian, quartic_j, BinaryForm, BinaryQuartic, Field, FieldElement, Modulus, Ring, Sym3,
    SymMatrix3, TernaryForm, DEFAULT_PRIME, disc3,
};

pub mod table;

pub use table::{verify_table, TableReport, TableRow};

/// Coordinates of random integer draws lie in `[-BOX, BOX]`.
pub const BOX: i64 = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub seed: u64,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub check: String,
    pub trials: u64,
    pub successes: u64,
    pub failures: Vec<TrialFailure>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl TrialReport {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            return 0.0;
        }
        self.successes as f64 / self.trials as f64
    }

    /// Combine reports of the same check run on disjoint trials.
    pub fn merge(mut self, other: TrialReport) -> Result<TrialReport> {
        if self.check != other.check {
            return Err(Error::MalformedPencil(format!("cannot merge {} with {}", self.check, other.check)));
        }
        self.trials += other.trials;
        self.successes += other.successes;
        self.failures.extend(other.failures);
        self.elapsed += other.elapsed;
        Ok(self)
    }
}

/// Seed of trial `index` under `master`: the first output of the ChaCha
/// stream numbered `index`.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng.next_u64()
}

/// Run `trial` on `trials` derived seeds in parallel; `Err` marks a failure.
pub fn run_trials<F>(check: &str, trials: u64, seed: u64, trial: F) -> TrialReport
where
    F: Fn(&mut ChaCha8Rng) -> std::result::Result<(), String> + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<(u64, std::result::Result<(), String>)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = trial_seed(seed, i);
            (s, trial(&mut ChaCha8Rng::seed_from_u64(s)))
        })
        .collect();
    let failures: Vec<TrialFailure> = outcomes
        .into_iter()
        .filter_map(|(seed, r)| r.err().map(|reason| TrialFailure { seed, reason }))
        .collect();
    TrialReport {
        check: check.to_string(),
        trials,
        successes: trials - failures.len() as u64,
        failures,
        elapsed: start.elapsed().as_secs_f64(),
    }
}

fn box_matrix(rng: &mut ChaCha8Rng) -> SymMatrix3 {
    random_symmetric(rng, SampleMode::IntegerBox(BOX))
}

/// For the plane spanned by `Q, Q', Q''`, the forms `f_0..f_3` in `(l, m)`
/// with `det(sQ + t(lQ' + mQ'')) = sum_i f_i s^(3-i) t^i`, and the sextic
/// `disc3(f_0, .., f_3)` whose roots are the members of the pencil of lines
/// through `Q` that are tangent to the singular locus.
pub fn tangent_sextic(q: &SymMatrix3, q1: &SymMatrix3, q2: &SymMatrix3) -> BinaryForm {
    let field = q.field();
    let base = q.map(|x| BinaryForm::constant(x.clone()));
    let direction = q1.zip_with(q2, |x, y| BinaryForm::linear(x.clone(), y.clone()));
    let [f0, f1, f2, f3] = base.mixed_det_coefficients(&direction);
    let sextic = disc3(&f0, &f1, &f2, &f3);
    if sextic.is_zero() {
        BinaryForm::zero(field, 6)
    } else {
        sextic
    }
}

fn squarefree_of_degree(f: &BinaryForm, degree: usize, what: &str) -> std::result::Result<(), String> {
    if f.degree() != degree {
        return Err(format!("{what} has degree {} instead of {degree}", f.degree()));
    }
    if f.is_zero() {
        return Err(format!("{what} vanishes identically"));
    }
    match discriminant(f) {
        Ok(d) if d.is_zero() => Err(format!("{what} has a repeated root")),
        Ok(_) => Ok(()),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

/// Six tangent lines from a general point of a general plane.
pub fn verify_tangent_sextic(trials: u64, seed: u64) -> TrialReport {
    run_trials("tangent", trials, seed, |rng| {
        let (q, q1, q2) = (box_matrix(rng), box_matrix(rng), box_matrix(rng));
        squarefree_of_degree(&tangent_sextic(&q, &q1, &q2), 6, "tangent sextic")
    })
}

/// `det(u0 M0 + u1 M1 + u2 M2)`, the restriction of the determinant cubic to a plane.
pub fn plane_cubic(m: [&SymMatrix3; 3]) -> TernaryForm {
    let lin = |pick: fn(&SymMatrix3) -> &FieldElement| {
        TernaryForm::linear(pick(m[0]), pick(m[1]), pick(m[2]))
    };
    let general = Sym3 {
        a: lin(|x| &x.a),
        b: lin(|x| &x.b),
        c: lin(|x| &x.c),
        h: lin(|x| &x.h),
        e: lin(|x| &x.e),
        f: lin(|x| &x.f),
    };
    let det = general.det();
    if det.is_zero() {
        TernaryForm::zero(m[0].field(), 3)
    } else {
        det
    }
}

/// Resultant in `u2` of a plane cubic and its Hessian: a form of degree 9
/// in `(u0, u1)` vanishing at the projections of the flexes.
pub fn flex_eliminant(cubic: &TernaryForm) -> Result<BinaryForm> {
    let h = hessian(cubic)?;
    let h = if h.is_zero() { TernaryForm::zero(cubic.field(), 3) } else { h };
    let r = crate::exact_forms::ring::sylvester_resultant(&cubic.coefficients_in_u2(), &h.coefficients_in_u2());
    Ok(if r.is_zero() { BinaryForm::zero(cubic.field(), 9) } else { r })
}

/// Nine flexes on a general plane section of the determinantal cubic.
pub fn verify_flex_count(trials: u64, seed: u64) -> TrialReport {
    run_trials("flex", trials, seed, |rng| {
        let (m0, m1, m2) = (box_matrix(rng), box_matrix(rng), box_matrix(rng));
        let cubic = plane_cubic([&m0, &m1, &m2]);
        let eliminant = flex_eliminant(&cubic).map_err(|e| e.to_string())?;
        squarefree_of_degree(&eliminant, 9, "flex eliminant")
    })
}

/// Random pencils over `F_p` land in the dense orbit.
pub fn verify_generic_line(trials: u64, seed: u64) -> TrialReport {
    verify_generic_line_mod(trials, seed, Modulus::new(DEFAULT_PRIME).expect("prime"))
}

pub fn verify_generic_line_mod(trials: u64, seed: u64, p: Modulus) -> TrialReport {
    run_trials("generic", trials, seed, |rng| {
        let pencil = random_pencil_with(rng, SampleMode::PrimeField(p)).map_err(|e| format!("error: {e}"))?;
        match classify(&pencil) {
            Ok((Orbit::O1, _)) => Ok(()),
            Ok((o, _)) => Err(format!("classified as {o}")),
            Err(e) => Err(format!("error: {e}")),
        }
    })
}

fn quartic_of(f: &BinaryForm) -> BinaryQuartic {
    BinaryQuartic::from_form(f).expect("quartic")
}

fn nonzero(rng: &mut ChaCha8Rng, field: Field) -> FieldElement {
    loop {
        let x = field.random(rng, BOX);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Two random linear forms spanning the space of linear forms.
fn independent_linear_forms(rng: &mut ChaCha8Rng, field: Field) -> (BinaryForm, BinaryForm) {
    loop {
        let (a, b, c, d) = (field.random(rng, BOX), field.random(rng, BOX), field.random(rng, BOX), field.random(rng, BOX));
        if !(&(&a * &d) - &(&b * &c)).is_zero() {
            return (BinaryForm::linear(a, b), BinaryForm::linear(c, d));
        }
    }
}

/// `L1^4 + lambda L2^4`, a point of the secant variety of the rational normal quartic.
pub fn secant_point(l1: &BinaryForm, l2: &BinaryForm, lambda: &FieldElement) -> BinaryForm {
    let scaled = l2.pow(4).coeffs().iter().map(|c| c * lambda).collect();
    l1.pow(4).plus(&BinaryForm::new(scaled).expect("nonempty"))
}

/// `L1 L2 (L1^2 + c L2^2)`: joined to `L1^4 - c^2 L2^4`, it spans a line in
/// the secant variety that is not itself a secant.
pub fn secant_companion(l1: &BinaryForm, l2: &BinaryForm, c: &FieldElement) -> BinaryForm {
    let l2sq = l2.pow(2);
    let shifted = BinaryForm::new(l2sq.coeffs().iter().map(|x| x * c).collect()).expect("nonempty");
    l1.times(l2).times(&l1.pow(2).plus(&shifted))
}

fn combine(alpha: &FieldElement, f: &BinaryForm, beta: &FieldElement, g: &BinaryForm) -> BinaryForm {
    let a = BinaryForm::new(f.coeffs().iter().map(|x| x * alpha).collect()).expect("nonempty");
    let b = BinaryForm::new(g.coeffs().iter().map(|x| x * beta).collect()).expect("nonempty");
    a.plus(&b)
}

/// `J` vanishes on secant points and on the lines through them described above.
pub fn verify_secant_j(trials: u64, seed: u64) -> TrialReport {
    let q = Field::Rationals;
    run_trials("secantJ", trials, seed, |rng| {
        let (l1, l2) = independent_linear_forms(rng, q);
        let lambda = nonzero(rng, q);
        let point = secant_point(&l1, &l2, &lambda);
        if !quartic_j(&quartic_of(&point)).is_zero() {
            return Err(format!("J({point}) != 0"));
        }
        // lambda = -c^2 makes the companion points rational
        let c = nonzero(rng, q);
        let base = secant_point(&l1, &l2, &-(&c * &c));
        let (alpha, beta) = (q.random(rng, BOX), q.random(rng, BOX));
        for sign in [1, -1] {
            let companion = secant_companion(&l1, &l2, &c.scale_int(sign));
            let f = combine(&alpha, &base, &beta, &companion);
            if !quartic_j(&quartic_of(&f)).is_zero() {
                return Err(format!("J({f}) != 0 on a line through a secant point"));
            }
        }
        // the line through x^4 - y^4 and xy(x^2 + y^2)
        let x = BinaryForm::from_ints(q, &[1, 0]);
        let y = BinaryForm::from_ints(q, &[0, 1]);
        let f = combine(&alpha, &secant_point(&x, &y, &q.int(-1)), &beta, &secant_companion(&x, &y, &q.one()));
        if !quartic_j(&quartic_of(&f)).is_zero() {
            return Err(format!("J({f}) != 0 on the line through x^4 - y^4"));
        }
        Ok(())
    })
}

/// The randomized checks, by CLI name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Tangent,
    Flex,
    Generic,
    SecantJ,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Tangent, Check::Flex, Check::Generic, Check::SecantJ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Tangent => "tangent",
            Check::Flex => "flex",
            Check::Generic => "generic",
            Check::SecantJ => "secantJ",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Minimum success rate for the check to pass.
    pub fn threshold(self) -> f64 {
        match self {
            Check::Tangent => 0.99,
            Check::Flex => 0.95,
            Check::Generic => 0.95,
            Check::SecantJ => 1.0,
        }
    }

    pub fn default_trials(self) -> u64 {
        match self {
            Check::Generic => 1000,
            _ => 200,
        }
    }

    pub fn run(self, trials: u64, seed: u64) -> TrialReport {
        match self {
            Check::Tangent => verify_tangent_sextic(trials, seed),
            Check::Flex => verify_flex_count(trials, seed),
            Check::Generic => verify_generic_line(trials, seed),
            Check::SecantJ => verify_secant_j(trials, seed),
        }
    }

    pub fn passes(self, report: &TrialReport) -> bool {
        report.trials > 0 && report.success_rate() >= self.threshold()
    }
}

/// Draw a uniformly random invertible integer matrix with entries in the box.
pub fn random_invertible(rng: &mut impl Rng, field: Field) -> [[FieldElement; 3]; 3] {
    loop {
        let a: [[FieldElement; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| field.random(rng, 3)));
        let rows: Vec<Vec<FieldElement>> = a.iter().map(|r| r.to_vec()).collect();
        if !crate::exact_forms::ring::field_det(&rows).is_zero() {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_forms::quartic_i;

    const Q: Field = Field::Rationals;

    #[test]
    fn seeds_are_deterministic_and_distinct() {
        assert_eq!(trial_seed(7, 3), trial_seed(7, 3));
        assert_ne!(trial_seed(7, 3), trial_seed(7, 4));
        assert_ne!(trial_seed(7, 3), trial_seed(8, 3));
    }

    #[test]
    fn reports_are_reproducible() {
        let a = verify_tangent_sextic(5, 11);
        let b = verify_tangent_sextic(5, 11);
        assert_eq!(a.failures, b.failures);
        assert_eq!(a.successes + a.failures.len() as u64, a.trials);
    }

    #[test]
    fn merge_adds_up() {
        let a = verify_secant_j(3, 1);
        let b = verify_secant_j(4, 2);
        let m = a.clone().merge(b).unwrap();
        assert_eq!(m.trials, 7);
        assert!(a.merge(verify_generic_line(1, 1)).is_err());
    }

    #[test]
    fn tangent_sextic_is_a_sextic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (q, q1, q2) = (box_matrix(&mut rng), box_matrix(&mut rng), box_matrix(&mut rng));
        let f = tangent_sextic(&q, &q1, &q2);
        assert_eq!(f.degree(), 6);
        assert!(!f.is_zero());
    }

    #[test]
    fn tangent_sextic_degenerates_through_a_double_line() {
        // Q = x^2 lies on the Veronese surface: every line through it meets
        // the cubic with multiplicity at least two there
        let q = SymMatrix3::from_ints(Q, [1, 0, 0, 0, 0, 0]);
        let q1 = SymMatrix3::from_ints(Q, [2, 3, 1, 1, 0, 4]);
        let q2 = SymMatrix3::from_ints(Q, [0, 1, 5, 2, 1, 1]);
        assert!(tangent_sextic(&q, &q1, &q2).is_zero());
    }

    #[test]
    fn seeded_plane_has_nine_flexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (m0, m1, m2) = (box_matrix(&mut rng), box_matrix(&mut rng), box_matrix(&mut rng));
        let cubic = plane_cubic([&m0, &m1, &m2]);
        assert_eq!(cubic.degree(), 3);
        let e = flex_eliminant(&cubic).unwrap();
        assert_eq!(e.degree(), 9);
        assert!(squarefree_of_degree(&e, 9, "eliminant").is_ok());
    }

    #[test]
    fn singular_section_is_rejected() {
        // a plane through x^2 gives a cubic singular there
        let m0 = SymMatrix3::from_ints(Q, [1, 0, 0, 0, 0, 0]);
        let m1 = SymMatrix3::from_ints(Q, [3, -2, 1, 4, 0, 1]);
        let m2 = SymMatrix3::from_ints(Q, [0, 5, 2, -1, 3, 2]);
        let e = flex_eliminant(&plane_cubic([&m0, &m1, &m2])).unwrap();
        assert!(squarefree_of_degree(&e, 9, "eliminant").is_err());
    }

    #[test]
    fn secant_examples() {
        let x = BinaryForm::from_ints(Q, &[1, 0]);
        let y = BinaryForm::from_ints(Q, &[0, 1]);
        let p = secant_point(&x, &y, &Q.int(3));
        assert_eq!(p, BinaryForm::from_ints(Q, &[1, 0, 0, 0, 3]));
        assert!(quartic_j(&quartic_of(&p)).is_zero());
        assert!(!quartic_i(&quartic_of(&secant_point(&x, &y, &Q.one()))).is_zero());
        let generic = BinaryQuartic::new([1, 2, -3, 5, 7].map(|c| Q.int(c)));
        assert!(!quartic_j(&generic).is_zero());
        assert_eq!(secant_companion(&x, &y, &Q.one()), BinaryForm::from_ints(Q, &[0, 1, 0, 1, 0]));
    }

    #[test]
    fn small_runs_succeed() {
        assert_eq!(verify_secant_j(10, 3).successes, 10);
        assert!(verify_generic_line(20, 3).successes >= 15);
        assert!(verify_flex_count(4, 3).successes >= 3);
    }

    #[test]
    fn check_names() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("bogus"), None);
    }
}
