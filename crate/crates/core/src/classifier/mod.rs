//! Classification of pencils of plane conics into the eight PGL(3) orbits.
//!
//! A pencil is first located relative to the cubic fourfold of singular
//! conics through `det(sQ + tQ')`; when every member is singular it is
//! located relative to the Veronese surface of double lines through the gcd
//! of the 2x2 minors.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_forms::{
    binary_gcd_all, discriminant, squarefree_decomposition, BinaryForm, Field, FieldElement, Modulus,
    SquarefreePattern, Sym3, SymMatrix3,
};

pub mod json;

/// The eight orbits, in order of increasing codimension in G(1,5).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orbit {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
    O8,
}

impl Orbit {
    pub const ALL: [Orbit; 8] = [
        Orbit::O1,
        Orbit::O2,
        Orbit::O3,
        Orbit::O4,
        Orbit::O5,
        Orbit::O6,
        Orbit::O7,
        Orbit::O8,
    ];

    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_index(i: u8) -> Option<Orbit> {
        Orbit::ALL.get((i as usize).checked_sub(1)?).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Orbit::O1 => "general",
            Orbit::O2 => "simply tangent",
            Orbit::O3 => "bitangent",
            Orbit::O4 => "osculating",
            Orbit::O5 => "superosculating",
            Orbit::O6 => "double-line-pair",
            Orbit::O7 => "line-plus-point",
            Orbit::O8 => "line-plus-embedded-point",
        }
    }

    /// Codimension of the orbit closure in G(1,5).
    pub fn codim(self) -> u32 {
        match self {
            Orbit::O1 => 0,
            Orbit::O2 => 1,
            Orbit::O3 | Orbit::O4 => 2,
            Orbit::O5 => 3,
            Orbit::O6 | Orbit::O7 => 4,
            Orbit::O8 => 5,
        }
    }

    /// Type of the base locus of a member pencil.
    pub fn base_locus_descriptor(self) -> &'static str {
        match self {
            Orbit::O1 => "(1,1,1,1)",
            Orbit::O2 => "(2,1,1)",
            Orbit::O3 => "(2,2)",
            Orbit::O4 => "(3,1)",
            Orbit::O5 => "(4)",
            Orbit::O6 => "{*}",
            Orbit::O7 => "L∪{*}: *∉L",
            Orbit::O8 => "L∪{*}: *∈L",
        }
    }

    /// Generators of the standard representative, as conic coefficients
    /// `[x^2, y^2, z^2, xy, xz, yz]`.
    fn representative_conics(self) -> ([i64; 6], [i64; 6]) {
        const X2: [i64; 6] = [1, 0, 0, 0, 0, 0];
        const Y2: [i64; 6] = [0, 1, 0, 0, 0, 0];
        const XY: [i64; 6] = [0, 0, 0, 1, 0, 0];
        const XZ: [i64; 6] = [0, 0, 0, 0, 1, 0];
        const YZ: [i64; 6] = [0, 0, 0, 0, 0, 1];
        match self {
            Orbit::O1 => ([1, 1, 0, 0, 0, 0], [1, 0, 1, 0, 0, 0]),
            Orbit::O2 => ([1, 1, 0, 0, 0, 0], XZ),
            Orbit::O3 => (X2, YZ),
            Orbit::O4 => ([1, 0, 0, 0, 0, 1], XZ),
            Orbit::O5 => (X2, [0, 1, 0, 0, 1, 0]),
            Orbit::O6 => (X2, Y2),
            Orbit::O7 => (XY, XZ),
            Orbit::O8 => (X2, XY),
        }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.index())
    }
}

impl FromStr for Orbit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.strip_prefix('O')
            .and_then(|i| i.parse::<u8>().ok())
            .and_then(Orbit::from_index)
            .ok_or_else(|| Error::MalformedPencil(format!("unknown orbit label {s:?}")))
    }
}

/// An ordered spanning pair of a two-dimensional space of conics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    q: SymMatrix3,
    qp: SymMatrix3,
}

impl Pencil {
    pub fn new(q: SymMatrix3, qp: SymMatrix3) -> Result<Self> {
        if q.field() != qp.field() {
            return Err(Error::FieldMismatch);
        }
        if q.is_proportional(&qp) {
            return Err(Error::NotAPencil);
        }
        Ok(Pencil { q, qp })
    }

    pub fn q(&self) -> &SymMatrix3 {
        &self.q
    }

    pub fn qp(&self) -> &SymMatrix3 {
        &self.qp
    }

    pub fn field(&self) -> Field {
        self.q.field()
    }

    /// `s Q + t Q'` at a point.
    pub fn member(&self, s: &FieldElement, t: &FieldElement) -> SymMatrix3 {
        self.q.scale(s).add(&self.qp.scale(t))
    }

    /// `s Q + t Q'` as a matrix of linear binary forms.
    pub fn generic_member(&self) -> Sym3<BinaryForm> {
        self.q.zip_with(&self.qp, |x, y| BinaryForm::linear(x.clone(), y.clone()))
    }

    /// The spanning pair `(aQ + bQ', cQ + dQ')`.
    pub fn change_basis(&self, a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> Result<Self> {
        Pencil::new(self.member(a, b), self.member(c, d))
    }

    /// The pencil `(A^T Q A, A^T Q' A)`.
    pub fn congruence(&self, a: &[[FieldElement; 3]; 3]) -> Result<Self> {
        Pencil::new(self.q.congruence(a), self.qp.congruence(a))
    }
}

pub fn make_pencil(q: SymMatrix3, qp: SymMatrix3) -> Result<Pencil> {
    Pencil::new(q, qp)
}

/// `det(sQ + tQ')`, a cubic form that may vanish identically.
pub fn det_form(p: &Pencil) -> BinaryForm {
    let [k0, k1, k2, k3] = p.q.mixed_det_coefficients(&p.qp);
    BinaryForm::new(vec![k0, k1, k2, k3]).expect("four coefficients in one field")
}

/// The intermediate data behind a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub det_cubic: BinaryForm,
    /// Root multiplicities of `det_cubic` when it is nonzero.
    pub pattern: Option<SquarefreePattern>,
    pub multiple_root: Option<(FieldElement, FieldElement)>,
    pub rank_at_multiple_root: Option<usize>,
    /// gcd of the 2x2 minors when every member is singular.
    pub rank1_locus: Option<BinaryForm>,
}

fn violated(msg: impl Into<String>) -> Error {
    Error::ClassificationViolated(msg.into())
}

/// The root of the unique factor of multiplicity `m`, which must be linear.
fn root_of_multiplicity(parts: &[(u32, BinaryForm)], m: u32) -> Result<(FieldElement, FieldElement)> {
    let (_, factor) = parts
        .iter()
        .find(|(k, _)| *k == m)
        .ok_or_else(|| violated(format!("no factor of multiplicity {m}")))?;
    if factor.degree() != 1 {
        return Err(violated(format!("multiplicity-{m} factor {factor} is not linear")));
    }
    factor.linear_root()
}

pub fn classify(p: &Pencil) -> Result<(Orbit, Certificate)> {
    let f = det_form(p);
    if !f.is_zero() {
        classify_transverse(p, f)
    } else {
        classify_singular(p, f)
    }
}

/// The determinant cubic is nonzero: decide by its root multiplicities and
/// the rank of the member at the multiple root.
fn classify_transverse(p: &Pencil, f: BinaryForm) -> Result<(Orbit, Certificate)> {
    let parts = squarefree_decomposition(&f)?;
    let pattern = SquarefreePattern(parts.iter().map(|(m, q)| (*m, q.degree())).collect());
    let mut cert = Certificate {
        det_cubic: f,
        pattern: Some(pattern.clone()),
        multiple_root: None,
        rank_at_multiple_root: None,
        rank1_locus: None,
    };
    let orbit = match pattern.0.as_slice() {
        [(1, 3)] => Orbit::O1,
        [(1, 1), (2, 1)] => {
            let (s0, t0) = root_of_multiplicity(&parts, 2)?;
            let rank = p.member(&s0, &t0).rank();
            let (s1, t1) = root_of_multiplicity(&parts, 1)?;
            let simple_rank = p.member(&s1, &t1).rank();
            if simple_rank != 2 {
                return Err(violated(format!("member at the simple root has rank {simple_rank}")));
            }
            cert.multiple_root = Some((s0, t0));
            cert.rank_at_multiple_root = Some(rank);
            match rank {
                2 => Orbit::O2,
                1 => Orbit::O3,
                r => return Err(violated(format!("member at the double root has rank {r}"))),
            }
        }
        [(3, 1)] => {
            let (s0, t0) = root_of_multiplicity(&parts, 3)?;
            let rank = p.member(&s0, &t0).rank();
            cert.multiple_root = Some((s0, t0));
            cert.rank_at_multiple_root = Some(rank);
            match rank {
                2 => Orbit::O4,
                1 => Orbit::O5,
                r => return Err(violated(format!("member at the triple root has rank {r}"))),
            }
        }
        other => return Err(violated(format!("unexpected root pattern {other:?} for a cubic"))),
    };
    Ok((orbit, cert))
}

/// Every member is singular: decide by the rank-one locus, the common zeros
/// of the 2x2 minors.
fn classify_singular(p: &Pencil, f: BinaryForm) -> Result<(Orbit, Certificate)> {
    let minors = p.generic_member().adjugate();
    let g = binary_gcd_all(minors.entries()).map_err(|_| violated("every member has rank at most one"))?;
    let mut cert = Certificate {
        det_cubic: f,
        pattern: None,
        multiple_root: None,
        rank_at_multiple_root: None,
        rank1_locus: Some(g.clone()),
    };
    let orbit = match g.degree() {
        0 => Orbit::O7,
        2 if !discriminant(&g)?.is_zero() => Orbit::O6,
        2 => {
            let parts = squarefree_decomposition(&g)?;
            let (s0, t0) = root_of_multiplicity(&parts, 2)?;
            let rank = p.member(&s0, &t0).rank();
            if rank != 1 {
                return Err(violated(format!("member at the double rank-one point has rank {rank}")));
            }
            cert.multiple_root = Some((s0, t0));
            cert.rank_at_multiple_root = Some(rank);
            Orbit::O8
        }
        d => return Err(violated(format!("rank-one locus {g} has degree {d}"))),
    };
    Ok((orbit, cert))
}

/// The standard representative pencil of an orbit, with off-diagonal
/// entries halved so that `xz` has matrix entry `1/2`.
pub fn canonical_representative(o: Orbit) -> Pencil {
    canonical_representative_in(o, Field::Rationals)
}

pub fn canonical_representative_in(o: Orbit, field: Field) -> Pencil {
    let (a, b) = o.representative_conics();
    Pencil::new(SymMatrix3::from_conic(field, a), SymMatrix3::from_conic(field, b)).expect("representatives span pencils")
}

pub fn base_locus_descriptor(o: Orbit) -> &'static str {
    o.base_locus_descriptor()
}

/// `<x^2, y^2 + t xz>`: in O5 for `t != 0`, in O6 at `t = 0`.
pub fn degeneration_o5_o6(t: &FieldElement) -> Pencil {
    let field = t.field();
    let a = SymMatrix3::from_conic(field, [1, 0, 0, 0, 0, 0]);
    let b = SymMatrix3::from_conic(field, [0, 1, 0, 0, 0, 0]).add(&SymMatrix3::from_conic(field, [0, 0, 0, 0, 1, 0]).scale(t));
    Pencil::new(a, b).expect("x^2 and y^2 + t xz are independent")
}

/// `<xz, yz + t x^2>`: in O4 for `t != 0`, in O7 at `t = 0`.
pub fn degeneration_o4_o7(t: &FieldElement) -> Pencil {
    let field = t.field();
    let a = SymMatrix3::from_conic(field, [0, 0, 0, 0, 1, 0]);
    let b = SymMatrix3::from_conic(field, [0, 0, 0, 0, 0, 1]).add(&SymMatrix3::from_conic(field, [1, 0, 0, 0, 0, 0]).scale(t));
    Pencil::new(a, b).expect("xz and yz + t x^2 are independent")
}

/// Where random matrix entries come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SampleMode {
    /// Integers in `[-B, B]`, over Q.
    IntegerBox(i64),
    /// Uniform residues mod p.
    PrimeField(Modulus),
}

impl SampleMode {
    pub fn field(self) -> Field {
        match self {
            SampleMode::IntegerBox(_) => Field::Rationals,
            SampleMode::PrimeField(m) => Field::Prime(m),
        }
    }

    fn bound(self) -> i64 {
        match self {
            SampleMode::IntegerBox(b) => b,
            SampleMode::PrimeField(_) => 0,
        }
    }
}

pub const MAX_DRAWS: u32 = 100;

pub fn random_symmetric<R: rand::Rng + ?Sized>(rng: &mut R, mode: SampleMode) -> SymMatrix3 {
    let (field, bound) = (mode.field(), mode.bound());
    let mut next = || field.random(rng, bound);
    Sym3 { a: next(), b: next(), c: next(), h: next(), e: next(), f: next() }
}

/// Two random symmetric matrices, redrawn until they span a pencil.
pub fn random_pencil_with<R: rand::Rng + ?Sized>(rng: &mut R, mode: SampleMode) -> Result<Pencil> {
    for _ in 0..MAX_DRAWS {
        let q = random_symmetric(rng, mode);
        let qp = random_symmetric(rng, mode);
        if let Ok(p) = Pencil::new(q, qp) {
            return Ok(p);
        }
    }
    Err(Error::SamplingExhausted(MAX_DRAWS))
}

pub fn random_pencil(seed: u64, mode: SampleMode) -> Result<Pencil> {
    if let SampleMode::IntegerBox(b) = mode {
        if b < 1 {
            return Err(Error::SamplingExhausted(0));
        }
    }
    random_pencil_with(&mut ChaCha8Rng::seed_from_u64(seed), mode)
}
