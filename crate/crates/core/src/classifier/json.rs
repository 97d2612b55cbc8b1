//! JSON wire format for pencils and classification results.
//!
//! Input: `{"Q": [a, b, c, h, e, f], "Qp": [...], "field": {"type": "Q"}}`
//! with entries as rational literals (strings or integers) and the field
//! either `{"type": "Q"}` or `{"type": "Fp", "p": 10007}`.

use serde::{Deserialize, Serialize};

use super::{classify, Certificate, Orbit, Pencil};
use crate::error::{Error, Result};
use crate::exact_forms::{BinaryForm, Field, SymMatrix3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Q
    }
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rationals),
            FieldSpec::Fp { p } => Field::prime(p),
        }
    }

    pub fn from_field(field: Field) -> Self {
        match field {
            Field::Rationals => FieldSpec::Q,
            Field::Prime(m) => FieldSpec::Fp { p: m.get() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Text(String),
    Int(i64),
}

impl Literal {
    fn text(&self) -> String {
        match self {
            Literal::Text(s) => s.clone(),
            Literal::Int(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PencilJson {
    #[serde(rename = "Q")]
    pub q: Vec<Literal>,
    #[serde(rename = "Qp")]
    pub qp: Vec<Literal>,
    #[serde(default)]
    pub field: FieldSpec,
}

impl PencilJson {
    pub fn to_pencil(&self) -> Result<Pencil> {
        let field = self.field.to_field()?;
        let matrix = |entries: &[Literal]| {
            let texts: Vec<String> = entries.iter().map(Literal::text).collect();
            SymMatrix3::parse(field, &texts)
        };
        Pencil::new(matrix(&self.q)?, matrix(&self.qp)?)
    }

    pub fn from_pencil(p: &Pencil) -> Self {
        let entries = |m: &SymMatrix3| m.to_strings().into_iter().map(Literal::Text).collect();
        PencilJson { q: entries(p.q()), qp: entries(p.qp()), field: FieldSpec::from_field(p.field()) }
    }
}

/// Parse a pencil; every failure is reported as [`Error::MalformedPencil`].
pub fn parse_pencil(text: &str) -> Result<Pencil> {
    let raw: PencilJson = serde_json::from_str(text).map_err(|e| Error::MalformedPencil(e.to_string()))?;
    raw.to_pencil().map_err(|e| match e {
        Error::MalformedPencil(_) => e,
        other => Error::MalformedPencil(other.to_string()),
    })
}

pub fn pencil_to_json(p: &Pencil) -> String {
    serde_json::to_string(&PencilJson::from_pencil(p)).expect("plain data serializes")
}

fn form_strings(f: &BinaryForm) -> Vec<String> {
    f.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    /// Coefficients of `s^3, s^2 t, s t^2, t^3`.
    pub det_cubic: Vec<String>,
    /// `[multiplicity, number of roots]` pairs.
    pub pattern: Option<Vec<(u32, usize)>>,
    /// `[s0, t0]`.
    pub multiple_root: Option<[String; 2]>,
    pub rank_at_multiple_root: Option<usize>,
    /// Coefficients from `s^d` down to `t^d`.
    pub rank1_locus: Option<Vec<String>>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            det_cubic: form_strings(&c.det_cubic),
            pattern: c.pattern.as_ref().map(|p| p.0.clone()),
            multiple_root: c.multiple_root.as_ref().map(|(s, t)| [s.to_string(), t.to_string()]),
            rank_at_multiple_root: c.rank_at_multiple_root,
            rank1_locus: c.rank1_locus.as_ref().map(form_strings),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub orbit: String,
    pub name: String,
    pub base_locus: String,
    pub certificate: CertificateJson,
}

impl ClassificationJson {
    pub fn new(orbit: Orbit, cert: &Certificate) -> Self {
        ClassificationJson {
            orbit: orbit.to_string(),
            name: orbit.name().to_string(),
            base_locus: orbit.base_locus_descriptor().to_string(),
            certificate: cert.into(),
        }
    }
}

/// Parse, classify and package a pencil given as JSON text.
pub fn classify_json(text: &str) -> Result<ClassificationJson> {
    let p = parse_pencil(text)?;
    let (orbit, cert) = classify(&p)?;
    Ok(ClassificationJson::new(orbit, &cert))
}
