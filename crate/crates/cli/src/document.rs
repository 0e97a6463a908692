//! The JSON job document and its resolution into library objects.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use symvar_core::catalog::fixture;
use symvar_core::fan::CochamberFan;
use symvar_core::involution::{InvolutionDatum, OmegaHSpec, RestrictedRootSystem, SphericalLatticeFamily};
use symvar_core::linalg::Matrix;
use symvar_core::rootcore::{CartanDatum, RootSystem, Weight};
use symvar_core::sections::SPicClass;
use symvar_core::{Error, Int};

use crate::CliError;

pub const SCHEMA: &str = "1";

/// An integer that may arrive as a JSON number or, for big values, a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.trim().parse().map(JsonInt).map_err(|_| E::custom(format!("{v:?} is not an integer")))
            }
        }
        d.deserialize_any(V)
    }
}

pub type JsonWeight = Vec<JsonInt>;

fn to_ints(v: &[JsonInt]) -> Vec<Int> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn to_json(v: &[Int]) -> JsonWeight {
    v.iter().cloned().map(JsonInt).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanDoc {
    Type(String),
    Matrix(Vec<Vec<JsonInt>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum InvolutionDoc {
    Satake { delta0: Vec<usize>, diagram_perm: Vec<usize> },
    /// Rows of σ acting on fundamental-weight coordinates.
    Matrix { sigma: Vec<Vec<JsonInt>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OmegaHDoc {
    Named(String),
    Basis(Vec<JsonWeight>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    pub rays: Vec<Vec<JsonInt>>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ClassDoc {
    Constant(JsonWeight),
    PerCone(Vec<JsonWeight>),
    Boundary(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<JsonWeight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<CartanDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<InvolutionDoc>,
    #[serde(rename = "omega_H", default, skip_serializing_if = "Option::is_none")]
    pub omega_h: Option<OmegaHDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fan: Option<FanDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub classes: BTreeMap<String, ClassDoc>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub params: Params,
}

fn is_default(p: &Params) -> bool {
    *p == Params::default()
}

impl SpecDocument {
    /// A document naming only a catalog fixture.
    pub fn for_fixture(name: &str) -> Self {
        SpecDocument {
            schema: SCHEMA.into(),
            fixture: Some(name.into()),
            cartan: None,
            involution: None,
            omega_h: None,
            fan: None,
            classes: BTreeMap::new(),
            params: Params::default(),
        }
    }
}

/// Parses and structurally validates a document.
pub fn parse_spec(text: &str) -> Result<SpecDocument, CliError> {
    let doc: SpecDocument = serde_json::from_str(text)
        .map_err(|e| CliError::Spec(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    if doc.schema != SCHEMA {
        return Err(CliError::Spec(format!("unsupported schema {:?}, expected {SCHEMA:?}", doc.schema)));
    }
    match (&doc.fixture, &doc.cartan, &doc.involution) {
        (Some(f), None, None) => {
            if fixture(f).is_none() {
                return Err(CliError::Spec(format!("unknown fixture {f:?}")));
            }
        }
        (None, Some(_), Some(_)) => {}
        (Some(_), _, _) => return Err(CliError::Spec("give either a fixture or cartan + involution, not both".into())),
        _ => return Err(CliError::Spec("cartan and involution are required without a fixture".into())),
    }
    if let Some(c) = &doc.params.class {
        if !doc.classes.contains_key(c) {
            return Err(CliError::Spec(format!("params.class names unknown class {c:?}")));
        }
    }
    Ok(doc)
}

/// Canonical serialization of a document.
pub fn emit_spec(doc: &SpecDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn core(context: &'static str) -> impl Fn(Error) -> CliError {
    move |e| CliError::Core { context: context.into(), error: e }
}

/// A resolved document: the lattice family, the fan and the parameters.
pub struct Job {
    pub doc: SpecDocument,
    pub family: Arc<SphericalLatticeFamily>,
    pub fan: Arc<CochamberFan>,
}

fn involution_of(doc: &SpecDocument) -> Result<InvolutionDatum, CliError> {
    if let Some(name) = &doc.fixture {
        let f = fixture(name).ok_or_else(|| CliError::Spec(format!("unknown fixture {name:?}")))?;
        return f.involution().map_err(core("involution"));
    }
    let rs = match doc.cartan.as_ref().expect("validated") {
        CartanDoc::Type(t) => RootSystem::from_type(t).map_err(|e| core("cartan")(e.into()))?,
        CartanDoc::Matrix(rows) => {
            if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
                return Err(CliError::Spec("cartan matrix must be square and nonempty".into()));
            }
            let m = Matrix::from_rows(rows.iter().map(|r| to_ints(r)).collect());
            RootSystem::new(CartanDatum::new(m).map_err(|e| core("cartan")(e.into()))?)
        }
    };
    let n = rs.rank();
    let inv = match doc.involution.as_ref().expect("validated") {
        InvolutionDoc::Satake { delta0, diagram_perm } => InvolutionDatum::from_satake(rs, delta0, diagram_perm),
        InvolutionDoc::Matrix { sigma } => {
            if sigma.len() != n || sigma.iter().any(|r| r.len() != n) {
                return Err(CliError::Spec(format!("sigma must be a {n}×{n} matrix")));
            }
            InvolutionDatum::from_matrix(rs, Matrix::from_rows(sigma.iter().map(|r| to_ints(r)).collect()))
        }
    };
    inv.map_err(|e| core("involution")(e.into()))
}

fn omega_h_of(doc: &SpecDocument) -> Result<OmegaHSpec, CliError> {
    Ok(match &doc.omega_h {
        None => OmegaHSpec::Omega,
        Some(OmegaHDoc::Named(n)) if n == "omega" => OmegaHSpec::Omega,
        Some(OmegaHDoc::Named(n)) if n == "omega_ad" => OmegaHSpec::OmegaAd,
        Some(OmegaHDoc::Named(n)) => {
            return Err(CliError::Spec(format!("omega_H must be \"omega\", \"omega_ad\" or basis rows, not {n:?}")))
        }
        Some(OmegaHDoc::Basis(rows)) => {
            let width = rows.first().map_or(0, Vec::len);
            if rows.is_empty() || rows.iter().any(|r| r.len() != width) {
                return Err(CliError::Spec("omega_H basis rows must be nonempty and of equal length".into()));
            }
            OmegaHSpec::Basis(Matrix::from_rows(rows.iter().map(|r| to_ints(r)).collect()))
        }
    })
}

pub fn resolve(doc: SpecDocument) -> Result<Job, CliError> {
    let inv = involution_of(&doc)?;
    let rr = RestrictedRootSystem::new(inv).map_err(|e| core("restricted roots")(e.into()))?;
    let family = Arc::new(SphericalLatticeFamily::new(rr, omega_h_of(&doc)?).map_err(|e| core("lattices")(e.into()))?);
    let fan = match &doc.fan {
        None => CochamberFan::wonderful(family.clone()),
        Some(f) => CochamberFan::new(
            family.clone(),
            f.rays.iter().map(|r| to_ints(r)).collect(),
            f.cones.clone(),
        )
        .map_err(|e| core("fan")(e.into()))?,
    };
    Ok(Job {
        doc,
        family,
        fan: Arc::new(fan),
    })
}

impl Job {
    /// The least positive multiple of `ρ̃` lying in `Ω_H`.
    pub fn default_weight(&self) -> Weight {
        let rho = self.family.restricted().rho();
        let mut k = Int::from(1);
        loop {
            let w: Weight = rho.iter().map(|x| x * &k).collect();
            if self.family.omega_h().contains(&w) {
                return w;
            }
            k += 1;
        }
    }

    pub fn weight(&self) -> Result<Weight, CliError> {
        let n = self.family.restricted().involution().rank();
        match &self.doc.params.weight {
            None => Ok(self.default_weight()),
            Some(w) if w.len() == n => Ok(to_ints(w)),
            Some(w) => Err(CliError::Spec(format!("params.weight has length {}, expected {n}", w.len()))),
        }
    }

    pub fn class_name(&self) -> Option<&str> {
        match &self.doc.params.class {
            Some(c) => Some(c),
            None if self.doc.classes.len() == 1 => self.doc.classes.keys().next().map(String::as_str),
            None => None,
        }
    }

    /// The selected class, or the constant class of [`Job::default_weight`].
    pub fn class(&self) -> Result<SPicClass, CliError> {
        let err = |e: symvar_core::error::SectionError| core("class")(e.into());
        let n = self.family.restricted().involution().rank();
        let check = |w: &JsonWeight| {
            if w.len() == n {
                Ok(to_ints(w))
            } else {
                Err(CliError::Spec(format!("class weight has length {}, expected {n}", w.len())))
            }
        };
        let Some(name) = self.class_name() else {
            return SPicClass::constant(self.fan.clone(), self.default_weight()).map_err(err);
        };
        match &self.doc.classes[name] {
            ClassDoc::Constant(w) => SPicClass::constant(self.fan.clone(), check(w)?).map_err(err),
            ClassDoc::PerCone(ws) => {
                let vals = ws.iter().map(check).collect::<Result<Vec<_>, _>>()?;
                SPicClass::per_cone(self.fan.clone(), vals).map_err(err)
            }
            ClassDoc::Boundary(r) => SPicClass::boundary(self.fan.clone(), *r).map_err(err),
        }
    }
}

/// Converts a weight for inclusion in a document.
pub fn weight_doc(v: &[Int]) -> JsonWeight {
    to_json(v)
}
