//! The JSON manifest format (schema version "1").
//!
//! Rationals are strings (`"3"`, `"-1/2"`). Matrices are either a list of
//! rows or a sparse record `{rows, cols, entries: [[row, col, value], …]}`.
//! Objects may be named entries or written inline wherever a reference is
//! expected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    #[serde(flatten)]
    pub body: Body,
    /// Axioms this entry is known to violate; used by `corpus-verify`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expect_failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Object(ObjectSpec),
    YbOperator(OperatorSpec),
    LieAlgebra(LieSpec),
    Coalgebra(CoalgebraSpec),
    AssocAlgebra(AssocSpec),
    Bialgebra(BialgebraSpec),
    Functor(FunctorSpec),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Object(_) => "object",
            Body::YbOperator(_) => "yb_operator",
            Body::LieAlgebra(_) => "lie_algebra",
            Body::Coalgebra(_) => "coalgebra",
            Body::AssocAlgebra(_) => "assoc_algebra",
            Body::Bialgebra(_) => "bialgebra",
            Body::Functor(_) => "functor",
        }
    }
}

/// A graded space, optionally with a Hom twist `mu`. A plain space may give
/// only `dim`; graded spaces list one group element per basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObjectSpec {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub group: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<MatrixSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectRef {
    Name(String),
    Inline(ObjectSpec),
}

/// A bicharacter as its full value table over the group elements in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicharacterSpec {
    pub group: Vec<u32>,
    pub chi: Vec<Vec<i8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ContextSpec {
    Strict,
    Graded(BicharacterSpec),
    HomDeformed {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        base: Option<BicharacterSpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Dense(Vec<Vec<String>>),
    Sparse(SparseMatrix),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub object: ObjectRef,
    pub context: ContextSpec,
    pub lambda: MatrixSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieSpec {
    pub operator: String,
    pub bracket: MatrixSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoalgebraSpec {
    pub operator: String,
    pub cobracket: MatrixSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocSpec {
    pub operator: String,
    pub mul: MatrixSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraSpec {
    pub algebra: String,
    pub comul: MatrixSpec,
    pub counit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorSpec {
    /// The lie_algebra entry the images were taken from, for reference.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub target_context: ContextSpec,
    pub fl: ObjectRef,
    pub f_ll: ObjectRef,
    pub f_lll: ObjectRef,
    pub f_bracket: MatrixSpec,
    pub f_lambda: MatrixSpec,
    pub psi_ll: MatrixSpec,
    pub psi_ll_l: MatrixSpec,
    pub psi_l_ll: MatrixSpec,
    pub f_t: MatrixSpec,
    pub f_w: MatrixSpec,
    /// Defaults to the identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_assoc: Option<MatrixSpec>,
}

impl Manifest {
    pub fn new(entries: Vec<Entry>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            entries,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let m: Manifest = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if m.schema_version != SCHEMA_VERSION {
            return Err(CliError::Invalid(format!(
                "unsupported schema_version {:?}, expected {SCHEMA_VERSION:?}",
                m.schema_version
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for e in &m.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(CliError::Invalid(format!("duplicate entry name {:?}", e.name)));
            }
        }
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The byte-stable serialization.
    pub fn to_json(&self) -> String {
        crate::render::to_text(&serde_json::to_value(self).expect("manifest serializes"))
    }

    pub fn get(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }
}
