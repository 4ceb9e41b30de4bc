//! `check`, `construct` and `corpus-verify`.

use std::collections::BTreeSet;

use serde::Serialize;
use yblie_core::constructions::{check_hom_jacobi, hom_deform};
use yblie_core::transport::{make_forgetful_functor, make_hom_iso_functor};
use yblie_core::{CheckLine, Error, RatMatrix, Report, Status};

use crate::convert::{self, Resolver};
use crate::manifest::{Body, Entry, Manifest, ObjectRef};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub axiom: String,
    pub required: bool,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column_basis: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&CheckLine> for CheckJson {
    fn from(l: &CheckLine) -> Self {
        Self {
            axiom: l.axiom.clone(),
            required: l.required,
            status: match l.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Skipped => "skipped",
            },
            witness: l.witness.as_ref().map(|w| WitnessJson {
                row: w.row,
                col: w.col,
                lhs: yblie_core::rational::format(&w.lhs),
                rhs: yblie_core::rational::format(&w.rhs),
            }),
            column_basis: l.column_basis.clone(),
            note: l.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub entry: String,
    pub kind: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
    pub checks: Vec<CheckJson>,
}

impl EntryReport {
    pub fn new(entry: &str, kind: &'static str, report: &Report) -> Self {
        Self {
            entry: entry.to_string(),
            kind,
            passed: report.passed(),
            failures: report.failures().into_iter().map(str::to_string).collect(),
            checks: report.lines.iter().map(CheckJson::from).collect(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// The battery for one entry, chosen by its kind.
pub fn battery(manifest: &Manifest, name: &str) -> Result<(Report, &'static str), CliError> {
    let r = Resolver::new(manifest);
    let entry = r.entry(name)?;
    let report = match &entry.body {
        Body::Object(spec) => {
            convert::object(spec)?;
            let mut rep = Report::default();
            rep.push(CheckLine::from_verdict("well_formed", true, yblie_core::Verdict::Pass));
            rep
        }
        Body::YbOperator(spec) => r.build_operator(spec)?.battery(),
        Body::LieAlgebra(spec) => lie_report(&r.build_lie(spec)?),
        Body::Coalgebra(spec) => r.build_coalgebra(spec)?.check_coalgebra(),
        Body::AssocAlgebra(spec) => r.build_assoc(spec)?.battery(),
        Body::Bialgebra(spec) => r.build_bialgebra(spec)?.battery(),
        Body::Functor(spec) => r.build_functor(spec)?.battery(),
    };
    Ok((report, entry.body.kind()))
}

/// `full_battery`, plus the Hom-Jacobi identity as a diagnostic on Hom objects.
pub fn lie_report(alg: &yblie_core::YBLieAlgebra) -> Report {
    let mut r = alg.full_battery();
    if let Ok(v) = check_hom_jacobi(alg) {
        let d = alg.dim();
        r.push(CheckLine::from_verdict("hom_jacobi", false, v).with_columns(d, 3));
    }
    r
}

pub fn check(manifest: &Manifest, name: &str) -> Result<EntryReport, CliError> {
    let (report, kind) = battery(manifest, name)?;
    Ok(EntryReport::new(name, kind, &report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Commutator,
    HomDeform,
    Primitives,
    Dualize,
    Transport,
    HomIsoFunctor,
    ForgetfulFunctor,
}

impl Construction {
    pub const ALL: [Construction; 7] = [
        Construction::Commutator,
        Construction::HomDeform,
        Construction::Primitives,
        Construction::Dualize,
        Construction::Transport,
        Construction::HomIsoFunctor,
        Construction::ForgetfulFunctor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Construction::Commutator => "commutator",
            Construction::HomDeform => "hom-deform",
            Construction::Primitives => "primitives",
            Construction::Dualize => "dualize",
            Construction::Transport => "transport",
            Construction::HomIsoFunctor => "hom-iso-functor",
            Construction::ForgetfulFunctor => "forgetful-functor",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug)]
pub enum ConstructError {
    /// Bad input: exit 2.
    Input(CliError),
    /// A construction precondition failed: exit 1.
    Precondition { reason: &'static str, message: String },
}

impl From<CliError> for ConstructError {
    fn from(e: CliError) -> Self {
        match e {
            CliError::Core(err) => precondition(err),
            other => ConstructError::Input(other),
        }
    }
}

fn precondition(e: Error) -> ConstructError {
    let reason = match &e {
        Error::SingularAlpha => "SingularAlpha",
        Error::NotLieMorphism(_) => "NotLieMorphism",
        Error::NotSymmetricInput => "NotSymmetricInput",
        Error::CompatFailed(_) => "CompatFailed",
        Error::MissingUnit => "MissingUnit",
        Error::NotClosedUnderBracket => "NotClosedUnderBracket",
        Error::LambdaDoesNotRestrict => "LambdaDoesNotRestrict",
        Error::NotHomogeneous(_) => "NotHomogeneous",
        Error::NotMonoidal(_) => "NotMonoidal",
        Error::UnsupportedContext(_) => "UnsupportedContext",
        Error::Linalg(yblie_core::LinalgError::NotMono { .. }) => "NotMono",
        Error::Linalg(yblie_core::LinalgError::Inconsistent { .. }) => "Inconsistent",
        _ => return ConstructError::Input(CliError::Core(e)),
    };
    ConstructError::Precondition {
        reason,
        message: e.to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct Constructed {
    /// The new entries together with anything they reference.
    pub manifest: Manifest,
    pub entry: String,
    pub report: EntryReport,
    /// Coordinates of the primitive basis, for `primitives`.
    pub basis: Option<Vec<Vec<String>>>,
}

/// Entries `name` depends on, in manifest order, followed by `name` itself.
fn closure(manifest: &Manifest, name: &str) -> Result<Vec<Entry>, CliError> {
    let mut wanted = BTreeSet::new();
    let mut stack = vec![name.to_string()];
    let r = Resolver::new(manifest);
    while let Some(n) = stack.pop() {
        if !wanted.insert(n.clone()) {
            continue;
        }
        let obj = |o: &ObjectRef| match o {
            ObjectRef::Name(s) => Some(s.clone()),
            ObjectRef::Inline(_) => None,
        };
        let deps: Vec<String> = match &r.entry(&n)?.body {
            Body::Object(_) => vec![],
            Body::YbOperator(s) => obj(&s.object).into_iter().collect(),
            Body::LieAlgebra(s) => vec![s.operator.clone()],
            Body::Coalgebra(s) => vec![s.operator.clone()],
            Body::AssocAlgebra(s) => vec![s.operator.clone()],
            Body::Bialgebra(s) => vec![s.algebra.clone()],
            Body::Functor(s) => s
                .source
                .iter()
                .cloned()
                .chain(obj(&s.fl))
                .chain(obj(&s.f_ll))
                .chain(obj(&s.f_lll))
                .collect(),
        };
        stack.extend(deps);
    }
    Ok(manifest
        .entries
        .iter()
        .filter(|e| wanted.contains(&e.name))
        .cloned()
        .collect())
}

/// Runs a construction on the entry `from`. The result is named `name`
/// (default `<from>.<construction>`).
pub fn construct(
    manifest: &Manifest,
    kind: Construction,
    from: &str,
    alpha: Option<&RatMatrix>,
    name: Option<&str>,
) -> Result<Constructed, ConstructError> {
    let r = Resolver::new(manifest);
    let default_name = format!("{from}.{}", kind.name());
    let name = name.unwrap_or(&default_name);
    let need_alpha = || {
        alpha.ok_or_else(|| {
            ConstructError::Input(CliError::Invalid(format!("{} needs --alpha", kind.name())))
        })
    };
    let mut basis = None;
    let entries = match kind {
        Construction::Commutator => {
            let alg = r.assoc(from)?.commutator().map_err(precondition)?;
            convert::lie_entries(name, &alg)
        }
        Construction::HomDeform => {
            let alg = hom_deform(&r.lie(from)?, need_alpha()?).map_err(precondition)?;
            convert::lie_entries(name, &alg)
        }
        Construction::Primitives => {
            let (vs, alg) = r.bialgebra(from)?.primitives().map_err(precondition)?;
            basis = Some(vs.iter().map(|v| convert::vector_spec(v)).collect());
            convert::lie_entries(name, &alg)
        }
        Construction::Dualize => match &r.entry(from)?.body {
            Body::LieAlgebra(_) => {
                convert::coalgebra_entries(name, &r.lie(from)?.dualize().map_err(precondition)?)
            }
            Body::Coalgebra(_) => {
                convert::lie_entries(name, &r.coalgebra(from)?.dualize().map_err(precondition)?)
            }
            other => {
                return Err(ConstructError::Input(CliError::Reference(format!(
                    "dualize needs a lie_algebra or coalgebra, {from:?} is a {}",
                    other.kind()
                ))))
            }
        },
        Construction::Transport => {
            let alg = r.functor(from)?.transport().map_err(precondition)?;
            convert::lie_entries(name, &alg)
        }
        Construction::HomIsoFunctor => {
            let f = make_hom_iso_functor(&r.lie(from)?, need_alpha()?).map_err(precondition)?;
            let mut out = closure(manifest, from)?;
            out.push(convert::functor_entry(name, &f, Some(from)));
            out
        }
        Construction::ForgetfulFunctor => {
            let f = make_forgetful_functor(&r.lie(from)?).map_err(precondition)?;
            let mut out = closure(manifest, from)?;
            out.push(convert::functor_entry(name, &f, Some(from)));
            out
        }
    };
    let manifest = Manifest::new(entries);
    let report = check(&manifest, name)?;
    Ok(Constructed {
        manifest,
        entry: name.to_string(),
        report,
        basis,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifiedEntry {
    pub entry: String,
    pub kind: &'static str,
    pub failures: Vec<String>,
    pub expected: Vec<String>,
    /// Failures match the expectation and every failure carries a witness.
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifiedFile {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub entries: Vec<VerifiedEntry>,
}

impl VerifiedFile {
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.entries.iter().all(|e| e.ok)
    }
}

pub fn verify_text(file: &str, text: &str) -> VerifiedFile {
    let manifest = match Manifest::parse(text) {
        Ok(m) => m,
        Err(e) => {
            return VerifiedFile {
                file: file.to_string(),
                error: Some(e.to_string()),
                entries: vec![],
            }
        }
    };
    let mut entries = Vec::new();
    for e in &manifest.entries {
        let mut expected = e.expect_failures.clone();
        expected.sort();
        let (failures, witnessed, kind) = match battery(&manifest, &e.name) {
            Ok((report, kind)) => {
                let witnessed = report
                    .lines
                    .iter()
                    .filter(|l| l.required && l.status == Status::Fail)
                    .all(|l| l.witness.is_some());
                let mut f: Vec<String> = report.failures().into_iter().map(str::to_string).collect();
                f.sort();
                (f, witnessed, kind)
            }
            Err(err) => {
                return VerifiedFile {
                    file: file.to_string(),
                    error: Some(format!("{}: {err}", e.name)),
                    entries,
                }
            }
        };
        entries.push(VerifiedEntry {
            entry: e.name.clone(),
            kind,
            ok: witnessed && failures == expected,
            failures,
            expected,
        });
    }
    VerifiedFile {
        file: file.to_string(),
        error: None,
        entries,
    }
}
