//! Conversion between manifest records and core structures.

use yblie_core::rational::{self, Rational};
use yblie_core::transport::FunctorData;
use yblie_core::{
    AssocAlgebra, BialgebraData, Bicharacter, CategoryObject, FiniteAbelianGroup, GradedObject,
    HomObject, LieCoalgebra, MonoidalContext, RatMatrix, YBLieAlgebra, YBOperator,
};

use crate::manifest::{
    AssocSpec, BialgebraSpec, BicharacterSpec, Body, CoalgebraSpec, ContextSpec, Entry, FunctorSpec,
    LieSpec, Manifest, MatrixSpec, ObjectRef, ObjectSpec, OperatorSpec, SparseMatrix,
};
use crate::CliError;

fn rat(s: &str) -> Result<Rational, CliError> {
    rational::parse(s).map_err(|e| CliError::Invalid(format!("bad rational {s:?}: {e}")))
}

pub fn vector(v: &[String]) -> Result<Vec<Rational>, CliError> {
    v.iter().map(|s| rat(s)).collect()
}

pub fn matrix(m: &MatrixSpec) -> Result<RatMatrix, CliError> {
    match m {
        MatrixSpec::Dense(rows) => {
            let rows = rows.iter().map(|r| vector(r)).collect::<Result<Vec<_>, _>>()?;
            RatMatrix::from_rows(rows).map_err(|e| CliError::Invalid(e.to_string()))
        }
        MatrixSpec::Sparse(s) => {
            let mut out = RatMatrix::zeros(s.rows, s.cols);
            for (r, c, v) in &s.entries {
                if *r >= s.rows || *c >= s.cols {
                    return Err(CliError::Invalid(format!(
                        "sparse entry ({r}, {c}) outside {}x{}",
                        s.rows, s.cols
                    )));
                }
                out.set(*r, *c, rat(v)?);
            }
            Ok(out)
        }
    }
}

pub fn vector_spec(v: &[Rational]) -> Vec<String> {
    v.iter().map(rational::format).collect()
}

/// Dense rows unless most entries are zero or a dimension is zero.
pub fn matrix_spec(m: &RatMatrix) -> MatrixSpec {
    let (rows, cols) = m.shape();
    let nonzero = m.entries().iter().filter(|x| !is_zero(x)).count();
    if rows == 0 || cols == 0 || nonzero * 3 < rows * cols {
        let mut entries = Vec::with_capacity(nonzero);
        for r in 0..rows {
            for c in 0..cols {
                let x = m.get(r, c);
                if !is_zero(x) {
                    entries.push((r, c, rational::format(x)));
                }
            }
        }
        MatrixSpec::Sparse(SparseMatrix { rows, cols, entries })
    } else {
        MatrixSpec::Dense(m.to_rows().iter().map(|r| vector_spec(r)).collect())
    }
}

fn is_zero(x: &Rational) -> bool {
    *x == rational::zero()
}

fn group(orders: &[u32]) -> Result<FiniteAbelianGroup, CliError> {
    Ok(FiniteAbelianGroup::new(orders.to_vec())?)
}

pub fn object(spec: &ObjectSpec) -> Result<CategoryObject, CliError> {
    let g = group(&spec.group)?;
    let graded = match (&spec.degrees, spec.dim) {
        (Some(ds), dim) => {
            if dim.is_some_and(|d| d != ds.len()) {
                return Err(CliError::Invalid(format!(
                    "dim {} disagrees with {} degrees",
                    dim.unwrap_or(0),
                    ds.len()
                )));
            }
            GradedObject::new(g, ds.clone())?
        }
        (None, Some(d)) => GradedObject::new(g.clone(), vec![g.zero(); d])?,
        (None, None) => return Err(CliError::Invalid("object needs dim or degrees".into())),
    };
    Ok(match &spec.mu {
        Some(mu) => HomObject::new(graded, matrix(mu)?)?.into(),
        None => graded.into(),
    })
}

pub fn object_spec(obj: &CategoryObject) -> ObjectSpec {
    let g = obj.graded();
    let trivial = g.group().order() == 1;
    ObjectSpec {
        group: g.group().factor_orders().to_vec(),
        dim: trivial.then_some(g.dim()),
        degrees: (!trivial).then(|| g.degrees().to_vec()),
        mu: obj.mu().map(matrix_spec),
    }
}

fn bicharacter(spec: &BicharacterSpec) -> Result<Bicharacter, CliError> {
    Ok(Bicharacter::from_table(group(&spec.group)?, spec.chi.clone())?)
}

fn bicharacter_spec(chi: &Bicharacter) -> BicharacterSpec {
    BicharacterSpec {
        group: chi.group().factor_orders().to_vec(),
        chi: chi.table(),
    }
}

pub fn context(spec: &ContextSpec) -> Result<MonoidalContext, CliError> {
    Ok(match spec {
        ContextSpec::Strict => MonoidalContext::Strict,
        ContextSpec::Graded(b) => MonoidalContext::Graded(bicharacter(b)?),
        ContextSpec::HomDeformed { base } => {
            MonoidalContext::HomDeformed(base.as_ref().map(bicharacter).transpose()?)
        }
    })
}

pub fn context_spec(ctx: &MonoidalContext) -> ContextSpec {
    match ctx {
        MonoidalContext::Strict => ContextSpec::Strict,
        MonoidalContext::Graded(chi) => ContextSpec::Graded(bicharacter_spec(chi)),
        MonoidalContext::HomDeformed(base) => ContextSpec::HomDeformed {
            base: base.as_ref().map(bicharacter_spec),
        },
    }
}

/// Resolves names against one manifest.
pub struct Resolver<'a> {
    manifest: &'a Manifest,
}

impl<'a> Resolver<'a> {
    pub fn new(manifest: &'a Manifest) -> Self {
        Self { manifest }
    }

    pub fn entry(&self, name: &str) -> Result<&'a Entry, CliError> {
        self.manifest
            .get(name)
            .ok_or_else(|| CliError::Reference(format!("no entry named {name:?}")))
    }

    fn expect_kind(&self, name: &str, kind: &str) -> Result<&'a Body, CliError> {
        let e = self.entry(name)?;
        if e.body.kind() != kind {
            return Err(CliError::Reference(format!(
                "entry {name:?} is a {}, expected {kind}",
                e.body.kind()
            )));
        }
        Ok(&e.body)
    }

    pub fn object(&self, r: &ObjectRef) -> Result<CategoryObject, CliError> {
        match r {
            ObjectRef::Inline(spec) => object(spec),
            ObjectRef::Name(name) => match self.expect_kind(name, "object")? {
                Body::Object(spec) => object(spec),
                _ => unreachable!(),
            },
        }
    }

    pub fn build_operator(&self, spec: &OperatorSpec) -> Result<YBOperator, CliError> {
        Ok(YBOperator::new(
            self.object(&spec.object)?,
            matrix(&spec.lambda)?,
            context(&spec.context)?,
        )?)
    }

    pub fn operator(&self, name: &str) -> Result<YBOperator, CliError> {
        match self.expect_kind(name, "yb_operator")? {
            Body::YbOperator(spec) => self.build_operator(spec),
            _ => unreachable!(),
        }
    }

    pub fn build_lie(&self, spec: &LieSpec) -> Result<YBLieAlgebra, CliError> {
        Ok(YBLieAlgebra::new(self.operator(&spec.operator)?, matrix(&spec.bracket)?)?)
    }

    pub fn lie(&self, name: &str) -> Result<YBLieAlgebra, CliError> {
        match self.expect_kind(name, "lie_algebra")? {
            Body::LieAlgebra(spec) => self.build_lie(spec),
            _ => unreachable!(),
        }
    }

    pub fn build_coalgebra(&self, spec: &CoalgebraSpec) -> Result<LieCoalgebra, CliError> {
        Ok(LieCoalgebra::new(self.operator(&spec.operator)?, matrix(&spec.cobracket)?)?)
    }

    pub fn coalgebra(&self, name: &str) -> Result<LieCoalgebra, CliError> {
        match self.expect_kind(name, "coalgebra")? {
            Body::Coalgebra(spec) => self.build_coalgebra(spec),
            _ => unreachable!(),
        }
    }

    pub fn build_assoc(&self, spec: &AssocSpec) -> Result<AssocAlgebra, CliError> {
        let unit = spec.unit.as_deref().map(vector).transpose()?;
        Ok(AssocAlgebra::new(self.operator(&spec.operator)?, matrix(&spec.mul)?, unit)?)
    }

    pub fn assoc(&self, name: &str) -> Result<AssocAlgebra, CliError> {
        match self.expect_kind(name, "assoc_algebra")? {
            Body::AssocAlgebra(spec) => self.build_assoc(spec),
            _ => unreachable!(),
        }
    }

    pub fn build_bialgebra(&self, spec: &BialgebraSpec) -> Result<BialgebraData, CliError> {
        Ok(BialgebraData::new(
            self.assoc(&spec.algebra)?,
            matrix(&spec.comul)?,
            vector(&spec.counit)?,
        )?)
    }

    pub fn bialgebra(&self, name: &str) -> Result<BialgebraData, CliError> {
        match self.expect_kind(name, "bialgebra")? {
            Body::Bialgebra(spec) => self.build_bialgebra(spec),
            _ => unreachable!(),
        }
    }

    pub fn build_functor(&self, spec: &FunctorSpec) -> Result<FunctorData, CliError> {
        if let Some(src) = &spec.source {
            self.expect_kind(src, "lie_algebra")?;
        }
        let graded = |r: &ObjectRef| -> Result<GradedObject, CliError> {
            Ok(self.object(r)?.graded().clone())
        };
        let f_lll = graded(&spec.f_lll)?;
        let f = FunctorData {
            target_ctx: context(&spec.target_context)?,
            fl: self.object(&spec.fl)?,
            f_ll: graded(&spec.f_ll)?,
            f_bracket: matrix(&spec.f_bracket)?,
            f_lambda: matrix(&spec.f_lambda)?,
            psi_ll: matrix(&spec.psi_ll)?,
            psi_ll_l: matrix(&spec.psi_ll_l)?,
            psi_l_ll: matrix(&spec.psi_l_ll)?,
            f_t: matrix(&spec.f_t)?,
            f_w: matrix(&spec.f_w)?,
            f_assoc: match &spec.f_assoc {
                Some(m) => matrix(m)?,
                None => RatMatrix::identity(f_lll.dim()),
            },
            f_lll,
        };
        f.check_shapes()?;
        Ok(f)
    }

    pub fn functor(&self, name: &str) -> Result<FunctorData, CliError> {
        match self.expect_kind(name, "functor")? {
            Body::Functor(spec) => self.build_functor(spec),
            _ => unreachable!(),
        }
    }
}

fn entry(name: impl Into<String>, body: Body) -> Entry {
    Entry {
        name: name.into(),
        body,
        expect_failures: Vec::new(),
    }
}

pub fn operator_entry(name: &str, op: &YBOperator) -> Entry {
    entry(
        name,
        Body::YbOperator(OperatorSpec {
            object: ObjectRef::Inline(object_spec(op.object())),
            context: context_spec(op.ctx()),
            lambda: matrix_spec(op.lambda()),
        }),
    )
}

/// `name.operator` followed by `name`.
pub fn lie_entries(name: &str, alg: &YBLieAlgebra) -> Vec<Entry> {
    let op = format!("{name}.operator");
    vec![
        operator_entry(&op, alg.op()),
        entry(
            name,
            Body::LieAlgebra(LieSpec {
                operator: op,
                bracket: matrix_spec(alg.bracket()),
            }),
        ),
    ]
}

pub fn coalgebra_entries(name: &str, c: &LieCoalgebra) -> Vec<Entry> {
    let op = format!("{name}.operator");
    vec![
        operator_entry(&op, c.op()),
        entry(
            name,
            Body::Coalgebra(CoalgebraSpec {
                operator: op,
                cobracket: matrix_spec(c.cobracket()),
            }),
        ),
    ]
}

pub fn assoc_entries(name: &str, a: &AssocAlgebra) -> Vec<Entry> {
    let op = format!("{name}.operator");
    vec![
        operator_entry(&op, a.op()),
        entry(
            name,
            Body::AssocAlgebra(AssocSpec {
                operator: op,
                mul: matrix_spec(a.mul()),
                unit: a.unit().map(vector_spec),
            }),
        ),
    ]
}

/// `name.algebra.operator`, `name.algebra`, `name`.
pub fn bialgebra_entries(name: &str, b: &BialgebraData) -> Vec<Entry> {
    let alg = format!("{name}.algebra");
    let mut out = assoc_entries(&alg, b.algebra());
    out.push(entry(
        name,
        Body::Bialgebra(BialgebraSpec {
            algebra: alg,
            comul: matrix_spec(b.comul()),
            counit: vector_spec(b.counit()),
        }),
    ));
    out
}

pub fn functor_entry(name: &str, f: &FunctorData, source: Option<&str>) -> Entry {
    let inline = |g: &GradedObject| ObjectRef::Inline(object_spec(&g.clone().into()));
    entry(
        name,
        Body::Functor(FunctorSpec {
            source: source.map(str::to_string),
            target_context: context_spec(&f.target_ctx),
            fl: ObjectRef::Inline(object_spec(&f.fl)),
            f_ll: inline(&f.f_ll),
            f_lll: inline(&f.f_lll),
            f_bracket: matrix_spec(&f.f_bracket),
            f_lambda: matrix_spec(&f.f_lambda),
            psi_ll: matrix_spec(&f.psi_ll),
            psi_ll_l: matrix_spec(&f.psi_ll_l),
            psi_l_ll: matrix_spec(&f.psi_l_ll),
            f_t: matrix_spec(&f.f_t),
            f_w: matrix_spec(&f.f_w),
            f_assoc: (!f.f_assoc.is_identity()).then(|| matrix_spec(&f.f_assoc)),
        }),
    )
}
