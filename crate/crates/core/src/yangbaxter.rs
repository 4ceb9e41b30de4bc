//! Self-invertible Yang-Baxter operators `λ: L⊗L -> L⊗L`.
//!
//! The braid identity and the derived maps
//!
//! ```text
//! t = a ∘ (λ⊗L) ∘ a⁻¹ ∘ (L⊗λ)
//! w = (L⊗λ) ∘ a ∘ (λ⊗L) ∘ a⁻¹
//! ```
//!
//! are assembled with the associator `a = a_{L,L,L}` of the operator's context.
//! Construction does not run any check; call [`YBOperator::check_self_inverse`]
//! and [`YBOperator::check_yb`] (or [`YBOperator::battery`]) explicitly.

use std::sync::OnceLock;

use crate::context::{CategoryObject, GradedObject, HomObject, MonoidalContext};
use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::verdict::{CheckLine, Report, Verdict};

#[derive(Debug, Clone)]
pub(crate) struct Derived {
    pub assoc: RatMatrix,
    pub assoc_inv: RatMatrix,
    pub t: RatMatrix,
    pub w: RatMatrix,
    /// `id + t + w`, shared by both Jacobi identities and the co-Jacobi identity.
    pub cyclic_sum: RatMatrix,
}

#[derive(Debug, Clone)]
pub struct YBOperator {
    object: CategoryObject,
    lambda: RatMatrix,
    ctx: MonoidalContext,
    derived: OnceLock<Derived>,
}

impl PartialEq for YBOperator {
    fn eq(&self, other: &Self) -> bool {
        self.object == other.object && self.lambda == other.lambda && self.ctx == other.ctx
    }
}

impl Eq for YBOperator {}

impl YBOperator {
    pub fn new(
        object: impl Into<CategoryObject>,
        lambda: RatMatrix,
        ctx: MonoidalContext,
    ) -> Result<Self, Error> {
        let object = object.into();
        ctx.admits(&object)?;
        let d = object.dim();
        if lambda.shape() != (d * d, d * d) {
            return Err(Error::Shape(format!(
                "lambda is {:?}, expected {}x{}",
                lambda.shape(),
                d * d,
                d * d
            )));
        }
        Ok(Self {
            object,
            lambda,
            ctx,
            derived: OnceLock::new(),
        })
    }

    /// The identity on `L⊗L`, a degenerate Yang-Baxter operator.
    pub fn identity(object: impl Into<CategoryObject>, ctx: MonoidalContext) -> Result<Self, Error> {
        let object = object.into();
        let d = object.dim();
        Self::new(object, RatMatrix::identity(d * d), ctx)
    }

    pub fn object(&self) -> &CategoryObject {
        &self.object
    }

    pub fn lambda(&self) -> &RatMatrix {
        &self.lambda
    }

    pub fn ctx(&self) -> &MonoidalContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub(crate) fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let l = &self.object;
            let assoc = self
                .ctx
                .associator(l, l, l)
                .expect("object admitted at construction");
            let assoc_inv = self
                .ctx
                .associator_inverse(l, l, l)
                .expect("object admitted at construction");
            let id = RatMatrix::identity(self.dim());
            let lam_l = self.lambda.kron(&id);
            let l_lam = id.kron(&self.lambda);
            let t = RatMatrix::chain(&[&assoc, &lam_l, &assoc_inv, &l_lam]).expect("square");
            let w = RatMatrix::chain(&[&l_lam, &assoc, &lam_l, &assoc_inv]).expect("square");
            let cyclic_sum = RatMatrix::identity(t.rows())
                .add(&t)
                .and_then(|s| s.add(&w))
                .expect("square");
            Derived {
                assoc,
                assoc_inv,
                t,
                w,
                cyclic_sum,
            }
        })
    }

    pub fn associator(&self) -> &RatMatrix {
        &self.derived().assoc
    }

    pub fn associator_inverse(&self) -> &RatMatrix {
        &self.derived().assoc_inv
    }

    pub fn t_of(&self) -> &RatMatrix {
        &self.derived().t
    }

    pub fn w_of(&self) -> &RatMatrix {
        &self.derived().w
    }

    pub fn cyclic_sum(&self) -> &RatMatrix {
        &self.derived().cyclic_sum
    }

    /// `λ ∘ λ = id`
    pub fn check_self_inverse(&self) -> Verdict {
        let sq = self.lambda.mul(&self.lambda).expect("square");
        Verdict::compare(&sq, &RatMatrix::identity(sq.rows())).expect("square")
    }

    /// The braid identity relative to the context associator.
    pub fn check_yb(&self) -> Verdict {
        let Derived { assoc, assoc_inv, .. } = self.derived();
        let id = RatMatrix::identity(self.dim());
        let lam_l = self.lambda.kron(&id);
        let l_lam = id.kron(&self.lambda);
        let lhs = RatMatrix::chain(&[assoc, &lam_l, assoc_inv, &l_lam, assoc, &lam_l]);
        let rhs = RatMatrix::chain(&[&l_lam, assoc, &lam_l, assoc_inv, &l_lam, assoc]);
        Verdict::compare(&lhs.expect("square"), &rhs.expect("square")).expect("square")
    }

    /// `t ∘ t = w`
    pub fn check_t_squared(&self) -> Verdict {
        let tt = self.t_of().mul(self.t_of()).expect("square");
        Verdict::compare(&tt, self.w_of()).expect("square")
    }

    /// `t ∘ w = id = w ∘ t`
    pub fn check_t_w_inverse(&self) -> Verdict {
        let id = RatMatrix::identity(self.t_of().rows());
        let tw = self.t_of().mul(self.w_of()).expect("square");
        let wt = self.w_of().mul(self.t_of()).expect("square");
        Verdict::all([
            Verdict::compare(&tw, &id).expect("square"),
            Verdict::compare(&wt, &id).expect("square"),
        ])
    }

    /// Self-inverse and braid identity, plus the `t`/`w` relations as
    /// diagnostics (they follow from the first two).
    pub fn battery(&self) -> Report {
        let d = self.dim();
        let mut r = Report::default();
        r.push(CheckLine::from_verdict("self_inverse", true, self.check_self_inverse()).with_columns(d, 2));
        r.push(CheckLine::from_verdict("yang_baxter", true, self.check_yb()).with_columns(d, 3));
        r.push(CheckLine::from_verdict("t_squared_is_w", false, self.check_t_squared()).with_columns(d, 3));
        r.push(CheckLine::from_verdict("t_w_inverse", false, self.check_t_w_inverse()).with_columns(d, 3));
        r
    }

    /// `λ' = (q⊗q) ∘ λ ∘ (q⊗q)⁻¹` for an invertible degree-preserving `q`;
    /// a Hom twist `μ` becomes `q μ q⁻¹`.
    pub fn conjugate(&self, q: &RatMatrix) -> Result<YBOperator, Error> {
        let g = self.object.graded();
        g.check_degree_preserving(g, q)?;
        let q_inv = q.inverse().map_err(|_| Error::SingularChangeOfBasis)?;
        let lambda = RatMatrix::chain(&[&q.kron(q), &self.lambda, &q_inv.kron(&q_inv)])?;
        let object = match &self.object {
            CategoryObject::Hom(h) => {
                let mu = RatMatrix::chain(&[q, h.mu(), &q_inv])?;
                CategoryObject::Hom(HomObject::new(g.clone(), mu)?)
            }
            plain => plain.clone(),
        };
        YBOperator::new(object, lambda, self.ctx.clone())
    }

    /// The same matrix viewed as an operator in another context on another
    /// object of the same dimension.
    pub fn rehome(&self, object: impl Into<CategoryObject>, ctx: MonoidalContext) -> Result<Self, Error> {
        Self::new(object, self.lambda.clone(), ctx)
    }
}

pub fn check_self_inverse(op: &YBOperator) -> Verdict {
    op.check_self_inverse()
}

pub fn check_yb(op: &YBOperator) -> Verdict {
    op.check_yb()
}

pub fn t_of(op: &YBOperator) -> RatMatrix {
    op.t_of().clone()
}

pub fn w_of(op: &YBOperator) -> RatMatrix {
    op.w_of().clone()
}

pub fn conjugate_yb(op: &YBOperator, q: &RatMatrix) -> Result<YBOperator, Error> {
    op.conjugate(q)
}

/// `c_{L,L}` of a symmetric context as a Yang-Baxter operator.
pub fn symmetry_as_yb(
    ctx: &MonoidalContext,
    obj: impl Into<CategoryObject>,
) -> Result<YBOperator, Error> {
    let obj = obj.into();
    let c = ctx.symmetry(obj.graded(), obj.graded())?;
    YBOperator::new(obj, c, ctx.clone())
}

/// `c_{L⊗L,L} ∘ a⁻¹`, which equals `t` for the symmetry operator.
pub fn symmetry_t(ctx: &MonoidalContext, obj: &CategoryObject) -> Result<RatMatrix, Error> {
    let g: &GradedObject = obj.graded();
    let gg = ctx.tensor_object(g, g)?;
    let c = ctx.symmetry(&gg, g)?;
    let a_inv = ctx.associator_inverse(obj, obj, obj)?;
    Ok(c.mul(&a_inv)?)
}

/// `a ∘ c_{L,L⊗L}`, which equals `w` for the symmetry operator.
pub fn symmetry_w(ctx: &MonoidalContext, obj: &CategoryObject) -> Result<RatMatrix, Error> {
    let g: &GradedObject = obj.graded();
    let gg = ctx.tensor_object(g, g)?;
    let c = ctx.symmetry(g, &gg)?;
    let a = ctx.associator(obj, obj, obj)?;
    Ok(a.mul(&c)?)
}

/// Operators of the form `e_i⊗e_j ↦ s_ij · e_j⊗e_i` with `s_ij·s_ji = 1`
/// and `s_ii = ±1`; every such matrix satisfies both defining identities in
/// a strict context.
pub fn scaled_flip(scales: &[Vec<crate::Rational>]) -> Result<RatMatrix, Error> {
    use num_traits::One;
    let d = scales.len();
    let mut m = RatMatrix::zeros(d * d, d * d);
    for i in 0..d {
        if scales[i].len() != d {
            return Err(Error::Shape("scale table must be square".into()));
        }
        for j in 0..d {
            if !(&scales[i][j] * &scales[j][i]).is_one() {
                return Err(Error::Shape(format!("s[{i}][{j}]·s[{j}][{i}] != 1")));
            }
            m.set(j * d + i, i * d + j, scales[i][j].clone());
        }
    }
    Ok(m)
}

/// A Hom object with the identity twist.
pub fn untwisted(obj: GradedObject) -> HomObject {
    let d = obj.dim();
    HomObject::new(obj, RatMatrix::identity(d)).expect("identity is invertible")
}
