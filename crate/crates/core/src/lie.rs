//! YB-Lie algebras `(L, λ, [-,-])` and Lie coalgebras.
//!
//! The bracket is a `d x d²` matrix whose column `(i, j)` holds the
//! coordinates of `[e_i, e_j]`. The axioms checked are
//!
//! ```text
//! antisymmetry   [-,-] ∘ (id + λ) = 0
//! jacobi_right   [-,-] ∘ (id ⊗ [-,-]) ∘ (id + t + w) = 0
//! compatibility  (id ⊗ [-,-]) ∘ t ∘ a = λ ∘ ([-,-] ⊗ id)
//! jacobi_left    [-,-] ∘ ([-,-] ⊗ id) ∘ a⁻¹ ∘ (id + t + w) = 0
//! ```
//!
//! with `t`, `w` and `a` taken from the Yang-Baxter operator's context.

use std::collections::BTreeMap;

use crate::context::{CategoryObject, GradedObject, HomObject, MonoidalContext};
use crate::error::Error;
use crate::matrix::{flip_matrix, RatMatrix};
use crate::rational::Rational;
use crate::verdict::{CheckLine, Report, Verdict};
use crate::yangbaxter::YBOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YBLieAlgebra {
    op: YBOperator,
    bracket: RatMatrix,
}

impl YBLieAlgebra {
    pub fn new(op: YBOperator, bracket: RatMatrix) -> Result<Self, Error> {
        let d = op.dim();
        if bracket.shape() != (d, d * d) {
            return Err(Error::Shape(format!(
                "bracket is {:?}, expected {}x{}",
                bracket.shape(),
                d,
                d * d
            )));
        }
        Ok(Self { op, bracket })
    }

    /// Classical Lie algebra: flip, strict context, `[e_i, e_j] = constants[(i, j)]`
    /// (missing pairs are zero).
    pub fn from_structure_constants(
        d: usize,
        constants: &BTreeMap<(usize, usize), Vec<Rational>>,
    ) -> Result<Self, Error> {
        let mut bracket = RatMatrix::zeros(d, d * d);
        for (&(i, j), v) in constants {
            if i >= d || j >= d {
                return Err(Error::Shape(format!("basis pair ({i}, {j}) out of range for d = {d}")));
            }
            if v.len() != d {
                return Err(Error::Shape(format!(
                    "structure constant vector for ({i}, {j}) has length {}, expected {d}",
                    v.len()
                )));
            }
            for (k, c) in v.iter().enumerate() {
                bracket.set(k, i * d + j, c.clone());
            }
        }
        let op = YBOperator::new(GradedObject::plain(d), flip_matrix(d, d), MonoidalContext::Strict)?;
        Self::new(op, bracket)
    }

    pub fn op(&self) -> &YBOperator {
        &self.op
    }

    pub fn bracket(&self) -> &RatMatrix {
        &self.bracket
    }

    pub fn lambda(&self) -> &RatMatrix {
        self.op.lambda()
    }

    pub fn object(&self) -> &CategoryObject {
        self.op.object()
    }

    pub fn ctx(&self) -> &MonoidalContext {
        self.op.ctx()
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    fn id(&self) -> RatMatrix {
        RatMatrix::identity(self.dim())
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_of(&self, i: usize, j: usize) -> Vec<Rational> {
        self.bracket.column(i * self.dim() + j)
    }

    pub fn check_antisymmetry(&self) -> Verdict {
        let d2 = self.dim() * self.dim();
        let sum = RatMatrix::identity(d2).add(self.lambda()).expect("square");
        Verdict::zero(&self.bracket.mul(&sum).expect("shapes checked"))
    }

    pub fn check_jacobi_right(&self) -> Verdict {
        let inner = self.id().kron(&self.bracket);
        let m = RatMatrix::chain(&[&self.bracket, &inner, self.op.cyclic_sum()]);
        Verdict::zero(&m.expect("shapes checked"))
    }

    pub fn check_compatibility(&self) -> Verdict {
        let lhs = RatMatrix::chain(&[&self.id().kron(&self.bracket), self.op.t_of(), self.op.associator()]);
        let rhs = self.lambda().mul(&self.bracket.kron(&self.id()));
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    /// The mirrored form `([-,-] ⊗ id) ∘ a⁻¹ ∘ w = λ ∘ (id ⊗ [-,-])`; not part
    /// of the axioms, reported as a diagnostic.
    pub fn check_compatibility_mirrored(&self) -> Verdict {
        let lhs = RatMatrix::chain(&[
            &self.bracket.kron(&self.id()),
            self.op.associator_inverse(),
            self.op.w_of(),
        ]);
        let rhs = self.lambda().mul(&self.id().kron(&self.bracket));
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    pub fn check_jacobi_left(&self) -> Verdict {
        let outer = self.bracket.kron(&self.id());
        let m = RatMatrix::chain(&[
            &self.bracket,
            &outer,
            self.op.associator_inverse(),
            self.op.cyclic_sum(),
        ]);
        Verdict::zero(&m.expect("shapes checked"))
    }

    /// Degree-preservation of the bracket.
    pub fn check_graded(&self) -> Result<(), Error> {
        let l = self.object().graded();
        l.tensor(l)?.check_degree_preserving(l, &self.bracket)
    }

    /// For Hom objects: `μ ∘ [-,-] = [-,-] ∘ (μ ⊗ μ)`.
    /// On a Hom object `(L, α)`: `α ∘ [-,-] = [-,-] ∘ (α⊗α)` and
    /// `(α⊗α) ∘ λ = λ ∘ (α⊗α)`, i.e. both structure maps are morphisms of
    /// the Hom-category. `None` for plain objects.
    pub fn check_hom_equivariant(&self) -> Option<Verdict> {
        let mu = self.object().mu()?;
        let mm = mu.kron(mu);
        let lhs = mu.mul(&self.bracket).expect("shapes checked");
        let rhs = self.bracket.mul(&mm).expect("shapes checked");
        let lam = self.lambda();
        Some(Verdict::all([
            Verdict::compare(&lhs, &rhs).expect("same shape"),
            Verdict::compare(&mm.mul(lam).expect("square"), &lam.mul(&mm).expect("square"))
                .expect("same shape"),
        ]))
    }

    pub fn full_battery(&self) -> Report {
        let d = self.dim();
        let mut r = self.op.battery();
        r.push(CheckLine::from_verdict("antisymmetry", true, self.check_antisymmetry()).with_columns(d, 2));
        r.push(CheckLine::from_verdict("jacobi_right", true, self.check_jacobi_right()).with_columns(d, 3));
        r.push(CheckLine::from_verdict("compatibility", true, self.check_compatibility()).with_columns(d, 3));
        r.push(CheckLine::from_verdict("jacobi_left", false, self.check_jacobi_left()).with_columns(d, 3));
        r.push(
            CheckLine::from_verdict("compatibility_mirrored", false, self.check_compatibility_mirrored())
                .with_columns(d, 3),
        );
        r.push(match self.check_graded() {
            Ok(()) => CheckLine::from_verdict("graded", false, Verdict::Pass),
            Err(e) => {
                let mut line = CheckLine::failed("graded", e.to_string());
                line.required = false;
                line
            }
        });
        if let Some(v) = self.check_hom_equivariant() {
            r.push(CheckLine::from_verdict("hom_equivariant", true, v));
        }
        r
    }

    /// The isomorphic algebra in the basis changed by an invertible
    /// degree-preserving `q`: `λ' = (q⊗q) λ (q⊗q)⁻¹`, `[-,-]' = q [-,-] (q⊗q)⁻¹`.
    pub fn conjugate(&self, q: &RatMatrix) -> Result<YBLieAlgebra, Error> {
        let op = self.op.conjugate(q)?;
        let q_inv = q.inverse().map_err(|_| Error::SingularChangeOfBasis)?;
        let bracket = RatMatrix::chain(&[q, &self.bracket, &q_inv.kron(&q_inv)])?;
        YBLieAlgebra::new(op, bracket)
    }

    /// The Lie coalgebra on the dual space: cobracket `[-,-]ᵀ`, operator `λᵀ`.
    pub fn dualize(&self) -> Result<LieCoalgebra, Error> {
        let op = YBOperator::new(
            dual_object(self.object())?,
            self.lambda().transpose(),
            self.ctx().clone(),
        )?;
        LieCoalgebra::new(op, self.bracket.transpose())
    }
}

/// Graded dual; a Hom object `(M, μ)` dualises to `(M*, (μ⁻¹)ᵀ)`, which makes
/// the deformed associator of the dual equal to `(a⁻¹)ᵀ`.
fn dual_object(obj: &CategoryObject) -> Result<CategoryObject, Error> {
    Ok(match obj {
        CategoryObject::Graded(g) => CategoryObject::Graded(g.dual()),
        CategoryObject::Hom(h) => {
            CategoryObject::Hom(HomObject::new(h.object().dual(), h.mu_inv().transpose())?)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCoalgebra {
    op: YBOperator,
    cobracket: RatMatrix,
}

impl LieCoalgebra {
    pub fn new(op: YBOperator, cobracket: RatMatrix) -> Result<Self, Error> {
        let d = op.dim();
        if cobracket.shape() != (d * d, d) {
            return Err(Error::Shape(format!(
                "cobracket is {:?}, expected {}x{}",
                cobracket.shape(),
                d * d,
                d
            )));
        }
        Ok(Self { op, cobracket })
    }

    pub fn op(&self) -> &YBOperator {
        &self.op
    }

    pub fn cobracket(&self) -> &RatMatrix {
        &self.cobracket
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    /// `(id + λ) ∘ δ = 0`
    pub fn check_co_antisymmetry(&self) -> Verdict {
        let d2 = self.dim() * self.dim();
        let sum = RatMatrix::identity(d2).add(self.op.lambda()).expect("square");
        Verdict::zero(&sum.mul(&self.cobracket).expect("shapes checked"))
    }

    /// `(id + t + w) ∘ (id ⊗ δ) ∘ δ = 0`
    pub fn check_co_jacobi(&self) -> Verdict {
        let inner = RatMatrix::identity(self.dim()).kron(&self.cobracket);
        let m = RatMatrix::chain(&[self.op.cyclic_sum(), &inner, &self.cobracket]);
        Verdict::zero(&m.expect("shapes checked"))
    }

    pub fn check_coalgebra(&self) -> Report {
        let d = self.dim();
        let mut r = self.op.battery();
        r.push(CheckLine::from_verdict("co_antisymmetry", true, self.check_co_antisymmetry()));
        r.push(CheckLine::from_verdict("co_jacobi", true, self.check_co_jacobi()).with_columns(d, 1));
        r
    }

    /// Back to the algebra on the dual space.
    pub fn dualize(&self) -> Result<YBLieAlgebra, Error> {
        let op = YBOperator::new(
            dual_object(self.op.object())?,
            self.op.lambda().transpose(),
            self.op.ctx().clone(),
        )?;
        YBLieAlgebra::new(op, self.cobracket.transpose())
    }
}

pub fn check_antisymmetry(alg: &YBLieAlgebra) -> Verdict {
    alg.check_antisymmetry()
}

pub fn check_jacobi_right(alg: &YBLieAlgebra) -> Verdict {
    alg.check_jacobi_right()
}

pub fn check_compatibility(alg: &YBLieAlgebra) -> Verdict {
    alg.check_compatibility()
}

pub fn check_jacobi_left(alg: &YBLieAlgebra) -> Verdict {
    alg.check_jacobi_left()
}

pub fn full_battery(alg: &YBLieAlgebra) -> Report {
    alg.full_battery()
}

pub fn dualize(alg: &YBLieAlgebra) -> Result<LieCoalgebra, Error> {
    alg.dualize()
}

pub fn check_coalgebra(c: &LieCoalgebra) -> Report {
    c.check_coalgebra()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rational::rat;
    use crate::verdict::Status;

    fn two_dim(ba: i64) -> YBLieAlgebra {
        let mut c = BTreeMap::new();
        c.insert((0, 1), vec![rat(1), rat(0)]);
        c.insert((1, 0), vec![rat(ba), rat(0)]);
        YBLieAlgebra::from_structure_constants(2, &c).unwrap()
    }

    #[test]
    fn antisymmetry_examples() {
        let abelian = YBLieAlgebra::from_structure_constants(3, &BTreeMap::new()).unwrap();
        assert!(abelian.check_antisymmetry().passed());
        assert!(two_dim(-1).check_antisymmetry().passed());
        let v = two_dim(1).check_antisymmetry();
        let line = CheckLine::from_verdict("antisymmetry", true, v).with_columns(2, 2);
        // columns (0,1) and (1,0) both pick up 2·e₁; the row-major scan meets (0,1) first
        assert_eq!(line.column_basis, Some(vec![0, 1]));
        assert_eq!(line.witness.unwrap().lhs, rat(2));
    }

    #[test]
    fn jacobi_examples() {
        assert!(corpus::sl2().check_jacobi_right().passed());
        assert!(YBLieAlgebra::from_structure_constants(2, &BTreeMap::new())
            .unwrap()
            .check_jacobi_right()
            .passed());
        assert!(!corpus::sl2_broken().check_jacobi_right().passed());
        assert!(corpus::sl2().check_jacobi_left().passed());
    }

    #[test]
    fn compatibility_examples() {
        assert!(corpus::sl2().check_compatibility().passed());
        assert!(corpus::gl11().check_compatibility().passed());
        let sl2 = corpus::sl2();
        let id_op = YBOperator::identity(GradedObject::plain(3), MonoidalContext::Strict).unwrap();
        let broken = YBLieAlgebra::new(id_op, sl2.bracket().clone()).unwrap();
        assert!(!broken.check_compatibility().passed());
    }

    #[test]
    fn battery_examples() {
        assert!(corpus::sl2().full_battery().passed());
        assert!(corpus::gl11().full_battery().passed());
        assert!(corpus::heisenberg().full_battery().passed());
        let r = corpus::sl2_broken().full_battery();
        assert_eq!(r.status("antisymmetry"), Some(Status::Pass));
        assert_eq!(r.status("jacobi_right"), Some(Status::Fail));
        assert!(!r.passed());
    }

    #[test]
    fn structure_constant_errors() {
        let mut c = BTreeMap::new();
        c.insert((0, 1), vec![rat(1)]);
        assert!(matches!(
            YBLieAlgebra::from_structure_constants(2, &c),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn coalgebra_examples() {
        let dual = corpus::sl2().dualize().unwrap();
        assert!(dual.check_coalgebra().passed());
        let abelian = YBLieAlgebra::from_structure_constants(2, &BTreeMap::new()).unwrap();
        let dual = abelian.dualize().unwrap();
        assert!(dual.cobracket().is_zero());
        assert!(dual.check_coalgebra().passed());

        let op = dual.op().clone();
        let mut cob = RatMatrix::zeros(4, 2);
        cob.set(1, 0, rat(1)); // δ(e₀) = e₀⊗e₁ only
        let bad = LieCoalgebra::new(op, cob).unwrap();
        let v = bad.check_co_antisymmetry();
        assert!(v.witness().is_some());
    }

    #[test]
    fn dualize_twice_is_identity() {
        for alg in [corpus::sl2(), corpus::gl11(), corpus::sl2_hom_deformed(rat(2))] {
            assert_eq!(alg.dualize().unwrap().dualize().unwrap(), alg);
        }
    }
}
