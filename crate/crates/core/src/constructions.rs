//! YB-Lie algebras built from other data: commutators of associative
//! algebras, Hom-deformations, and primitive elements of bialgebras.

use num_traits::Zero;

use crate::context::{CategoryObject, GradedObject, HomObject};
use crate::error::Error;
use crate::lie::YBLieAlgebra;
use crate::matrix::{LinalgError, RatMatrix};
use crate::rational::Rational;
use crate::verdict::{CheckLine, Report, Verdict};
use crate::yangbaxter::YBOperator;

/// An associative algebra `(B, μ)` together with a Yang-Baxter operator on `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocAlgebra {
    op: YBOperator,
    mul: RatMatrix,
    unit: Option<Vec<Rational>>,
}

impl AssocAlgebra {
    pub fn new(op: YBOperator, mul: RatMatrix, unit: Option<Vec<Rational>>) -> Result<Self, Error> {
        let d = op.dim();
        if mul.shape() != (d, d * d) {
            return Err(Error::Shape(format!(
                "multiplication is {:?}, expected {}x{}",
                mul.shape(),
                d,
                d * d
            )));
        }
        if let Some(u) = &unit {
            if u.len() != d {
                return Err(Error::Shape(format!("unit has length {}, expected {d}", u.len())));
            }
        }
        Ok(Self { op, mul, unit })
    }

    pub fn op(&self) -> &YBOperator {
        &self.op
    }

    pub fn mul(&self) -> &RatMatrix {
        &self.mul
    }

    pub fn unit(&self) -> Option<&[Rational]> {
        self.unit.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    fn id(&self) -> RatMatrix {
        RatMatrix::identity(self.dim())
    }

    fn unit_column(&self) -> Option<RatMatrix> {
        self.unit.clone().map(RatMatrix::column_vector)
    }

    /// `μ ∘ (μ ⊗ id) = μ ∘ (id ⊗ μ) ∘ a`
    pub fn check_associativity(&self) -> Verdict {
        let lhs = self.mul.mul(&self.mul.kron(&self.id()));
        let rhs = RatMatrix::chain(&[&self.mul, &self.id().kron(&self.mul), self.op.associator()]);
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    /// `μ ∘ (η ⊗ id) = id = μ ∘ (id ⊗ η)` with strict unit constraints.
    pub fn check_unit(&self) -> Option<Verdict> {
        let eta = self.unit_column()?;
        let left = self.mul.mul(&eta.kron(&self.id())).expect("shapes checked");
        let right = self.mul.mul(&self.id().kron(&eta)).expect("shapes checked");
        Some(Verdict::all([
            Verdict::compare(&left, &self.id()).expect("same shape"),
            Verdict::compare(&right, &self.id()).expect("same shape"),
        ]))
    }

    /// `(μ ⊗ B) ∘ a⁻¹ ∘ w = λ ∘ (B ⊗ μ)`
    pub fn check_compat_w(&self) -> Verdict {
        let lhs = RatMatrix::chain(&[&self.mul.kron(&self.id()), self.op.associator_inverse(), self.op.w_of()]);
        let rhs = self.op.lambda().mul(&self.id().kron(&self.mul));
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    /// `(B ⊗ μ) ∘ t ∘ a = λ ∘ (μ ⊗ B)`
    pub fn check_compat_t(&self) -> Verdict {
        let lhs = RatMatrix::chain(&[&self.id().kron(&self.mul), self.op.t_of(), self.op.associator()]);
        let rhs = self.op.lambda().mul(&self.mul.kron(&self.id()));
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    /// Both multiplication/Yang-Baxter compatibility identities; the first
    /// failure is returned.
    pub fn check_assalgebra_compat(&self) -> Verdict {
        Verdict::all([self.check_compat_w(), self.check_compat_t()])
    }

    pub fn battery(&self) -> Report {
        let d = self.dim();
        let mut r = self.op.battery();
        r.push(CheckLine::from_verdict("associativity", true, self.check_associativity()).with_columns(d, 3));
        if let Some(v) = self.check_unit() {
            r.push(CheckLine::from_verdict("unit", true, v));
        }
        r.push(CheckLine::from_verdict("assalgebra_compat_w", true, self.check_compat_w()).with_columns(d, 3));
        r.push(CheckLine::from_verdict("assalgebra_compat_t", true, self.check_compat_t()).with_columns(d, 3));
        r
    }

    /// `[-,-] = μ ∘ (id - λ)`. Refuses when the compatibility identities fail.
    pub fn commutator(&self) -> Result<YBLieAlgebra, Error> {
        if let Verdict::Fail(w) = self.check_assalgebra_compat() {
            return Err(Error::CompatFailed(w));
        }
        let d2 = self.dim() * self.dim();
        let bracket = self.mul.mul(&RatMatrix::identity(d2).sub(self.op.lambda())?)?;
        YBLieAlgebra::new(self.op.clone(), bracket)
    }
}

pub fn check_assalgebra_compat(b: &AssocAlgebra) -> Verdict {
    b.check_assalgebra_compat()
}

pub fn commutator(b: &AssocAlgebra) -> Result<YBLieAlgebra, Error> {
    b.commutator()
}

/// A unital algebra with comultiplication `Δ` and counit `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraData {
    algebra: AssocAlgebra,
    comul: RatMatrix,
    counit: Vec<Rational>,
}

impl BialgebraData {
    pub fn new(algebra: AssocAlgebra, comul: RatMatrix, counit: Vec<Rational>) -> Result<Self, Error> {
        let d = algebra.dim();
        if algebra.unit().is_none() {
            return Err(Error::MissingUnit);
        }
        if comul.shape() != (d * d, d) {
            return Err(Error::Shape(format!(
                "comultiplication is {:?}, expected {}x{}",
                comul.shape(),
                d * d,
                d
            )));
        }
        if counit.len() != d {
            return Err(Error::Shape(format!("counit has length {}, expected {d}", counit.len())));
        }
        Ok(Self { algebra, comul, counit })
    }

    pub fn algebra(&self) -> &AssocAlgebra {
        &self.algebra
    }

    pub fn comul(&self) -> &RatMatrix {
        &self.comul
    }

    pub fn counit(&self) -> &[Rational] {
        &self.counit
    }

    fn id(&self) -> RatMatrix {
        RatMatrix::identity(self.algebra.dim())
    }

    /// `a ∘ (Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ`
    pub fn check_coassociativity(&self) -> Verdict {
        let lhs = RatMatrix::chain(&[self.algebra.op().associator(), &self.comul.kron(&self.id()), &self.comul]);
        let rhs = self.id().kron(&self.comul).mul(&self.comul);
        Verdict::compare(&lhs.expect("shapes checked"), &rhs.expect("shapes checked")).expect("same shape")
    }

    /// `(ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ`
    pub fn check_counit(&self) -> Verdict {
        let eps = RatMatrix::row_vector(self.counit.clone());
        let left = eps.kron(&self.id()).mul(&self.comul).expect("shapes checked");
        let right = self.id().kron(&eps).mul(&self.comul).expect("shapes checked");
        Verdict::all([
            Verdict::compare(&left, &self.id()).expect("same shape"),
            Verdict::compare(&right, &self.id()).expect("same shape"),
        ])
    }

    /// `Δ ∘ μ = (μ ⊗ μ) ∘ (id ⊗ λ ⊗ id) ∘ (Δ ⊗ Δ)` in the strict form. `None`
    /// in deformed contexts, where the strict form does not apply.
    pub fn check_comul_multiplicative(&self) -> Option<Verdict> {
        if self.algebra.op().ctx().is_deformed() {
            return None;
        }
        let mu = self.algebra.mul();
        let lhs = self.comul.mul(mu).expect("shapes checked");
        let twist = self.id().kron(&self.algebra.op().lambda().kron(&self.id()));
        let rhs = RatMatrix::chain(&[&mu.kron(mu), &twist, &self.comul.kron(&self.comul)]);
        Some(Verdict::compare(&lhs, &rhs.expect("shapes checked")).expect("same shape"))
    }

    pub fn battery(&self) -> Report {
        let d = self.algebra.dim();
        let mut r = self.algebra.battery();
        r.push(CheckLine::from_verdict("coassociativity", true, self.check_coassociativity()));
        r.push(CheckLine::from_verdict("counit", true, self.check_counit()));
        match self.check_comul_multiplicative() {
            Some(v) => r.push(CheckLine::from_verdict("comul_multiplicative", false, v).with_columns(d, 2)),
            None => {
                let mut line = CheckLine::skipped("comul_multiplicative", "strict form only");
                line.required = false;
                r.push(line);
            }
        }
        r
    }

    /// `Δ - (η ⊗ id) - (id ⊗ η)`, whose kernel is the space of primitives.
    pub fn primitive_defect(&self) -> RatMatrix {
        let eta = RatMatrix::column_vector(self.algebra.unit().expect("unit checked").to_vec());
        self.comul
            .sub(&eta.kron(&self.id()))
            .and_then(|m| m.sub(&self.id().kron(&eta)))
            .expect("shapes checked")
    }

    /// Primitive elements as the equaliser of `Δ` and `η⊗B + B⊗η`, with the
    /// commutator bracket and `λ` restricted to them.
    pub fn primitives(&self) -> Result<(Vec<Vec<Rational>>, YBLieAlgebra), Error> {
        let basis = self.primitive_defect().kernel_basis();
        let d = self.algebra.dim();
        let inc = RatMatrix::from_columns(d, &basis)?;
        let inc2 = inc.kron(&inc);

        let full = self.algebra.commutator()?;
        let bracket = inc
            .solve_through_mono(&full.bracket().mul(&inc2)?)
            .map_err(|e| match e {
                LinalgError::Inconsistent { .. } => Error::NotClosedUnderBracket,
                other => other.into(),
            })?;
        let lambda = inc2
            .solve_through_mono(&full.lambda().mul(&inc2)?)
            .map_err(|e| match e {
                LinalgError::Inconsistent { .. } => Error::LambdaDoesNotRestrict,
                other => other.into(),
            })?;

        let source = full.object().graded();
        let mut degrees = Vec::with_capacity(basis.len());
        for (k, v) in basis.iter().enumerate() {
            let mut deg = None;
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match deg {
                    None => deg = Some(source.degree(i).to_vec()),
                    Some(ref g) if g.as_slice() != source.degree(i) => {
                        return Err(Error::NotHomogeneous(k))
                    }
                    Some(_) => {}
                }
            }
            degrees.push(deg.expect("kernel basis vectors are nonzero"));
        }
        let graded = GradedObject::new(source.group().clone(), degrees)?;
        let object = match full.object() {
            CategoryObject::Graded(_) => CategoryObject::Graded(graded),
            CategoryObject::Hom(h) => {
                let mu = inc.solve_through_mono(&h.mu().mul(&inc)?)?;
                CategoryObject::Hom(HomObject::new(graded, mu)?)
            }
        };
        let op = YBOperator::new(object, lambda, full.ctx().clone())?;
        Ok((basis, YBLieAlgebra::new(op, bracket)?))
    }
}

pub fn primitives(b: &BialgebraData) -> Result<(Vec<Vec<Rational>>, YBLieAlgebra), Error> {
    b.primitives()
}

/// Moves a Lie algebra with a Lie automorphism `α` into the deformed
/// Hom-category: the object becomes `(L, α)` and the bracket
/// `[-,-] ∘ (α ⊗ α) = α ∘ [-,-]`. The operator must be the context symmetry,
/// which the deformation keeps unchanged.
pub fn hom_deform(alg: &YBLieAlgebra, alpha: &RatMatrix) -> Result<YBLieAlgebra, Error> {
    let ctx = alg.ctx();
    if ctx.is_deformed() {
        return Err(Error::NotSymmetricInput);
    }
    let l = alg.object().graded();
    if *alg.lambda() != ctx.symmetry(l, l)? {
        return Err(Error::NotSymmetricInput);
    }
    let d = alg.dim();
    if alpha.shape() != (d, d) {
        return Err(Error::Shape(format!("alpha is {:?}, expected {d}x{d}", alpha.shape())));
    }
    if alpha.inverse().is_err() {
        return Err(Error::SingularAlpha);
    }
    let twisted = alg.bracket().mul(&alpha.kron(alpha))?;
    if let Verdict::Fail(w) = Verdict::compare(&alpha.mul(alg.bracket())?, &twisted)? {
        return Err(Error::NotLieMorphism(w));
    }
    let object = HomObject::new(l.clone(), alpha.clone())?;
    let op = YBOperator::new(object, alg.lambda().clone(), ctx.deformed())?;
    YBLieAlgebra::new(op, twisted)
}

/// The Hom-Jacobi identity
/// `[α(x), [y, z]] + [α(y), [z, x]] + [α(z), [x, y]] = 0`
/// for an algebra on a Hom object `(L, α)`, with the cyclic permutations
/// taken in the undeformed context (signed in graded bases).
pub fn check_hom_jacobi(alg: &YBLieAlgebra) -> Result<Verdict, Error> {
    let alpha = alg.object().mu().ok_or(Error::NeedsHomObject)?;
    let base = alg.op().rehome(alg.object().graded().clone(), alg.ctx().undeformed())?;
    let b = alg.bracket();
    let m = RatMatrix::chain(&[b, &alpha.kron(b), base.cyclic_sum()])?;
    Ok(Verdict::zero(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::rational::rat;
    use crate::verdict::Status;

    #[test]
    fn compat_examples() {
        assert!(corpus::truncpoly().algebra().check_assalgebra_compat().passed());
        assert!(corpus::mat2().check_assalgebra_compat().passed());
        let m = corpus::mat2();
        let id = YBOperator::identity(m.op().object().clone(), m.op().ctx().clone()).unwrap();
        let broken = AssocAlgebra::new(id, m.mul().clone(), m.unit().map(<[_]>::to_vec)).unwrap();
        assert!(!broken.check_assalgebra_compat().passed());
        assert!(matches!(broken.commutator(), Err(Error::CompatFailed(_))));
    }

    #[test]
    fn algebra_batteries() {
        for b in [corpus::mat2(), corpus::mat11(), corpus::exterior().algebra().clone()] {
            assert!(b.battery().passed(), "{:?}", b.battery());
        }
    }

    #[test]
    fn commutator_examples() {
        let gl2 = corpus::mat2().commutator().unwrap();
        assert!(gl2.full_battery().passed());
        let zero = corpus::truncpoly().algebra().commutator().unwrap();
        assert!(zero.bracket().is_zero());
        let ext = corpus::exterior().algebra().commutator().unwrap();
        assert!(ext.full_battery().passed());
        // [x, x] = x·x - (-1)·x·x = 2x² = 0
        assert!(ext.bracket_of(1, 1).iter().all(Zero::is_zero));
    }

    #[test]
    fn hom_deform_examples() {
        let sl2 = corpus::sl2();
        let same = hom_deform(&sl2, &RatMatrix::identity(3)).unwrap();
        assert_eq!(same.bracket(), sl2.bracket());
        assert_eq!(same.lambda(), sl2.lambda());
        assert!(check_hom_jacobi(&same).unwrap().passed());

        let deformed = hom_deform(&sl2, &corpus::sl2_alpha(rat(2))).unwrap();
        assert!(check_hom_jacobi(&deformed).unwrap().passed());
        assert!(deformed.full_battery().passed(), "{:?}", deformed.full_battery());

        let bad = RatMatrix::diag(&[rat(1), rat(2), rat(1)]);
        assert!(matches!(hom_deform(&sl2, &bad), Err(Error::NotLieMorphism(_))));
        let singular = RatMatrix::diag(&[rat(1), rat(0), rat(1)]);
        assert_eq!(hom_deform(&sl2, &singular), Err(Error::SingularAlpha));
    }

    #[test]
    fn primitives_examples() {
        let (basis, p) = corpus::truncpoly().primitives().unwrap();
        assert_eq!(basis, vec![vec![rat(0), rat(1)]]);
        assert!(p.bracket().is_zero());
        assert!(p.full_battery().passed());

        let (basis, p) = corpus::group_algebra_z2().primitives().unwrap();
        assert!(basis.is_empty());
        assert_eq!(p.dim(), 0);
        assert!(p.full_battery().passed());

        let (basis, p) = corpus::exterior().primitives().unwrap();
        assert_eq!(basis, vec![vec![rat(0), rat(1)]]);
        assert_eq!(p.object().graded().degrees(), &[vec![1]]);
        assert!(p.full_battery().passed());
    }

    #[test]
    fn bialgebra_batteries() {
        let ext = corpus::exterior().battery();
        assert!(ext.passed());
        assert_eq!(ext.status("comul_multiplicative"), Some(Status::Pass));
        assert!(corpus::group_algebra_z2().battery().passed());
        // Δ(x)² = 2 x⊗x ≠ Δ(x²) over Q with the plain flip
        let tp = corpus::truncpoly().battery();
        assert!(tp.passed());
        assert_eq!(tp.status("comul_multiplicative"), Some(Status::Fail));
    }

    #[test]
    fn primitives_not_closed_under_bracket() {
        // E12 and E21 primitive, E11 and E22 grouplike: [E12, E21] = E11 - E22 escapes
        let m = corpus::mat2();
        let mut comul = RatMatrix::zeros(16, 4);
        let unit_idx = [0, 3];
        for v in [1usize, 2] {
            for u in unit_idx {
                comul.set(v * 4 + u, v, rat(1));
                comul.set(u * 4 + v, v, rat(1));
            }
        }
        for g in unit_idx {
            comul.set(g * 4 + g, g, rat(1));
        }
        let b = BialgebraData::new(m, comul, vec![rat(1), rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(b.primitives().unwrap_err(), Error::NotClosedUnderBracket);
    }

    #[test]
    fn primitives_lambda_must_restrict() {
        // zero multiplication, λ swapping e0⊗e0 and e1⊗e1
        let obj = GradedObject::plain(2);
        let lambda = RatMatrix::permutation(&[3, 1, 2, 0]);
        let op = YBOperator::new(obj, lambda, crate::MonoidalContext::Strict).unwrap();
        let alg = AssocAlgebra::new(op, RatMatrix::zeros(2, 4), Some(vec![rat(1), rat(0)])).unwrap();
        let comul = RatMatrix::from_ints(4, 2, &[1, 0, 0, 1, 0, 1, 0, 0]);
        let b = BialgebraData::new(alg, comul, vec![rat(1), rat(0)]).unwrap();
        assert_eq!(b.primitives().unwrap_err(), Error::LambdaDoesNotRestrict);
    }
}
