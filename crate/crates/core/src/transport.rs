//! Non-unital monoidal functors, given extensionally by the images of the
//! finitely many objects and morphisms a YB-Lie algebra `L` needs, and the
//! transport of `(L, λ, [-,-])` along them.
//!
//! `Ψ_{X,Y}: FX ⊗ FY -> F(X⊗Y)` is stored for the three pairs `(L, L)`,
//! `(L⊗L, L)` and `(L, L⊗L)`. Monoidality is checked in the form
//!
//! ```text
//! F(a) ∘ Ψ_{LL,L} ∘ (Ψ_{L,L} ⊗ FL) = Ψ_{L,LL} ∘ (FL ⊗ Ψ_{L,L}) ∘ a'
//! ```
//!
//! where `a'` is the target associator on `FL` and `F(a)` is supplied as
//! [`FunctorData::f_assoc`]; both are identities for strict categories.

use crate::context::{CategoryObject, GradedObject, HomObject, MonoidalContext};
use crate::error::Error;
use crate::lie::YBLieAlgebra;
use crate::matrix::{LinalgError, RatMatrix};
use crate::verdict::{CheckLine, Report, Verdict, Witness};
use crate::yangbaxter::YBOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorData {
    pub target_ctx: MonoidalContext,
    pub fl: CategoryObject,
    pub f_ll: GradedObject,
    /// `F((L⊗L)⊗L)`, identified with `F(L⊗(L⊗L))` through `f_assoc`.
    pub f_lll: GradedObject,
    pub f_bracket: RatMatrix,
    pub f_lambda: RatMatrix,
    pub psi_ll: RatMatrix,
    pub psi_ll_l: RatMatrix,
    pub psi_l_ll: RatMatrix,
    /// `F(t)` on `F(L⊗(L⊗L))`.
    pub f_t: RatMatrix,
    pub f_w: RatMatrix,
    /// `F(a_{L,L,L})`.
    pub f_assoc: RatMatrix,
}

/// Outcome of [`check_lemma2`]: one verdict per identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2 {
    pub t: Verdict,
    pub w: Verdict,
}

impl Lemma2 {
    pub fn passed(&self) -> bool {
        self.t.passed() && self.w.passed()
    }
}

fn expect_shape(name: &str, m: &RatMatrix, rows: usize, cols: usize) -> Result<(), Error> {
    if m.shape() == (rows, cols) {
        Ok(())
    } else {
        Err(Error::Shape(format!("{name} is {:?}, expected {rows}x{cols}", m.shape())))
    }
}

impl FunctorData {
    pub fn check_shapes(&self) -> Result<(), Error> {
        self.target_ctx.admits(&self.fl)?;
        let n = self.fl.dim();
        let n2 = self.f_ll.dim();
        let n3 = self.f_lll.dim();
        expect_shape("f_bracket", &self.f_bracket, n, n2)?;
        expect_shape("f_lambda", &self.f_lambda, n2, n2)?;
        expect_shape("psi_ll", &self.psi_ll, n2, n * n)?;
        expect_shape("psi_ll_l", &self.psi_ll_l, n3, n2 * n)?;
        expect_shape("psi_l_ll", &self.psi_l_ll, n3, n * n2)?;
        expect_shape("f_t", &self.f_t, n3, n3)?;
        expect_shape("f_w", &self.f_w, n3, n3)?;
        expect_shape("f_assoc", &self.f_assoc, n3, n3)?;
        Ok(())
    }

    fn target_assoc(&self) -> Result<RatMatrix, Error> {
        self.target_ctx.associator(&self.fl, &self.fl, &self.fl)
    }

    /// `Ψ_{L,LL} ∘ (FL ⊗ Ψ_{L,L})`, the comparison map `FL⊗(FL⊗FL) -> F(L⊗(L⊗L))`.
    pub fn psi_three(&self) -> Result<RatMatrix, Error> {
        let id = RatMatrix::identity(self.fl.dim());
        Ok(self.psi_l_ll.mul(&id.kron(&self.psi_ll))?)
    }

    pub fn check_monoidality(&self) -> Result<Verdict, Error> {
        self.check_shapes()?;
        let id = RatMatrix::identity(self.fl.dim());
        let lhs = RatMatrix::chain(&[&self.f_assoc, &self.psi_ll_l, &self.psi_ll.kron(&id)])?;
        let rhs = self.psi_three()?.mul(&self.target_assoc()?)?;
        Verdict::compare(&lhs, &rhs)
    }

    /// The unique `λ'` with `Ψ_{L,L} ∘ λ' = F(λ) ∘ Ψ_{L,L}`.
    pub fn recover_lambda_prime(&self) -> Result<RatMatrix, Error> {
        self.check_shapes()?;
        let rhs = self.f_lambda.mul(&self.psi_ll)?;
        Ok(self.psi_ll.solve_through_mono(&rhs)?)
    }

    pub fn lambda_prime_operator(&self, lambda_prime: RatMatrix) -> Result<YBOperator, Error> {
        YBOperator::new(self.fl.clone(), lambda_prime, self.target_ctx.clone())
    }

    /// `Ψ₃ ∘ t_{λ'} = F(t) ∘ Ψ₃` and the same for `w`, with
    /// `Ψ₃ = Ψ_{L,LL} ∘ (FL ⊗ Ψ_{L,L})`.
    pub fn check_lemma2(&self, lambda_prime: &RatMatrix) -> Result<Lemma2, Error> {
        self.check_shapes()?;
        let op = self.lambda_prime_operator(lambda_prime.clone())?;
        let psi3 = self.psi_three()?;
        let side = |derived: &RatMatrix, image: &RatMatrix| -> Result<Verdict, Error> {
            Verdict::compare(&psi3.mul(derived)?, &image.mul(&psi3)?)
        };
        Ok(Lemma2 {
            t: side(op.t_of(), &self.f_t)?,
            w: side(op.w_of(), &self.f_w)?,
        })
    }

    /// `(FL, λ', F([-,-]) ∘ Ψ_{L,L})`. Fails when the square does not commute
    /// or `λ'` cannot be recovered.
    pub fn transport(&self) -> Result<YBLieAlgebra, Error> {
        if let Verdict::Fail(w) = self.check_monoidality()? {
            return Err(Error::NotMonoidal(w));
        }
        let op = self.lambda_prime_operator(self.recover_lambda_prime()?)?;
        YBLieAlgebra::new(op, self.f_bracket.mul(&self.psi_ll)?)
    }

    /// Transport between symmetric contexts with `λ'` taken to be the target
    /// symmetry instead of being solved for.
    pub fn transport_symmetric(&self) -> Result<YBLieAlgebra, Error> {
        if let Verdict::Fail(w) = self.check_monoidality()? {
            return Err(Error::NotMonoidal(w));
        }
        let g = self.fl.graded();
        let op = self.lambda_prime_operator(self.target_ctx.symmetry(g, g)?)?;
        YBLieAlgebra::new(op, self.f_bracket.mul(&self.psi_ll)?)
    }

    /// Every functor check, then the transported algebra's battery under a
    /// `transport.` prefix. Lines that depend on an earlier failure are skipped.
    pub fn battery(&self) -> Report {
        let mut r = Report::default();
        if let Err(e) = self.check_shapes() {
            r.push(CheckLine::failed("shapes", e.to_string()));
            return r;
        }
        let n = self.fl.dim();
        let monoidal = match self.check_monoidality() {
            Ok(v) => {
                let ok = v.passed();
                r.push(CheckLine::from_verdict("monoidality", true, v).with_columns(n, 3));
                ok
            }
            Err(e) => {
                r.push(CheckLine::failed("monoidality", e.to_string()));
                false
            }
        };
        let lambda_prime = match self.recover_lambda_prime() {
            Ok(m) => {
                r.push(CheckLine::from_verdict("lambda_prime", true, Verdict::Pass));
                Some(m)
            }
            Err(e) => {
                let mut line = CheckLine::failed("lambda_prime", e.to_string());
                if let Error::Linalg(LinalgError::Inconsistent { row, col, found, expected }) = e {
                    line.witness = Some(Witness { row, col, lhs: found, rhs: expected });
                    line = line.with_columns(n, 2);
                }
                r.push(line);
                None
            }
        };
        let Some(lp) = lambda_prime else {
            for axiom in ["lambda_prime.self_inverse", "lambda_prime.yang_baxter", "lemma2_t", "lemma2_w", "transport"] {
                r.push(CheckLine::skipped(axiom, "lambda_prime unavailable"));
            }
            return r;
        };
        match self.lambda_prime_operator(lp.clone()) {
            Ok(op) => {
                let yb = op.battery();
                for line in yb.lines.into_iter().filter(|l| l.required) {
                    let mut line = line;
                    line.axiom = format!("lambda_prime.{}", line.axiom);
                    r.push(line);
                }
            }
            Err(e) => r.push(CheckLine::failed("lambda_prime.operator", e.to_string())),
        }
        match self.check_lemma2(&lp) {
            Ok(l2) => {
                r.push(CheckLine::from_verdict("lemma2_t", true, l2.t).with_columns(n, 3));
                r.push(CheckLine::from_verdict("lemma2_w", true, l2.w).with_columns(n, 3));
            }
            Err(e) => {
                r.push(CheckLine::failed("lemma2_t", e.to_string()));
                r.push(CheckLine::failed("lemma2_w", e.to_string()));
            }
        }
        if !monoidal {
            r.push(CheckLine::skipped("transport", "functor is not monoidal"));
            return r;
        }
        match self.transport() {
            Ok(alg) => r.extend_prefixed("transport.", alg.full_battery()),
            Err(e) => r.push(CheckLine::failed("transport", e.to_string())),
        }
        r
    }
}

pub fn check_monoidality(f: &FunctorData) -> Result<Verdict, Error> {
    f.check_monoidality()
}

pub fn recover_lambda_prime(f: &FunctorData) -> Result<RatMatrix, Error> {
    f.recover_lambda_prime()
}

pub fn check_lemma2(f: &FunctorData, lambda_prime: &RatMatrix) -> Result<Lemma2, Error> {
    f.check_lemma2(lambda_prime)
}

pub fn transport(f: &FunctorData) -> Result<YBLieAlgebra, Error> {
    f.transport()
}

/// The identity functor on the context of `source`.
pub fn make_identity_functor(source: &YBLieAlgebra) -> FunctorData {
    let op = source.op();
    let g = source.object().graded();
    let gg = g.tensor(g).expect("same group");
    let ggg = gg.tensor(g).expect("same group");
    let (n2, n3) = (gg.dim(), ggg.dim());
    FunctorData {
        target_ctx: source.ctx().clone(),
        fl: source.object().clone(),
        f_ll: gg,
        f_lll: ggg,
        f_bracket: source.bracket().clone(),
        f_lambda: source.lambda().clone(),
        psi_ll: RatMatrix::identity(n2),
        psi_ll_l: RatMatrix::identity(n3),
        psi_l_ll: RatMatrix::identity(n3),
        f_t: op.t_of().clone(),
        f_w: op.w_of().clone(),
        f_assoc: op.associator().clone(),
    }
}

/// The isomorphism from the Hom-category to its deformation, applied to
/// `(L, α)`: objects and morphisms are unchanged and `Ψ_{M,N} = μ ⊗ ν`.
pub fn make_hom_iso_functor(source: &YBLieAlgebra, alpha: &RatMatrix) -> Result<FunctorData, Error> {
    let ctx = source.ctx();
    if ctx.is_deformed() {
        return Err(Error::UnsupportedContext("source already lives in a deformed context"));
    }
    let d = source.dim();
    if alpha.shape() != (d, d) {
        return Err(Error::Shape(format!("alpha is {:?}, expected {d}x{d}", alpha.shape())));
    }
    if alpha.inverse().is_err() {
        return Err(Error::SingularAlpha);
    }
    let b = source.bracket();
    if let Verdict::Fail(w) = Verdict::compare(&alpha.mul(b)?, &b.mul(&alpha.kron(alpha))?)? {
        return Err(Error::NotLieMorphism(w));
    }
    let g = source.object().graded();
    let gg = g.tensor(g)?;
    let ggg = gg.tensor(g)?;
    let aa = alpha.kron(alpha);
    let aaa = aa.kron(alpha);
    let op = source.op();
    Ok(FunctorData {
        target_ctx: ctx.deformed(),
        fl: HomObject::new(g.clone(), alpha.clone())?.into(),
        f_ll: gg,
        f_lll: ggg,
        f_bracket: b.clone(),
        f_lambda: source.lambda().clone(),
        psi_ll: aa,
        psi_ll_l: aaa.clone(),
        psi_l_ll: aaa,
        f_t: op.t_of().clone(),
        f_w: op.w_of().clone(),
        f_assoc: op.associator().clone(),
    })
}

/// Forgets the grading: the target is the strict context on the underlying
/// plain space and every `Ψ` is an identity.
pub fn make_forgetful_functor(source: &YBLieAlgebra) -> Result<FunctorData, Error> {
    if source.ctx().is_deformed() {
        return Err(Error::UnsupportedContext("forgetful functor needs an undeformed source"));
    }
    let d = source.dim();
    let (n2, n3) = (d * d, d * d * d);
    let op = source.op();
    Ok(FunctorData {
        target_ctx: MonoidalContext::Strict,
        fl: GradedObject::plain(d).into(),
        f_ll: GradedObject::plain(n2),
        f_lll: GradedObject::plain(n3),
        f_bracket: source.bracket().clone(),
        f_lambda: source.lambda().clone(),
        psi_ll: RatMatrix::identity(n2),
        psi_ll_l: RatMatrix::identity(n3),
        psi_l_ll: RatMatrix::identity(n3),
        f_t: op.t_of().clone(),
        f_w: op.w_of().clone(),
        f_assoc: op.associator().clone(),
    })
}

/// A one-dimensional image whose `F(λ)` moves `Ψ_{L,L}` out of its own
/// image, so no `λ'` exists.
pub fn inconsistent_functor() -> FunctorData {
    FunctorData {
        target_ctx: MonoidalContext::Strict,
        fl: GradedObject::plain(1).into(),
        f_ll: GradedObject::plain(2),
        f_lll: GradedObject::plain(2),
        f_bracket: RatMatrix::zeros(1, 2),
        f_lambda: RatMatrix::from_ints(2, 2, &[0, 1, 1, 0]),
        psi_ll: RatMatrix::from_ints(2, 1, &[1, 0]),
        psi_ll_l: RatMatrix::identity(2),
        psi_l_ll: RatMatrix::identity(2),
        f_t: RatMatrix::identity(2),
        f_w: RatMatrix::identity(2),
        f_assoc: RatMatrix::identity(2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::hom_deform;
    use crate::corpus;
    use crate::rational::{rat, ratio};
    use crate::verdict::Status;

    fn alphas() -> Vec<RatMatrix> {
        [rat(2), rat(3), ratio(1, 2)]
            .into_iter()
            .map(corpus::sl2_alpha)
            .collect()
    }

    #[test]
    fn identity_functor() {
        let sl2 = corpus::sl2();
        let f = make_identity_functor(&sl2);
        assert!(f.check_monoidality().unwrap().passed());
        let lp = f.recover_lambda_prime().unwrap();
        assert_eq!(&lp, sl2.lambda());
        let l2 = f.check_lemma2(&lp).unwrap();
        assert!(l2.passed());
        assert_eq!(f.transport().unwrap(), sl2);
        assert!(f.battery().passed(), "{:?}", f.battery());
    }

    #[test]
    fn hom_iso_with_identity_alpha_is_identity_data() {
        let sl2 = corpus::sl2();
        let f = make_hom_iso_functor(&sl2, &RatMatrix::identity(3)).unwrap();
        let id = make_identity_functor(&sl2);
        assert_eq!(f.psi_ll, id.psi_ll);
        assert_eq!(f.psi_ll_l, id.psi_ll_l);
        assert_eq!(f.psi_l_ll, id.psi_l_ll);
        assert_eq!(f.f_t, id.f_t);
        assert_eq!(f.f_w, id.f_w);
    }

    #[test]
    fn hom_iso_functor_transport() {
        let sl2 = corpus::sl2();
        for alpha in alphas() {
            let f = make_hom_iso_functor(&sl2, &alpha).unwrap();
            assert!(f.check_monoidality().unwrap().passed());
            let lp = f.recover_lambda_prime().unwrap();
            // closed form (α⊗α)⁻¹ ∘ flip ∘ (α⊗α)
            let aa = alpha.kron(&alpha);
            let closed = RatMatrix::chain(&[&aa.inverse().unwrap(), sl2.lambda(), &aa]).unwrap();
            assert_eq!(lp, closed);
            assert!(f.lambda_prime_operator(lp.clone()).unwrap().battery().passed());
            assert!(f.check_lemma2(&lp).unwrap().passed());
            let out = f.transport().unwrap();
            assert_eq!(out, hom_deform(&sl2, &alpha).unwrap());
            assert!(out.full_battery().passed());
            assert!(f.battery().passed(), "{:?}", f.battery().failures());
        }
    }

    #[test]
    fn hom_iso_needs_the_deformed_associator() {
        // without a' the square compares α⊗α²⊗α² against α²⊗α²⊗α
        let f = make_hom_iso_functor(&corpus::sl2(), &alphas()[0]).unwrap();
        let id = RatMatrix::identity(3);
        let lhs = f.psi_ll_l.mul(&f.psi_ll.kron(&id)).unwrap();
        let rhs = f.psi_three().unwrap();
        assert!(!Verdict::compare(&lhs, &rhs).unwrap().passed());
    }

    #[test]
    fn hom_iso_rejects_bad_alpha() {
        let sl2 = corpus::sl2();
        assert!(matches!(
            make_hom_iso_functor(&sl2, &RatMatrix::zeros(3, 3)),
            Err(Error::SingularAlpha)
        ));
        let not_auto = RatMatrix::diag(&[rat(2), rat(1), rat(1)]);
        assert!(matches!(
            make_hom_iso_functor(&sl2, &not_auto),
            Err(Error::NotLieMorphism(_))
        ));
    }

    #[test]
    fn forgetful_functor_on_gl11() {
        let gl11 = corpus::gl11();
        let f = make_forgetful_functor(&gl11).unwrap();
        assert!(f.check_monoidality().unwrap().passed());
        let lp = f.recover_lambda_prime().unwrap();
        assert_eq!(&lp, gl11.lambda());
        assert!(f.check_lemma2(&lp).unwrap().passed());
        let out = f.transport().unwrap();
        assert_eq!(out.ctx(), &MonoidalContext::Strict);
        assert!(out.full_battery().passed());
        assert!(f.battery().passed());
    }

    #[test]
    fn broken_square() {
        let mut f = make_identity_functor(&corpus::sl2());
        f.psi_ll_l = f.psi_ll_l.scale(&rat(2));
        let v = f.check_monoidality().unwrap();
        assert!(!v.passed());
        assert!(matches!(f.transport(), Err(Error::NotMonoidal(_))));
    }

    #[test]
    fn swapped_images_break_lemma2() {
        let mut f = make_identity_functor(&corpus::sl2());
        f.f_t = f.f_w.clone();
        let lp = f.recover_lambda_prime().unwrap();
        let l2 = f.check_lemma2(&lp).unwrap();
        assert!(!l2.t.passed());
        assert!(l2.w.passed());
    }

    #[test]
    fn inconsistent_lambda() {
        let f = inconsistent_functor();
        assert!(f.check_monoidality().unwrap().passed());
        assert!(matches!(
            f.recover_lambda_prime(),
            Err(Error::Linalg(LinalgError::Inconsistent { .. }))
        ));
        let r = f.battery();
        assert_eq!(r.failures(), vec!["lambda_prime"]);
        assert!(r.line("lambda_prime").unwrap().witness.is_some());
        assert_eq!(r.status("lemma2_t"), Some(Status::Skipped));
    }

    #[test]
    fn antisymmetry_proof_chain() {
        let sl2 = corpus::sl2();
        for alpha in alphas() {
            let f = make_hom_iso_functor(&sl2, &alpha).unwrap();
            let lp = f.recover_lambda_prime().unwrap();
            let b1 = f.f_bracket.mul(&f.psi_ll).unwrap();
            // [-,-]'∘λ' = F[-,-]∘Ψ∘λ' = F[-,-]∘Fλ∘Ψ = F([-,-]∘λ)∘Ψ = -[-,-]'
            let s1 = b1.mul(&lp).unwrap();
            let s2 = RatMatrix::chain(&[&f.f_bracket, &f.psi_ll, &lp]).unwrap();
            let s3 = RatMatrix::chain(&[&f.f_bracket, &f.f_lambda, &f.psi_ll]).unwrap();
            let s4 = sl2.bracket().mul(sl2.lambda()).unwrap().mul(&f.psi_ll).unwrap();
            assert_eq!(s1, s2);
            assert_eq!(s2, s3);
            assert_eq!(s3, s4);
            assert_eq!(s4, b1.neg());
        }
    }

    #[test]
    fn symmetric_transport_keeps_the_symmetry() {
        let gl11 = corpus::gl11();
        let f = make_forgetful_functor(&gl11).unwrap();
        // target symmetry is the plain flip, which is not λ' here
        let plain = f.transport_symmetric().unwrap();
        assert!(!plain.full_battery().passed());
        let sl2 = corpus::sl2();
        for alpha in alphas() {
            let f = make_hom_iso_functor(&sl2, &alpha).unwrap();
            let out = f.transport_symmetric().unwrap();
            assert_eq!(out, f.transport().unwrap());
            assert!(out.full_battery().passed());
        }
    }
}
