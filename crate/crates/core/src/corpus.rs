//! Named example structures: classical and super Lie algebras, small
//! associative algebras and bialgebras, and deliberately broken variants.

use std::collections::BTreeMap;

use crate::constructions::{hom_deform, AssocAlgebra, BialgebraData};
use crate::context::{FiniteAbelianGroup, GradedObject, HomObject, MonoidalContext};
use crate::lie::YBLieAlgebra;
use crate::matrix::{flip_matrix, RatMatrix};
use crate::rational::{rat, Rational};
use crate::yangbaxter::{symmetry_as_yb, YBOperator};

fn constants(d: usize, table: &[(usize, usize, usize, i64)]) -> YBLieAlgebra {
    let mut c: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
    for &(i, j, k, v) in table {
        c.entry((i, j)).or_insert_with(|| vec![rat(0); d])[k] += rat(v);
        c.entry((j, i)).or_insert_with(|| vec![rat(0); d])[k] -= rat(v);
    }
    YBLieAlgebra::from_structure_constants(d, &c).expect("valid table")
}

/// `sl₂` on the basis `(e, h, f)`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
pub fn sl2() -> YBLieAlgebra {
    constants(3, &[(0, 2, 1, 1), (1, 0, 0, 2), (1, 2, 2, -2)])
}

/// `sl₂` with `[h,e] = 3e`; antisymmetric but not Jacobi.
pub fn sl2_broken() -> YBLieAlgebra {
    constants(3, &[(0, 2, 1, 1), (1, 0, 0, 3), (1, 2, 2, -2)])
}

/// `[e₀, e₁] = e₂`
pub fn heisenberg() -> YBLieAlgebra {
    constants(3, &[(0, 1, 2, 1)])
}

/// `α = diag(q², 1, q⁻²)`, an automorphism of [`sl2`].
pub fn sl2_alpha(q: Rational) -> RatMatrix {
    let q2 = &q * &q;
    RatMatrix::diag(&[q2.clone(), rat(1), q2.recip()])
}

pub fn sl2_hom_deformed(q: Rational) -> YBLieAlgebra {
    hom_deform(&sl2(), &sl2_alpha(q)).expect("diag(q², 1, q⁻²) is an automorphism")
}

/// `[-,-] ∘ (α⊗α)` on `(L, α)` for `α = diag(2, 1, 1)`, which is not an
/// automorphism of [`sl2`]; the twisted bracket is not α-equivariant.
pub fn sl2_hom_nonauto() -> YBLieAlgebra {
    let alpha = RatMatrix::diag(&[rat(2), rat(1), rat(1)]);
    let base = sl2();
    let bracket = base.bracket().mul(&alpha.kron(&alpha)).expect("shapes");
    let object = HomObject::new(GradedObject::plain(3), alpha).expect("invertible");
    let op = YBOperator::new(object, base.lambda().clone(), MonoidalContext::Strict.deformed())
        .expect("Hom object in the deformed context");
    YBLieAlgebra::new(op, bracket).expect("shapes")
}

/// Multiplication of matrix units `E_ab E_cd = δ_bc E_ad`, `E_ab` at index `2a + b`.
fn matrix_unit_mul() -> RatMatrix {
    let mut m = RatMatrix::zeros(4, 16);
    for a in 0..2 {
        for b in 0..2 {
            for d in 0..2 {
                m.set(2 * a + d, (2 * a + b) * 4 + (2 * b + d), rat(1));
            }
        }
    }
    m
}

/// The 2x2 matrix algebra with the flip.
pub fn mat2() -> AssocAlgebra {
    let op = YBOperator::new(GradedObject::plain(4), flip_matrix(4, 4), MonoidalContext::Strict)
        .expect("flip on a plain space");
    AssocAlgebra::new(op, matrix_unit_mul(), Some(ints(&[1, 0, 0, 1]))).expect("shapes")
}

/// `M(1|1)`: matrix units with `E₁₂`, `E₂₁` odd, and the signed flip.
pub fn mat11() -> AssocAlgebra {
    let ctx = MonoidalContext::super_vect();
    let obj = GradedObject::new(
        FiniteAbelianGroup::z2(),
        vec![vec![0], vec![1], vec![1], vec![0]],
    )
    .expect("Z2 degrees");
    let op = symmetry_as_yb(&ctx, obj).expect("super context is symmetric");
    AssocAlgebra::new(op, matrix_unit_mul(), Some(ints(&[1, 0, 0, 1]))).expect("shapes")
}

/// `gl(1|1)` as the super-commutator algebra of [`mat11`].
pub fn gl11() -> YBLieAlgebra {
    mat11().commutator().expect("M(1|1) satisfies the compatibility identities")
}

/// `1, x` with `x² = 0`: the multiplication table shared by `Q[x]/(x²)` and `Λ(x)`.
fn dual_numbers_mul() -> RatMatrix {
    RatMatrix::from_ints(2, 4, &[1, 0, 0, 0, 0, 1, 1, 0])
}

/// `Δ1 = 1⊗1`, `Δx = x⊗1 + 1⊗x`
fn primitive_x_comul() -> RatMatrix {
    RatMatrix::from_ints(4, 2, &[1, 0, 0, 1, 0, 1, 0, 0])
}

/// `Q[x]/(x²)` with the flip and `x` primitive.
pub fn truncpoly() -> BialgebraData {
    let op = YBOperator::new(GradedObject::plain(2), flip_matrix(2, 2), MonoidalContext::Strict)
        .expect("flip on a plain space");
    let alg = AssocAlgebra::new(op, dual_numbers_mul(), Some(ints(&[1, 0]))).expect("shapes");
    BialgebraData::new(alg, primitive_x_comul(), ints(&[1, 0])).expect("shapes")
}

/// `Λ(x)` with `x` odd and primitive, in super vector spaces.
pub fn exterior() -> BialgebraData {
    let op = symmetry_as_yb(&MonoidalContext::super_vect(), GradedObject::super_space(1, 1))
        .expect("super context is symmetric");
    let alg = AssocAlgebra::new(op, dual_numbers_mul(), Some(ints(&[1, 0]))).expect("shapes");
    BialgebraData::new(alg, primitive_x_comul(), ints(&[1, 0])).expect("shapes")
}

/// The group algebra `Q[Z₂]` on `1, g` with `g` grouplike.
pub fn group_algebra_z2() -> BialgebraData {
    let op = YBOperator::new(GradedObject::plain(2), flip_matrix(2, 2), MonoidalContext::Strict)
        .expect("flip on a plain space");
    let mul = RatMatrix::from_ints(2, 4, &[1, 0, 0, 1, 0, 1, 1, 0]);
    let alg = AssocAlgebra::new(op, mul, Some(ints(&[1, 0]))).expect("shapes");
    let comul = RatMatrix::from_ints(4, 2, &[1, 0, 0, 0, 0, 0, 0, 1]);
    BialgebraData::new(alg, comul, ints(&[1, 1])).expect("shapes")
}

/// `2 · flip` on a 2-dimensional space: not self-inverse.
pub fn scaled_yb() -> YBOperator {
    YBOperator::new(
        GradedObject::plain(2),
        flip_matrix(2, 2).scale(&rat(2)),
        MonoidalContext::Strict,
    )
    .expect("shapes")
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}
