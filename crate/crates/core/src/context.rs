//! The ambient monoidal categories: finite-dimensional vector spaces graded
//! by a finite abelian group, strictified by index flattening.
//!
//! A [`MonoidalContext`] supplies associator, unit constraints and symmetry
//! matrices. Only the Hom-deformed context has a non-trivial associator,
//! `ã = μ ⊗ id ⊗ π⁻¹`, and unit constraints `l̃ = r̃ = μ`.

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::rational::{self, Rational};

pub type GroupElement = Vec<u32>;

/// `Z_{n₁} × … × Z_{nₖ}`; the empty product is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteAbelianGroup {
    factor_orders: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(factor_orders: Vec<u32>) -> Result<Self, Error> {
        if factor_orders.contains(&0) {
            return Err(Error::InvalidElement {
                element: Vec::new(),
                orders: factor_orders,
            });
        }
        Ok(Self { factor_orders })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn z2() -> Self {
        Self {
            factor_orders: vec![2],
        }
    }

    pub fn factor_orders(&self) -> &[u32] {
        &self.factor_orders
    }

    pub fn order(&self) -> usize {
        self.factor_orders.iter().map(|&n| n as usize).product()
    }

    pub fn zero(&self) -> GroupElement {
        vec![0; self.factor_orders.len()]
    }

    pub fn contains(&self, g: &[u32]) -> bool {
        g.len() == self.factor_orders.len()
            && g.iter().zip(&self.factor_orders).all(|(x, n)| x < n)
    }

    pub fn validate(&self, g: &[u32]) -> Result<(), Error> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::InvalidElement {
                element: g.to_vec(),
                orders: self.factor_orders.clone(),
            })
        }
    }

    pub fn add(&self, g: &[u32], h: &[u32]) -> GroupElement {
        g.iter()
            .zip(h)
            .zip(&self.factor_orders)
            .map(|((a, b), n)| (a + b) % n)
            .collect()
    }

    pub fn neg(&self, g: &[u32]) -> GroupElement {
        g.iter()
            .zip(&self.factor_orders)
            .map(|(a, n)| (n - a) % n)
            .collect()
    }

    /// Position of `g` in the lexicographic enumeration of [`Self::elements`].
    pub fn index_of(&self, g: &[u32]) -> usize {
        g.iter()
            .zip(&self.factor_orders)
            .fold(0, |acc, (&x, &n)| acc * n as usize + x as usize)
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order())
            .map(|mut k| {
                let mut g = vec![0; self.factor_orders.len()];
                for (slot, &n) in g.iter_mut().zip(&self.factor_orders).rev() {
                    *slot = (k % n as usize) as u32;
                    k /= n as usize;
                }
                g
            })
            .collect()
    }
}

/// A `±1`-valued bicharacter `χ` with `χ(g,h)·χ(h,g) = 1`, i.e. one that
/// induces a symmetric (not merely braided) category.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bicharacter {
    group: FiniteAbelianGroup,
    /// `values[index_of(g) * order + index_of(h)]`
    values: Vec<i8>,
}

impl Bicharacter {
    pub fn trivial(group: FiniteAbelianGroup) -> Self {
        let n = group.order();
        Self {
            group,
            values: vec![1; n * n],
        }
    }

    /// The Koszul sign rule on `Z₂`: `χ(1,1) = -1`.
    pub fn super_sign() -> Self {
        Self {
            group: FiniteAbelianGroup::z2(),
            values: vec![1, 1, 1, -1],
        }
    }

    /// From a full table over the lexicographic element enumeration.
    pub fn from_table(group: FiniteAbelianGroup, table: Vec<Vec<i8>>) -> Result<Self, Error> {
        let n = group.order();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBicharacter(format!(
                "table must be {n}x{n}"
            )));
        }
        let chi = Self {
            group,
            values: table.into_iter().flatten().collect(),
        };
        chi.validate()?;
        Ok(chi)
    }

    /// `χ(g,h) = ∏ s_ab^(g_a h_b)` from signs on pairs of cyclic generators.
    pub fn from_generator_signs(
        group: FiniteAbelianGroup,
        signs: &[Vec<i8>],
    ) -> Result<Self, Error> {
        let k = group.factor_orders().len();
        if signs.len() != k || signs.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidBicharacter(format!(
                "generator sign table must be {k}x{k}"
            )));
        }
        let elems = group.elements();
        let mut values = Vec::with_capacity(elems.len() * elems.len());
        for g in &elems {
            for h in &elems {
                let mut v = 1i8;
                for a in 0..k {
                    for b in 0..k {
                        if signs[a][b] == -1 && (g[a] * h[b]) % 2 == 1 {
                            v = -v;
                        }
                    }
                }
                values.push(v);
            }
        }
        let chi = Self { group, values };
        chi.validate()?;
        Ok(chi)
    }

    fn validate(&self) -> Result<(), Error> {
        let elems = self.group.elements();
        if self.values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidBicharacter("values must be ±1".into()));
        }
        for g in &elems {
            for h in &elems {
                if self.value(g, h) * self.value(h, g) != 1 {
                    return Err(Error::InvalidBicharacter(format!(
                        "χ({g:?},{h:?})·χ({h:?},{g:?}) != 1"
                    )));
                }
                for k in &elems {
                    let gk = self.group.add(g, k);
                    if self.value(&gk, h) != self.value(g, h) * self.value(k, h)
                        || self.value(h, &gk) != self.value(h, g) * self.value(h, k)
                    {
                        return Err(Error::InvalidBicharacter(format!(
                            "not bimultiplicative at {g:?}, {k:?}, {h:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn value(&self, g: &[u32], h: &[u32]) -> i8 {
        let n = self.group.order();
        self.values[self.group.index_of(g) * n + self.group.index_of(h)]
    }

    pub fn value_rational(&self, g: &[u32], h: &[u32]) -> Rational {
        rational::rat(self.value(g, h) as i64)
    }

    pub fn table(&self) -> Vec<Vec<i8>> {
        let n = self.group.order();
        self.values.chunks(n.max(1)).map(<[i8]>::to_vec).collect()
    }
}

/// A vector space with a degree attached to each basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedObject {
    group: FiniteAbelianGroup,
    degrees: Vec<GroupElement>,
}

impl GradedObject {
    pub fn new(group: FiniteAbelianGroup, degrees: Vec<GroupElement>) -> Result<Self, Error> {
        for g in &degrees {
            group.validate(g)?;
        }
        Ok(Self { group, degrees })
    }

    /// Ungraded space of the given dimension.
    pub fn plain(dim: usize) -> Self {
        Self {
            group: FiniteAbelianGroup::trivial(),
            degrees: vec![Vec::new(); dim],
        }
    }

    /// `k^{p|q}`: `even` vectors of degree 0 followed by `odd` of degree 1.
    pub fn super_space(even: usize, odd: usize) -> Self {
        let degrees = std::iter::repeat(vec![0])
            .take(even)
            .chain(std::iter::repeat(vec![1]).take(odd))
            .collect();
        Self {
            group: FiniteAbelianGroup::z2(),
            degrees,
        }
    }

    pub fn unit(group: FiniteAbelianGroup) -> Self {
        let zero = group.zero();
        Self {
            group,
            degrees: vec![zero],
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> &[u32] {
        &self.degrees[i]
    }

    /// Flattened tensor product; index `i * dim(y) + j` has degree `deg(i) + deg(j)`.
    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let degrees = self
            .degrees
            .iter()
            .flat_map(|g| other.degrees.iter().map(move |h| self.group.add(g, h)))
            .collect();
        Ok(Self {
            group: self.group.clone(),
            degrees,
        })
    }

    /// The same space with the grading forgotten.
    pub fn forget_grading(&self) -> Self {
        Self::plain(self.dim())
    }

    /// The graded dual: degrees negated.
    pub fn dual(&self) -> Self {
        Self {
            group: self.group.clone(),
            degrees: self.degrees.iter().map(|g| self.group.neg(g)).collect(),
        }
    }

    /// Checks that `m: self -> target` only connects basis vectors whose
    /// degrees satisfy `deg_target(row) = deg_self(col)`.
    pub fn check_degree_preserving(&self, target: &Self, m: &RatMatrix) -> Result<(), Error> {
        if self.group != target.group {
            return Err(Error::GroupMismatch);
        }
        if m.shape() != (target.dim(), self.dim()) {
            return Err(Error::Shape(format!(
                "map {:?} between objects of dims {} -> {}",
                m.shape(),
                self.dim(),
                target.dim()
            )));
        }
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !num_traits::Zero::is_zero(m.get(r, c)) && target.degree(r) != self.degree(c) {
                    return Err(Error::NotDegreePreserving { row: r, col: c });
                }
            }
        }
        Ok(())
    }
}

/// An object `(M, μ)` of the Hom-construction, `μ` an automorphism of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomObject {
    object: GradedObject,
    mu: RatMatrix,
    mu_inv: RatMatrix,
}

impl HomObject {
    pub fn new(object: GradedObject, mu: RatMatrix) -> Result<Self, Error> {
        if mu.shape() != (object.dim(), object.dim()) {
            return Err(Error::Shape(format!(
                "mu is {:?} on an object of dim {}",
                mu.shape(),
                object.dim()
            )));
        }
        object.check_degree_preserving(&object, &mu)?;
        let mu_inv = mu.inverse().map_err(|_| Error::SingularMu)?;
        Ok(Self {
            object,
            mu,
            mu_inv,
        })
    }

    pub fn object(&self) -> &GradedObject {
        &self.object
    }

    pub fn mu(&self) -> &RatMatrix {
        &self.mu
    }

    pub fn mu_inv(&self) -> &RatMatrix {
        &self.mu_inv
    }

    /// `(M, μ) ⊗ (N, ν) = (M ⊗ N, μ ⊗ ν)`
    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        Ok(Self {
            object: self.object.tensor(&other.object)?,
            mu: self.mu.kron(&other.mu),
            mu_inv: self.mu_inv.kron(&other.mu_inv),
        })
    }
}

/// An object of whichever category a structure lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CategoryObject {
    Graded(GradedObject),
    Hom(HomObject),
}

impl CategoryObject {
    pub fn graded(&self) -> &GradedObject {
        match self {
            CategoryObject::Graded(g) => g,
            CategoryObject::Hom(h) => h.object(),
        }
    }

    pub fn dim(&self) -> usize {
        self.graded().dim()
    }

    pub fn mu(&self) -> Option<&RatMatrix> {
        match self {
            CategoryObject::Graded(_) => None,
            CategoryObject::Hom(h) => Some(h.mu()),
        }
    }

    pub fn as_hom(&self) -> Option<&HomObject> {
        match self {
            CategoryObject::Graded(_) => None,
            CategoryObject::Hom(h) => Some(h),
        }
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (CategoryObject::Hom(a), CategoryObject::Hom(b)) => Ok(CategoryObject::Hom(a.tensor(b)?)),
            (a, b) => Ok(CategoryObject::Graded(a.graded().tensor(b.graded())?)),
        }
    }
}

impl From<GradedObject> for CategoryObject {
    fn from(g: GradedObject) -> Self {
        CategoryObject::Graded(g)
    }
}

impl From<HomObject> for CategoryObject {
    fn from(h: HomObject) -> Self {
        CategoryObject::Hom(h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonoidalContext {
    /// Plain vector spaces with the flip.
    Strict,
    /// Graded vector spaces with the signed flip of a bicharacter.
    Graded(Bicharacter),
    /// The deformed Hom-construction over `Strict` (`None`) or a graded base.
    HomDeformed(Option<Bicharacter>),
}

impl MonoidalContext {
    pub fn super_vect() -> Self {
        MonoidalContext::Graded(Bicharacter::super_sign())
    }

    pub fn bicharacter(&self) -> Option<&Bicharacter> {
        match self {
            MonoidalContext::Strict => None,
            MonoidalContext::Graded(chi) => Some(chi),
            MonoidalContext::HomDeformed(chi) => chi.as_ref(),
        }
    }

    pub fn is_deformed(&self) -> bool {
        matches!(self, MonoidalContext::HomDeformed(_))
    }

    /// The undeformed context the Hom-deformation is built over.
    pub fn undeformed(&self) -> MonoidalContext {
        match self {
            MonoidalContext::HomDeformed(Some(chi)) => MonoidalContext::Graded(chi.clone()),
            MonoidalContext::HomDeformed(None) => MonoidalContext::Strict,
            other => other.clone(),
        }
    }

    pub fn deformed(&self) -> MonoidalContext {
        MonoidalContext::HomDeformed(self.bicharacter().cloned())
    }

    fn check_group(&self, x: &GradedObject) -> Result<(), Error> {
        match self.bicharacter() {
            Some(chi) if chi.group() != x.group() => Err(Error::GroupMismatch),
            _ => Ok(()),
        }
    }

    /// Checks that `x` can live in this context.
    pub fn admits(&self, x: &CategoryObject) -> Result<(), Error> {
        self.check_group(x.graded())?;
        if self.is_deformed() && x.as_hom().is_none() {
            return Err(Error::NeedsHomObject);
        }
        Ok(())
    }

    pub fn tensor_object(&self, x: &GradedObject, y: &GradedObject) -> Result<GradedObject, Error> {
        self.check_group(x)?;
        self.check_group(y)?;
        x.tensor(y)
    }

    /// `a_{X,Y,Z}: (X⊗Y)⊗Z -> X⊗(Y⊗Z)` on the flattened space.
    pub fn associator(
        &self,
        x: &CategoryObject,
        y: &CategoryObject,
        z: &CategoryObject,
    ) -> Result<RatMatrix, Error> {
        for o in [x, y, z] {
            self.admits(o)?;
        }
        match self {
            MonoidalContext::Strict | MonoidalContext::Graded(_) => {
                Ok(RatMatrix::identity(x.dim() * y.dim() * z.dim()))
            }
            MonoidalContext::HomDeformed(_) => {
                let (hx, hz) = match (x.as_hom(), z.as_hom()) {
                    (Some(a), Some(c)) => (a, c),
                    _ => return Err(Error::NeedsHomObject),
                };
                Ok(hx
                    .mu()
                    .kron(&RatMatrix::identity(y.dim()).kron(hz.mu_inv())))
            }
        }
    }

    pub fn associator_inverse(
        &self,
        x: &CategoryObject,
        y: &CategoryObject,
        z: &CategoryObject,
    ) -> Result<RatMatrix, Error> {
        for o in [x, y, z] {
            self.admits(o)?;
        }
        match self {
            MonoidalContext::Strict | MonoidalContext::Graded(_) => {
                Ok(RatMatrix::identity(x.dim() * y.dim() * z.dim()))
            }
            MonoidalContext::HomDeformed(_) => {
                let (hx, hz) = match (x.as_hom(), z.as_hom()) {
                    (Some(a), Some(c)) => (a, c),
                    _ => return Err(Error::NeedsHomObject),
                };
                Ok(hx
                    .mu_inv()
                    .kron(&RatMatrix::identity(y.dim()).kron(hz.mu())))
            }
        }
    }

    /// Signed flip `c_{X,Y}`: `(i, j) ↦ χ(deg i, deg j) · (j, i)`.
    pub fn symmetry(&self, x: &GradedObject, y: &GradedObject) -> Result<RatMatrix, Error> {
        self.check_group(x)?;
        self.check_group(y)?;
        let (dx, dy) = (x.dim(), y.dim());
        let mut m = RatMatrix::zeros(dx * dy, dx * dy);
        for i in 0..dx {
            for j in 0..dy {
                let sign = match self.bicharacter() {
                    Some(chi) => chi.value_rational(x.degree(i), y.degree(j)),
                    None => rational::one(),
                };
                m.set(j * dx + i, i * dy + j, sign);
            }
        }
        Ok(m)
    }

    /// `(l_X, r_X)` as endomorphisms of the underlying space of `X`.
    pub fn unit_constraints(&self, x: &CategoryObject) -> Result<(RatMatrix, RatMatrix), Error> {
        self.admits(x)?;
        match (self, x.mu()) {
            (MonoidalContext::HomDeformed(_), Some(mu)) => Ok((mu.clone(), mu.clone())),
            (MonoidalContext::HomDeformed(_), None) => Err(Error::NeedsHomObject),
            _ => {
                let id = RatMatrix::identity(x.dim());
                Ok((id.clone(), id))
            }
        }
    }
}
