//! Dense exact matrices over the rationals.
//!
//! A morphism `f: X -> Y` with `dim X = n`, `dim Y = m` is an `m x n` matrix
//! acting on column vectors, so `g ∘ f` is `g.mul(&f)`.
//!
//! Tensor products are flattened row-major with the left factor major: the
//! basis vector `(i, j)` of `X ⊗ Y` has flat index `i * dim(Y) + j`. Every other
//! module relies on [`RatMatrix::kron`] and [`flip_matrix`] for this and never
//! re-derives it.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("matrix is not a monomorphism: rank {rank} < {cols} columns")]
    NotMono { rank: usize, cols: usize },
    /// `found` is the best candidate's value at `(row, col)`, `expected` the
    /// right-hand side there.
    #[error("linear system has no exact solution: at ({row}, {col}) got {found}, expected {expected}")]
    Inconsistent {
        row: usize,
        col: usize,
        found: Rational,
        expected: Rational,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix rows have unequal lengths")]
    Ragged,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "new",
                lhs: (rows, cols),
                rhs: (entries.len(), 1),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diag(values: &[Rational]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. An empty list gives a `0 x 0` matrix.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Ragged);
        }
        let n = rows.len();
        Ok(Self {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::Ragged);
            }
            for (r, v) in col.iter().enumerate() {
                m.entries[r * cols + c] = v.clone();
            }
        }
        Ok(m)
    }

    /// Integer entries in row-major order. Panics when `values.len() != rows * cols`.
    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols, "from_ints: wrong entry count");
        Self {
            rows,
            cols,
            entries: values.iter().map(|&v| rational::rat(v)).collect(),
        }
    }

    pub fn column_vector(values: Vec<Rational>) -> Self {
        Self {
            rows: values.len(),
            cols: 1,
            entries: values,
        }
    }

    pub fn row_vector(values: Vec<Rational>) -> Self {
        Self {
            rows: 1,
            cols: values.len(),
            entries: values,
        }
    }

    /// Permutation matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.entries[p * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch {
                op,
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mul",
                lhs: self.shape(),
                rhs: other.shape(),
            });
        }
        // Clear denominators row-wise on the left and column-wise on the
        // right so the inner products run over integers.
        let (n, inner, m) = (self.rows, self.cols, other.cols);
        let (a, a_den) = integer_rows(n, inner, |i, k| self.get(i, k));
        let (bt, b_den) = integer_rows(m, inner, |j, k| other.get(k, j));
        let mut entries = Vec::with_capacity(n * m);
        for i in 0..n {
            let row = &a[i * inner..(i + 1) * inner];
            for j in 0..m {
                let col = &bt[j * inner..(j + 1) * inner];
                let mut acc = BigInt::zero();
                for (x, y) in row.iter().zip(col) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                entries.push(if acc.is_zero() {
                    Rational::zero()
                } else {
                    Rational::new(acc, &a_den[i] * &b_den[j])
                });
            }
        }
        Ok(Self {
            rows: n,
            cols: m,
            entries,
        })
    }

    /// Product of a chain `ms[0] · ms[1] · … · ms[k]`.
    pub fn chain(ms: &[&Self]) -> Result<Self, LinalgError> {
        let (first, rest) = ms.split_first().expect("chain of at least one matrix");
        rest.iter().try_fold((*first).clone(), |acc, m| acc.mul(m))
    }

    /// Kronecker product realising `self ⊗ other` on flattened bases.
    pub fn kron(&self, other: &Self) -> Self {
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        let cols = c1 * c2;
        let mut out = Self::zeros(r1 * r2, cols);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * r2 + k) * cols + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        debug_assert_eq!(self.shape(), other.shape());
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Forward elimination is fraction-free (Bareiss) on the integer matrix
    /// obtained by clearing each row's denominators; the final normalisation
    /// to unit pivots is done over the rationals.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ints: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !ints[i][c].is_zero()) else {
                continue;
            };
            ints.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &ints[r][c] * &ints[i][j] - &ints[i][c] * &ints[r][j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    ints[i][j] = q;
                }
                ints[i][c] = BigInt::zero();
            }
            prev = ints[r][c].clone();
            pivots.push(c);
            r += 1;
        }

        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in ints.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.entries[i * self.cols + j] = Rational::from_integer(v.clone());
            }
        }
        for (i, &c) in pivots.iter().enumerate().rev() {
            let p = out.get(i, c).clone();
            for j in c..self.cols {
                let v = out.get(i, j) / &p;
                out.set(i, j, v);
            }
            for k in 0..i {
                let f = out.get(k, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = out.get(k, j) - &f * out.get(i, j);
                    out.set(k, j, v);
                }
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact nullspace basis, canonicalised: the returned vectors, stacked
    /// as rows, form a matrix in reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Vec::new();
        }
        let raw: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(i, f);
                }
                v
            })
            .collect();
        let stacked = Self::from_rows(raw).expect("uniform kernel vectors");
        let (canon, rank) = stacked.rref();
        (0..rank.len()).map(|i| canon.row(i).to_vec()).collect()
    }

    /// The unique `X` with `self · X = rhs`, where `self` must have full
    /// column rank. The solution is accepted only if the residual is exactly
    /// zero; otherwise the first offending entry of `rhs` is reported.
    pub fn solve_through_mono(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "solve_through_mono",
                lhs: self.shape(),
                rhs: rhs.shape(),
            });
        }
        let n = self.cols;
        // an invertible n x n subsystem from the first independent rows
        let (_, rows) = self.transpose().rref();
        if rows.len() < n {
            return Err(LinalgError::NotMono {
                rank: rows.len(),
                cols: n,
            });
        }
        let mut aug = Self::zeros(n, n + rhs.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..n {
                aug.set(i, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(i, n + c, rhs.get(r, c).clone());
            }
        }
        let (red, _) = aug.rref();
        let mut x = Self::zeros(n, rhs.cols);
        for i in 0..n {
            for c in 0..rhs.cols {
                x.set(i, c, red.get(i, n + c).clone());
            }
        }
        let check = self.mul(&x)?;
        match check.first_difference(rhs) {
            None => Ok(x),
            Some((row, col)) => Err(LinalgError::Inconsistent {
                row,
                col,
                found: check.get(row, col).clone(),
                expected: rhs.get(row, col).clone(),
            }),
        }
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::DimensionMismatch {
                op: "inverse",
                lhs: self.shape(),
                rhs: self.shape(),
            });
        }
        self.solve_through_mono(&Self::identity(self.rows))
            .map_err(|_| LinalgError::Singular)
    }

    pub fn max_abs_numerator(&self) -> BigInt {
        self.entries
            .iter()
            .map(|v| v.numer().abs())
            .max()
            .unwrap_or_default()
    }
}

/// `count` vectors of length `len` with entries `get(v, k)`, each scaled by
/// the lcm of its denominators. Returns the numerators (vector-major) and the
/// scale of each vector.
fn integer_rows<'a>(
    count: usize,
    len: usize,
    get: impl Fn(usize, usize) -> &'a Rational,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut nums = Vec::with_capacity(count * len);
    let mut dens = Vec::with_capacity(count);
    for v in 0..count {
        let den = (0..len).fold(BigInt::one(), |l, k| {
            let d = get(v, k).denom();
            if d.is_one() {
                l
            } else {
                l.lcm(d)
            }
        });
        for k in 0..len {
            let x = get(v, k);
            nums.push(if den.is_one() {
                x.numer().clone()
            } else {
                x.numer() * (&den / x.denom())
            });
        }
        dens.push(den);
    }
    (nums, dens)
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(rational::format).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    a.mul(b)
}

pub fn kron(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.kron(b)
}

/// The flip `X ⊗ Y -> Y ⊗ X` for `dim X = d1`, `dim Y = d2`: flat index
/// `i * d2 + j` goes to `j * d1 + i`.
pub fn flip_matrix(d1: usize, d2: usize) -> RatMatrix {
    let perm: Vec<usize> = (0..d1 * d2).map(|k| (k % d2) * d1 + k / d2).collect();
    RatMatrix::permutation(&perm)
}

pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

pub fn solve_through_mono(psi: &RatMatrix, rhs: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    psi.solve_through_mono(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: usize, cols: usize, v: &[i64]) -> RatMatrix {
        RatMatrix::from_ints(rows, cols, v)
    }

    #[test]
    fn mul_examples() {
        let a = m(2, 2, &[1, 2, 3, 4]);
        assert_eq!(RatMatrix::identity(2).mul(&a).unwrap(), a);
        let swap = m(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&swap).unwrap(), m(2, 2, &[2, 1, 4, 3]));
        let f = flip_matrix(2, 2);
        assert!(f.mul(&f).unwrap().is_identity());
    }

    #[test]
    fn mul_rejects_mismatch() {
        let err = m(2, 3, &[0; 6]).mul(&m(2, 2, &[0; 4])).unwrap_err();
        assert!(matches!(err, LinalgError::DimensionMismatch { .. }));
    }

    #[test]
    fn kron_identity_and_action() {
        assert_eq!(
            RatMatrix::identity(2).kron(&RatMatrix::identity(3)),
            RatMatrix::identity(6)
        );
        let f = m(2, 2, &[1, 2, 0, -1]);
        let g = m(3, 3, &[0, 1, 0, 2, 0, 1, 1, 1, 1]);
        let x = vec![rat(3), rat(-1)];
        let y = vec![rat(1), rat(0), rat(5)];
        let fx = f.mul(&RatMatrix::column_vector(x.clone())).unwrap();
        let gy = g.mul(&RatMatrix::column_vector(y.clone())).unwrap();
        let xy = RatMatrix::column_vector(
            x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect(),
        );
        assert_eq!(f.kron(&g).mul(&xy).unwrap(), fx.kron(&gy));
    }

    #[test]
    fn flip_examples() {
        assert!(flip_matrix(1, 3).is_identity());
        let f = flip_matrix(2, 2);
        for (r, c) in [(0, 0), (2, 1), (1, 2), (3, 3)] {
            assert_eq!(*f.get(r, c), rat(1));
        }
        assert_eq!(f.entries().iter().filter(|v| !v.is_zero()).count(), 4);
        assert!(flip_matrix(3, 2).mul(&flip_matrix(2, 3)).unwrap().is_identity());
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(
            m(2, 2, &[1, 1, 1, 1]).kernel_basis(),
            vec![vec![rat(1), rat(-1)]]
        );
        assert_eq!(
            RatMatrix::zeros(2, 2).kernel_basis(),
            vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]]
        );
    }

    #[test]
    fn kernel_of_wide_matrix() {
        let a = m(2, 4, &[1, 2, 0, 1, 2, 4, 1, 0]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let col = RatMatrix::column_vector(v.clone());
            assert!(a.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn rref_with_fractions() {
        let a = RatMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 6)],
        ])
        .unwrap();
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0]);
        assert_eq!(r.row(0), &[rat(1), ratio(2, 3)]);
        assert!(r.row(1).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_examples() {
        let mm = m(2, 2, &[1, 2, 3, 4]);
        assert_eq!(RatMatrix::identity(2).solve_through_mono(&mm).unwrap(), mm);
        let psi = m(2, 1, &[1, 1]);
        assert_eq!(psi.solve_through_mono(&m(2, 1, &[2, 2])).unwrap(), m(1, 1, &[2]));
        assert_eq!(
            psi.solve_through_mono(&m(2, 1, &[1, 2])).unwrap_err(),
            LinalgError::Inconsistent {
                row: 1,
                col: 0,
                found: rat(1),
                expected: rat(2)
            }
        );
        assert!(matches!(
            m(2, 2, &[1, 1, 1, 1]).solve_through_mono(&mm).unwrap_err(),
            LinalgError::NotMono { rank: 1, cols: 2 }
        ));
    }

    #[test]
    fn inverse_and_singular() {
        let a = m(2, 2, &[2, 1, 1, 1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert_eq!(m(2, 2, &[1, 2, 2, 4]).inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn zero_dimensional_shapes() {
        let e = RatMatrix::zeros(0, 0);
        assert!(e.is_identity());
        assert_eq!(e.kron(&RatMatrix::identity(3)).shape(), (0, 0));
        assert!(e.kernel_basis().is_empty());
        let tall = RatMatrix::zeros(3, 0);
        assert_eq!(tall.solve_through_mono(&RatMatrix::zeros(3, 0)).unwrap().shape(), (0, 0));
    }
}
