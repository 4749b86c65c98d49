use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{GaussianRational, Rational};
use crate::error::{check_dim, Result};

/// The exact scalar fields the engine works over: `Q` and `Q[i]`.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Send
    + Sync
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn to_c64(&self) -> Complex64;
}

impl Field for Rational {
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
}

impl Field for GaussianRational {
    fn to_c64(&self) -> Complex64 {
        GaussianRational::to_c64(self)
    }
}

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type RationalMatrix = Matrix<Rational>;
pub type ComplexMatrix = Matrix<GaussianRational>;

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            check_dim("Matrix::from_rows", cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Builds a `len x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(len, columns.len());
        for (j, c) in columns.iter().enumerate() {
            check_dim("Matrix::from_columns", len, c.len())?;
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        check_dim("Matrix::mul_vec", self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a.clone() * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        check_dim("Matrix::matmul", self.cols, rhs.rows)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Appends the columns of `rhs` to the right of `self`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        check_dim("Matrix::hstack", self.rows, rhs.rows)?;
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..rhs.cols {
                out[(r, self.cols + c)] = rhs[(r, c)].clone();
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    pub fn to_c64_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(F::to_c64).collect())
            .collect()
    }
}

impl Matrix<GaussianRational> {
    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].conj();
            }
        }
        t
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols && *self == self.conj_transpose()
    }

    /// Replaces every entry `a + bi` by the real block `[[a, -b], [b, a]]`.
    pub fn realify(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(2 * self.rows, 2 * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let z = &self[(r, c)];
                out[(2 * r, 2 * c)] = z.re.clone();
                out[(2 * r, 2 * c + 1)] = -&z.im;
                out[(2 * r + 1, 2 * c)] = z.im.clone();
                out[(2 * r + 1, 2 * c + 1)] = z.re.clone();
            }
        }
        out
    }

    pub fn from_real(m: &RationalMatrix) -> Self {
        Matrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().cloned().map(GaussianRational::real).collect(),
        }
    }

    /// Leading principal minors, top-left outward.
    pub fn leading_minors(&self) -> Vec<GaussianRational> {
        (1..=self.rows.min(self.cols))
            .map(|k| {
                let mut sub = Self::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub[(i, j)] = self[(i, j)].clone();
                    }
                }
                determinant(&sub)
            })
            .collect()
    }
}

/// Interleaves real and imaginary parts: `z_j -> (re_j, im_j)`.
pub fn realify_vector(v: &[GaussianRational]) -> Vec<Rational> {
    v.iter()
        .flat_map(|z| [z.re.clone(), z.im.clone()])
        .collect()
}

/// Inverse of [`realify_vector`].
pub fn complexify_vector(v: &[Rational]) -> Vec<GaussianRational> {
    assert!(v.len().is_multiple_of(2), "odd-length real vector");
    v.chunks(2)
        .map(|p| GaussianRational::new(p[0].clone(), p[1].clone()))
        .collect()
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of [`rref`].
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Exact reduced row-echelon form. Pivot rule: columns left to right, first
/// nonzero entry at or below the current row.
pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = F::one() / &a[(r, c)];
        for j in c..cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] *= &inv;
            }
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let t = f.clone() * &a[(r, j)];
                a[(i, j)] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: a,
        rank: pivots.len(),
        pivots,
    }
}

/// Exact basis of the null space. One vector per free column, with a 1 in
/// that column.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let Rref { reduced, pivots, .. } = rref(m);
    kernel_from_rref(&reduced, &pivots)
}

fn kernel_from_rref<F: Field>(reduced: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let cols = reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                let x = &reduced[(row, free)];
                if !x.is_zero() {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// Coefficients expressing `v` in the span of `spanning`, or `None` when `v`
/// lies outside it. Free coefficients are set to zero.
pub fn membership<F: Field>(v: &[F], spanning: &[Vec<F>]) -> Result<Option<Vec<F>>> {
    for s in spanning {
        check_dim("membership", v.len(), s.len())?;
    }
    let mut cols = spanning.to_vec();
    cols.push(v.to_vec());
    let aug = Matrix::from_columns(v.len(), &cols)?;
    let Rref { reduced, pivots, .. } = rref(&aug);
    let last = spanning.len();
    if pivots.last() == Some(&last) {
        return Ok(None);
    }
    let mut coeffs = vec![F::zero(); spanning.len()];
    for (row, &p) in pivots.iter().enumerate() {
        coeffs[p] = reduced[(row, last)].clone();
    }
    Ok(Some(coeffs))
}

/// Basis of `{x : M x ∈ span(subspace)}`, obtained from the kernel of the
/// stacked system `[M | -S]` projected onto the `x` block.
pub fn constrained_preimage<F: Field>(m: &Matrix<F>, subspace: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    let s = Matrix::from_columns(m.rows, subspace)?;
    let neg_s = Matrix {
        rows: s.rows,
        cols: s.cols,
        data: s.data.into_iter().map(Neg::neg).collect(),
    };
    let stacked = m.hstack(&neg_s)?;
    let projected: Vec<Vec<F>> = kernel_basis(&stacked)
        .into_iter()
        .map(|mut v| {
            v.truncate(m.cols);
            v
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    if subspace.is_empty() {
        return Ok(projected);
    }
    Ok(independent_subset(&projected))
}

/// Greedy maximal independent subset, keeping input order.
pub fn independent_subset<F: Field>(vectors: &[Vec<F>]) -> Vec<Vec<F>> {
    let mut kept: Vec<Vec<F>> = Vec::new();
    let mut echelon = super::sparse::Echelon::<F>::new(vectors.first().map_or(0, Vec::len));
    for v in vectors {
        if echelon.insert_dense(v) {
            kept.push(v.clone());
        }
    }
    kept
}

/// Canonical basis of a span: the nonzero rows of the RREF of the stacked
/// vectors. Two spans are equal iff their canonical bases are equal.
pub fn canonical_basis<F: Field>(len: usize, vectors: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    for v in vectors {
        check_dim("canonical_basis", len, v.len())?;
    }
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(vectors.to_vec())?;
    let r = rref(&m);
    Ok((0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect())
}

pub fn determinant<F: Field>(m: &Matrix<F>) -> F {
    assert_eq!(m.rows, m.cols, "determinant of non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[(i, c)].is_zero()) else {
            return F::zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = -det;
        }
        let pivot = a[(c, c)].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone() / &pivot;
            for j in c..n {
                let t = f.clone() * &a[(c, j)];
                a[(i, j)] -= &t;
            }
        }
    }
    det
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Option<Matrix<F>> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let aug = m.hstack(&Matrix::identity(n)).ok()?;
    let r = rref(&aug);
    if r.pivots.iter().take_while(|&&p| p < n).count() < n {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = r.reduced[(i, n + j)].clone();
        }
    }
    Some(inv)
}
