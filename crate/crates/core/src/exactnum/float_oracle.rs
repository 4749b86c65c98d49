//! Floating-point rank estimate, used only to cross-check exact ranks.

use nalgebra::{Complex, DMatrix};

use super::matrix::{Field, Matrix};
use super::sparse::SparseVec;

/// Default relative singular-value cutoff.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Estimates the rank of `m` from the singular values of its numeric image:
/// the number of singular values above `tol * sigma_max`.
pub fn float_rank_oracle<F: Field>(m: &Matrix<F>, tol: f64) -> usize {
    let rows = m.to_c64_rows();
    numeric_rank(m.rows(), m.cols(), |r, c| rows[r][c], tol)
}

/// Same as [`float_rank_oracle`] for a real matrix given by sparse columns.
pub fn float_rank_sparse_columns<F: Field>(nrows: usize, columns: &[SparseVec<F>], tol: f64) -> usize {
    let mut dense = vec![vec![Complex::new(0.0, 0.0); columns.len()]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for (i, x) in col {
            dense[*i][j] = x.to_c64();
        }
    }
    numeric_rank(nrows, columns.len(), |r, c| dense[r][c], tol)
}

fn numeric_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Complex<f64>, tol: f64) -> usize {
    assert!(tol > 0.0, "tolerance must be positive");
    if rows == 0 || cols == 0 {
        return 0;
    }
    let all_real = (0..rows).all(|r| (0..cols).all(|c| entry(r, c).im == 0.0));
    let singular: Vec<f64> = if all_real {
        let mut a = DMatrix::<f64>::from_fn(rows, cols, |r, c| entry(r, c).re);
        if rows < cols {
            a = a.transpose();
        }
        // Tall matrices: the R factor carries the same singular values.
        if a.nrows() > 2 * a.ncols() {
            a = a.qr().r();
        }
        a.singular_values().iter().copied().collect()
    } else {
        let mut a = DMatrix::<Complex<f64>>::from_fn(rows, cols, &entry);
        if rows < cols {
            a = a.adjoint();
        }
        if a.nrows() > 2 * a.ncols() {
            a = a.qr().r();
        }
        a.singular_values().iter().copied().collect()
    };
    let max = singular.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    singular.iter().filter(|&&s| s > tol * max).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{GaussianRational, Rational};

    #[test]
    fn identity_and_rank_one() {
        assert_eq!(float_rank_oracle(&Matrix::<Rational>::identity(4), DEFAULT_RANK_TOL), 4);
        let m = Matrix::from_rows(vec![
            vec![Rational::from(1), Rational::from(2)],
            vec![Rational::from(2), Rational::from(4)],
        ])
        .unwrap();
        assert_eq!(float_rank_oracle(&m, DEFAULT_RANK_TOL), 1);
    }

    #[test]
    fn complex_entries() {
        let i = GaussianRational::i();
        let one = GaussianRational::from(1);
        let m = Matrix::from_rows(vec![vec![one.clone(), i.clone()], vec![i.clone(), -one]]).unwrap();
        assert_eq!(float_rank_oracle(&m, DEFAULT_RANK_TOL), 1);
        assert_eq!(float_rank_oracle(&m.realify(), DEFAULT_RANK_TOL), 2);
    }
}
