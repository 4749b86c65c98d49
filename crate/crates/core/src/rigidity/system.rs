//! Realified sparse systems for real-linear maps into polynomial spaces.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactnum::{sparse::sparse_dot, Echelon, GaussianRational, Rational, SparseVec};
use crate::polyalg::{space_basis, HermitianPoly, Monomial, VectorForm};

/// The real basis direction `j` of `S^{k,0} ⊗ W` (ordering of
/// [`VectorForm::to_real_vector`]).
pub(crate) fn real_direction(n: usize, k: usize, r: usize, j: usize) -> VectorForm {
    let basis = space_basis(n, k, 0);
    let per_component = 2 * basis.len();
    let (a, rest) = (j / per_component, j % per_component);
    let (m, part) = (rest / 2, rest % 2);
    let coeff = if part == 0 {
        GaussianRational::from(1)
    } else {
        GaussianRational::i()
    };
    let mut components = vec![HermitianPoly::zero(n, k, 0); r];
    components[a] = HermitianPoly::monomial(basis[m].clone(), coeff);
    VectorForm::new(n, k, components).expect("shape is consistent")
}

/// Turns the images of the real basis directions into realified sparse rows:
/// one row per (monomial, re/im) pair that occurs. When `hermitian` is set
/// the images are known to be fixed by `conj_swap`, and only monomials with
/// `m <= swap(m)` are kept; the dropped rows are conjugates of kept ones.
///
/// Rows come back sorted by number of nonzeros, ties in monomial order.
pub(crate) fn realified_rows(images: &[HermitianPoly], hermitian: bool) -> Vec<SparseVec<Rational>> {
    let mut rows: BTreeMap<(Monomial, u8), SparseVec<Rational>> = BTreeMap::new();
    for (j, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            if hermitian && *m > m.swap() {
                continue;
            }
            if !c.re.is_zero() {
                rows.entry((m.clone(), 0)).or_default().push((j, c.re.clone()));
            }
            if !c.im.is_zero() {
                rows.entry((m.clone(), 1)).or_default().push((j, c.im.clone()));
            }
        }
    }
    let mut out: Vec<SparseVec<Rational>> = rows.into_values().collect();
    out.sort_by_key(Vec::len);
    out
}

/// Transposes sparse rows into sparse columns.
pub(crate) fn rows_to_columns(ncols: usize, rows: &[SparseVec<Rational>]) -> Vec<SparseVec<Rational>> {
    let mut cols = vec![Vec::new(); ncols];
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row {
            cols[*j].push((i, x.clone()));
        }
    }
    cols
}

/// `true` when `v` satisfies every row exactly.
pub(crate) fn annihilates(rows: &[SparseVec<Rational>], v: &[Rational]) -> bool {
    rows.iter().all(|row| sparse_dot(row, v).is_zero())
}

/// Vectors of `candidates` outside the span of `base`, in order.
pub(crate) fn outside_span(ncols: usize, base: &[Vec<Rational>], candidates: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut ech = Echelon::new(ncols);
    for b in base {
        ech.insert_dense(b);
    }
    candidates
        .iter()
        .filter(|c| ech.insert_dense(c))
        .cloned()
        .collect()
}

/// Dimension of the span of dense vectors.
pub(crate) fn span_dim(ncols: usize, vectors: &[Vec<Rational>]) -> usize {
    let mut ech = Echelon::new(ncols);
    for v in vectors {
        ech.insert_dense(v);
    }
    ech.rank()
}
