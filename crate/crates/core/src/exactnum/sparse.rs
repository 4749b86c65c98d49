//! Incremental exact row echelon form over sparse rows.
//!
//! The large systems in the rigidity checks have a few hundred to a few
//! thousand unknowns but tens of thousands of very sparse equations. Rows are
//! streamed into a reduced echelon basis one at a time, so memory is bounded by
//! `rank x unknowns` and the caller can stop as soon as the rank reaches a
//! known upper bound.



use super::matrix::Field;

/// Sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense<F: Field>(v: &SparseVec<F>, len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Sparse dot product with a dense vector.
pub fn sparse_dot<F: Field>(v: &SparseVec<F>, dense: &[F]) -> F {
    let mut acc = F::zero();
    for (i, x) in v {
        if !dense[*i].is_zero() {
            acc += &(x.clone() * &dense[*i]);
        }
    }
    acc
}

/// Reduced row echelon basis built one row at a time. Each stored row has a
/// leading 1 in its pivot column and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<(usize, SparseVec<F>)>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `row` against the current basis.
    pub fn reduce(&self, row: &SparseVec<F>) -> SparseVec<F> {
        let mut acc: Vec<F> = vec![F::zero(); self.ncols];
        let mut touched = vec![false; self.ncols];
        let mut hits = Vec::new();
        for (c, x) in row {
            acc[*c] = x.clone();
            touched[*c] = true;
            if self.pivot_row[*c].is_some() {
                hits.push(*c);
            }
        }
        for c in hits {
            let coef = acc[c].clone();
            if coef.is_zero() {
                continue;
            }
            let prow = &self.rows[self.pivot_row[c].unwrap()].1;
            for (j, y) in prow {
                let t = coef.clone() * y;
                acc[*j] -= &t;
                touched[*j] = true;
            }
        }
        let mut out = Vec::new();
        for (j, x) in acc.into_iter().enumerate() {
            if touched[j] && !x.is_zero() {
                out.push((j, x));
            }
        }
        out
    }

    /// Returns `true` when `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &SparseVec<F>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Inserts a row; returns `true` if the rank increased.
    pub fn insert(&mut self, row: &SparseVec<F>) -> bool {
        let mut reduced = self.reduce(row);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        if !lead.is_one() {
            let inv = F::one() / &lead;
            for (_, x) in reduced.iter_mut() {
                *x *= &inv;
            }
        }
        for (_, existing) in self.rows.iter_mut() {
            let Ok(pos) = existing.binary_search_by_key(&pivot, |(j, _)| *j) else {
                continue;
            };
            let coef = existing[pos].1.clone();
            *existing = axpy_sparse(existing, &coef, &reduced);
        }
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push((pivot, reduced));
        true
    }

    pub fn insert_dense(&mut self, row: &[F]) -> bool {
        self.insert(&sparse_from_dense(row))
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect()
    }

    /// Null space of the inserted rows: one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        (0..self.ncols)
            .filter(|&c| self.pivot_row[c].is_none())
            .map(|free| {
                let mut v = vec![F::zero(); self.ncols];
                v[free] = F::one();
                for (pivot, row) in &self.rows {
                    let pivot = *pivot;
                    if let Ok(pos) = row.binary_search_by_key(&free, |(j, _)| *j) {
                        v[pivot] = -row[pos].1.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Stored rows, sorted by pivot column.
    pub fn basis_rows(&self) -> Vec<SparseVec<F>> {
        let mut out: Vec<_> = self.rows.clone();
        out.sort_by_key(|r| r.0);
        out.into_iter().map(|(_, r)| r).collect()
    }
}

/// `a - coef * b` for sparse vectors.
fn axpy_sparse<F: Field>(a: &SparseVec<F>, coef: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ai = a.get(i).map(|x| x.0);
        let bj = b.get(j).map(|x| x.0);
        match (ai, bj) {
            (Some(x), Some(y)) if x == y => {
                let v = a[i].1.clone() - &(coef.clone() * &b[j].1);
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(coef.clone() * &b[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Exact null space of a matrix given by sparse rows, with an optional rank
/// cap: once the rank reaches `max_rank` the remaining rows are skipped.
/// Callers pass a cap only when it is a proven upper bound on the rank.
pub fn sparse_kernel<F: Field>(
    ncols: usize,
    rows: &[SparseVec<F>],
    max_rank: Option<usize>,
) -> (Vec<Vec<F>>, usize) {
    let cap = max_rank.unwrap_or(ncols).min(ncols);
    let mut ech = Echelon::new(ncols);
    for row in rows {
        if ech.rank() >= cap {
            break;
        }
        ech.insert(row);
    }
    let rank = ech.rank();
    (ech.kernel_basis(), rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{kernel_basis, Matrix, Rational};

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn agrees_with_dense_kernel() {
        let rows = vec![qv(&[1, 2, 0, -1]), qv(&[2, 4, 1, 0]), qv(&[3, 6, 1, -1])];
        let dense = Matrix::from_rows(rows.clone()).unwrap();
        let sparse: Vec<_> = rows.iter().map(|r| sparse_from_dense(r)).collect();
        let (k, rank) = sparse_kernel(4, &sparse, None);
        assert_eq!(rank, dense.rank());
        assert_eq!(k, kernel_basis(&dense));
    }

    #[test]
    fn contains_and_rank() {
        let mut e = Echelon::new(3);
        assert!(e.insert_dense(&qv(&[1, 1, 0])));
        assert!(!e.insert_dense(&qv(&[2, 2, 0])));
        assert!(e.contains(&sparse_from_dense(&qv(&[-3, -3, 0]))));
        assert!(!e.contains(&sparse_from_dense(&qv(&[0, 0, 1]))));
        assert!(e.insert_dense(&qv(&[0, 1, 1])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots(), vec![0, 1]);
    }
}
