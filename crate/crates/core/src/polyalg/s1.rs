//! The subspace `S_1^{k-1,l-1} = { gen * f } ⊂ S^{k,l}` of multiples of the
//! Hermitian generator `gen = sum g_{ij} x^i xbar^j`.
//!
//! Membership is decided by division: `gen` is a single polynomial, so it is a
//! Gröbner basis of the ideal it generates, and `Q` is a multiple of `gen`
//! exactly when its remainder vanishes. The monomial order makes `x1 xbar1`
//! the leading term (`g_11 > 0` for a positive-definite `g`), so the remainder
//! is the unique representative without monomials divisible by `x1 xbar1`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::monomial::{space_basis, Monomial};
use super::poly::HermitianPoly;
use crate::error::{check_dim, Result};
use crate::exactnum::{ComplexMatrix, GaussianRational, Matrix};

/// `sum_{i,j} g[i][j] x^i xbar^j`; with `g = I` this is `sum_i x^i xbar^i`.
pub fn s1_generator(n: usize, g: &ComplexMatrix) -> Result<HermitianPoly> {
    check_dim("s1_generator", n, g.rows())?;
    check_dim("s1_generator", n, g.cols())?;
    let mut terms = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut hol = vec![0; n];
            let mut anti = vec![0; n];
            hol[i] = 1;
            anti[j] = 1;
            terms.push((Monomial::new(hol, anti), g[(i, j)].clone()));
        }
    }
    HermitianPoly::from_terms(n, 1, 1, terms)
}

/// Spanning set of `S_1^{k-1,l-1}`: `gen * m` for each basis monomial `m` of
/// `S^{k-1,l-1}`. Empty when `k = 0` or `l = 0`.
pub fn s1_spanning_polys(n: usize, k: usize, l: usize, g: &ComplexMatrix) -> Result<Vec<HermitianPoly>> {
    if k == 0 || l == 0 {
        return Ok(Vec::new());
    }
    let gen = s1_generator(n, g)?;
    space_basis(n, k - 1, l - 1)
        .into_iter()
        .map(|m| gen.multiply(&HermitianPoly::monomial(m, GaussianRational::from(1))))
        .collect()
}

/// Matrix whose columns are the coefficient vectors (in the basis of
/// `S^{k,l}`) of the spanning set of `S_1^{k-1,l-1}`.
pub fn s1_subspace(n: usize, k: usize, l: usize, g: &ComplexMatrix) -> Result<ComplexMatrix> {
    let cols: Vec<Vec<GaussianRational>> = s1_spanning_polys(n, k, l, g)?
        .iter()
        .map(HermitianPoly::to_vector)
        .collect();
    Matrix::from_columns(space_basis(n, k, l).len(), &cols)
}

/// Division by the generator with per-monomial memoisation.
#[derive(Clone, Debug)]
pub struct S1Reducer {
    n: usize,
    g11_inv: GaussianRational,
    /// Terms of `gen` other than `x1 xbar1`, already divided by `-g_11`.
    tail: Vec<(Monomial, GaussianRational)>,
    lead: Monomial,
    cache: HashMap<Monomial, Vec<(Monomial, GaussianRational)>>,
}

/// Quotient and remainder of a division by the generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub quotient: HermitianPoly,
    pub remainder: HermitianPoly,
}

impl S1Reducer {
    pub fn new(n: usize, g: &ComplexMatrix) -> Result<Self> {
        let gen = s1_generator(n, g)?;
        let lead = Monomial::new(unit(n, 0), unit(n, 0));
        let g11 = gen.coefficient(&lead);
        assert!(!g11.is_zero(), "g_11 must be nonzero");
        let g11_inv = g11.inv();
        let neg = -g11_inv.clone();
        let tail = gen
            .terms()
            .filter(|(m, _)| **m != lead)
            .map(|(m, c)| (m.clone(), c * &neg))
            .collect();
        Ok(S1Reducer {
            n,
            g11_inv,
            tail,
            lead,
            cache: HashMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn divisible(&self, m: &Monomial) -> bool {
        m.hol()[0] > 0 && m.antihol()[0] > 0
    }

    /// Remainder of a single monomial, as `(monomial, coefficient)` terms.
    pub fn reduce_monomial(&mut self, m: &Monomial) -> Vec<(Monomial, GaussianRational)> {
        if !self.divisible(m) {
            return vec![(m.clone(), GaussianRational::from(1))];
        }
        if let Some(hit) = self.cache.get(m) {
            return hit.clone();
        }
        let rest = m.div(&self.lead).expect("divisible");
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        let tail = self.tail.clone();
        for (t, c) in &tail {
            for (r, d) in self.reduce_monomial(&rest.mul(t)) {
                let v = c * &d;
                let e = acc.entry(r).or_insert_with(GaussianRational::zero);
                *e += &v;
            }
        }
        let out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.cache.insert(m.clone(), out.clone());
        out
    }

    /// Remainder of `q` on division by the generator.
    pub fn normal_form(&mut self, q: &HermitianPoly) -> HermitianPoly {
        let (k, l) = q.bidegree();
        let mut out = HermitianPoly::zero(q.n(), k, l);
        for (m, c) in q.terms() {
            for (r, d) in self.reduce_monomial(m) {
                out.add_term(r, c * &d);
            }
        }
        out
    }

    /// Full division `q = gen * quotient + remainder`.
    pub fn divide(&self, q: &HermitianPoly) -> Result<Division> {
        check_dim("S1Reducer::divide", self.n, q.n())?;
        let (k, l) = q.bidegree();
        let mut quotient = HermitianPoly::zero(q.n(), k.saturating_sub(1), l.saturating_sub(1));
        let mut remainder = HermitianPoly::zero(q.n(), k, l);
        // Keyed by the x1/xbar1 weight so every term is visited after all the
        // terms that can feed into it.
        let mut work: BTreeMap<(u32, Monomial), GaussianRational> = q
            .terms()
            .map(|(m, c)| ((weight(m), m.clone()), c.clone()))
            .collect();
        while let Some(((_, m), c)) = work.pop_last() {
            if c.is_zero() {
                continue;
            }
            if !self.divisible(&m) {
                remainder.add_term(m, c);
                continue;
            }
            let rest = m.div(&self.lead).expect("divisible");
            let qc = &c * &self.g11_inv;
            for (t, tc) in &self.tail {
                let mt = rest.mul(t);
                let e = work
                    .entry((weight(&mt), mt))
                    .or_insert_with(GaussianRational::zero);
                // tail already carries the factor -1/g_11; scale back by c.
                *e += &(tc * &c);
            }
            quotient.add_term(rest, qc);
        }
        Ok(Division { quotient, remainder })
    }

    pub fn contains(&mut self, q: &HermitianPoly) -> bool {
        self.normal_form(q).is_zero()
    }
}

fn unit(n: usize, i: usize) -> Vec<u16> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn weight(m: &Monomial) -> u32 {
    m.hol()[0] as u32 + m.antihol()[0] as u32
}

/// Returns `f` with `gen * f = q`, or `None` when `q` is not in `S_1`.
pub fn s1_decompose(q: &HermitianPoly, g: &ComplexMatrix) -> Result<Option<HermitianPoly>> {
    let (k, l) = q.bidegree();
    if q.is_zero() {
        return Ok(Some(HermitianPoly::zero(q.n(), k.saturating_sub(1), l.saturating_sub(1))));
    }
    if k == 0 || l == 0 {
        return Ok(None);
    }
    let div = S1Reducer::new(q.n(), g)?.divide(q)?;
    Ok(div.remainder.is_zero().then_some(div.quotient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{membership, Rational};

    fn diag(entries: &[i64]) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = GaussianRational::from(e);
        }
        m
    }

    #[test]
    fn generator_examples() {
        let g = s1_generator(2, &ComplexMatrix::identity(2)).unwrap();
        assert_eq!(format!("{g:?}"), "1*x1*~x1 + 1*x2*~x2");
        assert_eq!(s1_generator(1, &ComplexMatrix::identity(1)).unwrap().num_terms(), 1);
        let g = s1_generator(2, &diag(&[2, 3])).unwrap();
        assert_eq!(format!("{g:?}"), "2*x1*~x1 + 3*x2*~x2");
    }

    #[test]
    fn subspace_examples() {
        let id1 = ComplexMatrix::identity(1);
        let m = s1_subspace(1, 2, 2, &id1).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        let m = s1_subspace(2, 1, 1, &ComplexMatrix::identity(2)).unwrap();
        assert_eq!(m.cols(), 1);
        let m = s1_subspace(4, 2, 2, &ComplexMatrix::identity(4)).unwrap();
        assert_eq!(m.cols(), 16);
        assert_eq!(m.rank(), 16);
        assert_eq!(s1_subspace(3, 0, 2, &ComplexMatrix::identity(3)).unwrap().cols(), 0);
    }

    #[test]
    fn decompose_examples() {
        let id = ComplexMatrix::identity(2);
        let zero = HermitianPoly::zero(2, 2, 2);
        assert!(s1_decompose(&zero, &id).unwrap().unwrap().is_zero());

        let off = HermitianPoly::monomial(Monomial::new(vec![1, 0], vec![0, 1]), GaussianRational::from(1));
        assert_eq!(s1_decompose(&off, &id).unwrap(), None);
    }

    #[test]
    fn division_agrees_with_dense_membership() {
        let g = ComplexMatrix::from_rows(vec![
            vec![GaussianRational::from(2), GaussianRational::from_ints(1, 1)],
            vec![GaussianRational::from_ints(1, -1), GaussianRational::from(3)],
        ])
        .unwrap();
        let span = s1_subspace(2, 2, 1, &g).unwrap();
        let cols: Vec<_> = (0..span.cols()).map(|j| span.column(j)).collect();
        let mut red = S1Reducer::new(2, &g).unwrap();
        for m in space_basis(2, 2, 1) {
            let q = HermitianPoly::monomial(m, GaussianRational::from(1));
            let dense = membership(&q.to_vector(), &cols).unwrap().is_some();
            assert_eq!(red.contains(&q), dense);
        }
        let gen = s1_generator(2, &g).unwrap();
        let f = HermitianPoly::from_terms(
            2,
            1,
            0,
            vec![
                (Monomial::var(2, 0), GaussianRational::new(Rational::new(1, 2), Rational::from(3))),
                (Monomial::var(2, 1), GaussianRational::from(-4)),
            ],
        )
        .unwrap();
        let q = gen.multiply(&f).unwrap();
        assert!(red.contains(&q));
        assert_eq!(s1_decompose(&q, &g).unwrap(), Some(f));
    }
}
