use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::monomial::{space_basis, Monomial};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{GaussianRational, Rational};

/// An element of `S^{k,l}(V*)`: a polynomial in `x` and `xbar`, homogeneous of
/// degree `k` in `x` and `l` in `xbar`, with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct HermitianPoly {
    n: usize,
    k: usize,
    l: usize,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl HermitianPoly {
    pub fn zero(n: usize, k: usize, l: usize) -> Self {
        HermitianPoly {
            n,
            k,
            l,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1 in `S^{0,0}`.
    pub fn one(n: usize) -> Self {
        HermitianPoly::monomial(Monomial::one(n), GaussianRational::from(1))
    }

    pub fn monomial(m: Monomial, c: GaussianRational) -> Self {
        let (k, l) = m.bidegree();
        let mut p = HermitianPoly::zero(m.n(), k, l);
        p.add_term(m, c);
        p
    }

    /// The holomorphic coordinate `x^i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        HermitianPoly::monomial(Monomial::var(n, i), GaussianRational::from(1))
    }

    /// The antiholomorphic coordinate `xbar^i` (0-based).
    pub fn conj_var(n: usize, i: usize) -> Self {
        HermitianPoly::monomial(Monomial::conj_var(n, i), GaussianRational::from(1))
    }

    /// Builds a polynomial of bidegree `(k, l)` from terms, summing repeats.
    pub fn from_terms(
        n: usize,
        k: usize,
        l: usize,
        terms: impl IntoIterator<Item = (Monomial, GaussianRational)>,
    ) -> Result<Self> {
        let mut p = HermitianPoly::zero(n, k, l);
        for (m, c) in terms {
            check_dim("HermitianPoly::from_terms (variables)", n, m.n())?;
            if m.bidegree() != (k, l) {
                return Err(Error::InvalidParams(format!(
                    "monomial {m:?} has bidegree {:?}, expected {:?}",
                    m.bidegree(),
                    (k, l)
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.l == 0
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        debug_assert_eq!(m.bidegree(), (self.k, self.l));
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_space(&self, other: &HermitianPoly, context: &'static str) -> Result<()> {
        check_dim(context, self.n, other.n)?;
        if self.bidegree() != other.bidegree() {
            return Err(Error::InvalidParams(format!(
                "{context}: bidegree {:?} vs {:?}",
                self.bidegree(),
                other.bidegree()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &HermitianPoly) -> Result<HermitianPoly> {
        self.check_same_space(other, "HermitianPoly::add")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HermitianPoly) -> Result<HermitianPoly> {
        self.check_same_space(other, "HermitianPoly::sub")?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &GaussianRational) -> HermitianPoly {
        let mut out = HermitianPoly::zero(self.n, self.k, self.l);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    /// Exact distributive product; bidegrees add.
    pub fn multiply(&self, other: &HermitianPoly) -> Result<HermitianPoly> {
        check_dim("HermitianPoly::multiply", self.n, other.n)?;
        let mut out = HermitianPoly::zero(self.n, self.k + other.k, self.l + other.l);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Swaps `x` and `xbar` and conjugates coefficients: `S^{k,l} -> S^{l,k}`.
    pub fn conj_swap(&self) -> HermitianPoly {
        HermitianPoly {
            n: self.n,
            k: self.l,
            l: self.k,
            terms: self.terms.iter().map(|(m, c)| (m.swap(), c.conj())).collect(),
        }
    }

    /// Fixed by [`conj_swap`](Self::conj_swap), i.e. real-valued.
    pub fn is_hermitian_symmetric(&self) -> bool {
        self.k == self.l && *self == self.conj_swap()
    }

    /// Evaluates at `x = point` (with `xbar` the conjugate of `point`).
    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        check_dim("HermitianPoly::eval", self.n, point.len())?;
        let conj: Vec<_> = point.iter().map(GaussianRational::conj).collect();
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.n {
                for _ in 0..m.hol()[i] {
                    t *= &point[i];
                }
                for _ in 0..m.antihol()[i] {
                    t *= &conj[i];
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Substitutes `x -> A x` (holomorphic) and `xbar -> conj(A) xbar`, i.e.
    /// `x^i = sum_j A[i][j] y^j` in the new coordinates `y`.
    pub fn substitute(&self, a: &crate::exactnum::ComplexMatrix) -> Result<HermitianPoly> {
        check_dim("HermitianPoly::substitute", self.n, a.rows())?;
        check_dim("HermitianPoly::substitute", self.n, a.cols())?;
        let n = self.n;
        let lin: Vec<HermitianPoly> = (0..n)
            .map(|i| {
                let terms = (0..n).map(|j| (Monomial::var(n, j), a[(i, j)].clone()));
                HermitianPoly::from_terms(n, 1, 0, terms).expect("degree-1 terms")
            })
            .collect();
        let lin_bar: Vec<HermitianPoly> = lin.iter().map(HermitianPoly::conj_swap).collect();
        let mut out = HermitianPoly::zero(n, self.k, self.l);
        for (m, c) in &self.terms {
            let mut t = HermitianPoly::monomial(Monomial::one(n), c.clone());
            for i in 0..n {
                for _ in 0..m.hol()[i] {
                    t = t.multiply(&lin[i])?;
                }
                for _ in 0..m.antihol()[i] {
                    t = t.multiply(&lin_bar[i])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Coefficient vector in the canonical monomial basis of `S^{k,l}`.
    pub fn to_vector(&self) -> Vec<GaussianRational> {
        space_basis(self.n, self.k, self.l)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }

    pub fn from_vector(n: usize, k: usize, l: usize, v: &[GaussianRational]) -> Result<Self> {
        let basis = space_basis(n, k, l);
        check_dim("HermitianPoly::from_vector", basis.len(), v.len())?;
        HermitianPoly::from_terms(n, k, l, basis.into_iter().zip(v.iter().cloned()))
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale_rational(&self, s: &Rational) -> HermitianPoly {
        self.scale(&GaussianRational::real(s.clone()))
    }
}

impl fmt::Debug for HermitianPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}*{m:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> HermitianPoly {
        HermitianPoly::var(n, i)
    }

    fn xb(n: usize, i: usize) -> HermitianPoly {
        HermitianPoly::conj_var(n, i)
    }

    #[test]
    fn multiply_examples() {
        let p = x(2, 0).multiply(&x(2, 1)).unwrap();
        assert_eq!(p.multiply(&HermitianPoly::one(2)).unwrap(), p);

        let m = x(2, 0).multiply(&xb(2, 0)).unwrap();
        assert_eq!(m.num_terms(), 1);
        assert_eq!(m.bidegree(), (1, 1));

        let lhs = x(2, 0).add(&x(2, 1)).unwrap();
        let rhs = xb(2, 0).sub(&xb(2, 1)).unwrap();
        let prod = lhs.multiply(&rhs).unwrap();
        let expected = x(2, 0)
            .multiply(&xb(2, 0))
            .unwrap()
            .sub(&x(2, 0).multiply(&xb(2, 1)).unwrap())
            .unwrap()
            .add(&x(2, 1).multiply(&xb(2, 0)).unwrap())
            .unwrap()
            .sub(&x(2, 1).multiply(&xb(2, 1)).unwrap())
            .unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn conj_swap_examples() {
        let p = x(2, 0).multiply(&xb(2, 1)).unwrap();
        assert_eq!(p.conj_swap(), x(2, 1).multiply(&xb(2, 0)).unwrap());
        let q = x(1, 0).scale(&GaussianRational::i());
        assert_eq!(q.conj_swap(), xb(1, 0).scale(&GaussianRational::from_ints(0, -1)));
    }

    #[test]
    fn vector_round_trip() {
        let p = x(3, 0)
            .multiply(&x(3, 2))
            .unwrap()
            .scale(&GaussianRational::from_ints(2, -1));
        let v = p.to_vector();
        assert_eq!(HermitianPoly::from_vector(3, 2, 0, &v).unwrap(), p);
    }

    #[test]
    fn mismatched_bidegree_rejected() {
        assert!(x(2, 0).add(&xb(2, 0)).is_err());
        assert!(x(2, 0).add(&x(3, 0)).is_err());
    }
}
