//! Weyl rigidity of real quadratic forms with values in a real space `W`.

use num_traits::Zero;

use super::curvature::{kulkarni_nomizu, ricci_and_weyl, CurvatureElement};
use super::system::{outside_span, span_dim};
use super::verdict::{RigidityVerdict, Status, SystemDims};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{kernel_basis, GaussianRational, Rational, RationalMatrix};
use crate::polyalg::{HermitianPoly, Monomial, VectorForm};

/// `H = h^a_{ij} x^i x^j ⊗ w_a` with real symmetric `h^a`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealSymForm {
    n: usize,
    components: Vec<RationalMatrix>,
}

impl RealSymForm {
    pub fn new(n: usize, components: Vec<RationalMatrix>) -> Result<Self> {
        for c in &components {
            check_dim("RealSymForm (rows)", n, c.rows())?;
            check_dim("RealSymForm (cols)", n, c.cols())?;
            if *c != c.transpose() {
                return Err(Error::InvalidParams("components must be symmetric".into()));
            }
        }
        Ok(RealSymForm { n, components })
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = RationalMatrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        RealSymForm { n, components: vec![m] }
    }

    pub fn zero(n: usize, r: usize) -> Self {
        RealSymForm {
            n,
            components: vec![RationalMatrix::zeros(n, n); r],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalMatrix::is_zero)
    }

    /// Removes the trace of every component: `h - (tr h / n) δ`.
    pub fn trace_free(&self) -> RealSymForm {
        let n = self.n;
        let components = self
            .components
            .iter()
            .map(|c| {
                let mut tr = Rational::zero();
                for i in 0..n {
                    tr += &c[(i, i)];
                }
                let shift = tr / &Rational::from(n as i64);
                let mut out = c.clone();
                for i in 0..n {
                    out[(i, i)] -= &shift;
                }
                out
            })
            .collect();
        RealSymForm { n, components }
    }

    /// Adds `t δ` to component `a`.
    pub fn plus_identity(&self, a: usize, t: &Rational) -> RealSymForm {
        let mut out = self.clone();
        for i in 0..self.n {
            out.components[a][(i, i)] += t;
        }
        out
    }

    /// Real coordinates: component-major, then upper-triangle entries `i <= j`.
    pub fn to_vector(&self) -> Vec<Rational> {
        let n = self.n;
        self.components
            .iter()
            .flat_map(|c| (0..n).flat_map(move |i| (i..n).map(move |j| c[(i, j)].clone())))
            .collect()
    }

    pub fn from_vector(n: usize, r: usize, v: &[Rational]) -> Result<Self> {
        let per = n * (n + 1) / 2;
        check_dim("RealSymForm::from_vector", per * r, v.len())?;
        let components = v
            .chunks(per.max(1))
            .take(r)
            .map(|chunk| {
                let mut m = RationalMatrix::zeros(n, n);
                let mut it = chunk.iter();
                for i in 0..n {
                    for j in i..n {
                        let x = it.next().expect("chunk length").clone();
                        m[(i, j)] = x.clone();
                        m[(j, i)] = x;
                    }
                }
                m
            })
            .collect();
        Ok(RealSymForm { n, components })
    }

    /// `sum_a v[a][b] H^b`.
    pub fn mix(&self, v: &RationalMatrix) -> Result<RealSymForm> {
        check_dim("RealSymForm::mix", self.r(), v.cols())?;
        let n = self.n;
        let components = (0..v.rows())
            .map(|a| {
                let mut acc = RationalMatrix::zeros(n, n);
                for b in 0..v.cols() {
                    for i in 0..n {
                        for j in 0..n {
                            acc[(i, j)] += &(v[(a, b)].clone() * &self.components[b][(i, j)]);
                        }
                    }
                }
                acc
            })
            .collect();
        Ok(RealSymForm { n, components })
    }

    /// The polynomial `h_ij x^i x^j` per component: `x^i x^j` (`i<j`) gets
    /// `2 h_ij`, `(x^i)^2` gets `h_ii`.
    pub fn to_vector_form(&self) -> VectorForm {
        let n = self.n;
        let components = self
            .components
            .iter()
            .map(|c| {
                let mut terms = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        let mut e = vec![0u16; n];
                        e[i] += 1;
                        e[j] += 1;
                        let coeff = if i == j { c[(i, j)].clone() } else { c[(i, j)].clone() * &Rational::from(2) };
                        terms.push((Monomial::holomorphic(e), GaussianRational::real(coeff)));
                    }
                }
                HermitianPoly::from_terms(n, 2, 0, terms).expect("degree-2 terms")
            })
            .collect();
        VectorForm::new(n, 2, components).expect("shape is consistent")
    }
}

/// Linearized Gauss map `sum_a h^a ∧ p^a` (Kulkarni–Nomizu), a curvature-like
/// tensor symmetric in `H` and `P`.
pub fn gauss_gamma(h: &RealSymForm, p: &RealSymForm) -> Result<CurvatureElement> {
    check_dim("gauss_gamma (n)", h.n, p.n)?;
    check_dim("gauss_gamma (r)", h.r(), p.r())?;
    let mut acc = CurvatureElement::zero(h.n);
    for (a, b) in h.components.iter().zip(&p.components) {
        acc = acc.add(&kulkarni_nomizu(a, b)?)?;
    }
    Ok(acc)
}

/// Matrix of `P -> γ(H_0, P)^W` in the coordinates of
/// [`RealSymForm::to_vector`] and [`CurvatureElement::to_vector`];
/// identically zero when the Weyl space vanishes (`n < 4`).
pub fn weyl_system(h: &RealSymForm) -> Result<RationalMatrix> {
    let (n, r) = (h.n, h.r());
    let unknowns = r * n * (n + 1) / 2;
    let h0 = h.trace_free();
    let columns = (0..unknowns)
        .map(|j| {
            let mut e = vec![Rational::zero(); unknowns];
            e[j] = Rational::from(1);
            let p = RealSymForm::from_vector(n, r, &e)?;
            Ok(ricci_and_weyl(&gauss_gamma(&h0, &p)?)?.1.to_vector())
        })
        .collect::<Result<Vec<_>>>()?;
    let equations = columns.first().map_or(0, Vec::len);
    RationalMatrix::from_columns(equations, &columns)
}

/// Solves `γ(H,P)^W = 0` over real `P` and compares with the trivial
/// solutions: skew mixings `vH` and the pure-trace directions `δ ⊗ w_a`
/// (whose images are pure Ricci). `H` enters through its trace-free part.
pub fn weyl_rigid(h: &RealSymForm) -> Result<RigidityVerdict> {
    let (n, r) = (h.n, h.r());
    let unknowns = r * n * (n + 1) / 2;
    let unit = |j: usize| {
        let mut v = vec![Rational::zero(); unknowns];
        v[j] = Rational::from(1);
        v
    };
    if h.is_zero() {
        let full: Vec<Vec<Rational>> = (0..unknowns).map(unit).collect();
        return Ok(RigidityVerdict {
            status: Status::Degenerate,
            witness: None,
            solution_space: full.clone(),
            gamma_kernel: full,
            dims: SystemDims {
                unknowns,
                ..SystemDims::default()
            },
        });
    }
    let h0 = h.trace_free();
    let system = weyl_system(h)?;
    let equations = system.rows();
    let solutions = if equations == 0 {
        (0..unknowns).map(unit).collect()
    } else {
        kernel_basis(&system)
    };

    let mut trivial = Vec::new();
    for a in 0..r {
        for b in a + 1..r {
            let mut v = RationalMatrix::zeros(r, r);
            v[(a, b)] = Rational::from(1);
            v[(b, a)] = Rational::from(-1);
            trivial.push(h0.mix(&v)?.to_vector());
        }
    }
    for a in 0..r {
        trivial.push(RealSymForm::zero(n, r).plus_identity(a, &Rational::from(1)).to_vector());
    }
    let trivial_dim = span_dim(unknowns, &trivial);
    let solution_rank = unknowns - solutions.len();
    let extra = outside_span(unknowns, &trivial, &solutions);
    let (status, witness) = if extra.is_empty() && solutions.len() == trivial_dim {
        (Status::Rigid, None)
    } else {
        let w = RealSymForm::from_vector(n, r, &extra[0])?.to_vector_form();
        (Status::NotRigid, Some(w))
    };
    Ok(RigidityVerdict {
        status,
        witness,
        solution_space: solutions,
        gamma_kernel: trivial,
        dims: SystemDims {
            unknowns,
            kernel_equations: 0,
            reduced_equations: equations,
            kernel_rank: unknowns - trivial_dim,
            reduced_rank: solution_rank,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn gauss_gamma_example() {
        let h = RealSymForm::diagonal(&q(&[1, -1]));
        let p = RealSymForm::diagonal(&q(&[1, 1]));
        let r = gauss_gamma(&h, &p).unwrap();
        assert_eq!(r.get(0, 1, 0, 1), Rational::from(0));
        assert_eq!(gauss_gamma(&h, &p).unwrap(), gauss_gamma(&p, &h).unwrap());
        assert!(gauss_gamma(&h, &RealSymForm::zero(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn plane_forms_are_never_rigid() {
        let v = weyl_rigid(&RealSymForm::diagonal(&q(&[1, 2]))).unwrap();
        assert_eq!(v.status, Status::NotRigid);
        assert_eq!(v.solution_dim(), 3);
    }

    #[test]
    fn three_space_forms_are_never_rigid() {
        // The Weyl tensor vanishes identically for n = 3.
        let v = weyl_rigid(&RealSymForm::diagonal(&q(&[1, 1, -2]))).unwrap();
        assert_eq!(v.status, Status::NotRigid);
        assert_eq!(v.solution_dim(), 6);
    }

    #[test]
    fn trace_shift_does_not_change_verdict() {
        let h = RealSymForm::diagonal(&q(&[1, 1, -2, 0]));
        let a = weyl_rigid(&h).unwrap();
        let b = weyl_rigid(&h.plus_identity(0, &Rational::from(5))).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.solution_dim(), b.solution_dim());
    }

    #[test]
    fn vector_form_convention() {
        let mut m = RationalMatrix::zeros(2, 2);
        m[(0, 1)] = Rational::from(3);
        m[(1, 0)] = Rational::from(3);
        m[(0, 0)] = Rational::from(1);
        let f = RealSymForm::new(2, vec![m]).unwrap().to_vector_form();
        assert_eq!(format!("{:?}", f.component(0)), "1*x1^2 + 6*x1*x2");
    }
}
