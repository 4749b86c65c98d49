use num_traits::Zero;

use super::monomial::space_basis;
use super::poly::HermitianPoly;
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{complexify_vector, realify_vector, ComplexMatrix, GaussianRational, Rational};

/// A `W`-valued holomorphic form `H = H^a ⊗ e_a` in `S^{k,0}(V*) ⊗ W`, stored
/// as `r = dim W` holomorphic polynomials of degree `k` in `n = dim V`
/// variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorForm {
    n: usize,
    k: usize,
    components: Vec<HermitianPoly>,
}

impl VectorForm {
    pub fn new(n: usize, k: usize, components: Vec<HermitianPoly>) -> Result<Self> {
        for c in &components {
            check_dim("VectorForm::new (variables)", n, c.n())?;
            if c.bidegree() != (k, 0) {
                return Err(Error::InvalidParams(format!(
                    "component has bidegree {:?}, expected ({k}, 0)",
                    c.bidegree()
                )));
            }
        }
        Ok(VectorForm { n, k, components })
    }

    pub fn zero(n: usize, k: usize, r: usize) -> Self {
        VectorForm {
            n,
            k,
            components: vec![HermitianPoly::zero(n, k, 0); r],
        }
    }

    pub fn scalar(poly: HermitianPoly) -> Result<Self> {
        let (k, _) = poly.bidegree();
        VectorForm::new(poly.n(), k, vec![poly])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[HermitianPoly] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &HermitianPoly {
        &self.components[a]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(HermitianPoly::is_zero)
    }

    fn check_same_shape(&self, other: &VectorForm, context: &'static str) -> Result<()> {
        check_dim(context, self.n, other.n)?;
        check_dim(context, self.k, other.k)?;
        check_dim(context, self.r(), other.r())
    }

    pub fn add(&self, other: &VectorForm) -> Result<VectorForm> {
        self.check_same_shape(other, "VectorForm::add")?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VectorForm { components, ..self.clone() })
    }

    pub fn scale(&self, s: &GaussianRational) -> VectorForm {
        VectorForm {
            n: self.n,
            k: self.k,
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// `(u H)^a = sum_b u[a][b] H^b` for an `r x r` matrix `u`.
    pub fn mix(&self, u: &ComplexMatrix) -> Result<VectorForm> {
        check_dim("VectorForm::mix", self.r(), u.cols())?;
        let mut components = Vec::with_capacity(u.rows());
        for a in 0..u.rows() {
            let mut acc = HermitianPoly::zero(self.n, self.k, 0);
            for b in 0..u.cols() {
                if !u[(a, b)].is_zero() {
                    acc = acc.add(&self.components[b].scale(&u[(a, b)]))?;
                }
            }
            components.push(acc);
        }
        Ok(VectorForm { n: self.n, k: self.k, components })
    }

    /// Substitutes `x -> A y` in every component.
    pub fn substitute(&self, a: &ComplexMatrix) -> Result<VectorForm> {
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(a))
            .collect::<Result<_>>()?;
        Ok(VectorForm { components, ..self.clone() })
    }

    /// The `r x dim S^{k,0}` coefficient matrix in the canonical basis.
    pub fn coefficient_matrix(&self) -> ComplexMatrix {
        let rows: Vec<Vec<GaussianRational>> = self.components.iter().map(|c| c.to_vector()).collect();
        if rows.is_empty() {
            return ComplexMatrix::zeros(0, space_basis(self.n, self.k, 0).len());
        }
        ComplexMatrix::from_rows(rows).expect("components share a basis")
    }

    /// Real coordinates: component-major, then monomial, then `(re, im)`.
    pub fn to_real_vector(&self) -> Vec<Rational> {
        self.components
            .iter()
            .flat_map(|c| realify_vector(&c.to_vector()))
            .collect()
    }

    pub fn from_real_vector(n: usize, k: usize, r: usize, v: &[Rational]) -> Result<Self> {
        let dim = space_basis(n, k, 0).len();
        check_dim("VectorForm::from_real_vector", 2 * r * dim, v.len())?;
        let components = v
            .chunks(2 * dim)
            .map(|chunk| HermitianPoly::from_vector(n, k, 0, &complexify_vector(chunk)))
            .collect::<Result<_>>()?;
        VectorForm::new(n, k, components)
    }

    /// Real dimension of `S^{k,0} ⊗ W`.
    pub fn real_dim(n: usize, k: usize, r: usize) -> usize {
        2 * r * space_basis(n, k, 0).len()
    }
}

/// Hermitian Gram matrices of the frames on `V` (`g`, `n x n`) and on `W`
/// (`big_g`, `r x r`). The identity pair is the unitary-frame case.
#[derive(Clone, PartialEq, Debug)]
pub struct GramPair {
    pub g: ComplexMatrix,
    pub big_g: ComplexMatrix,
}

impl GramPair {
    pub fn new(g: ComplexMatrix, big_g: ComplexMatrix) -> Result<Self> {
        check_positive_definite(&g, "g")?;
        check_positive_definite(&big_g, "G")?;
        Ok(GramPair { g, big_g })
    }

    pub fn identity(n: usize, r: usize) -> Self {
        GramPair {
            g: ComplexMatrix::identity(n),
            big_g: ComplexMatrix::identity(r),
        }
    }

    pub fn for_form(h: &VectorForm) -> Self {
        GramPair::identity(h.n(), h.r())
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn r(&self) -> usize {
        self.big_g.rows()
    }
}

/// Certifies that `m` is Hermitian with all leading principal minors positive.
pub fn check_positive_definite(m: &ComplexMatrix, name: &str) -> Result<()> {
    if !m.is_hermitian() {
        return Err(Error::NotPositiveDefinite(format!("{name} is not Hermitian")));
    }
    for (i, minor) in m.leading_minors().iter().enumerate() {
        if !minor.is_real() || !minor.re.is_positive() {
            return Err(Error::NotPositiveDefinite(format!(
                "{name}: leading minor {} is {minor:?}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// `<H, Pbar> = sum_{a,b} G_{ab} H^a conj(P^b)`, an element of `S^{k,l}`.
pub fn pairing(h: &VectorForm, p: &VectorForm, big_g: &ComplexMatrix) -> Result<HermitianPoly> {
    check_dim("pairing (variables)", h.n(), p.n())?;
    check_dim("pairing (W dimension)", h.r(), p.r())?;
    check_dim("pairing (Gram size)", h.r(), big_g.rows())?;
    check_dim("pairing (Gram size)", h.r(), big_g.cols())?;
    let mut out = HermitianPoly::zero(h.n(), h.k(), p.k());
    let bars: Vec<HermitianPoly> = p.components().iter().map(HermitianPoly::conj_swap).collect();
    for a in 0..h.r() {
        if h.component(a).is_zero() {
            continue;
        }
        for (b, pb) in bars.iter().enumerate() {
            let gab = &big_g[(a, b)];
            if gab.is_zero() || pb.is_zero() {
                continue;
            }
            out = out.add(&h.component(a).multiply(pb)?.scale(gab))?;
        }
    }
    Ok(out)
}
