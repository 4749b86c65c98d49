//! The Bochner-rigidity decision and the algebra around it.

use num_traits::{One, Zero};

use super::system::{
    annihilates, outside_span, real_direction, realified_rows, rows_to_columns, span_dim,
};
use super::verdict::{RigidityVerdict, Status, SystemDims};
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{
    inverse, membership, sparse_kernel, ComplexMatrix, GaussianRational, Rational, SparseVec,
};
use crate::polyalg::{pairing, s1_decompose, GramPair, HermitianPoly, S1Reducer, VectorForm};

/// `γ(H, P) = <H, Pbar> + <P, Hbar>`, Hermitian-symmetric of bidegree `(k, k)`.
pub fn gamma(h: &VectorForm, p: &VectorForm, grams: &GramPair) -> Result<HermitianPoly> {
    check_shapes(h, grams)?;
    check_dim("gamma (degree)", h.k(), p.k())?;
    pairing(h, p, &grams.big_g)?.add(&pairing(p, h, &grams.big_g)?)
}

fn check_shapes(h: &VectorForm, grams: &GramPair) -> Result<()> {
    check_dim("Gram matrix g", h.n(), grams.n())?;
    check_dim("Gram matrix G", h.r(), grams.r())
}

/// An `r x r` matrix with `u + u* = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewHermitian(ComplexMatrix);

impl SkewHermitian {
    pub fn new(u: ComplexMatrix) -> Result<Self> {
        let sum = add_matrices(&u, &u.conj_transpose());
        if u.rows() != u.cols() || !sum.is_zero() {
            return Err(Error::Precondition("matrix is not skew-Hermitian".into()));
        }
        Ok(SkewHermitian(u))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    /// Real basis of the skew-Hermitian `r x r` matrices (dimension `r^2`):
    /// `i E_aa`, then for `a < b` the pair `E_ab - E_ba`, `i (E_ab + E_ba)`.
    pub fn basis(r: usize) -> Vec<ComplexMatrix> {
        let mut out = Vec::with_capacity(r * r);
        for a in 0..r {
            let mut m = ComplexMatrix::zeros(r, r);
            m[(a, a)] = GaussianRational::i();
            out.push(m);
        }
        for a in 0..r {
            for b in a + 1..r {
                let mut m = ComplexMatrix::zeros(r, r);
                m[(a, b)] = GaussianRational::from(1);
                m[(b, a)] = GaussianRational::from(-1);
                out.push(m);
                let mut m = ComplexMatrix::zeros(r, r);
                m[(a, b)] = GaussianRational::i();
                m[(b, a)] = GaussianRational::i();
                out.push(m);
            }
        }
        out
    }
}

fn add_matrices(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out[(i, j)] += &b[(i, j)];
        }
    }
    out
}

fn conj_matrix(m: &ComplexMatrix) -> ComplexMatrix {
    m.conj_transpose().transpose()
}

/// Mixing matrices `u` with `γ(H, uH) = 0` for every `H`: those with
/// `Gbar u` skew-Hermitian. With `G = I` these are the skew-Hermitian `u`.
pub fn trivial_mixings(big_g: &ComplexMatrix) -> Result<Vec<ComplexMatrix>> {
    let gbar_inv = inverse(&conj_matrix(big_g))
        .ok_or_else(|| Error::NotPositiveDefinite("G is singular".into()))?;
    SkewHermitian::basis(big_g.rows())
        .iter()
        .map(|s| gbar_inv.matmul(s))
        .collect()
}

/// The two realified linear systems behind a Bochner verdict.
///
/// Unknowns are the real coordinates of `P` (see
/// [`VectorForm::to_real_vector`]). `kernel_rows` encode `γ(H,P) = 0`;
/// `reduced_rows` encode `γ(H,P) ≡ 0` modulo `S_1`, i.e. the remainder of
/// `γ(H,P)` on division by the generator. Since both images are fixed by
/// `conj_swap`, only one monomial of each conjugate pair contributes rows.
#[derive(Clone, Debug)]
pub struct BochnerSystem {
    pub unknowns: usize,
    pub kernel_rows: Vec<SparseVec<Rational>>,
    pub reduced_rows: Vec<SparseVec<Rational>>,
    /// Real vectors `uH` for a basis of [`trivial_mixings`]; they span a
    /// subspace of the kernel.
    pub mixing_orbit: Vec<Vec<Rational>>,
}

impl BochnerSystem {
    /// The kernel system as sparse columns, one per unknown.
    pub fn kernel_columns(&self) -> Vec<SparseVec<Rational>> {
        rows_to_columns(self.unknowns, &self.kernel_rows)
    }

    pub fn reduced_columns(&self) -> Vec<SparseVec<Rational>> {
        rows_to_columns(self.unknowns, &self.reduced_rows)
    }
}

pub fn bochner_system(h: &VectorForm, grams: &GramPair) -> Result<BochnerSystem> {
    check_shapes(h, grams)?;
    let (n, k, r) = (h.n(), h.k(), h.r());
    let unknowns = VectorForm::real_dim(n, k, r);
    let mut reducer = S1Reducer::new(n, &grams.g)?;
    let mut images = Vec::with_capacity(unknowns);
    let mut reduced = Vec::with_capacity(unknowns);
    for j in 0..unknowns {
        let img = gamma(h, &real_direction(n, k, r, j), grams)?;
        reduced.push(reducer.normal_form(&img));
        images.push(img);
    }
    let mixing_orbit = trivial_mixings(&grams.big_g)?
        .iter()
        .map(|u| h.mix(u).map(|p| p.to_real_vector()))
        .collect::<Result<_>>()?;
    Ok(BochnerSystem {
        unknowns,
        kernel_rows: realified_rows(&images, true),
        reduced_rows: realified_rows(&reduced, true),
        mixing_orbit,
    })
}

/// Decides whether `γ(H,P) ∈ S_1` forces `γ(H,P) = 0`.
///
/// The kernel `K` of `γ(H,·)` contains the mixing orbit `L`, and the
/// solution space `S` contains `K`; these inclusions bound the ranks of the
/// two systems, so row reduction stops as soon as the bound is met.
pub fn bochner_rigid(h: &VectorForm, grams: &GramPair) -> Result<RigidityVerdict> {
    check_shapes(h, grams)?;
    let unknowns = VectorForm::real_dim(h.n(), h.k(), h.r());
    if h.is_zero() {
        let full: Vec<Vec<Rational>> = (0..unknowns).map(|j| unit_vector(unknowns, j)).collect();
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
    let sys = bochner_system(h, grams)?;
    debug_assert!(sys.mixing_orbit.iter().all(|v| annihilates(&sys.kernel_rows, v)));
    let orbit_dim = span_dim(unknowns, &sys.mixing_orbit);
    let (kernel, kernel_rank) = sparse_kernel(unknowns, &sys.kernel_rows, Some(unknowns - orbit_dim));
    let (solutions, reduced_rank) =
        sparse_kernel(unknowns, &sys.reduced_rows, Some(unknowns - kernel.len()));
    let dims = SystemDims {
        unknowns,
        kernel_equations: sys.kernel_rows.len(),
        reduced_equations: sys.reduced_rows.len(),
        kernel_rank,
        reduced_rank,
    };
    let (status, witness) = if solutions.len() == kernel.len() {
        (Status::Rigid, None)
    } else {
        let extra = outside_span(unknowns, &kernel, &solutions);
        let w = VectorForm::from_real_vector(h.n(), h.k(), h.r(), &extra[0])?;
        (Status::NotRigid, Some(w))
    };
    Ok(RigidityVerdict {
        status,
        witness,
        solution_space: solutions,
        gamma_kernel: kernel,
        dims,
    })
}

fn unit_vector(len: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[j] = Rational::one();
    v
}

/// `true` iff the coefficient matrix of `H` has rank `r`, i.e. the induced
/// map `S^{k,0}(V) -> W` is onto.
pub fn nondegenerate(h: &VectorForm) -> bool {
    h.coefficient_matrix().rank() == h.r()
}

/// Solves `P^a = sum_b u[a][b] H^b` and checks `u + u* = 0`.
///
/// Errors when `H` is degenerate; `None` when no mixing matrix reproduces `P`
/// or the one found is not skew-Hermitian.
pub fn recover_skew(h: &VectorForm, p: &VectorForm) -> Result<Option<SkewHermitian>> {
    Ok(recover_mixing(h, p)?.and_then(|u| SkewHermitian::new(u).ok()))
}

/// Like [`recover_skew`] for a general `W`-frame: returns `u` when `P = uH`
/// and `Gbar u` is skew-Hermitian.
pub fn recover_skew_gram(h: &VectorForm, p: &VectorForm, big_g: &ComplexMatrix) -> Result<Option<ComplexMatrix>> {
    let Some(u) = recover_mixing(h, p)? else {
        return Ok(None);
    };
    let s = conj_matrix(big_g).matmul(&u)?;
    Ok(SkewHermitian::new(s).ok().map(|_| u))
}

/// The unique `u` with `P = uH`, if any.
pub fn recover_mixing(h: &VectorForm, p: &VectorForm) -> Result<Option<ComplexMatrix>> {
    check_dim("recover_skew (variables)", h.n(), p.n())?;
    check_dim("recover_skew (degree)", h.k(), p.k())?;
    check_dim("recover_skew (W dimension)", h.r(), p.r())?;
    if !nondegenerate(h) {
        return Err(Error::Precondition("H must be nondegenerate".into()));
    }
    let spanning: Vec<Vec<GaussianRational>> = h.components().iter().map(HermitianPoly::to_vector).collect();
    let mut rows = Vec::with_capacity(h.r());
    for pa in p.components() {
        match membership(&pa.to_vector(), &spanning)? {
            Some(coeffs) => rows.push(coeffs),
            None => return Ok(None),
        }
    }
    if rows.is_empty() {
        return Ok(Some(ComplexMatrix::zeros(0, 0)));
    }
    Ok(Some(ComplexMatrix::from_rows(rows)?))
}

/// Solutions of `<H, Bbar> ∈ S_1^{k-1,0}` over `B ∈ S^{1,0} ⊗ W`.
#[derive(Clone, Debug, PartialEq)]
pub struct Lemma1Solution {
    /// Real basis of the solution space.
    pub solutions: Vec<VectorForm>,
    /// Whether `<H, Bbar> = 0` for every basis solution.
    pub pairings_vanish: bool,
}

pub fn lemma1_solve(h: &VectorForm, grams: &GramPair) -> Result<Lemma1Solution> {
    check_shapes(h, grams)?;
    if h.k() < 2 {
        return Err(Error::InvalidParams(format!("lemma1_solve needs k >= 2, got {}", h.k())));
    }
    let (n, r) = (h.n(), h.r());
    let unknowns = VectorForm::real_dim(n, 1, r);
    let mut reducer = S1Reducer::new(n, &grams.g)?;
    let reduced = (0..unknowns)
        .map(|j| Ok(reducer.normal_form(&pairing(h, &real_direction(n, 1, r, j), &grams.big_g)?)))
        .collect::<Result<Vec<_>>>()?;
    let (kernel, _) = sparse_kernel(unknowns, &realified_rows(&reduced, false), None);
    let solutions = kernel
        .iter()
        .map(|v| VectorForm::from_real_vector(n, 1, r, v))
        .collect::<Result<Vec<_>>>()?;
    let mut pairings_vanish = true;
    for b in &solutions {
        pairings_vanish &= pairing(h, b, &grams.big_g)?.is_zero();
    }
    Ok(Lemma1Solution {
        solutions,
        pairings_vanish,
    })
}

/// `true` iff `γ(H,H)` is a multiple of the generator.
pub fn bochner_flat(h: &VectorForm, grams: &GramPair) -> Result<bool> {
    let q = gamma(h, h, grams)?;
    Ok(s1_decompose(&q, &grams.g)?.is_some())
}
