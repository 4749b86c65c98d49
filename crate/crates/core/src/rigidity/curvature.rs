//! Curvature-like tensors on a real `n`-dimensional space with the standard
//! metric: Riemann symmetries, first Bianchi identity, and the
//! Weyl/Ricci splitting.

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{kernel_basis, Rational, RationalMatrix};

/// A 4-tensor `R_{ijkl}` with `R_{ijkl} = -R_{jikl} = -R_{ijlk} = R_{klij}`,
/// stored on pairs `i < j`, `k < l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureElement {
    n: usize,
    /// `m x m` row-major over pair indices, `m = n(n-1)/2`.
    entries: Vec<Rational>,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

impl CurvatureElement {
    pub fn zero(n: usize) -> Self {
        let m = pair_count(n);
        CurvatureElement {
            n,
            entries: vec![Rational::zero(); m * m],
        }
    }

    /// Builds the tensor from a full-index function, checking every symmetry
    /// including first Bianchi.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize, usize) -> Rational) -> Result<Self> {
        let mut full = vec![Rational::zero(); n * n * n * n];
        let idx = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        full[idx(i, j, k, l)] = f(i, j, k, l);
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = &full[idx(i, j, k, l)];
                        if *v != -full[idx(j, i, k, l)].clone()
                            || *v != -full[idx(i, j, l, k)].clone()
                            || *v != full[idx(k, l, i, j)]
                        {
                            return Err(Error::CurvatureSymmetry(format!(
                                "antisymmetry or pair symmetry fails at ({i},{j},{k},{l})"
                            )));
                        }
                        let bianchi = v.clone() + &full[idx(i, k, l, j)] + &full[idx(i, l, j, k)];
                        if !bianchi.is_zero() {
                            return Err(Error::CurvatureSymmetry(format!(
                                "first Bianchi identity fails at ({i},{j},{k},{l})"
                            )));
                        }
                    }
                }
            }
        }
        let mut out = CurvatureElement::zero(n);
        let m = pair_count(n);
        for (p, &(i, j)) in pairs(n).iter().enumerate() {
            for (q, &(k, l)) in pairs(n).iter().enumerate() {
                out.entries[p * m + q] = full[idx(i, j, k, l)].clone();
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `R_{ijkl}` for arbitrary indices.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        if i == j || k == l {
            return Rational::zero();
        }
        let (p, s1) = if i < j { (pair_index(self.n, i, j), false) } else { (pair_index(self.n, j, i), true) };
        let (q, s2) = if k < l { (pair_index(self.n, k, l), false) } else { (pair_index(self.n, l, k), true) };
        let v = self.entries[p * pair_count(self.n) + q].clone();
        if s1 ^ s2 {
            -v
        } else {
            v
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Coordinates on pairs `(i<j, k<l)`, row-major.
    pub fn to_vector(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    pub fn sub(&self, other: &CurvatureElement) -> Result<CurvatureElement> {
        check_dim("CurvatureElement::sub", self.n, other.n)?;
        Ok(CurvatureElement {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() - b).collect(),
        })
    }

    pub fn add(&self, other: &CurvatureElement) -> Result<CurvatureElement> {
        check_dim("CurvatureElement::add", self.n, other.n)?;
        Ok(CurvatureElement {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b).collect(),
        })
    }

    /// `ric_{jl} = sum_i R_{ijil}`.
    pub fn ricci(&self) -> RationalMatrix {
        let n = self.n;
        let mut out = RationalMatrix::zeros(n, n);
        for j in 0..n {
            for l in 0..n {
                let mut acc = Rational::zero();
                for i in 0..n {
                    acc += &self.get(i, j, i, l);
                }
                out[(j, l)] = acc;
            }
        }
        out
    }
}

/// Kulkarni–Nomizu product of two symmetric matrices:
/// `a_ik b_jl + a_jl b_ik - a_il b_jk - a_jk b_il`.
pub fn kulkarni_nomizu(a: &RationalMatrix, b: &RationalMatrix) -> Result<CurvatureElement> {
    let n = a.rows();
    check_dim("kulkarni_nomizu", n, b.rows())?;
    CurvatureElement::from_fn(n, |i, j, k, l| {
        a[(i, k)].clone() * &b[(j, l)] + &(a[(j, l)].clone() * &b[(i, k)])
            - &(a[(i, l)].clone() * &b[(j, k)])
            - &(a[(j, k)].clone() * &b[(i, l)])
    })
}

/// Basis of the space of curvature-like tensors; its dimension is
/// `n^2 (n^2 - 1) / 12`.
pub fn curvature_space_basis(n: usize) -> Result<Vec<CurvatureElement>> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("curvature tensors need n >= 2, got {n}")));
    }
    let ps = pairs(n);
    let m = ps.len();
    // Unknowns: the upper triangle (p <= q) of the symmetric pair matrix.
    let slots: Vec<(usize, usize)> = (0..m).flat_map(|p| (p..m).map(move |q| (p, q))).collect();
    let slot_of = |p: usize, q: usize| {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        slots.iter().position(|&s| s == (p, q)).expect("slot exists")
    };
    let signed = |i: usize, j: usize, k: usize, l: usize| -> (usize, i64) {
        let (p, s1) = if i < j { (pair_index(n, i, j), 1) } else { (pair_index(n, j, i), -1) };
        let (q, s2) = if k < l { (pair_index(n, k, l), 1) } else { (pair_index(n, l, k), -1) };
        (slot_of(p, q), s1 * s2)
    };
    // Bianchi only constrains four distinct indices i<j<k<l.
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let mut row = vec![Rational::zero(); slots.len()];
                    for (a, b, c, d) in [(i, j, k, l), (i, k, l, j), (i, l, j, k)] {
                        let (s, sign) = signed(a, b, c, d);
                        row[s] += &Rational::from(sign);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..slots.len())
            .map(|s| {
                let mut v = vec![Rational::zero(); slots.len()];
                v[s] = Rational::from(1);
                v
            })
            .collect()
    } else {
        kernel_basis(&RationalMatrix::from_rows(rows)?)
    };
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut entries = vec![Rational::zero(); m * m];
            for (s, &(p, q)) in slots.iter().enumerate() {
                entries[p * m + q] = v[s].clone();
                entries[q * m + p] = v[s].clone();
            }
            CurvatureElement { n, entries }
        })
        .collect())
}

/// Ricci contraction and Weyl part of a curvature-like tensor.
///
/// The Weyl part is `R - A ∧ δ` with `A = (Ric - s/(2(n-1)) δ) / (n-2)`, the
/// unique insertion with trace-free remainder. For `n = 2` it is zero.
pub fn ricci_and_weyl(r: &CurvatureElement) -> Result<(RationalMatrix, CurvatureElement)> {
    let n = r.n;
    let ric = r.ricci();
    if n <= 2 {
        return Ok((ric, CurvatureElement::zero(n)));
    }
    let mut s = Rational::zero();
    for i in 0..n {
        s += &ric[(i, i)];
    }
    let shift = s / &Rational::from(2 * (n as i64 - 1));
    let denom = Rational::from(n as i64 - 2);
    let mut a = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = ric[(i, j)].clone();
            if i == j {
                v -= &shift;
            }
            a[(i, j)] = v / &denom;
        }
    }
    let weyl = r.sub(&kulkarni_nomizu(&a, &RationalMatrix::identity(n))?)?;
    Ok((ric, weyl))
}
