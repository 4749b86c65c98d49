//! Jets, osculating flags, type numbers and fundamental forms of a
//! polynomial map at a point of the affine chart.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::map::PolyMap;
use crate::error::{check_dim, Error, Result};
use crate::exactnum::{inverse, membership, ComplexMatrix, Echelon, GaussianRational, Rational};
use crate::polyalg::{binomial, exponent_vectors, GramPair, HermitianPoly, Monomial, VectorForm};

type Vector = Vec<GaussianRational>;

/// Taylor coefficients `c_α` of the map at an affine point, `|α| <= order`:
/// `F(p + u) = sum_α c_α u^α`.
fn taylor(map: &PolyMap, point: &[GaussianRational], order: usize) -> Result<BTreeMap<Vec<u16>, Vector>> {
    let d = map.source_dim();
    check_dim("jet (point)", d, point.len())?;
    let targets = map.components().len();
    let mut out: BTreeMap<Vec<u16>, Vector> = BTreeMap::new();
    for (a, comp) in map.components().iter().enumerate() {
        for (m, c) in comp.terms() {
            let e = m.hol();
            // Expand prod_v (p_v + u_v)^{e_v} over the affine variables.
            let mut partial: Vec<(Vec<u16>, GaussianRational)> = vec![(Vec::with_capacity(d), c.clone())];
            for v in 0..d {
                let ev = e[v + 1] as usize;
                let mut next = Vec::new();
                for (alpha, coeff) in &partial {
                    let used: usize = alpha.iter().map(|&x| x as usize).sum();
                    for j in 0..=ev.min(order - used.min(order)) {
                        let pw = pow(&point[v], ev - j);
                        if pw.is_zero() {
                            continue;
                        }
                        let mut al = alpha.clone();
                        al.push(j as u16);
                        let scale = GaussianRational::from(binomial(ev, j) as i64);
                        next.push((al, coeff.clone() * &pw * &scale));
                    }
                }
                partial = next;
            }
            for (alpha, coeff) in partial {
                let slot = out
                    .entry(alpha)
                    .or_insert_with(|| vec![GaussianRational::zero(); targets]);
                slot[a] += &coeff;
            }
        }
    }
    Ok(out)
}

fn pow(z: &GaussianRational, e: usize) -> GaussianRational {
    let mut acc = GaussianRational::from(1);
    for _ in 0..e {
        acc *= z;
    }
    acc
}

fn factorial(alpha: &[u16]) -> i64 {
    alpha.iter().map(|&a| (1..=a as i64).product::<i64>()).product()
}

/// Partial derivatives `∂^α F(p)` for `|α| <= order`, graded by `|α|` and
/// in canonical exponent order within each degree.
pub fn jet(map: &PolyMap, point: &[GaussianRational], order: usize) -> Result<Vec<(Vec<u16>, Vector)>> {
    let value = map.eval(&homogeneous(point))?;
    if value.iter().all(Zero::is_zero) {
        return Err(Error::OutsideChart("the map vanishes at the point".into()));
    }
    let coeffs = taylor(map, point, order)?;
    let targets = map.components().len();
    let d = map.source_dim();
    let mut out = Vec::new();
    for l in 0..=order {
        for alpha in graded(d, l) {
            let c = coeffs
                .get(&alpha)
                .cloned()
                .unwrap_or_else(|| vec![GaussianRational::zero(); targets]);
            let w = GaussianRational::from(factorial(&alpha));
            out.push((alpha, c.iter().map(|x| x.clone() * &w).collect()));
        }
    }
    Ok(out)
}

fn graded(d: usize, l: usize) -> Vec<Vec<u16>> {
    if d == 0 {
        return if l == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    exponent_vectors(d, l)
}

fn homogeneous(point: &[GaussianRational]) -> Vec<GaussianRational> {
    std::iter::once(GaussianRational::from(1)).chain(point.iter().cloned()).collect()
}

/// `<u, v> = sum_k u_k conj(v_k)`.
pub(crate) fn herm(u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a.clone() * &b.conj());
        }
    }
    acc
}

fn gram(vectors: &[Vector]) -> ComplexMatrix {
    let r = vectors.len();
    let mut g = ComplexMatrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            g[(a, b)] = herm(&vectors[a], &vectors[b]);
        }
    }
    g
}

/// Orthogonal projection onto the complement of a span.
struct Complement {
    basis: Vec<Vector>,
    gram_inv: ComplexMatrix,
}

impl Complement {
    fn new(basis: Vec<Vector>) -> Self {
        let gram_inv = inverse(&gram(&basis).transpose()).expect("basis is independent");
        Complement { basis, gram_inv }
    }

    fn project(&self, v: &[GaussianRational]) -> Vector {
        // Solve sum_j c_j <B_j, B_i> = <v, B_i>.
        let rhs: Vector = self.basis.iter().map(|b| herm(v, b)).collect();
        let c = self.gram_inv.mul_vec(&rhs).expect("sizes agree");
        let mut out = v.to_vec();
        for (cj, b) in c.iter().zip(&self.basis) {
            if cj.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                *o -= &(cj.clone() * x);
            }
        }
        out
    }
}

/// The osculating flag `O_0 ⊂ O_1 ⊂ … ⊂ O_τ` at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct OsculatingFlag {
    /// Affine point (source coordinate 0 set to 1).
    pub point: Vector,
    /// `flag_bases[l]` is a basis of `O_l`, extending `flag_bases[l-1]`.
    pub flag_bases: Vec<Vec<Vector>>,
    /// `n = dim O_1 - dim O_0`.
    pub tangent_dim: usize,
    /// `r_l = dim O_l - dim O_{l-1}` for `l = 2..=τ`.
    pub type_numbers: Vec<usize>,
    pub height: usize,
    /// Gram matrix of the tangent frame `π_1 ∂_a F`.
    pub tangent_gram: ComplexMatrix,
}

impl OsculatingFlag {
    pub fn dims(&self) -> Vec<usize> {
        self.flag_bases.iter().map(Vec::len).collect()
    }

    /// `n + r_2 + … + r_τ`, the projective dimension of the span of the image
    /// when the map is full.
    pub fn spanned_dim(&self) -> usize {
        self.tangent_dim + self.type_numbers.iter().sum::<usize>()
    }
}

pub fn osculating_flag(map: &PolyMap, point: &[GaussianRational]) -> Result<OsculatingFlag> {
    let order = map.degree() + 1;
    let derivs = jet(map, point, order)?;
    let targets = map.components().len();
    let d = map.source_dim();
    let mut ech: Echelon<GaussianRational> = Echelon::new(targets);
    let mut bases: Vec<Vec<Vector>> = Vec::new();
    let mut current: Vec<Vector> = Vec::new();
    let mut jumps = Vec::new();
    let mut idx = 0;
    for l in 0..=order {
        let count = graded(d, l).len();
        for (_, v) in &derivs[idx..idx + count] {
            if ech.insert_dense(v) {
                current.push(v.clone());
            }
        }
        idx += count;
        let prev = bases.last().map_or(0, Vec::len);
        jumps.push(current.len() - prev);
        bases.push(current.clone());
    }
    let height = (1..jumps.len()).rev().find(|&l| jumps[l] > 0).unwrap_or(0);
    if let Some(l) = (1..height).find(|&l| jumps[l] == 0) {
        return Err(Error::NonGeneric(format!("osculating flag stalls at order {l} and grows later")));
    }
    if jumps[1] < d {
        return Err(Error::NonGeneric(format!(
            "differential has rank {} < {d}; not an immersion here",
            jumps[1]
        )));
    }
    bases.truncate(height.max(1) + 1);
    let first = Complement::new(bases[0].clone());
    let tangent: Vec<Vector> = derivs[1..=d].iter().map(|(_, v)| first.project(v)).collect();
    Ok(OsculatingFlag {
        point: point.to_vec(),
        flag_bases: bases,
        tangent_dim: jumps[1],
        type_numbers: jumps[2..=height.max(1)].to_vec(),
        height,
        tangent_gram: gram(&tangent),
    })
}

/// One level `F^l` of the tower, with the Gram matrices of its frames.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalForm {
    pub level: usize,
    pub form: VectorForm,
    pub grams: GramPair,
    /// The frame of `W_l` inside the target, one vector per component.
    pub frame: Vec<Vector>,
}

/// Fundamental forms `F^2, …, F^τ`.
#[derive(Clone, Debug, PartialEq)]
pub struct FFTower {
    pub flag: OsculatingFlag,
    pub forms: Vec<FundamentalForm>,
}

impl FFTower {
    pub fn level(&self, l: usize) -> Option<&FundamentalForm> {
        self.forms.iter().find(|f| f.level == l)
    }
}

/// Projects the order-`l` Taylor terms onto `O_l ⊖ O_{l-1}` and writes them
/// in a frame of that complement.
pub fn fundamental_forms(map: &PolyMap, point: &[GaussianRational]) -> Result<FFTower> {
    let flag = osculating_flag(map, point)?;
    let d = map.source_dim();
    let coeffs = taylor(map, point, flag.height)?;
    let targets = map.components().len();
    let mut forms = Vec::new();
    for l in 2..=flag.height {
        let proj = Complement::new(flag.flag_bases[l - 1].clone());
        let alphas = graded(d, l);
        let projected: Vec<Vector> = alphas
            .iter()
            .map(|a| {
                let c = coeffs
                    .get(a)
                    .cloned()
                    .unwrap_or_else(|| vec![GaussianRational::zero(); targets]);
                proj.project(&c)
            })
            .collect();
        let mut ech = Echelon::new(targets);
        let frame: Vec<Vector> = projected.iter().filter(|v| ech.insert_dense(v)).cloned().collect();
        let r = frame.len();
        let mut terms: Vec<Vec<(Monomial, GaussianRational)>> = vec![Vec::new(); r];
        for (alpha, v) in alphas.iter().zip(&projected) {
            let coords = membership(v, &frame)?.expect("vector lies in the spanned complement");
            for (b, c) in coords.into_iter().enumerate() {
                terms[b].push((Monomial::holomorphic(alpha.clone()), c));
            }
        }
        let components = terms
            .into_iter()
            .map(|t| HermitianPoly::from_terms(d, l, 0, t))
            .collect::<Result<Vec<_>>>()?;
        forms.push(FundamentalForm {
            level: l,
            form: VectorForm::new(d, l, components)?,
            grams: GramPair::new(flag.tangent_gram.clone(), gram(&frame))?,
            frame,
        });
    }
    Ok(FFTower { flag, forms })
}

/// `true` iff the component polynomials of both lists span the same complex
/// subspace.
pub fn span_equal(a: &[VectorForm], b: &[VectorForm]) -> Result<bool> {
    let polys = |list: &[VectorForm]| -> Vec<Vector> {
        list.iter()
            .flat_map(|f| f.components().iter().map(HermitianPoly::to_vector))
            .collect()
    };
    let (pa, pb) = (polys(a), polys(b));
    let len = pa.first().or(pb.first()).map_or(0, Vec::len);
    for v in pa.iter().chain(&pb) {
        check_dim("span_equal", len, v.len())?;
    }
    let rank = |vs: &[Vector]| {
        let mut e = Echelon::new(len);
        for v in vs {
            e.insert_dense(v);
        }
        e.rank()
    };
    let both: Vec<Vector> = pa.iter().chain(&pb).cloned().collect();
    let r = rank(&both);
    Ok(r == rank(&pa) && r == rank(&pb))
}

/// Type numbers at several points; errors with `NonGeneric` when they differ.
pub fn constant_type(map: &PolyMap, points: &[Vector]) -> Result<(usize, Vec<usize>)> {
    let mut seen: Option<(usize, Vec<usize>)> = None;
    for p in points {
        let f = osculating_flag(map, p)?;
        let here = (f.tangent_dim, f.type_numbers.clone());
        match &seen {
            None => seen = Some(here),
            Some(s) if *s != here => {
                return Err(Error::NonGeneric(format!("type numbers {:?} vs {:?}", s, here)));
            }
            _ => {}
        }
    }
    seen.ok_or_else(|| Error::InvalidParams("no sample points".into()))
}

/// Deterministic small-height Gaussian-rational points.
pub fn random_points(dim: usize, count: usize, seed: u64) -> Vec<Vector> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let q = |rng: &mut rand_chacha::ChaCha8Rng| Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let re = q(&mut rng);
                    let im = q(&mut rng);
                    GaussianRational::new(re, im)
                })
                .collect()
        })
        .collect()
}
