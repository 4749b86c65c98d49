use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};
use crate::polyalg::{exponent_vectors, HermitianPoly, Monomial};

/// A homogeneous polynomial map `C^{d+1} -> C^{D+1}`. Jets are taken in the
/// affine chart where source coordinate 0 equals 1.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMap {
    name: String,
    degree: usize,
    components: Vec<HermitianPoly>,
}

impl PolyMap {
    pub fn new(name: impl Into<String>, components: Vec<HermitianPoly>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::InvalidParams("a map needs at least one component".into()))?;
        let (degree, vars) = (first.bidegree().0, first.n());
        for (a, c) in components.iter().enumerate() {
            if c.n() != vars || c.bidegree() != (degree, 0) {
                return Err(Error::InvalidParams(format!(
                    "component {a} is not holomorphic of degree {degree} in {vars} variables"
                )));
            }
        }
        if components.iter().all(HermitianPoly::is_zero) {
            return Err(Error::InvalidParams("all components vanish".into()));
        }
        Ok(PolyMap {
            name: name.into(),
            degree,
            components,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Source dimension `d`: the map is defined on `C^{d+1}`.
    pub fn source_dim(&self) -> usize {
        self.components[0].n() - 1
    }

    /// Target dimension `D`: the map lands in `C^{D+1}`.
    pub fn target_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[HermitianPoly] {
        &self.components
    }

    /// Replaces one component, keeping everything else.
    pub fn with_component(&self, a: usize, poly: HermitianPoly) -> Result<PolyMap> {
        let mut comps = self.components.clone();
        comps[a] = poly;
        PolyMap::new(format!("{}*", self.name), comps)
    }

    /// Evaluates at a homogeneous point.
    pub fn eval(&self, point: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        self.components.iter().map(|c| c.eval(point)).collect()
    }
}

/// Request form of a catalog entry:
/// `{"embedding":"plucker","n":3,"p":2,"point":"base"|"random","seed":…}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSpec {
    pub embedding: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub p: Option<usize>,
    #[serde(default)]
    pub degree: Option<usize>,
    #[serde(default)]
    pub point: PointChoice,
    #[serde(default)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointChoice {
    #[default]
    Base,
    Random,
}

impl CatalogSpec {
    pub fn build(&self) -> Result<PolyMap> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::InvalidParams(format!("`{}` requires parameter `{what}`", self.embedding)))
        };
        match self.embedding.as_str() {
            "plucker" => plucker(need(self.n, "n")?, need(self.p, "p")?),
            "whitney_hat" => whitney_hat(need(self.n, "n")?),
            "whitney_ball" => whitney_ball(need(self.n, "n")?),
            "linear" => linear(need(self.n, "n")?),
            "veronese" => veronese(need(self.n, "n")?, need(self.degree, "degree")?),
            other => Err(Error::UnknownEmbedding(other.to_string())),
        }
    }
}

fn mono(vars: usize, entries: &[(usize, u16)]) -> Monomial {
    let mut e = vec![0u16; vars];
    for &(i, k) in entries {
        e[i] += k;
    }
    Monomial::holomorphic(e)
}

fn poly(vars: usize, degree: usize, terms: Vec<(Monomial, GaussianRational)>) -> HermitianPoly {
    HermitianPoly::from_terms(vars, degree, 0, terms).expect("terms have the stated degree")
}

/// Source variable holding the entry `X[i][c]` of the `n x p` chart matrix
/// (variable 0 is the homogenizing coordinate).
pub fn plucker_var(n: usize, i: usize, c: usize) -> usize {
    1 + c * n + i
}

/// Plücker embedding of `Gr(n, n+p)` on the chart `[t I | X]`: the
/// components are the `n x n` minors, indexed by increasing `n`-subsets of
/// the `n + p` columns.
pub fn plucker(n: usize, p: usize) -> Result<PolyMap> {
    if p < 2 || n < p {
        return Err(Error::InvalidParams(format!("plucker needs n >= p >= 2, got n={n}, p={p}")));
    }
    let vars = 1 + n * p;
    let cols = n + p;
    let mut components = Vec::new();
    for subset in subsets(cols, n) {
        // Leibniz expansion; an identity column contributes `t` on its own row only.
        let mut terms = Vec::new();
        for perm in permutations(n) {
            let sign = perm_sign(&perm);
            let mut m = vec![0u16; vars];
            let mut zero = false;
            for (row, &slot) in perm.iter().enumerate() {
                let col = subset[slot];
                if col < n {
                    if col != row {
                        zero = true;
                        break;
                    }
                    m[0] += 1;
                } else {
                    m[plucker_var(n, row, col - n)] += 1;
                }
            }
            if !zero {
                terms.push((Monomial::holomorphic(m), GaussianRational::from(sign)));
            }
        }
        components.push(poly(vars, n, terms));
    }
    PolyMap::new(format!("plucker({n},{p})"), components)
}

/// `Γ_n` on `(ξ^0, …, ξ^{n+1})`: `μ^0 = 2 ξ^0 ξ^{n+1}`,
/// `μ^i = ξ^i (i ξ^0 + ξ^{n+1})`, `μ^{n+i} = ξ^i (-i ξ^0 + ξ^{n+1})`,
/// `μ^{2n+1} = (ξ^{n+1})^2 - (ξ^0)^2`.
pub fn whitney_hat(n: usize) -> Result<PolyMap> {
    if n < 1 {
        return Err(Error::InvalidParams("whitney_hat needs n >= 1".into()));
    }
    let vars = n + 2;
    let last = n + 1;
    let one = GaussianRational::from(1);
    let i = GaussianRational::i();
    let mut comps = vec![poly(vars, 2, vec![(mono(vars, &[(0, 1), (last, 1)]), GaussianRational::from(2))])];
    for sign in [1, -1] {
        for a in 1..=n {
            comps.push(poly(
                vars,
                2,
                vec![
                    (mono(vars, &[(a, 1), (0, 1)]), i.scale(&Rational::from(sign))),
                    (mono(vars, &[(a, 1), (last, 1)]), one.clone()),
                ],
            ));
        }
    }
    comps.push(poly(
        vars,
        2,
        vec![
            (mono(vars, &[(last, 2)]), one.clone()),
            (mono(vars, &[(0, 2)]), -one),
        ],
    ));
    PolyMap::new(format!("whitney_hat({n})"), comps)
}

/// The ball map `(z^0, z) -> ((z^0)^2, z^0 z, z)` homogenized by `t`:
/// `(t^2, (z^0)^2, z^0 z^i, t z^i)` on `(t, z^0, …, z^n)`.
pub fn whitney_ball(n: usize) -> Result<PolyMap> {
    let vars = n + 2;
    let one = GaussianRational::from(1);
    let mut comps = vec![
        poly(vars, 2, vec![(mono(vars, &[(0, 2)]), one.clone())]),
        poly(vars, 2, vec![(mono(vars, &[(1, 2)]), one.clone())]),
    ];
    for a in 0..n {
        comps.push(poly(vars, 2, vec![(mono(vars, &[(1, 1), (2 + a, 1)]), one.clone())]));
    }
    for a in 0..n {
        comps.push(poly(vars, 2, vec![(mono(vars, &[(0, 1), (2 + a, 1)]), one.clone())]));
    }
    PolyMap::new(format!("whitney_ball({n})"), comps)
}

/// The identity of `C^{d+1}`.
pub fn linear(d: usize) -> Result<PolyMap> {
    let comps = (0..=d).map(|i| HermitianPoly::var(d + 1, i)).collect();
    PolyMap::new(format!("linear({d})"), comps)
}

/// All monomials of degree `degree` in `d + 1` variables.
pub fn veronese(d: usize, degree: usize) -> Result<PolyMap> {
    if degree < 1 {
        return Err(Error::InvalidParams("veronese needs degree >= 1".into()));
    }
    let comps = exponent_vectors(d + 1, degree)
        .into_iter()
        .map(|e| HermitianPoly::monomial(Monomial::holomorphic(e), GaussianRational::from(1)))
        .collect();
    PolyMap::new(format!("veronese({d},{degree})"), comps)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub(crate) fn perm_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
