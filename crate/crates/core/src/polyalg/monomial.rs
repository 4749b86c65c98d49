use std::cmp::Ordering;
use std::fmt;

/// A monomial `x^a xbar^b` in `n` holomorphic variables and their conjugates.
///
/// Ordering is graded lexicographic with the holomorphic block first: lower
/// bidegree sorts first, and within a bidegree larger leading exponents come
/// first (`x1^2 < x1 x2 < x2^2` in iteration order).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    hol: Box<[u16]>,
    antihol: Box<[u16]>,
}

impl Monomial {
    pub fn new(hol: Vec<u16>, antihol: Vec<u16>) -> Self {
        assert_eq!(hol.len(), antihol.len(), "exponent vectors of different length");
        Monomial {
            hol: hol.into_boxed_slice(),
            antihol: antihol.into_boxed_slice(),
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n], vec![0; n])
    }

    pub fn holomorphic(hol: Vec<u16>) -> Self {
        let n = hol.len();
        Monomial::new(hol, vec![0; n])
    }

    /// The variable `x^i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut hol = vec![0; n];
        hol[i] = 1;
        Monomial::holomorphic(hol)
    }

    /// The conjugate variable `xbar^i`.
    pub fn conj_var(n: usize, i: usize) -> Self {
        let mut antihol = vec![0; n];
        antihol[i] = 1;
        Monomial::new(vec![0; n], antihol)
    }

    pub fn n(&self) -> usize {
        self.hol.len()
    }

    pub fn hol(&self) -> &[u16] {
        &self.hol
    }

    pub fn antihol(&self) -> &[u16] {
        &self.antihol
    }

    pub fn hol_degree(&self) -> usize {
        self.hol.iter().map(|&e| e as usize).sum()
    }

    pub fn antihol_degree(&self) -> usize {
        self.antihol.iter().map(|&e| e as usize).sum()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.hol_degree(), self.antihol_degree())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.n(), other.n(), "variable count mismatch");
        Monomial {
            hol: self.hol.iter().zip(other.hol.iter()).map(|(a, b)| a + b).collect(),
            antihol: self
                .antihol
                .iter()
                .zip(other.antihol.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let hol: Option<Vec<u16>> = self
            .hol
            .iter()
            .zip(other.hol.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect();
        let antihol: Option<Vec<u16>> = self
            .antihol
            .iter()
            .zip(other.antihol.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect();
        Some(Monomial::new(hol?, antihol?))
    }

    /// Swaps holomorphic and antiholomorphic exponents.
    pub fn swap(&self) -> Monomial {
        Monomial {
            hol: self.antihol.clone(),
            antihol: self.hol.clone(),
        }
    }

    /// Product of factorials of the exponents, the scale between a Taylor
    /// coefficient and the corresponding partial derivative.
    pub fn factorial_weight(&self) -> u128 {
        self.hol
            .iter()
            .chain(self.antihol.iter())
            .map(|&e| (1..=e as u128).product::<u128>())
            .product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| other.hol.cmp(&self.hol))
            .then_with(|| other.antihol.cmp(&self.antihol))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (block, bar) in [(&self.hol, ""), (&self.antihol, "~")] {
            for (i, &e) in block.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{bar}x{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Exponent vectors of degree `k` in `n` variables, largest leading exponent
/// first.
pub fn exponent_vectors(n: usize, k: usize) -> Vec<Vec<u16>> {
    fn rec(n: usize, k: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() == n - 1 {
            prefix.push(k as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e as u16);
            rec(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    rec(n, k, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// `dim S^{k,l}` in `n` variables: `C(n+k-1, k) * C(n+l-1, l)`.
pub fn space_dim(n: usize, k: usize, l: usize) -> usize {
    assert!(n >= 1, "need at least one variable");
    binomial(n + k - 1, k) * binomial(n + l - 1, l)
}

/// Monomial basis of `S^{k,l}` in canonical order.
pub fn space_basis(n: usize, k: usize, l: usize) -> Vec<Monomial> {
    let hol = exponent_vectors(n, k);
    let anti = exponent_vectors(n, l);
    let mut out = Vec::with_capacity(hol.len() * anti.len());
    for h in &hol {
        for a in &anti {
            out.push(Monomial::new(h.clone(), a.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_dim_examples() {
        assert_eq!(space_dim(2, 2, 0), 3);
        for k in 0..4 {
            for l in 0..4 {
                assert_eq!(space_dim(1, k, l), 1);
            }
        }
        assert_eq!(space_dim(9, 3, 3), 27225);
    }

    #[test]
    fn enumeration_matches_dim() {
        for n in 1..=9 {
            for k in 0..=3 {
                for l in 0..=3 {
                    let basis = space_basis(n, k, l);
                    assert_eq!(basis.len(), space_dim(n, k, l), "n={n} k={k} l={l}");
                    assert!(basis.windows(2).all(|w| w[0] < w[1]), "basis not sorted");
                }
            }
        }
    }

    #[test]
    fn order_is_graded_lex() {
        let b = space_basis(2, 2, 0);
        assert_eq!(format!("{:?}", b), "[x1^2, x1*x2, x2^2]");
    }
}
