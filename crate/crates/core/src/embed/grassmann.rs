//! Reference fundamental forms of the Plücker embedding at its base point.

use super::map::{perm_sign, permutations, plucker_var, subsets};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::polyalg::{HermitianPoly, Monomial, VectorForm};

/// All `l x l` minors `det X[R, C]` of the `n x p` chart matrix, as one
/// vector form of degree `l` in the `n p` chart variables (`X[i][c]` is
/// variable `c n + i`). Rows `R` vary slowest.
pub fn minor_forms(n: usize, p: usize, l: usize) -> Result<VectorForm> {
    if l < 1 || l > n.min(p) {
        return Err(Error::InvalidParams(format!("no {l}x{l} minors of an {n}x{p} matrix")));
    }
    let vars = n * p;
    let mut comps = Vec::new();
    for rows in subsets(n, l) {
        for cols in subsets(p, l) {
            let terms = permutations(l).into_iter().map(|perm| {
                let mut e = vec![0u16; vars];
                for (k, &slot) in perm.iter().enumerate() {
                    e[plucker_var(n, rows[k], cols[slot]) - 1] += 1;
                }
                (Monomial::holomorphic(e), GaussianRational::from(perm_sign(&perm)))
            });
            comps.push(HermitianPoly::from_terms(vars, l, 0, terms)?);
        }
    }
    VectorForm::new(vars, l, comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(minor_forms(3, 2, 2).unwrap().r(), 3);
        assert_eq!(minor_forms(3, 3, 2).unwrap().r(), 9);
        assert_eq!(minor_forms(3, 3, 3).unwrap().r(), 1);
        assert_eq!(minor_forms(3, 3, 3).unwrap().component(0).num_terms(), 6);
        assert!(minor_forms(2, 2, 3).is_err());
    }
}
