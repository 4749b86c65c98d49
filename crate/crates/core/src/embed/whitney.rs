//! The pullback identity of the homogenized Whitney map.

use super::map::{whitney_hat, PolyMap};
use crate::error::{check_dim, Result};
use crate::exactnum::GaussianRational;
use crate::polyalg::HermitianPoly;

/// `Q_m(ζ) = sum_{A=1..m} ζ^A conj(ζ^A) + i (ζ^0 conj(ζ^{m+1}) - ζ^{m+1} conj(ζ^0))`
/// evaluated on polynomial coordinates `ζ^0, …, ζ^{m+1}`.
pub fn boundary_form(coords: &[HermitianPoly]) -> Result<HermitianPoly> {
    let m = coords.len() - 2;
    let bar = |p: &HermitianPoly| p.conj_swap();
    let (k, _) = coords[0].bidegree();
    let mut acc = HermitianPoly::zero(coords[0].n(), k, k);
    for a in 1..=m {
        acc = acc.add(&coords[a].multiply(&bar(&coords[a]))?)?;
    }
    let cross = coords[0]
        .multiply(&bar(&coords[m + 1]))?
        .sub(&coords[m + 1].multiply(&bar(&coords[0]))?)?;
    acc.add(&cross.scale(&GaussianRational::i()))
}

/// Checks `F^* Q_{2n} = 2 (|ξ^0|^2 + |ξ^{n+1}|^2) Q_n` for a map on
/// `n + 2` variables with `2n + 2` components; returns the factor used.
pub fn pullback_identity(map: &PolyMap, n: usize) -> Result<(bool, HermitianPoly)> {
    check_dim("pullback_identity (variables)", n + 2, map.source_dim() + 1)?;
    check_dim("pullback_identity (components)", 2 * n + 2, map.components().len())?;
    let vars = n + 2;
    let xi: Vec<HermitianPoly> = (0..vars).map(|i| HermitianPoly::var(vars, i)).collect();
    let first = xi[0].multiply(&xi[0].conj_swap())?;
    let last = xi[n + 1].multiply(&xi[n + 1].conj_swap())?;
    let factor = first.add(&last)?.scale(&GaussianRational::from(2));
    let lhs = boundary_form(map.components())?;
    let rhs = factor.multiply(&boundary_form(&xi)?)?;
    Ok((lhs == rhs, factor))
}

/// The identity for the homogenized Whitney map itself.
pub fn whitney_pullback_check(n: usize) -> Result<(bool, HermitianPoly)> {
    pullback_identity(&whitney_hat(n)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::Monomial;

    #[test]
    fn identity_holds() {
        for n in 1..=4 {
            assert!(whitney_pullback_check(n).unwrap().0, "n={n}");
        }
        let (_, factor) = whitney_pullback_check(2).unwrap();
        assert_eq!(format!("{factor:?}"), "2*x1*~x1 + 2*x4*~x4");
    }

    #[test]
    fn corruption_breaks_identity() {
        let n = 2;
        let m = whitney_hat(n).unwrap();
        let mut e = vec![0u16; n + 2];
        e[0] = 1;
        e[n + 1] = 1;
        let bad = HermitianPoly::monomial(Monomial::holomorphic(e), GaussianRational::from(3));
        let corrupted = m.with_component(0, bad).unwrap();
        assert!(!pullback_identity(&corrupted, n).unwrap().0);
    }
}
