//! Orthogonality conditions on forms of the shape `H = sum_i h^a_{in} x^i x^n ⊗ w_a`.

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactnum::{ComplexMatrix, GaussianRational, Rational};
use crate::polyalg::{Monomial, VectorForm};

/// Outcome of [`iwatani_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct IwataniReport {
    pub holds: bool,
    /// `<ν_1, ν_1>`, the common squared scale (`<ν_n, ν_n> / 4` when `n = 1`).
    pub r_squared: Rational,
    /// The extracted vectors `ν_1, …, ν_n` in `W`.
    pub nu: Vec<Vec<GaussianRational>>,
}

/// `<u, v>_G = sum_ab G_ab u_a conj(v_b)`.
fn inner(big_g: &ComplexMatrix, u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (a, ua) in u.iter().enumerate() {
        for (b, vb) in v.iter().enumerate() {
            acc += &(big_g[(a, b)].clone() * ua * &vb.conj());
        }
    }
    acc
}

/// Checks `<ν_i, ν_j> = 0` for `i != j` and `<ν_n, ν_n> = 4 <ν_q, ν_q>`.
///
/// `ν_i` is read off as half the coefficient of `x^i x^n` for `i < n`, and
/// `ν_n` as the coefficient of `(x^n)^2`, so that `H = sum_i ν_i x^i x^n`
/// when the form is written symmetrically.
pub fn iwatani_check(h: &VectorForm, big_g: &ComplexMatrix) -> Result<IwataniReport> {
    let (n, r) = (h.n(), h.r());
    check_dim("iwatani_check (G)", r, big_g.rows())?;
    if h.k() != 2 {
        return Err(Error::NotNormalForm(format!("expected a quadratic form, got degree {}", h.k())));
    }
    let last = n - 1;
    for (a, c) in h.components().iter().enumerate() {
        if let Some((m, _)) = c.terms().find(|(m, _)| m.hol()[last] == 0) {
            return Err(Error::NotNormalForm(format!("component {a} has term {m:?} without x{n}")));
        }
    }
    let half = Rational::new(1, 2);
    let nu: Vec<Vec<GaussianRational>> = (0..n)
        .map(|i| {
            let mut e = vec![0u16; n];
            e[i] += 1;
            e[last] += 1;
            let m = Monomial::holomorphic(e);
            h.components()
                .iter()
                .map(|c| {
                    let coeff = c.coefficient(&m);
                    if i == last {
                        coeff
                    } else {
                        coeff.scale(&half)
                    }
                })
                .collect()
        })
        .collect();
    let mut holds = true;
    for i in 0..n {
        for j in 0..n {
            if i != j && !inner(big_g, &nu[i], &nu[j]).is_zero() {
                holds = false;
            }
        }
    }
    let top = inner(big_g, &nu[last], &nu[last]);
    let four = Rational::from(4);
    for q in 0..last {
        if top != inner(big_g, &nu[q], &nu[q]).scale(&four) {
            holds = false;
        }
    }
    let r_sq = if n == 1 { top.scale(&four.recip()) } else { inner(big_g, &nu[0], &nu[0]) };
    Ok(IwataniReport {
        holds,
        r_squared: r_sq.re,
        nu,
    })
}

/// The normal form `H^q = 2 s x^q x^n`, `H^n = 2 s (x^n)^2` with `W = C^n`,
/// for which `ν_q = s w_q` and `ν_n = 2 s w_n`.
pub fn iwatani_normal_form(n: usize, s: &Rational) -> VectorForm {
    let two_s = GaussianRational::real(s.clone() * &Rational::from(2));
    let components = (0..n)
        .map(|q| {
            let mut e = vec![0u16; n];
            e[q] += 1;
            e[n - 1] += 1;
            crate::polyalg::HermitianPoly::monomial(Monomial::holomorphic(e), two_s.clone())
        })
        .collect();
    VectorForm::new(n, 2, components).expect("shape is consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::HermitianPoly;

    #[test]
    fn normal_form_passes() {
        for n in 1..=5 {
            let rep = iwatani_check(&iwatani_normal_form(n, &Rational::from(1)), &ComplexMatrix::identity(n)).unwrap();
            assert!(rep.holds);
            assert_eq!(rep.r_squared, Rational::from(1));
        }
        let rep = iwatani_check(&iwatani_normal_form(3, &Rational::from(3)), &ComplexMatrix::identity(3)).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.r_squared, Rational::from(9));
    }

    #[test]
    fn overlapping_vectors_fail() {
        // ν_1 = ν_2 = w_1 in a one-dimensional W.
        let h = HermitianPoly::monomial(Monomial::holomorphic(vec![1, 1]), GaussianRational::from(2))
            .add(&HermitianPoly::monomial(Monomial::holomorphic(vec![0, 2]), GaussianRational::from(1)))
            .unwrap();
        let rep = iwatani_check(&VectorForm::scalar(h).unwrap(), &ComplexMatrix::identity(1)).unwrap();
        assert!(!rep.holds);
    }

    #[test]
    fn rejects_terms_without_last_variable() {
        let h = HermitianPoly::monomial(Monomial::holomorphic(vec![2, 0]), GaussianRational::from(1));
        assert!(matches!(
            iwatani_check(&VectorForm::scalar(h).unwrap(), &ComplexMatrix::identity(1)),
            Err(Error::NotNormalForm(_))
        ));
    }
}
