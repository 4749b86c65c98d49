//! JSON schema for forms:
//! `{"n":…, "k":…, "l":…, "terms":[{"hol":[…], "antihol":[…], "re":"p/q", "im":"p/q"}]}`;
//! a vector form carries `"components": [<form>, …]` instead of `"terms"`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{HermitianPoly, Monomial, VectorForm};
use crate::exactnum::{GaussianRational, Rational};

#[derive(Serialize, Deserialize)]
struct TermJson {
    hol: Vec<u16>,
    antihol: Vec<u16>,
    re: Rational,
    #[serde(default = "zero_rational")]
    im: Rational,
}

fn zero_rational() -> Rational {
    Rational::from(0)
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    k: usize,
    #[serde(default)]
    l: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct VectorFormJson {
    n: usize,
    k: usize,
    #[serde(default)]
    l: usize,
    components: Vec<PolyJson>,
}

impl From<&HermitianPoly> for PolyJson {
    fn from(p: &HermitianPoly) -> Self {
        let (k, l) = p.bidegree();
        PolyJson {
            n: p.n(),
            k,
            l,
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    hol: m.hol().to_vec(),
                    antihol: m.antihol().to_vec(),
                    re: c.re.clone(),
                    im: c.im.clone(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for HermitianPoly {
    type Error = crate::Error;

    fn try_from(j: PolyJson) -> Result<Self, Self::Error> {
        let n = j.n;
        let terms = j
            .terms
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                if t.hol.len() != n || t.antihol.len() != n {
                    return Err(crate::Error::Parse(format!(
                        "terms[{i}]: exponent vectors must have length n={n}"
                    )));
                }
                Ok((Monomial::new(t.hol, t.antihol), GaussianRational::new(t.re, t.im)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        HermitianPoly::from_terms(n, j.k, j.l, terms)
    }
}

impl Serialize for HermitianPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for HermitianPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        HermitianPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for VectorForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        VectorFormJson {
            n: self.n(),
            k: self.k(),
            l: 0,
            components: self.components().iter().map(PolyJson::from).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VectorForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = VectorFormJson::deserialize(d)?;
        if j.l != 0 {
            return Err(serde::de::Error::custom("vector forms are holomorphic: l must be 0"));
        }
        let components = j
            .components
            .into_iter()
            .enumerate()
            .map(|(a, c)| {
                HermitianPoly::try_from(c)
                    .map_err(|e| serde::de::Error::custom(format!("components[{a}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        VectorForm::new(j.n, j.k, components).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_json_round_trip() {
        let h = VectorForm::new(
            2,
            2,
            vec![HermitianPoly::monomial(
                Monomial::holomorphic(vec![1, 1]),
                GaussianRational::new(Rational::new(1, 2), Rational::from(-1)),
            )],
        )
        .unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"k":2,"l":0,"components":[{"n":2,"k":2,"l":0,"terms":[{"hol":[1,1],"antihol":[0,0],"re":"1/2","im":"-1/1"}]}]}"#
        );
        let back: VectorForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_wrong_degree() {
        let s = r#"{"n":2,"k":2,"components":[{"n":2,"k":2,"terms":[{"hol":[1,0],"antihol":[0,0],"re":"1"}]}]}"#;
        assert!(serde_json::from_str::<VectorForm>(s).is_err());
    }
}
