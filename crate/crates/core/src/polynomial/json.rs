//! Canonical JSON form:
//!
//! ```json
//! { "space": {"n": 3, "s": 0, "mu": []},
//!   "terms": [ {"exp": [["x1", 2], ["x2", 1]], "coeff": "1"} ] }
//! ```
//!
//! Terms are listed leading term first (descending canonical order) and
//! coefficients are decimal strings.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::space::SpaceJson;
use super::{Monomial, Polynomial, Var, VariableSpace};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<(String, u32)>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    space: SpaceJson,
    terms: Vec<TermJson>,
}

impl Polynomial {
    fn to_json_repr(&self) -> PolynomialJson {
        PolynomialJson {
            space: self.space.to_json(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exp: m.pairs().map(|(id, e)| (self.space.var(id).to_string(), e)).collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    fn from_json_repr(repr: PolynomialJson) -> Result<Self> {
        let space = Arc::new(VariableSpace::from_json(&repr.space)?);
        let mut terms = Vec::with_capacity(repr.terms.len());
        for term in repr.terms {
            let pairs = term
                .exp
                .iter()
                .map(|(name, e)| Ok((space.require(name.parse::<Var>()?)?, *e)))
                .collect::<Result<Vec<_>>>()?;
            let coeff: BigInt =
                term.coeff.parse().map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", term.coeff)))?;
            terms.push((Monomial::from_pairs(pairs), coeff));
        }
        Ok(Self::from_terms(&space, terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolynomialJson::deserialize(deserializer)?;
        Polynomial::from_json_repr(repr).map_err(serde::de::Error::custom)
    }
}
