//! JSON germ format: `{"vars": ["s","z1",…], "terms": [{"exp":[k0,…,kn], "coef":"p/q"}]}`.
//!
//! `coef` may be a string (`"3"`, `"-2/5"`) or a JSON integer.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{ExponentVector, GermSeries, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GermJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Integer(i64),
    Text(String),
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Json(format!("invalid coefficient `{text}`"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?)),
    }
}

impl GermJson {
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        for (i, v) in self.vars.iter().enumerate() {
            if self.vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let coef = match &t.coef {
                    Coefficient::Integer(n) => BigRational::from_integer((*n).into()),
                    Coefficient::Text(s) => parse_rational(s)?,
                };
                Ok((ExponentVector::new(t.exp.clone()), coef))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(self.vars.clone(), terms)
    }

    pub fn from_polynomial(poly: &Polynomial) -> Self {
        GermJson {
            vars: poly.vars().to_vec(),
            terms: poly
                .terms()
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.entries().to_vec(),
                    coef: Coefficient::Text(if c.is_integer() {
                        c.numer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    }),
                })
                .collect(),
        }
    }

    pub fn parse_germ(text: &str) -> Result<GermSeries> {
        let json: GermJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        GermSeries::new(json.to_polynomial()?)
    }
}
