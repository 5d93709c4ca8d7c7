//! JSON wire formats.
//!
//! Field elements serialize as coefficient-string lists
//! `{"num": ["p/q", ...], "den": [...]}` (constant term first, lowest
//! terms), anti-commuting polynomials as `{"N", "m", "terms": [{"set",
//! "coeff"}]}` with ascending sets, and superpolynomials with an extra
//! `"alpha"` per term in canonical order.  Every format round-trips.

use crate::error::{Error, Result};
use crate::fermion::{FermionPoly, Subset};
use crate::kappa::{KField, RatPoly};
use crate::superpoly::{Composition, SuperPoly};
use crate::tableaux::HookLabel;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::One;
use serde::{Deserialize, Serialize};
use std::str::FromStr;

fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| Error::MalformedInput(format!("bad integer '{}'", t)))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den == BigInt::from(0) {
                return Err(Error::MalformedInput("zero denominator".into()));
            }
            Ok(BigRational::new(parse_int(p)?, den))
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KFieldJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl KFieldJson {
    pub fn encode(f: &KField) -> KFieldJson {
        KFieldJson {
            num: f.num().coeffs().iter().map(rational_to_string).collect(),
            den: f.den().coeffs().iter().map(rational_to_string).collect(),
        }
    }

    pub fn decode(&self) -> Result<KField> {
        let num = RatPoly::from_coeffs(
            self.num
                .iter()
                .map(|s| rational_from_string(s))
                .collect::<Result<Vec<_>>>()?,
        );
        let den = RatPoly::from_coeffs(
            self.den
                .iter()
                .map(|s| rational_from_string(s))
                .collect::<Result<Vec<_>>>()?,
        );
        KField::new(num, den)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FermionTermJson {
    pub set: Vec<usize>,
    pub coeff: KFieldJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FermionPolyJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub terms: Vec<FermionTermJson>,
}

impl FermionPolyJson {
    pub fn encode(p: &FermionPoly) -> FermionPolyJson {
        FermionPolyJson {
            n: p.n(),
            m: p.m(),
            terms: p
                .terms()
                .map(|(e, c)| FermionTermJson {
                    set: e.elems(),
                    coeff: KFieldJson::encode(&KField::from_rational(c.clone())),
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<FermionPoly> {
        let mut p = FermionPoly::zero(self.n, self.m);
        for term in &self.terms {
            let e = Subset::from_elems(self.n, &term.set)?;
            if e.card() != self.m {
                return Err(Error::MixedFermionicDegree);
            }
            let c = term.coeff.decode()?;
            let value = c
                .to_rational()
                .ok_or_else(|| Error::MalformedInput("κ-dependent coefficient".into()))?;
            p.add_term(e, value);
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuperTermJson {
    pub alpha: Vec<u32>,
    pub set: Vec<usize>,
    pub coeff: KFieldJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuperPolyJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: usize,
    pub terms: Vec<SuperTermJson>,
}

impl SuperPolyJson {
    pub fn encode(p: &SuperPoly) -> SuperPolyJson {
        SuperPolyJson {
            n: p.n(),
            m: p.m(),
            terms: p
                .terms()
                .map(|((a, e), c)| SuperTermJson {
                    alpha: a.parts().to_vec(),
                    set: e.elems(),
                    coeff: KFieldJson::encode(c),
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<SuperPoly> {
        let mut p = SuperPoly::zero(self.n, self.m);
        for term in &self.terms {
            if term.alpha.len() != self.n {
                return Err(Error::MalformedInput("alpha length mismatch".into()));
            }
            let e = Subset::from_elems(self.n, &term.set)?;
            if e.card() != self.m {
                return Err(Error::MixedFermionicDegree);
            }
            p.add_term(
                Composition::new(term.alpha.clone()),
                e,
                term.coeff.decode()?,
            );
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub row: Vec<usize>,
    pub col: Vec<usize>,
}

/// CLI-facing record for a basis label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelJson {
    pub family: u8,
    #[serde(rename = "E")]
    pub e: Vec<usize>,
    pub content: Vec<i64>,
    pub tableau: TableauJson,
    #[serde(rename = "T_norm_sq")]
    pub t_norm_sq: String,
}

impl LabelJson {
    pub fn encode(label: &HookLabel) -> LabelJson {
        let t = label.tableau();
        LabelJson {
            family: label.family().index(),
            e: label.set().elems(),
            content: label.content_vector(),
            tableau: TableauJson {
                row: t.row,
                col: t.col,
            },
            t_norm_sq: rational_to_string(&label.t_norm_sq()),
        }
    }
}
