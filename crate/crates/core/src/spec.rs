//! JSON family specifications.
//!
//! Rationals are strings (`"3"`, `"-14/9"`). A coefficient provider is a
//! rational string (constant in `n`), `{"table": {"start": 2, "values": [...]}}`
//! or `{"rational": {"num": [...], "den": [...]}}` with polynomial
//! coefficients in `n`, low to high.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{
    CoefficientProvider, MiddleTerm, RationalFunction, Regime, SchurFamily, SchurParams,
    TurajFamily, TurajParams, UlasFamily, UlasParams, UlasShape,
};
use crate::hypergeom::{CentralBinomialFamily, MahlburgOnoFamily, ShiftedHypergeometricFamily};
use crate::poly::Polynomial;
use crate::rational::{parse_rational, ExactRational};
use crate::registry::Family;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProviderSpec {
    Table {
        start: u64,
        values: Vec<String>,
    },
    Rational {
        num: Vec<String>,
        den: Vec<String>,
    },
    #[serde(untagged)]
    Constant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleTermSpec {
    pub alpha: Vec<u32>,
    pub coeffs: Vec<ProviderSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyKind {
    Schur {
        a: ProviderSpec,
        b: ProviderSpec,
        c: ProviderSpec,
    },
    Ulas {
        /// `[i, j, k, l]`.
        shape: [usize; 4],
        r0: Vec<String>,
        r1: Vec<String>,
        f: Vec<ProviderSpec>,
        v: ProviderSpec,
        #[serde(default)]
        relaxed: bool,
    },
    Turaj {
        d: usize,
        m: u32,
        k: usize,
        l: usize,
        initial: Vec<Vec<String>>,
        g: Vec<ProviderSpec>,
        v: ProviderSpec,
        #[serde(default)]
        middle: Vec<MiddleTermSpec>,
    },
    #[serde(rename = "example-5.3")]
    CentralBinomial,
    #[serde(rename = "example-5.4")]
    ShiftedHypergeometric {
        alpha: String,
        beta: i64,
        gamma: String,
    },
    MahlburgOno {
        r: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    #[serde(flatten)]
    pub family: FamilyKind,
    #[serde(default)]
    pub n_max: Option<usize>,
    #[serde(default)]
    pub c_values: Vec<String>,
}

fn field<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Parse(format!("field `{name}`: {e}")))
}

fn poly(name: &str, coeffs: &[String]) -> Result<Polynomial> {
    field(name, Polynomial::parse_coeffs(coeffs))
}

fn rational(name: &str, s: &str) -> Result<ExactRational> {
    field(name, parse_rational(s))
}

impl ProviderSpec {
    pub fn build(&self, name: &str) -> Result<CoefficientProvider> {
        Ok(match self {
            ProviderSpec::Constant(s) => CoefficientProvider::Constant(rational(name, s)?),
            ProviderSpec::Table { start, values } => CoefficientProvider::Table {
                start: *start,
                values: values
                    .iter()
                    .map(|v| rational(name, v))
                    .collect::<Result<_>>()?,
            },
            ProviderSpec::Rational { num, den } => CoefficientProvider::Rational(field(
                name,
                RationalFunction::new(poly(name, num)?, poly(name, den)?),
            )?),
        })
    }
}

fn providers(name: &str, specs: &[ProviderSpec]) -> Result<Vec<CoefficientProvider>> {
    specs
        .iter()
        .enumerate()
        .map(|(s, p)| p.build(&format!("{name}[{s}]")))
        .collect()
}

impl FamilySpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn c_values(&self) -> Result<Vec<ExactRational>> {
        self.c_values
            .iter()
            .map(|c| rational("c_values", c))
            .collect()
    }

    /// Builds and validates the family.
    pub fn build(&self) -> Result<Family> {
        Ok(match &self.family {
            FamilyKind::Schur { a, b, c } => Family::Schur(SchurFamily::new(SchurParams {
                a: a.build("a")?,
                b: b.build("b")?,
                c: c.build("c")?,
            })),
            FamilyKind::Ulas {
                shape,
                r0,
                r1,
                f,
                v,
                relaxed,
            } => {
                let [i, j, k, l] = *shape;
                Family::Ulas(UlasFamily::new(UlasParams {
                    shape: UlasShape { i, j, k, l },
                    r0: poly("r0", r0)?,
                    r1: poly("r1", r1)?,
                    f: providers("f", f)?,
                    v: v.build("v")?,
                    regime: if *relaxed {
                        Regime::Relaxed
                    } else {
                        Regime::Strict
                    },
                })?)
            }
            FamilyKind::Turaj {
                d,
                m,
                k,
                l,
                initial,
                g,
                v,
                middle,
            } => {
                let initial = initial
                    .iter()
                    .enumerate()
                    .map(|(s, c)| poly(&format!("initial[{s}]"), c))
                    .collect::<Result<_>>()?;
                let middle = middle
                    .iter()
                    .enumerate()
                    .map(|(t, m)| {
                        Ok(MiddleTerm {
                            alpha: m.alpha.clone(),
                            coeffs: providers(&format!("middle[{t}].coeffs"), &m.coeffs)?,
                        })
                    })
                    .collect::<Result<_>>()?;
                Family::Turaj(TurajFamily::new(TurajParams {
                    d: *d,
                    m: *m,
                    k: *k,
                    l: *l,
                    initial,
                    g: providers("g", g)?,
                    v: v.build("v")?,
                    middle,
                })?)
            }
            FamilyKind::CentralBinomial => Family::central_binomial(CentralBinomialFamily)?,
            FamilyKind::ShiftedHypergeometric { alpha, beta, gamma } => {
                Family::shifted(ShiftedHypergeometricFamily::new(
                    rational("alpha", alpha)?,
                    *beta,
                    rational("gamma", gamma)?,
                )?)?
            }
            FamilyKind::MahlburgOno { r } => Family::mahlburg_ono(MahlburgOnoFamily::new(*r)?)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::RecurrenceFamily;
    use crate::rational::rat;

    #[test]
    fn parses_every_kind() {
        let docs = [
            r#"{"kind":"schur","a":"1","b":"0","c":"1"}"#,
            r#"{"kind":"ulas","shape":[0,1,1,1],"r0":["1"],"r1":["2","2"],
                "f":[{"rational":{"num":["-2","4"],"den":["0","1"]}},{"rational":{"num":["-2","4"],"den":["0","1"]}}],
                "v":{"rational":{"num":["-16","16"],"den":["0","1"]}}}"#,
            r#"{"kind":"turaj","d":1,"m":2,"k":1,"l":0,"initial":[["1"],["0","1"]],"g":["0","1"],"v":"1"}"#,
            r#"{"kind":"example-5.3","n_max":8,"c_values":["0","1/2"]}"#,
            r#"{"kind":"example-5.4","alpha":"1/2","beta":-1,"gamma":"1/3"}"#,
            r#"{"kind":"mahlburg-ono","r":0}"#,
        ];
        for doc in docs {
            let spec = FamilySpec::from_json(doc).unwrap();
            spec.build().unwrap();
        }
        let spec = FamilySpec::from_json(docs[3]).unwrap();
        assert_eq!(spec.n_max, Some(8));
        assert_eq!(spec.c_values().unwrap(), vec![rat(0, 1), rat(1, 2)]);
        let mut fam = FamilySpec::from_json(docs[5]).unwrap().build().unwrap();
        assert_eq!(fam.term(1).unwrap().coeff_strings(), vec!["-14/9", "1"]);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let err = FamilySpec::from_json(r#"{"kind":"schur","a":"1/0","b":"0","c":"1"}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(err.to_string().contains("`a`"), "{err}");
        let err = FamilySpec::from_json(r#"{"kind":"nope"}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
        let err = FamilySpec::from_json(r#"{"kind":"mahlburg-ono","r":3}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::InvalidParams(_)));
    }
}
