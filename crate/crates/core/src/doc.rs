//! Versioned JSON documents for elements, graded views and reports, and
//! loading of the TOML suite configuration.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::checks::SuiteConfig;
use crate::element::{Monomial, WeylElement};
use crate::error::{Error, Result};
use crate::graded::to_graded;
use crate::scalar::{parse_rat, Rat};

pub const DOC_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub y: u32,
    pub x: u32,
    pub c: String,
}

/// An element in the `Y^i X^j` basis with string rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub version: u32,
    pub basis: String,
    pub terms: Vec<TermDoc>,
}

impl ElementDoc {
    pub fn from_element(a: &WeylElement) -> Self {
        ElementDoc {
            version: DOC_VERSION,
            basis: "YX".into(),
            terms: a
                .terms()
                .map(|(m, c)| TermDoc {
                    y: m.y,
                    x: m.x,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    /// Rejects unknown versions or bases, unsorted or repeated monomials,
    /// zero and non-canonical coefficients.
    pub fn to_element(&self) -> Result<WeylElement> {
        if self.version != DOC_VERSION {
            return Err(Error::Document(format!("unsupported version {}", self.version)));
        }
        if self.basis != "YX" {
            return Err(Error::Document(format!("unsupported basis {:?}", self.basis)));
        }
        let mut prev: Option<Monomial> = None;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let m = Monomial::new(t.y, t.x);
            if prev.is_some_and(|p| p >= m) {
                return Err(Error::Document(format!("term {m} out of order")));
            }
            prev = Some(m);
            let c: Rat = parse_rat(&t.c)
                .ok_or_else(|| Error::Document(format!("invalid coefficient {:?}", t.c)))?;
            if c.is_zero() || c.to_string() != t.c {
                return Err(Error::Document(format!("non-canonical coefficient {:?}", t.c)));
            }
            terms.push((m, c));
        }
        Ok(WeylElement::from_terms(terms))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))
    }
}

/// Graded components `n -> alpha_n(H)` with `a = sum alpha_n v_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDoc {
    pub version: u32,
    pub components: BTreeMap<i64, String>,
}

impl GradedDoc {
    pub fn from_element(a: &WeylElement) -> Self {
        GradedDoc {
            version: DOC_VERSION,
            components: to_graded(a)
                .components()
                .map(|(n, p)| (n, p.to_string()))
                .collect(),
        }
    }
}

pub fn load_suite_config(path: &Path) -> Result<SuiteConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_suite_config(&text)
}

pub fn parse_suite_config(text: &str) -> Result<SuiteConfig> {
    toml::from_str(text).map_err(|e| Error::Document(e.to_string()))
}
