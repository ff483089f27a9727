//! JSON form shared by every expansion the crate emits:
//! `{"degree": d, "basis": "...", "terms": [{"index": [...], "coeff": "..."}]}`.
//! Coefficients are exact strings, terms in decreasing lexicographic order.

use serde::{Deserialize, Serialize};

use super::{Expansion, Indexed, SymFunc};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::{format_exact, parse_exact, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum BasisTag {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "P")]
    P,
    #[serde(rename = "s")]
    Schur,
    /// Schubert classes of the Grassmannian.
    #[serde(rename = "sigma")]
    SchubertG,
    /// Schubert classes of the Lagrangian Grassmannian.
    #[serde(rename = "sigma'")]
    SchubertLG,
}

impl BasisTag {
    pub fn symbol(self) -> &'static str {
        match self {
            BasisTag::Monomial => "m",
            BasisTag::Q => "Q",
            BasisTag::P => "P",
            BasisTag::Schur => "s",
            BasisTag::SchubertG => "σ",
            BasisTag::SchubertLG => "σ'",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonTerm {
    pub index: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JsonExpansion {
    pub degree: usize,
    pub basis: BasisTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub terms: Vec<JsonTerm>,
}

impl JsonExpansion {
    pub fn from_expansion<K: Indexed, T: Scalar>(basis: BasisTag, e: &Expansion<K, T>) -> Self {
        JsonExpansion {
            degree: e.degree(),
            basis,
            n: None,
            terms: e
                .terms()
                .rev()
                .map(|(k, v)| JsonTerm {
                    index: k.index_parts().to_vec(),
                    coeff: format_exact(v),
                })
                .collect(),
        }
    }

    pub fn from_symfunc<T: Scalar>(f: &SymFunc<T>) -> Self {
        JsonExpansion {
            degree: f.degree(),
            basis: BasisTag::Monomial,
            n: None,
            terms: f
                .terms()
                .rev()
                .map(|(k, v)| JsonTerm {
                    index: k.parts().to_vec(),
                    coeff: format_exact(v),
                })
                .collect(),
        }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    /// Parses terms back into `(index, coefficient)` pairs.
    pub fn parse_terms<T: Scalar>(&self) -> Result<Vec<(Partition, T)>> {
        self.terms
            .iter()
            .map(|t| {
                let index = Partition::new(t.index.clone())?;
                let coeff = parse_exact(&t.coeff).ok_or_else(|| {
                    Error::Parse(t.coeff.clone(), "not an exact coefficient".into())
                })?;
                Ok((index, coeff))
            })
            .collect()
    }

    /// Text form, e.g. `Q(2,1) + 2·Q(3)`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let sym = self.basis.symbol();
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let (neg, mag) = match t.coeff.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, t.coeff.as_str()),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(mag);
                out.push('·');
            }
            let idx: Vec<String> = t.index.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{sym}({})", idx.join(",")));
        }
        out
    }
}
