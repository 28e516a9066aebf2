use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::symfun::SymFun;
use super::Basis;
use crate::error::{Error, Result};
use crate::qt::QtRational;

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coefficient: String,
}

#[derive(Serialize, Deserialize)]
struct SymFunJson {
    basis: Basis,
    degree: u32,
    terms: Vec<TermJson>,
}

impl SymFun {
    /// `{basis, degree, terms: [{partition, coefficient}]}` with partitions
    /// in lexicographic order and coefficients in printed form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.json()).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.json()).expect("serializable")
    }

    fn json(&self) -> SymFunJson {
        SymFunJson {
            basis: self.basis(),
            degree: self.bound(),
            terms: self
                .terms()
                .map(|(l, c)| TermJson { partition: l.clone(), coefficient: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: SymFunJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.partition, t.coefficient.parse::<QtRational>()?)))
            .collect::<Result<Vec<_>>>()?;
        SymFun::from_terms(j.basis, j.degree, terms)
    }
}
