//! Serializable verified-claim records.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geodesic::GeodesicPath;
use crate::graph::EdgeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum Witness {
    EdgeSet(EdgeSet),
    GeodesicList(Vec<GeodesicPath>),
}

impl Witness {
    pub fn size(&self) -> usize {
        match self {
            Witness::EdgeSet(s) => s.len(),
            Witness::GeodesicList(p) => p.len(),
        }
    }

    pub fn as_edge_set(&self) -> Option<&EdgeSet> {
        match self {
            Witness::EdgeSet(s) => Some(s),
            Witness::GeodesicList(_) => None,
        }
    }

    pub fn as_geodesics(&self) -> Option<&[GeodesicPath]> {
        match self {
            Witness::GeodesicList(p) => Some(p),
            Witness::EdgeSet(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub theorem: String,
    pub params: BTreeMap<String, serde_json::Value>,
}

impl Claim {
    pub fn new(theorem: &str) -> Self {
        Claim {
            theorem: theorem.to_string(),
            params: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckerStats {
    pub max_marked: usize,
    pub pairs_swept: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: Claim,
    pub value: usize,
    pub witness: Witness,
    pub verified: bool,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checker_stats: Option<CheckerStats>,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
