//! Exact desk-scale solvers: geodesic enumeration, minimum edge geodesic
//! cover and partition, maximum edge k-general position set, and the duality
//! certificate tying them together.

mod bits;
pub mod catalog;
pub mod cover;
pub mod kgp;

use serde::Serialize;

pub use catalog::{enumerate_geodesics, CatalogOptions, GeodesicCatalog};
pub use cover::{gcover_exact, gpart_exact};
pub use kgp::kgp_exact;

use crate::certificate::{Certificate, CheckerStats, Claim, Witness};
use crate::covers::check_cover;
use crate::error::{Error, Result};
use crate::geodesic::{check_edge_kgp, GeodesicPath};
use crate::graph::{DistanceMatrix, EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub bound_used: String,
}

impl SolveResult {
    /// Re-verifies the witness with the graph-core predicates and wraps it in
    /// a certificate.
    pub fn certify(
        &self,
        g: &Graph,
        d: &DistanceMatrix,
        claim: Claim,
        method: &str,
        k: Option<usize>,
    ) -> Result<Certificate> {
        let mut stats = None;
        let feasible = match (&self.witness, k) {
            (Witness::EdgeSet(s), Some(k)) => {
                let check = check_edge_kgp(g, d, s, k)?;
                stats = Some(CheckerStats {
                    max_marked: check.common.max_marked,
                    pairs_swept: check.common.pairs_swept,
                });
                check.holds
            }
            (Witness::GeodesicList(paths), None) => {
                let c = check_cover(g, d, paths);
                if method == "exact-cover" {
                    c.is_partition()
                } else {
                    c.is_cover()
                }
            }
            _ => {
                return Err(Error::InvalidParameter(
                    "k is required exactly for edge-set witnesses".into(),
                ))
            }
        };
        Ok(Certificate {
            claim,
            value: self.optimum,
            verified: feasible && self.witness.size() == self.optimum,
            witness: self.witness.clone(),
            method: method.to_string(),
            checker_stats: stats,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub k: usize,
    /// Size of the verified edge k-general position set.
    pub lower: usize,
    /// Number of geodesics in the verified partition.
    pub partition_size: usize,
    /// `(k - 1) * partition_size`
    pub upper: usize,
    /// `lower == upper`: the k-gp number is `lower`, and the cover and
    /// partition numbers both equal `partition_size`.
    pub exact: bool,
}

/// Checks `|S| <= (k-1) * |partition|` for a verified k-gp set `S` and a
/// verified geodesic partition. Equality pins the k-gp number, the cover
/// number and the partition number at once.
pub fn duality_certify(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    lower: &EdgeSet,
    partition: &[GeodesicPath],
) -> Result<DualityReport> {
    let check = check_edge_kgp(g, d, lower, k)?;
    if !check.holds {
        return Err(Error::Precondition(format!(
            "lower witness is not an edge {k}-general position set (max marked {})",
            check.common.max_marked
        )));
    }
    if !check_cover(g, d, partition).is_partition() {
        return Err(Error::Precondition(
            "upper witness is not an edge geodesic partition".into(),
        ));
    }
    let upper = (k - 1) * partition.len();
    if lower.len() > upper {
        return Err(Error::DualityViolation(format!(
            "{} > ({k} - 1) * {}",
            lower.len(),
            partition.len()
        )));
    }
    Ok(DualityReport {
        k,
        lower: lower.len(),
        partition_size: partition.len(),
        upper,
        exact: lower.len() == upper,
    })
}

/// `kgp <= (k-1) * gcover <= (k-1) * gpart` on solved values.
pub fn check_duality_chain(k: usize, kgp: usize, gcover: usize, gpart: usize) -> Result<()> {
    if kgp > (k - 1) * gcover {
        return Err(Error::DualityViolation(format!(
            "{kgp} > ({k} - 1) * {gcover}"
        )));
    }
    if gcover > gpart {
        return Err(Error::DualityViolation(format!(
            "gcover {gcover} > gpart {gpart}"
        )));
    }
    Ok(())
}
