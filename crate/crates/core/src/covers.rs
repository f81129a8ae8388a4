//! Checks for edge geodesic covers and partitions.

use serde::Serialize;

use crate::geodesic::{is_geodesic, GeodesicPath};
use crate::graph::{DistanceMatrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCheck {
    pub paths: usize,
    pub all_geodesic: bool,
    /// Every edge of the graph lies on some path.
    pub covering: bool,
    /// No edge lies on two paths (or twice on one).
    pub edge_disjoint: bool,
    /// Sum of path lengths.
    pub total_length: usize,
}

impl CoverCheck {
    pub fn is_cover(&self) -> bool {
        self.all_geodesic && self.covering
    }

    pub fn is_partition(&self) -> bool {
        self.is_cover() && self.edge_disjoint
    }
}

pub fn check_cover(g: &Graph, d: &DistanceMatrix, paths: &[GeodesicPath]) -> CoverCheck {
    let mut hits = vec![0usize; g.size()];
    let mut all_geodesic = true;
    let mut total_length = 0;
    for p in paths {
        if p.is_empty() || !is_geodesic(g, d, p.vertices()) {
            all_geodesic = false;
            continue;
        }
        total_length += p.len();
        for e in p.edges() {
            if let Some(id) = g.edge_id(e) {
                hits[id] += 1;
            }
        }
    }
    CoverCheck {
        paths: paths.len(),
        all_geodesic,
        covering: hits.iter().all(|&h| h > 0),
        edge_disjoint: hits.iter().all(|&h| h <= 1),
        total_length,
    }
}

/// `ceil(m / diam)`: no geodesic has more than `diam` edges.
pub fn counting_lower_bound(g: &Graph, d: &DistanceMatrix) -> usize {
    let diam = d.diameter().max(1);
    g.size().div_ceil(diam)
}
