//! Matchings and the distance-based sufficient conditions for general
//! position.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesic::{check_k, max_marked_on_common_geodesic, GeodesicPath};
use crate::graph::{DistanceMatrix, Edge, EdgeSet, Graph};
use crate::Budget;

/// No two edges of `s` share an endpoint.
pub fn is_matching(g: &Graph, s: &EdgeSet) -> Result<bool> {
    g.check_edges(s)?;
    let mut used = vec![false; g.order()];
    for e in s {
        for x in e.endpoints() {
            if std::mem::replace(&mut used[x], true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingDiameterReport {
    pub k: usize,
    pub diameter: usize,
    /// `diam <= 2k - 2`
    pub diameter_bounded: bool,
    /// Every matching of size `k` is an edge `k`-general position set.
    pub matchings_in_position: bool,
    pub equivalence_holds: bool,
    pub matchings_checked: u64,
    /// First `k`-matching found lying on one geodesic.
    pub counterexample: Option<EdgeSet>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Checks, by enumerating every `k`-subset of edges, that bounded diameter and
/// "all `k`-matchings are in general position" agree.
pub fn check_matching_diameter_equivalence(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    budget: Budget,
) -> Result<MatchingDiameterReport> {
    check_k(k)?;
    let m = g.size();
    let subsets = binomial(m, k);
    if subsets > budget.0 as u128 {
        return Err(Error::BudgetExceeded {
            budget: budget.0,
            explored: 0,
            lower: None,
            upper: None,
        });
    }
    let diameter = d.diameter();
    let diameter_bounded = diameter <= 2 * k - 2;

    let mut checked = 0u64;
    let mut counterexample = None;
    let mut idx: Vec<usize> = (0..k).collect();
    if k <= m {
        loop {
            let s: EdgeSet = idx.iter().map(|&i| g.edge(i)).collect();
            if is_matching(g, &s)? {
                checked += 1;
                if max_marked_on_common_geodesic(g, d, &s)? >= k {
                    counterexample = Some(s);
                    break;
                }
            }
            if !next_combination(&mut idx, m) {
                break;
            }
        }
    }
    let matchings_in_position = counterexample.is_none();
    Ok(MatchingDiameterReport {
        k,
        diameter,
        diameter_bounded,
        matchings_in_position,
        equivalence_holds: diameter_bounded == matchings_in_position,
        matchings_checked: checked,
        counterexample,
    })
}

/// Advances `idx` to the next `k`-combination of `0..n` in lexicographic
/// order; `false` once exhausted.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Minimum and maximum pairwise edge distance over distinct pairs of `s`.
pub fn edge_distance_spread(d: &DistanceMatrix, s: &[Edge]) -> (usize, usize) {
    let mut lo = usize::MAX;
    let mut hi = 0;
    for (i, e) in s.iter().enumerate() {
        for f in &s[i + 1..] {
            let x = d.set_distance(&e.endpoints(), &f.endpoints());
            lo = lo.min(x);
            hi = hi.max(x);
        }
    }
    (lo, hi)
}

/// Sufficient test from edge spacing: with `l` the least and `big_l` the
/// largest pairwise edge distance, `big_l < l(k-1) + (k-2)` implies `s` is
/// an edge `k`-general position set. A `false` answer proves nothing.
pub fn distance_spread_sufficient(
    g: &Graph,
    d: &DistanceMatrix,
    s: &EdgeSet,
    k: usize,
) -> Result<bool> {
    check_k(k)?;
    g.check_edges(s)?;
    if s.len() < 2 {
        return Err(Error::Precondition(
            "need at least two edges to measure spacing".into(),
        ));
    }
    let edges: Vec<Edge> = s.iter().collect();
    let (l, big_l) = edge_distance_spread(d, &edges);
    Ok(big_l < l * (k - 1) + (k - 2))
}

/// Sufficient test for a family of edge-disjoint `j`-geodesics: with `l` the
/// least pairwise path distance, if every pair lying on a common geodesic has
/// distance `< l(k-1) + j(k-2)`, then no `k` of the paths share a geodesic.
///
/// Only co-geodesic pairs are constrained. Two paths lie on a common geodesic
/// exactly when some geodesic carries all `2j` of their edges.
pub fn path_spacing_sufficient(
    g: &Graph,
    d: &DistanceMatrix,
    paths: &[GeodesicPath],
    j: usize,
    k: usize,
) -> Result<bool> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let mut used = EdgeSet::new();
    for p in paths {
        if !crate::geodesic::is_geodesic(g, d, p.vertices()) {
            return Err(Error::Precondition(format!(
                "{:?} is not a geodesic",
                p.vertices()
            )));
        }
        if p.len() != j {
            return Err(Error::Precondition(format!(
                "path {:?} has length {}, expected {j}",
                p.vertices(),
                p.len()
            )));
        }
        for e in p.edges() {
            if !used.insert(e) {
                return Err(Error::Precondition(format!("paths share edge {e}")));
            }
        }
    }
    if paths.len() < 2 {
        return Ok(true);
    }
    let mut pair_dist = Vec::new();
    let mut l = usize::MAX;
    for (a, p) in paths.iter().enumerate() {
        for q in &paths[a + 1..] {
            let x = d.set_distance(p.vertices(), q.vertices());
            l = l.min(x);
            pair_dist.push((p, q, x));
        }
    }
    let bound = l * (k - 1) + j * (k - 2);
    for (p, q, x) in pair_dist {
        if x < bound {
            continue;
        }
        let both = p.edge_set().union(&q.edge_set());
        if max_marked_on_common_geodesic(g, d, &both)? == 2 * j {
            return Ok(false);
        }
    }
    Ok(true)
}
