//! Geodesics, geodesic interval DAGs and the common-geodesic checker.
//!
//! The checker answers "how many edges of `S` can one shortest path carry?"
//! without enumerating geodesics. Every path of the BFS DAG rooted at `u`
//! (arcs `y -> x` with `d(u,x) = d(u,y) + 1`) is a geodesic starting at `u`,
//! and every geodesic starting at `u` is such a path, so a longest-path DP with
//! weight 1 on marked edges gives the per-source optimum in `O(n + m)`.

use std::cmp::Reverse;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, EdgeSet, Graph};

/// A shortest path, stored as its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeodesicPath {
    vertices: Vec<usize>,
}

impl GeodesicPath {
    /// Validates that `vertices` is a geodesic of `g`.
    pub fn new(g: &Graph, d: &DistanceMatrix, vertices: Vec<usize>) -> Result<Self> {
        if !is_geodesic(g, d, &vertices) {
            return Err(Error::Precondition(format!(
                "{vertices:?} is not a geodesic"
            )));
        }
        Ok(GeodesicPath { vertices })
    }

    /// For sequences already known to be geodesics (DAG walks, constructions
    /// that are re-verified later).
    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        GeodesicPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }
}

/// True iff consecutive vertices are adjacent, no vertex repeats, and the
/// length equals the distance between the ends. Malformed input is `false`.
pub fn is_geodesic(g: &Graph, d: &DistanceMatrix, p: &[usize]) -> bool {
    let Some((&first, _)) = p.split_first() else {
        return false;
    };
    if p.iter().any(|&v| v >= g.order()) {
        return false;
    }
    if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    let last = *p.last().unwrap();
    // length == distance already forces distinct vertices; checked anyway for
    // graphs whose matrix does not belong to `g`.
    let mut seen = p.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == p.len() && d.get(first, last) == p.len() - 1
}

/// Arcs lying on some `u,v`-geodesic, oriented away from `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalDag {
    pub source: usize,
    pub target: usize,
    /// `levels[i]` holds the interval vertices at distance `i` from the source.
    pub levels: Vec<Vec<usize>>,
    /// `(from, to, edge id)`, sorted by the level of `from`, then by ids.
    pub arcs: Vec<(usize, usize, usize)>,
}

impl IntervalDag {
    pub fn oriented_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().map(|&(a, b, _)| (a, b))
    }
}

fn in_interval(d: &DistanceMatrix, u: usize, v: usize, x: usize) -> bool {
    d.get(u, x) + d.get(x, v) == d.get(u, v)
}

pub fn geodesic_interval_dag(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<IntervalDag> {
    if u == v {
        return Err(Error::Precondition("interval endpoints must differ".into()));
    }
    if u >= g.order() || v >= g.order() {
        return Err(Error::Precondition("vertex out of range".into()));
    }
    let len = d.get(u, v);
    let mut levels = vec![Vec::new(); len + 1];
    for x in 0..g.order() {
        if in_interval(d, u, v, x) {
            levels[d.get(u, x)].push(x);
        }
    }
    let mut arcs = Vec::new();
    for level in &levels {
        for &x in level {
            for &(y, id) in g.neighbors(x) {
                if d.get(u, x) + 1 + d.get(y, v) == len {
                    arcs.push((x, y, id));
                }
            }
        }
    }
    Ok(IntervalDag {
        source: u,
        target: v,
        levels,
        arcs,
    })
}

/// How the checker chooses the geodesics it maximizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepStrategy {
    /// One BFS-DAG DP per endpoint of a marked edge.
    #[default]
    Sources,
    /// One interval-DAG DP per unordered vertex pair; optionally only pairs of
    /// marked-edge endpoints.
    Pairs { endpoint_restricted: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonGeodesic {
    /// Largest `|S ∩ E(P)|` over all geodesics `P`.
    pub max_marked: usize,
    /// A geodesic attaining `max_marked` (absent for empty `S`).
    pub witness: Option<GeodesicPath>,
    /// Number of (source, target) pairs evaluated.
    pub pairs_swept: u64,
}

pub fn max_marked_on_common_geodesic(g: &Graph, d: &DistanceMatrix, s: &EdgeSet) -> Result<usize> {
    Ok(common_geodesic(g, d, s, SweepStrategy::Sources)?.max_marked)
}

pub fn common_geodesic(
    g: &Graph,
    d: &DistanceMatrix,
    s: &EdgeSet,
    strategy: SweepStrategy,
) -> Result<CommonGeodesic> {
    let mask = g.edge_mask(s)?;
    if s.is_empty() {
        return Ok(CommonGeodesic {
            max_marked: 0,
            witness: None,
            pairs_swept: 0,
        });
    }
    Ok(match strategy {
        SweepStrategy::Sources => source_sweep(g, d, &mask, &s.endpoints()),
        SweepStrategy::Pairs {
            endpoint_restricted,
        } => {
            let candidates: Vec<usize> = if endpoint_restricted {
                s.endpoints()
            } else {
                (0..g.order()).collect()
            };
            pair_sweep(g, d, &mask, &candidates)
        }
    })
}

/// Per-source optimum: `(count, path)`.
type Best = (usize, Vec<usize>);

fn pick(a: (usize, Best), b: (usize, Best)) -> (usize, Best) {
    // unique maximum on (count, lowest task index) keeps parallel runs
    // reproducible
    if (a.1 .0, Reverse(a.0)) >= (b.1 .0, Reverse(b.0)) {
        a
    } else {
        b
    }
}

fn finish(best: Option<(usize, Best)>, swept: u64) -> CommonGeodesic {
    let (max_marked, path) = best.map(|(_, b)| b).unwrap_or((0, Vec::new()));
    CommonGeodesic {
        max_marked,
        witness: (path.len() >= 2).then(|| GeodesicPath::from_trusted(path)),
        pairs_swept: swept,
    }
}

fn source_sweep(g: &Graph, d: &DistanceMatrix, mask: &[bool], sources: &[usize]) -> CommonGeodesic {
    let best = sources
        .par_iter()
        .enumerate()
        .map(|(i, &u)| (i, bfs_dag_longest(g, d, mask, u)))
        .reduce_with(pick);
    finish(best, (sources.len() * g.order()) as u64)
}

fn bfs_dag_longest(g: &Graph, d: &DistanceMatrix, mask: &[bool], u: usize) -> Best {
    let row = d.row(u);
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| row[x]);
    let mut score = vec![0usize; n];
    let mut pred = vec![usize::MAX; n];
    let mut best_end = u;
    for &x in &order {
        let dx = row[x];
        for &(y, id) in g.neighbors(x) {
            if row[y] + 1 == dx {
                let cand = score[y] + mask[id] as usize;
                if pred[x] == usize::MAX || cand > score[x] {
                    score[x] = cand;
                    pred[x] = y;
                }
            }
        }
        if score[x] > score[best_end] {
            best_end = x;
        }
    }
    (score[best_end], walk_back(&pred, u, best_end))
}

fn walk_back(pred: &[usize], start: usize, end: usize) -> Vec<usize> {
    let mut path = vec![end];
    let mut x = end;
    while x != start {
        x = pred[x];
        path.push(x);
    }
    path.reverse();
    path
}

fn pair_sweep(
    g: &Graph,
    d: &DistanceMatrix,
    mask: &[bool],
    candidates: &[usize],
) -> CommonGeodesic {
    let pairs: Vec<(usize, usize)> = candidates
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| candidates[i + 1..].iter().map(move |&v| (u, v)))
        .collect();
    let best = pairs
        .par_iter()
        .enumerate()
        .map(|(i, &(u, v))| (i, interval_longest(g, d, mask, u, v)))
        .reduce_with(pick);
    finish(best, pairs.len() as u64)
}

/// Longest marked-weight `u -> v` path in the interval DAG.
fn interval_longest(g: &Graph, d: &DistanceMatrix, mask: &[bool], u: usize, v: usize) -> Best {
    let len = d.get(u, v);
    let mut levels = vec![Vec::new(); len + 1];
    for x in 0..g.order() {
        if in_interval(d, u, v, x) {
            levels[d.get(u, x)].push(x);
        }
    }
    let mut score = vec![0usize; g.order()];
    let mut pred = vec![usize::MAX; g.order()];
    for level in levels.iter().skip(1) {
        for &x in level {
            let dx = d.get(u, x);
            for &(y, id) in g.neighbors(x) {
                if d.get(u, y) + 1 == dx && in_interval(d, u, v, y) {
                    let cand = score[y] + mask[id] as usize;
                    if pred[x] == usize::MAX || cand > score[x] {
                        score[x] = cand;
                        pred[x] = y;
                    }
                }
            }
        }
    }
    (score[v], walk_back(&pred, u, v))
}

pub fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    Ok(())
}

/// Result of testing an edge set against the `k`-general-position condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KgpCheck {
    pub k: usize,
    pub holds: bool,
    pub common: CommonGeodesic,
}

pub fn check_edge_kgp(g: &Graph, d: &DistanceMatrix, s: &EdgeSet, k: usize) -> Result<KgpCheck> {
    check_k(k)?;
    let common = common_geodesic(g, d, s, SweepStrategy::Sources)?;
    Ok(KgpCheck {
        k,
        holds: common.max_marked < k,
        common,
    })
}

/// No geodesic carries `k` or more edges of `s`.
pub fn is_edge_kgp(g: &Graph, d: &DistanceMatrix, s: &EdgeSet, k: usize) -> Result<bool> {
    Ok(check_edge_kgp(g, d, s, k)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::all_pairs_distances;

    fn setup(spec: FamilySpec) -> (Graph, DistanceMatrix) {
        let g = generate(&spec).unwrap();
        let d = all_pairs_distances(&g).unwrap();
        (g, d)
    }

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    #[test]
    fn geodesic_examples() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        assert!(is_geodesic(&c8, &d8, &[0, 1, 2, 3, 4]));
        assert!(!is_geodesic(&c8, &d8, &[0, 1, 2, 3, 4, 5]));
        assert!(!is_geodesic(&c8, &d8, &[0, 2]));
        assert!(!is_geodesic(&c8, &d8, &[]));
        assert!(!is_geodesic(&c8, &d8, &[0, 99]));
        assert!(is_geodesic(&c8, &d8, &[3]));
        let (q3, dq) = setup(FamilySpec::Hypercube(3));
        assert!(is_geodesic(&q3, &dq, &[0b000, 0b001, 0b011, 0b111]));
        assert!(!is_geodesic(&q3, &dq, &[0b000, 0b001, 0b000]));
    }

    #[test]
    fn interval_dags() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        let dag = geodesic_interval_dag(&c8, &d8, 0, 4).unwrap();
        assert_eq!(dag.arcs.len(), 8);
        assert_eq!(dag.levels.len(), 5);

        let (p5, dp) = setup(FamilySpec::Path(5));
        let dag = geodesic_interval_dag(&p5, &dp, 0, 4).unwrap();
        let arcs: Vec<_> = dag.oriented_edges().collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);

        let (q3, dq) = setup(FamilySpec::Hypercube(3));
        let dag = geodesic_interval_dag(&q3, &dq, 0, 7).unwrap();
        assert_eq!(dag.arcs.len(), 12);
        for (a, b) in dag.oriented_edges() {
            assert_eq!(b.count_ones(), a.count_ones() + 1);
        }
        assert!(geodesic_interval_dag(&q3, &dq, 2, 2).is_err());
    }

    #[test]
    fn checker_examples() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        assert_eq!(
            max_marked_on_common_geodesic(&c8, &d8, &c8.all_edges()).unwrap(),
            4
        );
        let spaced = es(&[(0, 1), (2, 3), (4, 5), (6, 7)]);
        assert_eq!(max_marked_on_common_geodesic(&c8, &d8, &spaced).unwrap(), 2);
        assert_eq!(
            max_marked_on_common_geodesic(&c8, &d8, &EdgeSet::new()).unwrap(),
            0
        );

        let (q3, dq) = setup(FamilySpec::Hypercube(3));
        let class: EdgeSet = (0..8usize)
            .filter(|x| x & 1 == 0)
            .map(|x| Edge::new(x, x | 1))
            .collect();
        assert_eq!(max_marked_on_common_geodesic(&q3, &dq, &class).unwrap(), 1);
    }

    #[test]
    fn witness_carries_the_maximum() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        let arc = es(&[(0, 1), (1, 2), (2, 3)]);
        let check = check_edge_kgp(&c8, &d8, &arc, 3).unwrap();
        assert!(!check.holds);
        let w = check.common.witness.unwrap();
        assert!(is_geodesic(&c8, &d8, w.vertices()));
        assert_eq!(w.edges().filter(|e| arc.contains(e)).count(), 3);
    }

    #[test]
    fn strategies_agree_on_examples() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        let s = es(&[(0, 1), (3, 4), (5, 6)]);
        let a = common_geodesic(&c8, &d8, &s, SweepStrategy::Sources).unwrap();
        for endpoint_restricted in [false, true] {
            let b = common_geodesic(
                &c8,
                &d8,
                &s,
                SweepStrategy::Pairs {
                    endpoint_restricted,
                },
            )
            .unwrap();
            assert_eq!(a.max_marked, b.max_marked);
        }
    }

    #[test]
    fn kgp_rejects_small_k_and_foreign_edges() {
        let (c8, d8) = setup(FamilySpec::Cycle(8));
        assert!(matches!(
            is_edge_kgp(&c8, &d8, &EdgeSet::new(), 2),
            Err(Error::InvalidK(2))
        ));
        assert!(matches!(
            is_edge_kgp(&c8, &d8, &es(&[(0, 2)]), 3),
            Err(Error::NotAnEdge(_))
        ));
        assert!(is_edge_kgp(&c8, &d8, &es(&[(0, 1), (2, 3), (4, 5), (6, 7)]), 3).unwrap());
        assert!(!is_edge_kgp(&c8, &d8, &es(&[(0, 1), (1, 2), (2, 3)]), 3).unwrap());
    }
}
