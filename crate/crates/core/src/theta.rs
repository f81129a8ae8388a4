//! Djoković–Winkler relation, its classes, partial-cube recognition and the
//! class-union construction of large edge general position sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesic::check_k;
use crate::graph::{DistanceMatrix, Edge, EdgeSet, Graph};

/// `xy Θ uv` iff `d(x,u) + d(y,v) != d(x,v) + d(y,u)`.
pub fn theta_related(g: &Graph, d: &DistanceMatrix, e: Edge, f: Edge) -> Result<bool> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    Ok(theta(d, e, f))
}

fn theta(d: &DistanceMatrix, e: Edge, f: Edge) -> bool {
    let (x, y, u, v) = (e.u, e.v, f.u, f.v);
    d.get(x, u) + d.get(y, v) != d.get(x, v) + d.get(y, u)
}

/// Classes of the transitive closure of Θ, ordered by their smallest edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaClasses {
    pub classes: Vec<EdgeSet>,
    /// Class index per edge id.
    #[serde(skip)]
    pub class_of: Vec<usize>,
}

impl ThetaClasses {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(EdgeSet::len).collect()
    }
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            y = std::mem::replace(&mut self.0[y], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so representatives are canonical
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

pub fn theta_classes(g: &Graph, d: &DistanceMatrix) -> ThetaClasses {
    let m = g.size();
    let edges = g.edges();
    let mut sets = DisjointSets((0..m).collect());
    for i in 0..m {
        for j in i + 1..m {
            if theta(d, edges[i], edges[j]) {
                sets.union(i, j);
            }
        }
    }
    let mut slot = vec![usize::MAX; m];
    let mut classes: Vec<EdgeSet> = Vec::new();
    let mut class_of = vec![0; m];
    for id in 0..m {
        let root = sets.find(id);
        if slot[root] == usize::MAX {
            slot[root] = classes.len();
            classes.push(EdgeSet::new());
        }
        class_of[id] = slot[root];
        classes[slot[root]].insert(edges[id]);
    }
    ThetaClasses { classes, class_of }
}

/// Connected, bipartite, and Θ already transitive (every closure class is a
/// Θ-clique).
pub fn is_partial_cube(g: &Graph, d: &DistanceMatrix) -> bool {
    if !g.is_connected() || g.bipartition().is_none() {
        return false;
    }
    first_intransitive_triple(g, d).is_none()
}

/// Edges `e Θ f Θ h` with `e` and `h` unrelated, if any.
pub fn first_intransitive_triple(g: &Graph, d: &DistanceMatrix) -> Option<(Edge, Edge, Edge)> {
    let tc = theta_classes(g, d);
    for class in &tc.classes {
        let members: Vec<Edge> = class.iter().collect();
        for (i, &e) in members.iter().enumerate() {
            for &h in &members[i + 1..] {
                if !theta(d, e, h) {
                    let mid = members
                        .iter()
                        .copied()
                        .find(|&f| theta(d, e, f) && theta(d, f, h))
                        .unwrap_or(e);
                    return Some((e, mid, h));
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ClassSelector {
    /// The `k-1` largest classes, ties broken by lower class index.
    #[default]
    LargestFirst,
    /// Exactly these class indices.
    Indices(Vec<usize>),
}

/// Union of `k-1` Θ-classes of a partial cube. No geodesic meets a class
/// twice, so no geodesic meets the union `k` times.
pub fn theta_union_kgp(
    g: &Graph,
    d: &DistanceMatrix,
    k: usize,
    selector: &ClassSelector,
) -> Result<EdgeSet> {
    check_k(k)?;
    if !is_partial_cube(g, d) {
        return Err(Error::Precondition("graph is not a partial cube".into()));
    }
    let tc = theta_classes(g, d);
    let count = tc.classes.len();
    if k - 1 > count {
        return Err(Error::Precondition(format!(
            "need k <= (number of classes) + 1 = {}, got k = {k}",
            count + 1
        )));
    }
    let chosen: Vec<usize> = match selector {
        ClassSelector::LargestFirst => {
            let mut idx: Vec<usize> = (0..count).collect();
            idx.sort_by_key(|&i| (std::cmp::Reverse(tc.classes[i].len()), i));
            idx.truncate(k - 1);
            idx
        }
        ClassSelector::Indices(idx) => {
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != k - 1 || sorted.iter().any(|&i| i >= count) {
                return Err(Error::InvalidParameter(format!(
                    "need {} distinct class indices below {count}",
                    k - 1
                )));
            }
            sorted
        }
    };
    Ok(chosen
        .into_iter()
        .flat_map(|i| tc.classes[i].iter().collect::<Vec<_>>())
        .collect())
}
