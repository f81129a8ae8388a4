//! Undirected simple graphs with canonical edges, all-pairs hop distances and
//! the plain-text edge-list format.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Labels;

/// An undirected edge in canonical form, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Loops are the caller's problem; use
    /// [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        debug_assert_ne!(a, b, "loop edge");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidEdge(a, b, "loop"));
        }
        Ok(Edge::new(a, b))
    }

    pub fn endpoints(self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn has_endpoint(self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(self, other: Edge) -> bool {
        self.has_endpoint(other.u) || self.has_endpoint(other.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.u, e.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// A set of canonical edges. Membership in a particular graph is checked by
/// the operations that consume it, see [`Graph::check_edges`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    /// Vertices incident to some edge of the set, ascending.
    pub fn endpoints(&self) -> Vec<usize> {
        let vs: BTreeSet<usize> = self.iter().flat_map(Edge::endpoints).collect();
        vs.into_iter().collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl Extend<Edge> for EdgeSet {
    fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = Edge;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Edge>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Undirected simple graph on vertices `0..n`.
///
/// Edges are kept sorted in canonical order; an edge's position in that order
/// is its id, and adjacency lists carry `(neighbor, edge id)` pairs so that the
/// metric code can mark edges without hashing.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    index: HashMap<Edge, usize>,
    labels: Labels,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidEdge(a, b, "endpoint out of range"));
            }
            let e = Edge::try_new(a, b)?;
            if !set.insert(e) {
                return Err(Error::InvalidEdge(a, b, "duplicate"));
            }
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        let mut index = HashMap::with_capacity(edges.len());
        for (id, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, id));
            adj[e.v].push((e.u, id));
            index.insert(*e, id);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            index,
            labels: Labels::Plain,
        })
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.index.contains_key(&Edge::new(a, b))
    }

    /// `(neighbor, edge id)` pairs sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn all_edges(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    pub fn check_edge(&self, e: Edge) -> Result<usize> {
        self.edge_id(e).ok_or(Error::NotAnEdge(e))
    }

    /// Edge ids of `s`, failing on the first non-member.
    pub fn check_edges(&self, s: &EdgeSet) -> Result<Vec<usize>> {
        s.iter().map(|e| self.check_edge(e)).collect()
    }

    pub fn edge_mask(&self, s: &EdgeSet) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.size()];
        for id in self.check_edges(s)? {
            mask[id] = true;
        }
        Ok(mask)
    }

    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &(y, _) in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Two-coloring when the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for &(y, _) in &self.adj[x] {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Reads the edge-list format: a header line `n m` followed by `m` lines
    /// `u v`. Blank lines and `#` comments are skipped.
    pub fn read_edge_list(reader: impl BufRead) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = i + 1;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let pair = parse_pair(body, line_no)?;
            if header.is_none() {
                header = Some(pair);
            } else {
                pairs.push((line_no, pair));
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        if pairs.len() != m {
            return Err(Error::Parse {
                line: 1,
                msg: format!("header announces {m} edges, found {}", pairs.len()),
            });
        }
        let mut seen = BTreeSet::new();
        for &(line, (a, b)) in &pairs {
            if a >= n || b >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex out of range 0..{n}"),
                });
            }
            if a == b {
                return Err(Error::Parse {
                    line,
                    msg: "loop".into(),
                });
            }
            if !seen.insert(Edge::new(a, b)) {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate edge {a} {b}"),
                });
            }
        }
        Graph::new(n, pairs.into_iter().map(|(_, p)| p))
    }

    /// Writes the canonical edge list (edges in sorted canonical order).
    pub fn write_edge_list(&self, mut out: impl Write) -> Result<()> {
        writeln!(out, "{} {}", self.n, self.size())?;
        for e in &self.edges {
            writeln!(out, "{} {}", e.u, e.v)?;
        }
        Ok(())
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("write to Vec");
        String::from_utf8(buf).expect("ascii")
    }
}

fn parse_pair(body: &str, line: usize) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or(Error::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a non-negative integer: '{tok}'"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

/// Reads an edge-set file: one `u v` pair per line, `#` comments allowed.
pub fn read_edge_set(reader: impl BufRead) -> Result<EdgeSet> {
    let mut set = EdgeSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (a, b) = parse_pair(body, i + 1)?;
        let e = Edge::try_new(a, b).map_err(|_| Error::Parse {
            line: i + 1,
            msg: "loop".into(),
        })?;
        set.insert(e);
    }
    Ok(set)
}

pub fn write_edge_set(s: &EdgeSet, mut out: impl Write) -> Result<()> {
    for e in s {
        writeln!(out, "{} {}", e.u, e.v)?;
    }
    Ok(())
}

/// All-pairs hop distances, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.d[u * self.n + v] as usize
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    /// `min` distance between a vertex of `a` and a vertex of `b`.
    pub fn set_distance(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.get(x, y))
            .min()
            .expect("non-empty vertex sets")
    }
}

/// BFS from every vertex. Fails on disconnected graphs, naming an unreachable
/// pair.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    use rayon::prelude::*;
    let n = g.order();
    let rows: Vec<Result<Vec<u32>>> = (0..n)
        .into_par_iter()
        .map(|u| {
            g.bfs(u)
                .into_iter()
                .enumerate()
                .map(|(v, d)| d.ok_or(Error::Disconnected { u, v }))
                .collect()
        })
        .collect();
    let mut d = Vec::with_capacity(n * n);
    for row in rows {
        d.extend(row?);
    }
    Ok(DistanceMatrix { n, d })
}

/// Distance between two edges: the minimum over their four endpoint pairs.
pub fn edge_distance(g: &Graph, d: &DistanceMatrix, e: Edge, f: Edge) -> Result<usize> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    Ok(d.set_distance(&e.endpoints(), &f.endpoints()))
}
