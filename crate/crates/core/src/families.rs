//! Deterministic generators for paths, cycles, hypercubes, tori, butterflies
//! and Benes networks, with the vertex numbering each one uses.
//!
//! Numbering:
//! - path / cycle: `0..n` in order along the path or cycle.
//! - hypercube `Q_d`: the vertex is its bit vector; coordinate `i` (1-based)
//!   is bit `i - 1`.
//! - product `G □ H`: `(g, h) -> g * |V(H)| + h`. A torus `C_n □ C_m` is the
//!   product of two cycles, so `(a, b) -> a * m + b` (row-major).
//! - butterfly / Benes on `r`-bit rows: `[s, level] -> level * 2^r + s`.
//!   Between levels `i - 1` and `i` (for `i <= r`) row `s` connects to rows `s`
//!   (straight) and `s ^ bit(i)` (cross), where `bit(i)` is the `i`-th bit from
//!   the most significant end. Benes levels `i > r` mirror this with
//!   `bit(2r - i + 1)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, EdgeSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Hypercube(usize),
    Torus(usize, usize),
    Butterfly(usize),
    Benes(usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Torus(n, m) => write!(f, "torus:{n}x{m}"),
            FamilySpec::Butterfly(r) => write!(f, "butterfly:{r}"),
            FamilySpec::Benes(r) => write!(f, "benes:{r}"),
            FamilySpec::Product(a, b) => write!(f, "prod:{a},{b}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSpec(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "path" => Ok(FamilySpec::Path(num(rest)?)),
            "cycle" => Ok(FamilySpec::Cycle(num(rest)?)),
            "hypercube" => Ok(FamilySpec::Hypercube(num(rest)?)),
            "butterfly" => Ok(FamilySpec::Butterfly(num(rest)?)),
            "benes" => Ok(FamilySpec::Benes(num(rest)?)),
            "torus" => {
                let (n, m) = rest.split_once('x').ok_or_else(bad)?;
                Ok(FamilySpec::Torus(num(n)?, num(m)?))
            }
            "prod" => {
                // nested products make the comma ambiguous; take the first
                // split where both halves parse
                for (i, _) in rest.match_indices(',') {
                    if let (Ok(a), Ok(b)) = (rest[..i].parse(), rest[i + 1..].parse()) {
                        return Ok(FamilySpec::Product(Box::new(a), Box::new(b)));
                    }
                }
                Err(bad())
            }
            _ => Err(bad()),
        }
    }
}

/// Family metadata carried by generated graphs. Metric code never reads it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Labels {
    #[default]
    Plain,
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Hypercube {
        d: usize,
    },
    Torus {
        n: usize,
        m: usize,
    },
    Butterfly {
        r: usize,
    },
    Benes {
        r: usize,
    },
    Product {
        left: Box<Labels>,
        right: Box<Labels>,
        right_order: usize,
    },
}

const MAX_DIM: usize = 20;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match *spec {
        FamilySpec::Path(n) => {
            if n < 2 {
                return Err(invalid(format!("path needs n >= 2, got {n}")));
            }
            Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?.with_labels(Labels::Path { n }))
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(cycle_graph(n)?.with_labels(Labels::Cycle { n }))
        }
        FamilySpec::Hypercube(d) => {
            if !(1..=MAX_DIM).contains(&d) {
                return Err(invalid(format!(
                    "hypercube needs 1 <= d <= {MAX_DIM}, got {d}"
                )));
            }
            let n = 1usize << d;
            let edges = (0..n).flat_map(|x| {
                (0..d)
                    .filter(move |b| x & (1 << b) == 0)
                    .map(move |b| (x, x | 1 << b))
            });
            Ok(Graph::new(n, edges)?.with_labels(Labels::Hypercube { d }))
        }
        FamilySpec::Torus(n, m) => {
            if n < 3 || m < 3 {
                return Err(invalid(format!("torus needs both sides >= 3, got {n}x{m}")));
            }
            let g = product(&cycle_graph(n)?, &cycle_graph(m)?)?;
            Ok(g.with_labels(Labels::Torus { n, m }))
        }
        FamilySpec::Butterfly(r) => {
            check_rows(r)?;
            Ok(butterfly_like(r, r)?.with_labels(Labels::Butterfly { r }))
        }
        FamilySpec::Benes(r) => {
            check_rows(r)?;
            Ok(butterfly_like(r, 2 * r)?.with_labels(Labels::Benes { r }))
        }
        FamilySpec::Product(ref a, ref b) => {
            let ga = generate(a)?;
            let gb = generate(b)?;
            let g = product(&ga, &gb)?;
            let labels = match (ga.labels(), gb.labels()) {
                (Labels::Cycle { n }, Labels::Cycle { n: m }) => Labels::Torus { n: *n, m: *m },
                (l, r) => Labels::Product {
                    left: Box::new(l.clone()),
                    right: Box::new(r.clone()),
                    right_order: gb.order(),
                },
            };
            Ok(g.with_labels(labels))
        }
    }
}

fn check_rows(r: usize) -> Result<()> {
    if !(2..=MAX_DIM).contains(&r) {
        return Err(invalid(format!(
            "butterfly/Benes needs 2 <= r <= {MAX_DIM}, got {r}"
        )));
    }
    Ok(())
}

fn cycle_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Cartesian product.
pub fn product(a: &Graph, b: &Graph) -> Result<Graph> {
    let nb = b.order();
    let id = |x: usize, y: usize| x * nb + y;
    let mut edges = Vec::with_capacity(a.size() * nb + b.size() * a.order());
    for e in a.edges() {
        edges.extend((0..nb).map(|y| (id(e.u, y), id(e.v, y))));
    }
    for x in 0..a.order() {
        edges.extend(b.edges().iter().map(|e| (id(x, e.u), id(x, e.v))));
    }
    Graph::new(a.order() * nb, edges)
}

/// Row bit flipped by edges entering `level` (1-based levels, `r`-bit rows).
pub fn benes_level_bit(r: usize, level: usize) -> usize {
    let i = if level <= r { level } else { 2 * r - level + 1 };
    1 << (r - i)
}

fn butterfly_like(r: usize, top: usize) -> Result<Graph> {
    let rows = 1usize << r;
    let id = |s: usize, level: usize| level * rows + s;
    let mut edges = Vec::with_capacity(2 * rows * top);
    for level in 1..=top {
        let bit = benes_level_bit(r, level);
        for s in 0..rows {
            edges.push((id(s, level - 1), id(s, level)));
            edges.push((id(s, level - 1), id(s ^ bit, level)));
        }
    }
    Graph::new(rows * (top + 1), edges)
}

fn torus_dims(g: &Graph) -> Result<(usize, usize)> {
    match *g.labels() {
        Labels::Torus { n, m } => Ok((n, m)),
        _ => Err(Error::Precondition("graph is not a generated torus".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Moves along the first factor (`a` changes).
    Horizontal,
    /// Moves along the second factor (`b` changes).
    Vertical,
}

/// Coordinates of torus vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusCoordinates {
    pub n: usize,
    pub m: usize,
}

impl TorusCoordinates {
    pub fn of(g: &Graph) -> Result<Self> {
        let (n, m) = torus_dims(g)?;
        Ok(TorusCoordinates { n, m })
    }

    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.m, v % self.m)
    }

    pub fn vertex(&self, a: usize, b: usize) -> usize {
        (a % self.n) * self.m + b % self.m
    }

    pub fn direction(&self, e: Edge) -> Direction {
        if self.coords(e.u).1 == self.coords(e.v).1 {
            Direction::Horizontal
        } else {
            Direction::Vertical
        }
    }

    /// Endpoints ordered so the second is one step forward (mod n or m) from
    /// the first.
    pub fn oriented(&self, e: Edge) -> (usize, usize) {
        let ((a1, b1), (a2, b2)) = (self.coords(e.u), self.coords(e.v));
        let forward = match self.direction(e) {
            Direction::Horizontal => (a1 + 1) % self.n == a2,
            Direction::Vertical => (b1 + 1) % self.m == b2,
        };
        if forward {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        }
    }

    /// All translates of `e` across the other factor, `e` included.
    pub fn translate_class(&self, e: Edge) -> EdgeSet {
        let (x1, x2) = self.oriented(e);
        let ((a1, b1), (a2, b2)) = (self.coords(x1), self.coords(x2));
        match self.direction(e) {
            Direction::Horizontal => (0..self.m)
                .map(|b| Edge::new(self.vertex(a1, b), self.vertex(a2, b)))
                .collect(),
            Direction::Vertical => (0..self.n)
                .map(|a| Edge::new(self.vertex(a, b1), self.vertex(a, b2)))
                .collect(),
        }
    }
}

/// The four-distance parallelism relation on ordered edges `x = (x1, x2)`,
/// `y = (y1, y2)`: `d(x1,y2) = d(x2,y1) = d(x1,y1) + 1 = d(x2,y2) + 1`.
pub fn parallel_predicate(d: &DistanceMatrix, x: (usize, usize), y: (usize, usize)) -> bool {
    let (x1, x2) = x;
    let (y1, y2) = y;
    let a = d.get(x1, y2);
    a == d.get(x2, y1) && a == d.get(x1, y1) + 1 && a == d.get(x2, y2) + 1
}

/// Edges parallel to `e` in a torus: `e` itself plus every other edge `f` for
/// which the distance relation holds with both edges oriented forward along
/// their factor. The result is cross-checked against the translate class.
pub fn torus_parallel(g: &Graph, d: &DistanceMatrix, e: Edge) -> Result<EdgeSet> {
    let tc = TorusCoordinates::of(g)?;
    g.check_edge(e)?;
    let x = tc.oriented(e);
    let mut by_distance = EdgeSet::new();
    by_distance.insert(e);
    for &f in g.edges() {
        if f != e && parallel_predicate(d, x, tc.oriented(f)) {
            by_distance.insert(f);
        }
    }
    let by_coordinates = tc.translate_class(e);
    if by_distance != by_coordinates {
        return Err(Error::Precondition(format!(
            "parallel class of {e} disagrees with its translate class"
        )));
    }
    Ok(by_distance)
}

/// The vertices `(i, i)` of a square torus with even side.
pub fn torus_diagonal_vertices(g: &Graph) -> Result<Vec<usize>> {
    let tc = TorusCoordinates::of(g)?;
    if tc.n != tc.m || tc.n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "diagonal vertices need a square torus with even side, got {}x{}",
            tc.n, tc.m
        )));
    }
    Ok((0..tc.n).map(|i| tc.vertex(i, i)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenesCoordinates {
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Link {
    Straight,
    Cross,
}

impl BenesCoordinates {
    pub fn of(g: &Graph) -> Result<Self> {
        match *g.labels() {
            Labels::Benes { r } => Ok(BenesCoordinates { r }),
            _ => Err(Error::Precondition(
                "graph is not a generated Benes network".into(),
            )),
        }
    }

    pub fn rows(&self) -> usize {
        1 << self.r
    }

    pub fn levels(&self) -> usize {
        2 * self.r
    }

    /// `(row, level)`.
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v % self.rows(), v / self.rows())
    }

    pub fn vertex(&self, row: usize, level: usize) -> usize {
        level * self.rows() + row
    }

    /// Edge level (1..=2r) and kind.
    pub fn edge_info(&self, e: Edge) -> (usize, Link) {
        let (su, lu) = self.coords(e.u);
        let (sv, lv) = self.coords(e.v);
        let kind = if su == sv {
            Link::Straight
        } else {
            Link::Cross
        };
        (lu.max(lv), kind)
    }

    /// The mirror map `[s, i] -> [s, 2r - i]`.
    pub fn mirror(&self, v: usize) -> usize {
        let (s, i) = self.coords(v);
        self.vertex(s, self.levels() - i)
    }
}

pub fn benes_level_vertices(g: &Graph, level: usize) -> Result<Vec<usize>> {
    let bc = BenesCoordinates::of(g)?;
    if level > bc.levels() {
        return Err(invalid(format!(
            "vertex level {level} outside 0..={}",
            bc.levels()
        )));
    }
    Ok((0..bc.rows()).map(|s| bc.vertex(s, level)).collect())
}

pub fn benes_level_edges(g: &Graph, level: usize) -> Result<EdgeSet> {
    let bc = BenesCoordinates::of(g)?;
    if level == 0 || level > bc.levels() {
        return Err(invalid(format!(
            "edge level {level} outside 1..={}",
            bc.levels()
        )));
    }
    Ok(g.edges()
        .iter()
        .copied()
        .filter(|&e| bc.edge_info(e).0 == level)
        .collect())
}
