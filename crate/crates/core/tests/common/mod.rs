//! Brute-force reference implementations. Nothing here calls the library's
//! distance, geodesic or solver code; graphs are plain edge lists.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const INF: u32 = u32::MAX / 4;

#[derive(Debug, Clone)]
pub struct Plain {
    pub n: usize,
    /// Sorted `(u, v)` with `u < v`; the position is the edge's bit.
    pub edges: Vec<(usize, usize)>,
}

impl Plain {
    pub fn new(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Plain { n, edges }
    }

    pub fn bit(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).ok()
    }

    pub fn to_graph(&self) -> geopos::graph::Graph {
        geopos::graph::Graph::new(self.n, self.edges.iter().copied()).unwrap()
    }

    pub fn connected(&self) -> bool {
        let d = floyd_warshall(self);
        (0..self.n).all(|v| d[0][v] < INF)
    }
}

pub fn floyd_warshall(g: &Plain) -> Vec<Vec<u32>> {
    let n = g.n;
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in &g.edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every geodesic with at least one edge, as its vertex sequence, found by
/// enumerating all simple paths and keeping those as short as the distance.
pub fn all_geodesics(g: &Plain) -> Vec<Vec<usize>> {
    let d = floyd_warshall(g);
    let mut adj = vec![Vec::new(); g.n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut out = Vec::new();
    for s in 0..g.n {
        let mut path = vec![s];
        let mut on = vec![false; g.n];
        on[s] = true;
        simple_paths(&adj, &d, &mut path, &mut on, &mut out);
    }
    out
}

fn simple_paths(
    adj: &[Vec<usize>],
    d: &[Vec<u32>],
    path: &mut Vec<usize>,
    on: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if on[w] {
            continue;
        }
        path.push(w);
        on[w] = true;
        if d[path[0]][w] as usize == path.len() - 1 {
            out.push(path.clone());
            // a non-geodesic path has no geodesic extension
            simple_paths(adj, d, path, on, out);
        }
        on[w] = false;
        path.pop();
    }
}

pub fn path_mask(g: &Plain, p: &[usize]) -> u64 {
    p.windows(2)
        .map(|w| 1u64 << g.bit(w[0], w[1]).unwrap())
        .fold(0, |a, b| a | b)
}

pub fn geodesic_masks(g: &Plain) -> Vec<u64> {
    let set: BTreeSet<u64> = all_geodesics(g).iter().map(|p| path_mask(g, p)).collect();
    set.into_iter().collect()
}

/// Largest number of edges of `s` on one geodesic.
pub fn brute_max_marked(g: &Plain, s: u64) -> u32 {
    geodesic_masks(g)
        .iter()
        .map(|m| (m & s).count_ones())
        .max()
        .unwrap_or(0)
}

fn inclusion_maximal(masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .copied()
        .filter(|&a| !masks.iter().any(|&b| b != a && a & b == a))
        .collect()
}

/// Maximum edge k-gp set size by trying every edge subset.
pub fn brute_kgp(g: &Plain, k: u32) -> u32 {
    let m = g.edges.len();
    assert!(m <= 24);
    let masks: Vec<u64> = inclusion_maximal(&geodesic_masks(g))
        .into_iter()
        .filter(|x| x.count_ones() >= k)
        .collect();
    let mut best = 0;
    for s in 0u64..1 << m {
        let size = s.count_ones();
        if size > best && masks.iter().all(|x| (x & s).count_ones() < k) {
            best = size;
        }
    }
    best
}

/// Minimum number of geodesics covering (`partition == false`) or
/// partitioning the edges, by breadth-first search over covered subsets.
pub fn brute_cover(g: &Plain, partition: bool) -> u32 {
    let m = g.edges.len();
    assert!(m <= 20);
    let full = (1u64 << m) - 1;
    let masks = if partition {
        geodesic_masks(g)
    } else {
        inclusion_maximal(&geodesic_masks(g))
    };
    let mut dist = vec![u32::MAX; 1 << m];
    dist[0] = 0;
    let mut frontier = vec![0u64];
    let mut level = 0;
    while dist[full as usize] == u32::MAX {
        level += 1;
        let mut next = Vec::new();
        for &c in &frontier {
            // always extend through the lowest uncovered edge
            let low = (!c & full).trailing_zeros();
            for &x in &masks {
                if x >> low & 1 == 0 || (partition && x & c != 0) {
                    continue;
                }
                let y = c | x;
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = level;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    level
}

/// Connected graph on `2..=max_n` vertices with at most `max(max_m, n - 1)`
/// edges: a random tree plus random extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Plain {
    let n = rng.gen_range(2..=max_n);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let cap = max_m.min(all.len()).max(n - 1);
    let target = rng.gen_range(n - 1..=cap);
    while edges.len() < target {
        let e = all[rng.gen_range(0..all.len())];
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Plain::new(n, edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of connected graphs on `n`
/// vertices, by minimizing the edge bitmask over all relabelings.
pub fn connected_graphs(n: usize) -> Vec<Plain> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| {
        pairs
            .iter()
            .position(|&p| p == (a.min(b), a.max(b)))
            .unwrap()
    };
    let perms = permutations(n);
    let relabel: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Plain::new(n, edges);
        if n > 1 && !g.connected() {
            continue;
        }
        let canon = relabel
            .iter()
            .map(|r| {
                (0..pairs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |a, i| a | 1 << r[i])
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

pub fn path(n: usize) -> Plain {
    Plain::new(n, (1..n).map(|v| (v - 1, v)).collect())
}

pub fn cycle(n: usize) -> Plain {
    Plain::new(n, (0..n).map(|v| (v, (v + 1) % n)).collect())
}

/// Brute check of "every k-matching is in edge k-general position".
pub fn brute_matchings_in_position(g: &Plain, k: u32) -> bool {
    let m = g.edges.len();
    let masks = geodesic_masks(g);
    (0u64..1 << m).filter(|s| s.count_ones() == k).all(|s| {
        let mut used = 0u64;
        let matching = (0..m).filter(|i| s >> i & 1 == 1).all(|i| {
            let (a, b) = g.edges[i];
            let hit = used >> a & 1 == 1 || used >> b & 1 == 1;
            used |= 1 << a | 1 << b;
            !hit
        });
        !matching || masks.iter().all(|x| (x & s).count_ones() < k)
    })
}

pub fn diameter(g: &Plain) -> u32 {
    floyd_warshall(g)
        .iter()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0)
}
