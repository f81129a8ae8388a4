//! Explicit witnesses for the exact values on cycles, tori, hypercubes and
//! Benes networks. Every builder re-checks its output with the graph-core
//! predicates before marking the certificate verified; nothing is trusted
//! because of how it was built.

use crate::certificate::{Certificate, CheckerStats, Claim, Witness};
use crate::covers::{check_cover, counting_lower_bound};
use crate::error::{Error, Result};
use crate::families::{
    benes_level_bit, benes_level_vertices, generate, torus_diagonal_vertices, torus_parallel,
    BenesCoordinates, FamilySpec, TorusCoordinates,
};
use crate::geodesic::{check_edge_kgp, GeodesicPath};
use crate::graph::{all_pairs_distances, DistanceMatrix, Edge, EdgeSet, Graph};
use crate::theta::{theta_union_kgp, ClassSelector};

/// A certificate together with the graph it speaks about.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub distances: DistanceMatrix,
    pub certificate: Certificate,
}

impl Construction {
    pub fn edge_set(&self) -> &EdgeSet {
        self.certificate
            .witness
            .as_edge_set()
            .expect("edge-set construction")
    }

    pub fn geodesics(&self) -> &[GeodesicPath] {
        self.certificate
            .witness
            .as_geodesics()
            .expect("geodesic-list construction")
    }
}

fn build(spec: &FamilySpec) -> Result<(Graph, DistanceMatrix)> {
    let g = generate(spec)?;
    let d = all_pairs_distances(&g)?;
    Ok((g, d))
}

/// `r >= 3`, `t >= 1` and `2^t <= 2^(r-1) - 2`.
fn check_power_hypothesis(r: usize, t: usize) -> Result<()> {
    let ok = (3..=16).contains(&r) && t >= 1 && t < r && (1usize << t) + 2 <= 1 << (r - 1);
    if !ok {
        return Err(Error::InvalidParameter(format!(
            "requires r >= 3, t >= 1 and 2^t <= 2^(r-1) - 2, got r = {r}, t = {t}"
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn kgp_certificate(
    g: &Graph,
    d: &DistanceMatrix,
    claim: Claim,
    s: EdgeSet,
    k: usize,
    expected: usize,
    structural_ok: bool,
    method: &str,
) -> Result<Certificate> {
    let check = check_edge_kgp(g, d, &s, k)?;
    Ok(Certificate {
        claim,
        value: s.len(),
        verified: check.holds && structural_ok && s.len() == expected,
        witness: Witness::EdgeSet(s),
        method: format!(
            "{method}; edge {k}-gp checker (max marked {})",
            check.common.max_marked
        ),
        checker_stats: Some(CheckerStats {
            max_marked: check.common.max_marked,
            pairs_swept: check.common.pairs_swept,
        }),
    })
}

fn partition_certificate(
    g: &Graph,
    d: &DistanceMatrix,
    claim: Claim,
    paths: Vec<GeodesicPath>,
    expected: usize,
    extra_ok: bool,
    method: &str,
) -> Certificate {
    let check = check_cover(g, d, &paths);
    let diam = d.diameter();
    let all_diametral = paths.iter().all(|p| p.len() == diam);
    let lower = counting_lower_bound(g, d);
    Certificate {
        claim,
        value: paths.len(),
        verified: check.is_partition()
            && all_diametral
            && extra_ok
            && paths.len() == expected
            && lower == expected,
        witness: Witness::GeodesicList(paths),
        method: format!(
            "{method}; partition check (geodesic, edge-disjoint, covering), all lengths = diam {diam}, ceil(m/diam) = {lower}"
        ),
        checker_stats: None,
    }
}

/// `2^(t+1)` equally spaced edges of `C_(2^r)`, gap `2^(r-t-1) - 1`, in
/// `(2^t + 1)`-general position.
pub fn cycle_equidistant_kgp(r: usize, t: usize) -> Result<Construction> {
    check_power_hypothesis(r, t)?;
    let n = 1 << r;
    let (g, d) = build(&FamilySpec::Cycle(n))?;
    let count = 1 << (t + 1);
    let step = 1 << (r - t - 1);
    let edges: Vec<Edge> = (0..count)
        .map(|i| Edge::new(i * step, (i * step + 1) % n))
        .collect();
    let gaps_ok = (0..count).all(|i| {
        let (e, f) = (edges[i], edges[(i + 1) % count]);
        d.set_distance(&e.endpoints(), &f.endpoints()) == step - 1
    });
    let k = (1 << t) + 1;
    let claim = Claim::new("lemma-3.1")
        .param("graph", format!("cycle:{n}"))
        .param("r", r)
        .param("t", t)
        .param("k", k);
    let cert = kgp_certificate(
        &g,
        &d,
        claim,
        edges.into_iter().collect(),
        k,
        count,
        gaps_ok,
        &format!("equidistant edges, gap {} checked", step - 1),
    )?;
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// The two halves of an even cycle.
pub fn cycle_half_partition(n: usize) -> Result<Construction> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "need an even cycle, got n = {n}"
        )));
    }
    let (g, d) = build(&FamilySpec::Cycle(n))?;
    let h = n / 2;
    let paths = vec![
        GeodesicPath::from_trusted((0..=h).collect()),
        GeodesicPath::from_trusted((h..=n).map(|i| i % n).collect()),
    ];
    let claim = Claim::new("cycle-halves").param("graph", format!("cycle:{n}"));
    let cert = partition_certificate(&g, &d, claim, paths, 2, true, "antipodal arcs");
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// `4r` diametral paths partitioning `C_(2r) □ C_(2r)`, two through each
/// diagonal vertex `(i, i)`, which is the midpoint of both.
pub fn torus_diametral_partition(r: usize) -> Result<Construction> {
    if !(2..=64).contains(&r) {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= r <= 64, got {r}"
        )));
    }
    let side = 2 * r;
    let (g, d) = build(&FamilySpec::Torus(side, side))?;
    let tc = TorusCoordinates::of(&g)?;
    let back = |i: usize| (i + side - r) % side;
    let mut paths = Vec::with_capacity(2 * side);
    for i in 0..side {
        // along the first factor into (i, i), then along the second
        let mut first: Vec<usize> = (0..=r).map(|s| tc.vertex(back(i) + s, i)).collect();
        first.extend((1..=r).map(|s| tc.vertex(i, i + s)));
        // along the second factor into (i, i), then along the first
        let mut second: Vec<usize> = (0..=r).map(|s| tc.vertex(i, back(i) + s)).collect();
        second.extend((1..=r).map(|s| tc.vertex(i + s, i)));
        paths.push(GeodesicPath::from_trusted(first));
        paths.push(GeodesicPath::from_trusted(second));
    }
    let diagonal = torus_diagonal_vertices(&g)?;
    let midpoints_ok = paths
        .chunks(2)
        .zip(&diagonal)
        .all(|(pair, &v)| pair.iter().all(|p| p.vertices()[r] == v));
    let claim = Claim::new("prop-3.2")
        .param("graph", format!("torus:{side}x{side}"))
        .param("r", r);
    let cert = partition_certificate(
        &g,
        &d,
        claim,
        paths,
        4 * r,
        midpoints_ok,
        "two diametral paths per diagonal vertex, midpoints checked",
    );
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// `(2^t + 1)`-general position set of `C_(2^r) □ C_(2^r)` with `2^(r+t+1)`
/// edges: `2^t` equally spaced edges of one cycle in each direction, together
/// with all of their parallel translates.
pub fn torus_parallel_kgp(r: usize, t: usize) -> Result<Construction> {
    check_power_hypothesis(r, t)?;
    let side = 1 << r;
    let (g, d) = build(&FamilySpec::Torus(side, side))?;
    let tc = TorusCoordinates::of(&g)?;
    // 2^t equidistant positions fill the cycle exactly when the step is
    // 2^(r-t), i.e. the gap between chosen edges is 2^(r-t) - 1
    let step = side >> t;
    let positions: Vec<usize> = (0..1 << t).map(|j| j * step).collect();
    let seeds: Vec<Edge> = positions
        .iter()
        .flat_map(|&p| {
            [
                Edge::new(tc.vertex(p, 0), tc.vertex(p + 1, 0)),
                Edge::new(tc.vertex(0, p), tc.vertex(0, p + 1)),
            ]
        })
        .collect();
    let mut s = EdgeSet::new();
    let mut classes_ok = true;
    for &e in &seeds {
        let class = torus_parallel(&g, &d, e)?;
        classes_ok &= class.len() == side;
        s.extend(class.iter());
    }
    let horizontal: Vec<Edge> = seeds.iter().step_by(2).copied().collect();
    let gaps_ok = horizontal.len() < 2
        || (0..horizontal.len()).all(|i| {
            let (e, f) = (horizontal[i], horizontal[(i + 1) % horizontal.len()]);
            d.set_distance(&e.endpoints(), &f.endpoints()) == step - 1
        });
    let k = (1 << t) + 1;
    let expected = 1 << (r + t + 1);
    let claim = Claim::new("thm-3.3")
        .param("graph", format!("torus:{side}x{side}"))
        .param("r", r)
        .param("t", t)
        .param("k", k);
    let cert = kgp_certificate(
        &g,
        &d,
        claim,
        s,
        k,
        expected,
        classes_ok && gaps_ok,
        &format!(
            "parallel classes of {} seeds per direction, gap {}",
            1 << t,
            step - 1
        ),
    )?;
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// Union of the `k - 1` largest Θ-classes of `Q_d`.
pub fn hypercube_theta_kgp(dim: usize, k: usize) -> Result<Construction> {
    if k < 3 || k > dim + 1 {
        return Err(Error::InvalidParameter(format!(
            "need 3 <= k <= d + 1, got d = {dim}, k = {k}"
        )));
    }
    let (g, d) = build(&FamilySpec::Hypercube(dim))?;
    let s = theta_union_kgp(&g, &d, k, &ClassSelector::LargestFirst)?;
    let expected = (k - 1) << (dim - 1);
    let claim = Claim::new("thm-4.2")
        .param("graph", format!("hypercube:{dim}"))
        .param("d", dim)
        .param("k", k);
    let cert = kgp_certificate(
        &g,
        &d,
        claim,
        s,
        k,
        expected,
        true,
        "union of k-1 theta classes",
    )?;
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// `2^(d-1)` geodesics of length `d` partitioning `Q_d`: from every even
/// vertex, flip coordinates `1, ..., d` in order.
pub fn hypercube_path_partition(dim: usize) -> Result<Construction> {
    let (g, d) = build(&FamilySpec::Hypercube(dim))?;
    let paths: Vec<GeodesicPath> = (0..1usize << dim)
        .filter(|v| v.count_ones() % 2 == 0)
        .map(|v| {
            let mut seq = vec![v];
            let mut x = v;
            for bit in 0..dim {
                x ^= 1 << bit;
                seq.push(x);
            }
            GeodesicPath::from_trusted(seq)
        })
        .collect();
    let claim = Claim::new("thm-4.2")
        .param("graph", format!("hypercube:{dim}"))
        .param("d", dim)
        .param("problem", "gpart");
    let cert = partition_certificate(
        &g,
        &d,
        claim,
        paths,
        1 << (dim - 1),
        true,
        "ordered coordinate flips from even vertices",
    );
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// `2^(r+1)` diametral paths partitioning `BN(r)`. In the lower half, row `s`
/// takes cross edges from `[s, 0]` up to `[!s, r]` and straight edges back
/// down to `[!s, 0]`; the upper half mirrors this from level `2r`.
pub fn benes_path_partition(r: usize) -> Result<Construction> {
    let (g, d) = build(&FamilySpec::Benes(r))?;
    let bc = BenesCoordinates::of(&g)?;
    let rows = bc.rows();
    let top = bc.levels();
    let mut paths = Vec::with_capacity(2 * rows);
    for s in 0..rows {
        let mut seq = vec![bc.vertex(s, 0)];
        let mut row = s;
        for level in 1..=r {
            row ^= benes_level_bit(r, level);
            seq.push(bc.vertex(row, level));
        }
        seq.extend((0..r).rev().map(|level| bc.vertex(row, level)));
        paths.push(GeodesicPath::from_trusted(seq));
    }
    for s in 0..rows {
        let mut seq = vec![bc.vertex(s, top)];
        let mut row = s;
        for level in (r..top).rev() {
            // the edge between `level` and `level + 1` flips bit(level + 1)
            row ^= benes_level_bit(r, level + 1);
            seq.push(bc.vertex(row, level));
        }
        seq.extend((r + 1..=top).map(|level| bc.vertex(row, level)));
        paths.push(GeodesicPath::from_trusted(seq));
    }
    let claim = Claim::new("thm-5.1")
        .param("graph", format!("benes:{r}"))
        .param("r", r);
    let cert = partition_certificate(
        &g,
        &d,
        claim,
        paths,
        2 * rows,
        true,
        "cross-up/straight-back paths in each half",
    );
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}

/// Edges at the degree-2 levels `0` and `2r` (`k = 3`), plus those at level
/// `r` (`k = 5`).
pub fn benes_kgp(r: usize, k: usize) -> Result<Construction> {
    if k != 3 && k != 5 {
        return Err(Error::InvalidParameter(format!(
            "Benes construction exists only for k in {{3, 5}}, got {k}"
        )));
    }
    if r < 3 {
        return Err(Error::InvalidParameter(format!("need r >= 3, got {r}")));
    }
    let (g, d) = build(&FamilySpec::Benes(r))?;
    let mut levels = vec![0, 2 * r];
    if k == 5 {
        levels.push(r);
    }
    let mut s = EdgeSet::new();
    for level in levels {
        for v in benes_level_vertices(&g, level)? {
            s.extend(g.neighbors(v).iter().map(|&(_, id)| g.edge(id)));
        }
    }
    let expected = (k - 1) << (r + 1);
    let claim = Claim::new("thm-5.2")
        .param("graph", format!("benes:{r}"))
        .param("r", r)
        .param("k", k);
    let cert = kgp_certificate(
        &g,
        &d,
        claim,
        s,
        k,
        expected,
        true,
        "edges at levels 0, 2r (and r for k = 5)",
    )?;
    Ok(Construction {
        graph: g,
        distances: d,
        certificate: cert,
    })
}
