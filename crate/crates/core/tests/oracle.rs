mod common;

use common::*;
use geopos::conditions::{
    check_matching_diameter_equivalence, distance_spread_sufficient, path_spacing_sufficient,
};
use geopos::geodesic::{
    common_geodesic, geodesic_interval_dag, is_geodesic, GeodesicPath, SweepStrategy,
};
use geopos::graph::{all_pairs_distances, DistanceMatrix, Edge, EdgeSet, Graph};
use geopos::solvers::{
    check_duality_chain, enumerate_geodesics, gcover_exact, gpart_exact, kgp_exact, CatalogOptions,
};
use geopos::theta::{is_partial_cube, theta_classes, theta_union_kgp, ClassSelector};
use geopos::Budget;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lift(p: &Plain) -> (Graph, DistanceMatrix) {
    let g = p.to_graph();
    assert_eq!(
        g.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
        p.edges
    );
    let d = all_pairs_distances(&g).unwrap();
    (g, d)
}

fn edge_set(p: &Plain, mask: u64) -> EdgeSet {
    (0..p.edges.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| Edge::new(p.edges[i].0, p.edges[i].1))
        .collect()
}

fn graph_from_seed(seed: u64, max_n: usize, max_m: usize) -> (ChaCha8Rng, Plain) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_connected(&mut rng, max_n, max_m);
    (rng, p)
}

fn catalog(g: &Graph, d: &DistanceMatrix, maximal_only: bool) -> geopos::solvers::GeodesicCatalog {
    enumerate_geodesics(
        g,
        d,
        CatalogOptions {
            maximal_only,
            budget: Budget::default(),
        },
    )
    .unwrap()
}

#[test]
fn small_graph_corpus_has_the_known_counts() {
    let counts: Vec<usize> = (2..=6).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, [1, 2, 6, 21, 112]);
}

#[test]
fn oracle_geodesic_counts() {
    // C_8: 8 vertices x 4 targets at distance < 4 in each direction, plus
    // two geodesics to each antipode
    let c8 = cycle(8);
    assert_eq!(all_geodesics(&c8).len() / 2, 8 * 3 + 8);
    assert_eq!(brute_kgp(&c8, 3), 4);
    assert_eq!(brute_cover(&c8, true), 2);
    assert_eq!(brute_kgp(&path(5), 3), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_agree_with_floyd_warshall(seed in any::<u64>()) {
        let (_, p) = graph_from_seed(seed, 12, 24);
        let (g, d) = lift(&p);
        let fw = floyd_warshall(&p);
        for (u, row) in fw.iter().enumerate() {
            for (v, &x) in row.iter().enumerate() {
                prop_assert_eq!(d.get(u, v), x as usize);
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 0, u == v);
                for w in 0..g.order() {
                    prop_assert!(d.get(u, w) <= d.get(u, v) + d.get(v, w));
                }
            }
        }
    }

    #[test]
    fn interval_dag_paths_are_exactly_the_geodesics(seed in any::<u64>()) {
        let (_, p) = graph_from_seed(seed, 8, 14);
        let (g, d) = lift(&p);
        let brute = all_geodesics(&p);
        for u in 0..g.order() {
            for v in 0..g.order() {
                if u == v {
                    continue;
                }
                let dag = geodesic_interval_dag(&g, &d, u, v).unwrap();
                let mut stack = vec![vec![u]];
                let mut found = Vec::new();
                while let Some(path) = stack.pop() {
                    let last = *path.last().unwrap();
                    if last == v {
                        prop_assert!(is_geodesic(&g, &d, &path));
                        found.push(path);
                        continue;
                    }
                    for &(a, b, _) in &dag.arcs {
                        if a == last {
                            let mut next = path.clone();
                            next.push(b);
                            stack.push(next);
                        }
                    }
                }
                found.sort();
                let mut expect: Vec<Vec<usize>> =
                    brute.iter().filter(|q| q[0] == u && *q.last().unwrap() == v).cloned().collect();
                expect.sort();
                prop_assert_eq!(found, expect);
            }
        }
    }

    #[test]
    fn checker_sweeps_agree_with_enumeration(seed in any::<u64>()) {
        let (mut rng, p) = graph_from_seed(seed, 10, 18);
        let (g, d) = lift(&p);
        let m = p.edges.len();
        for _ in 0..6 {
            let mask: u64 = rng.gen::<u64>() & ((1u64 << m) - 1);
            let s = edge_set(&p, mask);
            let expect = brute_max_marked(&p, mask) as usize;
            for strategy in [
                SweepStrategy::Sources,
                SweepStrategy::Pairs { endpoint_restricted: false },
                SweepStrategy::Pairs { endpoint_restricted: true },
            ] {
                let c = common_geodesic(&g, &d, &s, strategy).unwrap();
                prop_assert_eq!(c.max_marked, expect, "{:?}", strategy);
                if let Some(w) = c.witness {
                    prop_assert!(is_geodesic(&g, &d, w.vertices()));
                    prop_assert_eq!(w.edges().filter(|e| s.contains(e)).count(), expect);
                }
            }
            // monotone under adding edges
            let extra = mask | 1 << rng.gen_range(0..m);
            prop_assert!(brute_max_marked(&p, extra) as usize >= expect);
            let bigger = common_geodesic(&g, &d, &edge_set(&p, extra), SweepStrategy::Sources).unwrap();
            prop_assert!(bigger.max_marked >= expect);
        }
    }

    #[test]
    fn kgp_exact_matches_subset_enumeration(seed in any::<u64>()) {
        let (_, p) = graph_from_seed(seed, 9, 16);
        let (g, d) = lift(&p);
        let mut last = 0;
        for k in 3..=5u32 {
            let r = kgp_exact(&g, &d, k as usize, Budget::default()).unwrap();
            prop_assert_eq!(r.optimum as u32, brute_kgp(&p, k), "k={}", k);
            let w = r.witness.as_edge_set().unwrap();
            prop_assert!(geopos::geodesic::is_edge_kgp(&g, &d, w, k as usize).unwrap());
            prop_assert!(r.optimum >= last);
            last = r.optimum;
        }
    }

    #[test]
    fn covers_match_brute_force_and_respect_the_chain(seed in any::<u64>()) {
        let (_, p) = graph_from_seed(seed, 8, 13);
        let (g, d) = lift(&p);
        let cover = gcover_exact(&g, &catalog(&g, &d, true), Budget::default()).unwrap();
        let part = gpart_exact(&g, &catalog(&g, &d, false), Budget::default()).unwrap();
        prop_assert_eq!(cover.optimum as u32, brute_cover(&p, false));
        prop_assert_eq!(part.optimum as u32, brute_cover(&p, true));
        let m = g.size();
        prop_assert!(cover.optimum >= m.div_ceil(d.diameter()));
        for k in 3..=4 {
            let kgp = kgp_exact(&g, &d, k, Budget::default()).unwrap().optimum;
            prop_assert!(check_duality_chain(k, kgp, cover.optimum, part.optimum).is_ok());
        }
    }

    #[test]
    fn spread_condition_has_no_false_positives(seed in any::<u64>()) {
        let (mut rng, p) = graph_from_seed(seed, 12, 20);
        let (g, d) = lift(&p);
        let m = p.edges.len();
        for _ in 0..10 {
            let mask: u64 = rng.gen::<u64>() & ((1u64 << m) - 1);
            if mask.count_ones() < 2 {
                continue;
            }
            for k in 3..=5 {
                if distance_spread_sufficient(&g, &d, &edge_set(&p, mask), k).unwrap() {
                    prop_assert!(brute_max_marked(&p, mask) < k as u32);
                }
            }
        }
    }

    #[test]
    fn path_spacing_condition_is_sound(seed in any::<u64>()) {
        let (mut rng, p) = graph_from_seed(seed, 10, 16);
        let (g, d) = lift(&p);
        let geos = all_geodesics(&p);
        let masks = geodesic_masks(&p);
        for j in 1..=2 {
            let pool: Vec<&Vec<usize>> = geos.iter().filter(|q| q.len() == j + 1 && q[0] < q[j]).collect();
            if pool.is_empty() {
                continue;
            }
            let mut used = 0u64;
            let mut chosen: Vec<u64> = Vec::new();
            let mut paths = Vec::new();
            for _ in 0..8 {
                let q = pool[rng.gen_range(0..pool.len())];
                let mk = path_mask(&p, q);
                if mk & used == 0 {
                    used |= mk;
                    chosen.push(mk);
                    paths.push(GeodesicPath::new(&g, &d, q.clone()).unwrap());
                }
            }
            for k in 2..=4usize {
                if path_spacing_sufficient(&g, &d, &paths, j, k).unwrap() {
                    for x in &masks {
                        let inside = chosen.iter().filter(|&&c| c & x == c).count();
                        prop_assert!(inside < k, "j={} k={}", j, k);
                    }
                }
            }
        }
    }

    #[test]
    fn matching_equivalence_agrees_with_brute_force(seed in any::<u64>()) {
        let (_, p) = graph_from_seed(seed, 10, 14);
        let (g, d) = lift(&p);
        for k in 3..=4 {
            let r = check_matching_diameter_equivalence(&g, &d, k, Budget::default()).unwrap();
            prop_assert_eq!(r.diameter as u32, diameter(&p));
            prop_assert_eq!(r.matchings_in_position, brute_matchings_in_position(&p, k as u32));
            prop_assert!(r.equivalence_holds);
        }
    }

    #[test]
    fn theta_unions_of_trees_and_even_cycles_are_in_position(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = if rng.gen_bool(0.5) {
            random_connected(&mut rng, 12, 0)
        } else {
            cycle(2 * rng.gen_range(2..=7))
        };
        let (g, d) = lift(&p);
        prop_assert!(is_partial_cube(&g, &d));
        let classes = theta_classes(&g, &d).classes.len();
        for k in 3..=(classes + 1).min(5) {
            let mut idx: Vec<usize> = (0..classes).collect();
            for i in (1..idx.len()).rev() {
                idx.swap(i, rng.gen_range(0..=i));
            }
            idx.truncate(k - 1);
            let s = theta_union_kgp(&g, &d, k, &ClassSelector::Indices(idx)).unwrap();
            let mask = (0..p.edges.len())
                .filter(|&i| s.contains(&Edge::new(p.edges[i].0, p.edges[i].1)))
                .fold(0u64, |a, i| a | 1 << i);
            prop_assert!(brute_max_marked(&p, mask) < k as u32);
        }
    }
}
