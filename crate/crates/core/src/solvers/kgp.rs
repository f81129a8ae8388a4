//! Maximum edge k-general position set by include/exclude branch and bound.
//!
//! Constraints are the maximal geodesics with at least `k` edges: any geodesic
//! is a subpath of a maximal one, so capping every maximal geodesic at `k - 1`
//! marked edges caps all of them. The bound splits the edges into geodesic
//! blocks (greedy partition); a block can end with at most `k - 1` chosen
//! edges.

use std::cmp::Reverse;

use super::bits::Bits;
use super::catalog::{enumerate_geodesics, CatalogOptions, GeodesicCatalog};
use super::SolveResult;
use crate::certificate::Witness;
use crate::error::{Error, Result};
use crate::geodesic::check_k;
use crate::graph::{DistanceMatrix, EdgeSet, Graph};
use crate::Budget;

pub fn kgp_exact(g: &Graph, d: &DistanceMatrix, k: usize, budget: Budget) -> Result<SolveResult> {
    check_k(k)?;
    let catalog = enumerate_geodesics(
        g,
        d,
        CatalogOptions {
            maximal_only: true,
            budget,
        },
    )?;
    let m = g.size();
    let constraints: Vec<&Vec<usize>> = catalog
        .edge_ids
        .iter()
        .filter(|ids| ids.len() >= k)
        .collect();
    let mut touching = vec![Vec::new(); m];
    for (c, ids) in constraints.iter().enumerate() {
        for &e in ids.iter() {
            touching[e].push(c);
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| (Reverse(touching[e].len()), e));

    let blocks = greedy_blocks(g, &catalog);
    let mut block_of = vec![0; m];
    for (b, ids) in blocks.iter().enumerate() {
        for &e in ids {
            block_of[e] = b;
        }
    }

    let mut bb = BranchAndBound {
        k,
        order,
        touching,
        block_of,
        load: vec![0; constraints.len()],
        chosen_in: vec![0; blocks.len()],
        open_in: blocks.iter().map(Vec::len).collect(),
        chosen: Vec::new(),
        best: Vec::new(),
        nodes: 0,
        budget: budget.0,
    };
    let root_bound = bb.bound();
    if bb.dfs(0).is_err() {
        return Err(Error::BudgetExceeded {
            budget: budget.0,
            explored: bb.nodes,
            lower: Some(bb.best.len()),
            upper: Some(root_bound),
        });
    }
    let witness: EdgeSet = bb.best.iter().map(|&e| g.edge(e)).collect();
    Ok(SolveResult {
        optimum: witness.len(),
        witness: Witness::EdgeSet(witness),
        nodes_explored: bb.nodes,
        bound_used: format!(
            "sum over {} geodesic blocks of min(k-1, chosen + open); root bound {root_bound}",
            blocks.len()
        ),
    })
}

/// Edge-disjoint geodesic blocks covering every edge: repeatedly take the
/// longest run of still-free consecutive edges along some maximal geodesic.
/// A run of consecutive edges of a geodesic is itself a geodesic.
fn greedy_blocks(g: &Graph, catalog: &GeodesicCatalog) -> Vec<Vec<usize>> {
    let m = g.size();
    let sequences: Vec<Vec<usize>> = catalog
        .geodesics
        .iter()
        .map(|p| p.edges().map(|e| g.edge_id(e).unwrap()).collect())
        .collect();
    let mut free = Bits::full(m);
    let mut blocks = Vec::new();
    while !free.is_empty() {
        let mut best: Option<&[usize]> = None;
        for seq in &sequences {
            let mut start = 0;
            for end in 0..=seq.len() {
                if end == seq.len() || !free.get(seq[end]) {
                    if end > start && best.is_none_or(|b| end - start > b.len()) {
                        best = Some(&seq[start..end]);
                    }
                    start = end + 1;
                }
            }
        }
        let run = best
            .expect("a free edge lies on some maximal geodesic")
            .to_vec();
        for &e in &run {
            free.clear(e);
        }
        blocks.push(run);
    }
    blocks
}

struct BranchAndBound {
    k: usize,
    order: Vec<usize>,
    touching: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    load: Vec<usize>,
    chosen_in: Vec<usize>,
    open_in: Vec<usize>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl BranchAndBound {
    fn bound(&self) -> usize {
        self.chosen_in
            .iter()
            .zip(&self.open_in)
            .map(|(c, o)| (c + o).min(self.k - 1))
            .sum()
    }

    fn dfs(&mut self, pos: usize) -> std::result::Result<(), ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if self.bound() <= self.best.len() {
            return Ok(());
        }
        if pos == self.order.len() {
            // bound == chosen here, so this beats the incumbent
            self.best = self.chosen.clone();
            return Ok(());
        }
        let e = self.order[pos];
        let b = self.block_of[e];
        self.open_in[b] -= 1;
        if self.touching[e].iter().all(|&c| self.load[c] + 1 < self.k) {
            for &c in &self.touching[e] {
                self.load[c] += 1;
            }
            self.chosen_in[b] += 1;
            self.chosen.push(e);
            let r = self.dfs(pos + 1);
            self.chosen.pop();
            self.chosen_in[b] -= 1;
            for &c in &self.touching[e] {
                self.load[c] -= 1;
            }
            r?;
        }
        let r = self.dfs(pos + 1);
        self.open_in[b] += 1;
        r
    }
}
