//! Minimum edge geodesic cover (set cover) and partition (exact cover) by
//! iterative deepening on the number of geodesics.

use super::bits::Bits;
use super::catalog::GeodesicCatalog;
use super::SolveResult;
use crate::certificate::Witness;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Budget;

pub fn gcover_exact(g: &Graph, catalog: &GeodesicCatalog, budget: Budget) -> Result<SolveResult> {
    if let Some(id) = catalog.incidence.iter().position(Vec::is_empty) {
        return Err(Error::Precondition(format!(
            "catalog misses edge {}",
            g.edge(id)
        )));
    }
    solve(g, catalog, budget, false)
}

pub fn gpart_exact(g: &Graph, catalog: &GeodesicCatalog, budget: Budget) -> Result<SolveResult> {
    for id in 0..g.size() {
        if !catalog.incidence[id]
            .iter()
            .any(|&i| catalog.edge_ids[i].len() == 1)
        {
            return Err(Error::Precondition(
                "partition search needs the full geodesic catalog (including single edges)".into(),
            ));
        }
    }
    solve(g, catalog, budget, true)
}

struct Search<'a> {
    sets: Vec<Bits>,
    catalog: &'a GeodesicCatalog,
    exact: bool,
    nodes: u64,
    budget: u64,
    chosen: Vec<usize>,
}

fn solve(g: &Graph, catalog: &GeodesicCatalog, budget: Budget, exact: bool) -> Result<SolveResult> {
    let m = g.size();
    let sets: Vec<Bits> = catalog
        .edge_ids
        .iter()
        .map(|ids| Bits::from_ids(m, ids))
        .collect();
    let longest = catalog.edge_ids.iter().map(Vec::len).max().unwrap_or(1);
    let lower = m.div_ceil(longest);
    let mut search = Search {
        sets,
        catalog,
        exact,
        nodes: 0,
        budget: budget.0,
        chosen: Vec::new(),
    };
    let greedy = search.greedy(m);
    let upper = greedy.len();
    let mut best = greedy;
    for target in lower..upper {
        search.chosen.clear();
        match search.dfs(&Bits::full(m), target) {
            Ok(true) => {
                best = search.chosen.clone();
                break;
            }
            Ok(false) => {}
            Err(()) => {
                return Err(Error::BudgetExceeded {
                    budget: budget.0,
                    explored: search.nodes,
                    lower: Some(target),
                    upper: Some(upper),
                })
            }
        }
    }
    best.sort_unstable();
    let witness: Vec<_> = best.iter().map(|&i| catalog.geodesics[i].clone()).collect();
    Ok(SolveResult {
        optimum: witness.len(),
        witness: Witness::GeodesicList(witness),
        nodes_explored: search.nodes,
        bound_used: format!(
            "ceil(uncovered / best remaining gain); root bound ceil({m}/{longest}) = {lower}; greedy upper {upper}"
        ),
    })
}

impl Search<'_> {
    fn usable(&self, set: &Bits, uncovered: &Bits) -> bool {
        if self.exact {
            set.is_subset(uncovered)
        } else {
            set.and_count(uncovered) > 0
        }
    }

    fn greedy(&self, m: usize) -> Vec<usize> {
        let mut uncovered = Bits::full(m);
        let mut out = Vec::new();
        while !uncovered.is_empty() {
            let pick = (0..self.sets.len())
                .filter(|&i| self.usable(&self.sets[i], &uncovered))
                .max_by_key(|&i| (self.sets[i].and_count(&uncovered), std::cmp::Reverse(i)))
                .expect("single-edge geodesics keep the greedy alive");
            uncovered.remove_all(&self.sets[pick]);
            out.push(pick);
        }
        out
    }

    /// `Err(())` on budget exhaustion.
    fn dfs(&mut self, uncovered: &Bits, target: usize) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if uncovered.is_empty() {
            return Ok(true);
        }
        if self.chosen.len() >= target {
            return Ok(false);
        }
        let remaining = uncovered.count();
        let mut gain = 0;
        for s in &self.sets {
            if self.usable(s, uncovered) {
                gain = gain.max(s.and_count(uncovered));
            }
        }
        if gain == 0 || self.chosen.len() + remaining.div_ceil(gain) > target {
            return Ok(false);
        }
        // branch on the uncovered edge with the fewest usable geodesics
        let mut pivot = None;
        for e in uncovered.ones() {
            let options = self.catalog.incidence[e]
                .iter()
                .filter(|&&i| self.usable(&self.sets[i], uncovered))
                .count();
            if pivot.is_none_or(|(_, best)| options < best) {
                pivot = Some((e, options));
            }
        }
        let (edge, options) = pivot.unwrap();
        if options == 0 {
            return Ok(false);
        }
        let mut cands: Vec<(usize, usize)> = self.catalog.incidence[edge]
            .iter()
            .filter(|&&i| self.usable(&self.sets[i], uncovered))
            .map(|&i| (self.sets[i].and_count(uncovered), i))
            .collect();
        cands.sort_by_key(|&(gain, i)| (std::cmp::Reverse(gain), i));
        for (_, i) in cands {
            let mut next = uncovered.clone();
            next.remove_all(&self.sets[i]);
            self.chosen.push(i);
            if self.dfs(&next, target)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}
