use crate::error::{Error, Result};
use crate::geodesic::GeodesicPath;
use crate::graph::{DistanceMatrix, Graph};
use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CatalogOptions {
    /// Keep only geodesics whose edge set is not strictly contained in the
    /// edge set of another geodesic.
    pub maximal_only: bool,
    pub budget: Budget,
}

/// Every geodesic of a graph (or every maximal one), one entry per undirected
/// path, with edge incidence lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCatalog {
    pub geodesics: Vec<GeodesicPath>,
    /// Sorted edge ids of each geodesic.
    pub edge_ids: Vec<Vec<usize>>,
    /// Geodesic indices through each edge id.
    pub incidence: Vec<Vec<usize>>,
}

impl GeodesicCatalog {
    pub fn len(&self) -> usize {
        self.geodesics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.geodesics.is_empty()
    }
}

/// A `u,v`-geodesic extends past `v` iff some neighbor of `v` is farther from
/// `u`, and symmetrically at `u`. A geodesic whose edge set sits strictly inside
/// another's is a proper subpath of it, hence extends by one edge at an end.
fn is_maximal_pair(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let len = d.get(u, v);
    g.neighbors(v).iter().all(|&(w, _)| d.get(u, w) <= len)
        && g.neighbors(u).iter().all(|&(w, _)| d.get(w, v) <= len)
}

/// Enumerates geodesics by walking the interval DAG of every vertex pair
/// `u < v`. Each undirected geodesic is produced once: its edge set fixes its
/// end vertices, and each pair is walked in one direction only.
pub fn enumerate_geodesics(
    g: &Graph,
    d: &DistanceMatrix,
    options: CatalogOptions,
) -> Result<GeodesicCatalog> {
    if options.budget.0 == 0 {
        return Err(Error::InvalidParameter("budget must be positive".into()));
    }
    let mut walker = Walker {
        g,
        d,
        budget: options.budget.0,
        out: Vec::new(),
        stack: Vec::new(),
    };
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if options.maximal_only && !is_maximal_pair(g, d, u, v) {
                continue;
            }
            walker.stack.clear();
            walker.stack.push(u);
            walker.walk(u, v)?;
        }
    }
    let geodesics = walker.out;
    let mut incidence = vec![Vec::new(); g.size()];
    let mut edge_ids = Vec::with_capacity(geodesics.len());
    for (i, p) in geodesics.iter().enumerate() {
        let mut ids: Vec<usize> = p.edges().map(|e| g.edge_id(e).unwrap()).collect();
        ids.sort_unstable();
        for &id in &ids {
            incidence[id].push(i);
        }
        edge_ids.push(ids);
    }
    Ok(GeodesicCatalog {
        geodesics,
        edge_ids,
        incidence,
    })
}

struct Walker<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    budget: u64,
    out: Vec<GeodesicPath>,
    stack: Vec<usize>,
}

impl Walker<'_> {
    fn walk(&mut self, x: usize, v: usize) -> Result<()> {
        if x == v {
            if self.out.len() as u64 >= self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                    explored: self.out.len() as u64,
                    lower: None,
                    upper: None,
                });
            }
            self.out
                .push(GeodesicPath::from_trusted(self.stack.clone()));
            return Ok(());
        }
        let remaining = self.d.get(x, v);
        for &(y, _) in self.g.neighbors(x) {
            if self.d.get(y, v) + 1 == remaining {
                self.stack.push(y);
                self.walk(y, v)?;
                self.stack.pop();
            }
        }
        Ok(())
    }
}
