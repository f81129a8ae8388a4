//! Edge general position sets, edge geodesic covers and edge geodesic
//! partitions on graphs: exact checkers, constructions with machine-verified
//! certificates, and desk-scale exact solvers.

pub mod certificate;
pub mod conditions;
pub mod constructions;
pub mod covers;
pub mod error;
pub mod families;
pub mod geodesic;
pub mod graph;
pub mod report;
pub mod solvers;
pub mod theta;

pub use error::{Error, Result};

/// Cap on enumerated candidates or search nodes before an operation gives up
/// with [`Error::BudgetExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    /// `GEOPOS_BUDGET` if set and valid, else [`Budget::DEFAULT`].
    pub fn from_env() -> Budget {
        std::env::var("GEOPOS_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget)
            .unwrap_or(Budget::DEFAULT)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
