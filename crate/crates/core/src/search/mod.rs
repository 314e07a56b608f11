//! Numerical geodesic finding and searches for totally geodesic subalgebras.
//!
//! Floating point only ever proposes candidates; everything that is reported
//! as found has been re-checked in exact arithmetic.

mod audit;
mod numeric;
mod tg;

pub use audit::{audit_dimension_bounds, verify_found_subalgebra_properties, Codim2Checks, DimensionAudit, FoundSubalgebra, SubalgebraProperties};
pub use numeric::{find_geodesic_numeric, NumericGeodesic, OrthonormalFrame};
pub use tg::search_tg_subalgebras;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub seed: u64,
    /// Number of random candidates tried by the TG search.
    pub max_candidates: usize,
    /// Residual tolerance for the numeric geodesic solver.
    pub tol: f64,
    /// Iterations per start of the numeric solver.
    pub max_iterations: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { seed: 0x5eed, max_candidates: 10_000, tol: 1e-10, max_iterations: 400 }
    }
}

impl SearchBudget {
    pub fn new(seed: u64, max_candidates: usize, tol: f64, max_iterations: usize) -> Result<Self> {
        if max_candidates == 0 || max_iterations == 0 || !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidArgument("budget entries must be positive".into()));
        }
        Ok(SearchBudget { seed, max_candidates, tol, max_iterations })
    }

    pub fn with_seed(self, seed: u64) -> Self {
        SearchBudget { seed, ..self }
    }

    pub fn with_candidates(self, max_candidates: usize) -> Self {
        SearchBudget { max_candidates, ..self }
    }
}
