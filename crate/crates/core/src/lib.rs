//! Exact computations with metric Lie algebras over the rationals.
//!
//! Geodesic vectors, totally geodesic subalgebras, Vergne bases of filiform
//! algebras, and searches over both. Structure constants, metrics and all
//! reported results are exact rationals; floating point only appears inside
//! the numeric geodesic solver, whose output is re-checked exactly.

pub mod algebra;
pub mod error;
pub mod filiform;
pub mod linalg;
pub mod metric;
pub mod random;
pub mod search;

pub use algebra::{Jacobi, LieAlgebra, LieAlgebraBuilder, Quotient, Subalgebra};
pub use error::{Error, Result};
pub use linalg::{format_scalar, frac, int, parse_scalar, Matrix, Scalar, Subspace, Vector};
pub use metric::{construct_geodesic_metric, killing_metric, GeodesicReport, Metric, MetricLieAlgebra, TgReport, TgWitness};
pub use search::SearchBudget;
