//! Complementary edge ideals of simple graphs.
//!
//! For a graph `G` on `{1, ..., n}` the complementary edge ideal `I_c(G)` is
//! generated, for each edge `{i, j}`, by the product of all variables except
//! `x_i` and `x_j`. The crate provides
//!
//! * [`graph`]: the graph model and the predicates the characterizations use,
//! * [`ideal`]: squarefree monomial ideals (covers, height, Alexander duality,
//!   colon ideals, linear quotients),
//! * [`homology`]: an exact Betti-number oracle via Hochster's formula,
//! * [`invariants`]: closed-form predictions, the licci verdict, and
//!   formula-vs-oracle cross validation,
//! * [`experiments`]: Monte Carlo estimates on Erdős–Rényi graphs.

pub mod error;
pub mod experiments;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod invariants;

pub use error::{ExperimentError, GraphError, IdealError, InvariantError, OracleError};
pub use graph::{enumerate_graphs, parse_graph, Density, SimpleGraph};
pub use homology::{hochster_betti, BettiTable, FieldTag, RegPd, SimplicialComplex};
pub use ideal::{Colon, LinearQuotients, SquarefreeIdeal, SquarefreeMonomial};
