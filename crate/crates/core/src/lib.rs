//! Graph analysis built around a structural parameter of unweighted
//! connected graphs: how far their metric is from a tree metric, measured
//! by the four-point condition. Small values buy cheap approximations with
//! certified additive error:
//!
//! - exact BFS oracles for eccentricities, centers, and distance matrices
//!   with explicit work budgets ([`oracle`]);
//! - the four-point constant, witnesses, and the thinness bound derived
//!   from it ([`hyperbolicity`]);
//! - eccentricity estimates from a handful of BFS runs and one spanning
//!   tree ([`ecc`]);
//! - all-pairs distance estimates from a single BFS tree with one-sided
//!   error, plus the search for the smallest admissible slack ([`dist`]);
//! - invariant checking of everything above on arbitrary inputs and a
//!   built-in suite of generated graph families ([`verify`]).

pub mod dist;
pub mod ecc;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hyperbolicity;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BfsLayering, Graph, NO_PARENT};
pub use oracle::{Budget, DistanceMatrix, EccentricityProfile};
