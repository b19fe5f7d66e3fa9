//! Exact-arithmetic feasibility engine for strongly regular graph parameters.
//!
//! The pipeline runs the classical necessary conditions, derives the
//! Euclidean representation constants, bounds the number of 4-cliques with a
//! Gegenbauer positive-definiteness argument, and then tries to rule out every
//! admissible edge count of the densest common-neighbourhood subgraph with
//! Gram-determinant tests. Every verdict-affecting quantity is an exact
//! rational; floating point only appears in [`oracle::realize_representation`],
//! which exists for validation.

pub mod cliquebound;
pub mod error;
pub mod exact;
pub mod gramtest;
pub mod oracle;
pub mod params;
pub mod representation;

pub use cliquebound::{k4_lower_bound, pair_profile, K4Bound, PairProfile};
pub use error::SrgError;
pub use gramtest::{decide, Certificate, DecideOptions, MRange, Verdict, WSplitWitness};
pub use params::{classical_feasibility, derive_spectrum, FeasibilityReport, Spectrum, SrgParams};
pub use representation::{repr_constants, BivariateQuadratic, ReprConstants};
