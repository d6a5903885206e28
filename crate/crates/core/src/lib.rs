//! Many-objective evolutionary optimization built around a boundary-preserving,
//! shift-based environmental selection (the E3A selector).
//!
//! The crate provides:
//!
//! * [`dominance`] — Pareto comparison and fast nondominated sorting,
//! * [`normalization`] — adaptive objective normalization (ideal point +
//!   hyperplane intercepts through the per-axis extreme solutions),
//! * [`selection`] — the E3A environmental-selection pipeline (boundary
//!   solutions via an axis-aligned modified Tchebycheff scalarizer, then
//!   greedy max–min selection on shifted distances) plus a crowding-distance
//!   baseline truncator,
//! * [`variation`] — binary tournament mating, simulated binary crossover and
//!   polynomial mutation,
//! * [`problems`] — DTLZ1/DTLZ2 and a MaF subset (MaF1, MaF2, MaF6, MaF7)
//!   with analytic Pareto-front samplers,
//! * [`metrics`] — IGD, Monte Carlo hypervolume with an exact 2-D oracle, and
//!   simplex-lattice reference directions,
//! * [`algorithm`] — the generational loop wiring everything together,
//! * [`harness`] — a seeded, resumable experiment campaign runner with CSV
//!   export and summary statistics.
//!
//! All numeric kernels are generic over the scalar type through [`scalar::Real`]
//! (any `num_traits::Float`, in practice `f32` or `f64`). The experiment
//! harness and the CLI always run in `f64`; the aliases below are the
//! double-precision instantiations used throughout the tests.

pub mod algorithm;
pub mod dominance;
pub mod error;
pub mod harness;
pub mod metrics;
pub mod normalization;
pub mod problems;
pub mod rng;
pub mod scalar;
pub mod selection;
pub mod solution;
pub mod variation;

pub use error::{Error, Result};
pub use rng::RngStream;
pub use scalar::Real;

/// Double-precision solution, the default used by the harness and CLI.
pub type Solution64 = solution::Solution<f64>;
/// Double-precision population.
pub type Population64 = solution::Population<f64>;
/// Double-precision reference set.
pub type ReferenceSet64 = metrics::ReferenceSet<f64>;
/// Double-precision normalization context.
pub type NormalizationContext64 = normalization::NormalizationContext<f64>;
