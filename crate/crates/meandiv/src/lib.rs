//! Mean-based divergence measures for finite discrete probability
//! distributions, a generic f-divergence engine with derivative audits and
//! first-order upper bounds, and numerical certification of the inequality
//! chains relating the measures.
//!
//! The catalog covers the six divergences built from gaps between the
//! harmonic, geometric, arithmetic and square-root means, the classical
//! symmetric measures (Hellinger, triangular discrimination, Jensen-Shannon
//! `I`, J-divergence, the arithmetic-geometric `T`), the closed-form bound
//! gaps `xi`, and a layer of refinement divergences built from differences
//! of the generators.
//!
//! ```
//! use meandiv::distributions::binary_symmetric_pair;
//! use meandiv::divergences::{divergence, MeasureId};
//!
//! let (p, q) = binary_symmetric_pair(0.1).unwrap();
//! let h = divergence(MeasureId::Hellinger, &p, &q).unwrap();
//! assert!((h - 0.4).abs() < 1e-12);
//! ```
//!
//! Chain auditing evaluates ordered lists of positive linear combinations
//! of measures and reports per-link slack:
//!
//! ```
//! use meandiv::distributions::binary_symmetric_pair;
//! use meandiv::inequalities::builtin_chains;
//!
//! let (p, q) = binary_symmetric_pair(0.3).unwrap();
//! for chain in builtin_chains() {
//!     let report = chain.evaluate(&p, &q, 1e-12).unwrap();
//!     assert_eq!(report.holds, chain.name() != "eq56-printed");
//! }
//! ```
//!
//! Randomized sweeps (chain verification over seeded pairs) run in parallel
//! when the `parallel` feature is enabled (the default) and sequentially
//! otherwise, with bit-identical reports either way.

pub mod csiszar;
pub mod distributions;
pub mod divergences;
pub mod error;
pub mod inequalities;
pub mod means;
pub mod refinement;
pub mod sweep;
pub mod tables;

pub use error::{Error, Result};
