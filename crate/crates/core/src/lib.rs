//! Power-law multigraphs and MAX-CUT.
//!
//! This crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`plg`]: closed-form and exact-sum analytics of `(α, β)` power-law
//!   degree sequences (ζ, degree counts, interval sizes and volumes with their
//!   integral envelopes, split-scheme parameters, ratio bounds).
//! * [`graph`]: the multigraph instance type, cuts, degree intervals and
//!   core-strength.
//! * [`generator`]: the seeded random-matching generator.
//! * [`algos`]: the MAX-CUT ladder (exact oracle, greedy, local search,
//!   dense sampling PTAS, high-degree split PTAS, low-rank SDP with hyperplane
//!   rounding, and the degree-1 preprocessing variant).
//! * [`reduction`]: embedding of 3-regular graphs into power-law hosts with
//!   certified gadget optima and decision thresholds.
//!
//! File formats, JSON/CSV output and the `plmc` command line live in the
//! companion `plmc` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algos;
pub mod error;
pub mod generator;
pub mod graph;
pub mod plg;
pub mod reduction;
pub mod rng;

mod numeric;

pub use error::{Error, Result};
pub use graph::{Cut, DegreeInterval, Edge, Multigraph};
pub use plg::PowerLawParams;
