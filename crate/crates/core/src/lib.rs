//! Hamilton cycles and the GF(2) cycle space.
//!
//! The crate decides whether the Hamilton cycles of a graph span its cycle
//! space, extracts dual witnesses `R` when they do not, builds parity
//! switchers, and runs seeded `G(n, p)` experiments near the threshold
//! `p = (ln n + 2 ln ln n + f) / n`.
//!
//! Modules, bottom-up:
//! - [`graph`]: immutable graphs, vertex sets, graph6 / edge-list I/O.
//! - [`gf2`]: edge vectors, incremental echelon bases, cycle and cut spaces.
//! - [`spanning`]: Hamilton cycle enumeration, the spanning decision, witnesses.
//! - [`hamfinder`]: rotation-extension, degree-preserving splits, protected paths, expansion checks.
//! - [`switcher`]: parity switchers and their two Hamilton paths.
//! - [`experiments`]: random model, property reports, the refutation pipeline, campaigns.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod error;
pub mod experiments;
pub mod gf2;
pub mod graph;
pub mod hamfinder;
pub mod rng;
pub mod spanning;
pub mod switcher;

pub use error::{Error, Result};
pub use gf2::{EdgeVector, Gf2Basis};
pub use graph::{Graph, VertexSet};
