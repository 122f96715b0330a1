//! Hamilton path search and the expansion toolkit around it.
//!
//! [`rotation_extension_path`] is the workhorse; everything else either
//! prepares an instance for it ([`lll_split`], [`hamilton_path_protected`])
//! or checks the expansion hypotheses it relies on ([`expander_check`]).

mod expander;
mod protected;
mod rotation;
mod split;

pub use expander::{expander_check, CheckMode, CheckOutcome, ExpanderParams, ExpanderReport};
pub use protected::{
    hamilton_path_protected, hamilton_path_protected_with, PathStage, ProtectedConfig, StageFailure,
};
pub use rotation::{rotation_extension_path, rotation_extension_within, RotationOutcome};
pub use split::{lll_split, SplitFailure, SplitRequest, DEFAULT_SPLIT_RETRIES};

use crate::gf2::EdgeVector;
use crate::graph::{bfs_path_by, Graph, VertexSet};

/// Shortest `x -> y` path using only edges of `r`, through vertices
/// outside `avoid` (`x` and `y` themselves are always admitted).
pub fn short_path_in_r(g: &Graph, r: &EdgeVector, x: usize, y: usize, avoid: &VertexSet) -> Option<Vec<usize>> {
    if r.host_m() != g.m() {
        return None;
    }
    bfs_path_by(g.n(), x, y, |u, visit| {
        for &(w, e) in g.incident(u) {
            if r.get(e) && (w == y || !avoid.contains(w)) {
                visit(w);
            }
        }
    })
}

/// `5 ln n / ln ln n`, the length scale of short paths inside `R`.
pub fn short_path_cap(n: usize) -> f64 {
    let ln = (n as f64).ln();
    5.0 * ln / ln.ln()
}
