//! Inputs shared by the benchmarks in `benches/`.

use bsgraph_core::topology::all_edges;
use bsgraph_core::EdgeRef;

/// The first edge of each class at the identity of `BS_n`, in edge order.
pub fn identity_edges(n: usize) -> Vec<EdgeRef> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for e in all_edges(n).expect("small n").into_iter().filter(|e| e.u().is_identity()) {
        let kind = std::mem::discriminant(&e.class());
        if !seen.contains(&kind) {
            seen.push(kind);
            out.push(e);
        }
    }
    out
}
