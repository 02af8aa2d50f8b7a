//! Edge-set surgery on cycles.
//!
//! Each splice opens its input cycles at one edge and reconnects the
//! resulting paths. The length of the output is fixed by the operation
//! (`l1 + l2 - 2`, `l1 + l2`, `l + 2`) and is checked on every call, as is
//! the full cycle structure of the result.

use std::collections::HashSet;

use crate::checker::validate;
use crate::coupled::CoupledPair;
use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::topology::EdgeRef;

/// The vertices of `c` from `a` to `b` along the path that avoids the edge
/// `(a, b)`. `a` and `b` must be consecutive on `c`.
fn open_at(c: &CycleWitness, a: Permutation, b: Permutation) -> Result<Vec<Permutation>> {
    let l = c.len();
    let k = c
        .position(&a)
        .ok_or_else(|| Error::Precondition(format!("{a} is not on the cycle")))?;
    let verts = c.vertices();
    let path: Vec<Permutation> = if verts[(k + 1) % l] == b {
        (0..l).map(|s| verts[(k + l - s) % l]).collect()
    } else if verts[(k + l - 1) % l] == b {
        (0..l).map(|s| verts[(k + s) % l]).collect()
    } else {
        return Err(Error::Precondition(format!("{a}:{b} is not an edge of the cycle")));
    };
    debug_assert_eq!(path.last(), Some(&b));
    Ok(path)
}

fn finish(vertices: Vec<Permutation>, expected: usize, what: &str) -> Result<CycleWitness> {
    if vertices.len() != expected {
        return Err(Error::Validation(format!(
            "{what} produced length {}, expected {expected}",
            vertices.len()
        )));
    }
    let c = CycleWitness::from_vec_unchecked(vertices);
    validate(&c, None, Some(expected))
        .map_err(|v| Error::Validation(format!("{what}: {v}")))?;
    Ok(c)
}

/// Combines two cycles sharing exactly the edge `e` (and no other vertex)
/// into the cycle with edge set `E(c1) ∪ E(c2) - {e}`.
pub fn merge_shared_edge(c1: &CycleWitness, c2: &CycleWitness, e: &EdgeRef) -> Result<CycleWitness> {
    let (a, b) = e.endpoints();
    let first: HashSet<&Permutation> = c1.vertices().iter().collect();
    let shared = c2.vertices().iter().filter(|x| first.contains(x)).count();
    if shared != 2 || !c1.contains_edge(e) || !c2.contains_edge(e) {
        return Err(Error::Precondition(format!(
            "cycles must share exactly the edge {e} ({shared} shared vertices)"
        )));
    }
    let mut out = open_at(c1, a, b)?;
    let back = open_at(c2, b, a)?;
    out.extend_from_slice(&back[1..back.len() - 1]);
    finish(out, c1.len() + c2.len() - 2, "shared-edge merge")
}

/// Joins vertex-disjoint cycles through the bridges of `pair`: the result has
/// edge set `E(c1) ∪ E(c2) ∪ bridges - {pair.e, pair.e_prime}`.
pub fn merge_bridged(c1: &CycleWitness, pair: &CoupledPair, c2: &CycleWitness) -> Result<CycleWitness> {
    let first: HashSet<&Permutation> = c1.vertices().iter().collect();
    if c2.vertices().iter().any(|x| first.contains(x)) {
        return Err(Error::Precondition("bridged cycles must be vertex-disjoint".into()));
    }
    let [(x, xp), (y, yp)] = pair.bridges;
    let mut out = open_at(c1, x, y)?;
    out.extend(open_at(c2, yp, xp)?);
    finish(out, c1.len() + c2.len(), "bridged merge")
}

/// Replaces `pair.e = (x, y)` on `c` by the detour `x, x', y', y`.
pub fn extend_two(c: &CycleWitness, pair: &CoupledPair) -> Result<CycleWitness> {
    let [(x, xp), (y, yp)] = pair.bridges;
    if c.position(&xp).is_some() || c.position(&yp).is_some() {
        return Err(Error::Precondition(format!(
            "coupled edge {} touches the cycle",
            pair.e_prime
        )));
    }
    let mut out = open_at(c, x, y)?;
    out.push(yp);
    out.push(xp);
    finish(out, c.len() + 2, "extend by two")
}
