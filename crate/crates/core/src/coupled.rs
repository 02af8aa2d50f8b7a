//! Coupled pair-edges: the links used to splice cycles across subgraphs.
//!
//! For an edge `(x, y)` inside `BS_n(i)`, a coupled pair-edge is an edge
//! `(x', y')` inside some other `BS_n(j)` with `x' ∈ {x+, x-}` and
//! `y' ∈ {y+, y-}`. The two bridges `(x, x')` and `(y, y')` then let a cycle
//! through `(x, y)` detour through `BS_n(j)`.

use std::collections::HashSet;

use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::topology::{classify_edge, is_adjacent, EdgeRef, SubgraphId};

/// `x+ = x∘(1,n)`.
#[inline]
pub fn plus(x: &Permutation) -> Permutation {
    x.swapped(1, x.n())
}

/// `x- = x∘(n-1,n)`.
#[inline]
pub fn minus(x: &Permutation) -> Permutation {
    let n = x.n();
    x.swapped(n - 1, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Companion {
    Minus,
    Plus,
}

impl Companion {
    pub fn of(self, x: &Permutation) -> Permutation {
        match self {
            Companion::Minus => minus(x),
            Companion::Plus => plus(x),
        }
    }
}

/// An internal edge, its coupled pair-edge in another subgraph, and the two
/// bridges joining them. `bridges[k] = (endpoint of e, endpoint of e_prime)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoupledPair {
    pub e: EdgeRef,
    pub e_prime: EdgeRef,
    pub bridges: [(Permutation, Permutation); 2],
}

impl CoupledPair {
    /// Builds the pair for `(x, y)` and `(x', y')`, checking every invariant.
    pub fn new(x: Permutation, y: Permutation, xp: Permutation, yp: Permutation) -> Result<Self> {
        let e = classify_edge(x, y)?;
        let i = e.subgraph().ok_or(Error::CrossEdge(x, y))?;
        let e_prime = classify_edge(xp, yp)?;
        let j = e_prime.subgraph().ok_or(Error::CrossEdge(xp, yp))?;
        if i == j {
            return Err(Error::Precondition(format!(
                "{e_prime} lies in the same subgraph {i} as {e}"
            )));
        }
        for (a, b) in [(x, xp), (y, yp)] {
            let bridge = classify_edge(a, b)?;
            if bridge.class().is_internal() {
                return Err(Error::Precondition(format!("bridge {bridge} is internal")));
            }
        }
        Ok(CoupledPair {
            e,
            e_prime,
            bridges: [(x, xp), (y, yp)],
        })
    }

    pub fn target(&self) -> SubgraphId {
        self.e_prime.subgraph().expect("internal by construction")
    }
}

fn internal_subgraph(e: &EdgeRef) -> Result<SubgraphId> {
    e.subgraph().ok_or(Error::CrossEdge(e.u(), e.v()))
}

const CANDIDATE_ORDER: [(Companion, Companion); 4] = [
    (Companion::Minus, Companion::Minus),
    (Companion::Minus, Companion::Plus),
    (Companion::Plus, Companion::Minus),
    (Companion::Plus, Companion::Plus),
];

/// Every coupled pair-edge of an internal edge, in the order
/// `(-,-), (-,+), (+,-), (+,+)` for `(e.u, e.v)`.
pub fn coupled_pair_edges(e: &EdgeRef) -> Result<Vec<CoupledPair>> {
    let i = internal_subgraph(e)?;
    let (x, y) = e.endpoints();
    let mut out = Vec::with_capacity(2);
    for (cx, cy) in CANDIDATE_ORDER {
        let (xp, yp) = (cx.of(&x), cy.of(&y));
        if xp.last() == yp.last() && xp.last() != i.0 && is_adjacent(&xp, &yp) {
            out.push(CoupledPair::new(x, y, xp, yp)?);
        }
    }
    Ok(out)
}

/// The coupled pair-edge of `e` landing in `target`, if any.
pub fn coupled_pair_into(e: &EdgeRef, target: SubgraphId) -> Result<Option<CoupledPair>> {
    Ok(coupled_pair_edges(e)?
        .into_iter()
        .find(|p| p.target() == target))
}

/// Outcome of the constructive selection: the cycle edge `(u, v)` and its
/// coupled pair-edge inside `BS_n(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub v: Permutation,
    pub edge: EdgeRef,
    pub pair: CoupledPair,
}

fn check_hamiltonian_in(h: &CycleWitness, k: SubgraphId) -> Result<()> {
    let n = h.n();
    let expected = crate::perm::factorial(n - 1).ok_or(Error::Overflow("(n-1)!", n))?;
    if h.len() as u64 != expected || !h.in_subgraph(k) {
        return Err(Error::Precondition(format!(
            "cycle of length {} is not Hamiltonian in BS_{n}({k})",
            h.len()
        )));
    }
    crate::checker::validate(h, None, None)
        .map_err(|v| Error::Precondition(format!("not a cycle: {v}")))
}

/// For a vertex `u` of a Hamiltonian cycle `h` of `BS_n(k)` whose
/// `(n-1)`-th symbol is `m`, picks an `h`-neighbor `v` such that `(u, v)`
/// has a coupled pair-edge inside `BS_n(m)`.
///
/// If some `h`-neighbor `v` also has `m` at position `n-1`, the pair-edge is
/// `(u-, v-)`; the smaller-rank neighbor wins a tie. Otherwise both
/// `h`-neighbors moved position `n-1`, so they are `u∘(1,n-1)` and
/// `u∘(n-2,n-1)`; taking `v = u∘(1,n-1)` gives the pair-edge `(u-, v+)`.
pub fn select_coupled_edge(h: &CycleWitness, u: &Permutation, m: SubgraphId) -> Result<Selection> {
    let n = h.n();
    if n < 4 {
        return Err(Error::Precondition("needs n >= 4".into()));
    }
    let k = SubgraphId(u.last());
    check_hamiltonian_in(h, k)?;
    select_unchecked(h, u, m)
}

fn select_unchecked(h: &CycleWitness, u: &Permutation, m: SubgraphId) -> Result<Selection> {
    let n = h.n();
    let k = SubgraphId(u.last());
    if m == k {
        return Err(Error::Precondition(format!("target subgraph {m} equals {k}")));
    }
    if u.at(n - 1) != m.0 {
        return Err(Error::Precondition(format!(
            "{u} has {} at position {}, not {m}",
            u.at(n - 1),
            n - 1
        )));
    }
    let idx = h
        .position(u)
        .ok_or_else(|| Error::Precondition(format!("{u} is not on the cycle")))?;
    let (prev, next) = h.around(idx);
    let mut candidates: Vec<Permutation> = [prev, next]
        .into_iter()
        .filter(|v| v.at(n - 1) == m.0)
        .collect();
    candidates.sort();

    let (v, vp) = match candidates.first() {
        Some(&v) => (v, minus(&v)),
        None => {
            let v = u.swapped(1, n - 1);
            if v != prev && v != next {
                return Err(Error::BridgeExhausted(m.0));
            }
            (v, plus(&v))
        }
    };
    let pair = CoupledPair::new(*u, v, minus(u), vp).map_err(|_| Error::BridgeExhausted(m.0))?;
    if pair.target() != m {
        return Err(Error::BridgeExhausted(m.0));
    }
    Ok(Selection {
        v,
        edge: pair.e,
        pair,
    })
}

/// Vertices of `h` in scan order: start at the lowest-rank vertex and walk
/// toward its smaller-rank cycle neighbor.
fn scan_order(h: &CycleWitness) -> Vec<Permutation> {
    crate::checker::canonical_vertices(h.vertices())
}

/// Scans the Hamiltonian cycle `h` of `BS_n(k)` for a vertex whose
/// `(n-1)`-th symbol is `j` and returns the first selection whose cycle edge
/// is not in `forbidden`.
pub fn find_bridge(
    h: &CycleWitness,
    j: SubgraphId,
    forbidden: &HashSet<EdgeRef>,
) -> Result<(EdgeRef, CoupledPair)> {
    let n = h.n();
    if n < 4 {
        return Err(Error::Precondition("needs n >= 4".into()));
    }
    let k = SubgraphId(h.vertices()[0].last());
    check_hamiltonian_in(h, k)?;
    find_bridge_unchecked(h, j, forbidden)
}

/// [`find_bridge`] without re-validating `h`, for callers that built `h`
/// themselves and already validated it.
pub(crate) fn find_bridge_unchecked(
    h: &CycleWitness,
    j: SubgraphId,
    forbidden: &HashSet<EdgeRef>,
) -> Result<(EdgeRef, CoupledPair)> {
    let n = h.n();
    let k = h.vertices()[0].last();
    if j.0 == k {
        return Err(Error::Precondition(format!("bridge target {j} equals source")));
    }
    for u in scan_order(h) {
        if u.at(n - 1) != j.0 {
            continue;
        }
        let sel = select_unchecked(h, &u, j)?;
        if !forbidden.contains(&sel.edge) {
            return Ok((sel.edge, sel.pair));
        }
    }
    Err(Error::BridgeExhausted(j.0))
}
