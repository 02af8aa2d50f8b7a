//! Independent validation of cycle certificates.
//!
//! Nothing in this module calls into the embedder or the coupled-edge logic;
//! the only graph knowledge used is [`topology::is_adjacent`] and
//! [`topology::neighbors`]. A bug in the construction therefore cannot
//! certify itself.

mod oracle;
mod sweep;

use std::collections::HashSet;
use std::fmt;

pub use oracle::{enumerate_cycles, EnumerateOptions, ORACLE_MAX_FREE_LENGTH, ORACLE_MAX_FREE_N};
pub use sweep::{sweep, EdgeSelection, LengthSelection, SweepConfig, SweepFailure, SweepReport};

use crate::cycle::CycleWitness;
use crate::perm::Permutation;
use crate::topology::{is_adjacent, EdgeRef};

/// The first problem found in a purported cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    MixedDimension { index: usize },
    OddLength(usize),
    TooShort(usize),
    DuplicateVertex { vertex: Permutation, first: usize, second: usize },
    NotAdjacent { index: usize, from: Permutation, to: Permutation },
    WrongLength { expected: usize, found: usize },
    MissingEdge(EdgeRef),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => f.write_str("empty vertex sequence"),
            Violation::MixedDimension { index } => {
                write!(f, "vertex {index} has a different dimension")
            }
            Violation::OddLength(l) => write!(f, "odd length {l}"),
            Violation::TooShort(l) => write!(f, "length {l} is below 4"),
            Violation::DuplicateVertex { vertex, first, second } => {
                write!(f, "duplicate vertex {vertex} at positions {first} and {second}")
            }
            Violation::NotAdjacent { index, from, to } => {
                write!(f, "step {index}: {from} and {to} are not adjacent")
            }
            Violation::WrongLength { expected, found } => {
                write!(f, "length {found}, expected {expected}")
            }
            Violation::MissingEdge(e) => write!(f, "edge {e} is not on the cycle"),
        }
    }
}

impl std::error::Error for Violation {}

/// Checks that `vertices` is a simple even cycle of `BS_n`, optionally
/// through `expect_edge` and of length `expect_length`.
pub fn validate_vertices(
    vertices: &[Permutation],
    expect_edge: Option<&EdgeRef>,
    expect_length: Option<usize>,
) -> Result<(), Violation> {
    let l = vertices.len();
    let first = vertices.first().ok_or(Violation::Empty)?;
    if let Some(index) = vertices.iter().position(|x| x.n() != first.n()) {
        return Err(Violation::MixedDimension { index });
    }
    if l % 2 == 1 {
        return Err(Violation::OddLength(l));
    }
    if l < 4 {
        return Err(Violation::TooShort(l));
    }
    let mut seen = std::collections::HashMap::with_capacity(l);
    for (k, x) in vertices.iter().enumerate() {
        if let Some(first) = seen.insert(*x, k) {
            return Err(Violation::DuplicateVertex {
                vertex: *x,
                first,
                second: k,
            });
        }
    }
    for k in 0..l {
        let (a, b) = (vertices[k], vertices[(k + 1) % l]);
        if !is_adjacent(&a, &b) {
            return Err(Violation::NotAdjacent {
                index: k,
                from: a,
                to: b,
            });
        }
    }
    if let Some(expected) = expect_length {
        if expected != l {
            return Err(Violation::WrongLength { expected, found: l });
        }
    }
    if let Some(e) = expect_edge {
        let on_cycle = seen.get(&e.u()).is_some_and(|&k| {
            vertices[(k + 1) % l] == e.v() || vertices[(k + l - 1) % l] == e.v()
        });
        if !on_cycle {
            return Err(Violation::MissingEdge(*e));
        }
    }
    Ok(())
}

pub fn validate(
    c: &CycleWitness,
    expect_edge: Option<&EdgeRef>,
    expect_length: Option<usize>,
) -> Result<(), Violation> {
    validate_vertices(c.vertices(), expect_edge, expect_length)
}

/// Rotates so the minimum-rank vertex comes first, then orients toward the
/// smaller-rank of its two cycle neighbors.
pub fn canonical_vertices(vertices: &[Permutation]) -> Vec<Permutation> {
    let l = vertices.len();
    if l == 0 {
        return Vec::new();
    }
    // Lexicographic order equals rank order for a fixed n.
    let start = (0..l).min_by_key(|&k| vertices[k]).unwrap();
    let next = vertices[(start + 1) % l];
    let prev = vertices[(start + l - 1) % l];
    if next <= prev {
        (0..l).map(|k| vertices[(start + k) % l]).collect()
    } else {
        (0..l).map(|k| vertices[(start + l - k) % l]).collect()
    }
}

pub fn canonical_form(c: &CycleWitness) -> CycleWitness {
    CycleWitness::from_vec_unchecked(canonical_vertices(c.vertices()))
}

/// The undirected edge set as ordered vertex pairs.
pub fn edge_set(c: &CycleWitness) -> HashSet<(Permutation, Permutation)> {
    c.steps().map(|(a, b)| if a < b { (a, b) } else { (b, a) }).collect()
}

/// Whether all cycles have pairwise different canonical forms.
pub fn pairwise_distinct(cycles: &[CycleWitness]) -> bool {
    let mut seen = HashSet::with_capacity(cycles.len());
    cycles.iter().all(|c| seen.insert(canonical_vertices(c.vertices())))
}
