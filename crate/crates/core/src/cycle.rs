use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::topology::{EdgeRef, SubgraphId};

/// A cycle given by its vertex sequence; the closing edge from the last
/// vertex back to the first is implicit.
///
/// Construction only checks that the sequence is non-empty and uses one
/// dimension. Whether it is actually a cycle of `BS_n` is decided by
/// [`checker::validate`](crate::checker::validate).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleWitness {
    vertices: Vec<Permutation>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Permutation>) -> Result<Self> {
        let first = vertices
            .first()
            .ok_or_else(|| Error::Precondition("empty cycle".into()))?;
        if let Some(bad) = vertices.iter().find(|x| x.n() != first.n()) {
            return Err(Error::DimensionMismatch(first.n(), bad.n()));
        }
        Ok(CycleWitness { vertices })
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<Permutation>) -> Self {
        debug_assert!(!vertices.is_empty());
        CycleWitness { vertices }
    }

    pub fn n(&self) -> usize {
        self.vertices[0].n()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Permutation> {
        self.vertices
    }

    /// Consecutive vertex pairs, including the closing pair.
    pub fn steps(&self) -> impl Iterator<Item = (Permutation, Permutation)> + '_ {
        let l = self.vertices.len();
        (0..l).map(move |k| (self.vertices[k], self.vertices[(k + 1) % l]))
    }

    pub fn position(&self, x: &Permutation) -> Option<usize> {
        self.vertices.iter().position(|y| y == x)
    }

    /// The two cycle neighbors of the vertex at index `k`: `(previous, next)`.
    pub fn around(&self, k: usize) -> (Permutation, Permutation) {
        let l = self.vertices.len();
        (self.vertices[(k + l - 1) % l], self.vertices[(k + 1) % l])
    }

    pub fn contains_edge(&self, e: &EdgeRef) -> bool {
        match self.position(&e.u()) {
            Some(k) => {
                let (prev, next) = self.around(k);
                prev == e.v() || next == e.v()
            }
            None => false,
        }
    }

    pub fn in_subgraph(&self, i: SubgraphId) -> bool {
        self.vertices.iter().all(|x| x.last() == i.0)
    }

    /// Applies a symbol relabeling to every vertex.
    pub fn relabel(&self, map: &Permutation) -> Result<Self> {
        if map.n() != self.n() {
            return Err(Error::DimensionMismatch(self.n(), map.n()));
        }
        Ok(CycleWitness {
            vertices: self.vertices.iter().map(|x| x.relabel_unchecked(map)).collect(),
        })
    }
}

impl std::fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, x) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
