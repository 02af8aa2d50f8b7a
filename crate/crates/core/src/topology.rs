//! The implicit bubble-sort star graph `BS_n`.
//!
//! Vertices are the `n!` permutations of `1..=n`. Two vertices are adjacent
//! when one is obtained from the other by swapping position 1 with position
//! `i` (a star move) or positions `i-1, i` (a bubble move). The swap `(1,2)`
//! is both, which is why every vertex has degree `2n - 3`.
//!
//! The graph is never materialized. Everything here works on local
//! neighborhoods.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_dimension, factorial, Parity, Permutation};

/// Generator classes. `Star(i)` is the swap `(1,i)` and `Adjacent(i)` the swap
/// `(i-1,i)`, both for `3 <= i <= n-1`. The swaps that move the last position
/// get their own classes because they are the only ones that leave a
/// subgraph `BS_n(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeClass {
    Overlap,
    Star(u8),
    Adjacent(u8),
    /// The swap `(n-1, n)`: `v = u^-`.
    MinusEdge,
    /// The swap `(1, n)`: `v = u^+`.
    PlusEdge,
}

impl EdgeClass {
    /// The two positions exchanged by this generator in `BS_n`.
    pub fn positions(&self, n: usize) -> (usize, usize) {
        match *self {
            EdgeClass::Overlap => (1, 2),
            EdgeClass::Star(i) => (1, i as usize),
            EdgeClass::Adjacent(i) => (i as usize - 1, i as usize),
            EdgeClass::MinusEdge => (n - 1, n),
            EdgeClass::PlusEdge => (1, n),
        }
    }

    /// Whether both endpoints stay inside one subgraph `BS_n(i)`.
    pub fn is_internal(&self) -> bool {
        !matches!(self, EdgeClass::MinusEdge | EdgeClass::PlusEdge)
    }

    fn from_positions(i: usize, j: usize, n: usize) -> Option<Self> {
        debug_assert!(i < j);
        if (i, j) == (n - 1, n) {
            Some(EdgeClass::MinusEdge)
        } else if (i, j) == (1, n) {
            Some(EdgeClass::PlusEdge)
        } else if (i, j) == (1, 2) {
            Some(EdgeClass::Overlap)
        } else if i == 1 {
            Some(EdgeClass::Star(j as u8))
        } else if j == i + 1 {
            Some(EdgeClass::Adjacent(j as u8))
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeClass::Overlap => f.write_str("overlap"),
            EdgeClass::Star(i) => write!(f, "star({i})"),
            EdgeClass::Adjacent(i) => write!(f, "adjacent({i})"),
            EdgeClass::MinusEdge => f.write_str("minus"),
            EdgeClass::PlusEdge => f.write_str("plus"),
        }
    }
}

/// An undirected edge, stored with `rank(u) < rank(v)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    u: Permutation,
    v: Permutation,
    class: EdgeClass,
}

impl EdgeRef {
    /// Classifies `(x, y)` and stores it in rank order. Fails on a non-edge.
    pub fn new(x: Permutation, y: Permutation) -> Result<Self> {
        classify_edge(x, y)
    }

    pub fn u(&self) -> Permutation {
        self.u
    }

    pub fn v(&self) -> Permutation {
        self.v
    }

    pub fn class(&self) -> EdgeClass {
        self.class
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }

    pub fn endpoints(&self) -> (Permutation, Permutation) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.u == *x || self.v == *x
    }

    /// The subgraph holding both endpoints, if the edge is internal.
    pub fn subgraph(&self) -> Option<SubgraphId> {
        (self.u.last() == self.v.last()).then(|| SubgraphId(self.u.last()))
    }

    /// Applies a symbol relabeling to both endpoints.
    pub fn relabel(&self, map: &Permutation) -> Result<Self> {
        let a = self.u.relabel(map)?;
        let b = self.v.relabel(map)?;
        Ok(EdgeRef::ordered(a, b, self.class))
    }

    pub(crate) fn ordered(a: Permutation, b: Permutation, class: EdgeClass) -> Self {
        if a < b {
            EdgeRef { u: a, v: b, class }
        } else {
            EdgeRef { u: b, v: a, class }
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.u, self.v)
    }
}

impl fmt::Debug for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.u, self.v, self.class)
    }
}

/// The symbol `i` naming the induced subgraph `BS_n(i)` of vertices ending in `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubgraphId(pub u8);

impl fmt::Display for SubgraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The generator swaps of `BS_n` in neighbor order: `(1,2)`, then `(1,i)`
/// for ascending `i`, then `(i-1,i)` for ascending `i`.
pub fn generator_swaps(n: usize) -> impl Iterator<Item = (usize, usize)> {
    std::iter::once((1, 2))
        .chain((3..=n).map(|i| (1, i)))
        .chain((3..=n).map(|i| (i - 1, i)))
}

/// The `2n - 3` neighbors of `x` in deterministic generator order.
pub fn neighbors(x: &Permutation) -> Vec<Permutation> {
    generator_swaps(x.n()).map(|(i, j)| x.swapped(i, j)).collect()
}

/// Positions where `x` and `y` differ, if there are exactly two.
fn differing_pair(x: &Permutation, y: &Permutation) -> Option<(usize, usize)> {
    let mut diff = [0usize; 2];
    let mut count = 0;
    for (k, (a, b)) in x.symbols().iter().zip(y.symbols()).enumerate() {
        if a != b {
            if count == 2 {
                return None;
            }
            diff[count] = k + 1;
            count += 1;
        }
    }
    // Two permutations differing in exactly two places differ by that swap.
    (count == 2).then_some((diff[0], diff[1]))
}

pub fn is_adjacent(x: &Permutation, y: &Permutation) -> bool {
    if x.n() != y.n() {
        return false;
    }
    matches!(differing_pair(x, y), Some((i, j)) if i == 1 || j == i + 1)
}

pub fn classify_edge(x: Permutation, y: Permutation) -> Result<EdgeRef> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    let class = differing_pair(&x, &y)
        .and_then(|(i, j)| EdgeClass::from_positions(i, j, x.n()))
        .ok_or(Error::NotAnEdge(x, y))?;
    Ok(EdgeRef::ordered(x, y, class))
}

pub fn subgraph_of(x: &Permutation) -> SubgraphId {
    SubgraphId(x.last())
}

/// Maps a vertex of `BS_n(i)` to `BS_{n-1}` by dropping the last symbol and
/// compressing the remaining symbols order-preservingly onto `1..=n-1`.
pub fn project(x: &Permutation, i: SubgraphId) -> Result<Permutation> {
    if x.last() != i.0 {
        return Err(Error::WrongSubgraph(*x, i.0));
    }
    let n = x.n();
    if n < 3 {
        return Err(Error::Dimension(n - 1));
    }
    let mut out = [0u8; crate::perm::MAX_N];
    for (k, &s) in x.symbols()[..n - 1].iter().enumerate() {
        out[k] = if s > i.0 { s - 1 } else { s };
    }
    Permutation::from_symbols(&out[..n - 1])
}

/// Inverse of [`project`]: lifts a vertex of `BS_{n-1}` into `BS_n(i)`.
pub fn inject(y: &Permutation, i: SubgraphId) -> Result<Permutation> {
    let m = y.n();
    if i.0 == 0 || i.0 as usize > m + 1 {
        return Err(Error::Precondition(format!(
            "subgraph {i} does not exist in BS_{}",
            m + 1
        )));
    }
    let mut out = [0u8; crate::perm::MAX_N + 1];
    for (k, &s) in y.symbols().iter().enumerate() {
        out[k] = if s >= i.0 { s + 1 } else { s };
    }
    out[m] = i.0;
    Permutation::from_symbols(&out[..m + 1])
}

/// Relabels symbols so that `e.u` becomes the identity. Returns the relabeling
/// `pi` (with `pi(u_k) = k`) and the relabeled edge. Relabeling the result by
/// `pi.inverse()` recovers `e`.
pub fn canonicalize_edge(e: &EdgeRef) -> (Permutation, EdgeRef) {
    let pi = e.u.inverse();
    let canon = EdgeRef::ordered(
        e.u.relabel_unchecked(&pi),
        e.v.relabel_unchecked(&pi),
        e.class,
    );
    (pi, canon)
}

pub fn count_vertices(n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::Dimension(n));
    }
    factorial(n).ok_or(Error::Overflow("vertex count", n))
}

pub fn count_edges(n: usize) -> Result<u64> {
    let v = count_vertices(n)?;
    // n! is even for n >= 2, so halve first.
    (v / 2)
        .checked_mul(2 * n as u64 - 3)
        .ok_or(Error::Overflow("edge count", n))
}

/// Sizes of the even and odd sides of the bipartition.
pub fn bipartition_sizes(n: usize) -> Result<(u64, u64)> {
    let v = count_vertices(n)?;
    Ok((v / 2, v / 2))
}

pub fn side(x: &Permutation) -> Parity {
    x.parity()
}

/// Every edge of `BS_n`, sorted by `(rank(u), rank(v))`.
pub fn all_edges(n: usize) -> Result<Vec<EdgeRef>> {
    check_dimension(n)?;
    let mut edges = Vec::with_capacity(count_edges(n)? as usize);
    for x in Permutation::all(n)? {
        for (i, j) in generator_swaps(n) {
            let y = x.swapped(i, j);
            if x < y {
                let class = EdgeClass::from_positions(i, j, n).expect("generator swap");
                edges.push(EdgeRef { u: x, v: y, class });
            }
        }
    }
    edges.sort();
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn neighbor_examples() {
        let got = neighbors(&p("1234"));
        assert_eq!(got, vec![p("2134"), p("3214"), p("4231"), p("1324"), p("1243")]);
        assert_eq!(neighbors(&p("123")), vec![p("213"), p("321"), p("132")]);
        assert_eq!(neighbors(&p("12")), vec![p("21")]);
    }

    #[test]
    fn classification_examples() {
        let e = classify_edge(p("1234"), p("1324")).unwrap();
        assert_eq!(e.class(), EdgeClass::Adjacent(3));
        assert_eq!(classify_edge(p("1234"), p("4231")).unwrap().class(), EdgeClass::PlusEdge);
        assert_eq!(classify_edge(p("1234"), p("1243")).unwrap().class(), EdgeClass::MinusEdge);
        assert_eq!(classify_edge(p("1234"), p("2134")).unwrap().class(), EdgeClass::Overlap);
        assert_eq!(classify_edge(p("1234"), p("3214")).unwrap().class(), EdgeClass::Star(3));
        assert!(matches!(classify_edge(p("1234"), p("4321")), Err(Error::NotAnEdge(..))));
        assert!(!neighbors(&p("1234")).contains(&p("4321")));
        // (2,4) differs in exactly two positions but is not a generator.
        assert!(!is_adjacent(&p("1234"), &p("1432")));
        assert!(classify_edge(p("123"), p("1234")).is_err());
    }

    #[test]
    fn edge_ref_is_unordered() {
        let a = EdgeRef::new(p("1324"), p("1234")).unwrap();
        let b = EdgeRef::new(p("1234"), p("1324")).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.u(), p("1234"));
    }

    #[test]
    fn subgraph_examples() {
        assert_eq!(subgraph_of(&p("1234")), SubgraphId(4));
        assert_eq!(subgraph_of(&p("2143")), SubgraphId(3));
        assert_eq!(subgraph_of(&p("4132")), SubgraphId(2));
    }

    #[test]
    fn project_inject_examples() {
        assert_eq!(project(&p("1324"), SubgraphId(4)).unwrap(), p("132"));
        assert_eq!(project(&p("1432"), SubgraphId(2)).unwrap(), p("132"));
        assert_eq!(inject(&p("132"), SubgraphId(2)).unwrap(), p("1432"));
        assert!(project(&p("1432"), SubgraphId(3)).is_err());
    }

    #[test]
    fn canonicalize_examples() {
        let e = EdgeRef::new(p("2134"), p("2314")).unwrap();
        let (pi, canon) = canonicalize_edge(&e);
        assert_eq!(pi, p("2134"));
        assert_eq!(canon, EdgeRef::new(p("1234"), p("1324")).unwrap());
        assert_eq!(canon.relabel(&pi.inverse()).unwrap(), e);

        let id = EdgeRef::new(p("1234"), p("1243")).unwrap();
        let (pi, canon) = canonicalize_edge(&id);
        assert!(pi.is_identity());
        assert_eq!(canon, id);
    }

    #[test]
    fn canonicalize_preserves_class_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let x = Permutation::unrank(5, rng.gen_range(0..120)).unwrap();
            let nbrs = neighbors(&x);
            let y = nbrs[rng.gen_range(0..nbrs.len())];
            let e = EdgeRef::new(x, y).unwrap();
            let (pi, canon) = canonicalize_edge(&e);
            assert!(canon.u().is_identity());
            assert_eq!(canon.class(), e.class());
            assert_eq!(EdgeRef::new(canon.u(), canon.v()).unwrap().class(), e.class());
            assert_eq!(canon.relabel(&pi.inverse()).unwrap(), e);
            // The relabeling maps u's neighbor set bijectively onto identity's.
            let mut mapped: Vec<_> = neighbors(&e.u()).iter().map(|w| w.relabel(&pi).unwrap()).collect();
            let mut ident = neighbors(&canon.u());
            mapped.sort();
            ident.sort();
            assert_eq!(mapped, ident);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count_vertices(4).unwrap(), 24);
        assert_eq!(count_edges(4).unwrap(), 60);
        assert_eq!(count_edges(2).unwrap(), 1);
        assert_eq!(bipartition_sizes(3).unwrap(), (3, 3));
        assert!(count_vertices(21).is_err());
        assert!(count_vertices(1).is_err());
        // Degree sum over all vertices of BS_4, halved.
        let degree_sum: usize = Permutation::all(4).unwrap().map(|x| neighbors(&x).len()).sum();
        assert_eq!(degree_sum / 2, 60);
    }

    #[test]
    fn structure_is_regular_bipartite_up_to_six() {
        for n in 2..=6 {
            let mut even = 0u64;
            for x in Permutation::all(n).unwrap() {
                let nbrs = neighbors(&x);
                assert_eq!(nbrs.len(), 2 * n - 3);
                let mut dedup = nbrs.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), nbrs.len());
                for y in &nbrs {
                    assert!(is_adjacent(y, &x));
                    assert!(neighbors(y).contains(&x));
                    assert_ne!(x.parity(), y.parity());
                }
                if x.parity() == Parity::Even {
                    even += 1;
                }
            }
            assert_eq!((even, count_vertices(n).unwrap() - even), bipartition_sizes(n).unwrap());
            assert_eq!(all_edges(n).unwrap().len() as u64, count_edges(n).unwrap());
        }
    }

    #[test]
    fn subgraphs_are_isomorphic_to_smaller_graph() {
        for n in 3..=5 {
            for i in 1..=n as u8 {
                let sub = SubgraphId(i);
                let members: Vec<_> = Permutation::all(n).unwrap().filter(|x| x.last() == i).collect();
                let mut images: Vec<_> = members.iter().map(|x| project(x, sub).unwrap()).collect();
                for (x, y) in members.iter().zip(&images) {
                    assert_eq!(inject(y, sub).unwrap(), *x);
                }
                for a in &members {
                    for b in &members {
                        let pa = project(a, sub).unwrap();
                        let pb = project(b, sub).unwrap();
                        assert_eq!(is_adjacent(a, b), is_adjacent(&pa, &pb));
                    }
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len() as u64, count_vertices(n - 1).unwrap());
            }
        }
    }

    #[test]
    fn only_plus_and_minus_leave_a_subgraph() {
        for e in all_edges(5).unwrap() {
            let same = e.u().last() == e.v().last();
            assert_eq!(same, e.class().is_internal(), "{e:?}");
        }
    }
}
