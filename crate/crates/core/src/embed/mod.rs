//! Constructive embedding of cycles of every even length through any edge.
//!
//! The construction is recursive on `n`. An edge is first relabeled so one
//! endpoint is the identity `u = 12...n`, which lives in the subgraph
//! `BS_n(n)`. Then:
//!
//! * `n <= 4`: cycles come from [`base_cycles`](crate::base_cycles).
//! * internal edge, `l <= (n-1)!`: recurse inside `BS_n(n) ≅ BS_{n-1}`.
//! * internal edge, `l = q(n-1)! + p`: chain Hamiltonian cycles of
//!   `BS_n(n), BS_n(1), BS_n(2), ...` together through coupled pair-edges
//!   until `q` subgraphs are spanned, then either detour through two more
//!   vertices (`p = 2`) or splice in a `p`-cycle of the next subgraph.
//! * `v = u-` or `v = u+`: start from one of four explicit 4-cycles through
//!   the edge, grow it inside `BS_n(n)` by a shared-edge merge, then inside
//!   the subgraph holding `v`, and from there chain like the internal case.
//!
//! Multiplicity comes from varying one innermost choice at a time (the
//! recursive sub-cycle, the detour site, the Hamiltonian cycle of `BS_n(n)`,
//! the starting 4-cycle) and keeping only pairwise distinct results.

mod splice;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, OnceLock, RwLock};

pub use splice::{extend_two, merge_bridged, merge_shared_edge};

use crate::base_cycles::base_cycles;
use crate::checker::{canonical_vertices, validate};
use crate::coupled::{coupled_pair_into, find_bridge_unchecked, minus, plus, CoupledPair};
use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};
use crate::topology::{canonicalize_edge, classify_edge, inject, project, EdgeClass, EdgeRef, SubgraphId};

/// Number of distinct cycles the construction guarantees.
pub const DEFAULT_COUNT: usize = 4;

/// How many Hamiltonian cycles of a subgraph are kept as alternatives.
const HAMILTONIAN_CHOICES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EmbedRequest {
    edge: EdgeRef,
    length: usize,
    count: usize,
}

impl EmbedRequest {
    pub fn new(edge: EdgeRef, length: usize, count: usize) -> Result<Self> {
        let n = edge.n();
        if n < 3 {
            return Err(Error::Dimension(n));
        }
        let total = factorial(n).ok_or(Error::Overflow("n!", n))?;
        if length < 4 || length as u64 > total || length % 2 == 1 {
            return Err(Error::Length { n, length });
        }
        if count == 0 {
            return Err(Error::Precondition("count must be positive".into()));
        }
        Ok(EmbedRequest {
            edge,
            length,
            count,
        })
    }

    pub fn n(&self) -> usize {
        self.edge.n()
    }

    pub fn edge(&self) -> EdgeRef {
        self.edge
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

/// Splits `l` in `((n-1)!, n!]` as `q (n-1)! + p` with `1 <= q <= n-1` and
/// `2 <= p <= (n-1)!`.
pub fn decompose_length(n: usize, l: usize) -> Result<(usize, usize)> {
    let err = Error::Length { n, length: l };
    let f = factorial(n.checked_sub(1).ok_or(err.clone())?).ok_or(Error::Overflow("(n-1)!", n))? as usize;
    if l % 2 == 1 || l <= f || l as u64 > (f as u64) * n as u64 {
        return Err(err);
    }
    let q = (l - 2) / f;
    Ok((q, l - q * f))
}

/// Canonical requests, relative to `u = identity`.
type CacheKey = (usize, Permutation, usize, usize);

/// The cycle constructor. Holds thread-safe memo tables for recursive
/// sub-results; independent requests may run concurrently on one instance.
#[derive(Default)]
pub struct Embedder {
    cache: RwLock<HashMap<CacheKey, Arc<Vec<CycleWitness>>>>,
}

impl Embedder {
    pub fn new() -> Self {
        Self::default()
    }

    /// A process-wide instance.
    pub fn global() -> &'static Embedder {
        static GLOBAL: OnceLock<Embedder> = OnceLock::new();
        GLOBAL.get_or_init(Embedder::new)
    }

    /// At least `req.count` pairwise distinct cycles of length `req.length`
    /// through `req.edge`, each validated and in canonical form.
    pub fn embed(&self, req: &EmbedRequest) -> Result<Vec<CycleWitness>> {
        let (pi, canon) = canonicalize_edge(&req.edge);
        let found = self.embed_canonical(req.n(), canon.v(), req.length, req.count)?;
        let back = pi.inverse();
        let mut out = Vec::with_capacity(found.len());
        let mut seen = HashSet::with_capacity(found.len());
        for c in found.iter() {
            let relabeled: Vec<Permutation> =
                c.vertices().iter().map(|x| x.relabel_unchecked(&back)).collect();
            let c = CycleWitness::from_vec_unchecked(canonical_vertices(&relabeled));
            validate(&c, Some(&req.edge), Some(req.length))
                .map_err(|v| Error::Validation(format!("certificate for {}: {v}", req.edge)))?;
            if !seen.insert(c.vertices().to_vec()) {
                return Err(Error::Validation("duplicate certificate".into()));
            }
            out.push(c);
        }
        Ok(out)
    }

    /// One Hamiltonian cycle through `e`.
    pub fn hamiltonian(&self, e: &EdgeRef) -> Result<CycleWitness> {
        let n = e.n();
        let total = factorial(n).ok_or(Error::Overflow("n!", n))? as usize;
        let req = EmbedRequest::new(*e, total, 1)?;
        Ok(self.embed(&req)?.remove(0))
    }

    fn embed_canonical(
        &self,
        n: usize,
        v: Permutation,
        length: usize,
        count: usize,
    ) -> Result<Arc<Vec<CycleWitness>>> {
        let key = (n, v, length, count);
        if let Some(hit) = self.cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let u = Permutation::identity(n)?;
        let e = classify_edge(u, v)?;
        let built = Arc::new(Construction { embedder: self, n }.run(&e, length, count)?);
        // Only small or Hamiltonian results are reused often enough to keep.
        if n <= 5 || factorial(n) == Some(length as u64) {
            self.cache.write().unwrap().insert(key, built.clone());
        }
        Ok(built)
    }

    /// Cycles of length `length` through the internal edge `e` of `BS_n(j)`,
    /// staying inside `BS_n(j)`.
    fn within_subgraph(&self, e: &EdgeRef, length: usize, count: usize) -> Result<Vec<CycleWitness>> {
        let j = e.subgraph().ok_or(Error::CrossEdge(e.u(), e.v()))?;
        let sub = EdgeRef::new(project(&e.u(), j)?, project(&e.v(), j)?)?;
        let req = EmbedRequest::new(sub, length, count)?;
        self.embed(&req)?
            .into_iter()
            .map(|c| {
                let lifted = c.vertices().iter().map(|y| inject(y, j)).collect::<Result<_>>()?;
                Ok(CycleWitness::from_vec_unchecked(lifted))
            })
            .collect()
    }

    fn subgraph_hamiltonian(&self, e: &EdgeRef, choice: usize) -> Result<CycleWitness> {
        let f = factorial(e.n() - 1).unwrap() as usize;
        let mut all = self.within_subgraph(e, f, HAMILTONIAN_CHOICES)?;
        if choice >= all.len() {
            return Err(Error::Insufficient {
                length: f,
                found: all.len(),
                required: choice + 1,
            });
        }
        Ok(all.swap_remove(choice))
    }
}

/// Shorthand: embed with the global instance.
pub fn embed(req: &EmbedRequest) -> Result<Vec<CycleWitness>> {
    Embedder::global().embed(req)
}

pub fn hamiltonian(e: &EdgeRef) -> Result<CycleWitness> {
    Embedder::global().hamiltonian(e)
}

/// Accumulates distinct cycles until `count` are held.
struct Collector {
    count: usize,
    seen: HashSet<Vec<Permutation>>,
    out: Vec<CycleWitness>,
}

impl Collector {
    fn new(count: usize) -> Self {
        Collector {
            count,
            seen: HashSet::new(),
            out: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.out.len() >= self.count
    }

    fn push(&mut self, c: CycleWitness) {
        if !self.done() && self.seen.insert(canonical_vertices(c.vertices())) {
            self.out.push(c);
        }
    }

    /// Runs one choice site. Validation failures are defects and propagate;
    /// anything else means this site is not usable and the next one is tried.
    fn attempt(&mut self, site: impl FnOnce(&mut Self) -> Result<()>) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        match site(self) {
            Err(err @ Error::Validation(_)) => Err(err),
            _ => Ok(()),
        }
    }

    fn finish(self, length: usize) -> Result<Vec<CycleWitness>> {
        if self.done() {
            Ok(self.out)
        } else {
            Err(Error::Insufficient {
                length,
                found: self.out.len(),
                required: self.count,
            })
        }
    }
}

/// A subgraph fully spanned by the growing cycle, with the Hamiltonian cycle
/// it was spanned by and the edges of that cycle that may not be used as
/// bridges (already removed, or the target edge).
struct Occupied {
    id: SubgraphId,
    ham: CycleWitness,
    forbidden: HashSet<EdgeRef>,
}

/// A cycle spanning whole subgraphs, chained through bridge pairs.
struct ChainState {
    cycle: CycleWitness,
    occupied: Vec<Occupied>,
}

impl ChainState {
    fn is_forbidden(&self, e: &EdgeRef) -> bool {
        self.occupied.iter().any(|o| o.forbidden.contains(e))
    }

    /// Bridges from the occupied subgraph at `index` into `j`, in scan order.
    fn bridges_from(&self, index: usize, j: SubgraphId) -> Vec<CoupledPair> {
        let o = &self.occupied[index];
        let mut local = o.forbidden.clone();
        let mut out = Vec::new();
        while let Ok((e, pair)) = find_bridge_unchecked(&o.ham, j, &local) {
            local.insert(e);
            out.push(pair);
        }
        out
    }

    /// Every usable bridge into `j`: the selection rule on each occupied
    /// subgraph in chain order, then any other cycle edge with a coupled
    /// pair-edge in `j`.
    fn bridges_into(&self, j: SubgraphId) -> Result<Vec<(usize, CoupledPair)>> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for index in 0..self.occupied.len() {
            for pair in self.bridges_from(index, j) {
                seen.insert(pair.e);
                out.push((index, pair));
            }
        }
        for (a, b) in self.cycle.steps() {
            let e = classify_edge(a, b)?;
            if !e.class().is_internal() || self.is_forbidden(&e) || seen.contains(&e) {
                continue;
            }
            if let Some(pair) = coupled_pair_into(&e, j)? {
                let index = self
                    .occupied
                    .iter()
                    .position(|o| Some(o.id) == e.subgraph())
                    .ok_or_else(|| Error::Validation(format!("{e} outside occupied subgraphs")))?;
                seen.insert(e);
                out.push((index, pair));
            }
        }
        Ok(out)
    }

    fn first_bridge_into(&self, j: SubgraphId) -> Result<(usize, CoupledPair)> {
        for index in 0..self.occupied.len() {
            if let Some(pair) = self.bridges_from(index, j).into_iter().next() {
                return Ok((index, pair));
            }
        }
        self.bridges_into(j)?
            .into_iter()
            .next()
            .ok_or(Error::BridgeExhausted(j.0))
    }

    /// Splices a whole Hamiltonian cycle of `BS_n(j)` into the chain.
    fn attach(&mut self, embedder: &Embedder, j: SubgraphId) -> Result<()> {
        let (index, pair) = self.first_bridge_into(j)?;
        let ham = embedder.subgraph_hamiltonian(&pair.e_prime, 0)?;
        self.cycle = merge_bridged(&self.cycle, &pair, &ham)?;
        self.occupied[index].forbidden.insert(pair.e);
        self.occupied.push(Occupied {
            id: j,
            ham,
            forbidden: HashSet::from([pair.e_prime]),
        });
        Ok(())
    }
}

struct Construction<'a> {
    embedder: &'a Embedder,
    n: usize,
}

impl Construction<'_> {
    fn sub_factorial(&self) -> usize {
        factorial(self.n - 1).unwrap() as usize
    }

    fn run(&self, e: &EdgeRef, length: usize, count: usize) -> Result<Vec<CycleWitness>> {
        let n = self.n;
        if n <= 4 {
            return base_cycles(e, length, count);
        }
        let f = self.sub_factorial();
        let cycles = match e.class() {
            EdgeClass::MinusEdge | EdgeClass::PlusEdge => self.cross(e, length, count)?,
            _ if length <= f => self.embedder.within_subgraph(e, length, count)?,
            _ => {
                let (q, p) = decompose_length(n, length)?;
                self.internal_chain(e, q, p, count)?
            }
        };
        for c in &cycles {
            validate(c, Some(e), Some(length))
                .map_err(|v| Error::Validation(format!("BS_{n} {e} length {length}: {v}")))?;
        }
        Ok(cycles)
    }

    /// Subgraphs in chain order, skipping those already used.
    fn chain_order(&self, skip: &[SubgraphId]) -> Vec<SubgraphId> {
        (1..self.n as u8)
            .map(SubgraphId)
            .filter(|s| !skip.contains(s))
            .collect()
    }

    /// Grows `state` by `q - occupied` more subgraphs, then adds `p` vertices.
    fn complete_chain(
        &self,
        mut state: ChainState,
        q: usize,
        p: usize,
        first_site_only: bool,
        out: &mut Collector,
    ) -> Result<()> {
        let used: Vec<SubgraphId> = state.occupied.iter().map(|o| o.id).collect();
        let order = self.chain_order(&used);
        let extra = q - state.occupied.len();
        for &j in &order[..extra] {
            state.attach(self.embedder, j)?;
        }
        let rest = &order[extra..];
        if p == 2 {
            self.finish_by_detour(&state, rest, first_site_only, out)
        } else {
            self.finish_by_splice(&state, rest, p, out)
        }
    }

    /// `p = 2`: replace one cycle edge by a two-vertex detour into an
    /// unoccupied subgraph. Sites are (occupied source, unoccupied target)
    /// pairs, first bridges first.
    fn finish_by_detour(
        &self,
        state: &ChainState,
        targets: &[SubgraphId],
        first_site_only: bool,
        out: &mut Collector,
    ) -> Result<()> {
        for index in 0..state.occupied.len() {
            for &j in targets {
                if let Some(pair) = state.bridges_from(index, j).first() {
                    out.attempt(|out| {
                        out.push(extend_two(&state.cycle, pair)?);
                        Ok(())
                    })?;
                    if first_site_only || out.done() {
                        return Ok(());
                    }
                }
            }
        }
        for &j in targets {
            for (_, pair) in state.bridges_into(j)? {
                out.attempt(|out| {
                    out.push(extend_two(&state.cycle, &pair)?);
                    Ok(())
                })?;
            }
        }
        Ok(())
    }

    /// `p >= 4`: splice in `p`-cycles of the next subgraph through a bridge.
    fn finish_by_splice(
        &self,
        state: &ChainState,
        targets: &[SubgraphId],
        p: usize,
        out: &mut Collector,
    ) -> Result<()> {
        for &j in targets {
            for (_, pair) in state.bridges_into(j)? {
                out.attempt(|out| {
                    for sub in self.embedder.within_subgraph(&pair.e_prime, p, out.count)? {
                        out.push(merge_bridged(&state.cycle, &pair, &sub)?);
                    }
                    Ok(())
                })?;
                if out.done() {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Edge inside `BS_n(n)`, length above `(n-1)!`.
    fn internal_chain(&self, e: &EdgeRef, q: usize, p: usize, count: usize) -> Result<Vec<CycleWitness>> {
        let home = SubgraphId(self.n as u8);
        let start = |choice: usize| -> Result<ChainState> {
            let ham = self.embedder.subgraph_hamiltonian(e, choice)?;
            Ok(ChainState {
                cycle: ham.clone(),
                occupied: vec![Occupied {
                    id: home,
                    ham,
                    forbidden: HashSet::from([*e]),
                }],
            })
        };
        let mut out = Collector::new(count);
        if q == 1 && p == 2 {
            // Distinct Hamiltonian cycles of BS_n(n), one detour each.
            for choice in 0..HAMILTONIAN_CHOICES {
                out.attempt(|out| self.complete_chain(start(choice)?, q, p, true, out))?;
            }
        }
        for choice in 0..HAMILTONIAN_CHOICES {
            out.attempt(|out| self.complete_chain(start(choice)?, q, p, false, out))?;
        }
        out.finish(q * self.sub_factorial() + p)
    }

    /// The four 4-cycles `u, v, v∘g, u∘g` through a cross edge `(u, v)`.
    fn base_squares(&self, e: &EdgeRef) -> Result<Vec<CycleWitness>> {
        let n = self.n;
        let u = e.u();
        let rows: Vec<[Permutation; 4]> = match e.class() {
            EdgeClass::MinusEdge => {
                let v = minus(&u);
                [(1, 2), (1, 3), (2, 3), (1, n - 1)]
                    .iter()
                    .map(|&(a, b)| [u, v, v.swapped(a, b), u.swapped(a, b)])
                    .collect()
            }
            EdgeClass::PlusEdge => {
                let v = plus(&u);
                let mut rows: Vec<[Permutation; 4]> = [(2, 3), (3, 4), (n - 1, n)]
                    .iter()
                    .map(|&(a, b)| [u, v, v.swapped(a, b), u.swapped(a, b)])
                    .collect();
                rows.push([u, v, v.swapped(n - 1, n), u.swapped(1, n - 1)]);
                rows
            }
            _ => return Err(Error::Precondition(format!("{e} is not a cross edge"))),
        };
        rows.into_iter()
            .map(|r| {
                let c = CycleWitness::from_vec_unchecked(r.to_vec());
                validate(&c, Some(e), Some(4))
                    .map_err(|v| Error::Validation(format!("base square: {v}")))?;
                Ok(c)
            })
            .collect()
    }

    /// Edge `(u, u-)` or `(u, u+)` leaving `BS_n(n)`.
    fn cross(&self, e: &EdgeRef, length: usize, count: usize) -> Result<Vec<CycleWitness>> {
        let n = self.n;
        let f = self.sub_factorial();
        let home = SubgraphId(n as u8);
        let squares = self.base_squares(e)?;
        let mut out = Collector::new(count);
        if length == 4 {
            for c in squares {
                out.push(c);
            }
            return out.finish(length);
        }
        // Each square u, v, v', u' has an edge (u, u') inside BS_n(n) and,
        // for most squares, an edge (v, v') inside the subgraph of v.
        let anchors = |sq: &CycleWitness| -> Option<(EdgeRef, EdgeRef)> {
            let [u, v, vp, up] = [0, 1, 2, 3].map(|k| sq.vertices()[k]);
            let inside = classify_edge(u, up).ok().filter(|x| x.subgraph() == Some(home))?;
            let far = classify_edge(v, vp).ok().filter(|x| x.class().is_internal())?;
            Some((inside, far))
        };
        let (q, p) = if length <= f + 2 {
            (0, length - 2)
        } else {
            decompose_length(n, length)?
        };

        for sq in &squares {
            let Some((inside, far)) = anchors(sq) else { continue };
            if q == 0 {
                // Square merged with (l-2)-cycles of BS_n(n).
                out.attempt(|out| {
                    for sub in self.embedder.within_subgraph(&inside, p, count)? {
                        out.push(merge_shared_edge(sq, &sub, &inside)?);
                    }
                    Ok(())
                })?;
                continue;
            }
            for choice in 0..HAMILTONIAN_CHOICES {
                out.attempt(|out| {
                    let ham = self.embedder.subgraph_hamiltonian(&inside, choice)?;
                    let spanned = merge_shared_edge(sq, &ham, &inside)?;
                    if q == 1 {
                        // Then p-cycles of v's subgraph through the square's far edge.
                        for sub in self.embedder.within_subgraph(&far, p, count)? {
                            out.push(merge_shared_edge(&spanned, &sub, &far)?);
                        }
                        return Ok(());
                    }
                    let far_ham = self.embedder.subgraph_hamiltonian(&far, 0)?;
                    let cycle = merge_shared_edge(&spanned, &far_ham, &far)?;
                    let side = far.subgraph().expect("internal");
                    let state = ChainState {
                        cycle,
                        occupied: vec![
                            Occupied {
                                id: home,
                                ham,
                                forbidden: HashSet::from([inside]),
                            },
                            Occupied {
                                id: side,
                                ham: far_ham,
                                forbidden: HashSet::from([far]),
                            },
                        ],
                    };
                    self.complete_chain(state, q, p, false, out)
                })?;
                if out.done() {
                    break;
                }
            }
        }
        out.finish(length)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base_cycles::load_fixtures;
    use crate::checker::{canonical_form, pairwise_distinct};
    use crate::topology::{all_edges, neighbors};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn edge(a: &str, b: &str) -> EdgeRef {
        EdgeRef::new(p(a), p(b)).unwrap()
    }

    fn check(e: &EdgeRef, l: usize, count: usize) -> Vec<CycleWitness> {
        let got = embed(&EmbedRequest::new(*e, l, count).unwrap()).unwrap();
        assert_eq!(got.len(), count);
        assert!(pairwise_distinct(&got));
        for c in &got {
            assert_eq!(validate(c, Some(e), Some(l)), Ok(()), "{e} {l}");
        }
        got
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose_length(5, 26).unwrap(), (1, 2));
        assert_eq!(decompose_length(5, 120).unwrap(), (4, 24));
        assert_eq!(decompose_length(5, 48).unwrap(), (1, 24));
        assert_eq!(decompose_length(5, 50).unwrap(), (2, 2));
        assert!(decompose_length(5, 24).is_err());
        assert!(decompose_length(5, 27).is_err());
        assert!(decompose_length(5, 122).is_err());
    }

    #[test]
    fn request_validation() {
        let e = edge("1234", "1324");
        assert!(EmbedRequest::new(e, 2, 4).is_err());
        assert!(EmbedRequest::new(e, 7, 4).is_err());
        assert!(EmbedRequest::new(e, 26, 4).is_err());
        assert!(EmbedRequest::new(e, 8, 0).is_err());
        assert!(EmbedRequest::new(edge("12", "21"), 4, 1).is_err());
    }

    #[test]
    fn table_one_rows_are_admissible_outputs() {
        let got = check(&edge("1234", "1324"), 8, 4);
        let table = &load_fixtures().unwrap()[0];
        // All 8-cycles through the edge, so every printed row is among them.
        let all = crate::checker::enumerate_cycles(
            &table.target_edge,
            8,
            crate::checker::EnumerateOptions::exhaustive(),
        )
        .unwrap();
        for (_, row) in &table.rows {
            assert!(all.contains(&canonical_form(row)));
        }
        for c in &got {
            assert!(all.contains(c));
        }
    }

    #[test]
    fn bs3_returns_all_four_squares() {
        let e = edge("123", "132");
        let got = check(&e, 4, 4);
        let all = crate::checker::enumerate_cycles(&e, 4, Default::default()).unwrap();
        let mut a = got.clone();
        let mut b = all.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        let ham = hamiltonian(&edge("123", "213")).unwrap();
        assert_eq!(ham.len(), 6);
    }

    #[test]
    fn every_class_and_length_in_bs5_for_identity() {
        let u = Permutation::identity(5).unwrap();
        for v in neighbors(&u) {
            let e = EdgeRef::new(u, v).unwrap();
            for l in (4..=120).step_by(2) {
                check(&e, l, 4);
            }
        }
    }

    #[test]
    fn hamiltonians_in_bs5_and_bs6() {
        for e in all_edges(5).unwrap().iter().step_by(37) {
            check(e, 120, 4);
        }
        let e = edge("123456", "213456");
        assert_eq!(hamiltonian(&e).unwrap().len(), 720);
        let e = edge("123456", "123465");
        check(&e, 720, 4);
    }

    #[test]
    fn bridge_search_avoids_forbidden_edge_in_bs5() {
        let e = edge("12345", "21345");
        let h = Embedder::global().subgraph_hamiltonian(&e, 0).unwrap();
        let none = HashSet::new();
        let (first, _) = crate::coupled::find_bridge(&h, SubgraphId(2), &none).unwrap();
        let forbidden = HashSet::from([first]);
        let (second, pair) = crate::coupled::find_bridge(&h, SubgraphId(2), &forbidden).unwrap();
        assert_ne!(first, second);
        assert!(h.contains_edge(&second));
        assert_eq!(pair.target(), SubgraphId(2));
    }

    #[test]
    fn identical_requests_are_byte_identical_across_instances() {
        let e = edge("31245", "13245");
        let a = Embedder::new();
        let b = Embedder::new();
        for l in [4, 24, 26, 50, 118, 120] {
            let req = EmbedRequest::new(e, l, 4).unwrap();
            assert_eq!(a.embed(&req).unwrap(), b.embed(&req).unwrap());
        }
    }

    #[test]
    fn more_than_four_when_available() {
        let e = edge("12345", "13245");
        check(&e, 60, 6);
    }
}
