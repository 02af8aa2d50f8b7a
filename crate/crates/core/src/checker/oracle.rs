//! Brute-force cycle enumeration through a fixed edge.
//!
//! Plain depth-first search over simple paths, pruned only by graph
//! distance. It shares no code with the constructive embedder and serves as
//! the reference it is checked against.

use std::collections::{HashMap, HashSet, VecDeque};

use super::canonical_vertices;
use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::topology::{neighbors, EdgeRef};

/// Enumeration is unguarded for `n <= ORACLE_MAX_FREE_N` or for lengths up
/// to `ORACLE_MAX_FREE_LENGTH`.
pub const ORACLE_MAX_FREE_N: usize = 5;
pub const ORACLE_MAX_FREE_LENGTH: usize = 12;

/// Dimensions for which a full distance table is built for pruning.
const DISTANCE_TABLE_MAX_N: usize = 7;

#[derive(Debug, Clone, Copy, Default)]
pub struct EnumerateOptions {
    /// Stop after this many cycles; `None` enumerates everything.
    pub limit: Option<usize>,
    /// Bypass the tractability guard.
    pub force: bool,
}

impl EnumerateOptions {
    pub fn exhaustive() -> Self {
        Self::default()
    }

    pub fn limit(limit: usize) -> Self {
        EnumerateOptions {
            limit: Some(limit),
            force: false,
        }
    }
}

/// All cycles of length `length` through `e` (up to `opts.limit`), as
/// canonical forms in discovery order.
pub fn enumerate_cycles(
    e: &EdgeRef,
    length: usize,
    opts: EnumerateOptions,
) -> Result<Vec<CycleWitness>> {
    let n = e.n();
    if length < 4 || length % 2 == 1 {
        return Err(Error::Length { n, length });
    }
    if !opts.force && n > ORACLE_MAX_FREE_N && length > ORACLE_MAX_FREE_LENGTH {
        return Err(Error::Intractable { n, length });
    }
    let (start, target) = (e.v(), e.u());
    let dist = (n <= DISTANCE_TABLE_MAX_N).then(|| distances_from(target));

    let mut search = Search {
        target,
        length,
        limit: opts.limit.unwrap_or(usize::MAX),
        dist,
        path: vec![target, start],
        on_path: HashSet::from([target, start]),
        found: Vec::new(),
        seen: HashSet::new(),
    };
    if search.limit > 0 {
        search.extend();
    }
    Ok(search.found)
}

fn distances_from(root: Permutation) -> HashMap<Permutation, usize> {
    let mut dist = HashMap::from([(root, 0usize)]);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        for y in neighbors(&x) {
            dist.entry(y).or_insert_with(|| {
                queue.push_back(y);
                d + 1
            });
        }
    }
    dist
}

struct Search {
    target: Permutation,
    length: usize,
    limit: usize,
    dist: Option<HashMap<Permutation, usize>>,
    /// `target, start, ...`: the cycle being built, closing back to `target`.
    path: Vec<Permutation>,
    on_path: HashSet<Permutation>,
    found: Vec<CycleWitness>,
    seen: HashSet<Vec<Permutation>>,
}

impl Search {
    /// Returns `true` once the limit is reached.
    fn extend(&mut self) -> bool {
        let tip = *self.path.last().unwrap();
        if self.path.len() == self.length {
            let closes = neighbors(&tip).contains(&self.target);
            if closes {
                let canon = canonical_vertices(&self.path);
                if self.seen.insert(canon.clone()) {
                    self.found.push(CycleWitness::from_vec_unchecked(canon));
                }
            }
            return self.found.len() >= self.limit;
        }
        // Steps still needed after moving to the next vertex.
        let remaining = self.length - self.path.len();
        for next in neighbors(&tip) {
            if self.on_path.contains(&next) {
                continue;
            }
            if let Some(dist) = &self.dist {
                if dist[&next] > remaining {
                    continue;
                }
            }
            self.path.push(next);
            self.on_path.insert(next);
            let done = self.extend();
            self.on_path.remove(&next);
            self.path.pop();
            if done {
                return true;
            }
        }
        false
    }
}
