//! Ground-truth cycles for the smallest dimensions.
//!
//! `BS_3` and `BS_4` are small enough (6 and 24 vertices) that cycles of any
//! length through any edge are found by bounded search over a precomputed
//! adjacency table. Results are memoized per canonical edge and relabeled
//! back on demand. The printed tables of 8-cycles and 4-cycles in `BS_4`
//! ship as a data file and are exposed through [`load_fixtures`].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Deserialize;

use crate::checker::{canonical_vertices, validate};
use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};
use crate::topology::{canonicalize_edge, neighbors, EdgeRef};

const FIXTURES: &str = include_str!("../data/fixtures.jsonl");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureTable {
    pub name: String,
    pub target_edge: EdgeRef,
    pub rows: Vec<(String, CycleWitness)>,
}

#[derive(Deserialize)]
struct FixtureRecord {
    table: String,
    row: String,
    edge: [Permutation; 2],
    vertices: Vec<Permutation>,
}

/// Parses a fixture file (JSONL, one cycle per line with its table label).
/// Every row is validated as a cycle through its table's edge.
pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureTable>> {
    let mut tables: Vec<FixtureTable> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: FixtureRecord = serde_json::from_str(line)
            .map_err(|err| Error::Fixture(format!("line {}", lineno + 1), err.to_string()))?;
        let edge = EdgeRef::new(rec.edge[0], rec.edge[1])
            .map_err(|err| Error::Fixture(rec.row.clone(), err.to_string()))?;
        let cycle = CycleWitness::new(rec.vertices)?;
        validate(&cycle, Some(&edge), None)
            .map_err(|v| Error::Fixture(rec.row.clone(), v.to_string()))?;
        match tables.iter_mut().find(|t| t.name == rec.table) {
            Some(t) if t.target_edge != edge => {
                return Err(Error::Fixture(rec.row, "edge differs from its table".into()));
            }
            Some(t) => t.rows.push((rec.row, cycle)),
            None => tables.push(FixtureTable {
                name: rec.table,
                target_edge: edge,
                rows: vec![(rec.row, cycle)],
            }),
        }
    }
    for t in &tables {
        let mut forms: Vec<_> = t.rows.iter().map(|(_, c)| canonical_vertices(c.vertices())).collect();
        forms.sort();
        forms.dedup();
        if forms.len() != t.rows.len() {
            return Err(Error::Fixture(t.name.clone(), "duplicate rows".into()));
        }
    }
    Ok(tables)
}

/// The bundled tables of 8-cycles through `(1234,1324)` and `(1234,3214)`
/// and 4-cycles through `(1234,1243)` and `(1234,4231)`.
pub fn load_fixtures() -> Result<Vec<FixtureTable>> {
    parse_fixtures(FIXTURES)
}

/// Vertex-indexed adjacency of a small `BS_n`, indices being ranks.
struct SmallGraph {
    vertices: Vec<Permutation>,
    adj: Vec<Vec<usize>>,
}

impl SmallGraph {
    fn build(n: usize) -> Self {
        let vertices: Vec<Permutation> = Permutation::all(n).expect("small n").collect();
        let adj = vertices
            .iter()
            .map(|x| neighbors(x).iter().map(|y| y.rank() as usize).collect())
            .collect();
        SmallGraph { vertices, adj }
    }

    fn distances_to(&self, target: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[target] = 0;
        let mut frontier = vec![target];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = d;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        dist
    }
}

fn small_graph(n: usize) -> &'static SmallGraph {
    static BS3: OnceLock<SmallGraph> = OnceLock::new();
    static BS4: OnceLock<SmallGraph> = OnceLock::new();
    match n {
        3 => BS3.get_or_init(|| SmallGraph::build(3)),
        4 => BS4.get_or_init(|| SmallGraph::build(4)),
        _ => unreachable!("base graphs exist only for n = 3, 4"),
    }
}

/// Cycles found for one canonical request, and whether the search ran to
/// completion (so a short list means there are no more).
#[derive(Clone)]
struct Found {
    cycles: Arc<Vec<Vec<usize>>>,
    complete: bool,
}

type Cache = RwLock<HashMap<(usize, Permutation, usize), Found>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Depth-first search for `limit` cycles of exactly `length` vertices
/// through the edge `(a, b)`, as rank sequences starting `a, b, ...`.
fn search(g: &SmallGraph, a: usize, b: usize, length: usize, limit: usize) -> Found {
    let dist = g.distances_to(a);
    let mut out = Vec::new();
    let mut path = vec![a, b];
    let mut used: u32 = (1 << a) | (1 << b);

    fn go(
        g: &SmallGraph,
        dist: &[usize],
        length: usize,
        limit: usize,
        path: &mut Vec<usize>,
        used: &mut u32,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        let tip = *path.last().unwrap();
        let a = path[0];
        if path.len() == length {
            if g.adj[tip].contains(&a) {
                out.push(path.clone());
            }
            return out.len() >= limit;
        }
        let left = length - path.len();
        for &y in &g.adj[tip] {
            if *used & (1 << y) != 0 || dist[y] > left {
                continue;
            }
            path.push(y);
            *used |= 1 << y;
            if go(g, dist, length, limit, path, used, out) {
                return true;
            }
            *used &= !(1 << y);
            path.pop();
        }
        false
    }

    let hit_limit = limit == 0 || go(g, &dist, length, limit, &mut path, &mut used, &mut out);
    Found {
        cycles: Arc::new(out),
        complete: !hit_limit,
    }
}

/// At least `count` distinct cycles of length `length` through `e` in
/// `BS_3` or `BS_4`, as canonical forms in deterministic order.
pub fn base_cycles(e: &EdgeRef, length: usize, count: usize) -> Result<Vec<CycleWitness>> {
    let n = e.n();
    if !(3..=4).contains(&n) {
        return Err(Error::Precondition(format!("base cycles exist for n = 3, 4, not {n}")));
    }
    let total = factorial(n).unwrap() as usize;
    if length < 4 || length > total || length % 2 == 1 {
        return Err(Error::Length { n, length });
    }
    let (pi, canon) = canonicalize_edge(e);
    let key = (n, canon.v(), length);

    let cached = cache().read().unwrap().get(&key).cloned();
    let found = match cached {
        Some(f) if f.complete || f.cycles.len() >= count => f,
        _ => {
            let g = small_graph(n);
            let a = canon.u().rank() as usize;
            let b = canon.v().rank() as usize;
            let f = search(g, a, b, length, count.max(4));
            cache().write().unwrap().insert(key, f.clone());
            f
        }
    };
    if found.cycles.len() < count {
        return Err(Error::Insufficient {
            length,
            found: found.cycles.len(),
            required: count,
        });
    }
    let g = small_graph(n);
    let back = pi.inverse();
    Ok(found.cycles[..count]
        .iter()
        .map(|ranks| {
            let verts: Vec<Permutation> = ranks
                .iter()
                .map(|&r| g.vertices[r].relabel_unchecked(&back))
                .collect();
            CycleWitness::from_vec_unchecked(canonical_vertices(&verts))
        })
        .collect())
}
