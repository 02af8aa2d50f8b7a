//! Bipancyclicity sweeps: run the embedder over many (edge, length) cases
//! and re-check every certificate it returns.

use std::collections::HashSet;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{pairwise_distinct, validate};
use crate::embed::{EmbedRequest, Embedder};
use crate::error::{Error, Result};
use crate::perm::{check_dimension, factorial, Permutation};
use crate::topology::{all_edges, count_edges, generator_swaps, EdgeRef};

/// Edge lists larger than this are sampled without materializing them.
const MATERIALIZE_LIMIT: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeSelection {
    All,
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LengthSelection {
    AllEven,
    List(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n: usize,
    pub edges: EdgeSelection,
    pub lengths: LengthSelection,
    pub required: usize,
    pub workers: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SweepFailure {
    pub edge: String,
    pub length: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub cases: usize,
    pub edges_checked: usize,
    pub lengths: Vec<usize>,
    pub required: usize,
    /// Certificates validated across all cases.
    pub certificates: usize,
    /// Fewest distinct certificates produced by any case.
    pub min_certificates: usize,
    pub failures: Vec<SweepFailure>,
    pub seed: Option<u64>,
    pub passed: bool,
    /// Every vertex was an endpoint of a checked edge and every even length passed.
    pub vertex_bipancyclic: bool,
    /// Some edge passed at every even length.
    pub bipancyclic: bool,
    pub elapsed_ms: u64,
}

impl SweepReport {
    /// The report as JSON with the timing field zeroed, for comparisons.
    pub fn to_json_without_timing(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_ms = 0;
        serde_json::to_string(&copy).expect("report serializes")
    }
}

fn select_edges(n: usize, selection: &EdgeSelection) -> Result<Vec<EdgeRef>> {
    match *selection {
        EdgeSelection::All => all_edges(n),
        EdgeSelection::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let total = count_edges(n)?;
            if total <= MATERIALIZE_LIMIT {
                let edges = all_edges(n)?;
                let mut picked = sample(&mut rng, edges.len(), count.min(edges.len())).into_vec();
                picked.sort_unstable();
                return Ok(picked.into_iter().map(|k| edges[k]).collect());
            }
            let vertices = factorial(n).ok_or(Error::Overflow("n!", n))?;
            let gens: Vec<_> = generator_swaps(n).collect();
            let mut seen = HashSet::new();
            let mut out = Vec::with_capacity(count);
            while out.len() < count {
                let x = Permutation::unrank(n, rng.gen_range(0..vertices))?;
                let (i, j) = gens[rng.gen_range(0..gens.len())];
                let e = EdgeRef::new(x, x.swapped(i, j))?;
                if seen.insert(e) {
                    out.push(e);
                }
            }
            out.sort();
            Ok(out)
        }
    }
}

fn select_lengths(n: usize, selection: &LengthSelection) -> Result<Vec<usize>> {
    let total = factorial(n).ok_or(Error::Overflow("n!", n))? as usize;
    match selection {
        LengthSelection::AllEven => Ok((4..=total).step_by(2).collect()),
        LengthSelection::List(list) => {
            let mut out = list.clone();
            out.sort_unstable();
            out.dedup();
            if let Some(&bad) = out.iter().find(|&&l| l < 4 || l > total || l % 2 == 1) {
                return Err(Error::Length { n, length: bad });
            }
            Ok(out)
        }
    }
}

/// Checks one case, returning the number of certificates or the reason it failed.
fn check_case(embedder: &Embedder, e: &EdgeRef, length: usize, required: usize) -> Result<usize, String> {
    let req = EmbedRequest::new(*e, length, required).map_err(|err| err.to_string())?;
    let cycles = embedder.embed(&req).map_err(|err| err.to_string())?;
    for c in &cycles {
        validate(c, Some(e), Some(length)).map_err(|v| v.to_string())?;
    }
    if !pairwise_distinct(&cycles) {
        return Err("certificates are not pairwise distinct".into());
    }
    if cycles.len() < required {
        return Err(format!("{} certificates, {required} required", cycles.len()));
    }
    Ok(cycles.len())
}

/// Runs every selected (edge, length) case on a pool of `config.workers`
/// threads. Case failures are recorded in the report, not returned as errors.
pub fn sweep(config: &SweepConfig, embedder: &Embedder) -> Result<SweepReport> {
    let started = Instant::now();
    let n = config.n;
    check_dimension(n)?;
    if n < 3 {
        return Err(Error::Dimension(n));
    }
    let edges = select_edges(n, &config.edges)?;
    let lengths = select_lengths(n, &config.lengths)?;
    let cases: Vec<(EdgeRef, usize)> = edges
        .iter()
        .flat_map(|e| lengths.iter().map(move |&l| (*e, l)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|err| Error::Precondition(format!("thread pool: {err}")))?;
    let outcomes: Vec<Result<usize, String>> = pool.install(|| {
        cases
            .par_iter()
            .map(|(e, l)| check_case(embedder, e, *l, config.required))
            .collect()
    });

    let mut failures = Vec::new();
    let mut certificates = 0;
    let mut min_certificates = usize::MAX;
    let mut failed_edges = HashSet::new();
    for ((e, l), outcome) in cases.iter().zip(outcomes) {
        match outcome {
            Ok(k) => {
                certificates += k;
                min_certificates = min_certificates.min(k);
            }
            Err(reason) => {
                min_certificates = 0;
                failed_edges.insert(*e);
                failures.push(SweepFailure {
                    edge: e.to_string(),
                    length: *l,
                    reason,
                });
            }
        }
    }
    failures.sort();

    let all_lengths = lengths == select_lengths(n, &LengthSelection::AllEven)?;
    let covered: HashSet<Permutation> = edges
        .iter()
        .filter(|e| !failed_edges.contains(*e))
        .flat_map(|e| [e.u(), e.v()])
        .collect();
    let seed = match config.edges {
        EdgeSelection::Sample { seed, .. } => Some(seed),
        EdgeSelection::All => None,
    };
    Ok(SweepReport {
        n,
        cases: cases.len(),
        edges_checked: edges.len(),
        lengths,
        required: config.required,
        certificates,
        min_certificates: if cases.is_empty() { 0 } else { min_certificates },
        passed: failures.is_empty(),
        vertex_bipancyclic: all_lengths && covered.len() as u64 == factorial(n).unwrap_or(0),
        bipancyclic: all_lengths && !covered.is_empty(),
        failures,
        seed,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}
