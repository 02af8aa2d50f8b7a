//! End-to-end acceptance checks. Runs without the libtest harness and prints
//! one `PASS`/`FAIL` line per criterion; exits non-zero if any fails.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::Hasher;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bsgraph_core::checker::{
    canonical_form, enumerate_cycles, pairwise_distinct, sweep, validate, EdgeSelection,
    EnumerateOptions, LengthSelection, SweepConfig,
};
use bsgraph_core::io::{write_certificates, Certificate};
use bsgraph_core::topology::{
    all_edges, bipartition_sizes, classify_edge, inject, is_adjacent, neighbors, project,
};
use bsgraph_core::{CycleWitness, EdgeRef, EmbedRequest, Embedder, Parity, Permutation, SubgraphId};

const FIXTURES: &str = include_str!("../data/fixtures.jsonl");

type Outcome = Result<String, String>;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn within(limit: Duration, started: Instant) -> Result<Duration, String> {
    let took = started.elapsed();
    if took > limit {
        return Err(format!("took {took:.2?}, limit {limit:?}"));
    }
    Ok(took)
}

/// Embeds and re-checks one case, appending the certificates to `sink`.
fn checked_embed(
    embedder: &Embedder,
    e: &EdgeRef,
    length: usize,
    required: usize,
    sink: &mut Vec<u8>,
) -> Result<Vec<CycleWitness>, String> {
    let req = EmbedRequest::new(*e, length, required).map_err(|err| err.to_string())?;
    let cycles = embedder.embed(&req).map_err(|err| format!("{e} l={length}: {err}"))?;
    for c in &cycles {
        validate(c, Some(e), Some(length)).map_err(|v| format!("{e} l={length}: {v}"))?;
    }
    if cycles.len() < required || !pairwise_distinct(&cycles) {
        return Err(format!("{e} l={length}: {} distinct certificates", cycles.len()));
    }
    let certs: Vec<Certificate> = cycles.iter().map(|c| Certificate::new(e, c)).collect();
    write_certificates(&mut *sink, &certs).map_err(|err| err.to_string())?;
    Ok(cycles)
}

fn criterion_1(embedder: &Embedder, sink: &mut Vec<u8>) -> Outcome {
    let started = Instant::now();
    let edges = all_edges(3).map_err(|e| e.to_string())?;
    for e in &edges {
        for l in [4, 6] {
            let found = enumerate_cycles(e, l, EnumerateOptions::exhaustive())
                .map_err(|err| err.to_string())?;
            if found.len() != 4 {
                return Err(format!("oracle found {} cycles for {e} l={l}", found.len()));
            }
            let got = checked_embed(embedder, e, l, 4, sink)?;
            if got.len() != 4 {
                return Err(format!("embed returned {} for {e} l={l}", got.len()));
            }
        }
    }
    let took = within(Duration::from_secs(1), started)?;
    Ok(format!("{} edges x 2 lengths in {took:.2?}", edges.len()))
}

fn criterion_2(embedder: &Embedder, sink: &mut Vec<u8>) -> Outcome {
    let started = Instant::now();
    let edges = all_edges(4).map_err(|e| e.to_string())?;
    let mut cases = 0;
    for e in &edges {
        for l in (4..=24).step_by(2) {
            checked_embed(embedder, e, l, 4, sink)?;
            cases += 1;
        }
    }
    if cases != 660 {
        return Err(format!("{cases} cases"));
    }
    let took = within(Duration::from_secs(30), started)?;
    Ok(format!("{cases} cases in {took:.2?}"))
}

fn fixture_cycles() -> Result<Vec<(String, EdgeRef, CycleWitness)>, String> {
    let mut out = Vec::new();
    for line in FIXTURES.lines().filter(|l| !l.trim().is_empty()) {
        let v: serde_json::Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
        let text = |x: &serde_json::Value| x.as_str().map(p).ok_or("expected a string");
        let edge = v["edge"].as_array().ok_or("missing edge")?;
        let e = EdgeRef::new(text(&edge[0])?, text(&edge[1])?).map_err(|e| e.to_string())?;
        let vertices = v["vertices"]
            .as_array()
            .ok_or("missing vertices")?
            .iter()
            .map(text)
            .collect::<Result<Vec<_>, _>>()?;
        let c = CycleWitness::new(vertices).map_err(|e| e.to_string())?;
        let label = format!("table {} {}", v["table"], v["row"]);
        out.push((label, e, c));
    }
    Ok(out)
}

/// 4-cycles through `(u, u-)` and `(u, u+)` at `u = 12345`.
fn cross_squares() -> Vec<(String, EdgeRef, CycleWitness)> {
    let rows: [(&str, [&str; 4]); 8] = [
        ("minus (1,2)", ["12345", "12354", "21354", "21345"]),
        ("minus (1,3)", ["12345", "12354", "32154", "32145"]),
        ("minus (2,3)", ["12345", "12354", "13254", "13245"]),
        ("minus (1,4)", ["12345", "12354", "52314", "42315"]),
        ("plus (2,3)", ["12345", "52341", "53241", "13245"]),
        ("plus (3,4)", ["12345", "52341", "52431", "12435"]),
        ("plus (4,5)", ["12345", "52341", "52314", "12354"]),
        ("plus special", ["12345", "52341", "52314", "42315"]),
    ];
    rows.iter()
        .map(|(label, vs)| {
            let c = CycleWitness::new(vs.iter().map(|s| p(s)).collect()).unwrap();
            let e = EdgeRef::new(p(vs[0]), p(vs[1])).unwrap();
            (label.to_string(), e, c)
        })
        .collect()
}

fn criterion_3() -> Outcome {
    let started = Instant::now();
    let fixtures = fixture_cycles()?;
    if fixtures.len() != 16 {
        return Err(format!("{} fixture rows", fixtures.len()));
    }
    let squares = cross_squares();
    for (label, e, c) in fixtures.iter().chain(&squares) {
        validate(c, Some(e), None).map_err(|v| format!("{label}: {v}"))?;
    }
    let minus: Vec<_> = squares[..4].iter().map(|s| s.2.clone()).collect();
    let plus: Vec<_> = squares[4..].iter().map(|s| s.2.clone()).collect();
    if !pairwise_distinct(&minus) || !pairwise_distinct(&plus) {
        return Err("cross squares are not distinct".into());
    }
    let took = within(Duration::from_secs(1), started)?;
    Ok(format!("{} fixture rows and {} squares in {took:.2?}", fixtures.len(), squares.len()))
}

fn criterion_4(embedder: &Embedder, sink: &mut Vec<u8>) -> Outcome {
    let started = Instant::now();
    let mut checked = 0;
    for e in &all_edges(4).map_err(|e| e.to_string())? {
        for l in (4..=12).step_by(2) {
            let oracle: HashSet<CycleWitness> = enumerate_cycles(e, l, EnumerateOptions::exhaustive())
                .map_err(|err| err.to_string())?
                .iter()
                .map(canonical_form)
                .collect();
            for c in checked_embed(embedder, e, l, 4, sink)? {
                if !oracle.contains(&canonical_form(&c)) {
                    return Err(format!("{e} l={l}: certificate {c} not enumerated"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} certificates found by the oracle in {:.2?}", started.elapsed()))
}

fn sweep_report(embedder: &Embedder, config: &SweepConfig, limit: Duration) -> Result<(String, String), String> {
    let started = Instant::now();
    let report = sweep(config, embedder).map_err(|e| e.to_string())?;
    if !report.passed {
        return Err(format!(
            "{} failures, first: {:?}",
            report.failures.len(),
            report.failures.first()
        ));
    }
    let took = within(limit, started)?;
    Ok((
        format!(
            "{} cases, {} certificates, min {} per case, {took:.2?}",
            report.cases, report.certificates, report.min_certificates
        ),
        report.to_json_without_timing(),
    ))
}

fn criterion_5(embedder: &Embedder) -> Result<(String, String), String> {
    let config = SweepConfig {
        n: 5,
        edges: EdgeSelection::All,
        lengths: LengthSelection::AllEven,
        required: 4,
        workers: 8,
    };
    let (line, json) = sweep_report(embedder, &config, Duration::from_secs(300))?;
    if !json.contains("\"cases\":24780") || !json.contains("\"vertex_bipancyclic\":true") {
        return Err(format!("unexpected report {json}"));
    }
    Ok((line, json))
}

fn criterion_6(embedder: &Embedder) -> Outcome {
    let config = SweepConfig {
        n: 6,
        edges: EdgeSelection::Sample { count: 50, seed: 2024 },
        lengths: LengthSelection::AllEven,
        required: 4,
        workers: 8,
    };
    let (line, json) = sweep_report(embedder, &config, Duration::from_secs(900))?;
    if !json.contains("\"cases\":17950") {
        return Err(format!("unexpected report {json}"));
    }
    Ok(line)
}

fn criterion_7(embedder: &Embedder) -> Outcome {
    let started = Instant::now();
    let mut lengths = Vec::new();
    for (a, b) in [("12345", "21345"), ("123456", "123465"), ("1234567", "7234561")] {
        let e = EdgeRef::new(p(a), p(b)).map_err(|e| e.to_string())?;
        let h = embedder.hamiltonian(&e).map_err(|err| format!("{e}: {err}"))?;
        let total = (1..=e.n()).product::<usize>();
        validate(&h, Some(&e), Some(total)).map_err(|v| format!("{e}: {v}"))?;
        lengths.push(h.len());
    }
    let took = within(Duration::from_secs(30), started)?;
    Ok(format!("lengths {lengths:?} in {took:.2?}"))
}

fn criterion_8() -> Outcome {
    for n in 2..=6 {
        let vertices: Vec<Permutation> = Permutation::all(n).map_err(|e| e.to_string())?.collect();
        let even = vertices.iter().filter(|x| x.parity() == Parity::Even).count() as u64;
        let (a, b) = bipartition_sizes(n).map_err(|e| e.to_string())?;
        if (even, vertices.len() as u64 - even) != (a, b) || a != b {
            return Err(format!("n={n}: bipartition {even} / {}", vertices.len() as u64 - even));
        }
        for x in &vertices {
            let nbrs: HashSet<Permutation> = neighbors(x).into_iter().collect();
            if nbrs.len() != 2 * n - 3 {
                return Err(format!("n={n}: {x} has degree {}", nbrs.len()));
            }
            if let Some(y) = nbrs.iter().find(|y| y.parity() == x.parity()) {
                return Err(format!("n={n}: edge {x}-{y} joins equal parities"));
            }
        }
        if !(3..=5).contains(&n) {
            continue;
        }
        let smaller: Vec<Permutation> = Permutation::all(n - 1).map_err(|e| e.to_string())?.collect();
        for i in 1..=n as u8 {
            let id = SubgraphId(i);
            let part: Vec<Permutation> = vertices.iter().filter(|x| x.last() == i).copied().collect();
            let image: HashSet<Permutation> =
                part.iter().map(|x| project(x, id).unwrap()).collect();
            if image.len() != smaller.len() {
                return Err(format!("n={n}: projection of BS_n({i}) is not a bijection"));
            }
            for x in &part {
                if inject(&project(x, id).unwrap(), id).unwrap() != *x {
                    return Err(format!("n={n}: {x} does not round-trip"));
                }
            }
            for x in &part {
                for y in &part {
                    let (px, py) = (project(x, id).unwrap(), project(y, id).unwrap());
                    if is_adjacent(x, y) != is_adjacent(&px, &py) {
                        return Err(format!("n={n}: adjacency of {x},{y} not preserved"));
                    }
                }
            }
        }
        for e in all_edges(n).map_err(|e| e.to_string())? {
            classify_edge(e.u(), e.v()).map_err(|err| err.to_string())?;
        }
    }
    Ok("n = 2..6".into())
}

/// Certificate bytes and the n = 5 report from one fresh run of criteria 1 to 5.
fn deterministic_run() -> Result<(Vec<u8>, String), String> {
    let embedder = Embedder::new();
    let mut sink = Vec::new();
    criterion_1(&embedder, &mut sink)?;
    criterion_2(&embedder, &mut sink)?;
    criterion_4(&embedder, &mut sink)?;
    let (_, report) = criterion_5(&embedder)?;
    let mut five = Vec::new();
    for e in &all_edges(5).map_err(|e| e.to_string())? {
        for l in (4..=120).step_by(2) {
            checked_embed(&embedder, e, l, 4, &mut five)?;
        }
    }
    let mut h = DefaultHasher::new();
    h.write(&five);
    sink.extend_from_slice(format!("n=5 certificates {:016x} {}\n", h.finish(), five.len()).as_bytes());
    Ok((sink, report))
}

fn criterion_9() -> Outcome {
    let (a, ra) = deterministic_run()?;
    let (b, rb) = deterministic_run()?;
    if a != b {
        return Err("certificate files differ between runs".into());
    }
    if ra != rb {
        return Err("sweep reports differ between runs".into());
    }
    Ok(format!("{} certificate bytes identical across runs", a.len()))
}

fn main() -> ExitCode {
    let embedder = Embedder::new();
    let mut sink = Vec::new();
    let results: Vec<(u8, Outcome)> = vec![
        (1, criterion_1(&embedder, &mut sink)),
        (2, criterion_2(&embedder, &mut sink)),
        (3, criterion_3()),
        (4, criterion_4(&embedder, &mut sink)),
        (5, criterion_5(&embedder).map(|(line, _)| line)),
        (6, criterion_6(&embedder)),
        (7, criterion_7(&embedder)),
        (8, criterion_8()),
        (9, criterion_9()),
    ];
    let mut failed = 0;
    for (k, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {k}: PASS ({detail})"),
            Err(reason) => {
                failed += 1;
                println!("criterion {k}: FAIL ({reason})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
