use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bsgraph_core::checker::{
    enumerate_cycles, sweep, validate, EdgeSelection, EnumerateOptions, LengthSelection,
    SweepConfig,
};
use bsgraph_core::io::{
    parse_edge, read_certificates, write_certificates, write_edge_list, Certificate,
    EdgeListFormat,
};
use bsgraph_core::topology::{count_edges, count_vertices};
use bsgraph_core::{EdgeRef, EmbedRequest, Embedder, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const DEFAULT_MAX_N: usize = 10;
const GEN_MAX_N: usize = 8;

/// Bubble-sort star graphs: edge lists, cycle certificates and sweeps.
#[derive(Parser, Debug)]
#[command(name = "bsgraph", version)]
struct Cli {
    /// Largest n accepted by any command (default 10, or $BST_MAX_N).
    #[arg(long, global = true)]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write every edge of BS_n.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct cycles of a given length through an edge.
    Embed {
        #[arg(long)]
        n: usize,
        /// Edge as `u:v`, e.g. 1234:1324.
        #[arg(long)]
        edge: String,
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 4)]
        count: usize,
        /// Certificate file (JSONL); stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate cycles through an edge by brute force.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edge: String,
        #[arg(long)]
        length: usize,
        /// Stop after this many cycles.
        #[arg(long)]
        limit: Option<usize>,
        /// Run even when the search is expected to be intractable.
        #[arg(long)]
        force: bool,
    },
    /// Re-check a certificate file from scratch.
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Require every certificate to pass through this edge.
        #[arg(long)]
        edge: Option<String>,
        /// Require every certificate to have this length.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Embed and verify many (edge, length) cases in parallel.
    Sweep {
        #[arg(long)]
        n: usize,
        /// `all` or `sample:K:SEED`.
        #[arg(long, default_value = "all")]
        edges: String,
        /// `all` or a comma-separated list of even lengths.
        #[arg(long, default_value = "all")]
        lengths: String,
        #[arg(long, default_value_t = 4)]
        require: usize,
        #[arg(long, default_value_t = default_workers())]
        workers: usize,
    },
    /// Print vertex, degree and edge counts.
    Info {
        #[arg(long)]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Edgelist,
    Jsonl,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |k| k.get())
}

enum Failure {
    Usage(String),
    Violations(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Validation(_) | Error::Insufficient { .. } => Failure::Violations(err.to_string()),
            _ => Failure::Usage(err.to_string()),
        }
    }
}

fn io_failure(err: io::Error) -> Failure {
    Failure::Usage(err.to_string())
}

fn max_n(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(k) = flag {
        return Ok(k);
    }
    match std::env::var("BST_MAX_N") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("BST_MAX_N={text:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_n(n: usize, cap: usize) -> Result<(), Failure> {
    if n > cap {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the dimension cap {cap}; raise it with --max-n or BST_MAX_N"
        )));
    }
    Ok(())
}

fn edge_for(n: usize, text: &str) -> Result<EdgeRef, Failure> {
    let e = parse_edge(text)?;
    if e.n() != n {
        return Err(Failure::Usage(format!("edge {e} has n = {}, expected {n}", e.n())));
    }
    Ok(e)
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(io_failure)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_edges(text: &str) -> Result<EdgeSelection, Failure> {
    if text == "all" {
        return Ok(EdgeSelection::All);
    }
    let bad = || Failure::Usage(format!("--edges {text:?}: expected all or sample:K:SEED"));
    let mut parts = text.split(':');
    match (parts.next(), parts.next(), parts.next(), parts.next()) {
        (Some("sample"), Some(k), Some(seed), None) => Ok(EdgeSelection::Sample {
            count: k.parse().map_err(|_| bad())?,
            seed: seed.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

fn parse_lengths(text: &str) -> Result<LengthSelection, Failure> {
    if text == "all" {
        return Ok(LengthSelection::AllEven);
    }
    text.split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<Vec<usize>, _>>()
        .map(LengthSelection::List)
        .map_err(|_| Failure::Usage(format!("--lengths {text:?}: expected all or a list")))
}

fn echo(config: serde_json::Value) {
    eprintln!("config {config}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cap = max_n(cli.max_n)?;
    match cli.command {
        Command::Gen { n, format, out } => {
            echo(json!({"command": "gen", "n": n, "format": format!("{format:?}").to_lowercase(),
                "out": out, "max_n": cap}));
            check_n(n, cap)?;
            if n > GEN_MAX_N {
                return Err(Failure::Usage(format!(
                    "gen materializes every edge; n must be at most {GEN_MAX_N}"
                )));
            }
            let format = match format {
                Format::Edgelist => EdgeListFormat::EdgeList,
                Format::Jsonl => EdgeListFormat::Jsonl,
            };
            let mut w = output(&out)?;
            write_edge_list(n, format, &mut w)?;
            w.flush().map_err(io_failure)?;
        }
        Command::Embed { n, edge, length, count, out } => {
            echo(json!({"command": "embed", "n": n, "edge": edge, "length": length,
                "count": count, "out": out, "max_n": cap}));
            check_n(n, cap)?;
            let e = edge_for(n, &edge)?;
            let req = EmbedRequest::new(e, length, count)?;
            let cycles = Embedder::global().embed(&req)?;
            for c in &cycles {
                validate(c, Some(&e), Some(length))
                    .map_err(|v| Failure::Violations(format!("constructed cycle is invalid: {v}")))?;
            }
            let certs: Vec<Certificate> = cycles.iter().map(|c| Certificate::new(&e, c)).collect();
            let mut w = output(&out)?;
            write_certificates(&mut w, &certs).map_err(io_failure)?;
            w.flush().map_err(io_failure)?;
            eprintln!("embedded {} cycles of length {length} through {e} ({})", certs.len(), e.class());
        }
        Command::Oracle { n, edge, length, limit, force } => {
            echo(json!({"command": "oracle", "n": n, "edge": edge, "length": length,
                "limit": limit, "force": force, "max_n": cap}));
            check_n(n, cap)?;
            let e = edge_for(n, &edge)?;
            let opts = EnumerateOptions { limit, force };
            let cycles = enumerate_cycles(&e, length, opts)?;
            let certs: Vec<Certificate> = cycles.iter().map(|c| Certificate::new(&e, c)).collect();
            let mut w = output(&None)?;
            write_certificates(&mut w, &certs).map_err(io_failure)?;
            w.flush().map_err(io_failure)?;
            eprintln!("found {} cycles of length {length} through {e}", certs.len());
        }
        Command::Verify { file, edge, length } => {
            echo(json!({"command": "verify", "file": file, "edge": edge, "length": length,
                "max_n": cap}));
            let expect = edge.as_deref().map(parse_edge).transpose()?;
            let reader = BufReader::new(File::open(&file).map_err(io_failure)?);
            let certs = read_certificates(reader).map_err(|err| Failure::Violations(err.to_string()))?;
            let mut bad = 0;
            for (k, cert) in certs.iter().enumerate() {
                if let Err(reason) = verify_one(cert, expect.as_ref(), length) {
                    bad += 1;
                    println!("certificate {}: {reason}", k + 1);
                }
            }
            println!("{} certificates, {bad} invalid", certs.len());
            if bad > 0 {
                return Err(Failure::Violations(format!("{bad} invalid certificates")));
            }
        }
        Command::Sweep { n, edges, lengths, require, workers } => {
            echo(json!({"command": "sweep", "n": n, "edges": edges, "lengths": lengths,
                "require": require, "workers": workers, "max_n": cap}));
            check_n(n, cap)?;
            let config = SweepConfig {
                n,
                edges: parse_edges(&edges)?,
                lengths: parse_lengths(&lengths)?,
                required: require,
                workers,
            };
            let report = sweep(&config, Embedder::global())?;
            println!("{}", serde_json::to_string(&report).expect("report serializes"));
            if !report.passed {
                return Err(Failure::Violations(format!("{} failing cases", report.failures.len())));
            }
        }
        Command::Info { n } => {
            echo(json!({"command": "info", "n": n, "max_n": cap}));
            check_n(n, cap)?;
            let vertices = count_vertices(n)?;
            let degree = if n == 2 { 1 } else { 2 * n - 3 };
            println!("vertices {vertices}");
            println!("degree {degree}");
            println!("edges {}", count_edges(n)?);
        }
    }
    Ok(())
}

/// Checks one certificate using only its own contents and the caller's
/// expectations.
fn verify_one(cert: &Certificate, edge: Option<&EdgeRef>, length: Option<usize>) -> Result<(), String> {
    let e = cert.edge_ref().map_err(|err| err.to_string())?;
    if let Some(want) = edge {
        if *want != e {
            return Err(format!("edge {e}, expected {want}"));
        }
    }
    if let Some(want) = length {
        if cert.length != want {
            return Err(format!("length {}, expected {want}", cert.length));
        }
    }
    if cert.vertices.iter().any(|x| x.n() != cert.n) || e.n() != cert.n {
        return Err(format!("dimension does not match n = {}", cert.n));
    }
    let c = cert.cycle().map_err(|err| err.to_string())?;
    validate(&c, Some(&e), Some(cert.length)).map_err(|v| v.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
