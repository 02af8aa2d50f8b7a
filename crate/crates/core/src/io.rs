//! Stable text formats: edge literals, edge-list exports and cycle
//! certificates.
//!
//! Certificates are one JSON object per line:
//!
//! ```text
//! {"n":4,"length":4,"edge":["1234","1243"],"vertices":["1234","1243","2143","2134"]}
//! ```
//!
//! They carry everything needed to re-check the cycle without this crate.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::topology::{all_edges, count_edges, count_vertices, EdgeRef};

/// Parses `u:v`, failing if the two vertices are not adjacent.
pub fn parse_edge(text: &str) -> Result<EdgeRef> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(text.to_string(), "expected u:v"))?;
    EdgeRef::new(a.parse()?, b.parse()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub length: usize,
    pub edge: [Permutation; 2],
    pub vertices: Vec<Permutation>,
}

impl Certificate {
    pub fn new(edge: &EdgeRef, cycle: &CycleWitness) -> Self {
        Certificate {
            n: cycle.n(),
            length: cycle.len(),
            edge: [edge.u(), edge.v()],
            vertices: cycle.vertices().to_vec(),
        }
    }

    pub fn edge_ref(&self) -> Result<EdgeRef> {
        EdgeRef::new(self.edge[0], self.edge[1])
    }

    pub fn cycle(&self) -> Result<CycleWitness> {
        CycleWitness::new(self.vertices.clone())
    }
}

pub fn write_certificates<W: Write>(mut out: W, certs: &[Certificate]) -> std::io::Result<()> {
    for cert in certs {
        serde_json::to_writer(&mut out, cert)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads certificates, skipping blank lines. Errors name the offending line.
pub fn read_certificates<R: BufRead>(input: R) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line.map_err(|err| Error::Precondition(format!("line {}: {err}", k + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        let cert: Certificate = serde_json::from_str(&line)
            .map_err(|_| Error::Parse(format!("line {}", k + 1), "malformed certificate"))?;
        certs.push(cert);
    }
    Ok(certs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeListFormat {
    /// `# bs n=.. vertices=.. edges=..` then one `u<TAB>v` line per edge.
    EdgeList,
    /// One `{"u": .., "v": .., "class": ..}` object per line.
    Jsonl,
}

#[derive(Serialize)]
struct EdgeRecord {
    u: Permutation,
    v: Permutation,
    class: String,
}

/// Writes every edge of `BS_n` sorted by `(rank(u), rank(v))`.
pub fn write_edge_list<W: Write>(n: usize, format: EdgeListFormat, mut out: W) -> Result<()> {
    let io = |err: std::io::Error| Error::Precondition(format!("write failed: {err}"));
    let edges = all_edges(n)?;
    match format {
        EdgeListFormat::EdgeList => {
            writeln!(
                out,
                "# bs n={n} vertices={} edges={}",
                count_vertices(n)?,
                count_edges(n)?
            )
            .map_err(io)?;
            for e in &edges {
                writeln!(out, "{}\t{}", e.u(), e.v()).map_err(io)?;
            }
        }
        EdgeListFormat::Jsonl => {
            for e in &edges {
                let rec = EdgeRecord {
                    u: e.u(),
                    v: e.v(),
                    class: e.class().to_string(),
                };
                serde_json::to_writer(&mut out, &rec).map_err(|err| io(err.into()))?;
                out.write_all(b"\n").map_err(io)?;
            }
        }
    }
    Ok(())
}
