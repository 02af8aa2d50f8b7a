//! Bubble-sort star graphs `BS_n` and certified cycle embedding.
//!
//! For any edge `e` of `BS_n` (`n >= 3`) and any even `l` with
//! `4 <= l <= n!`, [`embed`] constructs at least four distinct cycles of
//! length `l` through `e`. Every cycle is returned as a [`CycleWitness`]
//! that [`checker::validate`] can re-check from scratch, and
//! [`checker::enumerate_cycles`] provides an independent brute-force oracle
//! for small cases.
//!
//! ```
//! use bsgraph_core::{embed, EdgeRef, EmbedRequest};
//!
//! let e = EdgeRef::new("1234".parse()?, "1324".parse()?)?;
//! let cycles = embed(&EmbedRequest::new(e, 8, 4)?)?;
//! assert_eq!(cycles.len(), 4);
//! # Ok::<(), bsgraph_core::Error>(())
//! ```

pub mod base_cycles;
pub mod checker;
pub mod coupled;
pub mod cycle;
pub mod embed;
pub mod error;
pub mod io;
pub mod perm;
pub mod topology;

pub use cycle::CycleWitness;
pub use embed::{decompose_length, embed, hamiltonian, EmbedRequest, Embedder, DEFAULT_COUNT};
pub use error::{Error, Result};
pub use perm::{format_perm, parse_perm, Parity, Permutation, SwapOp};
pub use topology::{EdgeClass, EdgeRef, SubgraphId};
