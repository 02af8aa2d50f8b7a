//! Permutations of `1..=n`, the vertices of a bubble-sort star graph.
//!
//! A [`Permutation`] is a small `Copy` value: the symbols live inline in a
//! fixed array, so cycles of thousands of vertices stay cache friendly and
//! hashing is cheap. Positions are 1-based everywhere in the public API to
//! match the usual `x = x_1 x_2 ... x_n` notation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported dimension. `16!` still fits in a `u64` rank.
pub const MAX_N: usize = 16;

/// A permutation of the symbols `1..=n`.
///
/// Ordering is lexicographic on the symbol sequence, which coincides with
/// the Lehmer-code [`rank`](Permutation::rank) order for a fixed `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    symbols: [u8; MAX_N],
}

/// A transposition of two positions, `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwapOp {
    i: usize,
    j: usize,
}

impl SwapOp {
    /// Builds the swap of positions `a` and `b` (in either order).
    pub fn new(a: usize, b: usize) -> Result<Self> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == 0 || i == j || j > MAX_N {
            return Err(Error::SwapOutOfRange { i: a, j: b, n: MAX_N });
        }
        Ok(SwapOp { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

pub(crate) fn check_dimension(n: usize) -> Result<()> {
    if (2..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::Dimension(n))
    }
}

/// `n!` with overflow reported rather than wrapped.
pub fn factorial(n: usize) -> Option<u64> {
    (2..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_dimension(n)?;
        let mut symbols = [0u8; MAX_N];
        for (k, s) in symbols.iter_mut().take(n).enumerate() {
            *s = k as u8 + 1;
        }
        Ok(Permutation {
            n: n as u8,
            symbols,
        })
    }

    /// Builds a permutation from its one-line notation, checking that every
    /// symbol of `1..=n` appears exactly once.
    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        let n = symbols.len();
        check_dimension(n)?;
        let mut seen = [false; MAX_N + 1];
        for &s in symbols {
            let s = s as usize;
            if s == 0 || s > n || seen[s] {
                return Err(Error::Parse(
                    format_symbols(symbols),
                    "symbols must be a bijection on 1..=n",
                ));
            }
            seen[s] = true;
        }
        let mut buf = [0u8; MAX_N];
        buf[..n].copy_from_slice(symbols);
        Ok(Permutation {
            n: n as u8,
            symbols: buf,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn symbols(&self) -> &[u8] {
        &self.symbols[..self.n as usize]
    }

    /// Symbol at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> u8 {
        debug_assert!(pos >= 1 && pos <= self.n());
        self.symbols[pos - 1]
    }

    /// The last symbol, which names the subgraph `BS_n(i)` holding this vertex.
    #[inline]
    pub fn last(&self) -> u8 {
        self.symbols[self.n as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.symbols().iter().enumerate().all(|(k, &s)| s as usize == k + 1)
    }

    /// Exchanges positions `i` and `j` (1-based).
    ///
    /// Panics if either position is outside `1..=n`; use
    /// [`apply_swap`](Self::apply_swap) for checked input.
    #[inline]
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        assert!(
            i >= 1 && j >= 1 && i <= self.n() && j <= self.n(),
            "swap ({i},{j}) out of range for n = {}",
            self.n
        );
        let mut out = *self;
        out.symbols.swap(i - 1, j - 1);
        out
    }

    pub fn apply_swap(&self, op: SwapOp) -> Result<Self> {
        if op.j > self.n() {
            return Err(Error::SwapOutOfRange {
                i: op.i,
                j: op.j,
                n: self.n(),
            });
        }
        Ok(self.swapped(op.i, op.j))
    }

    pub fn parity(&self) -> Parity {
        // n minus the number of cycles is the transposition count.
        let n = self.n();
        let mut seen = [false; MAX_N];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.symbols[k] as usize - 1;
            }
        }
        if (n - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The inverse as a symbol map: `inverse()(self(k)) = k`.
    pub fn inverse(&self) -> Self {
        let mut out = *self;
        for (k, &s) in self.symbols().iter().enumerate() {
            out.symbols[s as usize - 1] = k as u8 + 1;
        }
        out
    }

    /// Replaces every symbol `s` with `map(s)`, reading `map` as the symbol map
    /// `s -> map.symbols()[s - 1]`.
    ///
    /// Position swaps commute with relabeling, so this is an automorphism of
    /// the graph.
    pub fn relabel(&self, map: &Permutation) -> Result<Self> {
        if map.n != self.n {
            return Err(Error::DimensionMismatch(self.n(), map.n()));
        }
        Ok(self.relabel_unchecked(map))
    }

    #[inline]
    pub(crate) fn relabel_unchecked(&self, map: &Permutation) -> Self {
        let mut out = *self;
        for s in out.symbols.iter_mut().take(self.n()) {
            *s = map.symbols[*s as usize - 1];
        }
        out
    }

    /// Lehmer-code rank in `0..n!`; the identity has rank 0.
    pub fn rank(&self) -> u64 {
        let n = self.n();
        let mut rank = 0u64;
        for k in 0..n {
            let smaller_after = self.symbols[k + 1..n]
                .iter()
                .filter(|&&s| s < self.symbols[k])
                .count() as u64;
            rank = rank * (n - k) as u64 + smaller_after;
        }
        rank
    }

    pub fn unrank(n: usize, rank: u64) -> Result<Self> {
        check_dimension(n)?;
        let total = factorial(n).ok_or(Error::Overflow("n!", n))?;
        if rank >= total {
            return Err(Error::RankOutOfRange { rank, n });
        }
        let mut digits = [0usize; MAX_N];
        let mut r = rank;
        for k in (0..n).rev() {
            let base = (n - k) as u64;
            digits[k] = (r % base) as usize;
            r /= base;
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut symbols = [0u8; MAX_N];
        for k in 0..n {
            symbols[k] = pool.remove(digits[k]);
        }
        Ok(Permutation {
            n: n as u8,
            symbols,
        })
    }

    /// All permutations of `1..=n` in rank order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Permutation>> {
        let total = factorial(n).ok_or(Error::Overflow("n!", n))?;
        check_dimension(n)?;
        Ok((0..total).map(move |r| Permutation::unrank(n, r).expect("rank in range")))
    }
}

fn format_symbols(symbols: &[u8]) -> String {
    if symbols.len() <= 9 && symbols.iter().all(|&s| (1..=9).contains(&s)) {
        symbols.iter().map(|&s| char::from(b'0' + s)).collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses `digits` (n <= 9) or a comma-separated integer list.
pub fn parse_perm(text: &str) -> Result<Permutation> {
    text.parse()
}

pub fn format_perm(x: &Permutation) -> String {
    x.to_string()
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols: Vec<u8> = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(text.to_string(), "expected an integer"))
                })
                .collect::<Result<_>>()?
        } else {
            if text.is_empty() {
                return Err(Error::Parse(text.to_string(), "empty permutation"));
            }
            text.bytes()
                .map(|b| match b {
                    b'1'..=b'9' => Ok(b - b'0'),
                    _ => Err(Error::Parse(text.to_string(), "expected digits 1-9")),
                })
                .collect::<Result<_>>()?
        };
        if symbols.len() > MAX_N || symbols.len() < 2 {
            return Err(Error::Parse(text.to_string(), "unsupported length"));
        }
        Permutation::from_symbols(&symbols)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(self.symbols()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
