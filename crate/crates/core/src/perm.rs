//! Permutations of `[n] = {1, …, n}` in one-line notation.
//!
//! A [`Permutation`] stores the word `π(1)π(2)⋯π(n)`. Positions and values
//! are 1-indexed throughout the public interface. All operations are pure;
//! a permutation is an immutable value.
//!
//! Text form: for `n ≤ 9` the compact digit string (`"3176524"`), for
//! `n ≥ 10` comma-separated entries (`"10,3,1,2,4,5,6,7,8,9"`).

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Enumeration guard: `enumerate_symmetric_group` refuses larger `n` unless
/// explicitly overridden. 12! ranks still fit comfortably in a machine word
/// and a 12!-bit visited set stays under 60 MB.
pub const DEFAULT_MAX_ENUM_N: usize = 12;

/// A permutation of `[n]`, stored as the one-line word `π(1)⋯π(n)`.
///
/// Ordering and equality are lexicographic on the word, which makes
/// `BTreeSet<Permutation>` iterate in the canonical report order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that the word
    /// is a bijection of `[n]` with `n ≥ 1`.
    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::NotABijection {
                what: "empty word",
                n: 0,
            });
        }
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(Error::NotABijection { what: "word", n });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation `12⋯n`. Requires `n ≥ 1`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have size at least 1");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// Number of letters `n`.
    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// The entry `π(i)` at 1-indexed position `i`. Panics if `i ∉ [n]`.
    pub fn entry(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The one-line word as a slice (`word[i]` is `π(i+1)`).
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Composition `(self·other)(i) = self(other(i))`.
    ///
    /// With this convention the right multiplication `π·c` is
    /// `π.compose(&c)`, so rotating equals multiplying by the long cycle.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let word = other.word.iter().map(|&j| self.word[j - 1]).collect();
        Ok(Permutation { word })
    }

    /// The group inverse: `self.compose(&self.inverse())` is the identity.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.size()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// The simple transposition `τ_i`: swaps the entries at positions `i`
    /// and `i+1`. Requires `1 ≤ i ≤ n−1`.
    pub fn simple_transposition(&self, i: usize) -> Result<Self> {
        let n = self.size();
        if i < 1 || i >= n {
            return Err(Error::PositionOutOfRange { position: i, n });
        }
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Ok(Permutation { word })
    }

    /// Word reversal `π(n)⋯π(1)` (swaps inversions and non-inversions).
    pub fn reverse(&self) -> Self {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// `self` composed with itself `k` times; `pow(0)` is the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Permutation::identity(self.size());
        for _ in 0..k {
            acc = acc.compose(self).expect("same size");
        }
        acc
    }

    /// Cycle decomposition: each cycle starts at its minimal element, cycles
    /// sorted by that minimum. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.entry(cur);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// True when the permutation is one cycle through all `n` letters.
    pub fn is_n_cycle(&self) -> bool {
        let cycles = self.cycles();
        cycles.len() == 1 && cycles[0].len() == self.size()
    }

    /// Cycle-notation string for diagnostics, e.g. `"(1 2 3)"`.
    pub fn cycle_string(&self) -> String {
        self.cycles()
            .iter()
            .map(|c| {
                let inner = c
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                format!("({inner})")
            })
            .collect()
    }

    /// Lexicographic rank in `S_n` (0-based; the identity has rank 0).
    ///
    /// Computed via the Lehmer code; fits in `u64` for any enumerable `n`.
    pub fn lex_rank(&self) -> u64 {
        let n = self.size();
        let mut rank: u64 = 0;
        let mut factorial: u64 = (1..n as u64).product::<u64>().max(1);
        for i in 0..n {
            let smaller_later = self.word[i + 1..]
                .iter()
                .filter(|&&v| v < self.word[i])
                .count() as u64;
            rank += smaller_later * factorial;
            if n - i > 1 {
                factorial /= (n - i - 1) as u64;
            }
        }
        rank
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let joined = self
                .word
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{joined}")
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| parse_err("entries must be positive integers"))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err("compact form allows digits 1-9 only"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_word(word).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

/// The long cycle `c = (1 2 … n)` with one-line word `23⋯n1`.
///
/// Requires `n ≥ 1`. `c(i) = i+1` for `i < n` and `c(n) = 1`, so
/// `π.compose(&long_cycle(n))` rotates `π`.
pub fn long_cycle(n: usize) -> Permutation {
    assert!(n >= 1, "permutations have size at least 1");
    let mut word: Vec<usize> = (2..=n).collect();
    word.push(1);
    Permutation { word }
}

/// Applies each simple transposition `τ_{order[k]}` once, in the given
/// order, to the identity. The result is always an n-cycle (a Coxeter
/// element of `S_n`), and every n-cycle arises from some order.
///
/// `order` must be a bijection of `[n−1]`; the result lives in `S_n` with
/// `n = order.len() + 1`. The order `(1, 2, …, n−1)` yields the long cycle.
pub fn cycle_from_toggle_order(order: &[usize]) -> Result<Permutation> {
    let m = order.len();
    let n = m + 1;
    let mut seen = vec![false; m];
    for &i in order {
        if i < 1 || i > m {
            return Err(Error::NotABijection {
                what: "toggle order",
                n: m,
            });
        }
        if seen[i - 1] {
            return Err(Error::NotABijection {
                what: "toggle order",
                n: m,
            });
        }
        seen[i - 1] = true;
    }
    let mut acc = Permutation::identity(n);
    for &i in order {
        acc = acc.simple_transposition(i)?;
    }
    debug_assert!(acc.is_n_cycle());
    Ok(acc)
}

/// Streams all `n!` permutations of `[n]` in lexicographic order.
///
/// Guarded by [`DEFAULT_MAX_ENUM_N`]; use
/// [`enumerate_symmetric_group_with_guard`] to override.
pub fn enumerate_symmetric_group(n: usize) -> Result<SymmetricGroupIter> {
    enumerate_symmetric_group_with_guard(n, DEFAULT_MAX_ENUM_N)
}

/// As [`enumerate_symmetric_group`], with an explicit guard.
pub fn enumerate_symmetric_group_with_guard(n: usize, max_n: usize) -> Result<SymmetricGroupIter> {
    if n == 0 {
        return Err(Error::NotABijection {
            what: "empty word",
            n: 0,
        });
    }
    if n > max_n {
        return Err(Error::EnumerationGuard { n, max_n });
    }
    Ok(SymmetricGroupIter {
        next: Some(Permutation::identity(n)),
    })
}

/// Lexicographic iterator over `S_n`. See [`enumerate_symmetric_group`].
#[derive(Debug)]
pub struct SymmetricGroupIter {
    next: Option<Permutation>,
}

impl Iterator for SymmetricGroupIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        self.next = next_lexicographic(&current);
        Some(current)
    }
}

/// The lexicographic successor of `p` in `S_n`, or `None` at `n n−1 ⋯ 1`.
fn next_lexicographic(p: &Permutation) -> Option<Permutation> {
    let mut word = p.word.clone();
    let n = word.len();
    if n < 2 {
        return None;
    }
    // Classic next-permutation: find the last ascent, swap with the
    // smallest larger suffix entry, reverse the suffix.
    let i = (0..n - 1).rev().find(|&i| word[i] < word[i + 1])?;
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    Some(Permutation { word })
}
