//! The orbit-generating map families: rotation, right multiplication by an
//! n-cycle, pair swapping, parity rotation, and valley hopping.
//!
//! Four of the five are step functions iterated until the orbit closes.
//! Valley hopping instead toggles any subset of the togglable entries
//! (double ascents and double descents), so its orbits are enumerated over
//! subsets; the [`Orbit`] type covers both shapes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::perm::Permutation;
use crate::{Error, Result};

/// One of the five map families, carrying any parameters it needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OrbitGenerator {
    /// `π(1)π(2)⋯π(n) ↦ π(2)⋯π(n)π(1)`.
    Rotation,
    /// `π ↦ π·c` for a fixed n-cycle `c` (a Coxeter element of `S_n`).
    /// `Rotation` is the special case `c = (1 2 … n)`.
    RightMultiplyCycle(Permutation),
    /// Swap positions (1,2), (3,4), …; the last entry is fixed for odd `n`.
    PairSwap,
    /// Rotation acting separately on the even-position and odd-position
    /// entries.
    ParityRotation,
    /// The modified Foata–Strehl action: double ascents and double descents
    /// hop across valleys; peaks and valleys stay put.
    ValleyHopping,
}

impl OrbitGenerator {
    /// Wraps a permutation as a right-multiplication generator, validating
    /// that it is a single cycle through all `n` letters.
    pub fn right_multiply_cycle(c: Permutation) -> Result<Self> {
        if !c.is_n_cycle() {
            return Err(Error::NotAnNCycle {
                word: c.to_string(),
                n: c.size(),
            });
        }
        Ok(OrbitGenerator::RightMultiplyCycle(c))
    }

    /// The single-step map, where one exists. Valley hopping has no step
    /// function; its orbits come from subset enumeration in [`orbit_of`].
    pub fn step(&self, p: &Permutation) -> Result<Permutation> {
        match self {
            OrbitGenerator::Rotation => Ok(rotate(p)),
            OrbitGenerator::RightMultiplyCycle(c) => p.compose(c),
            OrbitGenerator::PairSwap => Ok(pair_swap(p)),
            OrbitGenerator::ParityRotation => Ok(parity_rotate(p)),
            OrbitGenerator::ValleyHopping => Err(Error::Parse {
                input: "vh".to_string(),
                reason: "valley hopping has no single-step form".to_string(),
            }),
        }
    }

    /// True for the iterate-until-cycle generators.
    pub fn is_step_function(&self) -> bool {
        !matches!(self, OrbitGenerator::ValleyHopping)
    }

    /// For `RightMultiplyCycle`, checks the cycle lives in `S_n`.
    pub fn check_size(&self, n: usize) -> Result<()> {
        if let OrbitGenerator::RightMultiplyCycle(c) = self {
            if c.size() != n {
                return Err(Error::SizeMismatch {
                    left: c.size(),
                    right: n,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for OrbitGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitGenerator::Rotation => write!(f, "rot"),
            OrbitGenerator::RightMultiplyCycle(c) => write!(f, "coxeter:{c}"),
            OrbitGenerator::PairSwap => write!(f, "ps"),
            OrbitGenerator::ParityRotation => write!(f, "parrot"),
            OrbitGenerator::ValleyHopping => write!(f, "vh"),
        }
    }
}

impl FromStr for OrbitGenerator {
    type Err = Error;

    /// Parses the CLI names: `rot`, `ps`, `parrot`, `vh`, and
    /// `coxeter:<one-line word>` for an explicit n-cycle.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rot" => Ok(OrbitGenerator::Rotation),
            "ps" => Ok(OrbitGenerator::PairSwap),
            "parrot" => Ok(OrbitGenerator::ParityRotation),
            "vh" => Ok(OrbitGenerator::ValleyHopping),
            _ => {
                if let Some(word) = s.strip_prefix("coxeter:") {
                    let c: Permutation = word.parse()?;
                    OrbitGenerator::right_multiply_cycle(c)
                } else {
                    Err(Error::Parse {
                        input: s.to_string(),
                        reason: "expected rot, ps, parrot, vh, or coxeter:<word>".to_string(),
                    })
                }
            }
        }
    }
}

/// An orbit: distinct permutations of one size, plus the generator that
/// produced them.
///
/// Step-function orbits are stored in application order starting from the
/// seed, so `members[k+1] = step(members[k])` and stepping the last member
/// returns the first. Valley-hopping orbits are stored lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    generator: OrbitGenerator,
    members: Vec<Permutation>,
}

impl Orbit {
    /// The members in canonical order (see the type docs).
    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    /// The first member in canonical order. For orbits produced by a
    /// full-group decomposition this is the lexicographically minimal
    /// member, the orbit's canonical seed.
    pub fn seed(&self) -> &Permutation {
        &self.members[0]
    }

    /// Orbit size.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The generator that produced this orbit.
    pub fn generator(&self) -> &OrbitGenerator {
        &self.generator
    }

    /// Size of the underlying permutations.
    pub fn ground_size(&self) -> usize {
        self.members[0].size()
    }
}

/// Rotation: `rot(π) = π(2)⋯π(n)π(1)`.
pub fn rotate(p: &Permutation) -> Permutation {
    let mut word: Vec<usize> = p.word()[1..].to_vec();
    word.push(p.entry(1));
    Permutation::from_word(word).expect("rotation preserves the word's letters")
}

/// Pair swapping: swaps positions (1,2), (3,4), …; fixes the last entry
/// when `n` is odd. An involution with no fixed permutations for `n ≥ 2`.
pub fn pair_swap(p: &Permutation) -> Permutation {
    let mut word = p.word().to_vec();
    for i in (0..word.len().saturating_sub(1)).step_by(2) {
        word.swap(i, i + 1);
    }
    Permutation::from_word(word).expect("pair swap preserves the word's letters")
}

/// Parity rotation: rotates the entries in even positions among the even
/// positions and the entries in odd positions among the odd positions.
///
/// `π ↦ π(3)π(4)⋯π(n)π(1)π(2)` for even `n`, and
/// `π ↦ π(3)π(4)⋯π(n)π(2)π(1)` for odd `n` (the tail pair is reversed so
/// entries keep their position parity). For `n ≤ 2` this is the identity.
pub fn parity_rotate(p: &Permutation) -> Permutation {
    let n = p.size();
    if n <= 2 {
        return p.clone();
    }
    let mut word: Vec<usize> = p.word()[2..].to_vec();
    if n % 2 == 0 {
        word.push(p.entry(1));
        word.push(p.entry(2));
    } else {
        word.push(p.entry(2));
        word.push(p.entry(1));
    }
    Permutation::from_word(word).expect("parity rotation preserves the word's letters")
}

/// The inverse of [`parity_rotate`], shifting both parity classes the other
/// way.
pub fn parity_rotate_inv(p: &Permutation) -> Permutation {
    let n = p.size();
    if n <= 2 {
        return p.clone();
    }
    let mut word = Vec::with_capacity(n);
    if n % 2 == 0 {
        word.push(p.entry(n - 1));
        word.push(p.entry(n));
    } else {
        word.push(p.entry(n));
        word.push(p.entry(n - 1));
    }
    word.extend_from_slice(&p.word()[..n - 2]);
    Permutation::from_word(word).expect("parity rotation preserves the word's letters")
}

/// How a value sits relative to its neighbors, with `π(0) = π(n+1) = +∞`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum EntryKind {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// Classifies the entry at 1-indexed `pos` under the infinite-sentinel
/// convention: out-of-range neighbors count as greater than everything, so
/// `π(1)` and `π(n)` can be valleys but never peaks.
fn classify(p: &Permutation, pos: usize) -> EntryKind {
    let n = p.size();
    let x = p.entry(pos);
    let left_greater = pos == 1 || p.entry(pos - 1) > x;
    let right_greater = pos == n || p.entry(pos + 1) > x;
    match (left_greater, right_greater) {
        (true, true) => EntryKind::Valley,
        (false, false) => EntryKind::Peak,
        (false, true) => EntryKind::DoubleAscent,
        (true, false) => EntryKind::DoubleDescent,
    }
}

/// Hops the value `x` across its valley (the modified Foata–Strehl toggle).
///
/// Writing `π = w₁w₂xw₄w₅` with `w₂` (resp. `w₄`) the maximal factor just
/// left (resp. right) of `x` whose letters are all smaller than `x`, the
/// toggle returns `w₁w₄xw₂w₅`. Peaks and valleys are returned unchanged;
/// on double ascents and double descents the toggle is an involution.
pub fn foata_strehl_toggle(p: &Permutation, x: usize) -> Result<Permutation> {
    let n = p.size();
    if x < 1 || x > n {
        return Err(Error::ValueOutOfRange { value: x, n });
    }
    let pos = p.inverse().entry(x);
    match classify(p, pos) {
        EntryKind::Peak | EntryKind::Valley => Ok(p.clone()),
        EntryKind::DoubleAscent | EntryKind::DoubleDescent => {
            let word = p.word();
            let mut left = pos - 1; // w₂ spans positions (left, pos-1], 0-indexed [left..pos-1)
            while left > 0 && word[left - 1] < x {
                left -= 1;
            }
            let mut right = pos; // w₄ spans 0-indexed [pos..right)
            while right < n && word[right] < x {
                right += 1;
            }
            let mut out = Vec::with_capacity(n);
            out.extend_from_slice(&word[..left]);
            out.extend_from_slice(&word[pos..right]);
            out.push(x);
            out.extend_from_slice(&word[left..pos - 1]);
            out.extend_from_slice(&word[right..]);
            Ok(Permutation::from_word(out).expect("toggle preserves the word's letters"))
        }
    }
}

/// The togglable values of `π`: its double ascents and double descents
/// under the infinite-sentinel convention. Always of size
/// `n − 2·pk(π) − 1` where `pk` counts peaks.
pub fn togglable_set(p: &Permutation) -> BTreeSet<usize> {
    (1..=p.size())
        .filter(|&pos| {
            matches!(
                classify(p, pos),
                EntryKind::DoubleAscent | EntryKind::DoubleDescent
            )
        })
        .map(|pos| p.entry(pos))
        .collect()
}

/// Number of peaks of `π` (never at positions 1 or n).
pub fn peak_count(p: &Permutation) -> usize {
    (1..=p.size())
        .filter(|&pos| classify(p, pos) == EntryKind::Peak)
        .count()
}

/// The orbit of `p` under `gen`.
///
/// Step-function generators iterate until the walk returns to `p`. Valley
/// hopping toggles every subset of the togglable values and collects the
/// results in lexicographic order (the toggles commute, so the subset
/// order is immaterial); the orbit size is `2^|T_p|`.
pub fn orbit_of(gen: &OrbitGenerator, p: &Permutation) -> Result<Orbit> {
    gen.check_size(p.size())?;
    let members = match gen {
        OrbitGenerator::ValleyHopping => {
            let togglable: Vec<usize> = togglable_set(p).into_iter().collect();
            let mut set = BTreeSet::new();
            for mask in 0u64..(1 << togglable.len()) {
                let mut q = p.clone();
                for (bit, &x) in togglable.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        q = foata_strehl_toggle(&q, x)?;
                    }
                }
                set.insert(q);
            }
            set.into_iter().collect()
        }
        _ => {
            let mut members = vec![p.clone()];
            let mut cur = gen.step(p)?;
            while &cur != p {
                let next = gen.step(&cur)?;
                members.push(cur);
                cur = next;
            }
            members
        }
    };
    Ok(Orbit {
        generator: gen.clone(),
        members,
    })
}
