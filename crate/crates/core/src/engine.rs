//! Full-group orbit decomposition and the structural bookkeeping the
//! homomesy checks rest on.
//!
//! Decomposition walks `S_n` in lexicographic order; every permutation not
//! yet visited seeds a new orbit, so the orbit sequence (and each orbit's
//! canonical seed) is deterministic. Visited bookkeeping uses the
//! lexicographic rank as a dense index into an `n!`-bit set.

use std::collections::BTreeMap;

use crate::maps::{orbit_of, Orbit, OrbitGenerator};
use crate::perm::{enumerate_symmetric_group, SymmetricGroupIter};
use crate::{Error, Result};

/// A partition of `S_n` into orbits under one generator, in canonical
/// seed order.
#[derive(Debug)]
pub struct OrbitDecomposition {
    n: usize,
    generator: OrbitGenerator,
    orbits: Vec<Orbit>,
}

impl OrbitDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generator(&self) -> &OrbitGenerator {
        &self.generator
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Histogram of orbit sizes, ascending.
    pub fn size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for orbit in &self.orbits {
            *hist.entry(orbit.len()).or_insert(0) += 1;
        }
        hist
    }

    /// Total number of permutations across all orbits.
    pub fn total_size(&self) -> usize {
        self.orbits.iter().map(Orbit::len).sum()
    }
}

/// Streams the orbits of `S_n` under `gen` in canonical seed order.
///
/// Orbits are emitted as they complete, so consumers (the homomesy
/// checker) can stop early or run incrementally.
pub fn orbit_stream(n: usize, gen: &OrbitGenerator) -> Result<OrbitStream> {
    gen.check_size(n)?;
    let seeds = enumerate_symmetric_group(n)?;
    Ok(OrbitStream {
        gen: gen.clone(),
        visited: BitSet::with_capacity(factorial(n)),
        seeds,
    })
}

/// Iterator over the orbits of a full-group decomposition.
pub struct OrbitStream {
    gen: OrbitGenerator,
    visited: BitSet,
    seeds: SymmetricGroupIter,
}

impl Iterator for OrbitStream {
    type Item = Orbit;

    fn next(&mut self) -> Option<Orbit> {
        loop {
            let seed = self.seeds.next()?;
            if self.visited.contains(seed.lex_rank()) {
                continue;
            }
            let orbit = orbit_of(&self.gen, &seed).expect("generator size already checked");
            for member in orbit.members() {
                self.visited.insert(member.lex_rank());
            }
            return Some(orbit);
        }
    }
}

/// Decomposes `S_n` into orbits under `gen`.
pub fn decompose(n: usize, gen: &OrbitGenerator) -> Result<OrbitDecomposition> {
    let orbits: Vec<Orbit> = orbit_stream(n, gen)?.collect();
    Ok(OrbitDecomposition {
        n,
        generator: gen.clone(),
        orbits,
    })
}

/// The multiset of (position, value) pairs realized across an orbit.
///
/// Multiplicities are kept so violations of the pair coverage property are
/// visible, not silently collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaSet {
    n: usize,
    counts: BTreeMap<(usize, usize), usize>,
}

impl ZetaSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// How often value `j` appears at position `i` across the orbit.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.counts.get(&(i, j)).copied().unwrap_or(0)
    }

    /// The pairs with their multiplicities, in position-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.counts.iter()
    }

    /// True when the multiset is exactly `[n] × [n]`, every pair once.
    ///
    /// This is the pair coverage property of rotation-like orbits: each
    /// value visits each position exactly once.
    pub fn is_full_grid(&self) -> bool {
        self.counts.len() == self.n * self.n && self.counts.values().all(|&m| m == 1)
    }
}

/// Accumulates the (position, value) multiset over an orbit's members.
pub fn zeta(orbit: &Orbit) -> ZetaSet {
    let n = orbit.ground_size();
    let mut counts = BTreeMap::new();
    for member in orbit.members() {
        for i in 1..=n {
            *counts.entry((i, member.entry(i))).or_insert(0) += 1;
        }
    }
    ZetaSet { n, counts }
}

/// Multiplicity of the sum `k` in the multiset `{i + j : (i, j) ∈ [n]²}`:
/// `min(k−1, 2n−k+1)`. Defined for `2 ≤ k ≤ 2n`.
pub fn pair_sum_multiplicity(n: usize, k: usize) -> Result<usize> {
    if n == 0 || k < 2 || k > 2 * n {
        return Err(Error::PairSumOutOfRange { k, n, max: 2 * n });
    }
    Ok((k - 1).min(2 * n - k + 1))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

/// Fixed-capacity bit set indexed by lexicographic rank.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn with_capacity(bits: u64) -> BitSet {
        let words = vec![0u64; bits.div_ceil(64) as usize];
        BitSet { words }
    }

    fn contains(&self, bit: u64) -> bool {
        self.words[(bit / 64) as usize] & (1 << (bit % 64)) != 0
    }

    fn insert(&mut self, bit: u64) {
        self.words[(bit / 64) as usize] |= 1 << (bit % 64);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::togglable_set;
    use crate::perm::{cycle_from_toggle_order, long_cycle, Permutation};
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_on_s3_gives_two_orbits_of_three() {
        let dec = decompose(3, &OrbitGenerator::Rotation).unwrap();
        assert_eq!(dec.orbits().len(), 2);
        assert!(dec.orbits().iter().all(|o| o.len() == 3));
        assert_eq!(dec.size_histogram(), BTreeMap::from([(3, 2)]));
    }

    #[test]
    fn parity_rotation_on_s6_gives_orbits_of_three() {
        let dec = decompose(6, &OrbitGenerator::ParityRotation).unwrap();
        assert!(dec.orbits().iter().all(|o| o.len() == 3));
        assert_eq!(dec.orbits().len(), 240);
    }

    #[test]
    fn pair_swap_on_s4_gives_twelve_orbits_of_two() {
        let dec = decompose(4, &OrbitGenerator::PairSwap).unwrap();
        assert_eq!(dec.orbits().len(), 12);
        assert!(dec.orbits().iter().all(|o| o.len() == 2));
    }

    #[test]
    fn decomposition_covers_the_group_exactly_once() {
        for n in 2..=6 {
            for gen in [
                OrbitGenerator::Rotation,
                OrbitGenerator::PairSwap,
                OrbitGenerator::ParityRotation,
                OrbitGenerator::ValleyHopping,
            ] {
                let dec = decompose(n, &gen).unwrap();
                let mut all: Vec<Permutation> = dec
                    .orbits()
                    .iter()
                    .flat_map(|o| o.members().iter().cloned())
                    .collect();
                assert_eq!(all.len(), factorial(n) as usize, "n={n} gen={gen}");
                all.sort();
                all.dedup();
                assert_eq!(all.len(), factorial(n) as usize, "n={n} gen={gen}");
            }
        }
    }

    #[test]
    fn rotation_orbit_sizes_are_n_up_to_seven() {
        for n in 1..=7 {
            let dec = decompose(n, &OrbitGenerator::Rotation).unwrap();
            assert!(dec.orbits().iter().all(|o| o.len() == n));
        }
    }

    #[test]
    fn coxeter_orbit_sizes_are_n_for_all_cycles_up_to_five() {
        for n in 2..=5 {
            for order in enumerate_symmetric_group(n - 1).unwrap() {
                let c = cycle_from_toggle_order(order.word()).unwrap();
                let gen = OrbitGenerator::right_multiply_cycle(c).unwrap();
                let dec = decompose(n, &gen).unwrap();
                assert!(dec.orbits().iter().all(|o| o.len() == n));
            }
        }
    }

    #[test]
    fn parity_rotation_orbit_sizes_match_lcm_formula() {
        for n in 2..=7 {
            let expected = num::integer::lcm(n / 2, n.div_ceil(2));
            let dec = decompose(n, &OrbitGenerator::ParityRotation).unwrap();
            assert!(
                dec.orbits().iter().all(|o| o.len() == expected),
                "n={n} expected {expected}"
            );
        }
    }

    #[test]
    fn valley_hopping_orbit_sizes_are_powers_of_two_summing_to_group_order() {
        for n in 1..=6 {
            let dec = decompose(n, &OrbitGenerator::ValleyHopping).unwrap();
            let mut total = 0usize;
            for orbit in dec.orbits() {
                assert!(orbit.len().is_power_of_two());
                assert_eq!(orbit.len(), 1 << togglable_set(orbit.seed()).len());
                total += orbit.len();
            }
            assert_eq!(total, factorial(n) as usize);
        }
    }

    #[test]
    fn zeta_of_rotation_orbit_is_the_full_grid() {
        let orbit = orbit_of(&OrbitGenerator::Rotation, &p("123")).unwrap();
        let z = zeta(&orbit);
        assert!(z.is_full_grid());
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(z.multiplicity(i, j), 1);
            }
        }
    }

    #[test]
    fn zeta_is_full_grid_across_all_rotation_orbits_of_s5() {
        let dec = decompose(5, &OrbitGenerator::Rotation).unwrap();
        for orbit in dec.orbits() {
            assert!(zeta(orbit).is_full_grid());
        }
    }

    #[test]
    fn zeta_of_pair_swap_orbit_is_not_the_full_grid() {
        let orbit = orbit_of(&OrbitGenerator::PairSwap, &p("1234")).unwrap();
        assert!(!zeta(&orbit).is_full_grid());
    }

    #[test]
    fn pair_sum_multiplicity_examples() {
        assert_eq!(pair_sum_multiplicity(3, 2).unwrap(), 1);
        assert_eq!(pair_sum_multiplicity(3, 4).unwrap(), 3);
        let total: usize = (2..=10).map(|k| pair_sum_multiplicity(5, k).unwrap()).sum();
        assert_eq!(total, 25);
        assert!(pair_sum_multiplicity(3, 1).is_err());
        assert!(pair_sum_multiplicity(3, 7).is_err());
    }

    #[test]
    fn pair_sum_multiplicity_matches_brute_force() {
        for n in 1..=10 {
            let mut by_sum = BTreeMap::new();
            for i in 1..=n {
                for j in 1..=n {
                    *by_sum.entry(i + j).or_insert(0usize) += 1;
                }
            }
            for k in 2..=2 * n {
                assert_eq!(
                    pair_sum_multiplicity(n, k).unwrap(),
                    by_sum.get(&k).copied().unwrap_or(0),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn decompose_respects_the_enumeration_guard() {
        let err = decompose(13, &OrbitGenerator::Rotation).unwrap_err();
        assert!(matches!(err, Error::EnumerationGuard { .. }));
    }

    #[test]
    fn rotation_and_long_cycle_decompositions_agree() {
        let rot = decompose(5, &OrbitGenerator::Rotation).unwrap();
        let gen = OrbitGenerator::right_multiply_cycle(long_cycle(5)).unwrap();
        let cox = decompose(5, &gen).unwrap();
        let seeds_rot: BTreeSet<&Permutation> = rot.orbits().iter().map(Orbit::seed).collect();
        let seeds_cox: BTreeSet<&Permutation> = cox.orbits().iter().map(Orbit::seed).collect();
        assert_eq!(seeds_rot, seeds_cox);
    }
}
