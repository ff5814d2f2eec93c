//! Closed-form orbit averages: for each map family and statistic with a
//! proven homomesy, the exact constant as a function of `n`.
//!
//! The table is the independent oracle for the orbit engine: a verification
//! run recomputes every applicable row by brute force and compares. Rows
//! are exact rationals; parity-restricted rows (parity rotation) refuse to
//! evaluate outside their parity rather than guessing.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::BigRational;
use once_cell::sync::Lazy;

use crate::maps::OrbitGenerator;
use crate::stats::StatisticId;
use crate::{Error, Result};

/// Map family a formula row applies to. Right multiplication by *any*
/// n-cycle shares the rotation rows, so it folds into [`MapFamily::Rotation`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MapFamily {
    /// Rotation, and right multiplication by any n-cycle.
    Rotation,
    PairSwap,
    ParityRotation,
    ValleyHopping,
}

impl MapFamily {
    /// The family a concrete generator belongs to.
    pub fn of(gen: &OrbitGenerator) -> MapFamily {
        match gen {
            OrbitGenerator::Rotation | OrbitGenerator::RightMultiplyCycle(_) => MapFamily::Rotation,
            OrbitGenerator::PairSwap => MapFamily::PairSwap,
            OrbitGenerator::ParityRotation => MapFamily::ParityRotation,
            OrbitGenerator::ValleyHopping => MapFamily::ValleyHopping,
        }
    }
}

impl fmt::Display for MapFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapFamily::Rotation => write!(f, "rot"),
            MapFamily::PairSwap => write!(f, "ps"),
            MapFamily::ParityRotation => write!(f, "parrot"),
            MapFamily::ValleyHopping => write!(f, "vh"),
        }
    }
}

/// Values of `n` a formula row covers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    All,
    Even,
    Odd,
}

/// One table row: the proven orbit-average of `id` under `family`.
#[derive(Clone)]
pub struct FormulaRow {
    pub family: MapFamily,
    pub id: StatisticId,
    pub parity: Parity,
    pub n_min: usize,
    formula: fn(usize) -> BigRational,
}

impl FormulaRow {
    /// True when the row is defined at this `n`.
    pub fn applies_to(&self, n: usize) -> bool {
        let parity_ok = match self.parity {
            Parity::All => true,
            Parity::Even => n % 2 == 0,
            Parity::Odd => n % 2 == 1,
        };
        parity_ok && n >= self.n_min
    }

    /// The constant at `n`; callers must check [`FormulaRow::applies_to`].
    pub fn constant(&self, n: usize) -> BigRational {
        (self.formula)(n)
    }
}

impl fmt::Debug for FormulaRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FormulaRow")
            .field("family", &self.family)
            .field("id", &self.id)
            .finish()
    }
}

/// The full table of proven orbit averages.
pub struct FormulaTable {
    rows: BTreeMap<(MapFamily, StatisticId), FormulaRow>,
}

impl FormulaTable {
    pub fn standard() -> &'static FormulaTable {
        static TABLE: Lazy<FormulaTable> = Lazy::new(FormulaTable::build);
        &TABLE
    }

    pub fn get(&self, family: MapFamily, id: StatisticId) -> Option<&FormulaRow> {
        self.rows.get(&(family, id))
    }

    /// The proven constant for `(family, id)` at `n`.
    pub fn expected_average(
        &self,
        family: MapFamily,
        id: StatisticId,
        n: usize,
    ) -> Result<BigRational> {
        let row = self.get(family, id).ok_or_else(|| Error::UnknownFormula {
            family: family.to_string(),
            id: id.to_string(),
        })?;
        if !row.applies_to(n) {
            let reason = match row.parity {
                Parity::Even => "row holds for even n only".to_string(),
                Parity::Odd => "row holds for odd n only".to_string(),
                Parity::All => format!("row requires n >= {}", row.n_min),
            };
            return Err(Error::FormulaDomain {
                family: family.to_string(),
                id: id.to_string(),
                n,
                reason,
            });
        }
        Ok(row.constant(n))
    }

    /// All rows, ordered by (family, id).
    pub fn rows(&self) -> impl Iterator<Item = &FormulaRow> {
        self.rows.values()
    }

    /// The rows of one family that are defined at `n`.
    pub fn applicable(&self, family: MapFamily, n: usize) -> Vec<&FormulaRow> {
        self.rows
            .values()
            .filter(|row| row.family == family && row.applies_to(n))
            .collect()
    }

    /// The statistic ids of one family's rows (any `n`).
    pub fn ids_for(&self, family: MapFamily) -> Vec<StatisticId> {
        self.rows
            .values()
            .filter(|row| row.family == family)
            .map(|row| row.id)
            .collect()
    }

    fn build() -> FormulaTable {
        let mut rows = BTreeMap::new();
        let mut add =
            |family: MapFamily, id: StatisticId, parity: Parity, n_min: usize, formula: fn(usize) -> BigRational| {
                let previous = rows.insert(
                    (family, id),
                    FormulaRow {
                        family,
                        id,
                        parity,
                        n_min,
                        formula,
                    },
                );
                debug_assert!(previous.is_none(), "duplicate formula row");
            };
        let fs = StatisticId::Findstat;
        use MapFamily::*;
        use Parity::{All, Even, Odd};

        // Rotation (and any Coxeter element): the i-th entry statistics.
        for id in [54, 740, 1806, 1807] {
            add(Rotation, fs(id), All, 1, |n| ratio(n + 1, 2));
        }
        // Excedance family.
        add(Rotation, fs(22), All, 1, |_| int(1));
        add(Rotation, fs(155), All, 1, |n| ratio(n - 1, 2));
        add(Rotation, fs(703), All, 1, |n| ratio(n - 1, 2));
        add(Rotation, fs(213), All, 1, |n| ratio(n + 1, 2));
        add(Rotation, fs(702), All, 1, |n| ratio(n + 1, 2));
        add(Rotation, fs(710), All, 1, |n| {
            big_ratio(big(n - 1) * big(n.saturating_sub(2)), big(2 * n))
        });
        add(Rotation, fs(711), All, 1, |n| {
            big_ratio(big(n - 1) * big(n.saturating_sub(2)), big(2 * n))
        });
        add(Rotation, fs(237), All, 1, |n| ratio(n - 1, n));
        add(Rotation, fs(648), All, 2, |n| ratio(n - 2, n));
        add(Rotation, fs(649), All, 3, |n| ratio(n - 3, n));
        add(Rotation, fs(241), All, 1, |_| int(1));
        add(Rotation, fs(236), All, 2, |_| int(2));
        add(Rotation, fs(239), All, 1, |n| ratio(2 * n - 1, n));
        add(Rotation, fs(235), All, 1, |n| int(n - 1));
        add(Rotation, fs(238), All, 1, |n| {
            big_ratio(big(n - 1) * big(n - 1), big(n))
        });
        add(Rotation, fs(240), All, 1, |n| ratio(n * n - n + 1, n));
        add(Rotation, fs(242), All, 2, |n| int(n - 2));
        add(Rotation, fs(673), All, 1, |n| int(n - 1));
        add(Rotation, fs(1439), All, 1, |n| int((n + 2) / 2));
        // Inversion family. The depth/displacement rows use binom(n+1, 3):
        // the proof's tetrahedral-number value, confirmed by brute force.
        add(Rotation, fs(29), All, 1, |n| {
            big_ratio(binom3(n + 1), big(n))
        });
        add(Rotation, fs(830), All, 1, |n| {
            big_ratio(big(2) * binom3(n + 1), big(n))
        });
        add(Rotation, fs(55), All, 1, |n| big_ratio(binom3(n + 1), big(2)));
        add(Rotation, fs(341), All, 1, |n| big_ratio(binom3(n + 1), big(2)));
        add(Rotation, fs(828), All, 1, |n| {
            BigRational::from_integer(binom3(n + 1))
        });
        // Miscellaneous.
        add(Rotation, fs(342), All, 1, |n| {
            big_ratio(big(n) * big(n + 1) * big(n + 1), big(4))
        });
        add(Rotation, fs(1285), All, 1, |n| {
            big_ratio(prime_pair_sum_count(n), big(n))
        });
        add(Rotation, fs(1287), All, 1, |n| {
            big_ratio(grid_count(n, |i, j| i * j >= 2 && is_prime((i * j - 1) as u64)), big(n))
        });
        add(Rotation, fs(1288), All, 1, |n| {
            big_ratio(grid_count(n, |i, j| is_prime((i * j + 1) as u64)), big(n))
        });
        add(Rotation, fs(1293), All, 1, scaled_reciprocal_average);
        add(Rotation, fs(1801), All, 1, |n| {
            ratio((n / 2) * n.div_ceil(2), n)
        });

        // Pair swapping.
        add(PairSwap, fs(1114), All, 1, |n| ratio(n / 2, 2));
        add(PairSwap, StatisticId::OddAscents, All, 1, |n| ratio(n / 2, 2));

        // Parity rotation, split by the parity of n.
        add(ParityRotation, fs(236), Even, 2, |_| int(2));
        add(ParityRotation, fs(242), Even, 2, |n| int(n - 2));
        add(ParityRotation, fs(21), Odd, 3, |n| ratio(n - 1, 2));
        add(ParityRotation, fs(245), Odd, 3, |n| ratio(n - 1, 2));
        add(ParityRotation, fs(470), Odd, 3, |n| ratio(n + 1, 2));
        add(ParityRotation, fs(325), Odd, 3, |n| ratio(n + 1, 2));
        add(ParityRotation, fs(1520), Odd, 3, |n| ratio(n - 3, 2));

        // Valley hopping.
        add(ValleyHopping, fs(21), All, 1, |n| ratio(n - 1, 2));
        add(ValleyHopping, fs(245), All, 1, |n| ratio(n - 1, 2));
        add(ValleyHopping, fs(325), All, 1, |n| ratio(n + 1, 2));
        add(ValleyHopping, fs(470), All, 1, |n| ratio(n + 1, 2));

        FormulaTable { rows }
    }
}

/// Looks up `(family, id)` in the standard table and evaluates at `n`.
pub fn expected_average(family: MapFamily, id: StatisticId, n: usize) -> Result<BigRational> {
    FormulaTable::standard().expected_average(family, id, n)
}

fn big(v: usize) -> BigInt {
    BigInt::from(v)
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(big(v))
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(big(num), big(den))
}

fn big_ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// `C(m, 3)`, zero for `m < 3`.
fn binom3(m: usize) -> BigInt {
    if m < 3 {
        return BigInt::from(0);
    }
    big(m) * big(m - 1) * big(m - 2) / big(6)
}

/// `#{(i, j) ∈ [n]² : pred(i, j)}`.
fn grid_count(n: usize, pred: impl Fn(usize, usize) -> bool) -> BigInt {
    let mut c = 0usize;
    for i in 1..=n {
        for j in 1..=n {
            if pred(i, j) {
                c += 1;
            }
        }
    }
    big(c)
}

/// `Σ min(p−1, 2n−p+1)` over primes `p ≤ 2n`: the number of grid pairs
/// with prime sum, via the pair-sum multiplicity lemma.
fn prime_pair_sum_count(n: usize) -> BigInt {
    let mut sum = 0usize;
    for p in 2..=2 * n {
        if is_prime(p as u64) {
            sum += (p - 1).min(2 * n - p + 1);
        }
    }
    big(sum)
}

/// The statistic-1293 average `(ℓ/n)·((2n+1)·H_{2n} − (2n+2)·H_n)` with
/// `ℓ = lcm{1,…,2n}`.
fn scaled_reciprocal_average(n: usize) -> BigRational {
    let ell = BigRational::from_integer(lcm_upto(2 * n));
    let h2n = harmonic(2 * n);
    let hn = harmonic(n);
    let a = BigRational::from_integer(big(2 * n + 1)) * h2n;
    let b = BigRational::from_integer(big(2 * n + 2)) * hn;
    ell * (a - b) / BigRational::from_integer(big(n))
}

/// The m-th harmonic number `Σ_{i=1}^{m} 1/i`; `harmonic(0) = 0`.
pub fn harmonic(m: usize) -> BigRational {
    let mut sum = BigRational::from_integer(BigInt::from(0));
    for i in 1..=m {
        sum += BigRational::new(BigInt::from(1), BigInt::from(i));
    }
    sum
}

/// `lcm{1, 2, …, m}` as an exact big integer; `lcm_upto(0) = 1`.
pub fn lcm_upto(m: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=m {
        acc = num::integer::lcm(acc, BigInt::from(i));
    }
    acc
}

/// Deterministic primality by trial division; exact for all `u64` inputs,
/// and cheap at the `n² + 1` scale the statistics need.
pub fn is_prime(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v % 2 == 0 {
        return v == 2;
    }
    let mut d = 3;
    while d * d <= v {
        if v % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::pair_sum_multiplicity;

    fn fs(id: u32) -> StatisticId {
        StatisticId::Findstat(id)
    }

    #[test]
    fn harmonic_small_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(3), ratio(11, 6));
        assert_eq!(harmonic(6), ratio(49, 20));
    }

    #[test]
    fn lcm_upto_small_values() {
        assert_eq!(lcm_upto(1), big(1));
        assert_eq!(lcm_upto(6), big(60));
        assert_eq!(lcm_upto(16), big(720720));
    }

    #[test]
    fn is_prime_small_values() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(49));
        assert!(!is_prime(91)); // 7 * 13
    }

    #[test]
    fn rotation_row_examples() {
        for n in 1..=8 {
            assert_eq!(expected_average(MapFamily::Rotation, fs(22), n).unwrap(), int(1));
        }
        assert_eq!(
            expected_average(MapFamily::Rotation, fs(1293), 3).unwrap(),
            ratio(149, 3)
        );
        assert_eq!(
            expected_average(MapFamily::Rotation, fs(29), 3).unwrap(),
            ratio(4, 3)
        );
        assert_eq!(
            expected_average(MapFamily::Rotation, fs(342), 3).unwrap(),
            int(12)
        );
        assert_eq!(
            expected_average(MapFamily::Rotation, fs(1285), 3).unwrap(),
            ratio(5, 3)
        );
    }

    #[test]
    fn parity_rows_enforce_their_domain() {
        assert_eq!(
            expected_average(MapFamily::ParityRotation, fs(21), 5).unwrap(),
            int(2)
        );
        let err = expected_average(MapFamily::ParityRotation, fs(21), 4).unwrap_err();
        assert!(matches!(err, Error::FormulaDomain { .. }));
        let err = expected_average(MapFamily::ParityRotation, fs(236), 5).unwrap_err();
        assert!(matches!(err, Error::FormulaDomain { .. }));
    }

    #[test]
    fn unknown_rows_are_reported() {
        let err = expected_average(MapFamily::PairSwap, fs(22), 4).unwrap_err();
        assert!(matches!(err, Error::UnknownFormula { .. }));
    }

    #[test]
    fn rotation_family_has_thirty_four_rows() {
        assert_eq!(FormulaTable::standard().ids_for(MapFamily::Rotation).len(), 34);
        assert_eq!(FormulaTable::standard().ids_for(MapFamily::PairSwap).len(), 2);
        assert_eq!(
            FormulaTable::standard().ids_for(MapFamily::ParityRotation).len(),
            7
        );
        assert_eq!(
            FormulaTable::standard().ids_for(MapFamily::ValleyHopping).len(),
            4
        );
    }

    #[test]
    fn reciprocal_sum_split_matches_harmonic_closed_form() {
        // (1/n) Σ_{k=2}^{2n} min(k−1, 2n−k+1)/k equals
        // ((2n+1)H_{2n} − (2n+2)H_n)/n.
        for n in 1..=12 {
            let mut lhs = BigRational::from_integer(big(0));
            for k in 2..=2 * n {
                let mult = pair_sum_multiplicity(n, k).unwrap();
                lhs += ratio(mult, k);
            }
            lhs /= BigRational::from_integer(big(n));
            let rhs = scaled_reciprocal_average(n)
                / BigRational::from_integer(lcm_upto(2 * n));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn prime_pair_sum_formula_matches_grid_enumeration() {
        for n in 1..=12 {
            let by_formula = prime_pair_sum_count(n);
            let by_grid = grid_count(n, |i, j| is_prime((i + j) as u64));
            assert_eq!(by_formula, by_grid, "n = {n}");
        }
    }
}
