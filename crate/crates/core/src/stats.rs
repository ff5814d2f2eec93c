//! Registry of integer-valued permutation statistics, keyed by FindStat id
//! where one exists and by a symbolic name otherwise.
//!
//! Conventions used by every evaluator (the registry documents them per
//! entry where they matter):
//!
//! - excedance: `π(i) > i`; deficiency: `π(i) < i`; *weak* allows equality;
//!   *big* means `π(i) > i+1` (resp. `π(i) < i−1`).
//! - k-excedance: `π(i) = i+k`; *cyclical* k-excedance: `π(i) ≡ i+k (mod n)`
//!   with representatives in `[n]`.
//! - descents and ascents never occur at position `n`.
//!
//! Values are arbitrary-precision integers: statistic 1293 scales a
//! harmonic-like sum by `lcm{1,…,2n}`, which outgrows any fixed-width
//! integer as `n` grows.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use once_cell::sync::Lazy;

use crate::formulas::{is_prime, lcm_upto};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Identifier of a registered statistic: a FindStat number, or a symbolic
/// name for the few without one.
///
/// Ordering is FindStat ids ascending, then the named statistics
/// alphabetically; listings follow this order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum StatisticId {
    Findstat(u32),
    InversionNumber,
    OddAscents,
    ReflectionTrace,
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatisticId::Findstat(id) => write!(f, "{id}"),
            StatisticId::InversionNumber => write!(f, "inversion_number"),
            StatisticId::OddAscents => write!(f, "odd_ascents"),
            StatisticId::ReflectionTrace => write!(f, "reflection_trace"),
        }
    }
}

impl FromStr for StatisticId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inversion_number" => Ok(StatisticId::InversionNumber),
            "odd_ascents" => Ok(StatisticId::OddAscents),
            "reflection_trace" => Ok(StatisticId::ReflectionTrace),
            _ => s
                .parse::<u32>()
                .map(StatisticId::Findstat)
                .map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: "expected a FindStat number or a symbolic statistic name".to_string(),
                }),
        }
    }
}

type EvalFn = fn(&Permutation) -> BigInt;

/// One registry entry: identifier, short name, description, the boundary
/// conventions it relies on, and the evaluator.
#[derive(Clone)]
pub struct StatisticDef {
    pub id: StatisticId,
    pub name: &'static str,
    pub description: &'static str,
    pub conventions: &'static str,
    eval: EvalFn,
}

impl StatisticDef {
    pub fn evaluate(&self, p: &Permutation) -> BigInt {
        (self.eval)(p)
    }
}

impl fmt::Debug for StatisticDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StatisticDef")
            .field("id", &self.id)
            .field("name", &self.name)
            .finish()
    }
}

/// The statistic catalog. [`StatisticRegistry::standard`] holds every
/// statistic this crate knows about.
pub struct StatisticRegistry {
    entries: BTreeMap<StatisticId, StatisticDef>,
}

impl StatisticRegistry {
    /// The built-in catalog (43 statistics).
    pub fn standard() -> &'static StatisticRegistry {
        static REGISTRY: Lazy<StatisticRegistry> = Lazy::new(StatisticRegistry::build);
        &REGISTRY
    }

    pub fn get(&self, id: StatisticId) -> Option<&StatisticDef> {
        self.entries.get(&id)
    }

    pub fn contains(&self, id: StatisticId) -> bool {
        self.entries.contains_key(&id)
    }

    /// Evaluates `id` on `p`; unknown ids report the full list of known ids.
    pub fn evaluate(&self, id: StatisticId, p: &Permutation) -> Result<BigInt> {
        match self.get(id) {
            Some(def) => Ok(def.evaluate(p)),
            None => Err(Error::UnknownStatistic {
                id: id.to_string(),
                known: self
                    .ids()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            }),
        }
    }

    /// All entries in id order.
    pub fn list(&self) -> impl Iterator<Item = &StatisticDef> {
        self.entries.values()
    }

    /// All ids in order.
    pub fn ids(&self) -> Vec<StatisticId> {
        self.entries.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn build() -> StatisticRegistry {
        let mut entries = BTreeMap::new();
        let mut add = |id: StatisticId,
                       name: &'static str,
                       description: &'static str,
                       conventions: &'static str,
                       eval: EvalFn| {
            let previous = entries.insert(
                id,
                StatisticDef {
                    id,
                    name,
                    description,
                    conventions,
                    eval,
                },
            );
            debug_assert!(previous.is_none(), "duplicate statistic id");
        };
        let fs = StatisticId::Findstat;

        add(fs(21), "descents", "number of descents", DESCENT_CONV, st_descents);
        add(fs(22), "fixed_points", "number of fixed points", "", st_fixed_points);
        add(
            fs(29),
            "depth",
            "depth: sum of pi(i)-i over excedances; half the total displacement",
            "",
            st_depth,
        );
        add(fs(54), "first_entry", "the first entry pi(1)", "", st_first_entry);
        add(
            fs(55),
            "inversion_sum",
            "sum of j-i over inversions i<j with pi(j)<pi(i)",
            "",
            st_inversion_sum,
        );
        add(fs(155), "excedances", "number of excedances pi(i)>i", "", st_excedances);
        add(
            fs(213),
            "weak_excedances",
            "number of weak excedances pi(i)>=i",
            "",
            st_weak_excedances,
        );
        add(
            fs(235),
            "non_cyclical_small_excedances",
            "number of indices that are not cyclical small excedances",
            CYCLIC_CONV,
            st_not_cyclical_small_excedances,
        );
        add(
            fs(236),
            "cyclical_small_weak_excedances",
            "number of cyclical small weak excedances: fixed points plus cyclical small excedances",
            CYCLIC_CONV,
            st_cyclical_small_weak_excedances,
        );
        add(
            fs(237),
            "small_excedances",
            "number of small excedances pi(i)=i+1",
            "",
            st_small_excedances,
        );
        add(
            fs(238),
            "non_small_weak_excedances",
            "number of indices that are not small weak excedances",
            "",
            st_not_small_weak_excedances,
        );
        add(
            fs(239),
            "small_weak_excedances",
            "number of small weak excedances pi(i) in {i, i+1}",
            "",
            st_small_weak_excedances,
        );
        add(
            fs(240),
            "non_small_excedances",
            "number of indices that are not small excedances",
            "",
            st_not_small_excedances,
        );
        add(
            fs(241),
            "cyclical_small_excedances",
            "number of cyclical small excedances pi(i) = i+1 mod n",
            CYCLIC_CONV,
            st_cyclical_small_excedances,
        );
        add(
            fs(242),
            "non_cyclical_small_weak_excedances",
            "number of indices that are not cyclical small weak excedances",
            CYCLIC_CONV,
            st_not_cyclical_small_weak_excedances,
        );
        add(fs(245), "ascents", "number of ascents", DESCENT_CONV, st_ascents);
        add(
            fs(325),
            "tree_width",
            "width of the binary tree associated to the permutation; equals the number of runs",
            "",
            st_runs,
        );
        add(
            fs(341),
            "non_inversion_sum",
            "sum of j-i over non-inversions i<j with pi(i)<pi(j)",
            "",
            st_non_inversion_sum,
        );
        add(
            fs(342),
            "cosine",
            "cosine: sum of i*pi(i) over all positions",
            "",
            st_cosine,
        );
        add(
            fs(470),
            "runs",
            "number of maximal increasing runs; one more than the number of descents",
            DESCENT_CONV,
            st_runs,
        );
        add(
            fs(648),
            "two_excedances",
            "number of 2-excedances pi(i)=i+2",
            "",
            st_two_excedances,
        );
        add(
            fs(649),
            "three_excedances",
            "number of 3-excedances pi(i)=i+3",
            "",
            st_three_excedances,
        );
        add(
            fs(673),
            "support_size",
            "number of non-fixed points",
            "",
            st_support_size,
        );
        add(
            fs(702),
            "weak_deficiencies",
            "number of weak deficiencies pi(i)<=i",
            "",
            st_weak_deficiencies,
        );
        add(
            fs(703),
            "deficiencies",
            "number of deficiencies pi(i)<i",
            "",
            st_deficiencies,
        );
        add(
            fs(710),
            "big_deficiencies",
            "number of big deficiencies pi(i)<i-1",
            "",
            st_big_deficiencies,
        );
        add(
            fs(711),
            "big_excedances",
            "number of big excedances pi(i)>i+1",
            "",
            st_big_excedances,
        );
        add(
            fs(740),
            "last_entry",
            "the last entry pi(n)",
            "",
            st_last_entry,
        );
        add(
            fs(828),
            "spearman_rho",
            "Spearman's rho against the identity: sum of (pi(i)-i)^2",
            "",
            st_spearman_rho,
        );
        add(
            fs(830),
            "total_displacement",
            "total displacement: sum of |pi(i)-i|",
            "",
            st_total_displacement,
        );
        add(
            fs(1114),
            "odd_descents",
            "number of descents at odd positions",
            DESCENT_CONV,
            st_odd_descents,
        );
        add(
            fs(1285),
            "prime_column_sums",
            "number of positions with i+pi(i) prime",
            "",
            st_prime_column_sums,
        );
        add(
            fs(1287),
            "prime_products_minus_one",
            "number of positions with i*pi(i)-1 prime",
            "",
            st_prime_products_minus_one,
        );
        add(
            fs(1288),
            "prime_products_plus_one",
            "number of positions with i*pi(i)+1 prime",
            "",
            st_prime_products_plus_one,
        );
        add(
            fs(1293),
            "scaled_reciprocal_sum",
            "lcm{1..2n} times the sum of 1/(i+pi(i)); every term is integral",
            "",
            st_scaled_reciprocal_sum,
        );
        add(
            fs(1439),
            "even_weak_deficiencies_odd_weak_excedances",
            "number of even weak deficiencies plus odd weak excedances",
            "weak comparisons on both sides, so fixed points count once",
            st_even_weak_def_odd_weak_exc,
        );
        add(
            fs(1520),
            "strict_three_descents",
            "number of indices i <= n-3 with pi(i) > pi(i+3)",
            "",
            st_strict_three_descents,
        );
        add(
            fs(1801),
            "half_mixed_parity_pairs",
            "half the number of positions where i and pi(i) have different parity",
            "",
            st_half_mixed_parity_pairs,
        );
        add(
            fs(1806),
            "upper_middle_entry",
            "the upper middle entry pi(ceil((n+1)/2))",
            "",
            st_upper_middle_entry,
        );
        add(
            fs(1807),
            "lower_middle_entry",
            "the lower middle entry pi(floor((n+1)/2))",
            "",
            st_lower_middle_entry,
        );
        add(
            StatisticId::InversionNumber,
            "inversion_number",
            "number of inversions (negative control: not homomesic under rotation)",
            "",
            st_inversion_number,
        );
        add(
            StatisticId::OddAscents,
            "odd_ascents",
            "number of ascents at odd positions",
            DESCENT_CONV,
            st_odd_ascents,
        );
        add(
            StatisticId::ReflectionTrace,
            "reflection_trace",
            "trace in the reflection representation: fixed points minus one",
            "",
            st_reflection_trace,
        );

        StatisticRegistry { entries }
    }
}

const DESCENT_CONV: &str = "no ascent or descent at position n";
const CYCLIC_CONV: &str = "cyclical comparison reads positions modulo n with representatives in [n]";

/// Evaluates statistic `id` on `p` using the standard registry.
pub fn evaluate(id: StatisticId, p: &Permutation) -> Result<BigInt> {
    StatisticRegistry::standard().evaluate(id, p)
}

/// The `(id, description)` listing of the standard registry, id-sorted.
pub fn list_statistics() -> Vec<(StatisticId, &'static str)> {
    StatisticRegistry::standard()
        .list()
        .map(|def| (def.id, def.description))
        .collect()
}

fn count(p: &Permutation, pred: impl Fn(usize, usize) -> bool) -> BigInt {
    let c = (1..=p.size()).filter(|&i| pred(i, p.entry(i))).count();
    BigInt::from(c)
}

/// `i+1` read cyclically: `n+1` wraps to `1`.
fn cyclic_succ(i: usize, n: usize) -> usize {
    i % n + 1
}

fn st_first_entry(p: &Permutation) -> BigInt {
    BigInt::from(p.entry(1))
}

fn st_last_entry(p: &Permutation) -> BigInt {
    BigInt::from(p.entry(p.size()))
}

fn st_upper_middle_entry(p: &Permutation) -> BigInt {
    let n = p.size();
    BigInt::from(p.entry((n + 2) / 2))
}

fn st_lower_middle_entry(p: &Permutation) -> BigInt {
    let n = p.size();
    BigInt::from(p.entry((n + 1) / 2))
}

fn st_fixed_points(p: &Permutation) -> BigInt {
    count(p, |i, v| v == i)
}

fn st_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v > i)
}

fn st_deficiencies(p: &Permutation) -> BigInt {
    count(p, |i, v| v < i)
}

fn st_weak_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v >= i)
}

fn st_weak_deficiencies(p: &Permutation) -> BigInt {
    count(p, |i, v| v <= i)
}

fn st_big_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v > i + 1)
}

fn st_big_deficiencies(p: &Permutation) -> BigInt {
    count(p, |i, v| v + 1 < i)
}

fn st_small_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v == i + 1)
}

fn st_two_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v == i + 2)
}

fn st_three_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v == i + 3)
}

fn st_cyclical_small_excedances(p: &Permutation) -> BigInt {
    let n = p.size();
    count(p, |i, v| v == cyclic_succ(i, n))
}

fn st_cyclical_small_weak_excedances(p: &Permutation) -> BigInt {
    st_fixed_points(p) + st_cyclical_small_excedances(p)
}

fn st_small_weak_excedances(p: &Permutation) -> BigInt {
    count(p, |i, v| v == i || v == i + 1)
}

fn st_not_cyclical_small_excedances(p: &Permutation) -> BigInt {
    BigInt::from(p.size()) - st_cyclical_small_excedances(p)
}

fn st_not_small_weak_excedances(p: &Permutation) -> BigInt {
    BigInt::from(p.size()) - st_small_weak_excedances(p)
}

fn st_not_small_excedances(p: &Permutation) -> BigInt {
    BigInt::from(p.size()) - st_small_excedances(p)
}

fn st_not_cyclical_small_weak_excedances(p: &Permutation) -> BigInt {
    BigInt::from(p.size()) - st_cyclical_small_weak_excedances(p)
}

fn st_support_size(p: &Permutation) -> BigInt {
    count(p, |i, v| v != i)
}

fn st_even_weak_def_odd_weak_exc(p: &Permutation) -> BigInt {
    count(p, |i, v| if i % 2 == 0 { v <= i } else { v >= i })
}

fn st_depth(p: &Permutation) -> BigInt {
    let d: usize = (1..=p.size())
        .filter(|&i| p.entry(i) > i)
        .map(|i| p.entry(i) - i)
        .sum();
    BigInt::from(d)
}

fn st_total_displacement(p: &Permutation) -> BigInt {
    let d: usize = (1..=p.size()).map(|i| p.entry(i).abs_diff(i)).sum();
    BigInt::from(d)
}

fn st_spearman_rho(p: &Permutation) -> BigInt {
    let d: usize = (1..=p.size())
        .map(|i| {
            let diff = p.entry(i).abs_diff(i);
            diff * diff
        })
        .sum();
    BigInt::from(d)
}

fn st_inversion_sum(p: &Permutation) -> BigInt {
    let n = p.size();
    let mut sum = 0usize;
    for i in 1..=n {
        for j in i + 1..=n {
            if p.entry(j) < p.entry(i) {
                sum += j - i;
            }
        }
    }
    BigInt::from(sum)
}

fn st_non_inversion_sum(p: &Permutation) -> BigInt {
    let n = p.size();
    let mut sum = 0usize;
    for i in 1..=n {
        for j in i + 1..=n {
            if p.entry(i) < p.entry(j) {
                sum += j - i;
            }
        }
    }
    BigInt::from(sum)
}

fn st_inversion_number(p: &Permutation) -> BigInt {
    let n = p.size();
    let mut c = 0usize;
    for i in 1..=n {
        for j in i + 1..=n {
            if p.entry(j) < p.entry(i) {
                c += 1;
            }
        }
    }
    BigInt::from(c)
}

fn st_cosine(p: &Permutation) -> BigInt {
    let s: usize = (1..=p.size()).map(|i| i * p.entry(i)).sum();
    BigInt::from(s)
}

fn st_prime_column_sums(p: &Permutation) -> BigInt {
    count(p, |i, v| is_prime((i + v) as u64))
}

fn st_prime_products_minus_one(p: &Permutation) -> BigInt {
    count(p, |i, v| is_prime((i * v - 1) as u64))
}

fn st_prime_products_plus_one(p: &Permutation) -> BigInt {
    count(p, |i, v| is_prime((i * v + 1) as u64))
}

fn st_scaled_reciprocal_sum(p: &Permutation) -> BigInt {
    let n = p.size();
    let ell = lcm_upto(2 * n);
    let mut sum = BigInt::from(0);
    for i in 1..=n {
        sum += &ell / BigInt::from(i + p.entry(i));
    }
    sum
}

fn st_half_mixed_parity_pairs(p: &Permutation) -> BigInt {
    let c = (1..=p.size()).filter(|&i| (i + p.entry(i)) % 2 == 1).count();
    debug_assert!(c % 2 == 0, "mixed-parity positions pair up");
    BigInt::from(c / 2)
}

fn st_descents(p: &Permutation) -> BigInt {
    let c = (1..p.size()).filter(|&i| p.entry(i) > p.entry(i + 1)).count();
    BigInt::from(c)
}

fn st_ascents(p: &Permutation) -> BigInt {
    let c = (1..p.size()).filter(|&i| p.entry(i) < p.entry(i + 1)).count();
    BigInt::from(c)
}

fn st_runs(p: &Permutation) -> BigInt {
    st_descents(p) + 1
}

fn st_odd_descents(p: &Permutation) -> BigInt {
    let c = (1..p.size())
        .filter(|&i| i % 2 == 1 && p.entry(i) > p.entry(i + 1))
        .count();
    BigInt::from(c)
}

fn st_odd_ascents(p: &Permutation) -> BigInt {
    let c = (1..p.size())
        .filter(|&i| i % 2 == 1 && p.entry(i) < p.entry(i + 1))
        .count();
    BigInt::from(c)
}

fn st_strict_three_descents(p: &Permutation) -> BigInt {
    let n = p.size();
    let c = (1..=n.saturating_sub(3))
        .filter(|&i| p.entry(i) > p.entry(i + 3))
        .count();
    BigInt::from(c)
}

fn st_reflection_trace(p: &Permutation) -> BigInt {
    st_fixed_points(p) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_symmetric_group;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ev(id: u32, s: &str) -> i64 {
        i64::try_from(evaluate(StatisticId::Findstat(id), &p(s)).unwrap()).unwrap()
    }

    #[test]
    fn fixed_points_small_cases() {
        assert_eq!(ev(22, "123"), 3);
        assert_eq!(ev(22, "231"), 0);
        assert_eq!(ev(22, "321"), 1);
    }

    #[test]
    fn excedance_counts_on_figure_permutation() {
        assert_eq!(ev(155, "74135862"), 3);
        assert_eq!(ev(703, "74135862"), 4);
        assert_eq!(ev(22, "74135862"), 1);
    }

    #[test]
    fn scaled_reciprocal_sum_hand_case() {
        // n=3, lcm{1..6}=60, entries give 60*(1/2+1/4+1/6) = 55.
        assert_eq!(ev(1293, "123"), 55);
        assert_eq!(ev(1293, "231"), 47);
        assert_eq!(ev(1293, "312"), 47);
    }

    #[test]
    fn depth_is_half_total_displacement_on_s5() {
        for q in enumerate_symmetric_group(5).unwrap() {
            let depth = evaluate(StatisticId::Findstat(29), &q).unwrap();
            let disp = evaluate(StatisticId::Findstat(830), &q).unwrap();
            assert_eq!(depth * 2, disp);
        }
    }

    #[test]
    fn complementarity_identities_on_s5() {
        let f = StatisticId::Findstat;
        for q in enumerate_symmetric_group(5).unwrap() {
            let n = BigInt::from(5);
            let e = |id| evaluate(f(id), &q).unwrap();
            assert_eq!(e(155) + e(703) + e(22), n.clone());
            assert_eq!(e(21) + e(245), BigInt::from(4));
            assert_eq!(e(235), n.clone() - e(241));
            assert_eq!(e(238), n.clone() - e(239));
            assert_eq!(e(240), n.clone() - e(237));
            assert_eq!(e(242), n.clone() - e(236));
        }
    }

    #[test]
    fn spearman_rho_is_twice_inversion_sum_on_s5() {
        for q in enumerate_symmetric_group(5).unwrap() {
            let rho = evaluate(StatisticId::Findstat(828), &q).unwrap();
            let is = evaluate(StatisticId::Findstat(55), &q).unwrap();
            assert_eq!(rho, is * 2);
        }
    }

    #[test]
    fn non_inversion_sum_is_inversion_sum_of_reversal_on_s5() {
        for q in enumerate_symmetric_group(5).unwrap() {
            let nis = evaluate(StatisticId::Findstat(341), &q).unwrap();
            let is_rev = evaluate(StatisticId::Findstat(55), &q.reverse()).unwrap();
            assert_eq!(nis, is_rev);
        }
    }

    #[test]
    fn stat_1439_decomposes_into_strict_parts_plus_fixed_points_on_s5() {
        for q in enumerate_symmetric_group(5).unwrap() {
            let strict_even_def =
                (1..=5).filter(|&i| i % 2 == 0 && q.entry(i) < i).count();
            let strict_odd_exc = (1..=5).filter(|&i| i % 2 == 1 && q.entry(i) > i).count();
            let fp = evaluate(StatisticId::Findstat(22), &q).unwrap();
            let got = evaluate(StatisticId::Findstat(1439), &q).unwrap();
            assert_eq!(got, BigInt::from(strict_even_def + strict_odd_exc) + fp);
        }
    }

    #[test]
    fn runs_and_tree_width_are_descents_plus_one_on_s5() {
        for q in enumerate_symmetric_group(5).unwrap() {
            let des = evaluate(StatisticId::Findstat(21), &q).unwrap();
            let runs = evaluate(StatisticId::Findstat(470), &q).unwrap();
            let width = evaluate(StatisticId::Findstat(325), &q).unwrap();
            assert_eq!(runs, des + 1);
            assert_eq!(runs, width);
        }
    }

    #[test]
    fn middle_entry_statistics() {
        // n=5: upper middle = pi(3), lower middle = pi(3); n=6: pi(4)/pi(3).
        assert_eq!(ev(1806, "52341"), 3);
        assert_eq!(ev(1807, "52341"), 3);
        assert_eq!(ev(1806, "523416"), 4);
        assert_eq!(ev(1807, "523416"), 3);
        assert_eq!(ev(54, "52341"), 5);
        assert_eq!(ev(740, "52341"), 1);
    }

    #[test]
    fn cyclical_small_excedances_wrap_around() {
        // 234...n1 is a cyclical small excedance at every position.
        assert_eq!(ev(241, "2341"), 4);
        assert_eq!(ev(236, "2341"), 4);
        assert_eq!(ev(241, "1234"), 0);
        assert_eq!(ev(236, "1234"), 4);
    }

    #[test]
    fn strict_three_descents_cases() {
        assert_eq!(ev(1520, "123"), 0);
        assert_eq!(ev(1520, "4123"), 1);
        assert_eq!(ev(1520, "12345"), 0);
        assert_eq!(ev(1520, "52341"), 2);
    }

    #[test]
    fn odd_descents_and_odd_ascents() {
        assert_eq!(ev(1114, "213"), 1);
        assert_eq!(
            evaluate(StatisticId::OddAscents, &p("213")).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            evaluate(StatisticId::OddAscents, &p("123")).unwrap(),
            BigInt::from(1)
        );
    }

    #[test]
    fn all_values_nonnegative_except_reflection_trace_on_s5() {
        let registry = StatisticRegistry::standard();
        for q in enumerate_symmetric_group(5).unwrap() {
            for def in registry.list() {
                let v = def.evaluate(&q);
                if def.id == StatisticId::ReflectionTrace {
                    assert!(v >= BigInt::from(-1));
                } else {
                    assert!(v >= BigInt::from(0), "{} on {q} is negative", def.id);
                }
            }
        }
    }

    #[test]
    fn registry_listing_is_sorted_unique_and_large_enough() {
        let listing = list_statistics();
        assert!(listing.len() >= 40);
        let ids: Vec<StatisticId> = listing.iter().map(|(id, _)| *id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        let (_, desc) = listing
            .iter()
            .find(|(id, _)| *id == StatisticId::Findstat(22))
            .unwrap();
        assert!(desc.contains("fixed points"));
    }

    #[test]
    fn unknown_statistic_reports_known_ids() {
        let err = evaluate(StatisticId::Findstat(9999), &p("123")).unwrap_err();
        match err {
            Error::UnknownStatistic { id, known } => {
                assert_eq!(id, "9999");
                assert!(known.contains("22"));
                assert!(known.contains("odd_ascents"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn statistic_id_parsing_round_trips() {
        for s in ["22", "1293", "odd_ascents", "inversion_number", "reflection_trace"] {
            let id: StatisticId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        assert!("nope".parse::<StatisticId>().is_err());
    }
}
