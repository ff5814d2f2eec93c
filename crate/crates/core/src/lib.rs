//! Exact-arithmetic toolkit for orbit dynamics of permutation maps.
//!
//! The crate decomposes the symmetric group `S_n` under five families of
//! bijective maps (rotation, right multiplication by an n-cycle, pair
//! swapping, parity rotation, and valley hopping), evaluates a catalog of
//! FindStat-numbered permutation statistics over the orbits, and decides
//! homomesy — whether a statistic has the same average on every orbit —
//! with exact rational arithmetic throughout. A closed-form table of the
//! proven orbit averages serves as an independent oracle for the engine.
//!
//! Modules mirror that pipeline:
//!
//! - [`perm`]: value-semantic permutations of `[n]` in one-line notation,
//!   composition, simple transpositions, n-cycle construction, and
//!   lexicographic enumeration of the whole group.
//! - [`maps`]: the map families as step functions and orbit builders.
//! - [`stats`]: the statistic registry keyed by FindStat id.
//! - [`engine`]: full-group orbit decomposition and structural checks
//!   (orbit sizes, position/value pair coverage, pair-sum multiplicities).
//! - [`homomesy`]: exact orbit averages and homomesy verdicts with
//!   two-orbit counterexample witnesses.
//! - [`formulas`]: the closed-form expected averages per map family.
//!
//! Everything is deterministic: enumeration is lexicographic and orbits
//! are reported in canonical seed order, so results are reproducible
//! byte-for-byte.

pub mod engine;
pub mod formulas;
pub mod homomesy;
pub mod maps;
pub mod perm;
pub mod stats;

pub use engine::{decompose, pair_sum_multiplicity, zeta, OrbitDecomposition, ZetaSet};
pub use formulas::{expected_average, harmonic, is_prime, lcm_upto, FormulaTable, MapFamily};
pub use homomesy::{
    check_homomesy, check_linear_combination, global_average, orbit_average, HomomesyVerdict,
    LinearCombination, OrbitWitness, Rational,
};
pub use maps::{
    foata_strehl_toggle, orbit_of, pair_swap, parity_rotate, parity_rotate_inv, rotate, togglable_set,
    Orbit, OrbitGenerator,
};
pub use perm::{cycle_from_toggle_order, enumerate_symmetric_group, long_cycle, Permutation};
pub use stats::{evaluate, list_statistics, StatisticId, StatisticRegistry};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: operands have sizes {left} and {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("position {position} out of range for a permutation of size {n}")]
    PositionOutOfRange { position: usize, n: usize },

    #[error("value {value} out of range [1, {n}]")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("{what} is not a bijection of [{n}]")]
    NotABijection { what: &'static str, n: usize },

    #[error("permutation {word} is not a single cycle of length {n}")]
    NotAnNCycle { word: String, n: usize },

    #[error("n = {n} exceeds the enumeration guard ({max_n}); raise the guard or reduce n")]
    EnumerationGuard { n: usize, max_n: usize },

    #[error("unknown statistic '{id}'; known ids: {known}")]
    UnknownStatistic { id: String, known: String },

    #[error("no formula row for ({family}, {id})")]
    UnknownFormula { family: String, id: String },

    #[error("formula row ({family}, {id}) is not defined at n = {n}: {reason}")]
    FormulaDomain {
        family: String,
        id: String,
        n: usize,
        reason: String,
    },

    #[error("pair sum {k} out of range [2, {max}] for n = {n}")]
    PairSumOutOfRange { k: usize, n: usize, max: usize },

    #[error("cannot parse '{input}': {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
