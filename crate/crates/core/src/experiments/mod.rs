//! Dividing sets, the `α(n)` search, randomized hunts, and the named
//! verification suites with their reports.

pub mod alpha;
pub mod dividing;
pub mod gen;
pub mod hunt;
pub mod report;
mod suites;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use alpha::{alpha_search, AlphaLevel, AlphaOptions};
pub use dividing::{build_sqrt_dividing_family, verify_dividing_set, DividingCheck, DividingSet};
pub use hunt::{hunt_counterexample, Conjecture};
pub use report::{reports_to_csv, Report, Row};
pub use suites::{run_all, run_suite, SUITES};

/// Seed used when neither a flag nor `CLOSURELAB_SEED` provides one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// `CLOSURELAB_SEED` if it is set to an integer, otherwise [`DEFAULT_SEED`].
pub fn default_seed() -> u64 {
    std::env::var("CLOSURELAB_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Independent generator for case `case` of a run seeded with `seed`, so
/// cases can be evaluated in any order or in parallel.
pub fn rng_for(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest `n` for the `alpha` and `hunt-alpha` suites.
    pub alpha_max_n: usize,
    /// Number of random pairs for `hunt-singular`.
    pub hunt_budget: usize,
    /// Worker threads for the `α` search; `0` uses the global pool.
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: default_seed(),
            alpha_max_n: 9,
            hunt_budget: 1000,
            jobs: 0,
        }
    }
}
