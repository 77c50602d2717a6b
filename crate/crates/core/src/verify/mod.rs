//! Independent oracle, seeded generators, the randomized property suite,
//! counterexample search and cost accounting.

pub mod cost;
pub mod generate;
pub mod oracle;
pub mod search;
pub mod suite;

pub use cost::{benchmark_step_counts, measure_wall_times, CostLedger, WallTiming};
pub use generate::{
    random_strong_digraph, rng_from_seed, trial_seed, GeneratorConfig, RNG_ALGORITHM,
};
pub use oracle::oracle_md;
pub use search::{
    exhaustive_caceres_search, search_caceres_counterexample, CaceresPart, SearchConfig,
    SearchOutcome, Witness,
};
pub use suite::{
    property_names, replay, replay_with, run_property_suite, run_property_suite_with, run_selected,
    trial_inputs, Failure, PropertyOutcome, SuiteConfig, TablesFn,
};
