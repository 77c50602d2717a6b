//! Step counts for direct versus factored analysis.
//!
//! One step is one ordered-pair directed-distance evaluation. Analysing an
//! `N`-vertex digraph directly takes `N(N-1)` steps; analysing its factors
//! takes `Σ n_i(n_i - 1)`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::boundary::full_report;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::product::{factor_analysis, factored_sets_with_budget, n_ary_product_with_budget};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CostLedger {
    pub factor_sizes: Vec<usize>,
    pub direct_evals: u64,
    pub factored_evals: u64,
}

impl CostLedger {
    pub fn for_sizes(sizes: &[usize]) -> Self {
        let pairs = |n: u64| n * n.saturating_sub(1);
        let total: u64 = sizes.iter().map(|&s| s as u64).product();
        CostLedger {
            factor_sizes: sizes.to_vec(),
            direct_evals: pairs(total),
            factored_evals: sizes.iter().map(|&s| pairs(s as u64)).sum(),
        }
    }
}

pub fn benchmark_step_counts(factor_sizes: &[usize]) -> Result<CostLedger> {
    if factor_sizes.is_empty() {
        return Err(Error::NoFactors);
    }
    if factor_sizes.contains(&0) {
        return Err(Error::NoVertices);
    }
    Ok(CostLedger::for_sizes(factor_sizes))
}

/// Median wall time per run of each route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WallTiming {
    pub repetitions: usize,
    #[serde(rename = "direct_ns", serialize_with = "as_nanos")]
    pub direct: Duration,
    #[serde(rename = "factored_ns", serialize_with = "as_nanos")]
    pub factored: Duration,
}

fn as_nanos<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_nanos().min(u64::MAX as u128) as u64)
}

fn median_time(repetitions: usize, mut f: impl FnMut() -> Result<()>) -> Result<Duration> {
    let mut samples = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        f()?;
        samples.push(start.elapsed());
    }
    samples.sort_unstable();
    Ok(samples[samples.len() / 2])
}

/// Times `full_report` on the prebuilt explicit product against factor
/// analysis plus `factored_sets` on the factors.
pub fn measure_wall_times(
    factors: &[Digraph],
    repetitions: usize,
    budget: usize,
) -> Result<WallTiming> {
    let repetitions = repetitions.max(1);
    let product = n_ary_product_with_budget(factors, budget)?;
    let direct = median_time(repetitions, || {
        std::hint::black_box(full_report(&product)?);
        Ok(())
    })?;
    let factored = median_time(repetitions, || {
        let analysis = factor_analysis(factors)?;
        std::hint::black_box(factored_sets_with_budget(factors, &analysis, budget)?);
        Ok(())
    })?;
    Ok(WallTiming {
        repetitions,
        direct,
        factored,
    })
}
