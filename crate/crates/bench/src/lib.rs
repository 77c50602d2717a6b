//! Inputs for the direct-versus-factored benchmarks.

use mdgraph::verify::random_strong_digraph;
use mdgraph::{Digraph, GeneratorConfig};

/// Directed cycles of the given lengths; length 1 is the single vertex.
pub fn cycle_factors(sizes: &[usize]) -> Vec<Digraph> {
    sizes
        .iter()
        .map(|&n| match n {
            1 => Digraph::trivial(),
            n => Digraph::directed_cycle(n).expect("length at least 2"),
        })
        .collect()
}

/// Seeded random strong factors, `count` of them with `n` vertices each.
pub fn random_factors(count: usize, n: usize, seed: u64) -> Vec<Digraph> {
    (0..count as u64)
        .map(|i| {
            random_strong_digraph(&GeneratorConfig {
                n,
                extra_arc_probability: 0.3,
                seed: seed.wrapping_add(i),
            })
            .expect("valid config")
        })
        .collect()
}
