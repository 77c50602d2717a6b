//! Seeded random strong digraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Name of the generator behind every seeded stream, for report headers.
pub const RNG_ALGORITHM: &str = "ChaCha8";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub extra_arc_probability: f64,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        let p = self.extra_arc_probability;
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidConfig(format!(
                "probability {p} outside [0, 1]"
            )));
        }
        Ok(())
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed for trial `index` of a suite run: the first word of stream `index`
/// under the suite seed.
pub fn trial_seed(suite_seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(suite_seed);
    rng.set_stream(index);
    rng.random()
}

/// A Hamiltonian directed cycle through a random permutation of the vertices,
/// plus every other ordered pair independently with `extra_arc_probability`.
pub fn random_strong_digraph(cfg: &GeneratorConfig) -> Result<Digraph> {
    cfg.validate()?;
    let mut rng = rng_from_seed(cfg.seed);
    Ok(strong_digraph_from(
        &mut rng,
        cfg.n,
        cfg.extra_arc_probability,
    ))
}

pub(crate) fn strong_digraph_from(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cycle = vec![false; n * n];
    let mut arcs = Vec::new();
    if n > 1 {
        for i in 0..n {
            let (t, h) = (order[i], order[(i + 1) % n]);
            cycle[t * n + h] = true;
            arcs.push((t, h));
        }
    }
    for t in 0..n {
        for h in 0..n {
            if t != h && !cycle[t * n + h] && rng.random_bool(p) {
                arcs.push((t, h));
            }
        }
    }
    Digraph::build(n, arcs).expect("generated arcs are simple")
}

/// Arbitrary digraph with each ordered pair present with probability `p`;
/// may or may not be strong.
pub(crate) fn any_digraph_from(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for t in 0..n {
        for h in 0..n {
            if t != h && rng.random_bool(p) {
                arcs.push((t, h));
            }
        }
    }
    Digraph::build(n, arcs).expect("generated arcs are simple")
}

/// Symmetric closure of a strong digraph: every arc gets its reverse.
pub(crate) fn symmetrize(g: &Digraph) -> Digraph {
    let mut arcs: Vec<_> = g.arcs().to_vec();
    arcs.extend(g.arcs().iter().map(|&(t, h)| (h, t)));
    arcs.sort_unstable();
    arcs.dedup();
    Digraph::build(g.vertex_count(), arcs).expect("symmetric closure is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = random_strong_digraph(&GeneratorConfig {
            n: 1,
            extra_arc_probability: 0.0,
            seed: 99,
        })
        .unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (1, 0));
    }

    #[test]
    fn zero_probability_gives_a_cycle() {
        for seed in 0..20 {
            let g = random_strong_digraph(&GeneratorConfig {
                n: 5,
                extra_arc_probability: 0.0,
                seed,
            })
            .unwrap();
            assert!(g.is_directed_cycle());
        }
    }

    #[test]
    fn seeded_output_is_strong_and_deterministic() {
        let cfg = GeneratorConfig {
            n: 6,
            extra_arc_probability: 0.3,
            seed: 42,
        };
        let g = random_strong_digraph(&cfg).unwrap();
        assert!(g.is_strongly_connected());
        assert_eq!(g, random_strong_digraph(&cfg).unwrap());
    }

    #[test]
    fn invalid_configs() {
        for (n, p) in [(0, 0.5), (3, -0.1), (3, 1.5), (3, f64::NAN)] {
            let cfg = GeneratorConfig {
                n,
                extra_arc_probability: p,
                seed: 0,
            };
            assert!(random_strong_digraph(&cfg).is_err(), "{n} {p}");
        }
    }

    #[test]
    fn trial_seeds_differ_per_stream() {
        let a = trial_seed(7, 0);
        assert_eq!(a, trial_seed(7, 0));
        assert_ne!(a, trial_seed(7, 1));
        assert_ne!(a, trial_seed(8, 0));
    }

    #[test]
    fn symmetrize_makes_symmetric() {
        let g = random_strong_digraph(&GeneratorConfig {
            n: 6,
            extra_arc_probability: 0.2,
            seed: 3,
        })
        .unwrap();
        let s = symmetrize(&g);
        assert!(s.is_symmetric());
        assert!(g.arcs().iter().all(|&(t, h)| s.has_arc(t, h)));
    }
}
