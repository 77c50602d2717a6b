//! Counterexample search for the two Cáceres-type properties that do not
//! carry over from graphs to the md metric.
//!
//! * [`CaceresPart::IntervalClosure`]: `Ct = Per` yet `I[Ct] ≠ V`.
//! * [`CaceresPart::CardinalityTwo`]: `|Ct| = |Per| = 2` yet `|∂| = 3`.
//!
//! A random phase runs first. If it finds nothing and `trials > 0`, labeled
//! digraphs with at most [`EXHAUSTIVE_MAX_N`] vertices are enumerated in
//! increasing order and the first witness is returned.

use rand::Rng;
use serde::Serialize;

use crate::boundary::report_from_tables;
use crate::digraph::Digraph;
use crate::metric::{geodetic_closure, md_tables};
use crate::verify::generate::{rng_from_seed, strong_digraph_from, symmetrize, trial_seed};
use crate::verify::suite::shrink;
use crate::VertexSet;

pub const EXHAUSTIVE_MAX_N: usize = 5;
/// Random-phase witnesses kept per search; further hits are only counted.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaceresPart {
    IntervalClosure,
    CardinalityTwo,
}

impl CaceresPart {
    pub fn name(self) -> &'static str {
        match self {
            CaceresPart::IntervalClosure => "interval-closure",
            CaceresPart::CardinalityTwo => "cardinality-two",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "interval-closure" | "1" => Some(CaceresPart::IntervalClosure),
            "cardinality-two" | "2" => Some(CaceresPart::CardinalityTwo),
            _ => None,
        }
    }

    /// Witness description when `g` violates this part, `None` otherwise.
    pub fn violation(self, g: &Digraph) -> Option<String> {
        let t = md_tables(g).ok()?;
        let r = report_from_tables(g, &t);
        match self {
            CaceresPart::IntervalClosure => {
                if r.contour != r.periphery {
                    return None;
                }
                let closure = geodetic_closure(&t, &r.contour).ok()?;
                let missing: VertexSet = (0..g.vertex_count())
                    .filter(|v| !closure.contains(v))
                    .collect();
                (!missing.is_empty()).then(|| {
                    format!(
                        "Ct = Per = {:?}; I[Ct] = {:?} misses {:?}",
                        r.contour, closure, missing
                    )
                })
            }
            CaceresPart::CardinalityTwo => {
                let hit = r.contour.len() == 2 && r.periphery.len() == 2 && r.boundary.len() == 3;
                hit.then(|| {
                    format!(
                        "|Ct| = |Per| = 2 (Ct = {:?}, Per = {:?}) but boundary = {:?}",
                        r.contour, r.periphery, r.boundary
                    )
                })
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub which: CaceresPart,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    pub symmetric_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Origin {
    /// Random phase; the trial seed regenerates the unshrunk digraph.
    Trial { seed: u64 },
    /// Exhaustive phase; bit `k` of `mask` selects the `k`-th candidate arc.
    Enumeration { n: usize, mask: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub origin: Origin,
    #[serde(serialize_with = "crate::io::serialize_digraph")]
    pub digraph: Digraph,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    /// Random-phase trials whose digraph violated the property.
    pub random_hits: usize,
    pub exhaustive_used: bool,
    pub witnesses: Vec<Witness>,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Digraph of one random-phase trial. Sizes start at 2.
pub fn trial_digraph(seed: u64, max_n: usize, symmetric_only: bool) -> Digraph {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(2.min(max_n)..=max_n.max(1));
    let p = rng.random_range(0.0..=0.5);
    let g = strong_digraph_from(&mut rng, n, p);
    if symmetric_only {
        symmetrize(&g)
    } else {
        g
    }
}

pub fn search_caceres_counterexample(cfg: SearchConfig) -> SearchOutcome {
    let mut outcome = SearchOutcome {
        config: cfg,
        random_hits: 0,
        exhaustive_used: false,
        witnesses: Vec::new(),
    };
    for i in 0..cfg.trials {
        let seed = trial_seed(cfg.seed, i as u64);
        let g = trial_digraph(seed, cfg.max_n, cfg.symmetric_only);
        if cfg.which.violation(&g).is_none() {
            continue;
        }
        outcome.random_hits += 1;
        if outcome.witnesses.len() < MAX_WITNESSES {
            let small = shrink(std::slice::from_ref(&g), |gs| {
                gs[0].is_strongly_connected()
                    && (!cfg.symmetric_only || gs[0].is_symmetric())
                    && cfg.which.violation(&gs[0]).is_some()
            })
            .remove(0);
            let description = cfg
                .which
                .violation(&small)
                .expect("shrinking keeps the violation");
            outcome.witnesses.push(Witness {
                origin: Origin::Trial { seed },
                digraph: small,
                description,
            });
        }
    }
    if outcome.witnesses.is_empty() && cfg.trials > 0 {
        outcome.exhaustive_used = true;
        let limit = cfg.max_n.min(EXHAUSTIVE_MAX_N);
        outcome.witnesses.extend(exhaustive_caceres_search(
            cfg.which,
            limit,
            cfg.symmetric_only,
        ));
    }
    outcome
}

/// First witness over labeled strong digraphs with `2..=max_n` vertices.
/// For `symmetric_only`, candidate arcs are unordered pairs taken both ways.
pub fn exhaustive_caceres_search(
    which: CaceresPart,
    max_n: usize,
    symmetric_only: bool,
) -> Option<Witness> {
    for n in 2..=max_n.min(EXHAUSTIVE_MAX_N) {
        let candidates: Vec<(usize, usize)> = if symmetric_only {
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect()
        } else {
            (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect()
        };
        for mask in 0u64..(1u64 << candidates.len()) {
            let arcs = candidates
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .flat_map(|(_, &(u, v))| {
                    let back = symmetric_only.then_some((v, u));
                    std::iter::once((u, v)).chain(back)
                });
            let g = Digraph::build(n, arcs).expect("candidate arcs are valid");
            if !g.is_strongly_connected() {
                continue;
            }
            if let Some(description) = which.violation(&g) {
                return Some(Witness {
                    origin: Origin::Enumeration { n, mask },
                    digraph: g,
                    description,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;

    #[test]
    fn fixtures_do_not_violate() {
        for (name, g) in all() {
            assert!(
                CaceresPart::IntervalClosure.violation(&g).is_none(),
                "{name}"
            );
        }
    }

    #[test]
    fn zero_trials_is_empty() {
        let out = search_caceres_counterexample(SearchConfig {
            which: CaceresPart::IntervalClosure,
            trials: 0,
            max_n: 7,
            seed: 1,
            symmetric_only: false,
        });
        assert!(!out.found());
        assert!(!out.exhaustive_used);
    }

    #[test]
    fn interval_closure_witness_exists() {
        let w = exhaustive_caceres_search(CaceresPart::IntervalClosure, 5, false).unwrap();
        assert!(w.digraph.is_strongly_connected());
        assert!(CaceresPart::IntervalClosure.violation(&w.digraph).is_some());
    }

    #[test]
    fn random_witnesses_are_shrunk_and_valid() {
        let out = search_caceres_counterexample(SearchConfig {
            which: CaceresPart::IntervalClosure,
            trials: 300,
            max_n: 7,
            seed: 3,
            symmetric_only: false,
        });
        assert!(out.found());
        for w in &out.witnesses {
            assert!(CaceresPart::IntervalClosure.violation(&w.digraph).is_some());
            let Origin::Trial { seed } = w.origin else {
                panic!("random phase")
            };
            let original = trial_digraph(seed, 7, false);
            assert!(w.digraph.vertex_count() <= original.vertex_count());
        }
    }

    #[test]
    fn parse_names() {
        for p in [CaceresPart::IntervalClosure, CaceresPart::CardinalityTwo] {
            assert_eq!(CaceresPart::parse(p.name()), Some(p));
        }
        assert_eq!(CaceresPart::parse("3"), None);
    }
}
