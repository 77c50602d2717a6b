//! Randomized property suite over seeded strong digraphs and factor pairs.
//!
//! Every trial draws its own `u64` seed from the suite seed (one ChaCha
//! stream per trial index), and all inputs of the trial are derived from that
//! seed alone, so a failure can be replayed with [`replay`]. Failing inputs
//! are shrunk greedily by deleting vertices and arcs while the violation
//! persists and the inputs stay within the property's input class.

use std::collections::VecDeque;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{report_from_tables, BoundaryReport};
use crate::digraph::Digraph;
use crate::error::Result;
use crate::metric::{md_tables, DistanceTables};
use crate::product::{
    cartesian_product, factor_analysis, factored_sets, n_ary_product, product_distance,
    ProductShape,
};
use crate::verify::generate::{
    any_digraph_from, rng_from_seed, strong_digraph_from, symmetrize, trial_seed,
};
use crate::verify::oracle::oracle_md;
use crate::{VertexId, VertexSet};

/// Factor sizes in pair properties are capped here so products stay small.
pub const MAX_FACTOR_SIZE: usize = 6;
const MAX_TRIPLE_FACTOR_SIZE: usize = 4;

/// Source of md tables under test. The default is [`md_tables`].
pub type TablesFn = dyn Fn(&Digraph) -> Result<DistanceTables> + Sync;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Trial seed; `replay(property, seed, max_n)` regenerates the same inputs.
    pub seed: u64,
    /// Shrunk inputs.
    #[serde(serialize_with = "crate::io::serialize_digraphs")]
    pub digraphs: Vec<Digraph>,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub name: String,
    pub trials: usize,
    pub failures: Vec<Failure>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Inputs {
    Strong,
    Any,
    Symmetric,
    Cycle,
    StrongPair,
    /// Each factor strong or arbitrary with equal odds.
    MixedPair,
    /// One symmetric factor, one strong factor, in random order.
    SymmetricPair,
    StrongTriple,
}

impl Inputs {
    fn generate(self, seed: u64, max_n: usize) -> Vec<Digraph> {
        let mut rng = rng_from_seed(seed);
        let max_n = max_n.max(1);
        let pair_n = max_n.min(MAX_FACTOR_SIZE);
        let strong = |rng: &mut rand_chacha::ChaCha8Rng, hi: usize| {
            let n = rng.random_range(1..=hi);
            let p = rng.random_range(0.0..=0.5);
            strong_digraph_from(rng, n, p)
        };
        match self {
            Inputs::Strong => vec![strong(&mut rng, max_n)],
            Inputs::Any => {
                let n = rng.random_range(1..=max_n);
                let p = rng.random_range(0.1..=0.6);
                vec![any_digraph_from(&mut rng, n, p)]
            }
            Inputs::Symmetric => vec![symmetrize(&strong(&mut rng, max_n))],
            Inputs::Cycle => {
                let n = rng.random_range(1..=max_n);
                vec![strong_digraph_from(&mut rng, n, 0.0)]
            }
            Inputs::StrongPair => vec![strong(&mut rng, pair_n), strong(&mut rng, pair_n)],
            Inputs::MixedPair => (0..2)
                .map(|_| {
                    if rng.random_bool(0.5) {
                        strong(&mut rng, pair_n)
                    } else {
                        let n = rng.random_range(1..=pair_n);
                        let p = rng.random_range(0.1..=0.6);
                        any_digraph_from(&mut rng, n, p)
                    }
                })
                .collect(),
            Inputs::SymmetricPair => {
                let sym = symmetrize(&strong(&mut rng, pair_n));
                let other = strong(&mut rng, pair_n);
                if rng.random_bool(0.5) {
                    vec![sym, other]
                } else {
                    vec![other, sym]
                }
            }
            Inputs::StrongTriple => {
                let hi = max_n.min(MAX_TRIPLE_FACTOR_SIZE);
                (0..3).map(|_| strong(&mut rng, hi)).collect()
            }
        }
    }

    /// Whether shrunk inputs still belong to this input class.
    fn admits(self, gs: &[Digraph]) -> bool {
        let strong = || gs.iter().all(Digraph::is_strongly_connected);
        match self {
            Inputs::Any | Inputs::MixedPair => true,
            Inputs::Strong | Inputs::StrongPair | Inputs::StrongTriple => strong(),
            Inputs::Symmetric => strong() && gs.iter().all(Digraph::is_symmetric),
            Inputs::Cycle => gs
                .iter()
                .all(|g| g.vertex_count() == 1 || g.is_directed_cycle()),
            Inputs::SymmetricPair => strong() && gs.iter().any(Digraph::is_symmetric),
        }
    }
}

type Check = std::result::Result<(), String>;

struct Ctx<'a> {
    tables: &'a TablesFn,
}

impl Ctx<'_> {
    fn tables(&self, g: &Digraph) -> std::result::Result<DistanceTables, String> {
        (self.tables)(g).map_err(|e| e.to_string())
    }

    fn report(&self, g: &Digraph) -> std::result::Result<(DistanceTables, BoundaryReport), String> {
        let t = self.tables(g)?;
        let r = report_from_tables(g, &t);
        Ok((t, r))
    }
}

struct Property {
    name: &'static str,
    inputs: Inputs,
    check: fn(&Ctx, &[Digraph]) -> Check,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const PROPERTIES: &[Property] = &[
    Property {
        name: "generator-strong",
        inputs: Inputs::Strong,
        check: generator_strong,
    },
    Property {
        name: "reverse-involution",
        inputs: Inputs::Any,
        check: reverse_involution,
    },
    Property {
        name: "strong-iff-reverse-strong",
        inputs: Inputs::Any,
        check: strong_iff_reverse,
    },
    Property {
        name: "cycle-implies-strong",
        inputs: Inputs::Cycle,
        check: cycle_implies_strong,
    },
    Property {
        name: "md-oracle-agreement",
        inputs: Inputs::Strong,
        check: oracle_agreement,
    },
    Property {
        name: "md-metric-axioms",
        inputs: Inputs::Strong,
        check: metric_axioms,
    },
    Property {
        name: "ecc-and-diameter",
        inputs: Inputs::Strong,
        check: ecc_and_diameter,
    },
    Property {
        name: "symmetric-md-is-undirected-distance",
        inputs: Inputs::Symmetric,
        check: symmetric_md_undirected,
    },
    Property {
        name: "proposition-1-containments",
        inputs: Inputs::Strong,
        check: proposition_one,
    },
    Property {
        name: "caceres-analogue-3",
        inputs: Inputs::Strong,
        check: caceres_three,
    },
    Property {
        name: "caceres-analogue-4",
        inputs: Inputs::Strong,
        check: caceres_four,
    },
    Property {
        name: "cycle-sets-are-everything",
        inputs: Inputs::Cycle,
        check: cycle_sets_full,
    },
    Property {
        name: "symmetric-sets-match-undirected",
        inputs: Inputs::Symmetric,
        check: symmetric_sets_undirected,
    },
    Property {
        name: "tse-reverse-invariant",
        inputs: Inputs::Strong,
        check: tse_reverse_invariant,
    },
    Property {
        name: "symmetric-implies-tse",
        inputs: Inputs::Symmetric,
        check: single_has_tse,
    },
    Property {
        name: "cycle-implies-tse",
        inputs: Inputs::Cycle,
        check: single_has_tse,
    },
    Property {
        name: "product-distance-lemma",
        inputs: Inputs::StrongPair,
        check: product_distance_lemma,
    },
    Property {
        name: "product-distance-bound",
        inputs: Inputs::StrongPair,
        check: product_distance_bound,
    },
    Property {
        name: "product-ecc-bound",
        inputs: Inputs::StrongPair,
        check: product_ecc_bound,
    },
    Property {
        name: "periphery-subset",
        inputs: Inputs::StrongPair,
        check: periphery_subset,
    },
    Property {
        name: "contour-subset",
        inputs: Inputs::StrongPair,
        check: contour_subset,
    },
    Property {
        name: "product-ecc-additive-under-tse",
        inputs: Inputs::StrongPair,
        check: ecc_additive_under_tse,
    },
    Property {
        name: "per-ct-equality-under-tse",
        inputs: Inputs::StrongPair,
        check: per_ct_equality,
    },
    Property {
        name: "ecc-equality-under-tse",
        inputs: Inputs::StrongPair,
        check: ecc_equality,
    },
    Property {
        name: "tse-iff-both-factors",
        inputs: Inputs::StrongPair,
        check: tse_iff,
    },
    Property {
        name: "strong-iff-both-factors",
        inputs: Inputs::MixedPair,
        check: strong_iff,
    },
    Property {
        name: "undirected-factor-additivity",
        inputs: Inputs::SymmetricPair,
        check: undirected_additivity,
    },
    Property {
        name: "undirected-factor-sets",
        inputs: Inputs::SymmetricPair,
        check: undirected_factor_sets,
    },
    Property {
        name: "factored-sets-match-direct",
        inputs: Inputs::StrongPair,
        check: factored_matches_direct,
    },
    Property {
        name: "product-associativity",
        inputs: Inputs::StrongTriple,
        check: associativity,
    },
];

/// Names of every property in the suite, in execution order.
pub fn property_names() -> Vec<&'static str> {
    PROPERTIES.iter().map(|p| p.name).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
}

pub fn run_property_suite(trials: usize, max_n: usize, seed: u64) -> Vec<PropertyOutcome> {
    run_property_suite_with(
        SuiteConfig {
            trials,
            max_n,
            seed,
        },
        &md_tables,
    )
}

/// Runs every property against `tables` as the md implementation under test.
pub fn run_property_suite_with(cfg: SuiteConfig, tables: &TablesFn) -> Vec<PropertyOutcome> {
    PROPERTIES
        .iter()
        .map(|p| run_property(p, cfg, tables))
        .collect()
}

/// Runs the named properties only. Unknown names are ignored.
pub fn run_selected(names: &[&str], cfg: SuiteConfig, tables: &TablesFn) -> Vec<PropertyOutcome> {
    PROPERTIES
        .iter()
        .filter(|p| names.contains(&p.name))
        .map(|p| run_property(p, cfg, tables))
        .collect()
}

fn run_property(p: &Property, cfg: SuiteConfig, tables: &TablesFn) -> PropertyOutcome {
    let ctx = Ctx { tables };
    let mut failures: Vec<(usize, Failure)> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|i| {
            let seed = trial_seed(cfg.seed, i as u64);
            run_trial(p, &ctx, seed, cfg.max_n).map(|f| (i, f))
        })
        .collect();
    failures.sort_by_key(|(i, _)| *i);
    PropertyOutcome {
        name: p.name.to_string(),
        trials: cfg.trials,
        failures: failures.into_iter().map(|(_, f)| f).collect(),
    }
}

fn run_trial(p: &Property, ctx: &Ctx, seed: u64, max_n: usize) -> Option<Failure> {
    let inputs = p.inputs.generate(seed, max_n);
    (p.check)(ctx, &inputs).err()?;
    let digraphs = shrink(&inputs, |gs| {
        p.inputs.admits(gs) && (p.check)(ctx, gs).is_err()
    });
    let witness = (p.check)(ctx, &digraphs).expect_err("shrinking preserves the violation");
    Some(Failure {
        seed,
        digraphs,
        witness,
    })
}

/// Unshrunk inputs the named property sees for one trial seed.
pub fn trial_inputs(name: &str, seed: u64, max_n: usize) -> Option<Vec<Digraph>> {
    let p = PROPERTIES.iter().find(|p| p.name == name)?;
    Some(p.inputs.generate(seed, max_n))
}

/// Re-runs one trial of the named property from its trial seed.
pub fn replay(name: &str, seed: u64, max_n: usize) -> Option<Failure> {
    replay_with(name, seed, max_n, &md_tables)
}

pub fn replay_with(name: &str, seed: u64, max_n: usize, tables: &TablesFn) -> Option<Failure> {
    let p = PROPERTIES.iter().find(|p| p.name == name)?;
    run_trial(p, &Ctx { tables }, seed, max_n)
}

/// Greedy deletion of vertices, then arcs, from each digraph while `still_fails` holds.
pub(crate) fn shrink(inputs: &[Digraph], still_fails: impl Fn(&[Digraph]) -> bool) -> Vec<Digraph> {
    let mut current = inputs.to_vec();
    loop {
        let mut improved = false;
        for k in 0..current.len() {
            let mut v = 0;
            while v < current[k].vertex_count() {
                if let Ok(smaller) = current[k].remove_vertex(v) {
                    let mut candidate = current.clone();
                    candidate[k] = smaller;
                    if still_fails(&candidate) {
                        current = candidate;
                        improved = true;
                        continue;
                    }
                }
                v += 1;
            }
            let mut a = 0;
            while a < current[k].arc_count() {
                let mut candidate = current.clone();
                candidate[k] = current[k].remove_arc_at(a);
                if still_fails(&candidate) {
                    current = candidate;
                    improved = true;
                    continue;
                }
                a += 1;
            }
        }
        if !improved {
            return current;
        }
    }
}

fn generator_strong(_: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    ensure!(
        g.is_strongly_connected(),
        "generated digraph {:?} is not strong",
        g.arcs()
    );
    Ok(())
}

fn reverse_involution(_: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    ensure!(
        g.reverse().reverse() == *g,
        "reverse(reverse(D)) differs from D"
    );
    Ok(())
}

fn strong_iff_reverse(_: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let (a, b) = (
        g.is_strongly_connected(),
        g.reverse().is_strongly_connected(),
    );
    ensure!(a == b, "strong(D)={a} but strong(reverse D)={b}");
    Ok(())
}

fn cycle_implies_strong(_: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    ensure!(
        !g.is_directed_cycle() || g.is_strongly_connected(),
        "directed cycle is not strong"
    );
    Ok(())
}

fn oracle_agreement(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let t = ctx.tables(g)?;
    let o = oracle_md(g).map_err(|e| e.to_string())?;
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..n {
            ensure!(
                t.ddist()[(u, v)] == o.ddist()[(u, v)],
                "d({u},{v}): tables {} oracle {}",
                t.ddist()[(u, v)],
                o.ddist()[(u, v)]
            );
            ensure!(
                t.md()[(u, v)] == o.md()[(u, v)],
                "md({u},{v}): tables {} oracle {}",
                t.md()[(u, v)],
                o.md()[(u, v)]
            );
        }
    }
    ensure!(
        t.ecc() == o.ecc(),
        "ecc: tables {:?} oracle {:?}",
        t.ecc(),
        o.ecc()
    );
    Ok(())
}

fn metric_axioms(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let t = ctx.tables(g)?;
    let md = t.md();
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..n {
            ensure!(
                md[(u, v)] == md[(v, u)],
                "md({u},{v})={} but md({v},{u})={}",
                md[(u, v)],
                md[(v, u)]
            );
            ensure!((md[(u, v)] == 0) == (u == v), "md({u},{v})={}", md[(u, v)]);
            for w in 0..n {
                ensure!(
                    md[(u, v)] <= md[(u, w)] + md[(w, v)],
                    "triangle: md({u},{v})={} > md({u},{w})+md({w},{v})={}",
                    md[(u, v)],
                    md[(u, w)] + md[(w, v)]
                );
            }
        }
    }
    Ok(())
}

fn ecc_and_diameter(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let t = ctx.tables(g)?;
    let n = g.vertex_count();
    for u in 0..n {
        let row_max = t.md().row(u).iter().copied().max().unwrap_or(0);
        ensure!(
            t.ecc()[u] == row_max,
            "ecc({u})={} but row max {row_max}",
            t.ecc()[u]
        );
        ensure!(n < 2 || t.ecc()[u] >= 1, "ecc({u})=0 with {n} vertices");
    }
    let diam = t.diameter();
    let attained = (0..n).any(|u| (0..n).any(|v| t.md()[(u, v)] == diam));
    ensure!(attained, "diameter {diam} attained by no pair");
    Ok(())
}

/// Hop distances in the underlying undirected graph, one BFS per vertex.
fn undirected_distances(g: &Digraph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                let du = d[u].unwrap();
                for w in (0..n).filter(|&w| g.has_arc(u, w) || g.has_arc(w, u)) {
                    if d[w].is_none() {
                        d[w] = Some(du + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

fn symmetric_md_undirected(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let t = ctx.tables(g)?;
    let ud = undirected_distances(g);
    for (u, row) in ud.iter().enumerate() {
        for (v, d) in row.iter().enumerate() {
            ensure!(
                *d == Some(t.md()[(u, v)]),
                "md({u},{v})={} but undirected distance {:?}",
                t.md()[(u, v)],
                d
            );
        }
    }
    Ok(())
}

/// Undirected boundary-type sets written from the textbook definitions over
/// undirected distances, without going through the digraph code.
fn textbook_undirected_sets(g: &Digraph) -> [VertexSet; 4] {
    let n = g.vertex_count();
    let d: Vec<Vec<u32>> = undirected_distances(g)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("connected")).collect())
        .collect();
    let adjacent = |a: usize, b: usize| g.has_arc(a, b) || g.has_arc(b, a);
    let ecc: Vec<u32> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    let diam = *ecc.iter().max().unwrap();
    let boundary = (0..n)
        .filter(|&v| {
            (0..n).any(|u| {
                (0..n)
                    .filter(|&w| adjacent(v, w))
                    .all(|w| d[u][w] <= d[u][v])
            })
        })
        .collect();
    let eccentric = (0..n)
        .filter(|&v| (0..n).any(|u| d[u][v] == ecc[u]))
        .collect();
    let contour = (0..n)
        .filter(|&v| (0..n).filter(|&w| adjacent(v, w)).all(|w| ecc[w] <= ecc[v]))
        .collect();
    let periphery = (0..n).filter(|&v| ecc[v] == diam).collect();
    [boundary, eccentric, contour, periphery]
}

fn symmetric_sets_undirected(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let (_, r) = ctx.report(g)?;
    let [bd, ecc, ct, per] = textbook_undirected_sets(g);
    ensure!(
        r.boundary == bd,
        "boundary {:?} vs undirected {:?}",
        r.boundary,
        bd
    );
    ensure!(
        r.eccentric == ecc,
        "eccentric {:?} vs undirected {:?}",
        r.eccentric,
        ecc
    );
    ensure!(
        r.contour == ct,
        "contour {:?} vs undirected {:?}",
        r.contour,
        ct
    );
    ensure!(
        r.periphery == per,
        "periphery {:?} vs undirected {:?}",
        r.periphery,
        per
    );
    Ok(())
}

fn proposition_one(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let (_, r) = ctx.report(&gs[0])?;
    ensure!(
        r.containments_hold(),
        "Per={:?} Ct={:?} Ecc={:?} boundary={:?}",
        r.periphery,
        r.contour,
        r.eccentric,
        r.boundary
    );
    Ok(())
}

fn caceres_three(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let (_, r) = ctx.report(&gs[0])?;
    if r.eccentric.len() == r.periphery.len() + 1 {
        ensure!(
            r.boundary.len() > r.eccentric.len(),
            "|Ecc|=|Per|+1={} but |boundary|={} (Per={:?} Ecc={:?} boundary={:?})",
            r.eccentric.len(),
            r.boundary.len(),
            r.periphery,
            r.eccentric,
            r.boundary
        );
    }
    Ok(())
}

fn caceres_four(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let (_, r) = ctx.report(&gs[0])?;
    if r.eccentric.len() > r.periphery.len() {
        ensure!(
            r.boundary.len() >= r.periphery.len() + 2,
            "|Ecc|={} > |Per|={} but |boundary|={} (Per={:?} Ecc={:?} boundary={:?})",
            r.eccentric.len(),
            r.periphery.len(),
            r.boundary.len(),
            r.periphery,
            r.eccentric,
            r.boundary
        );
    }
    Ok(())
}

fn cycle_sets_full(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let (_, r) = ctx.report(g)?;
    let all: VertexSet = (0..g.vertex_count()).collect();
    for (name, s) in [
        ("boundary", &r.boundary),
        ("eccentric", &r.eccentric),
        ("contour", &r.contour),
        ("periphery", &r.periphery),
    ] {
        ensure!(*s == all, "{name} of a directed cycle is {s:?}");
    }
    Ok(())
}

fn tse_reverse_invariant(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let g = &gs[0];
    let (_, a) = ctx.report(g)?;
    let (_, b) = ctx.report(&g.reverse())?;
    ensure!(
        a.tse == b.tse,
        "tse(D)={} but tse(reverse D)={}",
        a.tse,
        b.tse
    );
    Ok(())
}

fn single_has_tse(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let (_, r) = ctx.report(&gs[0])?;
    ensure!(r.tse, "lacks two-sided eccentricity");
    Ok(())
}

struct PairData {
    shape: ProductShape,
    ta: DistanceTables,
    tb: DistanceTables,
    ra: BoundaryReport,
    rb: BoundaryReport,
    tp: DistanceTables,
    rp: BoundaryReport,
}

impl PairData {
    fn new(ctx: &Ctx, gs: &[Digraph]) -> std::result::Result<Self, String> {
        let product = cartesian_product(&gs[0], &gs[1]).map_err(|e| e.to_string())?;
        let (ta, ra) = ctx.report(&gs[0])?;
        let (tb, rb) = ctx.report(&gs[1])?;
        let (tp, rp) = ctx.report(&product)?;
        Ok(PairData {
            shape: ProductShape::of(gs).map_err(|e| e.to_string())?,
            ta,
            tb,
            ra,
            rb,
            tp,
            rp,
        })
    }

    fn coords(&self, x: VertexId) -> (VertexId, VertexId) {
        let c = self.shape.decode(x).coords;
        (c[0], c[1])
    }

    fn cross(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        self.shape
            .product_set(&[a, b])
            .expect("factor sets are in range")
    }

    fn lacking_tse(&self) -> usize {
        usize::from(!self.ra.tse) + usize::from(!self.rb.tse)
    }

    fn vertices(&self) -> usize {
        self.shape.vertex_count()
    }
}

fn product_distance_lemma(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    for x in 0..d.vertices() {
        for y in 0..d.vertices() {
            let lemma = product_distance(&d.ta, &d.tb, d.coords(x), d.coords(y))
                .map_err(|e| e.to_string())?;
            ensure!(
                lemma == d.tp.md()[(x, y)],
                "{:?}-{:?}: factor formula {lemma}, product md {}",
                d.coords(x),
                d.coords(y),
                d.tp.md()[(x, y)]
            );
        }
    }
    Ok(())
}

fn product_distance_bound(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    for x in 0..d.vertices() {
        for y in 0..d.vertices() {
            let ((i, r), (j, s)) = (d.coords(x), d.coords(y));
            let bound = d.ta.md()[(i, j)] + d.tb.md()[(r, s)];
            ensure!(
                d.tp.md()[(x, y)] <= bound,
                "md(({i},{r}),({j},{s}))={} > {bound}",
                d.tp.md()[(x, y)]
            );
        }
    }
    Ok(())
}

fn product_ecc_bound(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    for x in 0..d.vertices() {
        let (i, r) = d.coords(x);
        let bound = d.ta.ecc()[i] + d.tb.ecc()[r];
        ensure!(
            d.tp.ecc()[x] <= bound,
            "ecc({i},{r})={} > {bound}",
            d.tp.ecc()[x]
        );
    }
    Ok(())
}

fn describe(d: &PairData, s: &VertexSet) -> Vec<(VertexId, VertexId)> {
    s.iter().map(|&x| d.coords(x)).collect()
}

fn periphery_subset(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    let cross = d.cross(&d.ra.periphery, &d.rb.periphery);
    let extra: VertexSet = d.rp.periphery.difference(&cross).copied().collect();
    ensure!(
        extra.is_empty(),
        "in Per(product) but not Per x Per: {:?}",
        describe(&d, &extra)
    );
    Ok(())
}

fn contour_subset(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    let cross = d.cross(&d.ra.contour, &d.rb.contour);
    let extra: VertexSet = d.rp.contour.difference(&cross).copied().collect();
    ensure!(
        extra.is_empty(),
        "in Ct(product) but not Ct x Ct: {:?} (Ct factors {:?}, {:?})",
        describe(&d, &extra),
        d.ra.contour,
        d.rb.contour
    );
    Ok(())
}

fn ecc_additive_under_tse(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    if d.lacking_tse() > 1 {
        return Ok(());
    }
    for x in 0..d.vertices() {
        let (i, r) = d.coords(x);
        let sum = d.ta.ecc()[i] + d.tb.ecc()[r];
        ensure!(
            d.tp.ecc()[x] == sum,
            "ecc({i},{r})={} but factor sum {sum}",
            d.tp.ecc()[x]
        );
    }
    Ok(())
}

fn per_ct_equality(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    if d.lacking_tse() > 1 {
        return Ok(());
    }
    let per = d.cross(&d.ra.periphery, &d.rb.periphery);
    ensure!(
        d.rp.periphery == per,
        "Per(product)={:?} vs Per x Per={:?}",
        d.rp.periphery,
        per
    );
    let ct = d.cross(&d.ra.contour, &d.rb.contour);
    ensure!(
        d.rp.contour == ct,
        "Ct(product)={:?} vs Ct x Ct={:?}",
        d.rp.contour,
        ct
    );
    Ok(())
}

fn ecc_equality(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    if d.lacking_tse() > 0 {
        return Ok(());
    }
    let ecc = d.cross(&d.ra.eccentric, &d.rb.eccentric);
    ensure!(
        d.rp.eccentric == ecc,
        "Ecc(product)={:?} vs Ecc x Ecc={:?}",
        d.rp.eccentric,
        ecc
    );
    Ok(())
}

fn tse_iff(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    ensure!(
        d.rp.tse == (d.ra.tse && d.rb.tse),
        "tse(product)={} but factors {} and {}",
        d.rp.tse,
        d.ra.tse,
        d.rb.tse
    );
    Ok(())
}

fn strong_iff(_: &Ctx, gs: &[Digraph]) -> Check {
    let product = cartesian_product(&gs[0], &gs[1]).map_err(|e| e.to_string())?;
    let (a, b) = (gs[0].is_strongly_connected(), gs[1].is_strongly_connected());
    ensure!(
        product.is_strongly_connected() == (a && b),
        "strong(product)={} but factors {a} and {b}",
        product.is_strongly_connected()
    );
    Ok(())
}

fn undirected_additivity(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    for x in 0..d.vertices() {
        for y in 0..d.vertices() {
            let ((i, r), (j, s)) = (d.coords(x), d.coords(y));
            let sum = d.ta.md()[(i, j)] + d.tb.md()[(r, s)];
            ensure!(
                d.tp.md()[(x, y)] == sum,
                "md(({i},{r}),({j},{s}))={} but coordinate sum {sum}",
                d.tp.md()[(x, y)]
            );
        }
    }
    Ok(())
}

fn undirected_factor_sets(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    let pairs = [
        ("boundary", &d.rp.boundary, &d.ra.boundary, &d.rb.boundary),
        (
            "eccentric",
            &d.rp.eccentric,
            &d.ra.eccentric,
            &d.rb.eccentric,
        ),
        ("contour", &d.rp.contour, &d.ra.contour, &d.rb.contour),
        (
            "periphery",
            &d.rp.periphery,
            &d.ra.periphery,
            &d.rb.periphery,
        ),
    ];
    for (name, direct, a, b) in pairs {
        let cross = d.cross(a, b);
        ensure!(
            *direct == cross,
            "{name}: product {direct:?} vs factor product {cross:?}"
        );
    }
    Ok(())
}

fn factored_matches_direct(ctx: &Ctx, gs: &[Digraph]) -> Check {
    let d = PairData::new(ctx, gs)?;
    let analysis = factor_analysis(gs).map_err(|e| e.to_string())?;
    let f = factored_sets(gs, &analysis).map_err(|e| e.to_string())?;
    let r = &f.report;
    ensure!(
        r.periphery == d.rp.periphery,
        "periphery ({:?}) differs",
        f.provenance.periphery
    );
    ensure!(
        r.contour == d.rp.contour,
        "contour ({:?}) differs",
        f.provenance.contour
    );
    ensure!(
        r.eccentric == d.rp.eccentric,
        "eccentric ({:?}) differs",
        f.provenance.eccentric
    );
    ensure!(
        r.boundary == d.rp.boundary,
        "boundary ({:?}) differs",
        f.provenance.boundary
    );
    ensure!(r.ecc == d.rp.ecc, "ecc vector differs");
    ensure!(
        r.diameter == d.rp.diameter,
        "diameter {} vs {}",
        r.diameter,
        d.rp.diameter
    );
    ensure!(r.tse == d.rp.tse, "tse {} vs {}", r.tse, d.rp.tse);
    Ok(())
}

fn associativity(_: &Ctx, gs: &[Digraph]) -> Check {
    let err = |e: crate::error::Error| e.to_string();
    let left =
        cartesian_product(&cartesian_product(&gs[0], &gs[1]).map_err(err)?, &gs[2]).map_err(err)?;
    let right =
        cartesian_product(&gs[0], &cartesian_product(&gs[1], &gs[2]).map_err(err)?).map_err(err)?;
    let flat = n_ary_product(gs).map_err(err)?;
    ensure!(
        left.arcs() == flat.arcs(),
        "(A□B)□C differs from the flat product"
    );
    ensure!(
        right.arcs() == flat.arcs(),
        "A□(B□C) differs from the flat product"
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{DistMatrix, DistanceTables};

    fn mutant_no_max(g: &Digraph) -> Result<DistanceTables> {
        let t = md_tables(g)?;
        let n = g.vertex_count();
        let rows = (0..n).map(|u| t.ddist().row(u).to_vec()).collect();
        let md = DistMatrix::from_rows(rows);
        let ecc = md.rows().map(|r| *r.iter().max().unwrap()).collect();
        Ok(DistanceTables::from_parts(t.ddist().clone(), md, ecc))
    }

    #[test]
    fn property_names_are_unique() {
        let mut names = property_names();
        let len = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), len);
    }

    #[test]
    fn single_vertex_suite_is_vacuous() {
        let outcomes = run_property_suite(1, 1, 0);
        assert_eq!(outcomes.len(), PROPERTIES.len());
        for o in outcomes {
            assert!(o.passed(), "{} failed: {:?}", o.name, o.failures);
        }
    }

    #[test]
    fn mutant_is_caught_with_witness() {
        let cfg = SuiteConfig {
            trials: 50,
            max_n: 6,
            seed: 11,
        };
        let outcomes = run_selected(
            &["md-metric-axioms", "md-oracle-agreement"],
            cfg,
            &mutant_no_max,
        );
        for o in &outcomes {
            assert!(!o.passed(), "{} missed the mutant", o.name);
            let f = &o.failures[0];
            assert!(!f.witness.is_empty());
            // replaying the seed reproduces the shrunk witness
            let again = replay_with(&o.name, f.seed, cfg.max_n, &mutant_no_max).unwrap();
            assert_eq!(&again, f);
        }
        // shrinking reaches the smallest asymmetric strong digraph: a 3-cycle
        let axioms = &outcomes
            .iter()
            .find(|o| o.name == "md-metric-axioms")
            .unwrap();
        assert_eq!(axioms.failures[0].digraphs[0].vertex_count(), 3);
    }

    #[test]
    fn shrink_removes_what_it_can() {
        let g = Digraph::build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        // "has at least 3 arcs" shrinks to exactly 3 arcs
        let out = shrink(std::slice::from_ref(&g), |gs| gs[0].arc_count() >= 3);
        assert_eq!(out[0].arc_count(), 3);
    }

    #[test]
    fn inputs_are_deterministic_per_seed() {
        for kind in [
            Inputs::Strong,
            Inputs::Any,
            Inputs::Symmetric,
            Inputs::Cycle,
            Inputs::StrongPair,
            Inputs::MixedPair,
            Inputs::SymmetricPair,
            Inputs::StrongTriple,
        ] {
            for seed in 0..20 {
                let a = kind.generate(seed, 7);
                assert_eq!(a, kind.generate(seed, 7));
                assert!(kind.admits(&a), "{kind:?} seed {seed}");
            }
        }
    }
}
