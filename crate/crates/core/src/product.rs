//! Cartesian products of digraphs and factor-based computation of the
//! boundary-type sets.
//!
//! Product vertices are numbered in mixed radix, row-major, with factor 0 the
//! most significant digit. For factors of sizes `n_0, ..., n_{k-1}` the vertex
//! `(x_0, ..., x_{k-1})` has index `((x_0 * n_1 + x_1) * n_2 + x_2) ...`, which
//! is also the numbering produced by left-folding the binary product.
//!
//! Set shortcuts and when they are used:
//!
//! | set       | shortcut valid when                                            |
//! |-----------|----------------------------------------------------------------|
//! | Per, Ct   | at most one factor lacks two-sided eccentricity (TSE)          |
//! | Ecc       | every factor has TSE                                           |
//! | ∂         | every factor is a directed cycle, or all but one are symmetric |
//!
//! A set whose shortcut is not valid is computed directly on the explicit product.

use serde::Serialize;

use crate::boundary::{full_report, report_from_tables, BoundaryReport};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::isomorphism::is_isomorphic;
use crate::metric::{md_tables, DistanceTables};
use crate::verify::cost::CostLedger;
use crate::{VertexId, VertexSet};

pub const DEFAULT_VERTEX_BUDGET: usize = 4096;

/// Largest digraph [`verify_product_decomposition`] will attempt.
pub const DEFAULT_ISOMORPHISM_BUDGET: usize = 16;

/// Factor sizes of a product, with the mixed-radix vertex encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductShape {
    sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex {
    pub coords: Vec<VertexId>,
}

impl ProductShape {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::NoFactors);
        }
        if sizes.contains(&0) {
            return Err(Error::NoVertices);
        }
        Ok(ProductShape { sizes })
    }

    pub fn of(factors: &[Digraph]) -> Result<Self> {
        Self::new(factors.iter().map(Digraph::vertex_count).collect())
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn arity(&self) -> usize {
        self.sizes.len()
    }

    /// Total vertex count, saturating at `usize::MAX`.
    pub fn vertex_count(&self) -> usize {
        self.sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .unwrap_or(usize::MAX)
    }

    pub fn check_budget(&self, budget: usize) -> Result<usize> {
        let size = self.vertex_count();
        if size > budget {
            Err(Error::BudgetExceeded { size, budget })
        } else {
            Ok(size)
        }
    }

    pub fn encode(&self, coords: &[VertexId]) -> Result<usize> {
        if coords.len() != self.sizes.len() {
            return Err(Error::CoordinateArity {
                expected: self.sizes.len(),
                got: coords.len(),
            });
        }
        let mut index = 0usize;
        for (&c, &s) in coords.iter().zip(&self.sizes) {
            if c >= s {
                return Err(Error::VertexOutOfRange { vertex: c, n: s });
            }
            index = index * s + c;
        }
        Ok(index)
    }

    pub fn decode(&self, mut index: usize) -> ProductVertex {
        let mut coords = vec![0; self.sizes.len()];
        for (slot, &s) in coords.iter_mut().zip(&self.sizes).rev() {
            *slot = index % s;
            index /= s;
        }
        ProductVertex { coords }
    }

    /// Place value of each coordinate.
    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.sizes.len()];
        for i in (0..self.sizes.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.sizes[i + 1];
        }
        strides
    }

    /// `S_0 × S_1 × ...` as encoded product vertices.
    pub fn product_set(&self, sets: &[&VertexSet]) -> Result<VertexSet> {
        if sets.len() != self.sizes.len() {
            return Err(Error::CoordinateArity {
                expected: self.sizes.len(),
                got: sets.len(),
            });
        }
        let mut acc = vec![0usize];
        for (set, &size) in sets.iter().zip(&self.sizes) {
            if let Some(&v) = set.iter().find(|&&v| v >= size) {
                return Err(Error::VertexOutOfRange { vertex: v, n: size });
            }
            acc = acc
                .iter()
                .flat_map(|&prefix| set.iter().map(move |&c| prefix * size + c))
                .collect();
        }
        Ok(acc.into_iter().collect())
    }
}

pub fn cartesian_product(d1: &Digraph, d2: &Digraph) -> Result<Digraph> {
    cartesian_product_with_budget(d1, d2, DEFAULT_VERTEX_BUDGET)
}

pub fn cartesian_product_with_budget(d1: &Digraph, d2: &Digraph, budget: usize) -> Result<Digraph> {
    n_ary_product_with_budget(&[d1.clone(), d2.clone()], budget)
}

pub fn n_ary_product(factors: &[Digraph]) -> Result<Digraph> {
    n_ary_product_with_budget(factors, DEFAULT_VERTEX_BUDGET)
}

/// Explicit product digraph. Vertex labels are coordinate tuples such as `(0,2,1)`.
pub fn n_ary_product_with_budget(factors: &[Digraph], budget: usize) -> Result<Digraph> {
    let shape = ProductShape::of(factors)?;
    let n = shape.check_budget(budget)?;
    let strides = shape.strides();
    let mut arcs = Vec::with_capacity(
        factors
            .iter()
            .map(|f| f.arc_count() * (n / f.vertex_count()))
            .sum(),
    );
    let mut labels = Vec::with_capacity(n);
    for x in 0..n {
        let coords = shape.decode(x).coords;
        for (i, factor) in factors.iter().enumerate() {
            let c = coords[i];
            for &h in factor.out_neighbors(c) {
                // h != c, and only coordinate i changes
                let y = x - c * strides[i] + h * strides[i];
                arcs.push((x, y));
            }
        }
        let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
        labels.push(format!("({})", parts.join(",")));
    }
    Digraph::from_checked(n, arcs).with_labels(labels)
}

/// md between `(i, r)` and `(j, s)` in `D1 □ D2`, from factor tables alone:
/// `max(d1(i,j) + d2(r,s), d1(j,i) + d2(s,r))`.
pub fn product_distance(
    t1: &DistanceTables,
    t2: &DistanceTables,
    (i, r): (VertexId, VertexId),
    (j, s): (VertexId, VertexId),
) -> Result<u32> {
    product_distance_n(&[t1, t2], &[i, r], &[j, s])
}

/// n-ary form: directed distances add coordinate-wise in each direction.
pub fn product_distance_n(
    tables: &[&DistanceTables],
    x: &[VertexId],
    y: &[VertexId],
) -> Result<u32> {
    for coords in [x, y] {
        if coords.len() != tables.len() {
            return Err(Error::CoordinateArity {
                expected: tables.len(),
                got: coords.len(),
            });
        }
        for (t, &c) in tables.iter().zip(coords) {
            if c >= t.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: c,
                    n: t.vertex_count(),
                });
            }
        }
    }
    let mut forward = 0;
    let mut backward = 0;
    for (k, t) in tables.iter().enumerate() {
        forward += t.ddist()[(x[k], y[k])];
        backward += t.ddist()[(y[k], x[k])];
    }
    Ok(forward.max(backward))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorFlags {
    pub vertices: usize,
    pub arcs: usize,
    pub tse: bool,
    pub symmetric: bool,
    pub directed_cycle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorAnalysis {
    pub factors: Vec<FactorFlags>,
    pub lacking_tse: usize,
    pub per_ct_shortcut_valid: bool,
    pub ecc_shortcut_valid: bool,
    pub boundary_shortcut_valid: bool,
}

impl FactorAnalysis {
    fn from_flags(factors: Vec<FactorFlags>) -> Self {
        let lacking_tse = factors.iter().filter(|f| !f.tse).count();
        let non_symmetric = factors.iter().filter(|f| !f.symmetric).count();
        let all_cycles = factors.iter().all(|f| f.directed_cycle);
        FactorAnalysis {
            per_ct_shortcut_valid: lacking_tse <= 1,
            ecc_shortcut_valid: lacking_tse == 0,
            boundary_shortcut_valid: all_cycles || non_symmetric <= 1,
            lacking_tse,
            factors,
        }
    }

    pub fn shape(&self) -> ProductShape {
        ProductShape {
            sizes: self.factors.iter().map(|f| f.vertices).collect(),
        }
    }
}

fn flags(g: &Digraph, t: &DistanceTables) -> FactorFlags {
    FactorFlags {
        vertices: g.vertex_count(),
        arcs: g.arc_count(),
        tse: crate::boundary::has_tse(t),
        symmetric: g.is_symmetric(),
        directed_cycle: g.is_directed_cycle(),
    }
}

pub fn factor_analysis(factors: &[Digraph]) -> Result<FactorAnalysis> {
    if factors.is_empty() {
        return Err(Error::NoFactors);
    }
    let flags = factors
        .iter()
        .map(|g| md_tables(g).map(|t| flags(g, &t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorAnalysis::from_flags(flags))
}

/// Eccentricity of a product vertex as the sum of its coordinates' eccentricities.
/// Only valid when at most one factor lacks TSE.
pub fn product_ecc(analysis: &FactorAnalysis, eccs: &[&[u32]], coords: &[VertexId]) -> Result<u32> {
    if !analysis.per_ct_shortcut_valid {
        return Err(Error::ShortcutInvalid {
            lacking: analysis.lacking_tse,
        });
    }
    if eccs.len() != analysis.factors.len() || coords.len() != eccs.len() {
        return Err(Error::CoordinateArity {
            expected: analysis.factors.len(),
            got: coords.len().min(eccs.len()),
        });
    }
    let mut total = 0;
    for (ecc, &c) in eccs.iter().zip(coords) {
        let e = ecc.get(c).ok_or(Error::VertexOutOfRange {
            vertex: c,
            n: ecc.len(),
        })?;
        total += e;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Shortcut,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SetProvenance {
    pub boundary: Provenance,
    pub eccentric: Provenance,
    pub contour: Provenance,
    pub periphery: Provenance,
}

impl SetProvenance {
    pub fn all_shortcut(&self) -> bool {
        [self.boundary, self.eccentric, self.contour, self.periphery]
            .iter()
            .all(|&p| p == Provenance::Shortcut)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredReport {
    pub shape: ProductShape,
    pub report: BoundaryReport,
    pub provenance: SetProvenance,
    pub cost: CostLedger,
}

pub fn factored_sets(factors: &[Digraph], analysis: &FactorAnalysis) -> Result<FactoredReport> {
    factored_sets_with_budget(factors, analysis, DEFAULT_VERTEX_BUDGET)
}

/// Boundary-type sets of the product of `factors`. Each set comes from the
/// factor sets when its shortcut is licensed by `analysis`, and from direct
/// analysis of the explicit product (within `budget`) otherwise.
pub fn factored_sets_with_budget(
    factors: &[Digraph],
    analysis: &FactorAnalysis,
    budget: usize,
) -> Result<FactoredReport> {
    let shape = ProductShape::of(factors)?;
    if shape != analysis.shape() {
        return Err(Error::SizeMismatch {
            expected: analysis.shape().vertex_count(),
            actual: shape.vertex_count(),
        });
    }
    let reports = factors
        .iter()
        .map(|g| md_tables(g).map(|t| report_from_tables(g, &t)))
        .collect::<Result<Vec<_>>>()?;

    let pick = |valid: bool| {
        if valid {
            Provenance::Shortcut
        } else {
            Provenance::Direct
        }
    };
    let provenance = SetProvenance {
        boundary: pick(analysis.boundary_shortcut_valid),
        eccentric: pick(analysis.ecc_shortcut_valid),
        contour: pick(analysis.per_ct_shortcut_valid),
        periphery: pick(analysis.per_ct_shortcut_valid),
    };

    let direct = if provenance.all_shortcut() {
        None
    } else {
        let product = n_ary_product_with_budget(factors, budget)?;
        Some(full_report(&product)?)
    };

    let from_factors = |select: fn(&BoundaryReport) -> &VertexSet| {
        let sets: Vec<&VertexSet> = reports.iter().map(select).collect();
        shape.product_set(&sets)
    };
    let choose = |p: Provenance, select: fn(&BoundaryReport) -> &VertexSet| -> Result<VertexSet> {
        match (p, &direct) {
            (Provenance::Shortcut, _) => from_factors(select),
            (Provenance::Direct, Some(d)) => Ok(select(d).clone()),
            (Provenance::Direct, None) => unreachable!("direct report computed for fallback"),
        }
    };

    let (diameter, ecc) = match &direct {
        Some(d) if !analysis.per_ct_shortcut_valid => (d.diameter, d.ecc.clone()),
        _ => {
            let eccs: Vec<&[u32]> = reports.iter().map(|r| r.ecc.as_slice()).collect();
            let ecc = (0..shape.vertex_count())
                .map(|x| product_ecc(analysis, &eccs, &shape.decode(x).coords))
                .collect::<Result<Vec<_>>>()?;
            (reports.iter().map(|r| r.diameter).sum(), ecc)
        }
    };

    let report = BoundaryReport {
        diameter,
        ecc,
        boundary: choose(provenance.boundary, |r| &r.boundary)?,
        eccentric: choose(provenance.eccentric, |r| &r.eccentric)?,
        contour: choose(provenance.contour, |r| &r.contour)?,
        periphery: choose(provenance.periphery, |r| &r.periphery)?,
        tse: reports.iter().all(|r| r.tse),
    };
    Ok(FactoredReport {
        cost: CostLedger::for_sizes(shape.sizes()),
        shape,
        report,
        provenance,
    })
}

/// Whether `g` is isomorphic to the product of `factors`. Small instances only.
pub fn verify_product_decomposition(g: &Digraph, factors: &[Digraph]) -> Result<bool> {
    verify_product_decomposition_with_budget(g, factors, DEFAULT_ISOMORPHISM_BUDGET)
}

pub fn verify_product_decomposition_with_budget(
    g: &Digraph,
    factors: &[Digraph],
    budget: usize,
) -> Result<bool> {
    let shape = ProductShape::of(factors)?;
    let expected = shape.vertex_count();
    if expected != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected,
            actual: g.vertex_count(),
        });
    }
    shape.check_budget(budget)?;
    let product = n_ary_product_with_budget(factors, budget)?;
    Ok(is_isomorphic(g, &product))
}
