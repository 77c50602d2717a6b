//! Boundary-type vertex sets under the md metric.
//!
//! Neighborhoods are underlying neighborhoods (in ∪ out). All comparisons are
//! non-strict, and the witness `u` in the boundary test ranges over every
//! vertex, `v` included.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::metric::{md_tables, DistanceTables};
use crate::{VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryReport {
    pub diameter: u32,
    pub ecc: Vec<u32>,
    pub boundary: VertexSet,
    pub eccentric: VertexSet,
    pub contour: VertexSet,
    pub periphery: VertexSet,
    pub tse: bool,
}

impl BoundaryReport {
    pub fn vertex_count(&self) -> usize {
        self.ecc.len()
    }

    /// Containments every report must satisfy: `Per ⊆ Ct ∩ Ecc` and
    /// `Ecc ∪ Ct ⊆ ∂`, plus `Per` being the nonempty argmax of `ecc`.
    pub fn containments_hold(&self) -> bool {
        let per_ok =
            self.periphery.is_subset(&self.contour) && self.periphery.is_subset(&self.eccentric);
        let bd_ok =
            self.eccentric.is_subset(&self.boundary) && self.contour.is_subset(&self.boundary);
        let argmax: VertexSet = (0..self.ecc.len())
            .filter(|&v| self.ecc[v] == self.diameter)
            .collect();
        per_ok && bd_ok && !self.periphery.is_empty() && argmax == self.periphery
    }
}

/// Whether `v` is a boundary vertex of `u`: no neighbor of `v` is farther from `u`.
pub fn is_boundary_vertex_of(
    t: &DistanceTables,
    g: &Digraph,
    u: VertexId,
    v: VertexId,
) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(boundary_of(t, g, u, v))
}

fn boundary_of(t: &DistanceTables, g: &Digraph, u: VertexId, v: VertexId) -> bool {
    let row = t.md().row(u);
    g.neighbors(v).iter().all(|&w| row[w] <= row[v])
}

pub fn boundary_set(t: &DistanceTables, g: &Digraph) -> VertexSet {
    let n = g.vertex_count();
    (0..n)
        .filter(|&v| (0..n).any(|u| boundary_of(t, g, u, v)))
        .collect()
}

pub fn eccentric_set(t: &DistanceTables) -> VertexSet {
    let n = t.vertex_count();
    let md = t.md();
    let ecc = t.ecc();
    (0..n)
        .filter(|&v| (0..n).any(|u| md[(u, v)] == ecc[u]))
        .collect()
}

pub fn contour_set(t: &DistanceTables, g: &Digraph) -> VertexSet {
    let ecc = t.ecc();
    (0..g.vertex_count())
        .filter(|&v| g.neighbors(v).iter().all(|&w| ecc[w] <= ecc[v]))
        .collect()
}

pub fn periphery_set(t: &DistanceTables) -> VertexSet {
    let diam = t.diameter();
    let ecc = t.ecc();
    (0..ecc.len()).filter(|&v| ecc[v] == diam).collect()
}

/// Two-sided eccentricity: every vertex reaches some vertex at exactly its
/// eccentricity and is reached from some vertex at exactly its eccentricity.
pub fn has_tse(t: &DistanceTables) -> bool {
    let n = t.vertex_count();
    let d = t.ddist();
    let ecc = t.ecc();
    (0..n).all(|u| {
        let outgoing = d.row(u).iter().any(|&x| x == ecc[u]);
        let incoming = (0..n).any(|k| d[(k, u)] == ecc[u]);
        outgoing && incoming
    })
}

/// All four sets from precomputed tables.
pub fn report_from_tables(g: &Digraph, t: &DistanceTables) -> BoundaryReport {
    BoundaryReport {
        diameter: t.diameter(),
        ecc: t.ecc().to_vec(),
        boundary: boundary_set(t, g),
        eccentric: eccentric_set(t),
        contour: contour_set(t, g),
        periphery: periphery_set(t),
        tse: has_tse(t),
    }
}

pub fn full_report(g: &Digraph) -> Result<BoundaryReport> {
    let t = md_tables(g)?;
    Ok(report_from_tables(g, &t))
}
