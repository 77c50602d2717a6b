//! Maximum-distance metric structure of strong digraphs.
//!
//! `md(u, v) = max(d(u, v), d(v, u))` turns a strongly connected digraph into
//! a metric space. This crate computes md tables, the boundary-type vertex
//! sets (boundary, eccentric, contour, periphery), and the same sets for
//! Cartesian products, either directly or from the factors when that is
//! known to be exact.

use std::collections::BTreeSet;

pub mod boundary;
pub mod digraph;
pub mod error;
pub mod io;
pub mod isomorphism;
pub mod metric;
pub mod product;
pub mod verify;

pub type VertexId = usize;
pub type VertexSet = BTreeSet<VertexId>;

pub use boundary::{full_report, has_tse, BoundaryReport};
pub use digraph::{fixtures, Digraph, NeighborSet};
pub use error::{Error, Result};
pub use io::{emit_digraph, parse_digraph, ReportDocument};
pub use isomorphism::is_isomorphic;
pub use metric::{
    geodetic_closure, geodetic_interval, md_tables, DistMatrix, DistanceTables, GeodeticInterval,
};
pub use product::{
    cartesian_product, factor_analysis, factored_sets, n_ary_product, product_distance,
    verify_product_decomposition, FactorAnalysis, FactoredReport, ProductShape, Provenance,
    SetProvenance,
};
pub use verify::{CostLedger, GeneratorConfig};
