//! md tables by relaxation to a fixpoint. Shares no shortest-path code with
//! [`crate::metric`]: distances start at "unknown" and are lowered through
//! out-arcs until nothing changes.

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::metric::{DistMatrix, DistanceTables};

#[allow(clippy::needless_range_loop)]
pub fn oracle_md(g: &Digraph) -> Result<DistanceTables> {
    let n = g.vertex_count();
    let mut d: Vec<Vec<Option<u32>>> = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
    }
    loop {
        let mut changed = false;
        for &(t, h) in g.arcs() {
            for v in 0..n {
                if let Some(rest) = d[h][v] {
                    let via = rest + 1;
                    if d[t][v].is_none_or(|cur| via < cur) {
                        d[t][v] = Some(via);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut ddist = vec![vec![0u32; n]; n];
    for u in 0..n {
        for v in 0..n {
            ddist[u][v] = d[u][v].ok_or(Error::NotStronglyConnected { from: u, to: v })?;
        }
    }
    let mut md = vec![vec![0u32; n]; n];
    let mut ecc = vec![0u32; n];
    for u in 0..n {
        for v in 0..n {
            let forward = ddist[u][v];
            let backward = ddist[v][u];
            md[u][v] = if forward > backward {
                forward
            } else {
                backward
            };
            if md[u][v] > ecc[u] {
                ecc[u] = md[u][v];
            }
        }
    }
    Ok(DistanceTables::from_parts(
        DistMatrix::from_rows(ddist),
        DistMatrix::from_rows(md),
        ecc,
    ))
}
