//! Directed distances and the maximum-distance metric
//! `md(u, v) = max(d(u, v), d(v, u))`.

use std::collections::{BTreeSet, VecDeque};
use std::ops::Index;

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::{VertexId, VertexSet};

/// Below this many vertices the per-source sweeps run on the calling thread.
const PARALLEL_THRESHOLD: usize = 128;

const UNREACHED: u32 = u32::MAX;

/// Dense `n × n` matrix of arc counts, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        let data: Vec<u32> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), n * n, "distance matrix must be square");
        DistMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.n.max(1))
    }
}

impl Index<(VertexId, VertexId)> for DistMatrix {
    type Output = u32;

    fn index(&self, (u, v): (VertexId, VertexId)) -> &u32 {
        &self.data[u * self.n + v]
    }
}

/// Directed distances, md distances and md eccentricities of one strong digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTables {
    ddist: DistMatrix,
    md: DistMatrix,
    ecc: Vec<u32>,
}

impl DistanceTables {
    /// Assembles tables from precomputed parts. No consistency check is made;
    /// this exists for alternative computations (oracles, fault injection).
    pub fn from_parts(ddist: DistMatrix, md: DistMatrix, ecc: Vec<u32>) -> Self {
        assert_eq!(ddist.size(), md.size());
        assert_eq!(ddist.size(), ecc.len());
        DistanceTables { ddist, md, ecc }
    }

    /// Derives md and eccentricities from a directed-distance matrix.
    pub fn from_directed(ddist: DistMatrix) -> Self {
        let n = ddist.size();
        let mut md = Vec::with_capacity(n * n);
        for u in 0..n {
            md.extend((0..n).map(|v| ddist[(u, v)].max(ddist[(v, u)])));
        }
        let md = DistMatrix { n, data: md };
        let ecc = md
            .rows()
            .map(|r| r.iter().copied().max().unwrap_or(0))
            .collect();
        DistanceTables { ddist, md, ecc }
    }

    pub fn vertex_count(&self) -> usize {
        self.ecc.len()
    }

    pub fn ddist(&self) -> &DistMatrix {
        &self.ddist
    }

    pub fn md(&self) -> &DistMatrix {
        &self.md
    }

    pub fn ecc(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.ecc.iter().copied().max().unwrap_or(0)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        let n = self.vertex_count();
        if v < n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n })
        }
    }
}

/// Geodetic interval `I(u, v) = { w : md(u,w) + md(w,v) = md(u,v) }`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodeticInterval {
    pub endpoints: (VertexId, VertexId),
    pub members: VertexSet,
}

/// One BFS sweep along `adj` from `source`.
fn sweep<'a>(n: usize, source: VertexId, adj: &dyn Fn(VertexId) -> &'a [VertexId]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in adj(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn per_source<T: Send>(n: usize, f: impl Fn(VertexId) -> T + Sync + Send) -> Vec<T> {
    if n >= PARALLEL_THRESHOLD {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

fn first_unreached(rows: &[Vec<u32>]) -> Option<(VertexId, VertexId)> {
    rows.iter()
        .enumerate()
        .find_map(|(u, row)| row.iter().position(|&d| d == UNREACHED).map(|v| (u, v)))
}

/// Exact directed distances `d(u, v)` for every ordered pair, one BFS per source.
pub fn directed_distances(g: &Digraph) -> Result<DistMatrix> {
    let n = g.vertex_count();
    let rows = per_source(n, |s| sweep(n, s, &|u| g.out_neighbors(u)));
    if let Some((from, to)) = first_unreached(&rows) {
        return Err(Error::NotStronglyConnected { from, to });
    }
    Ok(DistMatrix::from_rows(rows))
}

/// md tables. Row `u` of md combines the forward sweep from `u` with a sweep
/// from `u` in the reversed digraph, so every row is built independently.
pub fn md_tables(g: &Digraph) -> Result<DistanceTables> {
    let n = g.vertex_count();
    let rows = per_source(n, |s| {
        let out = sweep(n, s, &|u| g.out_neighbors(u));
        let inc = sweep(n, s, &|u| g.in_neighbors(u));
        (out, inc)
    });
    let mut ddist = Vec::with_capacity(n);
    let mut md = Vec::with_capacity(n * n);
    let mut ecc = Vec::with_capacity(n);
    for (u, (out, inc)) in rows.into_iter().enumerate() {
        if let Some(v) = out.iter().position(|&d| d == UNREACHED) {
            return Err(Error::NotStronglyConnected { from: u, to: v });
        }
        if let Some(v) = inc.iter().position(|&d| d == UNREACHED) {
            return Err(Error::NotStronglyConnected { from: v, to: u });
        }
        let row: Vec<u32> = out.iter().zip(&inc).map(|(&a, &b)| a.max(b)).collect();
        ecc.push(row.iter().copied().max().unwrap_or(0));
        md.extend(row);
        ddist.push(out);
    }
    Ok(DistanceTables {
        ddist: DistMatrix::from_rows(ddist),
        md: DistMatrix { n, data: md },
        ecc,
    })
}

pub fn geodetic_interval(t: &DistanceTables, u: VertexId, v: VertexId) -> Result<GeodeticInterval> {
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    let md = t.md();
    let target = md[(u, v)];
    let members = (0..t.vertex_count())
        .filter(|&w| md[(u, w)] + md[(w, v)] == target)
        .collect();
    Ok(GeodeticInterval {
        endpoints: (u, v),
        members,
    })
}

/// `I[S]`: union of `I(u, v)` over all ordered pairs from `S`.
pub fn geodetic_closure(t: &DistanceTables, s: &VertexSet) -> Result<VertexSet> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut closure = BTreeSet::new();
    for &u in s {
        for &v in s {
            closure.extend(geodetic_interval(t, u, v)?.members);
        }
    }
    Ok(closure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;

    /// Floyd–Warshall, kept separate from the BFS sweeps.
    fn floyd(g: &Digraph) -> Vec<Vec<u32>> {
        let n = g.vertex_count();
        let inf = u32::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0;
        }
        for &(a, b) in g.arcs() {
            d[a][b] = 1;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d[i][k] + d[k][j];
                    if via < d[i][j] {
                        d[i][j] = via;
                    }
                }
            }
        }
        d
    }

    #[test]
    fn c3_distances() {
        let d = directed_distances(&c3()).unwrap();
        assert_eq!(d[(0, 1)], 1);
        assert_eq!(d[(1, 0)], 2);
        let t = md_tables(&c3()).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(t.md()[(u, v)], if u == v { 0 } else { 2 });
            }
        }
        assert_eq!(t.ecc(), &[2, 2, 2]);
    }

    #[test]
    fn theta5_distances() {
        let g = theta5();
        let d = directed_distances(&g).unwrap();
        assert_eq!(d[(0, 4)], 4);
        assert_eq!(d[(4, 0)], 2);
        let t = md_tables(&g).unwrap();
        assert_eq!(t.ecc(), &[4, 4, 2, 4, 4]);
        assert_eq!(t.md()[(0, 3)], 3);
        assert_eq!(t.md()[(1, 3)], 4);
        assert_eq!(t.diameter(), 4);
        let fw = floyd(&g);
        for (u, row) in fw.iter().enumerate() {
            assert_eq!(t.ddist().row(u), row.as_slice());
        }
    }

    #[test]
    fn not_strong_reports_witness() {
        let g = Digraph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            directed_distances(&g),
            Err(Error::NotStronglyConnected { from: 1, to: 0 })
        );
        assert!(matches!(
            md_tables(&g),
            Err(Error::NotStronglyConnected { .. })
        ));
    }

    #[test]
    fn from_directed_matches_md_tables() {
        for (_, g) in all() {
            let t = md_tables(&g).unwrap();
            let again = DistanceTables::from_directed(directed_distances(&g).unwrap());
            assert_eq!(t, again);
        }
    }

    #[test]
    fn intervals() {
        let t = md_tables(&c3()).unwrap();
        assert_eq!(
            geodetic_interval(&t, 0, 0).unwrap().members,
            BTreeSet::from([0])
        );
        let p = md_tables(&p3u()).unwrap();
        assert_eq!(
            geodetic_interval(&p, 0, 2).unwrap().members,
            BTreeSet::from([0, 1, 2])
        );
        // md(2,0)=2; md(2,w)+md(w,0) = 4 for w in {1,3,4}
        let th = md_tables(&theta5()).unwrap();
        assert_eq!(
            geodetic_interval(&th, 2, 0).unwrap().members,
            BTreeSet::from([0, 2])
        );
        assert!(geodetic_interval(&th, 0, 5).is_err());
    }

    #[test]
    fn closures() {
        let t = md_tables(&c3()).unwrap();
        assert_eq!(
            geodetic_closure(&t, &BTreeSet::from([1])).unwrap(),
            BTreeSet::from([1])
        );
        assert_eq!(
            geodetic_closure(&t, &BTreeSet::from([0, 1])).unwrap(),
            BTreeSet::from([0, 1])
        );
        let p = md_tables(&p3u()).unwrap();
        assert_eq!(
            geodetic_closure(&p, &BTreeSet::from([0, 2])).unwrap(),
            BTreeSet::from([0, 1, 2])
        );
        assert_eq!(
            geodetic_closure(&p, &BTreeSet::new()),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn metric_axioms_on_fixtures() {
        for (name, g) in all() {
            let t = md_tables(&g).unwrap();
            let md = t.md();
            let n = g.vertex_count();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(md[(u, v)], md[(v, u)], "{name}");
                    assert_eq!(md[(u, v)] == 0, u == v, "{name}");
                    for w in 0..n {
                        assert!(md[(u, v)] <= md[(u, w)] + md[(w, v)], "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn large_digraph_takes_parallel_path() {
        let g = Digraph::directed_cycle(200).unwrap();
        let t = md_tables(&g).unwrap();
        assert!(t.ecc().iter().all(|&e| e == 199));
        assert_eq!(t.md()[(0, 100)], 100);
    }
}
