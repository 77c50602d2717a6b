//! Immutable simple digraphs on dense vertex indices.
//!
//! Vertices are `0..n`. Arcs are kept sorted, together with out-, in- and
//! underlying (in ∪ out) adjacency lists, so every query after [`Digraph::build`]
//! is a slice lookup.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
    und_adj: Vec<Vec<VertexId>>,
}

/// Underlying neighborhood of a vertex: in-neighbors ∪ out-neighbors, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSet {
    center: VertexId,
    members: Vec<VertexId>,
}

impl NeighborSet {
    pub fn center(&self) -> VertexId {
        self.center
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Digraph {
    /// Builds a simple digraph. Arc order in the input does not matter.
    pub fn build(n: usize, arcs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (tail, head) in arcs {
            if tail >= n || head >= n {
                return Err(Error::ArcOutOfRange { tail, head, n });
            }
            if tail == head {
                return Err(Error::SelfLoop(tail));
            }
            if !seen.insert((tail, head)) {
                return Err(Error::DuplicateArc { tail, head });
            }
            list.push((tail, head));
        }
        Ok(Self::from_checked(n, list))
    }

    /// Arcs must already be in range, loop-free and distinct.
    pub(crate) fn from_checked(n: usize, mut arcs: Vec<(VertexId, VertexId)>) -> Self {
        arcs.sort_unstable();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(t, h) in &arcs {
            out_adj[t].push(h);
            in_adj[h].push(t);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        let und_adj = (0..n)
            .map(|v| {
                let mut both: Vec<_> = out_adj[v].iter().chain(&in_adj[v]).copied().collect();
                both.sort_unstable();
                both.dedup();
                both
            })
            .collect();
        Digraph {
            n,
            arcs,
            labels: None,
            out_adj,
            in_adj,
            und_adj,
        }
    }

    /// Attaches one distinct label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Single vertex, no arcs.
    pub fn trivial() -> Self {
        Self::from_checked(1, Vec::new())
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`. `n = 1` gives the trivial digraph.
    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n == 1 {
            return Ok(Self::trivial());
        }
        Self::build(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Symmetric path `0 <-> 1 <-> ... <-> n-1`.
    pub fn symmetric_path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        Self::build(n, (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Sorted arc list.
    pub fn arcs(&self) -> &[(VertexId, VertexId)] {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_arc(&self, tail: VertexId, head: VertexId) -> bool {
        tail < self.n && self.out_adj[tail].binary_search(&head).is_ok()
    }

    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    /// Unchecked view of the underlying neighborhood; panics if `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.und_adj[v]
    }

    pub fn underlying_neighbors(&self, v: VertexId) -> Result<NeighborSet> {
        self.check_vertex(v)?;
        Ok(NeighborSet {
            center: v,
            members: self.und_adj[v].clone(),
        })
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Same vertices and labels, every arc transposed.
    pub fn reverse(&self) -> Self {
        let arcs = self.arcs.iter().map(|&(t, h)| (h, t)).collect();
        let mut rev = Self::from_checked(self.n, arcs);
        rev.labels = self.labels.clone();
        rev
    }

    /// Vertex 0 reaches everything along arcs and against them.
    pub fn is_strongly_connected(&self) -> bool {
        self.unreachable_pair().is_none()
    }

    /// Some ordered pair `(from, to)` with no directed path, if one exists.
    pub fn unreachable_pair(&self) -> Option<(VertexId, VertexId)> {
        if let Some(v) = first_unvisited(&self.out_adj, 0) {
            return Some((0, v));
        }
        first_unvisited(&self.in_adj, 0).map(|v| (v, 0))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(t, h)| self.has_arc(h, t))
    }

    pub fn is_directed_cycle(&self) -> bool {
        self.n >= 2
            && self.out_adj.iter().all(|a| a.len() == 1)
            && self.in_adj.iter().all(|a| a.len() == 1)
            && self.is_strongly_connected()
    }

    /// Degree sequence `(out, in)` per vertex.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .map(|v| (self.out_adj[v].len(), self.in_adj[v].len()))
            .collect()
    }

    /// Drops `v` and renumbers the remaining vertices in order. Labels are dropped.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Self> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::NoVertices);
        }
        let shift = |x: VertexId| if x > v { x - 1 } else { x };
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(t, h)| t != v && h != v)
            .map(|&(t, h)| (shift(t), shift(h)))
            .collect();
        Ok(Self::from_checked(self.n - 1, arcs))
    }

    /// Drops the arc at position `idx` of [`Digraph::arcs`]. Labels are kept.
    pub fn remove_arc_at(&self, idx: usize) -> Self {
        let mut arcs = self.arcs.clone();
        arcs.remove(idx);
        let mut g = Self::from_checked(self.n, arcs);
        g.labels = self.labels.clone();
        g
    }
}

fn first_unvisited(adj: &[Vec<VertexId>], start: VertexId) -> Option<VertexId> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// Small digraphs reconstructed from the worked examples, used across tests,
/// benches and the CLI.
pub mod fixtures {
    use super::Digraph;

    /// Directed 3-cycle `0 -> 1 -> 2 -> 0`.
    pub fn c3() -> Digraph {
        Digraph::build(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Two directed 3-cycles sharing vertex 2.
    pub fn theta5() -> Digraph {
        Digraph::build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    /// `theta5` with every arc reversed.
    pub fn r5() -> Digraph {
        theta5().reverse()
    }

    /// `0 <-> 1`, `1 -> 2`, `2 -> 0`.
    pub fn x3() -> Digraph {
        Digraph::build(3, [(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap()
    }

    /// `0 <-> 1`, `2 -> 1`, `0 -> 2`.
    pub fn y3() -> Digraph {
        Digraph::build(3, [(0, 1), (1, 0), (2, 1), (0, 2)]).unwrap()
    }

    /// Symmetric path on three vertices.
    pub fn p3u() -> Digraph {
        Digraph::symmetric_path(3).unwrap()
    }

    pub fn by_name(name: &str) -> Option<Digraph> {
        Some(match name {
            "c3" => c3(),
            "theta5" => theta5(),
            "r5" => r5(),
            "x3" => x3(),
            "y3" => y3(),
            "p3u" => p3u(),
            _ => return None,
        })
    }

    pub fn all() -> Vec<(&'static str, Digraph)> {
        ["c3", "theta5", "r5", "x3", "y3", "p3u"]
            .into_iter()
            .map(|name| (name, by_name(name).unwrap()))
            .collect()
    }
}
