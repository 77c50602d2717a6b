//! Backtracking isomorphism test for small digraphs.

use crate::digraph::Digraph;
use crate::VertexId;

/// Exact test; exponential in the worst case, so meant for a few dozen vertices.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count() {
        return false;
    }
    let deg_a = a.degrees();
    let deg_b = b.degrees();
    let mut sorted_a = deg_a.clone();
    let mut sorted_b = deg_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return false;
    }
    let n = a.vertex_count();
    let mut state = Search {
        a,
        b,
        deg_a: &deg_a,
        deg_b: &deg_b,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0)
}

struct Search<'g> {
    a: &'g Digraph,
    b: &'g Digraph,
    deg_a: &'g [(usize, usize)],
    deg_b: &'g [(usize, usize)],
    map: Vec<VertexId>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, v: VertexId) -> bool {
        let n = self.map.len();
        if v == n {
            return true;
        }
        for image in 0..n {
            if self.used[image] || self.deg_a[v] != self.deg_b[image] || !self.consistent(v, image)
            {
                continue;
            }
            self.map[v] = image;
            self.used[image] = true;
            if self.extend(v + 1) {
                return true;
            }
            self.used[image] = false;
        }
        self.map[v] = usize::MAX;
        false
    }

    /// Arcs between `v` and every already-mapped vertex must be preserved.
    fn consistent(&self, v: VertexId, image: VertexId) -> bool {
        (0..v).all(|p| {
            let q = self.map[p];
            self.a.has_arc(p, v) == self.b.has_arc(q, image)
                && self.a.has_arc(v, p) == self.b.has_arc(image, q)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::fixtures::*;

    fn relabel(g: &Digraph, perm: &[usize]) -> Digraph {
        Digraph::build(
            g.vertex_count(),
            g.arcs().iter().map(|&(t, h)| (perm[t], perm[h])),
        )
        .unwrap()
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let g = theta5();
        let h = relabel(&g, &[3, 0, 4, 1, 2]);
        assert!(is_isomorphic(&g, &h));
        assert!(is_isomorphic(&g, &g));
    }

    #[test]
    fn degree_mismatch_and_reversal() {
        assert!(!is_isomorphic(&x3(), &p3u()));
        // y3 is x3 reversed and relabelled
        assert!(is_isomorphic(&x3().reverse(), &y3()));
        assert!(is_isomorphic(&c3(), &c3().reverse()));
    }

    #[test]
    fn same_degrees_different_structure() {
        // C6 versus two disjoint C3: same degree sequence and arc count
        let c6 = Digraph::directed_cycle(6).unwrap();
        let two = Digraph::build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &two));
    }
}
