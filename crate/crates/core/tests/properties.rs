use mdgraph::boundary::report_from_tables;
use mdgraph::product::{
    product_distance_n, verify_product_decomposition_with_budget, DEFAULT_VERTEX_BUDGET,
};
use mdgraph::verify::{oracle_md, random_strong_digraph};
use mdgraph::*;
use proptest::prelude::*;

fn strong(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, 0.0..0.5f64, any::<u64>()).prop_map(|(n, p, seed)| {
        random_strong_digraph(&GeneratorConfig {
            n,
            extra_arc_probability: p,
            seed,
        })
        .unwrap()
    })
}

fn any_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, bits)| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::build(n, arcs).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn emit_then_parse_is_identity(g in any_digraph(7), labelled in any::<bool>()) {
        let g = if labelled {
            let labels = (0..g.vertex_count()).map(|v| format!("v{v} x")).collect();
            g.with_labels(labels).unwrap()
        } else {
            g
        };
        prop_assert_eq!(parse_digraph(&emit_digraph(&g)).unwrap(), g);
    }

    #[test]
    fn md_matches_oracle(g in strong(9)) {
        let t = md_tables(&g).unwrap();
        let o = oracle_md(&g).unwrap();
        prop_assert_eq!(t, o);
    }

    #[test]
    fn md_is_a_metric(g in strong(8)) {
        let t = md_tables(&g).unwrap();
        let n = g.vertex_count();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(t.md()[(u, v)], t.md()[(v, u)]);
                prop_assert_eq!(t.md()[(u, v)] == 0, u == v);
                for w in 0..n {
                    prop_assert!(t.md()[(u, v)] <= t.md()[(u, w)] + t.md()[(w, v)]);
                }
            }
        }
    }

    #[test]
    fn every_report_satisfies_containments(g in strong(8)) {
        let r = full_report(&g).unwrap();
        prop_assert!(r.containments_hold());
        prop_assert_eq!(r.tse, full_report(&g.reverse()).unwrap().tse);
    }

    #[test]
    fn interval_holds_its_endpoints(g in strong(7), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let t = md_tables(&g).unwrap();
        let (u, v) = (a.index(g.vertex_count()), b.index(g.vertex_count()));
        let i = geodetic_interval(&t, u, v).unwrap();
        prop_assert!(i.members.contains(&u) && i.members.contains(&v));
        let s: VertexSet = [u, v].into();
        prop_assert!(geodetic_closure(&t, &s).unwrap().is_superset(&i.members));
    }

    #[test]
    fn shape_encoding_round_trips(sizes in proptest::collection::vec(1usize..6, 1..4), pick in any::<prop::sample::Index>()) {
        let shape = ProductShape::new(sizes).unwrap();
        let x = pick.index(shape.vertex_count());
        let coords = shape.decode(x).coords;
        prop_assert_eq!(shape.encode(&coords).unwrap(), x);
    }

    #[test]
    fn product_distance_matches_explicit_product(a in strong(4), b in strong(4), c in strong(3)) {
        let factors = [a, b, c];
        let p = n_ary_product(&factors).unwrap();
        let tp = md_tables(&p).unwrap();
        let tables: Vec<DistanceTables> = factors.iter().map(|g| md_tables(g).unwrap()).collect();
        let refs: Vec<&DistanceTables> = tables.iter().collect();
        let shape = ProductShape::of(&factors).unwrap();
        for x in 0..p.vertex_count() {
            for y in 0..p.vertex_count() {
                let d = product_distance_n(&refs, &shape.decode(x).coords, &shape.decode(y).coords).unwrap();
                prop_assert_eq!(d, tp.md()[(x, y)]);
            }
        }
    }

    #[test]
    fn factored_sets_agree_with_direct(a in strong(5), b in strong(5)) {
        let factors = [a, b];
        let analysis = factor_analysis(&factors).unwrap();
        let f = factored_sets(&factors, &analysis).unwrap();
        let p = cartesian_product(&factors[0], &factors[1]).unwrap();
        let direct = report_from_tables(&p, &md_tables(&p).unwrap());
        prop_assert_eq!(&f.report, &direct);
        prop_assert!(verify_product_decomposition_with_budget(&p, &factors, 25).unwrap());
    }

    #[test]
    fn product_strong_iff_factors_strong(a in any_digraph(4), b in any_digraph(4)) {
        let p = cartesian_product(&a, &b).unwrap();
        prop_assert_eq!(p.is_strongly_connected(), a.is_strongly_connected() && b.is_strongly_connected());
    }

    #[test]
    fn relabelled_digraphs_are_isomorphic(g in strong(7), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by a splitmix-style step; any bijection works here
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = Digraph::build(n, g.arcs().iter().map(|&(t, h)| (perm[t], perm[h]))).unwrap();
        prop_assert!(is_isomorphic(&g, &h));
    }
}

#[test]
fn budget_is_enforced() {
    let big = Digraph::directed_cycle(70).unwrap();
    let err = cartesian_product(&big, &big).unwrap_err();
    assert_eq!(
        err,
        Error::BudgetExceeded {
            size: 4900,
            budget: DEFAULT_VERTEX_BUDGET
        }
    );
}
