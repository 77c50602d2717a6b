use mdgraph::fixtures::*;
use mdgraph::*;

fn set<const N: usize>(xs: [usize; N]) -> VertexSet {
    VertexSet::from(xs)
}

fn sets(r: &BoundaryReport) -> [&VertexSet; 4] {
    [&r.boundary, &r.eccentric, &r.contour, &r.periphery]
}

#[test]
fn theta5_tables() {
    let t = md_tables(&theta5()).unwrap();
    let ddist: Vec<Vec<u32>> = t.ddist().rows().map(<[u32]>::to_vec).collect();
    assert_eq!(
        ddist,
        [
            [0, 1, 2, 3, 4],
            [2, 0, 1, 2, 3],
            [1, 2, 0, 1, 2],
            [3, 4, 2, 0, 1],
            [2, 3, 1, 2, 0]
        ]
    );
    let md: Vec<Vec<u32>> = t.md().rows().map(<[u32]>::to_vec).collect();
    assert_eq!(
        md,
        [
            [0, 2, 2, 3, 4],
            [2, 0, 2, 4, 3],
            [2, 2, 0, 2, 2],
            [3, 4, 2, 0, 2],
            [4, 3, 2, 2, 0]
        ]
    );
    assert_eq!(t.ecc(), [4, 4, 2, 4, 4]);
    assert_eq!(geodetic_interval(&t, 2, 0).unwrap().members, set([0, 2]));
}

#[test]
fn c3_squared() {
    let p = cartesian_product(&c3(), &c3()).unwrap();
    let shape = ProductShape::of(&[c3(), c3()]).unwrap();
    let t = md_tables(&p).unwrap();
    let (a, b) = (
        shape.encode(&[0, 2]).unwrap(),
        shape.encode(&[2, 0]).unwrap(),
    );
    assert_eq!(t.md()[(a, b)], 3);
    assert!(t.ecc().iter().all(|&e| e == 4));
}

#[test]
fn theta5_times_r5() {
    let p = cartesian_product(&theta5(), &r5()).unwrap();
    let r = full_report(&p).unwrap();
    assert_eq!(
        r.ecc,
        [7, 8, 6, 7, 8, 8, 7, 6, 8, 7, 6, 6, 4, 6, 6, 7, 8, 6, 7, 8, 8, 7, 6, 8, 7]
    );
    let per = set([1, 4, 5, 8, 16, 19, 20, 23]);
    assert_eq!(r.periphery, per);
    assert_eq!(r.contour, per);
    assert_eq!(r.eccentric, per);
    assert_eq!(
        r.boundary,
        set([0, 1, 3, 4, 5, 6, 8, 9, 15, 16, 18, 19, 20, 21, 23, 24])
    );
    // (3,4) is eccentric to (0,0)
    let t = md_tables(&p).unwrap();
    assert_eq!(t.md()[(0, 19)], t.ecc()[0]);
}

#[test]
fn x3_times_y3() {
    let p = cartesian_product(&x3(), &y3()).unwrap();
    let r = full_report(&p).unwrap();
    assert_eq!(r.ecc, [3, 4, 4, 4, 3, 4, 4, 4, 4]);
    let s = set([1, 2, 3, 5, 6, 7, 8]);
    assert_eq!(r.periphery, s);
    assert_eq!(r.contour, s);
    assert_eq!(r.eccentric, s);
    assert_eq!(r.boundary, (0..9).collect());
}

#[test]
fn path_products() {
    let outer = set([0, 1, 2, 6, 7, 8]);
    let r = full_report(&cartesian_product(&p3u(), &y3()).unwrap()).unwrap();
    assert!(sets(&r).iter().all(|s| **s == outer));
    assert!(!r.tse);

    let r = full_report(&cartesian_product(&p3u(), &c3()).unwrap()).unwrap();
    assert!(sets(&r).iter().all(|s| **s == outer));
    assert_eq!(r.ecc, [4, 4, 4, 3, 3, 3, 4, 4, 4]);
    assert!(r.tse);

    let r = full_report(&cartesian_product(&p3u(), &theta5()).unwrap()).unwrap();
    assert!(sets(&r)
        .iter()
        .all(|s| **s == set([0, 1, 3, 4, 10, 11, 13, 14])));
}

#[test]
fn factored_c3_pair_is_all_shortcut() {
    let factors = [c3(), c3()];
    let f = factored_sets(&factors, &factor_analysis(&factors).unwrap()).unwrap();
    assert!(f.provenance.all_shortcut());
    assert!(f.report.ecc.iter().all(|&e| e == 4));
    assert_eq!((f.cost.direct_evals, f.cost.factored_evals), (72, 12));
}
