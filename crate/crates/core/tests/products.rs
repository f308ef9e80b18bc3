mod common;

use common::{arb_graph, random_graph};
use moddom_core::families::{enumerate_all_graphs, Family};
use moddom_core::products::{
    are_isomorphic, cartesian_product, classify_edge, direct_product, dominates, lexicographic_product,
    modular_product, product_order, strong_product, EdgeKind,
};
use moddom_core::{Graph, ProductVertex};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pv(g: usize, h: usize) -> ProductVertex {
    ProductVertex::new(g, h)
}

fn fam(s: &str) -> Graph {
    s.parse::<Family>().unwrap().generate().unwrap()
}

/// Edge of `G ⋄ H` straight from the three defining clauses.
fn defining_clauses(g: &Graph, h: &Graph, a: ProductVertex, b: ProductVertex) -> [bool; 3] {
    let cart = (a.g == b.g && h.has_edge(a.h, b.h)) || (a.h == b.h && g.has_edge(a.g, b.g));
    let direct = g.has_edge(a.g, b.g) && h.has_edge(a.h, b.h);
    let codirect = a.g != b.g && a.h != b.h && !g.has_edge(a.g, b.g) && !h.has_edge(a.h, b.h);
    [cart, direct, codirect]
}

#[test]
fn edge_set_is_disjoint_union_of_three_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..600 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(1..=5);
        let g = random_graph(&mut rng, n);
        let h = random_graph(&mut rng, m);
        let p = modular_product(&g, &h).unwrap();
        let (cart, dir) = (cartesian_product(&g, &h).unwrap(), direct_product(&g, &h).unwrap());
        let mut count = 0;
        for x in 0..n * m {
            for y in 0..n * m {
                if x == y {
                    continue;
                }
                let (a, b) = (ProductVertex::from_flat(x, m), ProductVertex::from_flat(y, m));
                let clauses = defining_clauses(&g, &h, a, b);
                let hits = clauses.iter().filter(|&&c| c).count();
                assert!(hits <= 1);
                assert_eq!(p.has_edge(x, y), hits == 1);
                assert_eq!(cart.has_edge(x, y), clauses[0]);
                assert_eq!(dir.has_edge(x, y), clauses[1]);
                let kind = classify_edge(&g, &h, a, b).unwrap();
                let expected = match clauses {
                    [true, _, _] => EdgeKind::Cartesian,
                    [_, true, _] => EdgeKind::Direct,
                    [_, _, true] => EdgeKind::Codirect,
                    _ => EdgeKind::None,
                };
                assert_eq!(kind, expected);
                count += hits;
            }
        }
        assert_eq!(count / 2, p.edge_count());
        assert_eq!(cart.edge_count(), m * g.edge_count() + n * h.edge_count());
    }
}

#[test]
fn dominates_matches_materialized_product() {
    for n in 1..=3 {
        for m in 1..=3 {
            for g in enumerate_all_graphs(n, false).unwrap() {
                for h in enumerate_all_graphs(m, false).unwrap() {
                    let p = modular_product(&g, &h).unwrap();
                    for x in 0..n * m {
                        for y in 0..n * m {
                            let (a, b) = (ProductVertex::from_flat(x, m), ProductVertex::from_flat(y, m));
                            assert_eq!(dominates(&g, &h, a, b), x == y || p.has_edge(x, y));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn complete_factor_products_coincide() {
    for n in 1..=5 {
        for g in enumerate_all_graphs(n, false).unwrap() {
            for t in 1..=3 {
                let kt = Graph::from_fn(t, |_, _| true).unwrap();
                let modular = modular_product(&g, &kt).unwrap();
                let strong = strong_product(&g, &kt).unwrap();
                let lex = lexicographic_product(&g, &kt).unwrap();
                assert!(are_isomorphic(&modular, &strong).unwrap());
                assert!(are_isomorphic(&strong, &lex).unwrap());
            }
        }
    }
}

#[test]
fn modular_product_is_commutative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let g = random_graph(&mut rng, n);
        let h = random_graph(&mut rng, m);
        let gh = modular_product(&g, &h).unwrap();
        let hg = modular_product(&h, &g).unwrap();
        assert!(are_isomorphic(&gh, &hg).unwrap());
        // the swap map is an explicit isomorphism
        for x in 0..n * m {
            for y in 0..n * m {
                let (a, b) = (ProductVertex::from_flat(x, m), ProductVertex::from_flat(y, m));
                assert_eq!(gh.has_edge(x, y), hg.has_edge(a.swapped().flat_index(n), b.swapped().flat_index(n)));
            }
        }
    }
}

proptest! {
    #[test]
    fn flat_index_round_trip(g in 0usize..50, h in 0usize..50, m in 50usize..60) {
        let v = pv(g, h);
        prop_assert_eq!(ProductVertex::from_flat(v.flat_index(m), m), v);
        prop_assert_eq!(v.flat_index(m), g * m + h);
    }

    #[test]
    fn dominates_is_symmetric(g in arb_graph(1, 5), h in arb_graph(1, 5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = pv(rng.gen_range(0..g.n()), rng.gen_range(0..h.n()));
        let b = pv(rng.gen_range(0..g.n()), rng.gen_range(0..h.n()));
        prop_assert_eq!(dominates(&g, &h, a, b), dominates(&g, &h, b, a));
        prop_assert_eq!(dominates(&g, &h, a, b), dominates(&h, &g, a.swapped(), b.swapped()));
    }
}

#[test]
fn p3_square_edge_count() {
    let p3 = fam("path:3");
    let p = modular_product(&p3, &p3).unwrap();
    let mut by_clause = [0usize; 3];
    for x in 0..9 {
        for y in x + 1..9 {
            let c = defining_clauses(&p3, &p3, ProductVertex::from_flat(x, 3), ProductVertex::from_flat(y, 3));
            for i in 0..3 {
                by_clause[i] += c[i] as usize;
            }
        }
    }
    assert_eq!(by_clause, [12, 8, 2]);
    assert_eq!(p.edge_count(), 22);
}

#[test]
fn small_product_identities() {
    let k1 = fam("complete:1");
    let c5 = fam("cycle:5");
    assert_eq!(modular_product(&k1, &c5).unwrap(), c5);
    assert_eq!(modular_product(&fam("complete:2"), &fam("complete:3")).unwrap(), fam("complete:6"));
    let p2 = fam("path:2");
    assert!(are_isomorphic(&cartesian_product(&p2, &p2).unwrap(), &fam("cycle:4")).unwrap());
    let matching = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(are_isomorphic(&direct_product(&p2, &p2).unwrap(), &matching).unwrap());
    assert_eq!(strong_product(&p2, &p2).unwrap(), fam("complete:4"));
    let p3 = fam("path:3");
    assert_eq!(lexicographic_product(&p3, &k1).unwrap(), p3);
    let k2 = fam("complete:2");
    assert_ne!(lexicographic_product(&p3, &k2).unwrap(), lexicographic_product(&k2, &p3).unwrap());
    assert!(are_isomorphic(&modular_product(&p3, &k2).unwrap(), &strong_product(&p3, &k2).unwrap()).unwrap());
    assert!(!are_isomorphic(&fam("cycle:4"), &fam("complete:4")).unwrap());
    assert_eq!(product_order(&p3, &c5).unwrap(), 15);
}

#[test]
fn classify_and_dominate_examples() {
    let p3 = fam("path:3");
    assert_eq!(classify_edge(&p3, &p3, pv(0, 0), pv(2, 2)).unwrap(), EdgeKind::Codirect);
    assert_eq!(classify_edge(&p3, &p3, pv(0, 0), pv(0, 1)).unwrap(), EdgeKind::Cartesian);
    assert_eq!(classify_edge(&p3, &p3, pv(0, 0), pv(1, 1)).unwrap(), EdgeKind::Direct);
    assert_eq!(classify_edge(&p3, &p3, pv(0, 0), pv(0, 2)).unwrap(), EdgeKind::None);
    assert!(classify_edge(&p3, &p3, pv(1, 1), pv(1, 1)).is_err());
    assert!(classify_edge(&p3, &p3, pv(3, 0), pv(1, 1)).is_err());
    assert!(dominates(&p3, &p3, pv(2, 1), pv(2, 1)));
    assert!(dominates(&p3, &p3, pv(0, 0), pv(2, 2)));
    assert!(!dominates(&p3, &p3, pv(0, 0), pv(1, 2)));
}

#[test]
fn oversized_inputs_are_refused() {
    let big = Graph::empty(65).unwrap();
    assert!(modular_product(&big, &big).is_err());
    let seventeen = Graph::empty(17).unwrap();
    assert!(are_isomorphic(&seventeen, &seventeen).is_err());
}
