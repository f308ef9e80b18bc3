mod common;

use common::{materialized_dominates, product_gamma_capped, random_graph};
use moddom_core::characterization::{
    a_indicator, at_least_three, classify, clause, dom3_iv_search, equals_one, equals_three, equals_two, A_set,
    IndexSubset, Klass,
};
use moddom_core::domination::dominating_via_index_sets;
use moddom_core::families::{enumerate_all_graphs, Family};
use moddom_core::{Graph, ProductVertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fam(s: &str) -> Graph {
    s.parse::<Family>().unwrap().generate().unwrap()
}

fn check_pair(g: &Graph, h: &Graph) {
    let truncated = product_gamma_capped(g, h, 4);
    let v = classify(g, h).unwrap();
    assert_eq!(v.klass.truncated_value(), truncated, "{g:?} {h:?} {}", v.condition);
    assert!(v.consistent());
    if let Some(w) = &v.witness {
        assert_eq!(w.len(), truncated);
        assert!(materialized_dominates(g, h, w));
    }
    assert_eq!(classify(h, g).unwrap().klass, v.klass);
}

#[test]
fn classification_matches_brute_force_on_small_pairs() {
    for n in 1..=3 {
        for m in 1..=4 {
            for g in enumerate_all_graphs(n, false).unwrap() {
                for h in enumerate_all_graphs(m, false).unwrap() {
                    check_pair(&g, &h);
                }
            }
        }
    }
}

#[test]
fn classification_matches_brute_force_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let (n, m) = (rng.gen_range(3..=5), rng.gen_range(3..=5));
        let g = random_graph(&mut rng, n);
        let h = random_graph(&mut rng, m);
        check_pair(&g, &h);
    }
}

/// Distinct triples whose diagonal `{(g_i, h_i)}` dominates, by brute force.
fn diagonal_exists(g: &Graph, h: &Graph) -> bool {
    let triples = |n: usize| {
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a != b && b != c && a != c {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    };
    let th = triples(h.n());
    triples(g.n()).iter().filter(|t| t[0] < t[1] && t[1] < t[2]).any(|tg| {
        th.iter().any(|th| {
            let d: Vec<ProductVertex> = (0..3).map(|i| ProductVertex::new(tg[i], th[i])).collect();
            materialized_dominates(g, h, &d)
        })
    })
}

#[test]
fn dom3_iv_search_is_exact_and_constructive() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut hits = 0;
    for _ in 0..250 {
        let (n, m) = (rng.gen_range(3..=5), rng.gen_range(3..=5));
        let g = random_graph(&mut rng, n);
        let h = random_graph(&mut rng, m);
        let found = dom3_iv_search(&g, &h);
        assert_eq!(found.is_some(), diagonal_exists(&g, &h), "{g:?} {h:?}");
        if let Some((tg, th)) = found {
            hits += 1;
            let diag: Vec<ProductVertex> = (0..3).map(|i| ProductVertex::new(tg[i], th[i])).collect();
            assert!(dominating_via_index_sets(&g, &h, &diag).unwrap());
            for mask in 0..8 {
                let i = IndexSubset::from_mask(3, mask).unwrap();
                let sum = a_indicator(&g, &tg, i).unwrap() as u32 + a_indicator(&h, &th, i.complement()).unwrap() as u32;
                assert!(sum <= 1);
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn a_set_examples() {
    let p3 = fam("path:3");
    let full = IndexSubset::new(2, [0, 1]).unwrap();
    assert_eq!(A_set(&p3, &[0, 2], full).unwrap().to_vec(), [1]);
    let empty = IndexSubset::new(2, []).unwrap();
    assert!(A_set(&p3, &[0, 2], empty).unwrap().is_empty());
    assert!(a_indicator(&p3, &[0, 2], full).unwrap());
    assert!(!a_indicator(&p3, &[0, 2], empty).unwrap());
    let p = fam("petersen");
    for v in 0..10 {
        let nv = p.open_neighborhood(v).unwrap().to_vec();
        assert_eq!(A_set(&p, &nv, IndexSubset::from_mask(3, 7).unwrap()).unwrap().to_vec(), [v]);
    }
    assert!(A_set(&p3, &[0, 0], full).is_err());
    assert!(A_set(&p3, &[0], full).is_err());
}

#[test]
fn a_sets_partition_the_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let g = random_graph(&mut rng, n);
        let mut d: Vec<usize> = (0..n).collect();
        for i in 0..3 {
            let j = rng.gen_range(i..n);
            d.swap(i, j);
        }
        d.truncate(3);
        let mut total = 0;
        for i in IndexSubset::all(3).unwrap() {
            let a = A_set(&g, &d, i).unwrap();
            total += a.len();
            for v in a.iter() {
                let hit: Vec<usize> = (0..3).filter(|&k| g.in_closed_neighborhood(v, d[k])).collect();
                assert_eq!(hit, i.members().collect::<Vec<_>>());
            }
        }
        assert_eq!(total, n);
    }
}

#[test]
fn index_subsets() {
    let i = IndexSubset::new(3, [0, 2]).unwrap();
    assert_eq!(i.complement().members().collect::<Vec<_>>(), [1]);
    assert!(i.contains(2) && !i.contains(1));
    assert_eq!(IndexSubset::all(3).unwrap().count(), 8);
    assert!(IndexSubset::new(3, [3]).is_err());
    assert!(IndexSubset::from_mask(2, 4).is_err());
}

#[test]
fn decision_examples() {
    let (k3, k4, c4, p4) = (fam("complete:3"), fam("complete:4"), fam("cycle:4"), fam("path:4"));
    let p = fam("petersen");
    assert!(equals_one(&fam("star:3"), &k4));
    assert!(!equals_one(&c4, &k4));
    assert!(equals_one(&fam("complete:1"), &fam("complete:1")));
    assert_eq!(equals_two(&p4, &p), Some(clause::TWO_II));
    assert_eq!(equals_two(&p4, &k3), Some(clause::TWO_I));
    assert_eq!(equals_two(&c4, &c4), None);
    assert!(at_least_three(&c4, &c4));
    assert!(!at_least_three(&p4, &p));
    assert!(at_least_three(&p, &p));
    assert_eq!(equals_three(&c4, &c4).unwrap().unwrap().clause, clause::DOM3_I);
    let pp = equals_three(&p, &p).unwrap().unwrap();
    assert!(materialized_dominates(&p, &p, &pp.witness));
    assert_eq!(equals_three(&fam("path:10"), &p).unwrap(), None);
    assert!(equals_three(&p4, &p).is_err());
}

#[test]
fn classify_examples() {
    assert_eq!(classify(&fam("complete:3"), &fam("complete:3")).unwrap().klass, Klass::Eq1);
    let c4 = fam("cycle:4");
    let v = classify(&c4, &c4).unwrap();
    assert_eq!((v.klass, v.cross_check), (Klass::Eq3, Some(3)));
    let v = classify(&fam("path:10"), &fam("petersen")).unwrap();
    assert_eq!((v.klass, v.condition), (Klass::Ge4, clause::NONE));
    assert_eq!(Klass::from_truncated(7), Klass::Ge4);
    assert_eq!(format!("{}", Klass::Eq2), "EQ2");
}
