//! Brute-force oracles built only from `has_edge`, plus random inputs.
#![allow(dead_code)]

use moddom_core::families::{graph_from_pair_mask, pair_count};
use moddom_core::products::modular_product;
use moddom_core::{Graph, ProductVertex};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn closed(g: &Graph, v: usize) -> Vec<bool> {
    (0..g.n()).map(|u| u == v || g.has_edge(u, v)).collect()
}

fn members(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&i| mask >> i & 1 == 1)
}

pub fn dominates_all(g: &Graph, mask: u64) -> bool {
    (0..g.n()).all(|v| members(mask, g.n()).any(|d| d == v || g.has_edge(d, v)))
}

pub fn totally_dominates_all(g: &Graph, mask: u64) -> bool {
    (0..g.n()).all(|v| members(mask, g.n()).any(|d| g.has_edge(d, v)))
}

pub fn sdctd(g: &Graph, mask: u64) -> bool {
    let n = g.n();
    dominates_all(g, mask)
        && (0..n).all(|v| members(mask, n).any(|d| d != v && !g.has_edge(d, v)))
}

/// Smallest subset passing `ok`, by increasing size then mask; `None` if no
/// subset does.
pub fn min_subset(n: usize, ok: impl Fn(u64) -> bool) -> Option<(usize, u64)> {
    assert!(n <= 20);
    let mut best: Option<(usize, u64)> = None;
    for mask in 0..1u64 << n {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|(s, _)| s <= size) {
            continue;
        }
        if ok(mask) {
            best = Some((size, mask));
        }
    }
    best
}

pub fn gamma(g: &Graph) -> usize {
    min_subset(g.n(), |m| dominates_all(g, m)).unwrap().0
}

pub fn gamma_total(g: &Graph) -> Option<usize> {
    min_subset(g.n(), |m| totally_dominates_all(g, m)).map(|r| r.0)
}

pub fn gamma_sdctd(g: &Graph) -> Option<usize> {
    min_subset(g.n(), |m| sdctd(g, m)).map(|r| r.0)
}

pub fn packing(g: &Graph) -> usize {
    let n = g.n();
    (0..1u64 << n)
        .filter(|&m| {
            members(m, n).all(|a| {
                members(m, n).all(|b| a == b || (0..n).all(|v| !(closed(g, a)[v] && closed(g, b)[v])))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn has_ecd(g: &Graph, size: Option<usize>) -> bool {
    let n = g.n();
    (0..1u64 << n).any(|m| {
        size.is_none_or(|s| m.count_ones() as usize == s)
            && (0..n).all(|v| members(m, n).filter(|&d| closed(g, d)[v]).count() == 1)
    })
}

/// `γ(G ⋄ H)` truncated at `cap`, by enumerating vertex subsets of the
/// materialized product in increasing size.
pub fn product_gamma_capped(g: &Graph, h: &Graph, cap: usize) -> usize {
    let p = modular_product(g, h).unwrap();
    let n = p.n();
    let rows: Vec<Vec<bool>> = (0..n).map(|v| closed(&p, v)).collect();
    for k in 1..cap {
        let mut found = false;
        for_each_combination(n, k, &mut |c| {
            if !found && (0..n).all(|v| c.iter().any(|&d| rows[d][v])) {
                found = true;
            }
        });
        if found {
            return k;
        }
    }
    cap
}

pub fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Product-domination check through the materialized product graph.
pub fn materialized_dominates(g: &Graph, h: &Graph, set: &[ProductVertex]) -> bool {
    let p = modular_product(g, h).unwrap();
    let m = h.n();
    (0..p.n()).all(|v| {
        set.iter().any(|d| {
            let d = d.flat_index(m);
            d == v || p.has_edge(d, v)
        })
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let bits = pair_count(n);
    let mask = if bits == 0 { 0 } else { rng.gen::<u64>() >> (64 - bits) };
    graph_from_pair_mask(n, mask).unwrap()
}

pub fn random_graph_with(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap()
}

/// Uniform labeled graphs on `lo..=hi` vertices (`hi ≤ 11`).
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let bits = pair_count(n);
        let max = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        (Just(n), 0..=max).prop_map(|(n, mask)| graph_from_pair_mask(n, mask).unwrap())
    })
}
