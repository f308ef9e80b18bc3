//! Naive reference computations by subset enumeration. They read graphs
//! through `has_edge` only and share no code with the solvers.

use moddom_core::{Graph, ProductVertex};

/// Largest vertex count (graph or product) the oracles enumerate over.
pub const ORACLE_MAX: usize = 25;

fn rows(g: &Graph, closed: bool) -> Vec<u32> {
    let n = g.n();
    assert!(n <= ORACLE_MAX, "oracle graphs have at most {ORACLE_MAX} vertices");
    (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| (closed && u == v) || g.has_edge(u, v))
                .fold(0, |m, u| m | 1 << u)
        })
        .collect()
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1 << n) - 1
    }
}

/// Smallest `k` such that some `k` rows cover everything, trying `k` up to
/// `cap - 1`; returns `cap` when none does.
fn min_cover(rows: &[u32], universe: u32, cap: usize) -> usize {
    fn search(rows: &[u32], universe: u32, start: usize, left: usize, acc: u32) -> bool {
        if acc == universe {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..rows.len()).any(|i| search(rows, universe, i + 1, left - 1, acc | rows[i]))
    }
    (0..cap.min(rows.len() + 1))
        .find(|&k| search(rows, universe, 0, k, 0))
        .unwrap_or(cap)
}

pub fn gamma(g: &Graph) -> usize {
    min_cover(&rows(g, true), full(g.n()), usize::MAX)
}

/// `None` when some vertex is isolated.
pub fn gamma_total(g: &Graph) -> Option<usize> {
    let r = rows(g, false);
    if r.iter().any(|&x| x == 0) {
        return None;
    }
    Some(min_cover(&r, full(g.n()), usize::MAX))
}

/// `γ̄`, over the doubled universe `V(G) ⊎ V(Ḡ)`; `None` when `G` has a
/// universal vertex.
pub fn gamma_sdctd(g: &Graph) -> Option<usize> {
    let n = g.n();
    assert!(2 * n <= 32);
    let closed = rows(g, true);
    let open_co = rows(&g.complement(), false);
    if open_co.iter().any(|&x| x == 0) {
        return None;
    }
    let joined: Vec<u32> = (0..n)
        .map(|v| closed[v] | (open_co[v] << n))
        .collect();
    Some(min_cover(&joined, full(2 * n), usize::MAX))
}

/// Largest set of vertices with pairwise disjoint closed neighborhoods.
pub fn packing(g: &Graph) -> usize {
    let r = rows(g, true);
    (0u32..1 << g.n())
        .filter(|&set| {
            let mut seen = 0;
            (0..g.n()).filter(|&v| set >> v & 1 == 1).all(|v| {
                let fresh = seen & r[v] == 0;
                seen |= r[v];
                fresh
            })
        })
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Closed-neighborhood rows of the materialized `G ⋄ H`, flat indexed.
fn product_rows(g: &Graph, h: &Graph) -> Vec<u32> {
    let (n, m) = (g.n(), h.n());
    assert!(n * m <= ORACLE_MAX);
    let adjacent = |a: ProductVertex, b: ProductVertex| {
        let cart = (a.g == b.g && h.has_edge(a.h, b.h)) || (a.h == b.h && g.has_edge(a.g, b.g));
        let direct = g.has_edge(a.g, b.g) && h.has_edge(a.h, b.h);
        let codirect = a.g != b.g && a.h != b.h && !g.has_edge(a.g, b.g) && !h.has_edge(a.h, b.h);
        cart || direct || codirect
    };
    (0..n * m)
        .map(|x| {
            let a = ProductVertex::from_flat(x, m);
            (0..n * m)
                .filter(|&y| x == y || adjacent(a, ProductVertex::from_flat(y, m)))
                .fold(0, |acc, y| acc | 1 << y)
        })
        .collect()
}

/// `γ(G ⋄ H)` capped at `cap`.
pub fn product_gamma(g: &Graph, h: &Graph, cap: usize) -> usize {
    let r = product_rows(g, h);
    min_cover(&r, full(r.len()), cap)
}

pub fn product_dominates(g: &Graph, h: &Graph, set: &[ProductVertex]) -> bool {
    let r = product_rows(g, h);
    let m = h.n();
    set.iter().fold(0, |acc, v| acc | r[v.flat_index(m)]) == full(r.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use moddom_core::families::Family;

    fn fam(s: &str) -> Graph {
        s.parse::<Family>().unwrap().generate().unwrap()
    }

    #[test]
    fn reference_values() {
        assert_eq!(gamma(&fam("petersen")), 3);
        assert_eq!(gamma(&fam("path:4")), 2);
        assert_eq!(gamma_total(&fam("complete:1")), None);
        assert_eq!(gamma_total(&fam("path:4").complement()), Some(2));
        assert_eq!(gamma_sdctd(&fam("petersen")), Some(4));
        assert_eq!(gamma_sdctd(&fam("cycle:4")), Some(4));
        assert_eq!(gamma_sdctd(&fam("star:3")), None);
        assert_eq!(packing(&fam("path:7")), 3);
        assert_eq!(packing(&fam("petersen")), 1);
        let c4 = fam("cycle:4");
        assert_eq!(product_gamma(&c4, &c4, 10), 3);
        assert_eq!(product_gamma(&c4, &c4, 3), 3);
        assert_eq!(product_gamma(&c4, &c4, 2), 2);
        let p3 = fam("path:3");
        assert!(product_dominates(&p3, &p3, &[ProductVertex::new(1, 1)]));
        assert!(!product_dominates(&p3, &p3, &[ProductVertex::new(0, 0)]));
    }
}
