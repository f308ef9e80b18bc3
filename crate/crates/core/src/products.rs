//! Graph products on `V(G) × V(H)`.
//!
//! Product vertices are flattened row-major: `(g, h)` has index
//! `g * |V(H)| + h`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_VERTICES};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertex {
    pub g: usize,
    pub h: usize,
}

impl ProductVertex {
    pub const fn new(g: usize, h: usize) -> Self {
        ProductVertex { g, h }
    }

    pub fn flat_index(self, h_order: usize) -> usize {
        self.g * h_order + self.h
    }

    pub fn from_flat(index: usize, h_order: usize) -> Self {
        ProductVertex {
            g: index / h_order,
            h: index % h_order,
        }
    }

    /// The same pair read in the product with the factors exchanged.
    pub fn swapped(self) -> Self {
        ProductVertex {
            g: self.h,
            h: self.g,
        }
    }
}

impl fmt::Display for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.g, self.h)
    }
}

impl From<(usize, usize)> for ProductVertex {
    fn from((g, h): (usize, usize)) -> Self {
        ProductVertex { g, h }
    }
}

/// Which clause of the modular product joins two distinct product vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Equal in one coordinate, adjacent in the other.
    Cartesian,
    /// Adjacent in both coordinates.
    Direct,
    /// Distinct and non-adjacent in both coordinates.
    Codirect,
    None,
}

/// Checks the product vertex count against [`MAX_VERTICES`].
pub fn product_order(g: &Graph, h: &Graph) -> Result<usize> {
    let n = g.n().saturating_mul(h.n());
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, max: MAX_VERTICES });
    }
    Ok(n)
}

fn check_vertex(g: &Graph, h: &Graph, v: ProductVertex) -> Result<()> {
    if v.g >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v.g, n: g.n() });
    }
    if v.h >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: v.h, n: h.n() });
    }
    Ok(())
}

fn edge_kind(g: &Graph, h: &Graph, a: ProductVertex, b: ProductVertex) -> EdgeKind {
    let (g_eq, h_eq) = (a.g == b.g, a.h == b.h);
    let (g_adj, h_adj) = (g.has_edge(a.g, b.g), h.has_edge(a.h, b.h));
    let cartesian = (g_eq && h_adj) || (g_adj && h_eq);
    let direct = g_adj && h_adj;
    let codirect = !g_eq && !h_eq && !g_adj && !h_adj;
    debug_assert!(
        (cartesian as u8 + direct as u8 + codirect as u8) <= 1,
        "edge classes overlap"
    );
    if cartesian {
        EdgeKind::Cartesian
    } else if direct {
        EdgeKind::Direct
    } else if codirect {
        EdgeKind::Codirect
    } else {
        EdgeKind::None
    }
}

pub fn classify_edge(g: &Graph, h: &Graph, a: ProductVertex, b: ProductVertex) -> Result<EdgeKind> {
    check_vertex(g, h, a)?;
    check_vertex(g, h, b)?;
    if a == b {
        return Err(Error::InvalidArgument("an edge needs two distinct product vertices"));
    }
    Ok(edge_kind(g, h, a, b))
}

fn build<F>(g: &Graph, h: &Graph, mut adjacent: F) -> Result<Graph>
where
    F: FnMut(ProductVertex, ProductVertex) -> bool,
{
    let n = product_order(g, h)?;
    let m = h.n();
    Graph::from_fn(n, |x, y| {
        adjacent(ProductVertex::from_flat(x, m), ProductVertex::from_flat(y, m))
    })
}

/// `G ⋄ H`: Cartesian, direct and co-direct edges.
pub fn modular_product(g: &Graph, h: &Graph) -> Result<Graph> {
    build(g, h, |a, b| edge_kind(g, h, a, b) != EdgeKind::None)
}

/// `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    build(g, h, |a, b| edge_kind(g, h, a, b) == EdgeKind::Cartesian)
}

/// `G × H`.
pub fn direct_product(g: &Graph, h: &Graph) -> Result<Graph> {
    build(g, h, |a, b| g.has_edge(a.g, b.g) && h.has_edge(a.h, b.h))
}

/// `G ⊠ H`: Cartesian and direct edges.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    build(g, h, |a, b| {
        matches!(edge_kind(g, h, a, b), EdgeKind::Cartesian | EdgeKind::Direct)
    })
}

/// `G ∘ H`: `gg' ∈ E(G)`, or `g = g'` and `hh' ∈ E(H)`. Not commutative.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    build(g, h, |a, b| {
        g.has_edge(a.g, b.g) || (a.g == b.g && h.has_edge(a.h, b.h))
    })
}

/// Whether `target` lies in the closed neighborhood of `dominator` in
/// `G ⋄ H`, decided from the factors alone: both coordinates inside the
/// closed neighborhoods, or both outside.
#[inline]
pub fn dominates(g: &Graph, h: &Graph, dominator: ProductVertex, target: ProductVertex) -> bool {
    g.in_closed_neighborhood(target.g, dominator.g) == h.in_closed_neighborhood(target.h, dominator.h)
}

/// Largest order accepted by [`are_isomorphic`].
pub const ISOMORPHISM_MAX_ORDER: usize = 16;

/// Backtracking isomorphism test with degree pruning, for small graphs.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.n() > ISOMORPHISM_MAX_ORDER {
            return Err(Error::TooLarge {
                n: g.n(),
                max: ISOMORPHISM_MAX_ORDER,
            });
        }
    }
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    let mut sa = deg_a.clone();
    let mut sb = deg_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(false);
    }
    // Map high-degree vertices first; ties keep index order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(deg_a[v]));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_map(a, b, &deg_a, &deg_b, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend_map(
    a: &Graph,
    b: &Graph,
    deg_a: &[usize],
    deg_b: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..b.n() {
        if used[w] || deg_b[w] != deg_a[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend_map(a, b, deg_a, deg_b, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}
