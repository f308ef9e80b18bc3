//! Named graph families and exhaustive labeled enumeration.
//!
//! Canonical labelings:
//!
//! * paths and cycles use consecutive vertices `0..n`;
//! * `Star(n)` is `K_{1,n}` with center 0;
//! * `K_{m,n}` has parts `0..m` and `m..m+n`; the minus-edge variant deletes
//!   the edge `{0, m}`;
//! * `Cube` is `Q3` on `0..8`, vertices adjacent when their labels differ in
//!   one bit; `CubeMinusVertex` deletes vertex 7;
//! * `Petersen` has the outer 5-cycle `0..5`, the inner pentagram `5..10`
//!   (`5+i ~ 5+(i+2) mod 5`) and spokes `i ~ i+5`. Reading outer vertex `i`
//!   as `x_{i+1}` and inner vertex `5+i` as `y_{i+1}` gives the usual
//!   `x`/`y` drawing;
//! * `CompleteMinusMatching(k)` is `K_{2k}` without the matching
//!   `{2i, 2i+1}`.
//!
//! Text forms (used on the command line): `path:N`, `cycle:N`,
//! `complete:N`, `star:N`, `kmn:M:N`, `kmn-minus:M:N`, `cube`, `cube-minus`,
//! `petersen`, `kminusm:K`, `complement:<family>`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

use crate::graph::{Graph, MAX_VERTICES};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,n}`.
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `K_{m,n}` minus one edge, `m, n > 1`.
    CompleteBipartiteMinusEdge(usize, usize),
    Cube,
    CubeMinusVertex,
    Petersen,
    /// `K_{2k} - M` for a perfect matching `M`.
    CompleteMinusMatching(usize),
    ComplementOf(Box<Family>),
}

fn invalid<T>(msg: &str) -> Result<T> {
    Err(Error::InvalidFamily(msg.to_string()))
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        let n = match self {
            Family::Path(n) | Family::Complete(n) if *n == 0 => {
                return invalid("vertex count must be positive")
            }
            Family::Cycle(n) if *n < 3 => return invalid("cycles need at least 3 vertices"),
            Family::Star(n) if *n == 0 => return invalid("star needs at least one leaf"),
            Family::CompleteBipartite(m, n) if *m == 0 || *n == 0 => {
                return invalid("bipartite parts must be nonempty")
            }
            Family::CompleteBipartiteMinusEdge(m, n) if *m < 2 || *n < 2 => {
                return invalid("K_{m,n} minus an edge needs m, n > 1")
            }
            Family::CompleteMinusMatching(k) if *k == 0 => return invalid("k must be positive"),
            Family::ComplementOf(inner) => return inner.validate(),
            other => other.order(),
        };
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(())
    }

    /// Vertex count of the generated graph (parameters assumed valid).
    pub fn order(&self) -> usize {
        match self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => *n,
            Family::Star(n) => n + 1,
            Family::CompleteBipartite(m, n) | Family::CompleteBipartiteMinusEdge(m, n) => m + n,
            Family::Cube => 8,
            Family::CubeMinusVertex => 7,
            Family::Petersen => 10,
            Family::CompleteMinusMatching(k) => 2 * k,
            Family::ComplementOf(inner) => inner.order(),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        match self {
            Family::Path(_) => Graph::from_fn(n, |u, v| v == u + 1),
            Family::Cycle(_) => Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)),
            Family::Complete(_) => Graph::from_fn(n, |_, _| true),
            Family::Star(_) => Graph::from_fn(n, |u, _| u == 0),
            Family::CompleteBipartite(m, _) => Graph::from_fn(n, |u, v| u < *m && v >= *m),
            Family::CompleteBipartiteMinusEdge(m, _) => {
                Graph::from_fn(n, |u, v| u < *m && v >= *m && !(u == 0 && v == *m))
            }
            Family::Cube => Graph::from_fn(n, |u, v| (u ^ v).count_ones() == 1),
            Family::CubeMinusVertex => Graph::from_fn(n, |u, v| (u ^ v).count_ones() == 1),
            Family::Petersen => Graph::from_fn(n, |u, v| match (u < 5, v < 5) {
                (true, true) => v == u + 1 || (u == 0 && v == 4),
                (true, false) => v == u + 5,
                _ => {
                    let (a, b) = (u - 5, v - 5);
                    b == (a + 2) % 5 || a == (b + 2) % 5
                }
            }),
            Family::CompleteMinusMatching(_) => Graph::from_fn(n, |u, v| u / 2 != v / 2),
            Family::ComplementOf(inner) => Ok(inner.generate()?.complement()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "kmn:{m}:{n}"),
            Family::CompleteBipartiteMinusEdge(m, n) => write!(f, "kmn-minus:{m}:{n}"),
            Family::Cube => f.write_str("cube"),
            Family::CubeMinusVertex => f.write_str("cube-minus"),
            Family::Petersen => f.write_str("petersen"),
            Family::CompleteMinusMatching(k) => write!(f, "kminusm:{k}"),
            Family::ComplementOf(inner) => write!(f, "complement:{inner}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        if head == "complement" {
            let inner = rest.ok_or_else(|| Error::InvalidFamily("complement of what?".into()))?;
            let family = Family::ComplementOf(Box::new(inner.parse()?));
            family.validate()?;
            return Ok(family);
        }
        let mut args = rest.into_iter().flat_map(|r| r.split(':'));
        let mut num = || -> Result<usize> {
            let arg = args
                .next()
                .ok_or_else(|| Error::InvalidFamily(format!("`{s}` is missing a parameter")))?;
            arg.parse()
                .map_err(|_| Error::InvalidFamily(format!("`{arg}` is not a number in `{s}`")))
        };
        let family = match head {
            "path" => Family::Path(num()?),
            "cycle" => Family::Cycle(num()?),
            "complete" => Family::Complete(num()?),
            "star" => Family::Star(num()?),
            "kmn" => Family::CompleteBipartite(num()?, num()?),
            "kmn-minus" => Family::CompleteBipartiteMinusEdge(num()?, num()?),
            "cube" => Family::Cube,
            "cube-minus" => Family::CubeMinusVertex,
            "petersen" => Family::Petersen,
            "kminusm" => Family::CompleteMinusMatching(num()?),
            _ => return Err(Error::InvalidFamily(format!("unknown family `{head}`"))),
        };
        if args.next().is_some() {
            return Err(Error::InvalidFamily(format!("too many parameters in `{s}`")));
        }
        family.validate()?;
        Ok(family)
    }
}

/// Largest vertex count accepted by [`enumerate_all_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Number of vertex pairs, i.e. bits in an edge mask, for `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Graph whose edge set is given by `mask`, bit `i` standing for the `i`-th
/// pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn graph_from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
    if pair_count(n) > 64 {
        return Err(Error::InvalidArgument("edge masks cover at most 11 vertices"));
    }
    let mut bit = 0;
    let mut edges = alloc::vec::Vec::new();
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Every labeled graph on `n` vertices, in increasing edge-mask order.
pub fn enumerate_all_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 {
        return Err(Error::InvalidArgument("a graph needs at least one vertex"));
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let total = 1u64 << pair_count(n);
    Ok((0..total)
        .map(move |mask| graph_from_pair_mask(n, mask).expect("n checked"))
        .filter(move |g| !connected_only || g.is_connected()))
}
