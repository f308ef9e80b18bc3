use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{self, words_for, Ones, VertexSet, WORD_BITS};
use crate::{Error, Result};

/// Hard cap on the vertex count of any graph, products included.
pub const MAX_VERTICES: usize = 4096;

/// A natural number or infinity. `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(usize),
    Infinite,
}

impl ExtendedNat {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }
}

impl From<usize> for ExtendedNat {
    fn from(v: usize) -> Self {
        ExtendedNat::Finite(v)
    }
}

impl PartialEq<usize> for ExtendedNat {
    fn eq(&self, other: &usize) -> bool {
        *self == ExtendedNat::Finite(*other)
    }
}

impl PartialOrd<usize> for ExtendedNat {
    fn partial_cmp(&self, other: &usize) -> Option<core::cmp::Ordering> {
        Some(self.cmp(&ExtendedNat::Finite(*other)))
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinite => f.write_str("inf"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency matrix is the open neighborhood of `v`, stored as
/// a bit-vector of `words_per_row` machine words. Rows are symmetric and no
/// row contains its own vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    wpr: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= MAX_VERTICES`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let wpr = words_for(n);
        Ok(Graph {
            n,
            wpr,
            adj: vec![0; n * wpr],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::InvalidArgument("loops are not allowed"));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair
    /// `u < v`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        Ok(g)
    }

    fn link(&mut self, u: usize, v: usize) {
        let w = self.wpr;
        bitset::set(&mut self.adj[u * w..(u + 1) * w], v);
        bitset::set(&mut self.adj[v * w..(v + 1) * w], u);
    }

    #[inline]
    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words_per_row(&self) -> usize {
        self.wpr
    }

    /// Open-neighborhood row of `v` as raw words. `v` must be in range.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.wpr..(v + 1) * self.wpr]
    }

    /// All closed-neighborhood rows, laid out like the adjacency matrix.
    pub(crate) fn closed_rows(&self) -> Vec<u64> {
        let mut rows = self.adj.clone();
        for v in 0..self.n {
            bitset::set(&mut rows[v * self.wpr..(v + 1) * self.wpr], v);
        }
        rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bitset::get(self.row(u), v)
    }

    /// `u ∈ N[v]`.
    #[inline]
    pub fn in_closed_neighborhood(&self, u: usize, v: usize) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            Ones::new(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.open_neighborhood(v)?;
        s.insert_unchecked(v);
        Ok(s)
    }

    /// `N[D]`, the union of closed neighborhoods over `set`.
    pub fn closed_neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut words = set.words().to_vec();
        for v in set {
            bitset::or_into(&mut words, self.row(v));
        }
        VertexSet::from_words(self.n, words)
    }

    /// `N(D)`, the union of open neighborhoods over `set`.
    pub fn open_neighborhood_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut words = vec![0; self.wpr];
        for v in set {
            bitset::or_into(&mut words, self.row(v));
        }
        VertexSet::from_words(self.n, words)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.adj.len());
        let rem = self.n % WORD_BITS;
        for v in 0..self.n {
            let start = adj.len();
            adj.extend(self.row(v).iter().map(|w| !w));
            let row = &mut adj[start..];
            if rem != 0 {
                row[self.wpr - 1] &= (1u64 << rem) - 1;
            }
            bitset::clear(row, v);
        }
        Graph {
            n: self.n,
            wpr: self.wpr,
            adj,
        }
    }

    /// BFS distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Result<Vec<ExtendedNat>> {
        self.check(source)?;
        let mut dist = vec![ExtendedNat::Infinite; self.n];
        let mut visited = vec![0u64; self.wpr];
        let mut frontier = vec![0u64; self.wpr];
        bitset::set(&mut visited, source);
        bitset::set(&mut frontier, source);
        dist[source] = ExtendedNat::Finite(0);
        let mut level = 0;
        loop {
            level += 1;
            let mut next = vec![0u64; self.wpr];
            for v in Ones::new(&frontier) {
                bitset::or_into(&mut next, self.row(v));
            }
            for (x, seen) in next.iter_mut().zip(&visited) {
                *x &= !seen;
            }
            if next.iter().all(|&w| w == 0) {
                break;
            }
            for v in Ones::new(&next) {
                dist[v] = ExtendedNat::Finite(level);
            }
            bitset::or_into(&mut visited, &next);
            frontier = next;
        }
        Ok(dist)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<ExtendedNat> {
        self.check(v)?;
        Ok(self.distances_from(u)?[v])
    }

    /// Largest distance over all pairs; `Infinite` iff disconnected.
    pub fn diameter(&self) -> ExtendedNat {
        let mut best = ExtendedNat::Finite(0);
        for v in 0..self.n {
            let far = self.distances_from(v).expect("vertex in range").into_iter().max();
            if let Some(d) = far {
                best = best.max(d);
            }
            if best == ExtendedNat::Infinite {
                break;
            }
        }
        best
    }

    /// First pair `(u, v)`, `u < v`, in lexicographic order with
    /// `d(u, v) >= min_distance`.
    pub fn pair_at_distance_at_least(&self, min_distance: usize) -> Option<(usize, usize)> {
        (0..self.n).find_map(|u| {
            let dist = self.distances_from(u).expect("vertex in range");
            (u + 1..self.n)
                .find(|&v| dist[v] >= min_distance)
                .map(|v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0)
            .expect("graph is nonempty")
            .iter()
            .all(|d| d.is_finite())
    }

    /// Lowest-index vertex whose closed neighborhood is the whole graph.
    pub fn universal_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) == self.n - 1)
    }

    /// `pr[v, D] = N[v] \ N[D \ {v}]`.
    pub fn private_neighbors(&self, v: usize, set: &VertexSet) -> Result<VertexSet> {
        self.check(v)?;
        if set.universe() != self.n {
            return Err(Error::UniverseMismatch {
                left: set.universe(),
                right: self.n,
            });
        }
        if !set.contains(v) {
            return Err(Error::NotInSet { vertex: v });
        }
        let mut others = set.clone();
        others.remove(v);
        let covered = self.closed_neighborhood_of_set(&others);
        Ok(self.closed_neighborhood(v)?.difference(&covered))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation"));
            }
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
