//! Exact solvers and verifiers for domination-type invariants.
//!
//! `γ`, `γ_t` and the SDCTD number `γ̄` are all minimum covers and share the
//! branch-and-bound search in `cover`. The SDCTD cover has two element
//! families: vertex `v` must lie in `N_G[D]` and in `N_Ḡ(D)`, the two
//! constraint rows of the integer program `min Σ x_v` subject to
//! `Σ_{w ∈ N_G[v]} x_w ≥ 1` and `Σ_{w ∈ N_Ḡ(v)} x_w ≥ 1`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{self, words_for, Ones, VertexSet};
use crate::cover::{CoverOutcome, CoverProblem};
use crate::graph::{ExtendedNat, Graph};
use crate::products::{dominates, product_order, ProductVertex};
use crate::{Error, Result};

/// Result of an exact single-graph solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub value: ExtendedNat,
    /// Present iff `value` is finite; `|witness| == value`.
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
}

impl SolveResult {
    /// The finite value, or `None` for infinity.
    pub fn finite(&self) -> Option<usize> {
        self.value.finite()
    }
}

/// Value of a budgeted product solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveValue {
    Exact(usize),
    /// No dominating set of size at most the budget exists.
    AboveBudget(usize),
}

impl SolveValue {
    pub fn exact(self) -> Option<usize> {
        match self {
            SolveValue::Exact(v) => Some(v),
            SolveValue::AboveBudget(_) => None,
        }
    }

    /// The value capped at `cap`, with `AboveBudget(b)` for `b >= cap - 1`
    /// read as `cap`. `None` when the budget is too small to decide.
    pub fn truncated(self, cap: usize) -> Option<usize> {
        match self {
            SolveValue::Exact(v) => Some(v.min(cap)),
            SolveValue::AboveBudget(b) if b + 1 >= cap => Some(cap),
            SolveValue::AboveBudget(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSolveResult {
    pub value: SolveValue,
    /// A minimum dominating set of `G ⋄ H`, ascending; absent for budget
    /// results.
    pub witness: Option<Vec<ProductVertex>>,
    pub nodes_explored: u64,
}

fn same_universe(g: &Graph, set: &VertexSet) -> bool {
    set.universe() == g.n()
}

/// `N[D] = V(G)`.
pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    same_universe(g, set) && g.closed_neighborhood_of_set(set).is_full()
}

/// `N(D) = V(G)`.
pub fn is_total_dominating(g: &Graph, set: &VertexSet) -> bool {
    same_universe(g, set) && g.open_neighborhood_of_set(set).is_full()
}

/// Dominates `G` and totally dominates `Ḡ`.
pub fn is_sdctd(g: &Graph, set: &VertexSet) -> bool {
    is_dominating(g, set) && is_total_dominating(&g.complement(), set)
}

fn solve_graph_cover(n: usize, universe: usize, rows: Vec<u64>) -> SolveResult {
    let result = CoverProblem::new(universe, n, rows).solve(None);
    match result.outcome {
        CoverOutcome::Optimal(chosen) => SolveResult {
            value: ExtendedNat::Finite(chosen.len()),
            witness: Some(VertexSet::from_vertices(n, chosen).expect("candidates are vertices")),
            nodes_explored: result.nodes,
        },
        CoverOutcome::Infeasible => SolveResult {
            value: ExtendedNat::Infinite,
            witness: None,
            nodes_explored: result.nodes,
        },
        CoverOutcome::AboveBudget(_) => unreachable!("unbudgeted solve"),
    }
}

/// `γ(G)`, exact.
pub fn domination_number(g: &Graph) -> SolveResult {
    solve_graph_cover(g.n(), g.n(), g.closed_rows())
}

/// `γ_t(G)`, exact; infinite iff `G` has an isolated vertex.
pub fn total_domination_number(g: &Graph) -> SolveResult {
    let rows = (0..g.n()).flat_map(|v| g.row(v).iter().copied()).collect();
    solve_graph_cover(g.n(), g.n(), rows)
}

/// `γ̄(G)`: smallest set dominating `G` and totally dominating `Ḡ`;
/// infinite iff `G` has a universal vertex.
pub fn sdctd_number(g: &Graph) -> SolveResult {
    let n = g.n();
    let universe = 2 * n;
    let w = words_for(universe);
    let co = g.complement();
    let mut rows = vec![0u64; n * w];
    for c in 0..n {
        let row = &mut rows[c * w..(c + 1) * w];
        bitset::set(row, c);
        for v in g.neighbors(c) {
            bitset::set(row, v);
        }
        for v in co.neighbors(c) {
            bitset::set(row, n + v);
        }
    }
    solve_graph_cover(n, universe, rows)
}

/// `ρ(G)`: the most vertices with pairwise disjoint closed neighborhoods,
/// i.e. a maximum independent set of the "distance at most two" graph.
pub fn packing_number(g: &Graph) -> SolveResult {
    let n = g.n();
    let w = g.words_per_row();
    let closed = g.closed_rows();
    let mut conflicts = vec![0u64; n * w];
    for v in 0..n {
        let row = &mut conflicts[v * w..(v + 1) * w];
        for u in Ones::new(&closed[v * w..(v + 1) * w]) {
            bitset::or_into(row, &closed[u * w..(u + 1) * w]);
        }
    }
    let mut all = vec![0u64; w];
    for v in 0..n {
        bitset::set(&mut all, v);
    }
    let mut best = Vec::new();
    let mut chosen = Vec::new();
    let mut nodes = 0;
    max_packing(&conflicts, w, &all, &mut chosen, &mut best, &mut nodes);
    SolveResult {
        value: ExtendedNat::Finite(best.len()),
        witness: Some(VertexSet::from_vertices(n, best).expect("vertices in range")),
        nodes_explored: nodes,
    }
}

fn max_packing(
    conflicts: &[u64],
    w: usize,
    open: &[u64],
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    nodes: &mut u64,
) {
    *nodes += 1;
    let Some(v) = Ones::new(open).next() else {
        if chosen.len() > best.len() {
            best.clone_from(chosen);
        }
        return;
    };
    if chosen.len() + bitset::count(open) <= best.len() {
        return;
    }
    let with: Vec<u64> = open
        .iter()
        .zip(&conflicts[v * w..(v + 1) * w])
        .map(|(o, c)| o & !c)
        .collect();
    chosen.push(v);
    max_packing(conflicts, w, &with, chosen, best, nodes);
    chosen.pop();
    let mut without = open.to_vec();
    bitset::clear(&mut without, v);
    max_packing(conflicts, w, &without, chosen, best, nodes);
}

/// Some set whose closed neighborhoods partition `V(G)`.
pub fn find_ecd_set(g: &Graph) -> Option<VertexSet> {
    ecd_search(g, None)
}

/// Like [`find_ecd_set`], restricted to sets of exactly `size` vertices.
pub fn find_ecd_set_of_size(g: &Graph, size: usize) -> Option<VertexSet> {
    ecd_search(g, Some(size))
}

fn ecd_search(g: &Graph, size: Option<usize>) -> Option<VertexSet> {
    let w = g.words_per_row();
    let closed = g.closed_rows();
    let mut covered = vec![0u64; w];
    let mut chosen = Vec::new();
    if exact_cover(g.n(), &closed, w, &mut covered, &mut chosen, size) {
        Some(VertexSet::from_vertices(g.n(), chosen).expect("vertices in range"))
    } else {
        None
    }
}

fn exact_cover(
    n: usize,
    closed: &[u64],
    w: usize,
    covered: &mut Vec<u64>,
    chosen: &mut Vec<usize>,
    size: Option<usize>,
) -> bool {
    let row = |v: usize| &closed[v * w..(v + 1) * w];
    let uncovered = (0..n).filter(|&v| !bitset::get(covered, v));
    let mut pivot = None;
    let mut fewest = usize::MAX;
    for e in uncovered {
        // vertices whose closed neighborhood contains e and avoids covered
        let options = Ones::new(row(e))
            .filter(|&v| !bitset::intersects(row(v), covered))
            .count();
        if options < fewest {
            fewest = options;
            pivot = Some(e);
        }
    }
    let Some(pivot) = pivot else {
        return size.is_none_or(|s| chosen.len() == s);
    };
    if fewest == 0 || size.is_some_and(|s| chosen.len() >= s) {
        return false;
    }
    let options: Vec<usize> = Ones::new(row(pivot))
        .filter(|&v| !bitset::intersects(row(v), covered))
        .collect();
    for v in options {
        bitset::or_into(covered, row(v));
        chosen.push(v);
        if exact_cover(n, closed, w, covered, chosen, size) {
            return true;
        }
        chosen.pop();
        for (c, r) in covered.iter_mut().zip(row(v)) {
            *c &= !r;
        }
    }
    false
}

/// Closed-neighborhood rows of `G ⋄ H` in flat indexing, computed with
/// [`dominates`] from the factors.
fn product_rows(g: &Graph, h: &Graph) -> Result<(usize, Vec<u64>)> {
    let n = product_order(g, h)?;
    let w = words_for(n);
    let m = h.n();
    let mut rows = vec![0u64; n * w];
    for a in 0..n {
        let da = ProductVertex::from_flat(a, m);
        let row = &mut rows[a * w..(a + 1) * w];
        for b in 0..n {
            if dominates(g, h, da, ProductVertex::from_flat(b, m)) {
                bitset::set(row, b);
            }
        }
    }
    Ok((n, rows))
}

/// `γ(G ⋄ H)` without building the product graph. With a budget, stops as
/// soon as no dominating set of size at most `budget` can exist.
pub fn product_domination_number(
    g: &Graph,
    h: &Graph,
    budget: Option<usize>,
) -> Result<ProductSolveResult> {
    let (n, rows) = product_rows(g, h)?;
    let result = CoverProblem::new(n, n, rows).solve(budget);
    let m = h.n();
    Ok(match result.outcome {
        CoverOutcome::Optimal(chosen) => ProductSolveResult {
            value: SolveValue::Exact(chosen.len()),
            witness: Some(chosen.into_iter().map(|c| ProductVertex::from_flat(c, m)).collect()),
            nodes_explored: result.nodes,
        },
        CoverOutcome::AboveBudget(b) => ProductSolveResult {
            value: SolveValue::AboveBudget(b),
            witness: None,
            nodes_explored: result.nodes,
        },
        CoverOutcome::Infeasible => unreachable!("every product vertex dominates itself"),
    })
}

fn check_product_vertices(g: &Graph, h: &Graph, set: &[ProductVertex]) -> Result<()> {
    for v in set {
        if v.g >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v.g, n: g.n() });
        }
        if v.h >= h.n() {
            return Err(Error::VertexOutOfRange { vertex: v.h, n: h.n() });
        }
    }
    Ok(())
}

/// Direct check that `set` dominates `G ⋄ H`, through [`dominates`].
pub fn is_product_dominating(g: &Graph, h: &Graph, set: &[ProductVertex]) -> bool {
    (0..g.n()).all(|x| {
        (0..h.n()).all(|y| {
            let target = ProductVertex::new(x, y);
            set.iter().any(|&d| dominates(g, h, d, target))
        })
    })
}

/// Largest set accepted by [`dominating_via_index_sets`].
pub const INDEX_SET_MAX: usize = 20;

/// Decides whether `D = {(g_1,h_1), …, (g_k,h_k)}` dominates `G ⋄ H` through
/// index sets: `D` fails exactly when some vertex `g` meets the
/// `G`-coordinates in an index set `I` (`g_i ∈ N[g]` iff `i ∈ I`) while some
/// vertex `h` meets the `H`-coordinates in exactly `[k] \ I`.
///
/// Index sets are taken per position, so repeated coordinates (as in snakes)
/// are handled exactly; with pairwise distinct coordinates this is the same
/// as comparing `N[g] ∩ proj_G(D)` with `{g_i : i ∈ I}`.
pub fn dominating_via_index_sets(g: &Graph, h: &Graph, set: &[ProductVertex]) -> Result<bool> {
    let k = set.len();
    if k > INDEX_SET_MAX {
        return Err(Error::TooLarge {
            n: k,
            max: INDEX_SET_MAX,
        });
    }
    check_product_vertices(g, h, set)?;
    let full: u32 = (1u32 << k) - 1;
    let g_sets: BTreeSet<u32> = (0..g.n())
        .map(|x| index_set(set.iter().map(|d| g.in_closed_neighborhood(d.g, x))))
        .collect();
    let blocked = (0..h.n())
        .map(|y| index_set(set.iter().map(|d| h.in_closed_neighborhood(d.h, y))))
        .any(|h_set| g_sets.contains(&(full & !h_set)));
    Ok(!blocked)
}

fn index_set(members: impl Iterator<Item = bool>) -> u32 {
    members
        .enumerate()
        .fold(0, |acc, (i, m)| acc | (m as u32) << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn fam(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn verifiers() {
        let p4 = fam(Family::Path(4));
        assert!(is_dominating(&p4, &set(4, &[0, 3])));
        assert!(!is_dominating(&p4, &set(4, &[0])));
        assert!(is_dominating(&p4, &VertexSet::full(4)));
        let c4 = fam(Family::Cycle(4));
        assert!(is_total_dominating(&c4, &set(4, &[0, 1])));
        assert!(!is_total_dominating(&p4, &set(4, &[0, 3])));
        let isolated = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!is_total_dominating(&isolated, &VertexSet::full(3)));
    }

    #[test]
    fn domination_numbers() {
        let p = fam(Family::Petersen);
        let r = domination_number(&p);
        assert_eq!(r.value, 3);
        assert!(is_dominating(&p, r.witness.as_ref().unwrap()));
        assert_eq!(domination_number(&fam(Family::Complete(6))).value, 1);
        let p4 = domination_number(&fam(Family::Path(4)));
        assert_eq!(p4.value, 2);
        assert_eq!(domination_number(&Graph::empty(1).unwrap()).value, 1);
    }

    #[test]
    fn total_domination_numbers() {
        let p4c = fam(Family::Path(4)).complement();
        assert_eq!(total_domination_number(&p4c).value, 2);
        assert_eq!(
            total_domination_number(&Graph::empty(1).unwrap()).value,
            ExtendedNat::Infinite
        );
        let pc = fam(Family::Petersen).complement();
        let r = total_domination_number(&pc);
        assert_eq!(r.value, 3);
        assert!(is_total_dominating(&pc, r.witness.as_ref().unwrap()));
    }

    #[test]
    fn packing_numbers() {
        let r = packing_number(&fam(Family::Path(4)));
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.unwrap().to_vec(), [0, 3]);
        assert_eq!(packing_number(&fam(Family::Complete(5))).value, 1);
        assert_eq!(packing_number(&fam(Family::Petersen)).value, 1);
        assert_eq!(packing_number(&fam(Family::Path(9))).value, 3);
        assert_eq!(packing_number(&Graph::empty(1).unwrap()).value, 1);
    }

    #[test]
    fn ecd_sets() {
        assert_eq!(find_ecd_set(&fam(Family::Cycle(6))).unwrap().to_vec(), [0, 3]);
        assert_eq!(find_ecd_set(&fam(Family::Petersen)), None);
        assert_eq!(find_ecd_set(&fam(Family::Path(4))).unwrap().to_vec(), [0, 3]);
        assert!(find_ecd_set_of_size(&fam(Family::Path(4)), 2).is_some());
        assert!(find_ecd_set_of_size(&fam(Family::Path(4)), 3).is_none());
        assert_eq!(find_ecd_set_of_size(&fam(Family::Cycle(4)), 2), None);
    }

    #[test]
    fn sdctd() {
        let p4 = fam(Family::Path(4));
        assert!(is_sdctd(&p4, &set(4, &[0, 3])));
        let star = fam(Family::Star(3));
        assert!(!is_sdctd(&star, &VertexSet::full(4)));
        assert_eq!(sdctd_number(&star).value, ExtendedNat::Infinite);
        assert_eq!(sdctd_number(&fam(Family::Petersen)).value, 4);
        // The complement of C4 is a perfect matching, so every vertex is needed.
        assert_eq!(sdctd_number(&fam(Family::Cycle(4))).value, 4);
        assert_eq!(sdctd_number(&fam(Family::Cycle(5))).value, 3);
        assert_eq!(sdctd_number(&fam(Family::Cycle(6))).value, 2);
        assert_eq!(sdctd_number(&Graph::empty(1).unwrap()).value, ExtendedNat::Infinite);
        let r = sdctd_number(&fam(Family::Cycle(9)));
        assert!(is_sdctd(&fam(Family::Cycle(9)), r.witness.as_ref().unwrap()));
    }

    #[test]
    fn petersen_reference_sets() {
        // x_{i+1} is outer vertex i and y_{i+1} is inner vertex 5 + i.
        let p = fam(Family::Petersen);
        assert!(is_sdctd(&p, &set(10, &[1, 5, 9, 3])));
        let d = [
            ProductVertex::new(0, 9),
            ProductVertex::new(3, 5),
            ProductVertex::new(9, 2),
        ];
        assert!(is_product_dominating(&p, &p, &d));
        assert!(dominating_via_index_sets(&p, &p, &d).unwrap());
    }

    #[test]
    fn product_domination() {
        let p = fam(Family::Petersen);
        let r = product_domination_number(&p, &p, None).unwrap();
        assert_eq!(r.value, SolveValue::Exact(3));
        assert!(is_product_dominating(&p, &p, r.witness.as_ref().unwrap()));
        let k3 = fam(Family::Complete(3));
        assert_eq!(product_domination_number(&k3, &k3, None).unwrap().value, SolveValue::Exact(1));
        let p4 = fam(Family::Path(4));
        assert_eq!(product_domination_number(&p4, &p4, None).unwrap().value, SolveValue::Exact(2));
        let budgeted = product_domination_number(&p, &p, Some(2)).unwrap();
        assert_eq!(budgeted.value, SolveValue::AboveBudget(2));
        assert_eq!(budgeted.witness, None);
        let big = fam(Family::Path(65));
        assert!(product_domination_number(&big, &big, None).is_err());
    }

    #[test]
    fn index_set_oracle_examples() {
        let k3 = fam(Family::Complete(3));
        let star = fam(Family::Star(2));
        let single = [ProductVertex::new(0, 0)];
        assert!(dominating_via_index_sets(&k3, &star, &single).unwrap());
        let p3 = fam(Family::Path(3));
        let centre = [ProductVertex::new(1, 1)];
        assert!(dominating_via_index_sets(&p3, &p3, &centre).unwrap());
        let end = [ProductVertex::new(0, 0)];
        assert!(!dominating_via_index_sets(&p3, &p3, &end).unwrap());
        assert!(!dominates(&p3, &p3, end[0], ProductVertex::new(0, 2)));
        let too_many: Vec<_> = (0..21).map(|i| ProductVertex::new(i % 3, 0)).collect();
        assert!(dominating_via_index_sets(&p3, &p3, &too_many).is_err());
        assert!(dominating_via_index_sets(&p3, &p3, &[ProductVertex::new(3, 0)]).is_err());
    }

    #[test]
    fn index_sets_follow_positions_for_repeated_coordinates() {
        // A staircase through γ-sets {0,3} of P4 in both factors dominates.
        let p4 = fam(Family::Path(4));
        let snake = [
            ProductVertex::new(0, 0),
            ProductVertex::new(3, 0),
            ProductVertex::new(3, 3),
        ];
        assert!(is_product_dominating(&p4, &p4, &snake));
        assert!(dominating_via_index_sets(&p4, &p4, &snake).unwrap());
    }

    #[test]
    fn truncation() {
        assert_eq!(SolveValue::Exact(6).truncated(4), Some(4));
        assert_eq!(SolveValue::AboveBudget(3).truncated(4), Some(4));
        assert_eq!(SolveValue::AboveBudget(2).truncated(4), None);
    }
}
