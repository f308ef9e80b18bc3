//! Lower and upper bounds on `γ(G ⋄ H)` with constructive witnesses.
//!
//! Every upper bound comes with an explicit dominating set of the product
//! that is checked before it is returned. A construction whose set fails the
//! check is reported as [`Error::RuleFailed`] rather than skipped.
//!
//! Per-factor invariants are computed once into a [`FactorProfile`]; the
//! `*_with` variants accept precomputed profiles.

use alloc::vec::Vec;

use crate::domination::{
    dominating_via_index_sets, domination_number, find_ecd_set, is_product_dominating,
    sdctd_number, total_domination_number, SolveResult, INDEX_SET_MAX,
};
use crate::graph::{ExtendedNat, Graph};
use crate::products::ProductVertex;
use crate::{Error, Result, VertexSet};

/// Stable rule identifiers used in reports.
pub mod rule {
    pub const LOBOUND: &str = "lobound";
    pub const COR1: &str = "cor1";
    pub const BASIC_SNAKE: &str = "basic_snake";
    pub const SDCTD: &str = "sdctd";
    pub const UNIV: &str = "univ";
    pub const ECD: &str = "ecd";
    pub const CASE3: &str = "case3";
    pub const DIAM5: &str = "diam5";
    pub const COR13: &str = "cor13";
    pub const DIAM3: &str = "diam3";
    pub const PROP2: &str = "prop2";
    pub const PROP4: &str = "prop4";
    pub const IZROK: &str = "izrok";
    pub const CORNER_REMOVAL: &str = "corner_removal";
}

/// An ordered list of product vertices in which consecutive entries share a
/// coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Snake {
    entries: Vec<ProductVertex>,
}

impl Snake {
    pub fn new(entries: Vec<ProductVertex>) -> Result<Self> {
        if !is_snake(&entries) {
            return Err(Error::InvalidArgument("not a snake"));
        }
        Ok(Snake { entries })
    }

    pub fn entries(&self) -> &[ProductVertex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_entries(self) -> Vec<ProductVertex> {
        self.entries
    }
}

/// Nonempty, and every consecutive pair agrees in at least one coordinate.
pub fn is_snake(entries: &[ProductVertex]) -> bool {
    !entries.is_empty()
        && entries
            .windows(2)
            .all(|w| w[0].g == w[1].g || w[0].h == w[1].h)
}

/// All first coordinates and all second coordinates of `entries`.
pub fn projections(
    entries: &[ProductVertex],
    g_order: usize,
    h_order: usize,
) -> Result<(VertexSet, VertexSet)> {
    let pg = VertexSet::from_vertices(g_order, entries.iter().map(|v| v.g))?;
    let ph = VertexSet::from_vertices(h_order, entries.iter().map(|v| v.h))?;
    Ok((pg, ph))
}

fn has_repeats(list: &[usize]) -> bool {
    list.iter()
        .enumerate()
        .any(|(i, v)| list[..i].contains(v))
}

/// The staircase `(g1,h1), (g2,h1), (g2,h2), (g3,h2), …` of length
/// `|d_g| + |d_h| - 1`, alternately advancing the `G` and `H` coordinate and
/// continuing along the longer list once the shorter one runs out.
pub fn build_snake(d_g: &[usize], d_h: &[usize]) -> Result<Snake> {
    if d_g.is_empty() || d_h.is_empty() {
        return Err(Error::InvalidArgument("staircase needs two nonempty lists"));
    }
    if has_repeats(d_g) || has_repeats(d_h) {
        return Err(Error::InvalidArgument("staircase lists must not repeat vertices"));
    }
    let (mut i, mut j) = (0, 0);
    let mut entries = Vec::with_capacity(d_g.len() + d_h.len() - 1);
    entries.push(ProductVertex::new(d_g[0], d_h[0]));
    let mut advance_g = true;
    while i + 1 < d_g.len() || j + 1 < d_h.len() {
        let g_left = i + 1 < d_g.len();
        let h_left = j + 1 < d_h.len();
        if g_left && (advance_g || !h_left) {
            i += 1;
        } else {
            j += 1;
        }
        advance_g = !advance_g;
        entries.push(ProductVertex::new(d_g[i], d_h[j]));
    }
    Ok(Snake { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CornerKind {
    GCorner,
    HCorner,
    None,
}

/// Corner type of entry `i` (0-based). The halves `D_i^-` (walking back
/// from `i`) and `D_i^+` (walking forward) count as both a `G`-snake and an
/// `H`-snake when they have a single entry. When both kinds apply,
/// `GCorner` is reported.
pub fn corner_kind(snake: &Snake, i: usize) -> Result<CornerKind> {
    let e = snake.entries();
    if i >= e.len() {
        return Err(Error::InvalidArgument("snake index out of range"));
    }
    let back = i.checked_sub(1).map(|p| e[p]);
    let fwd = e.get(i + 1).copied();
    let here = e[i];
    let g_snake = |next: Option<ProductVertex>| next.is_none_or(|n| n.g == here.g);
    let h_snake = |next: Option<ProductVertex>| next.is_none_or(|n| n.h == here.h);
    Ok(if g_snake(back) && h_snake(fwd) {
        CornerKind::GCorner
    } else if h_snake(back) && g_snake(fwd) {
        CornerKind::HCorner
    } else {
        CornerKind::None
    })
}

/// Exact per-factor invariants used by the bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorProfile {
    pub gamma: SolveResult,
    /// `γ_t` of the complement.
    pub total_complement: SolveResult,
    pub sdctd: SolveResult,
    pub diameter: ExtendedNat,
    pub universal: Option<usize>,
    pub ecd: Option<VertexSet>,
}

impl FactorProfile {
    pub fn of(g: &Graph) -> Self {
        FactorProfile {
            gamma: domination_number(g),
            total_complement: total_domination_number(&g.complement()),
            sdctd: sdctd_number(g),
            diameter: g.diameter(),
            universal: g.universal_vertex(),
            ecd: find_ecd_set(g),
        }
    }

    pub fn gamma(&self) -> usize {
        self.gamma.value.finite().expect("γ is always finite")
    }

    fn gamma_set(&self) -> Vec<usize> {
        self.gamma.witness.as_ref().expect("γ-set").to_vec()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LowerBound {
    pub value: usize,
    pub rule: &'static str,
}

/// An upper bound together with a verified dominating set of that size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpperBound {
    pub value: usize,
    pub rule: &'static str,
    pub witness: Vec<ProductVertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundReport {
    pub lower: usize,
    pub lower_rule: &'static str,
    pub upper: ExtendedNat,
    pub upper_rule: &'static str,
    pub upper_witness: Option<Vec<ProductVertex>>,
}

/// Checks that `set` dominates `G ⋄ H`, through index sets when small enough.
pub fn verify_witness(g: &Graph, h: &Graph, set: &[ProductVertex]) -> Result<bool> {
    if set.len() <= INDEX_SET_MAX {
        dominating_via_index_sets(g, h, set)
    } else {
        Ok(is_product_dominating(g, h, set))
    }
}

fn certified(
    g: &Graph,
    h: &Graph,
    rule: &'static str,
    witness: Vec<ProductVertex>,
) -> Result<UpperBound> {
    if !verify_witness(g, h, &witness)? {
        return Err(Error::RuleFailed { rule });
    }
    Ok(UpperBound {
        value: witness.len(),
        rule,
        witness,
    })
}

fn swap_all(witness: Vec<ProductVertex>) -> Vec<ProductVertex> {
    witness.into_iter().map(ProductVertex::swapped).collect()
}

fn mirrored(bound: Option<UpperBound>) -> Option<UpperBound> {
    bound.map(|b| UpperBound {
        witness: swap_all(b.witness),
        ..b
    })
}

fn better(a: Option<UpperBound>, b: Option<UpperBound>) -> Option<UpperBound> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.value < a.value { b } else { a }),
        (a, b) => a.or(b),
    }
}

fn column(set: impl IntoIterator<Item = usize>, h: usize) -> Vec<ProductVertex> {
    set.into_iter().map(|g| ProductVertex::new(g, h)).collect()
}

/// `max(min(γ(G), γ_t(H̄)), min(γ(H), γ_t(Ḡ)))`. Reported as `cor1` when a
/// factor of diameter two already certifies the same value via
/// `min(γ(other), 3)`.
pub fn lower_bound(g: &Graph, h: &Graph) -> LowerBound {
    lower_bound_with(&FactorProfile::of(g), &FactorProfile::of(h))
}

pub fn lower_bound_with(pg: &FactorProfile, ph: &FactorProfile) -> LowerBound {
    let side = |a: &FactorProfile, b: &FactorProfile| {
        ExtendedNat::Finite(a.gamma()).min(b.total_complement.value)
    };
    let value = side(pg, ph)
        .max(side(ph, pg))
        .finite()
        .expect("γ is finite");
    let cor1 = |a: &FactorProfile, b: &FactorProfile| {
        b.diameter == ExtendedNat::Finite(2) && a.gamma().min(3) == value
    };
    let rule = if cor1(pg, ph) || cor1(ph, pg) {
        rule::COR1
    } else {
        rule::LOBOUND
    };
    LowerBound { value, rule }
}

/// Staircases through a `γ(G)`-set and a `γ(H)`-set, and through
/// `γ_t`-sets of the complements when both are finite; the smaller one.
pub fn snake_upper_bound(g: &Graph, h: &Graph) -> Result<UpperBound> {
    snake_upper_bound_with(g, &FactorProfile::of(g), h, &FactorProfile::of(h))
}

pub fn snake_upper_bound_with(
    g: &Graph,
    pg: &FactorProfile,
    h: &Graph,
    ph: &FactorProfile,
) -> Result<UpperBound> {
    let staircase = |dg: &[usize], dh: &[usize]| -> Result<UpperBound> {
        let snake = build_snake(dg, dh)?;
        certified(g, h, rule::BASIC_SNAKE, snake.into_entries())
    };
    let mut best = staircase(&pg.gamma_set(), &ph.gamma_set())?;
    if let (Some(dg), Some(dh)) = (&pg.total_complement.witness, &ph.total_complement.witness) {
        let other = staircase(&dg.to_vec(), &dh.to_vec())?;
        if other.value < best.value {
            best = other;
        }
    }
    Ok(best)
}

fn counts_avoid(g: &Graph, d_g: &[usize], i: usize) -> bool {
    let k = d_g.len();
    (0..g.n()).all(|v| {
        let c = d_g.iter().filter(|&&x| g.in_closed_neighborhood(x, v)).count();
        c != i && c != k - i
    })
}

fn corner_removal_one_side(
    g: &Graph,
    h: &Graph,
    d_g: &[usize],
    d_h: &[usize],
) -> Result<Option<Vec<ProductVertex>>> {
    let snake = build_snake(d_g, d_h)?;
    for i in 1..=d_g.len().min(d_h.len()) {
        let position = 2 * (i - 1);
        if corner_kind(&snake, position)? != CornerKind::GCorner || !counts_avoid(g, d_g, i) {
            continue;
        }
        let mut witness = snake.entries().to_vec();
        witness.remove(position);
        return certified(g, h, rule::CORNER_REMOVAL, witness).map(|b| Some(b.witness));
    }
    Ok(None)
}

/// Drops the corner `(g_i, h_i)` from the staircase through `d_g` and `d_h`
/// when no vertex of `G` has exactly `i` or `k - i` members of `d_g` in its
/// closed neighborhood (or the mirror condition holds for `H`). Only
/// positions that are `G`-corners of the staircase (`H`-corners of the
/// mirrored staircase) are tried.
///
/// `d_g` and `d_h` must both be dominating sets, or both total dominating
/// sets of the complements.
pub fn corner_removal(
    g: &Graph,
    h: &Graph,
    d_g: &[usize],
    d_h: &[usize],
) -> Result<Option<Vec<ProductVertex>>> {
    let sg = VertexSet::from_vertices(g.n(), d_g.iter().copied())?;
    let sh = VertexSet::from_vertices(h.n(), d_h.iter().copied())?;
    let dominating = crate::domination::is_dominating(g, &sg)
        && crate::domination::is_dominating(h, &sh);
    let total = crate::domination::is_total_dominating(&g.complement(), &sg)
        && crate::domination::is_total_dominating(&h.complement(), &sh);
    if !dominating && !total {
        return Err(Error::InvalidArgument(
            "corner removal needs dominating sets or total dominating sets of the complements",
        ));
    }
    if let Some(w) = corner_removal_one_side(g, h, d_g, d_h)? {
        return Ok(Some(w));
    }
    Ok(corner_removal_one_side(h, g, d_h, d_g)?.map(swap_all))
}

fn corner_removal_bound(
    g: &Graph,
    pg: &FactorProfile,
    h: &Graph,
    ph: &FactorProfile,
) -> Result<Option<UpperBound>> {
    let mut pairs = Vec::new();
    pairs.push((pg.gamma_set(), ph.gamma_set()));
    if let (Some(dg), Some(dh)) = (&pg.total_complement.witness, &ph.total_complement.witness) {
        pairs.push((dg.to_vec(), dh.to_vec()));
    }
    let mut best = None;
    for (dg, dh) in pairs {
        if let Some(w) = corner_removal(g, h, &dg, &dh)? {
            best = better(best, Some(certified(g, h, rule::CORNER_REMOVAL, w)?));
        }
    }
    Ok(best)
}

/// `D × {h}` for a `γ̄(G)`-set `D`, or the mirror; `None` when both SDCTD
/// numbers are infinite.
pub fn sdctd_upper_bound(g: &Graph, h: &Graph) -> Result<Option<UpperBound>> {
    sdctd_upper_bound_with(g, &FactorProfile::of(g), h, &FactorProfile::of(h))
}

pub fn sdctd_upper_bound_with(
    g: &Graph,
    pg: &FactorProfile,
    h: &Graph,
    ph: &FactorProfile,
) -> Result<Option<UpperBound>> {
    let direct = sdctd_one_side(g, pg, h)?;
    let mirror = mirrored(sdctd_one_side(h, ph, g)?);
    Ok(better(direct, mirror))
}

fn sdctd_one_side(g: &Graph, pg: &FactorProfile, h: &Graph) -> Result<Option<UpperBound>> {
    pg.sdctd
        .witness
        .as_ref()
        .map(|d| certified(g, h, rule::SDCTD, column(d.iter(), 0)))
        .transpose()
}

/// `{(g1,h1), (g1,h2), (g2,h1)}`, which has the same closed neighborhood in
/// `G ⋄ H` as the full rectangle on `{g1,g2} × {h1,h2}`.
pub fn reduce_rectangle(g1: usize, g2: usize, h1: usize, h2: usize) -> Result<[ProductVertex; 3]> {
    if g1 == g2 || h1 == h2 {
        return Err(Error::InvalidArgument("rectangle corners must differ"));
    }
    Ok([
        ProductVertex::new(g1, h1),
        ProductVertex::new(g1, h2),
        ProductVertex::new(g2, h1),
    ])
}

/// A dominating 3-set when both factors have diameter at least three.
pub fn diam3_construction(g: &Graph, h: &Graph) -> Result<Option<Vec<ProductVertex>>> {
    let (Some((g1, g2)), Some((h1, h2))) =
        (g.pair_at_distance_at_least(3), h.pair_at_distance_at_least(3))
    else {
        return Ok(None);
    };
    let set = reduce_rectangle(g1, g2, h1, h2)?.to_vec();
    certified(g, h, rule::DIAM3, set).map(|b| Some(b.witness))
}

/// First edge `ab` (lexicographic) whose endpoints have disjoint open
/// neighborhoods that together miss some vertex `c`; returns `(a, b, c)`
/// with the smallest such `c`.
pub fn open_split_edge(g: &Graph) -> Option<(usize, usize, usize)> {
    g.edges().find_map(|(a, b)| {
        let na = g.open_neighborhood(a).expect("vertex in range");
        let nb = g.open_neighborhood(b).expect("vertex in range");
        if !na.is_disjoint(&nb) {
            return None;
        }
        na.union(&nb).complement().iter().next().map(|c| (a, b, c))
    })
}

fn prop4_one_side(g: &Graph, h: &Graph) -> Result<Option<Vec<ProductVertex>>> {
    let Some((g1, g2)) = g.pair_at_distance_at_least(3) else {
        return Ok(None);
    };
    let Some((h1, h2, h3)) = open_split_edge(h) else {
        return Ok(None);
    };
    let mut set = reduce_rectangle(g1, g2, h1, h2)?.to_vec();
    set.push(ProductVertex::new(g1, h3));
    certified(g, h, rule::PROP4, set).map(|b| Some(b.witness))
}

/// A dominating 4-set when `diam(G) ≥ 3` and `H` has an edge `h1h2` with
/// `N(h1) ∩ N(h2) = ∅` and `N(h1) ∪ N(h2) ≠ V(H)`; the mirror is tried too.
pub fn prop4_construction(g: &Graph, h: &Graph) -> Result<Option<Vec<ProductVertex>>> {
    if let Some(w) = prop4_one_side(g, h)? {
        return Ok(Some(w));
    }
    Ok(prop4_one_side(h, g)?.map(swap_all))
}

/// A dominating 5-set when both factors have an edge whose endpoints have
/// disjoint open neighborhoods not covering the vertex set.
pub fn izrok_construction(g: &Graph, h: &Graph) -> Result<Option<Vec<ProductVertex>>> {
    let (Some((g1, g2, g3)), Some((h1, h2, h3))) = (open_split_edge(g), open_split_edge(h)) else {
        return Ok(None);
    };
    let mut set = reduce_rectangle(g1, g2, h1, h2)?.to_vec();
    set.push(ProductVertex::new(g2, h3));
    set.push(ProductVertex::new(g3, h1));
    certified(g, h, rule::IZROK, set).map(|b| Some(b.witness))
}

/// Rules that only look at `G` and place a column `D × {h}`.
fn one_sided_rules(
    g: &Graph,
    pg: &FactorProfile,
    h: &Graph,
    ph: &FactorProfile,
) -> Result<Vec<UpperBound>> {
    let mut out = Vec::new();
    if let Some(u) = ph.universal {
        out.push(certified(g, h, rule::UNIV, column(pg.gamma_set(), u))?);
    }
    if let Some(ecd) = pg.ecd.as_ref().filter(|d| d.len() >= 2) {
        out.push(certified(g, h, rule::ECD, column(ecd.iter(), 0))?);
    }
    if pg.diameter >= ExtendedNat::Finite(5) {
        out.push(certified(g, h, rule::DIAM5, column(pg.gamma_set(), 0))?);
    }
    let d = pg.gamma_set();
    let far_pair = d.iter().any(|&a| {
        d.iter()
            .any(|&b| g.distance(a, b).expect("vertex in range") >= ExtendedNat::Finite(3))
    });
    if far_pair {
        out.push(certified(g, h, rule::CASE3, column(d.iter().copied(), 0))?);
    }
    if let Some(b) = sdctd_one_side(g, pg, h)? {
        out.push(b);
    }
    if let Some((a, b)) = g.pair_at_distance_at_least(3) {
        let mut set = pg.gamma.witness.clone().expect("γ-set");
        set.insert_unchecked(a);
        set.insert_unchecked(b);
        out.push(certified(g, h, rule::COR13, column(set.iter(), 0))?);
    }
    Ok(out)
}

/// The smallest verified upper bound over every applicable rule in both
/// orientations, together with [`lower_bound`]. Ties go to the rule listed
/// first: `univ`, `ecd`, `diam5`, `case3`, `sdctd`, `cor13`, `diam3`,
/// `prop2`, `prop4`, `izrok`, `corner_removal`, `basic_snake`.
pub fn best_upper_bound(g: &Graph, h: &Graph) -> Result<BoundReport> {
    best_upper_bound_with(g, &FactorProfile::of(g), h, &FactorProfile::of(h))
}

pub fn best_upper_bound_with(
    g: &Graph,
    pg: &FactorProfile,
    h: &Graph,
    ph: &FactorProfile,
) -> Result<BoundReport> {
    let mut candidates = one_sided_rules(g, pg, h, ph)?;
    candidates.extend(
        one_sided_rules(h, ph, g, pg)?
            .into_iter()
            .map(|b| mirrored(Some(b)).expect("present")),
    );
    let order = [
        rule::UNIV,
        rule::ECD,
        rule::DIAM5,
        rule::CASE3,
        rule::SDCTD,
        rule::COR13,
    ];
    candidates.sort_by_key(|b| order.iter().position(|r| *r == b.rule));
    if let Some(w) = diam3_construction(g, h)? {
        candidates.push(certified(g, h, rule::DIAM3, w)?);
    }
    if pg.gamma() == 2 && ph.gamma() == 2 {
        let (dg, dh) = (pg.gamma_set(), ph.gamma_set());
        let set = reduce_rectangle(dg[0], dg[1], dh[0], dh[1])?.to_vec();
        candidates.push(certified(g, h, rule::PROP2, set)?);
    }
    if let Some(w) = prop4_construction(g, h)? {
        candidates.push(certified(g, h, rule::PROP4, w)?);
    }
    if let Some(w) = izrok_construction(g, h)? {
        candidates.push(certified(g, h, rule::IZROK, w)?);
    }
    if let Some(b) = corner_removal_bound(g, pg, h, ph)? {
        candidates.push(b);
    }
    candidates.push(snake_upper_bound_with(g, pg, h, ph)?);
    let best = candidates
        .into_iter()
        .reduce(|a, b| if b.value < a.value { b } else { a })
        .expect("the staircase bound always applies");
    let lower = lower_bound_with(pg, ph);
    Ok(BoundReport {
        lower: lower.value,
        lower_rule: lower.rule,
        upper: ExtendedNat::Finite(best.value),
        upper_rule: best.rule,
        upper_witness: Some(best.witness),
    })
}
