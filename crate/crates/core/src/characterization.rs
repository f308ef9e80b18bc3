//! Deciding `γ(G ⋄ H) ∈ {1, 2, 3}` from the factors.
//!
//! * `γ = 1` iff both factors have a universal vertex.
//! * `γ = 2` iff `γ(G) + γ(H) = 3`, or a factor has an ECD set of size 2.
//! * Otherwise `γ ≥ 3`, and `γ = 3` iff one of
//!   (i) `γ(G) + γ(H) = 4`, (ii) `γ̄(G) = 3` or `γ̄(H) = 3`,
//!   (iii) both diameters are at least 3, or
//!   (iv) there are triples `D_G`, `D_H` with
//!   `a_G(I, D_G) + a_H(I^c, D_H) ≤ 1` for every `I ⊆ [3]`.
//!
//! Index subsets are stored 0-based: member `i` stands for position `i + 1`.

use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{diam3_construction, reduce_rectangle, verify_witness};
use crate::domination::{
    domination_number, find_ecd_set_of_size, product_domination_number, sdctd_number,
};
use crate::graph::{ExtendedNat, Graph};
use crate::products::{product_order, ProductVertex};
use crate::{Error, Result, VertexSet};

/// Largest index universe supported by [`IndexSubset`].
pub const INDEX_SUBSET_MAX: usize = 16;

/// Products up to this order get a brute-force cross-check in [`classify`].
pub const CROSS_CHECK_MAX_ORDER: usize = 400;

/// A subset of `{0, …, q-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset {
    q: usize,
    mask: u32,
}

impl IndexSubset {
    pub fn new<I: IntoIterator<Item = usize>>(q: usize, members: I) -> Result<Self> {
        if q > INDEX_SUBSET_MAX {
            return Err(Error::TooLarge {
                n: q,
                max: INDEX_SUBSET_MAX,
            });
        }
        let mut mask = 0;
        for i in members {
            if i >= q {
                return Err(Error::VertexOutOfRange { vertex: i, n: q });
            }
            mask |= 1 << i;
        }
        Ok(IndexSubset { q, mask })
    }

    pub fn from_mask(q: usize, mask: u32) -> Result<Self> {
        if q > INDEX_SUBSET_MAX {
            return Err(Error::TooLarge {
                n: q,
                max: INDEX_SUBSET_MAX,
            });
        }
        if mask >> q != 0 {
            return Err(Error::InvalidArgument("index mask exceeds the universe"));
        }
        Ok(IndexSubset { q, mask })
    }

    /// All `2^q` subsets in mask order.
    pub fn all(q: usize) -> Result<impl Iterator<Item = IndexSubset>> {
        IndexSubset::from_mask(q, 0)?;
        Ok((0..1u32 << q).map(move |mask| IndexSubset { q, mask }))
    }

    pub fn universe(&self) -> usize {
        self.q
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.q && self.mask >> i & 1 == 1
    }

    pub fn complement(&self) -> IndexSubset {
        IndexSubset {
            q: self.q,
            mask: !self.mask & ((1 << self.q) - 1),
        }
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.q).filter(|&i| self.contains(i))
    }
}

fn trace_mask(g: &Graph, d: &[usize], v: usize) -> u32 {
    d.iter()
        .enumerate()
        .fold(0, |acc, (i, &x)| acc | (g.in_closed_neighborhood(x, v) as u32) << i)
}

fn check_ordered_set(g: &Graph, d: &[usize], i: &IndexSubset) -> Result<()> {
    if d.len() != i.universe() {
        return Err(Error::InvalidArgument("index subset universe must match |D|"));
    }
    for (k, &x) in d.iter().enumerate() {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
        }
        if d[..k].contains(&x) {
            return Err(Error::InvalidArgument("D must consist of distinct vertices"));
        }
    }
    Ok(())
}

/// `A_G(I, D)`: vertices whose closed neighborhood meets `D` in exactly
/// `{d_i : i ∈ I}`.
#[allow(non_snake_case)]
pub fn A_set(g: &Graph, d: &[usize], i: IndexSubset) -> Result<VertexSet> {
    check_ordered_set(g, d, &i)?;
    VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| trace_mask(g, d, v) == i.mask()))
}

/// `a_G(I, D)`: whether `A_G(I, D)` is nonempty.
pub fn a_indicator(g: &Graph, d: &[usize], i: IndexSubset) -> Result<bool> {
    check_ordered_set(g, d, &i)?;
    Ok((0..g.n()).any(|v| trace_mask(g, d, v) == i.mask()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Klass {
    Eq1,
    Eq2,
    Eq3,
    Ge4,
}

impl Klass {
    /// `γ(G ⋄ H)` truncated at 4.
    pub fn truncated_value(self) -> usize {
        match self {
            Klass::Eq1 => 1,
            Klass::Eq2 => 2,
            Klass::Eq3 => 3,
            Klass::Ge4 => 4,
        }
    }

    pub fn from_truncated(value: usize) -> Klass {
        match value {
            0 | 1 => Klass::Eq1,
            2 => Klass::Eq2,
            3 => Klass::Eq3,
            _ => Klass::Ge4,
        }
    }
}

impl fmt::Display for Klass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Klass::Eq1 => "EQ1",
            Klass::Eq2 => "EQ2",
            Klass::Eq3 => "EQ3",
            Klass::Ge4 => "GE4",
        })
    }
}

/// Clause identifiers.
pub mod clause {
    pub const ONE: &str = "one";
    pub const TWO_I: &str = "two(i)";
    pub const TWO_II: &str = "two(ii)";
    pub const DOM3_I: &str = "dom3(i)";
    pub const DOM3_II: &str = "dom3(ii)";
    pub const DOM3_III: &str = "dom3(iii)";
    pub const DOM3_IV: &str = "dom3(iv)";
    /// No clause up to three holds.
    pub const NONE: &str = "none";
}

/// A satisfied clause together with a dominating set of the product of the
/// matching size.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClauseHit {
    pub clause: &'static str,
    pub witness: Vec<ProductVertex>,
    /// The triples `(D_G, D_H)` for `dom3(iv)`.
    pub triples: Option<([usize; 3], [usize; 3])>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterizationVerdict {
    pub klass: Klass,
    pub condition: &'static str,
    pub witness: Option<Vec<ProductVertex>>,
    pub triples: Option<([usize; 3], [usize; 3])>,
    /// Brute-force `γ(G ⋄ H)` truncated at 4, when the product is small
    /// enough.
    pub cross_check: Option<usize>,
}

impl CharacterizationVerdict {
    /// `false` only when a cross-check ran and disagrees.
    pub fn consistent(&self) -> bool {
        self.cross_check
            .is_none_or(|v| v == self.klass.truncated_value())
    }
}

/// Factor data the decision procedures need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorFacts {
    pub gamma: usize,
    pub gamma_set: Vec<usize>,
    pub universal: Option<usize>,
    pub ecd2: Option<VertexSet>,
    pub sdctd: ExtendedNat,
    pub sdctd_set: Option<VertexSet>,
    pub diameter: ExtendedNat,
}

impl FactorFacts {
    pub fn of(g: &Graph) -> Self {
        let gamma = domination_number(g);
        let sdctd = sdctd_number(g);
        FactorFacts {
            gamma: gamma.value.finite().expect("γ is finite"),
            gamma_set: gamma.witness.expect("γ-set").to_vec(),
            universal: g.universal_vertex(),
            ecd2: find_ecd_set_of_size(g, 2),
            sdctd: sdctd.value,
            sdctd_set: sdctd.witness,
            diameter: g.diameter(),
        }
    }
}

fn column(set: impl IntoIterator<Item = usize>, h: usize) -> Vec<ProductVertex> {
    set.into_iter().map(|g| ProductVertex::new(g, h)).collect()
}

fn swap_all(set: Vec<ProductVertex>) -> Vec<ProductVertex> {
    set.into_iter().map(ProductVertex::swapped).collect()
}

fn checked(g: &Graph, h: &Graph, clause: &'static str, witness: Vec<ProductVertex>) -> Result<ClauseHit> {
    if !verify_witness(g, h, &witness)? {
        return Err(Error::RuleFailed { rule: clause });
    }
    Ok(ClauseHit {
        clause,
        witness,
        triples: None,
    })
}

/// `γ(G ⋄ H) = 1`.
pub fn equals_one(g: &Graph, h: &Graph) -> bool {
    g.universal_vertex().is_some() && h.universal_vertex().is_some()
}

/// The clause showing `γ(G ⋄ H) = 2`, if any. `None` when `γ(G ⋄ H) = 1`.
pub fn equals_two(g: &Graph, h: &Graph) -> Option<&'static str> {
    equals_two_with(&FactorFacts::of(g), &FactorFacts::of(h))
}

pub fn equals_two_with(fg: &FactorFacts, fh: &FactorFacts) -> Option<&'static str> {
    if fg.universal.is_some() && fh.universal.is_some() {
        None
    } else if fg.gamma + fh.gamma == 3 {
        Some(clause::TWO_I)
    } else if fg.ecd2.is_some() || fh.ecd2.is_some() {
        Some(clause::TWO_II)
    } else {
        None
    }
}

/// `γ(G ⋄ H) ≥ 3`.
pub fn at_least_three(g: &Graph, h: &Graph) -> bool {
    at_least_three_with(&FactorFacts::of(g), &FactorFacts::of(h))
}

pub fn at_least_three_with(fg: &FactorFacts, fh: &FactorFacts) -> bool {
    fg.gamma + fh.gamma >= 4 && fg.ecd2.is_none() && fh.ecd2.is_none()
}

/// Bitmask over `I ⊆ [3]` (bit `I`) of the nonempty `A(I, D)`.
fn occupancy(g: &Graph, d: &[usize; 3]) -> u8 {
    (0..g.n()).fold(0, |acc, v| acc | 1 << trace_mask(g, d, v))
}

/// `occupancy` re-indexed by complement: bit `I` set iff `A(I^c, D)` is
/// nonempty.
fn complemented(occ: u8) -> u8 {
    (0..8).fold(0, |acc, i| acc | ((occ >> (7 - i)) & 1) << i)
}

/// First pair of triples, in lexicographic order of `(D_G, D_H)` with `D_G`
/// increasing and `D_H` ordered, such that `a_G(I, D_G) + a_H(I^c, D_H) ≤ 1`
/// for all `I ⊆ [3]`. Vertices within each triple are distinct.
pub fn dom3_iv_search(g: &Graph, h: &Graph) -> Option<([usize; 3], [usize; 3])> {
    let m = h.n();
    // First H triple (in lexicographic order) for each occupancy pattern.
    let mut first: [Option<[usize; 3]>; 256] = [None; 256];
    for a in 0..m {
        for b in (0..m).filter(|&b| b != a) {
            for c in (0..m).filter(|&c| c != a && c != b) {
                let t = [a, b, c];
                let slot = &mut first[complemented(occupancy(h, &t)) as usize];
                if slot.is_none() {
                    *slot = Some(t);
                }
            }
        }
    }
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let t = [a, b, c];
                let occ = occupancy(g, &t);
                let hit = first
                    .iter()
                    .enumerate()
                    .filter(|&(mask, _)| occ & mask as u8 == 0)
                    .filter_map(|(_, t)| *t)
                    .min();
                if let Some(th) = hit {
                    return Some((t, th));
                }
            }
        }
    }
    None
}

/// The first clause of (i)–(iv) that holds, with a verified 3-set.
/// Requires `γ(G ⋄ H) ≥ 3` as decided by [`at_least_three`].
pub fn equals_three(g: &Graph, h: &Graph) -> Result<Option<ClauseHit>> {
    equals_three_with(g, &FactorFacts::of(g), h, &FactorFacts::of(h))
}

pub fn equals_three_with(
    g: &Graph,
    fg: &FactorFacts,
    h: &Graph,
    fh: &FactorFacts,
) -> Result<Option<ClauseHit>> {
    if !at_least_three_with(fg, fh) {
        return Err(Error::InvalidArgument("the product has domination number below three"));
    }
    if fg.gamma + fh.gamma == 4 {
        let w = match (fg.universal, fh.universal) {
            (_, Some(u)) => column(fg.gamma_set.iter().copied(), u),
            (Some(u), None) => swap_all(column(fh.gamma_set.iter().copied(), u)),
            (None, None) => {
                let (dg, dh) = (&fg.gamma_set, &fh.gamma_set);
                reduce_rectangle(dg[0], dg[1], dh[0], dh[1])?.to_vec()
            }
        };
        return checked(g, h, clause::DOM3_I, w).map(Some);
    }
    if fg.sdctd == 3 {
        let d = fg.sdctd_set.as_ref().expect("finite γ̄ has a set");
        return checked(g, h, clause::DOM3_II, column(d.iter(), 0)).map(Some);
    }
    if fh.sdctd == 3 {
        let d = fh.sdctd_set.as_ref().expect("finite γ̄ has a set");
        return checked(g, h, clause::DOM3_II, swap_all(column(d.iter(), 0))).map(Some);
    }
    if fg.diameter >= 3 && fh.diameter >= 3 {
        let w = diam3_construction(g, h)?.expect("both factors have a far pair");
        return checked(g, h, clause::DOM3_III, w).map(Some);
    }
    if let Some((tg, th)) = dom3_iv_search(g, h) {
        let w = (0..3).map(|i| ProductVertex::new(tg[i], th[i])).collect();
        let mut hit = checked(g, h, clause::DOM3_IV, w)?;
        hit.triples = Some((tg, th));
        return Ok(Some(hit));
    }
    Ok(None)
}

/// Classifies `γ(G ⋄ H)` as 1, 2, 3 or at least 4. Products with at most
/// [`CROSS_CHECK_MAX_ORDER`] vertices are also solved exactly and the
/// result is stored in `cross_check`.
pub fn classify(g: &Graph, h: &Graph) -> Result<CharacterizationVerdict> {
    classify_with(g, &FactorFacts::of(g), h, &FactorFacts::of(h))
}

pub fn classify_with(
    g: &Graph,
    fg: &FactorFacts,
    h: &Graph,
    fh: &FactorFacts,
) -> Result<CharacterizationVerdict> {
    let mut verdict = decide(g, fg, h, fh)?;
    let fits = product_order(g, h).is_ok_and(|n| n <= CROSS_CHECK_MAX_ORDER);
    if fits {
        let exact = product_domination_number(g, h, Some(3))?.value;
        verdict.cross_check = exact.truncated(4);
    }
    Ok(verdict)
}

fn verdict(klass: Klass, hit: ClauseHit) -> CharacterizationVerdict {
    CharacterizationVerdict {
        klass,
        condition: hit.clause,
        witness: Some(hit.witness),
        triples: hit.triples,
        cross_check: None,
    }
}

fn decide(g: &Graph, fg: &FactorFacts, h: &Graph, fh: &FactorFacts) -> Result<CharacterizationVerdict> {
    if let (Some(a), Some(b)) = (fg.universal, fh.universal) {
        let hit = checked(g, h, clause::ONE, alloc::vec![ProductVertex::new(a, b)])?;
        return Ok(verdict(Klass::Eq1, hit));
    }
    match equals_two_with(fg, fh) {
        Some(clause::TWO_I) => {
            let w = match fh.universal {
                Some(u) => column(fg.gamma_set.iter().copied(), u),
                None => swap_all(column(
                    fh.gamma_set.iter().copied(),
                    fg.universal.expect("one factor has γ = 1"),
                )),
            };
            return Ok(verdict(Klass::Eq2, checked(g, h, clause::TWO_I, w)?));
        }
        Some(_) => {
            let w = match &fg.ecd2 {
                Some(d) => column(d.iter(), 0),
                None => swap_all(column(fh.ecd2.as_ref().expect("ECD 2-set").iter(), 0)),
            };
            return Ok(verdict(Klass::Eq2, checked(g, h, clause::TWO_II, w)?));
        }
        None => {}
    }
    Ok(match equals_three_with(g, fg, h, fh)? {
        Some(hit) => verdict(Klass::Eq3, hit),
        None => CharacterizationVerdict {
            klass: Klass::Ge4,
            condition: clause::NONE,
            witness: None,
            triples: None,
            cross_check: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn fam(f: Family) -> Graph {
        f.generate().unwrap()
    }

    fn subset(q: usize, m: &[usize]) -> IndexSubset {
        IndexSubset::new(q, m.iter().copied()).unwrap()
    }

    #[test]
    fn index_subsets() {
        let i = subset(3, &[0, 2]);
        assert_eq!(i.complement(), subset(3, &[1]));
        assert_eq!(i.members().collect::<Vec<_>>(), [0, 2]);
        assert!(IndexSubset::new(3, [3]).is_err());
        assert_eq!(IndexSubset::all(3).unwrap().count(), 8);
        assert!(IndexSubset::from_mask(2, 4).is_err());
    }

    #[test]
    fn a_sets() {
        let p3 = fam(Family::Path(3));
        assert_eq!(A_set(&p3, &[0, 2], subset(2, &[0, 1])).unwrap().to_vec(), [1]);
        assert!(A_set(&p3, &[0, 2], subset(2, &[])).unwrap().is_empty());
        assert!(!a_indicator(&p3, &[0, 2], subset(2, &[])).unwrap());
        assert!(a_indicator(&p3, &[0, 2], subset(2, &[0])).unwrap());
        let p = fam(Family::Petersen);
        for v in 0..10 {
            let n: Vec<usize> = p.neighbors(v).collect();
            assert_eq!(A_set(&p, &n, subset(3, &[0, 1, 2])).unwrap().to_vec(), [v]);
        }
        assert!(A_set(&p3, &[0, 0], subset(2, &[0])).is_err());
        assert!(A_set(&p3, &[0, 1], subset(3, &[0])).is_err());
    }

    #[test]
    fn one_and_two() {
        let star = fam(Family::Star(3));
        let k4 = fam(Family::Complete(4));
        let c4 = fam(Family::Cycle(4));
        assert!(equals_one(&star, &k4));
        assert!(!equals_one(&c4, &k4));
        let k1 = Graph::empty(1).unwrap();
        assert!(equals_one(&k1, &k1));
        let p4 = fam(Family::Path(4));
        let p = fam(Family::Petersen);
        let k3 = fam(Family::Complete(3));
        assert_eq!(equals_two(&p4, &p), Some(clause::TWO_II));
        assert_eq!(equals_two(&p4, &k3), Some(clause::TWO_I));
        assert_eq!(equals_two(&c4, &c4), None);
    }

    #[test]
    fn at_least_three_examples() {
        let c4 = fam(Family::Cycle(4));
        let p4 = fam(Family::Path(4));
        let p = fam(Family::Petersen);
        assert!(at_least_three(&c4, &c4));
        assert!(!at_least_three(&p4, &p));
        assert!(at_least_three(&p, &p));
    }

    #[test]
    fn three_examples() {
        let c4 = fam(Family::Cycle(4));
        assert_eq!(equals_three(&c4, &c4).unwrap().unwrap().clause, clause::DOM3_I);
        let c5 = fam(Family::Cycle(5));
        let p = fam(Family::Petersen);
        assert_eq!(equals_three(&c5, &p).unwrap().unwrap().clause, clause::DOM3_II);
        let hit = equals_three(&p, &p).unwrap().unwrap();
        assert_eq!(hit.clause, clause::DOM3_IV);
        assert_eq!(hit.witness.len(), 3);
        let p10 = fam(Family::Path(10));
        assert_eq!(equals_three(&p10, &p).unwrap(), None);
        let p4 = fam(Family::Path(4));
        assert!(equals_three(&p4, &p4).is_err());
    }

    #[test]
    fn classification() {
        let k3 = fam(Family::Complete(3));
        let v = classify(&k3, &k3).unwrap();
        assert_eq!(v.klass, Klass::Eq1);
        assert_eq!(v.cross_check, Some(1));
        let c4 = fam(Family::Cycle(4));
        let v = classify(&c4, &c4).unwrap();
        assert_eq!(v.klass, Klass::Eq3);
        assert!(v.consistent());
        let p10 = fam(Family::Path(10));
        let p = fam(Family::Petersen);
        let v = classify(&p10, &p).unwrap();
        assert_eq!((v.klass, v.condition), (Klass::Ge4, clause::NONE));
        assert_eq!(v.cross_check, Some(4));
        assert_eq!(alloc::format!("{}", Klass::Eq3), "EQ3");
    }

    #[test]
    fn complemented_masks() {
        assert_eq!(complemented(0b0000_0001), 0b1000_0000);
        assert_eq!(complemented(0b0000_0110), 0b0110_0000);
    }
}
