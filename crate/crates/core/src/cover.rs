//! Exact minimum set cover by depth-first branch and bound.
//!
//! Every domination-type minimum in this crate reduces to covering a
//! universe of elements with as few candidate sets as possible. The search
//! deepens the size limit from a lower bound; for each limit it branches on
//! the uncovered element with the fewest usable candidates, trying them in
//! ascending order and excluding a candidate from later siblings once its
//! branch is exhausted. The first cover found at the optimal size is the
//! reported witness, which makes witnesses independent of the incumbent.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{self, words_for, Ones};

pub(crate) struct CoverProblem {
    universe: usize,
    candidates: usize,
    ew: usize,
    cw: usize,
    /// `candidates × ew`: elements covered by each candidate.
    sets: Vec<u64>,
    /// `universe × cw`: candidates covering each element.
    coverers: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum CoverOutcome {
    /// Minimum cover, candidates ascending.
    Optimal(Vec<usize>),
    /// Some element has no candidate.
    Infeasible,
    /// No cover of size at most the budget exists.
    AboveBudget(usize),
}

pub(crate) struct CoverResult {
    pub outcome: CoverOutcome,
    pub nodes: u64,
}

impl CoverProblem {
    /// `sets` holds one row of `words_for(universe)` words per candidate.
    pub fn new(universe: usize, candidates: usize, sets: Vec<u64>) -> Self {
        let ew = words_for(universe);
        let cw = words_for(candidates);
        debug_assert_eq!(sets.len(), candidates * ew);
        let mut coverers = vec![0u64; universe * cw];
        for c in 0..candidates {
            for e in Ones::new(&sets[c * ew..(c + 1) * ew]) {
                bitset::set(&mut coverers[e * cw..(e + 1) * cw], c);
            }
        }
        CoverProblem {
            universe,
            candidates,
            ew,
            cw,
            sets,
            coverers,
        }
    }

    fn set(&self, c: usize) -> &[u64] {
        &self.sets[c * self.ew..(c + 1) * self.ew]
    }

    fn coverers(&self, e: usize) -> &[u64] {
        &self.coverers[e * self.cw..(e + 1) * self.cw]
    }

    fn all_elements(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.ew];
        for e in 0..self.universe {
            bitset::set(&mut words, e);
        }
        words
    }

    fn all_candidates(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.cw];
        for c in 0..self.candidates {
            bitset::set(&mut words, c);
        }
        words
    }

    /// Greedy maximum-coverage cover; assumes feasibility.
    pub fn greedy(&self) -> Vec<usize> {
        let mut uncovered = self.all_elements();
        let mut chosen = Vec::new();
        while uncovered.iter().any(|&w| w != 0) {
            let best = (0..self.candidates)
                .max_by_key(|&c| (bitset::count_and(self.set(c), &uncovered), core::cmp::Reverse(c)))
                .expect("feasible instance has candidates");
            for (u, s) in uncovered.iter_mut().zip(self.set(best)) {
                *u &= !s;
            }
            chosen.push(best);
        }
        chosen
    }

    /// Lower bound on the candidates still needed to cover `uncovered`
    /// using only `allowed` candidates: the larger of a greedy packing of
    /// elements with pairwise disjoint candidate lists and the
    /// element-count / best-coverage ratio.
    pub fn lower_bound(&self, uncovered: &[u64], allowed: &[u64]) -> usize {
        let remaining = bitset::count(uncovered);
        if remaining == 0 {
            return 0;
        }
        let mut used = vec![0u64; self.cw];
        let mut packing = 0;
        for e in Ones::new(uncovered) {
            let cov = self.coverers(e);
            let clash = cov
                .iter()
                .zip(allowed)
                .zip(&used)
                .any(|((c, a), u)| c & a & u != 0);
            if !clash {
                packing += 1;
                for ((u, c), a) in used.iter_mut().zip(cov).zip(allowed) {
                    *u |= c & a;
                }
            }
        }
        let best_cover = Ones::new(allowed)
            .map(|c| bitset::count_and(self.set(c), uncovered))
            .max()
            .unwrap_or(0);
        if best_cover == 0 {
            return usize::MAX;
        }
        packing.max(remaining.div_ceil(best_cover))
    }

    pub fn solve(&self, budget: Option<usize>) -> CoverResult {
        let mut nodes = 0;
        let infeasible = (0..self.universe).any(|e| self.coverers(e).iter().all(|&w| w == 0));
        if infeasible {
            return CoverResult {
                outcome: CoverOutcome::Infeasible,
                nodes,
            };
        }
        let uncovered = self.all_elements();
        let allowed = self.all_candidates();
        let upper = self.greedy().len();
        let lower = self.lower_bound(&uncovered, &allowed);
        let limit = budget.map_or(upper, |b| b.min(upper));
        for k in lower..=limit {
            let mut chosen = Vec::with_capacity(k);
            let mut allowed = allowed.clone();
            if self.search(&uncovered, &mut allowed, &mut chosen, k, &mut nodes) {
                chosen.sort_unstable();
                return CoverResult {
                    outcome: CoverOutcome::Optimal(chosen),
                    nodes,
                };
            }
        }
        let budget = budget.expect("a cover of greedy size always exists");
        CoverResult {
            outcome: CoverOutcome::AboveBudget(budget),
            nodes,
        }
    }

    fn search(
        &self,
        uncovered: &[u64],
        allowed: &mut Vec<u64>,
        chosen: &mut Vec<usize>,
        limit: usize,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        if uncovered.iter().all(|&w| w == 0) {
            return true;
        }
        let slots = limit - chosen.len();
        if slots == 0 {
            return false;
        }
        let mut pivot = usize::MAX;
        let mut fewest = usize::MAX;
        for e in Ones::new(uncovered) {
            let options = bitset::count_and(self.coverers(e), allowed);
            if options < fewest {
                fewest = options;
                pivot = e;
                if options <= 1 {
                    break;
                }
            }
        }
        if fewest == 0 {
            return false;
        }
        if slots == 1 {
            // One candidate must cover everything that is left.
            return Ones::new(allowed)
                .find(|&c| bitset::count_and_not(uncovered, self.set(c)) == 0)
                .map(|c| chosen.push(c))
                .is_some();
        }
        if self.lower_bound(uncovered, allowed) > slots {
            return false;
        }
        let mut usable = vec![0u64; self.cw];
        for ((o, c), a) in usable.iter_mut().zip(self.coverers(pivot)).zip(allowed.iter()) {
            *o = c & a;
        }
        let options: Vec<usize> = Ones::new(&usable).collect();
        let saved = allowed.clone();
        let mut next = vec![0u64; self.ew];
        for c in options {
            for ((n, u), s) in next.iter_mut().zip(uncovered).zip(self.set(c)) {
                *n = u & !s;
            }
            chosen.push(c);
            if self.search(&next, allowed, chosen, limit, nodes) {
                return true;
            }
            chosen.pop();
            bitset::clear(allowed, c);
        }
        *allowed = saved;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(universe: usize, sets: &[&[usize]]) -> CoverProblem {
        let ew = words_for(universe);
        let mut rows = vec![0u64; sets.len() * ew];
        for (c, s) in sets.iter().enumerate() {
            for &e in *s {
                bitset::set(&mut rows[c * ew..(c + 1) * ew], e);
            }
        }
        CoverProblem::new(universe, sets.len(), rows)
    }

    #[test]
    fn greedy_trap_is_solved_exactly() {
        // Greedy takes the big middle set first and needs three sets.
        let p = problem(6, &[&[0, 1, 2], &[3, 4, 5], &[1, 2, 3, 4]]);
        assert_eq!(p.greedy().len(), 3);
        let r = p.solve(None);
        assert_eq!(r.outcome, CoverOutcome::Optimal(vec![0, 1]));
    }

    #[test]
    fn infeasible_and_budget() {
        let p = problem(3, &[&[0], &[1]]);
        assert_eq!(p.solve(None).outcome, CoverOutcome::Infeasible);
        let p = problem(3, &[&[0], &[1], &[2]]);
        assert_eq!(p.solve(Some(2)).outcome, CoverOutcome::AboveBudget(2));
        assert_eq!(p.solve(Some(5)).outcome, CoverOutcome::Optimal(vec![0, 1, 2]));
    }

    #[test]
    fn lower_bound_never_exceeds_optimum() {
        let p = problem(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]);
        let all = p.all_elements();
        let allowed = p.all_candidates();
        assert!(p.lower_bound(&all, &allowed) <= 3);
        match p.solve(None).outcome {
            CoverOutcome::Optimal(c) => assert_eq!(c.len(), 3),
            other => panic!("{other:?}"),
        }
    }
}
