//! Counterexample searches around three open questions on `γ(G ⋄ H)`.

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;

use moddom_core::bounds::{open_split_edge, verify_witness};
use moddom_core::domination::{domination_number, product_domination_number, SolveValue};
use moddom_core::{graph6, ExtendedNat, Graph};

use crate::classes::class_representatives;
use crate::config::{RunConfig, SINGLE_GRAPH_MAX_N};
use crate::inputs::{load, InputError, NamedGraph};
use crate::report::{pairs, Report};

/// Budget under which the five-vertex construction guarantees an exact value.
pub const P1_BUDGET: usize = 5;

fn check_max_n(max_n: usize) -> Result<(), InputError> {
    if max_n == 0 || max_n > SINGLE_GRAPH_MAX_N {
        return Err(InputError {
            input: "--max-n".to_string(),
            reason: format!("searches enumerate 1 ≤ max_n ≤ {SINGLE_GRAPH_MAX_N}"),
        });
    }
    Ok(())
}

fn named(graph: Graph) -> NamedGraph {
    NamedGraph {
        id: graph6::emit(&graph),
        graph,
    }
}

/// Inputs when given, otherwise class representatives of orders `orders`.
fn population(
    config: &RunConfig,
    orders: std::ops::RangeInclusive<usize>,
    connected_only: bool,
) -> Result<Vec<NamedGraph>> {
    if !config.inputs.is_empty() {
        return Ok(load(&config.inputs)?);
    }
    check_max_n(config.max_n)?;
    let mut out = Vec::new();
    for n in orders {
        out.extend(class_representatives(n, connected_only)?.into_iter().map(named));
    }
    Ok(out)
}

fn unordered_pairs<T>(items: &[T]) -> Vec<(&T, &T)> {
    items
        .iter()
        .enumerate()
        .flat_map(|(i, a)| items[i..].iter().map(move |b| (a, b)))
        .collect()
}

fn gamma(g: &Graph) -> usize {
    domination_number(g).finite().expect("γ is finite")
}

fn diameter_two(g: &Graph) -> bool {
    g.diameter() == ExtendedNat::Finite(2)
}

#[derive(Debug, Clone, Serialize)]
pub struct PairRow {
    pub kind: &'static str,
    pub g: String,
    pub h: String,
    pub g_graph6: String,
    pub h_graph6: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub exact: Option<usize>,
    pub above_budget: Option<usize>,
    pub witness: Option<Vec<[usize; 2]>>,
    pub witness_verified: Option<bool>,
    /// `γ(G ⋄ H) − max(γ(G), γ(H))`.
    pub excess: Option<i64>,
}

fn pair_row(g: &NamedGraph, h: &NamedGraph, budget: Option<usize>) -> Result<PairRow> {
    let r = product_domination_number(&g.graph, &h.graph, budget)?;
    let witness_verified = r
        .witness
        .as_deref()
        .map(|w| verify_witness(&g.graph, &h.graph, w))
        .transpose()?;
    let (gamma_g, gamma_h) = (gamma(&g.graph), gamma(&h.graph));
    let (exact, above_budget) = match r.value {
        SolveValue::Exact(v) => (Some(v), None),
        SolveValue::AboveBudget(b) => (None, Some(b)),
    };
    Ok(PairRow {
        kind: "pair",
        g: g.id.clone(),
        h: h.id.clone(),
        g_graph6: graph6::emit(&g.graph),
        h_graph6: graph6::emit(&h.graph),
        gamma_g,
        gamma_h,
        exact,
        above_budget,
        witness: r.witness.as_deref().map(pairs),
        witness_verified,
        excess: exact.map(|v| v as i64 - gamma_g.max(gamma_h) as i64),
    })
}

/// Pairs where both factors have an edge whose endpoints have disjoint open
/// neighborhoods that do not cover the graph; reports those with value 5.
pub fn search_problem1(config: &RunConfig) -> Result<Report> {
    let graphs: Vec<NamedGraph> = population(config, 2..=config.max_n, true)?
        .into_iter()
        .filter(|g| open_split_edge(&g.graph).is_some())
        .collect();
    let candidates = unordered_pairs(&graphs);
    let rows: Vec<PairRow> = candidates
        .par_iter()
        .map(|(g, h)| pair_row(g, h, Some(P1_BUDGET)))
        .collect::<Result<_>>()?;
    let mut report = Report::new(config.mode.name());
    let mut fives = Vec::new();
    for r in &rows {
        report.summary.checks += 1;
        if r.witness_verified != Some(true) {
            report.summary.failures += 1;
        }
        if r.exact == Some(P1_BUDGET) {
            fives.push([r.g_graph6.clone(), r.h_graph6.clone()]);
        }
        report.push(r);
    }
    report.set_extra("admitted_pairs", rows.len());
    report.set_extra("value_five", &fives);
    Ok(report)
}

/// Every pair of diameter-2 graphs, with the excess of `γ(G ⋄ H)` over the
/// larger factor value.
pub fn search_problem2(config: &RunConfig) -> Result<Report> {
    let max_n = config.max_n;
    let graphs: Vec<NamedGraph> = population(config, max_n..=max_n, true)?
        .into_iter()
        .filter(|g| diameter_two(&g.graph))
        .collect();
    let rows: Vec<PairRow> = unordered_pairs(&graphs)
        .par_iter()
        .map(|(g, h)| pair_row(g, h, config.budget))
        .collect::<Result<_>>()?;
    let mut report = Report::new(config.mode.name());
    let mut best: Option<(i64, [String; 2])> = None;
    for r in &rows {
        report.summary.checks += 1;
        if r.witness_verified == Some(false) {
            report.summary.failures += 1;
        }
        if let Some(e) = r.excess {
            if best.as_ref().is_none_or(|(b, _)| e > *b) {
                best = Some((e, [r.g_graph6.clone(), r.h_graph6.clone()]));
            }
        }
        report.push(r);
    }
    report.set_extra("pairs", rows.len());
    report.set_extra("max_excess", best.as_ref().map(|b| b.0));
    report.set_extra("max_excess_pair", best.map(|b| b.1));
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct SquareRow {
    pub kind: &'static str,
    pub g: String,
    pub g_graph6: String,
    pub gamma: usize,
    pub diam: Option<usize>,
    pub budget: usize,
    /// `γ(G ⋄ G)` when at most `budget`.
    pub exact: Option<usize>,
    /// Set when `γ(G ⋄ G) ≥ γ(G) + 2`.
    pub counterexample: bool,
    pub witness_verified: Option<bool>,
}

fn square_row(g: &NamedGraph) -> Result<SquareRow> {
    let gamma = gamma(&g.graph);
    let budget = gamma + 1;
    let r = product_domination_number(&g.graph, &g.graph, Some(budget))?;
    let witness_verified = r
        .witness
        .as_deref()
        .map(|w| verify_witness(&g.graph, &g.graph, w))
        .transpose()?;
    Ok(SquareRow {
        kind: "graph",
        g: g.id.clone(),
        g_graph6: graph6::emit(&g.graph),
        gamma,
        diam: g.graph.diameter().finite(),
        budget,
        exact: r.value.exact(),
        counterexample: matches!(r.value, SolveValue::AboveBudget(_)),
        witness_verified,
    })
}

/// Graphs with `γ(G ⋄ G) ≥ γ(G) + 2`, restricted to diameter 2 unless
/// `unrestricted` is set.
pub fn search_problem3(config: &RunConfig) -> Result<Report> {
    let graphs: Vec<NamedGraph> = population(config, 1..=config.max_n, false)?
        .into_iter()
        .filter(|g| config.unrestricted || diameter_two(&g.graph))
        .collect();
    let rows: Vec<SquareRow> = graphs.par_iter().map(square_row).collect::<Result<_>>()?;
    let mut report = Report::new(config.mode.name());
    let mut found = Vec::new();
    for r in &rows {
        report.summary.checks += 1;
        if r.witness_verified == Some(false) {
            report.summary.failures += 1;
        }
        if r.counterexample {
            found.push(r.g_graph6.clone());
        }
        report.push(r);
    }
    report.set_extra("scanned", rows.len());
    report.set_extra("diameter_filter", !config.unrestricted);
    report.set_extra("counterexamples", &found);
    Ok(report)
}
