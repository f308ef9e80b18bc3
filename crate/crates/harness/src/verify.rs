//! `verify`: every invariant suite, over exhaustive small populations plus
//! seeded samples. Each suite yields one record with its check count and the
//! first few failures, each carrying graph6 inputs that reproduce it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use moddom_core::bounds::{
    best_upper_bound, diam3_construction, lower_bound, projections, reduce_rectangle,
};
use moddom_core::characterization::{classify, clause};
use moddom_core::domination::{
    dominating_via_index_sets, domination_number, find_ecd_set, is_dominating, is_sdctd,
    is_total_dominating, packing_number, product_domination_number, sdctd_number, total_domination_number,
    ProductSolveResult, SolveResult,
};
use moddom_core::families::{enumerate_all_graphs, graph_from_pair_mask, pair_count, Family};
use moddom_core::products::{
    are_isomorphic, dominates, lexicographic_product, modular_product, strong_product,
};
use moddom_core::{graph6, ExtendedNat, Graph, ProductVertex, VertexSet};

use crate::classes::class_representatives;
use crate::config::{RunConfig, PAIR_MAX_N, SINGLE_GRAPH_MAX_N};
use crate::inputs::InputError;
use crate::oracle;
use crate::report::{pairs, Report};

/// Largest factor order enumerated exhaustively in pair suites.
pub const PAIR_EXHAUSTIVE_N: usize = 4;
/// Sampled labeled pairs at order 5 when `max_n ≥ 5`, on top of every pair
/// of class representatives with a factor of order 5.
pub const SAMPLED_PAIRS: usize = 500;
pub const SAMPLED_SNAKES: usize = 1000;
pub const SAMPLED_RECTANGLES: usize = 500;
const EXAMPLES_KEPT: usize = 5;

/// The solvers under test; swapped out by the self-test.
#[derive(Clone, Copy)]
pub struct Solvers {
    pub domination: fn(&Graph) -> SolveResult,
    pub product: fn(&Graph, &Graph, Option<usize>) -> moddom_core::Result<ProductSolveResult>,
}

impl Default for Solvers {
    fn default() -> Self {
        Solvers {
            domination: domination_number,
            product: product_domination_number,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// graph6 strings of the inputs.
    pub inputs: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRecord {
    pub kind: &'static str,
    pub suite: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub examples: Vec<Failure>,
}

type Outcome = Option<Failure>;

fn fail(graphs: &[&Graph], detail: String) -> Outcome {
    Some(Failure {
        inputs: graphs.iter().map(|g| graph6::emit(g)).collect(),
        detail,
    })
}

fn expect(ok: bool, graphs: &[&Graph], detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        None
    } else {
        fail(graphs, detail())
    }
}

fn run_suite<T: Sync>(
    suite: &'static str,
    items: &[T],
    check: impl Fn(&T) -> Vec<Outcome> + Sync,
) -> SuiteRecord {
    let outcomes: Vec<Vec<Outcome>> = items.par_iter().map(&check).collect();
    let mut record = SuiteRecord {
        kind: "suite",
        suite,
        checks: 0,
        failures: 0,
        examples: Vec::new(),
    };
    for o in outcomes.into_iter().flatten() {
        record.checks += 1;
        if let Some(f) = o {
            record.failures += 1;
            if record.examples.len() < EXAMPLES_KEPT {
                record.examples.push(f);
            }
        }
    }
    record
}

fn suite_rng(seed: u64, suite: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ suite.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let bits = pair_count(n);
    let mask = if bits == 0 { 0 } else { rng.gen::<u64>() >> (64 - bits) };
    graph_from_pair_mask(n, mask).expect("n ≤ 11")
}

fn all_graphs(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| enumerate_all_graphs(n, false).expect("n ≤ 7"))
        .collect()
}

fn set_of(g: &Graph, vs: impl IntoIterator<Item = usize>) -> VertexSet {
    VertexSet::from_vertices(g.n(), vs).expect("vertices in range")
}

// Single-graph suites.

fn gamma_suite(graphs: &[Graph], s: &Solvers) -> SuiteRecord {
    run_suite("gamma", graphs, |g| {
        let r = (s.domination)(g);
        let want = oracle::gamma(g);
        let witness_ok = r
            .witness
            .as_ref()
            .is_some_and(|w| w.len() == want && is_dominating(g, w));
        vec![expect(r.value == want && witness_ok, &[g], || {
            format!("solver {:?} with witness {:?}, oracle {want}", r.value, r.witness.as_ref().map(VertexSet::to_vec))
        })]
    })
}

fn total_domination_suite(graphs: &[Graph]) -> SuiteRecord {
    run_suite("total_domination", graphs, |g| {
        let r = total_domination_number(g);
        let want = oracle::gamma_total(g);
        let witness_ok = r.witness.as_ref().is_none_or(|w| is_total_dominating(g, w));
        vec![expect(r.finite() == want && witness_ok, &[g], || {
            format!("solver {:?}, oracle {want:?}", r.value)
        })]
    })
}

fn sdctd_suite(graphs: &[Graph]) -> SuiteRecord {
    run_suite("sdctd", graphs, |g| {
        let r = sdctd_number(g);
        let want = oracle::gamma_sdctd(g);
        let witness_ok = r.witness.as_ref().is_none_or(|w| is_sdctd(g, w));
        vec![expect(r.finite() == want && witness_ok, &[g], || {
            format!("solver {:?}, oracle {want:?}", r.value)
        })]
    })
}

fn packing_suite(graphs: &[Graph]) -> SuiteRecord {
    run_suite("packing", graphs, |g| {
        let r = packing_number(g);
        let want = oracle::packing(g);
        vec![expect(r.value == want, &[g], || format!("solver {}, oracle {want}", r.value))]
    })
}

fn total2_suite(graphs: &[Graph]) -> SuiteRecord {
    run_suite("total2", graphs, |g| {
        let far = g.diameter() >= ExtendedNat::Finite(3);
        let two = total_domination_number(&g.complement()).value == 2;
        vec![expect(far == two, &[g], || {
            format!("diam {} but γ_t(complement) = 2 is {two}", g.diameter())
        })]
    })
}

fn sdctd_sandwich_suite(graphs: &[Graph], s: &Solvers) -> SuiteRecord {
    run_suite("sdctd_sandwich", graphs, |g| {
        if !g.is_connected() || g.diameter() < ExtendedNat::Finite(3) {
            return Vec::new();
        }
        let gamma = (s.domination)(g).value;
        let bar = sdctd_number(g).value;
        let ok = gamma <= bar && bar <= gamma.finite().map_or(ExtendedNat::Infinite, |x| (x + 2).into());
        vec![expect(ok, &[g], || format!("γ = {gamma}, γ̄ = {bar}"))]
    })
}

fn distant_pair_suite(graphs: &[Graph], s: &Solvers) -> SuiteRecord {
    run_suite("distant_pair_sdctd", graphs, |g| {
        let Some((a, b)) = g.pair_at_distance_at_least(3) else {
            return Vec::new();
        };
        let Some(mut d) = (s.domination)(g).witness else {
            return vec![fail(&[g], "no γ-set".to_string())];
        };
        d.union_with(&set_of(g, [a, b]));
        vec![expect(is_sdctd(g, &d), &[g], || format!("{:?} is not SDCTD", d.to_vec()))]
    })
}

fn ecd_suite(graphs: &[Graph]) -> SuiteRecord {
    run_suite("ecd", graphs, |g| {
        let Some(d) = find_ecd_set(g) else {
            return Vec::new();
        };
        let mut covered = VertexSet::empty(g.n());
        let mut disjoint = true;
        for v in d.iter() {
            let nv = g.closed_neighborhood(v).expect("in range");
            disjoint &= covered.is_disjoint(&nv);
            covered.union_with(&nv);
        }
        vec![expect(disjoint && covered.is_full(), &[g], || {
            format!("{:?} is not a perfect code", d.to_vec())
        })]
    })
}

fn eq1_suite(graphs: &[Graph]) -> SuiteRecord {
    let complete: Vec<Graph> = (1..=3)
        .map(|t| Family::Complete(t).generate().expect("valid"))
        .collect();
    run_suite("complete_factor_isomorphism", graphs, |g| {
        complete
            .iter()
            .map(|kt| {
                let m = modular_product(g, kt).expect("small");
                let s = strong_product(g, kt).expect("small");
                let l = lexicographic_product(g, kt).expect("small");
                let ok = are_isomorphic(&m, &s).unwrap_or(false) && are_isomorphic(&s, &l).unwrap_or(false);
                expect(ok, &[g, kt], || "products with K_t are not isomorphic".to_string())
            })
            .collect()
    })
}

fn petersen_suite() -> SuiteRecord {
    let p = Family::Petersen.generate().expect("valid");
    run_suite("petersen", &[p], |p| {
        let mut found = Vec::new();
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    let d = set_of(p, [a, b, c]);
                    if is_dominating(p, &d) {
                        found.push(d.to_vec());
                    }
                }
            }
        }
        let mut neighborhoods: Vec<Vec<usize>> = (0..10)
            .map(|v| p.open_neighborhood(v).expect("in range").to_vec())
            .collect();
        neighborhoods.sort();
        found.sort();
        let pp = product_domination_number(p, p, None).map(|r| r.value.exact());
        vec![
            expect(found == neighborhoods, &[p], || format!("γ-sets {found:?}")),
            expect(domination_number(p).value == 3, &[p], || "γ(P) ≠ 3".to_string()),
            expect(sdctd_number(p).value == 4, &[p], || "γ̄(P) ≠ 4".to_string()),
            expect(pp == Ok(Some(3)), &[p, p], || format!("γ(P ⋄ P) = {pp:?}")),
        ]
    })
}

// Pair suites.

struct PairCase {
    g: Graph,
    h: Graph,
    /// Oracle `γ(G ⋄ H)`.
    value: usize,
}

fn pair_population(max_n: usize, seed: u64) -> Vec<PairCase> {
    let small = all_graphs(1, max_n.min(PAIR_EXHAUSTIVE_N));
    let mut raw: Vec<(Graph, Graph)> = small
        .iter()
        .flat_map(|g| small.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    if max_n >= 5 {
        let reps: Vec<Graph> = (1..=PAIR_MAX_N)
            .flat_map(|n| class_representatives(n, false).expect("n ≤ 7"))
            .collect();
        for g in &reps {
            for h in &reps {
                if g.n().max(h.n()) == PAIR_MAX_N {
                    raw.push((g.clone(), h.clone()));
                }
            }
        }
        let mut rng = suite_rng(seed, 1);
        for _ in 0..SAMPLED_PAIRS {
            let g = random_graph(&mut rng, 5);
            let h = random_graph(&mut rng, 5);
            raw.push((g, h));
        }
    }
    raw.into_par_iter()
        .map(|(g, h)| {
            let value = oracle::product_gamma(&g, &h, g.n() * h.n() + 1);
            PairCase { g, h, value }
        })
        .collect()
}

fn product_suite(cases: &[PairCase], s: &Solvers) -> SuiteRecord {
    run_suite("product_oracle", cases, |c| {
        let (g, h) = (&c.g, &c.h);
        let r = match (s.product)(g, h, None) {
            Ok(r) => r,
            Err(e) => return vec![fail(&[g, h], e.to_string())],
        };
        let value = r.value.exact();
        let witness_ok = r.witness.as_ref().is_some_and(|w| {
            Some(w.len()) == value
                && oracle::product_dominates(g, h, w)
                && dominating_via_index_sets(g, h, w).unwrap_or(false)
        });
        vec![expect(value == Some(c.value) && witness_ok, &[g, h], || {
            format!(
                "solver {:?} with witness {:?}, oracle {}",
                r.value,
                r.witness.as_deref().map(pairs),
                c.value
            )
        })]
    })
}

fn index_set_suite(cases: &[PairCase], seed: u64) -> SuiteRecord {
    let mut rng = suite_rng(seed, 2);
    let sets: Vec<(usize, Vec<ProductVertex>)> = (0..cases.len().max(1000))
        .map(|i| {
            let c = &cases[i % cases.len()];
            let k = rng.gen_range(0..=5);
            let set = (0..k)
                .map(|_| ProductVertex::new(rng.gen_range(0..c.g.n()), rng.gen_range(0..c.h.n())))
                .collect();
            (i % cases.len(), set)
        })
        .collect();
    run_suite("index_sets", &sets, |(i, set)| {
        let c = &cases[*i];
        let want = oracle::product_dominates(&c.g, &c.h, set);
        let got = dominating_via_index_sets(&c.g, &c.h, set);
        vec![expect(got == Ok(want), &[&c.g, &c.h], || {
            format!("set {:?}: index sets {got:?}, oracle {want}", pairs(set))
        })]
    })
}

fn projection_suite(cases: &[PairCase], s: &Solvers) -> SuiteRecord {
    run_suite("minimum_set_projection", cases, |c| {
        let (g, h) = (&c.g, &c.h);
        let Ok(Some(w)) = (s.product)(g, h, None).map(|r| r.witness) else {
            return vec![fail(&[g, h], "no witness".to_string())];
        };
        let (pg, ph) = projections(&w, g.n(), h.n()).expect("in range");
        let ok = is_dominating(g, &pg) || is_total_dominating(&h.complement(), &ph);
        vec![expect(ok, &[g, h], || format!("witness {:?}", pairs(&w)))]
    })
}

fn sandwich_suite(cases: &[PairCase]) -> SuiteRecord {
    run_suite("sandwich", cases, |c| {
        let (g, h) = (&c.g, &c.h);
        let lower = lower_bound(g, h).value;
        let report = match best_upper_bound(g, h) {
            Ok(r) => r,
            Err(e) => return vec![fail(&[g, h], e.to_string())],
        };
        let w = report.upper_witness.clone().unwrap_or_default();
        let ok = lower <= c.value
            && report.upper >= ExtendedNat::Finite(c.value)
            && report.upper == w.len()
            && oracle::product_dominates(g, h, &w)
            && dominating_via_index_sets(g, h, &w).unwrap_or(false);
        vec![expect(ok, &[g, h], || {
            format!(
                "lower {lower} ({}), value {}, upper {} ({}) with {:?}",
                report.lower_rule,
                c.value,
                report.upper,
                report.upper_rule,
                pairs(&w)
            )
        })]
    })
}

fn characterization_suite(cases: &[PairCase]) -> SuiteRecord {
    run_suite("characterization", cases, |c| {
        let (g, h) = (&c.g, &c.h);
        let (v, mirror) = match (classify(g, h), classify(h, g)) {
            (Ok(v), Ok(m)) => (v, m),
            (Err(e), _) | (_, Err(e)) => return vec![fail(&[g, h], e.to_string())],
        };
        let want = c.value.min(4);
        let witness_ok = v
            .witness
            .as_ref()
            .is_none_or(|w| oracle::product_dominates(g, h, w));
        let diagonal_ok = v.triples.is_none_or(|(tg, th)| {
            let d: Vec<ProductVertex> = (0..3).map(|i| ProductVertex::new(tg[i], th[i])).collect();
            v.condition == clause::DOM3_IV && dominating_via_index_sets(g, h, &d).unwrap_or(false)
        });
        vec![
            expect(v.klass.truncated_value() == want && witness_ok, &[g, h], || {
                format!("verdict {} via {}, truncated value {want}", v.klass, v.condition)
            }),
            expect(mirror.klass == v.klass, &[g, h], || {
                format!("verdict {} but mirror {}", v.klass, mirror.klass)
            }),
            expect(diagonal_ok, &[g, h], || format!("dom3(iv) triples {:?}", v.triples)),
        ]
    })
}

fn commutativity_suite(cases: &[PairCase], s: &Solvers) -> SuiteRecord {
    run_suite("commutativity", cases, |c| {
        let a = (s.product)(&c.g, &c.h, None).map(|r| r.value);
        let b = (s.product)(&c.h, &c.g, None).map(|r| r.value);
        vec![expect(a == b, &[&c.g, &c.h], || format!("{a:?} vs {b:?}"))]
    })
}

fn universal_suite(cases: &[PairCase]) -> SuiteRecord {
    run_suite("universal_factor", cases, |c| {
        if c.h.universal_vertex().is_none() {
            return Vec::new();
        }
        let want = oracle::gamma(&c.g);
        vec![expect(c.value == want, &[&c.g, &c.h], || {
            format!("γ(G ⋄ H) = {}, γ(G) = {want}", c.value)
        })]
    })
}

fn diam3_suite(cases: &[PairCase]) -> SuiteRecord {
    run_suite("diameter_three", cases, |c| {
        let far = |x: &Graph| x.diameter() >= ExtendedNat::Finite(3);
        if !far(&c.g) || !far(&c.h) {
            return Vec::new();
        }
        let w = diam3_construction(&c.g, &c.h);
        let ok = matches!(&w, Ok(Some(w)) if w.len() == 3 && oracle::product_dominates(&c.g, &c.h, w));
        vec![expect(ok, &[&c.g, &c.h], || format!("construction gave {w:?}"))]
    })
}

fn snake_suite(cases: &[PairCase], seed: u64) -> SuiteRecord {
    let mut rng = suite_rng(seed, 3);
    let mut snakes = Vec::new();
    let mut attempts = 0;
    while snakes.len() < SAMPLED_SNAKES && attempts < 200 * SAMPLED_SNAKES {
        attempts += 1;
        let i = rng.gen_range(0..cases.len());
        let (g, h) = (&cases[i].g, &cases[i].h);
        let len = rng.gen_range(1..=8);
        let mut cur = ProductVertex::new(rng.gen_range(0..g.n()), rng.gen_range(0..h.n()));
        let mut d = vec![cur];
        for _ in 1..len {
            cur = if rng.gen_bool(0.5) {
                ProductVertex::new(rng.gen_range(0..g.n()), cur.h)
            } else {
                ProductVertex::new(cur.g, rng.gen_range(0..h.n()))
            };
            d.push(cur);
        }
        let (pg, ph) = projections(&d, g.n(), h.n()).expect("in range");
        let dominating = is_dominating(g, &pg) && is_dominating(h, &ph);
        let total = is_total_dominating(&g.complement(), &pg) && is_total_dominating(&h.complement(), &ph);
        if dominating || total {
            snakes.push((i, d));
        }
    }
    run_suite("snake_projections", &snakes, |(i, d)| {
        let c = &cases[*i];
        vec![expect(oracle::product_dominates(&c.g, &c.h, d), &[&c.g, &c.h], || {
            format!("snake {:?} does not dominate", pairs(d))
        })]
    })
}

fn rectangle_suite(seed: u64) -> SuiteRecord {
    let mut rng = suite_rng(seed, 4);
    let instances: Vec<(Graph, Graph, [usize; 4])> = (0..SAMPLED_RECTANGLES)
        .map(|_| {
            let (n, m) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
            let g = random_graph(&mut rng, n);
            let h = random_graph(&mut rng, m);
            let (g1, h1) = (rng.gen_range(0..n), rng.gen_range(0..m));
            let g2 = (g1 + rng.gen_range(1..n)) % n;
            let h2 = (h1 + rng.gen_range(1..m)) % m;
            (g, h, [g1, g2, h1, h2])
        })
        .collect();
    run_suite("rectangle_reduction", &instances, |(g, h, [g1, g2, h1, h2])| {
        let three = reduce_rectangle(*g1, *g2, *h1, *h2).expect("distinct corners");
        let four = [
            ProductVertex::new(*g1, *h1),
            ProductVertex::new(*g1, *h2),
            ProductVertex::new(*g2, *h1),
            ProductVertex::new(*g2, *h2),
        ];
        let same = (0..g.n()).all(|x| {
            (0..h.n()).all(|y| {
                let t = ProductVertex::new(x, y);
                three.iter().any(|&s| dominates(g, h, s, t)) == four.iter().any(|&s| dominates(g, h, s, t))
            })
        });
        vec![expect(same, &[g, h], || format!("rectangle {:?}", [g1, g2, h1, h2]))]
    })
}

/// Runs every suite with the given solvers.
pub fn run_verify_with(config: &RunConfig, solvers: &Solvers) -> Result<Report, InputError> {
    if config.max_n == 0 || config.max_n > SINGLE_GRAPH_MAX_N {
        return Err(InputError {
            input: "--max-n".to_string(),
            reason: format!("verify needs 1 ≤ max_n ≤ {SINGLE_GRAPH_MAX_N}"),
        });
    }
    let singles = all_graphs(1, config.max_n);
    let eq1_graphs = all_graphs(1, config.max_n.min(5));
    let cases = pair_population(config.max_n, config.seed);
    let records = vec![
        gamma_suite(&singles, solvers),
        total_domination_suite(&singles),
        sdctd_suite(&singles),
        packing_suite(&singles),
        total2_suite(&singles),
        sdctd_sandwich_suite(&singles, solvers),
        distant_pair_suite(&singles, solvers),
        ecd_suite(&singles),
        eq1_suite(&eq1_graphs),
        petersen_suite(),
        product_suite(&cases, solvers),
        index_set_suite(&cases, config.seed),
        projection_suite(&cases, solvers),
        sandwich_suite(&cases),
        characterization_suite(&cases),
        commutativity_suite(&cases, solvers),
        universal_suite(&cases),
        diam3_suite(&cases),
        snake_suite(&cases, config.seed),
        rectangle_suite(config.seed),
    ];
    let mut report = Report::new(config.mode.name());
    for r in &records {
        report.summary.checks += r.checks;
        report.summary.failures += r.failures;
        report.push(r);
    }
    report.set_extra("seed", config.seed);
    report.set_extra("max_n", config.max_n);
    report.set_extra("pairs", cases.len());
    Ok(report)
}

pub fn run_verify(config: &RunConfig) -> Result<Report, InputError> {
    run_verify_with(config, &Solvers::default())
}
