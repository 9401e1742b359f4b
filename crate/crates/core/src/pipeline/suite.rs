//! The acceptance cross-checks, run concurrently and reported by id.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{decide, sample_planar_graph, DecideConfig, Verdict};
use crate::budget::{Budget, Outcome};
use crate::class_c::{
    compute_c_h, decompose, find_c_obstruction, is_planar_by_forbidden_contraction, CMode, DecompositionTree,
};
use crate::embedding::{enumerate_embeddings, is_triangulated, planar_embed};
use crate::error::{Error, Result};
use crate::generators::{
    complete, complete_bipartite, connected_graphs_by_edges, connected_graphs_up_to, cycle, grid, k33_plus, path,
    star, triangulated_grid, wall, wheel4,
};
use crate::graph::{canonical_form, Graph, Multigraph};
use crate::relations::{
    all_contractions, dual_topological_test, is_contraction_with, is_minor_with, is_topological_minor_with,
    star_contractibility,
};
use crate::treewidth::{check_dual_tw, elimination_width, exact_treewidth};

/// Id and name of every check, in report order.
pub const CHECKS: [(usize, &str); 10] = [
    (1, "generator fidelity"),
    (2, "planarity characterisations agree"),
    (3, "class C membership routes agree"),
    (4, "obstruction antichain"),
    (5, "contraction versus dual topological minor"),
    (6, "minor and topological minor agree below degree 4"),
    (7, "star contraction oracle"),
    (8, "treewidth facts"),
    (9, "c_H certificates"),
    (10, "pipeline matches direct search"),
];

/// Where the checks take their grid families from; swapping it out lets a
/// test corrupt a generator and watch the suite catch it.
pub trait FamilySource: Sync {
    fn triangulated_grid(&self, k: usize) -> Result<Graph>;
    fn wall(&self, k: usize) -> Result<Graph>;
}

pub struct StandardFamilies;

impl FamilySource for StandardFamilies {
    fn triangulated_grid(&self, k: usize) -> Result<Graph> {
        triangulated_grid(k)
    }

    fn wall(&self, k: usize) -> Result<Graph> {
        wall(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    /// At most [`MAX_COUNTEREXAMPLES`] entries; `failures` has the full count.
    pub counterexamples: Vec<String>,
    pub failures: usize,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }
}

const MAX_COUNTEREXAMPLES: usize = 10;

/// Runs every check with a per-search node cap of `budget.limit()`.
pub fn verify_suite(budget: &Budget) -> SuiteReport {
    let ids: Vec<usize> = CHECKS.iter().map(|c| c.0).collect();
    verify_suite_with(budget.limit(), &StandardFamilies, &ids)
}

/// Runs the checks in `ids` concurrently. A zero budget skips everything.
pub fn verify_suite_with(budget_limit: u64, families: &dyn FamilySource, ids: &[usize]) -> SuiteReport {
    let cx = Ctx { limit: budget_limit, families };
    let mut checks: Vec<CheckReport> = CHECKS
        .iter()
        .filter(|(id, _)| ids.contains(id))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|&(id, name)| {
            if budget_limit == 0 {
                return CheckReport {
                    id,
                    name,
                    status: CheckStatus::Skipped,
                    detail: "budget is zero".into(),
                    counterexamples: Vec::new(),
                    failures: 0,
                    elapsed_ms: 0,
                };
            }
            let start = Instant::now();
            let (detail, mut bad) = match run_check(id, &cx) {
                Ok(f) => (f.detail, f.bad),
                Err(e) => (format!("aborted: {e}"), vec![e.to_string()]),
            };
            let failures = bad.len();
            bad.truncate(MAX_COUNTEREXAMPLES);
            CheckReport {
                id,
                name,
                status: if failures == 0 { CheckStatus::Pass } else { CheckStatus::Fail },
                detail,
                counterexamples: bad,
                failures,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    checks.sort_by_key(|c| c.id);
    SuiteReport { checks }
}

struct Ctx<'a> {
    limit: u64,
    families: &'a dyn FamilySource,
}

impl Ctx<'_> {
    fn budget(&self) -> Budget {
        Budget::new(self.limit)
    }
}

struct Findings {
    detail: String,
    bad: Vec<String>,
}

fn run_check(id: usize, cx: &Ctx) -> Result<Findings> {
    match id {
        1 => generator_fidelity(cx),
        2 => planarity_agreement(cx),
        3 => class_c_agreement(cx),
        4 => antichain(cx),
        5 => duality(cx),
        6 => degree3(cx),
        7 => star_oracle(cx),
        8 => treewidth_facts(cx),
        9 => c_h_certificates(cx),
        10 => pipeline_equivalence(cx),
        _ => Err(crate::error::invalid(format!("unknown check {id}"))),
    }
}

fn show(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.vertex_count(), edges.join(" "))
}

/// Maps `f` over `items` in parallel and concatenates the failures in order.
fn sweep<T: Sync>(items: &[T], label: impl Fn(&T) -> String + Sync, f: impl Fn(&T) -> Result<Vec<String>> + Sync) -> Vec<String> {
    items
        .par_iter()
        .map(|x| match f(x) {
            Ok(bad) => bad.into_iter().map(|b| format!("{}: {b}", label(x))).collect(),
            Err(e) => vec![format!("{}: {e}", label(x))],
        })
        .collect::<Vec<Vec<String>>>()
        .into_iter()
        .flatten()
        .collect()
}

fn planar_connected_up_to(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_graphs_up_to(n)?.into_iter().filter(|g| planar_embed(g).is_some()).collect())
}

fn found<T>(o: Outcome<T>, what: &str) -> Result<Option<T>> {
    match o {
        Outcome::Found(w) => Ok(Some(w)),
        Outcome::Absent => Ok(None),
        Outcome::Exhausted => Err(Error::Inconsistent(format!("budget exhausted in {what}"))),
    }
}

fn generator_fidelity(cx: &Ctx) -> Result<Findings> {
    let ks: Vec<usize> = (2..=8).collect();
    let bad = sweep(&ks, |k| format!("k={k}"), |&k| {
        let mut bad = Vec::new();
        let t = cx.families.triangulated_grid(k)?;
        if t.vertex_count() != k * k || t.edge_count() != 3 * k * k - 6 {
            bad.push(format!("Gamma_k has {} vertices and {} edges", t.vertex_count(), t.edge_count()));
        }
        if !is_triangulated(&t) {
            bad.push("Gamma_k is not triangulated".into());
        }
        let w = cx.families.wall(k)?;
        if w.vertex_count() != 2 * k * k - 4 {
            bad.push(format!("wall has {} vertices", w.vertex_count()));
        }
        if (0..w.vertex_count()).any(|v| w.degree(v) != 3) {
            bad.push("wall is not 3-regular".into());
        }
        Ok(bad)
    });
    Ok(Findings { detail: "k = 2..=8".into(), bad })
}

fn planarity_agreement(_cx: &Ctx) -> Result<Findings> {
    let gs = connected_graphs_up_to(7)?;
    let bad = sweep(&gs, show, |g| {
        let by_minor = is_planar_by_forbidden_contraction(g)?;
        let emb = planar_embed(g);
        if let Some(pg) = &emb {
            if !pg.is_spherical() || pg.multigraph().simple_projection() != *g {
                return Ok(vec!["embedding witness is invalid".into()]);
            }
        }
        Ok(if by_minor != emb.is_some() {
            vec![format!("forbidden contractions say {by_minor}, embedding says {}", emb.is_some())]
        } else {
            Vec::new()
        })
    });
    Ok(Findings { detail: format!("{} connected graphs on at most 7 vertices", gs.len()), bad })
}

fn class_c_agreement(cx: &Ctx) -> Result<Findings> {
    let gs = planar_connected_up_to(7)?;
    let members = std::sync::atomic::AtomicUsize::new(0);
    let bad = sweep(&gs, show, |g| {
        let tree: DecompositionTree = decompose(g)?;
        tree.validate(g)?;
        let by_decomposition = tree.accepted();
        let by_forbidden = find_c_obstruction(g)?.is_none();
        if by_decomposition != by_forbidden {
            return Ok(vec![format!("decomposition says {by_decomposition}, forbidden contractions say {by_forbidden}")]);
        }
        if !by_forbidden || g.vertex_count() > 5 {
            return Ok(Vec::new());
        }
        members.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        for k in 2..=6 {
            if g.vertex_count() > k * k {
                continue;
            }
            let grid = cx.families.triangulated_grid(k)?;
            if let Some(w) = found(is_contraction_with(g, &grid, &cx.budget())?, "grid route")? {
                w.validate(g, &grid)?;
                return Ok(Vec::new());
            }
        }
        Ok(vec!["member but no triangulated grid with k <= 6 contracts to it".into()])
    });
    let members = members.into_inner();
    Ok(Findings {
        detail: format!("{} planar graphs; grid route on {members} members with at most 5 vertices", gs.len()),
        bad,
    })
}

fn antichain(cx: &Ctx) -> Result<Findings> {
    let patterns = [
        ("K_{2,2}", complete_bipartite(2, 2)),
        ("K_{2,3}", complete_bipartite(2, 3)),
        ("K^3_{3,3}", k33_plus(3)),
        ("K_5", complete(5)),
        ("W_4", wheel4()),
    ];
    let mut pairs = Vec::new();
    for (i, a) in patterns.iter().enumerate() {
        for (j, b) in patterns.iter().enumerate() {
            if i != j {
                pairs.push((a, b));
            }
        }
    }
    let bad = sweep(&pairs, |(a, b)| format!("{} in {}", a.0, b.0), |(a, b)| {
        let search = found(is_contraction_with(&a.1, &b.1, &cx.budget())?, "antichain")?.is_some();
        let closure = all_contractions(&b.1)?.contains(&canonical_form(&a.1));
        Ok(if search || closure {
            vec![format!("is a contraction (search {search}, closure {closure})")]
        } else {
            Vec::new()
        })
    });
    Ok(Findings { detail: format!("{} ordered pairs", pairs.len()), bad })
}

fn duality(cx: &Ctx) -> Result<Findings> {
    let patterns = [("K_4", complete(4)), ("Gamma_3", cx.families.triangulated_grid(3)?)];
    let gs = planar_connected_up_to(7)?;
    let mut bad = Vec::new();
    let mut embeddings = 0;
    for (name, h) in &patterns {
        let h_emb = planar_embed(h).ok_or_else(|| Error::Domain(format!("{name} is not planar")))?;
        let counts = std::sync::atomic::AtomicUsize::new(0);
        bad.extend(sweep(&gs, |g| format!("{name} in {}", show(g)), |g| {
            let direct = found(is_contraction_with(h, g, &cx.budget())?, "contraction")?.is_some();
            let embs = enumerate_embeddings(g, &cx.budget())?;
            counts.fetch_add(embs.len(), std::sync::atomic::Ordering::Relaxed);
            let mut bad = Vec::new();
            for (i, emb) in embs.iter().enumerate() {
                let tm = dual_topological_test(&h_emb, emb, &cx.budget())?;
                if let Outcome::Found(w) = &tm {
                    let hd = crate::embedding::dual(&h_emb)?.dual;
                    let gd = crate::embedding::dual(emb)?.dual;
                    w.validate(hd.multigraph(), gd.multigraph())?;
                }
                let via_dual = found(tm, "dual topological minor")?.is_some();
                if via_dual != direct {
                    bad.push(format!("embedding {i}: contraction {direct}, dual topological minor {via_dual}"));
                }
            }
            Ok(bad)
        }));
        embeddings = counts.into_inner();
    }
    Ok(Findings { detail: format!("{} planar graphs with {embeddings} embeddings, 2 patterns", gs.len()), bad })
}

fn degree3(cx: &Ctx) -> Result<Findings> {
    let hs: Vec<Graph> = connected_graphs_up_to(5)?.into_iter().filter(|h| h.max_degree() <= 3).collect();
    let gs = connected_graphs_up_to(6)?;
    let mut pairs = Vec::new();
    for h in &hs {
        for g in &gs {
            pairs.push((h, g));
        }
    }
    let bad = sweep(&pairs, |(h, g)| format!("{} in {}", show(h), show(g)), |&(h, g)| {
        let minor = found(is_minor_with(h, g, &cx.budget())?, "minor")?;
        if let Some(w) = &minor {
            w.validate(h, g)?;
        }
        let (hm, gm) = (Multigraph::from_graph(h), Multigraph::from_graph(g));
        let tm = found(is_topological_minor_with(&hm, &gm, &cx.budget())?, "topological minor")?;
        if let Some(w) = &tm {
            w.validate(&hm, &gm)?;
        }
        Ok(if minor.is_some() != tm.is_some() {
            vec![format!("minor {}, topological minor {}", minor.is_some(), tm.is_some())]
        } else {
            Vec::new()
        })
    });
    Ok(Findings { detail: format!("{} patterns x {} hosts", hs.len(), gs.len()), bad })
}

fn star_oracle(cx: &Ctx) -> Result<Findings> {
    let gs = connected_graphs_up_to(7)?;
    let stars: Vec<(usize, Graph)> = (1..=3).map(|m| (m, star(m))).collect();
    let bad = sweep(&gs, show, |g| {
        let closure = all_contractions(g)?;
        let mut bad = Vec::new();
        for (m, s) in &stars {
            let by_set = star_contractibility(g, *m)?;
            let search = found(is_contraction_with(s, g, &cx.budget())?, "star contraction")?;
            if let Some(w) = &search {
                w.validate(s, g)?;
            }
            let by_closure = closure.contains(&canonical_form(s));
            if by_set != search.is_some() || by_set != by_closure {
                bad.push(format!("m={m}: independent set {by_set}, search {}, closure {by_closure}", search.is_some()));
            }
        }
        Ok(bad)
    });
    Ok(Findings { detail: format!("{} connected graphs, m = 1..=3", gs.len()), bad })
}

fn treewidth_facts(_cx: &Ctx) -> Result<Findings> {
    let mut known: Vec<(String, Graph, usize)> = Vec::new();
    for n in 1..=10 {
        known.push((format!("K_{n}"), complete(n), n - 1));
    }
    for n in [2, 10, 18] {
        known.push((format!("P_{n}"), path(n), 1));
    }
    known.push(("K_{1,17}".into(), star(17), 1));
    for t in connected_graphs_up_to(7)?.into_iter().filter(|g| g.vertex_count() >= 2 && g.edge_count() + 1 == g.vertex_count()) {
        known.push((format!("tree {}", show(&t)), t, 1));
    }
    for k in 2..=4 {
        known.push((format!("M_{k}"), grid(k)?, k));
    }
    let mut bad = sweep(&known, |x| x.0.clone(), |(_, g, want)| {
        let r = exact_treewidth(g)?;
        let width = elimination_width(g, &r.order)?;
        Ok(if r.upper != *want || width != r.upper {
            vec![format!("treewidth {} (order width {width}), expected {want}", r.upper)]
        } else {
            Vec::new()
        })
    });
    let plane: Vec<Graph> = connected_graphs_by_edges(10)?.into_iter().filter(|g| planar_embed(g).is_some()).collect();
    let embeddings = std::sync::atomic::AtomicUsize::new(0);
    bad.extend(sweep(&plane, show, |g| {
        let embs = enumerate_embeddings(g, &Budget::unlimited())?;
        embeddings.fetch_add(embs.len(), std::sync::atomic::Ordering::Relaxed);
        let mut bad = Vec::new();
        for (i, pg) in embs.iter().enumerate() {
            if !check_dual_tw(pg)? {
                bad.push(format!("embedding {i}: tw(G*) > tw(G) + 1"));
            }
        }
        Ok(bad)
    }));
    let seeds: Vec<u64> = (0..100).collect();
    bad.extend(sweep(&seeds, |s| format!("sample seed {s}"), |&s| {
        let g = sample_planar_graph(4 + (s % 8) as usize, s)?;
        let pg = planar_embed(&g).ok_or_else(|| Error::Inconsistent("sampler produced a non-planar graph".into()))?;
        Ok(if check_dual_tw(&pg)? { Vec::new() } else { vec![format!("{}: tw(G*) > tw(G) + 1", show(&g))] })
    }));
    Ok(Findings {
        detail: format!(
            "{} known values; dual bound on {} plane graphs with at most 10 edges ({} embeddings) and 100 samples",
            known.len(),
            plane.len(),
            embeddings.into_inner()
        ),
        bad,
    })
}

fn c_h_certificates(cx: &Ctx) -> Result<Findings> {
    let mut bad = Vec::new();
    let k4 = complete(4);
    if found(is_minor_with(&k4, &grid(3)?, &cx.budget())?, "K_4 in M_3")?.is_none() {
        bad.push("K_4 is not a minor of M_3".into());
    }
    if found(is_minor_with(&k4, &grid(2)?, &cx.budget())?, "K_4 in M_2")?.is_some() {
        bad.push("K_4 is a minor of M_2".into());
    }
    let exact = compute_c_h(&k4, CMode::Exact, &cx.budget())?;
    if (exact.m, exact.c_h, exact.exact) != (3, 15, true) {
        bad.push(format!("exact K_4: m = {}, c_H = {}, exact = {}", exact.m, exact.c_h, exact.exact));
    }
    let bound = compute_c_h(&k4, CMode::Bound, &cx.budget())?;
    if bound.c_h != 189 {
        bad.push(format!("bound K_4: c_H = {}", bound.c_h));
    }
    let hs = [
        ("K_1", complete(1)),
        ("K_2", complete(2)),
        ("K_3", complete(3)),
        ("K_4", complete(4)),
        ("P_3", path(3)),
        ("K_{1,3}", star(3)),
    ];
    bad.extend(sweep(&hs, |h| h.0.to_string(), |(_, h)| {
        let e = compute_c_h(h, CMode::Exact, &cx.budget())?;
        let b = compute_c_h(h, CMode::Bound, &cx.budget())?;
        Ok(if e.c_h > b.c_h { vec![format!("exact {} above bound {}", e.c_h, b.c_h)] } else { Vec::new() })
    }));
    Ok(Findings { detail: format!("K_4 exact 15 and bound 189; exact <= bound on {} patterns", hs.len()), bad })
}

fn pipeline_equivalence(cx: &Ctx) -> Result<Findings> {
    let hs = [("P_3", path(3)), ("K_3", complete(3)), ("K_4", complete(4)), ("K_{1,3}", star(3)), ("C_4", cycle(4))];
    let gs = planar_connected_up_to(7)?;
    let config = DecideConfig { budget_limit: cx.limit, ..DecideConfig::default() };
    let mut pairs = Vec::new();
    for h in &hs {
        for g in &gs {
            pairs.push((h, g));
        }
    }
    let bad = sweep(&pairs, |((name, _), g)| format!("{name} in {}", show(g)), |&((_, h), g)| {
        let d = decide(g, h, &config)?;
        let direct = found(is_contraction_with(h, g, &cx.budget())?, "contraction")?.is_some();
        let answer = match &d.verdict {
            Verdict::YesWithWitness { witness } => {
                witness.validate(h, g)?;
                true
            }
            Verdict::YesByTreewidth { c_h, .. } => {
                let again = compute_c_h(h, config.c_mode, &cx.budget())?;
                if again.c_h != *c_h {
                    return Ok(vec![format!("c_H {c_h} does not recompute ({})", again.c_h)]);
                }
                true
            }
            Verdict::No => false,
            Verdict::BudgetExhausted => return Ok(vec!["decide exhausted its budget".into()]),
        };
        Ok(if answer != direct { vec![format!("decide {answer}, direct search {direct}")] } else { Vec::new() })
    });
    Ok(Findings { detail: format!("{} planar graphs x {} patterns", gs.len(), hs.len()), bad })
}
