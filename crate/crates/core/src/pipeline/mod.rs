//! The threshold-then-search decision procedure for `H ≤_c G`, a seeded
//! planar sampler, and the verification suite.

mod suite;

pub use suite::{
    verify_suite, verify_suite_with, CheckReport, CheckStatus, FamilySource, StandardFamilies, SuiteReport, CHECKS,
};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::{Budget, Outcome};
use crate::class_c::{compute_c_h, find_c_obstruction, CBound, CMode};
use crate::embedding::planar_embed;
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::relations::{is_contraction_with, require_connected, WitnessPartition};
use crate::treewidth::{exact_treewidth, treewidth_bounds, EXACT_TW_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Verdict {
    YesByTreewidth { c_h: usize, tw_lower: usize },
    YesWithWitness { witness: WitnessPartition },
    No,
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub verdict: Verdict,
    /// Threshold data when `H` is in the class and `G` is planar.
    pub threshold: Option<CBound>,
    /// Which routes fired, in order.
    pub log: Vec<String>,
}

impl Decision {
    /// `None` when the budget ran out.
    pub fn answer(&self) -> Option<bool> {
        match self.verdict {
            Verdict::YesByTreewidth { .. } | Verdict::YesWithWitness { .. } => Some(true),
            Verdict::No => Some(false),
            Verdict::BudgetExhausted => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DecideConfig {
    pub c_mode: CMode,
    /// Node cap given to each search separately.
    pub budget_limit: u64,
    /// A threshold answer is confirmed by witness search up to this many vertices of `G`.
    pub spot_check_limit: usize,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig { c_mode: CMode::Bound, budget_limit: Budget::from_env().limit(), spot_check_limit: 40 }
    }
}

pub fn decide(g: &Graph, h: &Graph, config: &DecideConfig) -> Result<Decision> {
    require_connected(g, "G")?;
    require_connected(h, "H")?;
    let mut log = Vec::new();
    let g_planar = planar_embed(g).is_some();
    let mut threshold = None;
    if g_planar {
        log.push("G is planar".to_string());
        if planar_embed(h).is_none() {
            log.push("H is not planar; planar graphs are closed under taking of contractions".into());
            return Ok(Decision { verdict: Verdict::No, threshold, log });
        }
        match find_c_obstruction(h)? {
            Some((name, _)) => log.push(format!("H is not in class C (contracts to {name}); threshold skipped")),
            None => {
                log.push("H is in class C".into());
                match compute_c_h(h, config.c_mode, &Budget::new(config.budget_limit)) {
                    Ok(c) => {
                        log.push(format!(
                            "c_H = {} from m = {} ({})",
                            c.c_h,
                            c.m,
                            if c.exact { "exact grid side" } else { "dual size bound" }
                        ));
                        let mut tw = treewidth_bounds(g);
                        if tw.lower + 2 >= c.c_h && g.vertex_count() <= EXACT_TW_CAP {
                            tw = exact_treewidth(g)?;
                            log.push(format!("exact treewidth {}", tw.lower));
                        } else {
                            log.push(format!("treewidth lower bound {}", tw.lower));
                        }
                        if tw.lower > c.c_h {
                            log.push(format!("tw(G) >= {} > c_H = {}: H is a contraction of G", tw.lower, c.c_h));
                            if g.vertex_count() <= config.spot_check_limit {
                                spot_check(g, h, config, &mut log)?;
                            }
                            let verdict = Verdict::YesByTreewidth { c_h: c.c_h, tw_lower: tw.lower };
                            return Ok(Decision { verdict, threshold: Some(c), log });
                        }
                        log.push(format!("threshold not met ({} <= {})", tw.lower, c.c_h));
                        threshold = Some(c);
                    }
                    Err(e @ (Error::Domain(_) | Error::BudgetExhausted(_))) => {
                        log.push(format!("c_H unavailable: {e}"));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    } else {
        log.push("G is not planar; threshold route does not apply".into());
    }
    log.push("bounded-treewidth model checking replaced by direct witness search".into());
    let budget = Budget::new(config.budget_limit);
    let verdict = match is_contraction_with(h, g, &budget)? {
        Outcome::Found(w) => {
            w.validate(h, g)?;
            log.push("witness found and validated".into());
            Verdict::YesWithWitness { witness: w }
        }
        Outcome::Absent => {
            log.push("search exhausted the space: no witness".into());
            Verdict::No
        }
        Outcome::Exhausted => {
            log.push(format!("budget of {} nodes exhausted", budget.limit()));
            Verdict::BudgetExhausted
        }
    };
    Ok(Decision { verdict, threshold, log })
}

fn spot_check(g: &Graph, h: &Graph, config: &DecideConfig, log: &mut Vec<String>) -> Result<()> {
    match is_contraction_with(h, g, &Budget::new(config.budget_limit))? {
        Outcome::Found(w) => {
            w.validate(h, g)?;
            log.push("spot check: witness found and validated".into());
            Ok(())
        }
        Outcome::Absent => Err(Error::Inconsistent("treewidth threshold fired but no contraction exists".into())),
        Outcome::Exhausted => {
            log.push("spot check: budget exhausted".into());
            Ok(())
        }
    }
}

/// Connected planar graph on `n` vertices: a random stacked triangulation
/// thinned by random edge deletions that keep it connected.
pub fn sample_planar_graph(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 || n > MAX_VERTICES {
        return Err(invalid(format!("n must be in 1..={MAX_VERTICES}, got {n}")));
    }
    let mut g = Graph::empty(n)?;
    if n <= 3 {
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        if n == 3 {
            g.add_edge(0, 2)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n >= 3 {
        let mut faces = vec![[0, 1, 2], [0, 2, 1]];
        if n > 3 {
            for (u, v) in [(0, 1), (1, 2), (0, 2)] {
                g.add_edge(u, v)?;
            }
        }
        for v in 3..n {
            let i = rng.gen_range(0..faces.len());
            let [a, b, c] = faces.swap_remove(i);
            for u in [a, b, c] {
                g.add_edge(u, v)?;
            }
            faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
        }
    }
    let mut edges = g.edges();
    edges.shuffle(&mut rng);
    for (u, v) in edges {
        if rng.gen_bool(0.5) {
            let h = g.without_edge(u, v)?;
            if h.is_connected() {
                g = h;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, triangulated_grid};

    fn run(g: &Graph, h: &Graph) -> Decision {
        decide(g, h, &DecideConfig::default()).unwrap()
    }

    #[test]
    fn examples() {
        let d = run(&triangulated_grid(5).unwrap(), &complete(4));
        assert!(matches!(d.verdict, Verdict::YesWithWitness { .. }));
        assert_eq!(d.threshold.as_ref().unwrap().c_h, 189);
        assert_eq!(run(&cycle(5), &path(3)).verdict, Verdict::No);
        match run(&complete(4), &complete(4)).verdict {
            Verdict::YesWithWitness { witness } => assert_eq!(witness.branch_sets(4).iter().map(|s| s.len()).sum::<usize>(), 4),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn non_planar_pattern_in_planar_host() {
        let d = run(&triangulated_grid(3).unwrap(), &complete(5));
        assert_eq!(d.verdict, Verdict::No);
        assert!(d.log.iter().any(|l| l.contains("closed under taking of contractions")));
    }

    #[test]
    fn non_planar_host_uses_search() {
        let d = run(&complete(5), &complete(4));
        assert!(d.answer().unwrap());
        assert!(d.threshold.is_none());
        assert!(d.log.iter().any(|l| l.contains("model checking replaced")));
    }

    #[test]
    fn zero_budget_is_exhausted() {
        let config = DecideConfig { budget_limit: 0, ..DecideConfig::default() };
        let d = decide(&triangulated_grid(4).unwrap(), &cycle(4), &config).unwrap();
        assert_eq!(d.verdict, Verdict::BudgetExhausted);
    }

    #[test]
    fn disconnected_rejected() {
        let two = Graph::empty(2).unwrap();
        assert!(decide(&two, &complete(1), &DecideConfig::default()).is_err());
        assert!(decide(&complete(3), &two, &DecideConfig::default()).is_err());
    }

    #[test]
    fn sampler() {
        assert_eq!(sample_planar_graph(1, 9).unwrap(), complete(1));
        for seed in 0..20 {
            let g = sample_planar_graph(4 + seed as usize, seed).unwrap();
            assert!(g.is_connected());
            assert!(planar_embed(&g).is_some());
        }
        assert_eq!(sample_planar_graph(12, 7).unwrap(), sample_planar_graph(12, 7).unwrap());
        assert!(sample_planar_graph(0, 0).is_err());
    }
}
