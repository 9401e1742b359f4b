use contract_lab::generators::{complete, path, star, triangulated_grid, wall};
use contract_lab::pipeline::{
    decide, sample_planar_graph, verify_suite, verify_suite_with, CheckStatus, DecideConfig, FamilySource, Verdict,
};
use contract_lab::{Budget, Graph, Result};

struct BrokenGamma3;

impl FamilySource for BrokenGamma3 {
    fn triangulated_grid(&self, k: usize) -> Result<Graph> {
        let g = triangulated_grid(k)?;
        if k != 3 {
            return Ok(g);
        }
        let (u, v) = g.edges()[0];
        g.without_edge(u, v)
    }

    fn wall(&self, k: usize) -> Result<Graph> {
        wall(k)
    }
}

#[test]
fn corrupted_generator_is_reported() {
    let r = verify_suite_with(1_000_000, &BrokenGamma3, &[1]);
    assert_eq!(r.checks.len(), 1);
    let c = &r.checks[0];
    assert_eq!(c.status, CheckStatus::Fail);
    assert!(c.counterexamples.iter().all(|x| x.starts_with("k=3")));
    assert!(c.counterexamples.iter().any(|x| x.contains("not triangulated")));
}

#[test]
fn zero_budget_skips_everything() {
    let r = verify_suite(&Budget::new(0));
    assert_eq!(r.checks.len(), 10);
    assert!(r.checks.iter().all(|c| c.status == CheckStatus::Skipped));
    assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
}

#[test]
fn small_members_contract_from_triangulated_grids() {
    let config = DecideConfig::default();
    let cases = [(path(3), 3), (complete(3), 2), (complete(4), 2), (star(3), 3)];
    for (h, from) in cases {
        for k in from..=5 {
            let g = triangulated_grid(k).unwrap();
            let d = decide(&g, &h, &config).unwrap();
            match &d.verdict {
                Verdict::YesWithWitness { witness } => witness.validate(&h, &g).unwrap(),
                v => panic!("k = {k}: {v:?}"),
            }
        }
    }
    // Contractions of K_4 are complete.
    let d = decide(&triangulated_grid(2).unwrap(), &path(3), &config).unwrap();
    assert_eq!(d.verdict, Verdict::No);
}

#[test]
fn threshold_certificates_recompute() {
    let config = DecideConfig::default();
    for seed in 0..10 {
        let g = sample_planar_graph(10 + seed as usize, seed).unwrap();
        let d = decide(&g, &complete(4), &config).unwrap();
        let t = d.threshold.as_ref().expect("K_4 is in class C and G is planar");
        let again = contract_lab::class_c::compute_c_h(&complete(4), config.c_mode, &Budget::unlimited()).unwrap();
        assert_eq!(t.c_h, again.c_h);
        if let Verdict::YesByTreewidth { c_h, tw_lower } = d.verdict {
            assert!(tw_lower > c_h);
        }
    }
}

#[test]
fn sampler_is_deterministic_and_planar() {
    for n in [1, 2, 3, 4, 12, 60, 128] {
        let g = sample_planar_graph(n, 42).unwrap();
        assert_eq!(g, sample_planar_graph(n, 42).unwrap());
        assert_eq!(g.vertex_count(), n);
        assert!(g.is_connected());
        assert!(contract_lab::embedding::planar_embed(&g).is_some());
    }
    assert_ne!(sample_planar_graph(30, 1).unwrap(), sample_planar_graph(30, 2).unwrap());
}
