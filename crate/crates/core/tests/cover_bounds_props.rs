mod common;

use common::{arb_digraph, mais_oracle};
use gicc_core::bounds::{min_feedback_vertex_set, theorem4_case2_search, Optimality};
use gicc_core::cover::{
    clique_cover, cycle_cover, gicc_cover, plan_round_trip, savings, Effort,
};
use gicc_core::generators::gen_random;
use gicc_core::{
    certify_theorem4, clique_cover_length, cycle_cover_length, mais, minrank_gf2, MessageVector,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn mais_matches_subset_enumeration(d in arb_digraph(11)) {
        let m = mais(&d).unwrap();
        prop_assert_eq!(m, mais_oracle(&d));
        let fvs = min_feedback_vertex_set(&d);
        prop_assert_eq!(fvs.len(), d.vertex_count() - m);
        prop_assert!(d.induced_subgraph(&d.all_vertices().difference(&fvs)).digraph.is_acyclic());
    }

    #[test]
    fn baselines_are_valid(d in arb_digraph(9)) {
        let cc = cycle_cover(&d);
        let mut seen = gicc_core::VertexSet::new();
        for c in &cc.cycles {
            prop_assert!(c.is_cycle() && c.is_valid_in(&d));
            for &v in &c.vertices()[1..] {
                prop_assert!(seen.insert(v));
            }
        }
        let cl = clique_cover(&d);
        let mut seen = gicc_core::VertexSet::new();
        for c in &cl.cliques {
            for u in c.iter() {
                prop_assert!(seen.insert(u));
                for w in c.iter().filter(|&w| w != u) {
                    prop_assert!(d.has_arc(u, w));
                }
            }
        }
        prop_assert_eq!(seen, d.all_vertices());
    }
}

#[test]
fn random_sweep_sandwich_and_decoding() {
    for seed in 0..200u64 {
        let n = 3 + (seed % 8) as usize;
        let p = [0.2, 0.3, 0.45][(seed % 3) as usize];
        let d = gen_random(n, p, seed).unwrap();
        let exact = gicc_cover(&d, Effort::Exhaustive, 0).unwrap();
        let greedy = gicc_cover(&d, Effort::Budget(300), seed).unwrap();
        assert_eq!(greedy, gicc_cover(&d, Effort::Budget(300), seed).unwrap());
        let m = mais(&d).unwrap();
        let (cy, cl) = (cycle_cover_length(&d), clique_cover_length(&d));
        for plan in [&exact, &greedy] {
            plan.check(&d).unwrap();
            assert_eq!(plan.length() + savings(plan), n);
            assert!(m <= plan.length() && plan.length() <= n);
            assert!(plan.length() <= cy.min(cl));
            assert!(plan_round_trip(&d, plan, &MessageVector::random(n, 16, seed)));
            for part in plan.parts() {
                assert_eq!(certify_theorem4(part.structure()), Optimality::OptimalCase1);
            }
        }
        assert!(exact.length() <= greedy.length());
        if d.arc_count() <= 16 {
            let r = minrank_gf2(&d).unwrap();
            assert!(m <= r && r <= exact.length());
        }
    }
}

#[test]
fn case2_search_is_quiet_on_validated_parts() {
    for seed in 0..40u64 {
        let d = gen_random(8, 0.35, seed).unwrap();
        for part in gicc_cover(&d, Effort::Exhaustive, 0).unwrap().parts() {
            let g = part.structure();
            assert!(theorem4_case2_search(g.digraph(), g.inner()).is_none());
        }
    }
}
