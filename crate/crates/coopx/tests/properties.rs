//! Property suite: the structural invariants every component promises, run
//! against seeded random graphs and instances.
//!
//! Strategies sample a seed and size parameters, then build inputs through
//! the library's own deterministic generators, so failures shrink to a
//! small reproducible (seed, n, k) triple.

use std::collections::BTreeSet;

use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use coopx::bounds::lower_bounds;
use coopx::domset::{
    connect_set, exact_set, exact_vbar_self, greedy_dominating_set, harmonic,
    vbar_self_dominating_set, verify_cover, SetKind,
};
use coopx::generators::{
    counterexample_instance, hardness_instance, named_graph, random_connected_graph,
    random_instance,
};
use coopx::graph::Graph;
use coopx::instance::Instance;
use coopx::io;
use coopx::lp::{
    build_augmented_program, build_cover_program, solve_lp, CoverVariant, NeighborhoodKind,
};
use coopx::rational::{rat_int, Rat};
use coopx::report::{instance_report, ReportOptions};
use coopx::scheduler::{baseline_schedule, refined_schedule, SetGrade};
use coopx::simulator::{brute_force_nc, simulate, verify_complete, OracleLimits, OracleMode};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 2..=max_n, 0.1f64..0.6).prop_map(|(seed, n, p)| {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        random_connected_graph(n, p, &mut rng).expect("sampled parameters are valid")
    })
}

fn arb_instance(max_n: usize, max_k: usize) -> impl Strategy<Value = Instance> {
    (any::<u64>(), 2..=max_n, 1..=max_k, 0.0f64..0.6).prop_map(|(seed, n, k, hp)| {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        random_instance(n, k, 0.4, hp, &mut rng).expect("sampled parameters are valid")
    })
}

// ---- covering programs ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_identity_holds_for_both_neighborhood_kinds(g in arb_graph(10)) {
        for k in [2usize, 3] {
            let closed = solve_lp(&build_cover_program(&g, CoverVariant::DsF).unwrap()).unwrap();
            let k_closed =
                solve_lp(&build_cover_program(&g, CoverVariant::KDsF(k)).unwrap()).unwrap();
            prop_assert_eq!(k_closed.value, rat_int(k as i64) * &closed.value);

            let open =
                solve_lp(&build_cover_program(&g, CoverVariant::DsPlusF).unwrap()).unwrap();
            let k_open =
                solve_lp(&build_cover_program(&g, CoverVariant::KDsPlusF(k)).unwrap()).unwrap();
            prop_assert_eq!(k_open.value, rat_int(k as i64) * &open.value);
        }
    }

    #[test]
    fn closed_cover_never_exceeds_open_cover(g in arb_graph(10)) {
        let closed = solve_lp(&build_cover_program(&g, CoverVariant::DsF).unwrap()).unwrap();
        let open = solve_lp(&build_cover_program(&g, CoverVariant::DsPlusF).unwrap()).unwrap();
        prop_assert!(closed.value <= open.value);
    }

    #[test]
    fn certificates_verify_on_every_program(inst in arb_instance(10, 4)) {
        let g = inst.graph();
        for variant in [CoverVariant::DsF, CoverVariant::DsPlusF, CoverVariant::KDsF(3)] {
            let program = build_cover_program(g, variant).unwrap();
            let cover = solve_lp(&program).unwrap();
            prop_assert!(cover.verify(&program).is_ok());
        }
        let program = build_augmented_program(&inst).unwrap();
        let cover = solve_lp(&program).unwrap();
        prop_assert!(cover.verify(&program).is_ok());
    }

    #[test]
    fn deficiency_sandwich_below_augmented_cover(inst in arb_instance(10, 4)) {
        let open = solve_lp(&build_cover_program(inst.graph(), CoverVariant::DsPlusF).unwrap())
            .unwrap()
            .value;
        let augmented = solve_lp(&build_augmented_program(&inst).unwrap()).unwrap().value;
        let deficiency = rat_int(inst.k() as i64) - rat_int(inst.d_max() as i64);
        let lower = if deficiency > Rat::zero() {
            deficiency * open
        } else {
            Rat::zero()
        };
        prop_assert!(lower <= augmented);
    }
}

// ---- dominating sets ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_cover_within_harmonic_of_fractional(g in arb_graph(10)) {
        let fractional =
            solve_lp(&build_cover_program(&g, CoverVariant::DsF).unwrap()).unwrap().value;
        let greedy = greedy_dominating_set(&g).unwrap();
        verify_cover(&g, &greedy.members, NeighborhoodKind::Closed, &vec![1; g.n()]).unwrap();
        let cap = harmonic(g.degree_stats().max + 1) * fractional;
        prop_assert!(rat_int(greedy.members.len() as i64) <= cap);
    }

    #[test]
    fn connectivity_patch_is_bounded_and_sound(g in arb_graph(10)) {
        let greedy = greedy_dominating_set(&g).unwrap();
        let connected = connect_set(&g, &greedy.members).unwrap();
        prop_assert!(connected.is_superset(&greedy.members));
        prop_assert!(connected.len() <= 3 * greedy.members.len() - 2);
        verify_cover(&g, &connected, NeighborhoodKind::Closed, &vec![1; g.n()]).unwrap();
        let pieces = g.connected_components(&connected).unwrap();
        prop_assert_eq!(pieces.len(), 1);
    }

    #[test]
    fn exact_sets_never_beat_their_greedy_counterparts(g in arb_graph(8)) {
        let greedy = greedy_dominating_set(&g).unwrap();
        let exact_ds = exact_set(&g, SetKind::Ds).unwrap();
        prop_assert!(exact_ds.size() <= greedy.members.len());

        let patched = connect_set(&g, &greedy.members).unwrap();
        let exact_cds = exact_set(&g, SetKind::Cds).unwrap();
        prop_assert!(exact_cds.size() <= patched.len());
        // connectivity can only cost more
        prop_assert!(exact_ds.size() <= exact_cds.size());
    }

    #[test]
    fn merged_holder_relays_leave_no_orphan_piece(
        (g, holder_mask) in arb_graph(8).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), 1usize..(1 << n))
        }),
    ) {
        let holders: BTreeSet<usize> =
            (0..g.n()).filter(|v| holder_mask >> v & 1 == 1).collect();
        let greedy = vbar_self_dominating_set(&g, &holders).unwrap();
        let exact = exact_vbar_self(&g, &holders).unwrap();
        prop_assert!(exact.size() <= greedy.size());
        for relay in [&greedy.members, &exact.members] {
            prop_assert!(!relay.is_disjoint(&holders));
            for piece in g.connected_components(relay).unwrap() {
                prop_assert!(piece.iter().any(|v| holders.contains(v)));
            }
        }
    }
}

// ---- lower bounds ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bound_report_is_internally_consistent(inst in arb_instance(10, 4)) {
        let report = lower_bounds(&inst).unwrap();
        let augmented = report.entry("augmented_cover").unwrap();
        prop_assert!(augmented.applicable);
        for entry in &report.entries {
            if entry.applicable {
                prop_assert!(entry.value <= report.best);
            } else {
                prop_assert!(entry.note.is_some());
            }
        }
        prop_assert!(report.best >= Rat::zero());
        let rounds = rat_int(report.best_rounds as i64);
        prop_assert!(rounds >= report.best && &rounds - rat_int(1) < report.best);
    }
}

// ---- schedulers and simulator ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_schedules_complete_with_monotone_ranks(inst in arb_instance(9, 4)) {
        for grade in [SetGrade::Greedy, SetGrade::Exact] {
            let schedules = [
                baseline_schedule(&inst, grade).unwrap().schedule,
                refined_schedule(&inst, grade).unwrap().schedule,
            ];
            for schedule in schedules {
                prop_assert!(verify_complete(&inst, &schedule).unwrap().complete);
                let trace = simulate(&inst, &schedule).unwrap();
                prop_assert_eq!(trace.len(), schedule.len() + 1);
                for v in 0..inst.n() {
                    prop_assert_eq!(trace[0].ranks[v], inst.holdings()[v].len());
                    for w in trace.windows(2) {
                        prop_assert!(w[0].ranks[v] <= w[1].ranks[v]);
                        prop_assert!(w[1].ranks[v] <= inst.k());
                    }
                }
                let last = trace.last().unwrap();
                prop_assert!(last.ranks.iter().all(|&r| r == inst.k()));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn coding_never_hurts_and_witnesses_replay(inst in arb_instance(5, 3)) {
        let (uncoded, uncoded_witness) =
            brute_force_nc(&inst, OracleMode::Uncoded, None).unwrap();
        let (coded, coded_witness) = brute_force_nc(&inst, OracleMode::Coded, None).unwrap();
        prop_assert!(coded <= uncoded);
        prop_assert_eq!(uncoded_witness.len(), uncoded);
        prop_assert_eq!(coded_witness.len(), coded);
        prop_assert!(verify_complete(&inst, &uncoded_witness).unwrap().complete);
        prop_assert!(verify_complete(&inst, &coded_witness).unwrap().complete);

        let best = lower_bounds(&inst).unwrap().best;
        prop_assert!(best <= rat_int(coded as i64));
    }

    #[test]
    fn a_single_packet_gains_nothing_from_coding(
        (seed, n) in (any::<u64>(), 2usize..=6),
    ) {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let inst = random_instance(n, 1, 0.4, 0.2, &mut rng).unwrap();
        // With one packet the coded search space collapses (every nonzero
        // coefficient vector spans the same line), so lifting the default
        // vertex cap to n = 6 stays cheap.
        let limits = OracleLimits { max_n: 6, max_k: 1 };
        let (uncoded, _) = brute_force_nc(&inst, OracleMode::Uncoded, None).unwrap();
        let (coded, _) = brute_force_nc(&inst, OracleMode::Coded, Some(limits)).unwrap();
        prop_assert_eq!(coded, uncoded);
    }
}

// ---- interchange formats and reports ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn instance_json_round_trips_exactly(inst in arb_instance(10, 4)) {
        let json = io::instance_to_json(&inst).unwrap();
        let back = io::instance_from_json(&json).unwrap();
        prop_assert_eq!(back.k(), inst.k());
        prop_assert_eq!(back.graph().edges(), inst.graph().edges());
        prop_assert_eq!(back.holdings(), inst.holdings());
        prop_assert_eq!(back.tag(), inst.tag());
        // serialization is deterministic: a second pass is byte-identical
        prop_assert_eq!(io::instance_to_json(&back).unwrap(), json);
    }

    #[test]
    fn schedule_json_round_trips_exactly(inst in arb_instance(8, 3)) {
        let schedule = baseline_schedule(&inst, SetGrade::Greedy).unwrap().schedule;
        let json = io::schedule_to_json(&schedule).unwrap();
        let back = io::schedule_from_json(&json).unwrap();
        prop_assert_eq!(back, schedule);
    }

    #[test]
    fn reports_are_deterministic_and_self_consistent(inst in arb_instance(8, 3)) {
        let opts = ReportOptions::default();
        let a = instance_report(&inst, &opts).unwrap();
        let b = instance_report(&inst, &opts).unwrap();
        prop_assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
        prop_assert!(a.all_checks_passed);
        if let Some(ratio) = &a.ratio {
            prop_assert!(ratio.to_rat() >= rat_int(1));
        }
    }
}

// ---- generator structure ----

#[test]
fn gap_construction_has_the_promised_holding_profile() {
    for m in 1..=4 {
        for k in [2usize, 3, 5] {
            let inst = counterexample_instance(m, k).unwrap();
            assert_eq!(inst.n(), 2 * m * k);
            let small = m * k;
            for v in 0..small {
                assert_eq!(inst.holdings()[v].len(), k - 1, "small-part vertex {v}");
                assert!(
                    !inst.holdings()[v].contains(&(v % k)),
                    "vertex {v} misses its packet"
                );
            }
            assert_eq!(inst.holdings()[small].len(), k, "the hub holds everything");
            for v in small + 1..inst.n() {
                assert!(
                    inst.holdings()[v].is_empty(),
                    "big-part vertex {v} holds nothing"
                );
            }
        }
    }
}

#[test]
fn hub_construction_has_the_promised_shape() {
    for (base_name, k) in [("path(3)", 2), ("cycle(5)", 3), ("k23_plus_edge", 2)] {
        let base = named_graph(base_name).unwrap();
        let inst = hardness_instance(&base, k).unwrap();
        assert_eq!(inst.n(), base.n() * k + 1);
        assert_eq!(
            inst.graph().edges().len(),
            k * base.edges().len() + k,
            "k base copies plus one hub edge each"
        );
        assert!(inst.holdings()[0].is_empty(), "the hub holds nothing");
        let full = (0..inst.n())
            .filter(|&v| inst.holdings()[v].len() == k)
            .count();
        assert_eq!(full, k, "one all-knowing designated vertex per copy");
        let empty = (0..inst.n())
            .filter(|&v| inst.holdings()[v].is_empty())
            .count();
        assert_eq!(empty, 1, "only the hub starts empty (k >= 2)");
    }
}
