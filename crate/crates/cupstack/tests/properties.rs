mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{adjacency, brute_matching_size, brute_saturating, random_connected};
use cupstack::cube::{phi, plan_low_subcube, revolving_door, SubcubeHandle};
use cupstack::ecc2::{ecc2_decide, plan_from_matching};
use cupstack::families::{plan_cycle, plan_grid, plan_path};
use cupstack::graph::to_text;
use cupstack::matching::{hungarian_max_weight, max_matching, WeightedBipartite};
use cupstack::{
    legal_move, parse_graph, verify_plan, Configuration, Graph, Hypercube, Move, Plan, Verdict,
};

fn graph(seed: u64, n: usize, p: f64) -> Graph {
    random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn moves_conserve_cups(seed: u64, n in 2usize..10, counts in prop::collection::vec(0u64..5, 10), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..12)) {
        let g = graph(seed, n, 0.3);
        let mut c = Configuration::from_counts(counts[..n].to_vec());
        let total = c.size();
        for pick in picks {
            let legal: Vec<Move> = (0..n).flat_map(|u| (0..n).map(move |v| Move::new(u, v))).filter(|&m| legal_move(&g, &c, m)).collect();
            if legal.is_empty() {
                break;
            }
            let mv = *pick.get(&legal);
            let before = (c.get(mv.from), c.get(mv.to));
            c.play(&g, mv).unwrap();
            prop_assert_eq!(c.size(), total);
            prop_assert_eq!(c.get(mv.from), 0);
            prop_assert_eq!(c.get(mv.to), before.0 + before.1);
            prop_assert_eq!(before.0 as usize, g.dist(mv.from, mv.to));
        }
    }

    #[test]
    fn plan_json_round_trip(n in 1usize..50, target: prop::sample::Index, moves in prop::collection::vec((0usize..50, 0usize..50), 0..20), with_initial: bool) {
        let mut plan = Plan::new(n, target.index(n), moves.into_iter().map(|(a, b)| Move::new(a % n, b % n)).collect());
        if with_initial {
            plan.initial = Some((0..n as u64).collect());
        }
        prop_assert_eq!(Plan::from_json(&plan.to_json()).unwrap(), plan);
    }

    #[test]
    fn graph_text_round_trip(seed: u64, n in 1usize..30, p in 0.0f64..0.5) {
        let g = graph(seed, n, p);
        prop_assert_eq!(parse_graph(&to_text(&g)).unwrap(), g);
    }

    #[test]
    fn blossom_is_maximum(seed: u64, n in 1usize..12, p in 0.05f64..0.6) {
        let g = graph(seed, n, p);
        let m = max_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(m.size(), brute_matching_size(&adjacency(&g), ((1u32 << n) - 1) as u16));
    }

    #[test]
    fn ecc2_matches_saturating_matchings(seed: u64, n in 3usize..13, p in 0.2f64..0.7) {
        let g = graph(seed, n, p);
        let adj = adjacency(&g);
        for r in (0..n).filter(|&r| g.eccentricity(r) == 2) {
            let far = (0..n).filter(|&v| g.dist(r, v) == 2).fold(0u16, |m, v| m | 1 << v);
            let alive = ((1u32 << n) - 1) as u16 & !(1 << r);
            let w = ecc2_decide(&g, r).unwrap();
            prop_assert_eq!(w.decision, brute_saturating(&adj, alive, far));
            if let Some(m) = &w.matching {
                prop_assert_eq!(verify_plan(&g, &plan_from_matching(&g, r, m).unwrap()), Verdict::Accept);
            }
        }
    }

    #[test]
    fn hungarian_beats_every_permutation(weights in prop::collection::vec(prop::collection::vec(-30i64..30, 6), 6), side in 1usize..7, perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle()) {
        let w: Vec<Vec<i64>> = weights[..side].iter().map(|row| row[..side].to_vec()).collect();
        let best = hungarian_max_weight(&WeightedBipartite::new(w.clone()).unwrap());
        let other: Vec<usize> = perm.into_iter().filter(|&j| j < side).collect();
        let theirs: i64 = other.iter().enumerate().map(|(i, &j)| w[i][j]).sum();
        prop_assert!(best.weight >= theirs);
    }

    #[test]
    fn phi_drops_one_element(n in 1u32..64, bits: u64) {
        let set = bits & (u64::MAX >> (64 - n));
        let image = phi(n, set);
        if 2 * set.count_ones() > n {
            let y = image.unwrap();
            prop_assert_eq!(y & !set, 0);
            prop_assert_eq!(y.count_ones() + 1, set.count_ones());
        } else {
            prop_assert!(image.is_err());
        }
    }

    #[test]
    fn revolving_door_is_a_cycle(m in 3u32..15, k in 1u32..14) {
        prop_assume!(k < m);
        let cycle = revolving_door(m, k).unwrap();
        let mut sorted = cycle.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), cycle.len());
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            prop_assert_eq!((a & b).count_ones(), k - 1);
        }
    }

    #[test]
    fn low_subcubes_stack_anywhere(d in 3u32..16, k in 0u32..4, bits: u64) {
        prop_assume!(k <= d);
        let label = (bits as usize) & ((1usize << (d - k)) - 1);
        let h = SubcubeHandle::in_split(d, k, label);
        match plan_low_subcube(&h) {
            Ok(moves) => {
                let q = Hypercube::new(d);
                let mut cups: Vec<(usize, u64)> = h.vertices().map(|v| (v, 1)).collect();
                if h.base != 0 {
                    cups.push((0, 1));
                }
                prop_assert_eq!(cupstack::game::verify_fragment(&q, cups, 0, &moves), Verdict::Accept);
            }
            Err(_) => prop_assert!(h.level() > 1 << k || (k, h.level()) == (3, 4)),
        }
    }

    #[test]
    fn line_and_grid_planners(n in 1usize..80, m in 1usize..15, k in 1usize..15, t: prop::sample::Index) {
        let p = plan_path(n, t.index(n)).unwrap();
        prop_assert_eq!(p.moves.len(), n - 1);
        prop_assert_eq!(verify_plan(&Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap(), &p), Verdict::Accept);
        if n >= 3 {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let c = plan_cycle(n, t.index(n)).unwrap();
            prop_assert_eq!(verify_plan(&Graph::from_edges(n, &edges).unwrap(), &c), Verdict::Accept);
        }
        let cell = t.index(m * k);
        let g = cupstack::families::generate(&cupstack::families::FamilySpec::Grid { m, k }).unwrap().graph;
        prop_assert_eq!(verify_plan(&g, &plan_grid(m, k, cell % m, cell / m).unwrap()), Verdict::Accept);
    }
}
