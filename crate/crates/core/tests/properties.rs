use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use medianlab::amalgam::gated_amalgam;
use medianlab::burling::Box3;
use medianlab::coloring::{is_clique, is_proper};
use medianlab::events::random_event_structure_seeded;
use medianlab::lifting::{class_census, lifted_contact_graph};
use medianlab::metric::{is_median, MedianMode};
use medianlab::*;

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap()
}

/// Trees, grids, and two grids glued along an edge.
fn random_median_graph(seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match rng.gen_range(0..3) {
        0 => {
            let n = rng.gen_range(2..14);
            random_tree(&mut rng, n)
        }
        1 => {
            let axes = rng.gen_range(1..=3);
            let dims: Vec<usize> = (0..axes).map(|_| rng.gen_range(2..=3)).collect();
            Graph::grid(&dims)
        }
        _ => {
            let grid = Graph::grid(&[rng.gen_range(2..=3), rng.gen_range(2..=3)]);
            let other = Graph::grid(&[2, rng.gen_range(2..=3)]);
            let (u, v) = grid.edge(rng.gen_range(0..grid.edge_count()));
            gated_amalgam(&grid, &other, &[(u, 0), (v, 1)]).unwrap().graph
        }
    }
}

fn random_graph(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

fn random_family(seed: u64, m: usize, side: i64) -> BoxHypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let boxes = (0..m)
        .map(|_| {
            let mut r = [[0i64; 2]; 3];
            for axis in &mut r {
                let a = rng.gen_range(0..side);
                *axis = [a, rng.gen_range(a + 1..=side)];
            }
            Box3::from_ints(r[0], r[1], r[2])
        })
        .collect();
    BoxHypergraph::new(boxes, Box3::from_ints([0, side], [0, side], [0, side])).unwrap()
}

fn partition(t: &ThetaStructure) -> BTreeSet<Vec<usize>> {
    t.classes().iter().cloned().collect()
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn theta_partition_does_not_depend_on_the_basepoint(seed in any::<u64>(), a in any::<usize>(), b in any::<usize>()) {
        let g = random_median_graph(seed);
        let n = g.vertex_count();
        let ta = theta_classes(&g, a % n).unwrap();
        let tb = theta_classes(&g, b % n).unwrap();
        prop_assert_eq!(partition(&ta), partition(&tb));
    }

    #[test]
    fn orientation_is_coherent_and_graphs_nest(seed in any::<u64>(), a in any::<usize>()) {
        let g = random_median_graph(seed);
        let bp = a % g.vertex_count();
        let t = theta_classes(&g, bp).unwrap();
        let og = OrientedGraph::new(g.clone(), bp).unwrap();
        prop_assert!(t.orientation_is_coherent(&og));
        let (cross, pointed, contact) = (crossing_graph(&t), pointed_contact_graph(&og, &t), contact_graph(&t));
        prop_assert!(edge_set(&cross).is_subset(&edge_set(&pointed)));
        prop_assert!(edge_set(&pointed).is_subset(&edge_set(&contact)));
    }

    #[test]
    fn gated_amalgams_of_median_graphs_are_median(s1 in any::<u64>(), s2 in any::<u64>(), pick in any::<usize>()) {
        let g1 = random_median_graph(s1);
        let g2 = random_median_graph(s2);
        // glue at a single vertex, which is always gated
        let a = gated_amalgam(&g1, &g2, &[(pick % g1.vertex_count(), 0)]).unwrap();
        prop_assert!(is_median(&a.graph, MedianMode::Exhaustive).unwrap().is_median());
        prop_assert_eq!(a.graph.vertex_count(), g1.vertex_count() + g2.vertex_count() - 1);
    }

    #[test]
    fn coloring_bounds_sandwich(seed in any::<u64>(), n in 1usize..14, p in 0.1f64..0.9) {
        let g = random_graph(seed, n, p);
        let r = chromatic_number(&g, Budget::unlimited());
        let greedy = greedy_coloring(&g, GreedyOrder::Degeneracy).unwrap();
        let clique = max_clique(&g, Budget::unlimited());
        prop_assert!(r.optimal && clique.exact);
        prop_assert!(is_proper(&g, &r.colors) && is_proper(&g, &greedy.colors));
        prop_assert!(is_clique(&g, &clique.clique) && is_clique(&g, &r.clique));
        prop_assert!(clique.clique.len() <= r.count && r.count <= greedy.count);
        prop_assert_eq!(r.colors.iter().collect::<BTreeSet<_>>().len(), r.count);
    }

    #[test]
    fn pairwise_intersecting_boxes_share_a_point(seed in any::<u64>(), m in 2usize..5) {
        let bh = random_family(seed, m, 6);
        let pairwise = (0..m).all(|i| (i + 1..m).all(|j| boxes_intersect(&bh.boxes[i], &bh.boxes[j])));
        let common = (0..3).all(|k| {
            let lo = bh.boxes.iter().map(|b| b.lo(k)).max().unwrap();
            let hi = bh.boxes.iter().map(|b| b.hi(k)).min().unwrap();
            lo <= hi
        });
        prop_assert_eq!(pairwise, common);
    }

    #[test]
    fn snapping_and_compacting_keep_the_intersection_graph(seed in any::<u64>(), m in 1usize..9) {
        let bh = random_family(seed, m, 9);
        let ig = intersection_graph(&bh);
        let snapped = snap_to_grid(&bh);
        let compacted = compact(&bh);
        prop_assert_eq!(edge_set(&intersection_graph(&snapped)), edge_set(&ig));
        prop_assert_eq!(edge_set(&intersection_graph(&compacted)), edge_set(&ig));
        prop_assert_eq!(edge_set(&intersection_graph(&compact(&compacted))), edge_set(&ig));
        prop_assert_eq!(compact(&compacted), compacted);
    }

    #[test]
    fn lifts_pass_the_structural_checks(seed in any::<u64>(), m in 1usize..5) {
        let bh = random_family(seed, m, 4);
        let lg = lift_family(&bh).unwrap();
        let og = orient_at_alpha(&lg).unwrap();
        let t = theta_classes(&lg.graph, lg.alpha).unwrap();
        let census = class_census(&lg, &t).unwrap();
        prop_assert!(verify_lemma_crossing(&lg).is_none());
        prop_assert_eq!(verify_lemma_intersection(&og, &t, &census, &bh), None);
        let omega = max_clique(&intersection_graph(&bh), Budget::unlimited()).clique.len();
        prop_assert!(verify_lemma_degree(&lg, &og, omega).holds);
        let chi_lifted = chromatic_number(&lifted_contact_graph(&og, &t, &census), Budget::unlimited()).count;
        let chi_pointed = chromatic_number(&pointed_contact_graph(&og, &t), Budget::unlimited()).count;
        prop_assert!(chi_pointed >= chi_lifted);
    }

    #[test]
    fn domains_are_down_closed_and_conflict_free(seed in any::<u64>(), n in 1usize..9) {
        let es = random_event_structure_seeded(n, 0.25, 0.3, seed);
        prop_assert!(validate(&es).is_none());
        let d = domain(&es, 10_000).unwrap();
        let all: BTreeSet<Vec<usize>> = d.configurations.iter().map(|c| c.iter().collect()).collect();
        prop_assert_eq!(all.len(), d.configurations.len());
        // brute force over all subsets
        let brute = (0u32..1 << n)
            .filter(|&mask| {
                let inside = |e: usize| mask >> e & 1 == 1;
                (0..n).filter(|&e| inside(e)).all(|e| {
                    (0..n).all(|f| !es.leq(f, e) || inside(f)) && (0..n).all(|f| !inside(f) || !es.in_conflict(e, f))
                })
            })
            .count();
        prop_assert_eq!(brute, d.configurations.len());
    }

    #[test]
    fn roundtrips_and_bridge_agree(seed in any::<u64>(), n in 1usize..8, colors in 1usize..5) {
        let es = random_event_structure_seeded(n, 0.2, 0.3, seed);
        prop_assert!(roundtrip_events(&es, 10_000).unwrap().ok);
        let d = domain(&es, 10_000).unwrap();
        let t = theta_classes(d.graph(), 0).unwrap();
        prop_assert!(roundtrip_pointed(&d.oriented, &t, 10_000).unwrap().ok);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coloring: Vec<Option<usize>> = (0..t.class_count()).map(|_| Some(rng.gen_range(0..colors))).collect();
        let v = labeling_edge_coloring_bridge(&d.oriented, &t, &coloring).unwrap();
        prop_assert!(v.agree());
    }
}
