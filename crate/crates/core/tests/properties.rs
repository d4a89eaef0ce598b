mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use twindex::algebra::{parse_ring_spec, FiniteRing};
use twindex::generators::{comaximal_ideal_graph, power_graph, power_graph_zn_classes};
use twindex::graph::parse_graph;
use twindex::reduced::steiner_distance_via_classes;
use twindex::steiner::{for_each_subset_colex, steiner_distance_bruteforce};
use twindex::{
    are_twins, generalized_composition, recompose, steiner_distance, steiner_wiener_naive,
    steiner_wiener_reduced, twin_partition, CompositionSpec, Graph, GraphFormat,
};

fn sorted_classes(mut classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort();
    classes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn twin_partition_matches_pairwise_definition(seed: u64, n in 1usize..=64, dense in 0.0f64..1.0) {
        let mut rng = common::rng(seed);
        let g = if seed % 2 == 0 {
            common::random_graph(&mut rng, n, dense)
        } else {
            common::random_composition(&mut rng, n)
        };
        let d = twin_partition(&g);
        prop_assert_eq!(
            sorted_classes(d.classes().to_vec()),
            sorted_classes(common::pairwise_twin_classes(&g))
        );
        for (class, kind) in d.classes().iter().zip(d.kinds()) {
            prop_assert_eq!(class[0], *class.iter().min().unwrap());
            for &u in class {
                for &v in class {
                    if u != v {
                        prop_assert!(are_twins(&g, u, v).unwrap());
                        prop_assert_eq!(g.has_edge(u, v), kind.as_str() == "complete");
                    }
                }
            }
        }
    }

    #[test]
    fn recompose_is_inverse(seed: u64, n in 1usize..=32) {
        let mut rng = common::rng(seed);
        let g = common::random_composition(&mut rng, n);
        prop_assert_eq!(recompose(&twin_partition(&g)).unwrap(), g);
    }

    #[test]
    fn relabeling_is_equivariant(seed: u64, n in 1usize..=24) {
        let mut rng = common::rng(seed);
        let g = common::random_composition(&mut rng, n);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabeled(&perm).unwrap();
        let mapped: Vec<Vec<usize>> = twin_partition(&g)
            .classes()
            .iter()
            .map(|c| c.iter().map(|&v| perm[v]).collect())
            .collect();
        prop_assert_eq!(sorted_classes(mapped), sorted_classes(twin_partition(&h).classes().to_vec()));
        if g.is_connected() && g.n() >= 3 {
            prop_assert_eq!(steiner_wiener_reduced(&twin_partition(&g), 3).unwrap(),
                            steiner_wiener_reduced(&twin_partition(&h), 3).unwrap());
        }
    }

    #[test]
    fn reduced_matches_naive(seed: u64, n in 2usize..=11) {
        let mut rng = common::rng(seed);
        let g = common::random_composition(&mut rng, n);
        prop_assume!(g.is_connected());
        let d = twin_partition(&g);
        for m in 1..=g.n() {
            prop_assert_eq!(steiner_wiener_reduced(&d, m).unwrap(), steiner_wiener_naive(&g, m).unwrap());
        }
    }

    #[test]
    fn class_route_matches_direct_steiner_distance(seed: u64, n in 2usize..=20, k in 1usize..=6) {
        let mut rng = common::rng(seed);
        let g = common::random_composition(&mut rng, n);
        prop_assume!(g.is_connected());
        let d = twin_partition(&g);
        let mut vertices: Vec<usize> = (0..g.n()).collect();
        vertices.shuffle(&mut rng);
        vertices.truncate(k.min(g.n()));
        prop_assert_eq!(
            steiner_distance_via_classes(&d, &vertices).unwrap(),
            steiner_distance(&g, &vertices).unwrap()
        );
    }

    #[test]
    fn monotone_under_edge_addition_and_bounded(seed: u64, n in 3usize..=9, m in 2usize..=9) {
        let mut rng = common::rng(seed);
        let g = common::random_connected_graph(&mut rng, n, 0.2);
        let m = m.min(n);
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        let base = steiner_wiener_naive(&g, m).unwrap();
        let lower = (m as u128 - 1) * twindex::steiner::binomial(n, m).unwrap();
        let upper = (n as u128 - 1) * twindex::steiner::binomial(n, m).unwrap();
        prop_assert!(lower <= base && base <= upper);
        if let Some(&extra) = missing.choose(&mut rng) {
            let mut edges = g.edges();
            edges.push(extra);
            let denser = Graph::new(n, &edges).unwrap();
            prop_assert!(steiner_wiener_naive(&denser, m).unwrap() <= base);
        }
    }

    #[test]
    fn edge_list_and_json_round_trip(seed: u64, n in 0usize..=40, dense in 0.0f64..1.0) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, n, dense);
        for format in [GraphFormat::EdgeList, GraphFormat::Json] {
            let text = twindex::graph::render_graph(&g, format);
            prop_assert_eq!(&parse_graph(&text, format).unwrap(), &g);
        }
        let labeled = g.clone().with_labels((0..n).map(|i| format!("v{i}")).collect()).unwrap();
        let text = twindex::graph::render_graph(&labeled, GraphFormat::Json);
        prop_assert_eq!(parse_graph(&text, GraphFormat::Json).unwrap(), labeled);
    }

    #[test]
    fn composition_edge_count(seed: u64, k in 1usize..=6) {
        let mut rng = common::rng(seed);
        let base = common::random_graph(&mut rng, k, 0.5);
        let factors: Vec<Graph> = (0..k)
            .map(|_| {
                let size = rng.gen_range(1..=5);
                common::random_factor(&mut rng, size)
            })
            .collect();
        let expected = factors.iter().map(Graph::edge_count).sum::<usize>()
            + base.edges().iter().map(|&(i, j)| factors[i].n() * factors[j].n()).sum::<usize>();
        let spec = CompositionSpec::new(base, factors).unwrap();
        prop_assert_eq!(generalized_composition(&spec).unwrap().edge_count(), expected);
    }
}

#[test]
fn dreyfus_wagner_matches_bruteforce_exhaustively_small() {
    for (n, graphs) in common::connected_graphs_up_to_iso(7).iter().enumerate() {
        let n = n + 1;
        for g in graphs {
            for k in 1..=n {
                for_each_subset_colex(n, k, |s| {
                    assert_eq!(
                        steiner_distance(g, s).unwrap(),
                        steiner_distance_bruteforce(g, s).unwrap(),
                        "{:?} on {:?}",
                        s,
                        g.edges()
                    );
                });
            }
        }
    }
}

#[test]
fn dreyfus_wagner_matches_bruteforce_sampled() {
    let mut rng = common::rng(89);
    for i in 0..60 {
        let n = 8 + i % 2;
        let p = rng.gen_range(0.05..0.5);
        let g = common::random_connected_graph(&mut rng, n, p);
        for _ in 0..20 {
            let k = rng.gen_range(2..=n);
            let mut s: Vec<usize> = (0..n).collect();
            s.shuffle(&mut rng);
            s.truncate(k);
            assert_eq!(
                steiner_distance(&g, &s).unwrap(),
                steiner_distance_bruteforce(&g, &s).unwrap()
            );
        }
    }
}

#[test]
fn zn_divisor_classes_lie_inside_twin_classes() {
    for n in 2..=72 {
        let g = power_graph(&twindex::algebra::FiniteGroup::cyclic(n).unwrap()).graph;
        let d = twin_partition(&g);
        for class in power_graph_zn_classes(n).unwrap() {
            let first = d.class_of(class.members[0]);
            assert!(
                class.members.iter().all(|&x| d.class_of(x) == first),
                "Z{n}: divisor {} split across twin classes",
                class.divisor
            );
        }
    }
}

#[test]
fn comaximal_graphs_of_non_local_rings_are_connected() {
    let specs = [
        "Z6",
        "Z10",
        "Z12",
        "Z30",
        "Z2xZ2",
        "Z2xZ2xZ2",
        "Z2xZ2xZ4",
        "Z8xZ9",
        "Z3xZ5xZ9",
        "Z4xZ9",
        "Z2[x]/(x^3)xZ2",
        "Z2[x]/(x^2+x+1)xZ3",
    ];
    for spec in specs {
        let r: FiniteRing = parse_ring_spec(spec).unwrap();
        let g = comaximal_ideal_graph(&r).unwrap().graph;
        assert!(g.n() >= 2, "{spec}");
        assert!(g.is_connected(), "{spec}");
    }
    assert!(comaximal_ideal_graph(&parse_ring_spec("Z8").unwrap()).is_err());
}

#[test]
fn reduced_value_does_not_depend_on_vertex_order() {
    let mut rng = common::rng(7);
    for _ in 0..40 {
        let g = common::random_composition(&mut rng, 12);
        if !g.is_connected() {
            continue;
        }
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabeled(&perm).unwrap();
        for m in 2..=g.n().min(5) {
            assert_eq!(
                steiner_wiener_reduced(&twin_partition(&g), m).unwrap(),
                steiner_wiener_reduced(&twin_partition(&h), m).unwrap()
            );
        }
    }
}
