use edge_expand::connectivity::{edge_connectivity, DEFAULT_ENUM_CAP};
use edge_expand::expansion::{contracted_metric, verify_theorem};
use edge_expand::format::{parse_edge_list, write_edge_list};
use edge_expand::generators::{
    instance_search, measure, random_expansion_instance, random_graph, SearchOutcome, TargetKind,
    TargetStats,
};
use edge_expand::Graph;

#[test]
fn four_vertex_three_connected_graphs_are_k4() {
    // enumerate all graphs on 4 vertices: only K4 reaches k' = 3
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let hits: Vec<Graph> = (0u32..64)
        .map(|m| {
            Graph::new(
                4,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
        .filter(|g| edge_connectivity(g).unwrap().kprime >= 3)
        .collect();
    assert_eq!(hits, vec![Graph::complete(4)]);
}

#[test]
fn expansion_instances_meet_their_g2_requirement() {
    for seed in 0..200 {
        let k = 1 + (seed % 4) as usize;
        let n2 = k + 1 + (seed % 4) as usize;
        let (g, p) = random_expansion_instance(1 + (seed % 6) as usize, n2, k, seed).unwrap();
        assert!(edge_connectivity(p.g2().graph()).unwrap().kprime >= k);
        let reparsed = parse_edge_list(&write_edge_list(&g)).unwrap();
        assert_eq!(reparsed.graph, g);
    }
}

#[test]
fn diameter_repair_happens_often() {
    let good = (0..200)
        .filter(|&seed| {
            let (g, p) = random_expansion_instance(5, 5, 3, seed).unwrap();
            contracted_metric(&g, &p).unwrap().diameter().at_most(2)
        })
        .count();
    assert!(
        good >= 100,
        "only {good} of 200 instances had contracted diameter <= 2"
    );
}

#[test]
fn random_graph_edge_density() {
    let g = random_graph(60, 0.3, 5);
    let pairs = 60 * 59 / 2;
    let density = g.edge_count() as f64 / pairs as f64;
    assert!((0.25..0.35).contains(&density), "{density}");
}

#[test]
fn search_results_reverify() {
    for id in ["1a", "1d", "2a", "2b"] {
        let target = TargetStats::figure(id).unwrap();
        let SearchOutcome::Found(f) = instance_search(&target, 100_000, 1) else {
            panic!("{id} not found");
        };
        let (stats, s) = measure(&f.graph, &f.partition, &f.s, target.kind, target.k).unwrap();
        assert!(target.matches(&stats), "{id}");
        assert_eq!(s, f.s);
        if target.kind == TargetKind::Theorem {
            let r = verify_theorem(&f.graph, &f.partition, &f.s).unwrap();
            assert!(r.applicable && !r.is_violation());
        } else {
            let brute = edge_expand::connectivity::brute_force_edge_connectivity(
                &f.graph,
                DEFAULT_ENUM_CAP,
            )
            .unwrap();
            assert_eq!(Some(brute.kprime), target.k);
        }
    }
}
