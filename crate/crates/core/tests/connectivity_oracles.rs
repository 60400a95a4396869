use edge_expand::connectivity::{
    brute_force_edge_connectivity, edge_connectivity, enumerate_cuts, global_min_cut,
    local_edge_connectivity, DEFAULT_ENUM_CAP,
};
use edge_expand::generators::random_graph;
use edge_expand::Graph;
use proptest::prelude::*;

prop_compose! {
    fn small_graph()(n in 2usize..=9, p in 0.0f64..=1.0, seed in any::<u64>()) -> Graph {
        random_graph(n, p, seed)
    }
}

/// Independent path oracle: the largest family of pairwise edge-disjoint
/// simple paths, by exhaustive search over all simple u-v paths.
fn max_disjoint_paths(g: &Graph, u: usize, v: usize) -> usize {
    fn paths(
        g: &Graph,
        x: usize,
        v: usize,
        seen: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if x == v {
            out.push(
                cur.windows(2)
                    .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                    .collect(),
            );
            return;
        }
        for &y in g.neighbors(x).unwrap() {
            if !seen[y] {
                seen[y] = true;
                cur.push(y);
                paths(g, y, v, seen, cur, out);
                cur.pop();
                seen[y] = false;
            }
        }
    }
    let mut all = Vec::new();
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    paths(g, u, v, &mut seen, &mut vec![u], &mut all);
    fn best(all: &[Vec<(usize, usize)>], i: usize, used: &mut Vec<(usize, usize)>) -> usize {
        if i == all.len() {
            return 0;
        }
        let skip = best(all, i + 1, used);
        if all[i].iter().any(|e| used.contains(e)) {
            return skip;
        }
        let mark = used.len();
        used.extend(&all[i]);
        let take = 1 + best(all, i + 1, used);
        used.truncate(mark);
        skip.max(take)
    }
    best(&all, 0, &mut Vec::new())
}

#[test]
fn path_oracle_on_bowtie_and_friends() {
    let bowtie = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    assert_eq!(max_disjoint_paths(&bowtie, 0, 4), 2);
    assert_eq!(local_edge_connectivity(&bowtie, 0, 4).unwrap().value, 2);
    for seed in 0..40 {
        let g = random_graph(6, 0.6, seed);
        for v in 1..6 {
            assert_eq!(
                local_edge_connectivity(&g, 0, v).unwrap().value,
                max_disjoint_paths(&g, 0, v),
                "seed {seed} target {v}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn three_routes_agree(g in small_graph()) {
        let flow = edge_connectivity(&g).unwrap();
        let sw = global_min_cut(&g).unwrap();
        let brute = brute_force_edge_connectivity(&g, DEFAULT_ENUM_CAP).unwrap();
        prop_assert_eq!(flow.kprime, brute.kprime);
        prop_assert_eq!(sw.size(), brute.kprime);
        prop_assert!(flow.witness.is_valid_in(&g));
        prop_assert!(sw.is_valid_in(&g));
        prop_assert!(brute.witness.is_valid_in(&g));
        prop_assert_eq!(flow.witness.size(), flow.kprime);
        prop_assert_eq!(flow.kprime == 0, !g.is_connected());
        prop_assert!(flow.kprime <= g.min_degree().unwrap());
    }

    #[test]
    fn menger_pairs(g in small_graph()) {
        let kprime = edge_connectivity(&g).unwrap().kprime;
        let mut min_pair = usize::MAX;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let r = local_edge_connectivity(&g, u, v).unwrap();
                prop_assert!(r.is_valid_witness(&g, u, v));
                min_pair = min_pair.min(r.value);
            }
        }
        prop_assert_eq!(min_pair, kprime);
    }

    #[test]
    fn no_enumerated_cut_beats_the_oracle(g in small_graph()) {
        let brute = brute_force_edge_connectivity(&g, DEFAULT_ENUM_CAP).unwrap();
        let cuts: Vec<_> = enumerate_cuts(&g, None, DEFAULT_ENUM_CAP).unwrap().collect();
        prop_assert_eq!(cuts.len(), (1usize << (g.n() - 1)) - 1);
        prop_assert!(cuts.iter().all(|c| c.size() >= brute.kprime));
        prop_assert!(cuts.iter().all(|c| c.s_side().contains(0)));
    }
}

#[test]
fn brute_force_is_independent_of_thread_count() {
    let g = random_graph(14, 0.4, 99);
    let serial = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let a = serial.install(|| brute_force_edge_connectivity(&g, DEFAULT_ENUM_CAP).unwrap());
    let b = brute_force_edge_connectivity(&g, DEFAULT_ENUM_CAP).unwrap();
    assert_eq!(a, b);
}
