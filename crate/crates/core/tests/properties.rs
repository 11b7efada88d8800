mod common;

use cocomp_lexdfs::generate::{gen_random_cocomp, transitive_closure, Instance, PosetSpec};
use cocomp_lexdfs::layers::{peel_layers, ClassOrder};
use cocomp_lexdfs::reference::{lexdfs_generic, lexdfs_plus_oracle, lexdfs_traced, TieRule};
use cocomp_lexdfs::refine::{run, Options, RefinableClass};
use cocomp_lexdfs::verify::{
    brute_force_cocomp_order, check_4pc, check_flipping, check_label_order, check_partition, check_umbrella_free,
};
use cocomp_lexdfs::{cclexdfs, Graph, Mode, Ordering, WorkCounters};
use common::{adjacency, naive_classes, naive_pipeline, refine_by_segments};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let k = pairs.len();
        (
            Just(n),
            Just(pairs),
            proptest::collection::vec(any::<bool>(), k),
            Just(()),
        )
            .prop_map(|(n, pairs, keep, _)| {
                let edges: Vec<_> = pairs
                    .into_iter()
                    .zip(keep)
                    .filter(|(_, k)| *k)
                    .map(|(e, _)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A generated cocomparability instance with vertex ids shuffled, so that σ
/// is not the identity.
fn arb_instance(max_n: usize) -> impl Strategy<Value = Instance> {
    (2..=max_n, prop::sample::select(vec![0.1, 0.3, 0.5, 0.8]), any::<u64>()).prop_flat_map(|(n, p, seed)| {
        let inst = gen_random_cocomp(&PosetSpec::new(n, p, seed).unwrap());
        arb_perm(n).prop_map(move |perm| {
            let edges: Vec<_> = inst.graph.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
            let sigma = Ordering::new(inst.sigma.as_slice().iter().map(|&v| perm[v]).collect()).unwrap();
            Instance {
                graph: Graph::from_edges(n, &edges).unwrap(),
                sigma,
            }
        })
    })
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_text_roundtrip(g in arb_graph(12)) {
        let back = Graph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn ordering_roundtrip_and_reverse(perm in (1usize..20).prop_flat_map(arb_perm)) {
        let o = Ordering::new(perm).unwrap();
        prop_assert_eq!(Ordering::parse(&o.to_text()).unwrap(), o.clone());
        prop_assert_eq!(o.reverse().reverse(), o.clone());
        for i in 0..o.len() {
            prop_assert_eq!(o.position(o.at(i)), i);
        }
    }

    #[test]
    fn reorder_adjacency_sorts_and_preserves(g in arb_graph(12), seed in any::<u64>()) {
        let n = g.n();
        let mut seq: Vec<usize> = (0..n).collect();
        seq.rotate_left((seed as usize) % n);
        let pi = Ordering::new(seq).unwrap();
        let (sorted, touches) = g.reorder_adjacency(&pi);
        prop_assert!(touches <= n + 2 * g.m());
        prop_assert_eq!(sorted.m(), g.m());
        for v in 0..n {
            let nb = sorted.neighbors(v);
            prop_assert!(nb.windows(2).all(|w| pi.precedes(w[0], w[1])));
            let mut a = nb.to_vec();
            let mut b = g.neighbors(v).to_vec();
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn generic_lexdfs_satisfies_4pc(g in arb_graph(10), perm in arb_perm(10)) {
        let n = g.n();
        let ref_ord = Ordering::new(perm.into_iter().filter(|&v| v < n).collect()).unwrap();
        for tie in [TieRule::Leftmost(ref_ord.clone()), TieRule::Rightmost(ref_ord.clone())] {
            let (ord, steps) = lexdfs_traced(&g, None, &tie);
            prop_assert!(check_4pc(&g, &ord).is_ok());
            prop_assert_eq!(ord.clone(), lexdfs_generic(&g, &tie));
            prop_assert_eq!(steps.len(), n);
        }
    }

    #[test]
    fn cursor_refinement_equals_segment_scan(
        g in arb_graph(10),
        pivots in proptest::collection::vec(0usize..10, 0..6),
        cut in 1usize..10,
    ) {
        let n = g.n();
        let cut = cut.min(n);
        let class: Vec<usize> = (n - cut..n).collect();
        let adj = adjacency(&g);
        let pivots: Vec<usize> = pivots.into_iter().filter(|&p| p < n - cut).collect();
        let mut rc = RefinableClass::new(n);
        rc.load(&class);
        for &p in &pivots {
            rc.apply_pivot(class.iter().copied().filter(|&w| adj[p][w]));
        }
        let segs: Vec<Vec<usize>> = rc.layout().into_iter().map(|s| s.members).collect();
        let expect = refine_by_segments(&class, &pivots, &adj);
        // equal as ordered set-partitions
        let norm = |v: Vec<Vec<usize>>| v.into_iter().map(|mut s| { s.sort_unstable(); s }).collect::<Vec<_>>();
        prop_assert_eq!(norm(segs), norm(expect));
        let mut all = rc.to_vec();
        all.sort_unstable();
        prop_assert_eq!(all, class);
    }

    #[test]
    fn cclexdfs_properties(inst in arb_instance(40)) {
        let (g, sigma) = (&inst.graph, &inst.sigma);
        prop_assert!(check_umbrella_free(g, sigma).is_ok());
        for mode in [Mode::Default, Mode::Plus] {
            let r = run(g, sigma, mode.into());
            prop_assert!(check_umbrella_free(g, &r.tau).is_ok());
            prop_assert!(check_4pc(g, &r.tau).is_ok());
            prop_assert!(check_flipping(g, sigma, &r.tau).is_ok());
            prop_assert!(check_partition(g, sigma, &r.layering.partition).is_ok());
            let (n, m) = (g.n(), g.m());
            prop_assert!(r.counters.label_touches <= n + 2 * m);
            prop_assert!(r.counters.bin_moves <= m);
            prop_assert!(r.counters.pivot_pushes <= m);
            prop_assert!(r.counters.refine_moves <= m);
        }
    }

    #[test]
    fn plus_mode_equals_oracle(inst in arb_instance(40)) {
        let tau = cclexdfs(&inst.graph, &inst.sigma, Mode::Plus);
        prop_assert_eq!(tau, lexdfs_plus_oracle(&inst.graph, &inst.sigma));
    }

    #[test]
    fn fast_pipeline_equals_naive(inst in arb_instance(30)) {
        for (order, rev) in [(ClassOrder::Sigma, false), (ClassOrder::ReverseSigma, true)] {
            let classes = naive_classes(&inst.graph, &inst.sigma, rev);
            let tau = run(&inst.graph, &inst.sigma, Options { class_order: order, trace: false }).tau;
            prop_assert_eq!(tau.into_vec(), naive_pipeline(&inst.graph, &classes));
        }
    }

    #[test]
    fn labels_order_non_edges_at_every_layer(inst in arb_instance(30)) {
        let mut failures = Vec::new();
        peel_layers(&inst.graph, &inst.sigma, ClassOrder::Bins, &mut WorkCounters::default(), |snap| {
            if let Err(v) = check_label_order(&inst.graph, &inst.sigma, snap.labels) {
                failures.push((snap.index, v));
            }
        });
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn violations_reproduce(g in arb_graph(9), perm in arb_perm(9)) {
        let n = g.n();
        let ord = Ordering::new(perm.into_iter().filter(|&v| v < n).collect()).unwrap();
        if let Err(v) = check_umbrella_free(&g, &ord) {
            prop_assert!(v.holds(&g, &ord, None, None));
        }
        if let Err(v) = check_4pc(&g, &ord) {
            prop_assert!(v.holds(&g, &ord, None, None));
        }
        let sigma = Ordering::identity(n);
        if let Err(v) = check_flipping(&g, &sigma, &ord) {
            prop_assert!(v.holds(&g, &ord, Some(&sigma), None));
        }
    }

    #[test]
    fn generator_is_deterministic_and_closed(n in 1usize..30, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let spec = PosetSpec::new(n, p, seed).unwrap();
        let a = gen_random_cocomp(&spec);
        prop_assert_eq!(&a, &gen_random_cocomp(&spec));
        // incomparable pairs form the edges; closure must be transitive
        let comparable: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.graph.has_edge(i, j))
            .collect();
        let mut arcs = vec![Vec::new(); n];
        for &(i, j) in &comparable {
            arcs[i].push(j);
        }
        let reach = transitive_closure(n, &arcs);
        for (i, row) in reach.iter().enumerate() {
            for j in row.ones() {
                prop_assert!(!a.graph.has_edge(i, j));
            }
        }
    }

    #[test]
    fn brute_force_matches_permutation_scan(g in arb_graph(6)) {
        let first = all_perms(g.n())
            .into_iter()
            .map(|p| Ordering::new(p).unwrap())
            .filter(|o| check_umbrella_free(&g, o).is_ok())
            .min_by(|a, b| a.as_slice().cmp(b.as_slice()));
        prop_assert_eq!(brute_force_cocomp_order(&g).unwrap(), first);
    }
}
