mod common;

use proptest::prelude::*;
use sumset_atoms::flow::{arc_connectivity, cut_profile, flow_lambda};
use sumset_atoms::quotient::{build_quotient_graph, DirectedGraph};
use sumset_atoms::{Exec, GroupSubset};

use common::groups;

fn graph(n: usize, bits: &[bool]) -> DirectedGraph {
    let arcs = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v && bits[u * n + v]);
    DirectedGraph::new(n, arcs).unwrap()
}

fn random_graph(max: usize) -> impl Strategy<Value = DirectedGraph> {
    (2..=max).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| graph(n, &bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn flow_matches_enumeration(q in random_graph(16)) {
        prop_assume!(q.is_weakly_connected());
        let n = q.vertex_count();
        let top = if n > 12 { 2 } else { 3 };
        let profile = cut_profile(&q, Exec::Sequential, 4).unwrap();
        for k in 1..=top.min(n / 2) {
            prop_assert_eq!(flow_lambda(&q, k, Exec::Parallel).unwrap(), profile.report(k).unwrap().lambda);
        }
    }

    #[test]
    fn lambda_is_monotone(q in random_graph(14)) {
        prop_assume!(q.is_weakly_connected());
        let lambdas: Vec<usize> = (1..=q.vertex_count() / 2).map(|k| arc_connectivity(&q, k).unwrap().lambda).collect();
        prop_assert!(lambdas.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn dump_round_trips(q in random_graph(10)) {
        prop_assert_eq!(DirectedGraph::parse(&q.dump()).unwrap(), q);
    }

    #[test]
    fn quotient_degree(i in 0usize..1000, j in 0usize..1000, a in 0usize..1000) {
        let all = groups(24);
        let g = &all[i % all.len()];
        let subs: Vec<GroupSubset> = g.subgroups().into_iter().filter(|h| h.len() < g.order()).collect();
        let h = &subs[j % subs.len()];
        let a = (a % g.order()..g.order()).chain(0..g.order()).find(|&x| !h.contains(x)).unwrap();
        let quotient = build_quotient_graph(g, h, a).unwrap();
        let expected = g.double_coset_size(h, a).unwrap() / h.len();
        prop_assert_eq!(quotient.graph.regular_degree(), Some(expected));
        let conj = GroupSubset::from_elements(g.order(), h.iter().map(|x| g.mul(g.mul(g.inv(a), x), a))).unwrap();
        prop_assert_eq!(expected == h.len(), h.intersection_len(&conj) == 1);
    }
}
