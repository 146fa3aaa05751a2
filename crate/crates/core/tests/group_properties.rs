mod common;

use proptest::prelude::*;
use sumset_atoms::catalog::{catalog, semidirect_pairs};
use sumset_atoms::gtf::{dump_group_table, load_group_table};
use sumset_atoms::{FiniteGroup, GroupSubset};

use common::{from_mask, groups};

#[test]
fn catalog_groups_satisfy_axioms() {
    for c in catalog(24).unwrap() {
        c.group.validate().unwrap_or_else(|e| panic!("{}: {e}", c.name));
    }
    for (p, q) in semidirect_pairs(300) {
        FiniteGroup::semidirect(p, q).unwrap().validate().unwrap();
    }
}

#[test]
fn subgroup_orders_divide_group_order() {
    for g in groups(24) {
        let subs = g.subgroups();
        assert!(subs.iter().all(|h| g.order() % h.len() == 0 && g.is_subgroup(h)));
        assert!(subs.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
    }
}

fn pick(all: &[FiniteGroup], i: usize) -> &FiniteGroup {
    &all[i % all.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generated_subgroup_idempotent_and_monotone(i in 0usize..1000, x in 1u64.., y in any::<u64>()) {
        let all = groups(20);
        let g = pick(&all, i);
        let a = from_mask(g, x);
        prop_assume!(!a.is_empty());
        let b = a.union(&from_mask(g, y));
        let ga = g.generated_subgroup(&a).unwrap();
        prop_assert_eq!(g.generated_subgroup(&ga).unwrap(), ga.clone());
        prop_assert!(ga.is_subset(&g.generated_subgroup(&b).unwrap()));
        prop_assert!(g.is_subgroup(&ga));
    }

    #[test]
    fn double_cosets_are_bounded(i in 0usize..1000, j in 0usize..1000, a in 0usize..1000) {
        let all = groups(20);
        let g = pick(&all, i);
        let subs = g.subgroups();
        let h = &subs[j % subs.len()];
        let size = g.double_coset_size(h, a % g.order()).unwrap();
        prop_assert_eq!(size % h.len(), 0);
        prop_assert!(size <= h.len() * h.len());
    }

    #[test]
    fn coset_decomposition_partitions(i in 0usize..1000, j in 0usize..1000, x in any::<u64>()) {
        let all = groups(20);
        let g = pick(&all, i);
        let subs = g.subgroups();
        let h = &subs[j % subs.len()];
        let x = from_mask(g, x);
        let parts = g.right_coset_decomposition(&x, h).unwrap();
        let mut union = GroupSubset::empty(g.order());
        for p in &parts {
            prop_assert!(union.is_disjoint(p));
            let y = p.min_element().unwrap();
            prop_assert!(p.is_subset(&g.right_coset(h, y)));
            union = union.union(p);
        }
        prop_assert_eq!(union, x);
    }

    #[test]
    fn table_dump_round_trips(i in 0usize..1000) {
        let all = groups(16);
        let g = pick(&all, i);
        prop_assert_eq!(&load_group_table(&dump_group_table(g)).unwrap(), g);
    }
}
