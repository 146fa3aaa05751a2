mod common;

use proptest::prelude::*;
use sumset_atoms::oracle::oracle_atoms;
use sumset_atoms::search::Anchor;
use sumset_atoms::sumset::{
    boundary, find_atoms, find_atoms_with, fragments_containing_identity, inverse_set, is_k_separable,
    isoperimetric_number, left_translate, remainder, right_translate, AtomOptions,
};
use sumset_atoms::{Exec, FiniteGroup, GroupSubset};

use common::{from_mask, group_and_set};

fn separable(g: &FiniteGroup, s: &GroupSubset, k: usize) -> bool {
    g.generates(s) && is_k_separable(g, s, k)
}

fn is_fragment(g: &FiniteGroup, s: &GroupSubset, k: usize, x: &GroupSubset, kappa: usize) -> bool {
    x.len() >= k
        && remainder(g, s, x).unwrap().len() >= k
        && boundary(g, s, x).unwrap().len() == kappa
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn kappa_of_inverse((g, s) in group_and_set(16), k in 1usize..=2) {
        prop_assume!(separable(&g, &s, k));
        let inv = inverse_set(&g, &s);
        prop_assert_eq!(isoperimetric_number(&g, &s, k).unwrap(), isoperimetric_number(&g, &inv, k).unwrap());
    }

    #[test]
    fn right_translates_share_fragments((g, s) in group_and_set(16), k in 1usize..=2, pick in any::<usize>()) {
        prop_assume!(separable(&g, &s, k));
        let shifts = inverse_set(&g, &s).elements();
        let x = shifts[pick % shifts.len()];
        let moved = right_translate(&g, &s, x);
        let a = find_atoms(&g, &s, k).unwrap();
        let b = find_atoms(&g, &moved, k).unwrap();
        prop_assert_eq!(a.kappa, b.kappa);
        prop_assert_eq!(a.atoms, b.atoms);
    }

    #[test]
    fn remainder_of_fragment_is_fragment_of_inverse((g, s) in group_and_set(12), k in 1usize..=2) {
        prop_assume!(separable(&g, &s, k));
        let kappa = isoperimetric_number(&g, &s, k).unwrap();
        let inv = inverse_set(&g, &s);
        let (frags, _) = fragments_containing_identity(&g, &s, k, kappa, 64).unwrap();
        for f in &frags {
            prop_assert!(is_fragment(&g, &inv, k, &remainder(&g, &s, f).unwrap(), kappa));
            let shifted = left_translate(&g, g.order() - 1, f);
            prop_assert!(is_fragment(&g, &s, k, &shifted, kappa));
        }
    }

    #[test]
    fn kappa_is_monotone_in_k((g, s) in group_and_set(16)) {
        prop_assume!(s.len() >= 2 && separable(&g, &s, 2));
        let k1 = isoperimetric_number(&g, &s, 1).unwrap();
        prop_assert!(1 <= k1);
        prop_assert!(k1 <= isoperimetric_number(&g, &s, 2).unwrap());
    }

    #[test]
    fn remainder_reverses_inclusion((g, s) in group_and_set(16), x in any::<u64>(), y in any::<u64>()) {
        let a = from_mask(&g, x);
        let b = a.union(&from_mask(&g, y));
        prop_assert!(remainder(&g, &s, &b).unwrap().is_subset(&remainder(&g, &s, &a).unwrap()));
    }

    #[test]
    fn search_matches_oracle((g, s) in group_and_set(14), k in 1usize..=2) {
        prop_assume!(separable(&g, &s, k));
        let a = find_atoms(&g, &s, k).unwrap();
        let b = oracle_atoms(&g, &s, k).unwrap();
        prop_assert!(a.same_result(&b), "{:?} vs {:?}", a, b);
        prop_assert_eq!(a.fragment_count, b.fragment_count);
    }

    #[test]
    fn anchors_and_modes_agree((g, s) in group_and_set(16), k in 1usize..=2) {
        prop_assume!(separable(&g, &s, k));
        let base = find_atoms(&g, &s, k).unwrap();
        for anchor in [Anchor::Inside, Anchor::Outside] {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let opts = AtomOptions { exec, anchor, ..AtomOptions::default() };
                prop_assert_eq!(&find_atoms_with(&g, &s, k, &opts).unwrap(), &base);
            }
        }
    }

    #[test]
    fn one_atom_is_subgroup((g, s) in group_and_set(16)) {
        prop_assume!(s.len() >= 2 && separable(&g, &s, 1));
        let inv = inverse_set(&g, &s);
        let a = find_atoms(&g, &s, 1).unwrap();
        let b = find_atoms(&g, &inv, 1).unwrap();
        prop_assume!(a.alpha <= b.alpha);
        let atom = &a.atoms[0];
        prop_assert_eq!(&g.generated_subgroup(atom).unwrap(), atom);
    }
}
