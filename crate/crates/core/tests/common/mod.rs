#![allow(dead_code)]

use proptest::prelude::*;
use sumset_atoms::catalog::catalog;
use sumset_atoms::{FiniteGroup, GroupSubset};

/// Catalog groups of order 2 to `max_order`.
pub fn groups(max_order: usize) -> Vec<FiniteGroup> {
    catalog(max_order)
        .unwrap()
        .into_iter()
        .filter(|c| c.group.order() >= 2)
        .map(|c| c.group)
        .collect()
}

/// A catalog group and a subset containing the identity, drawn from the
/// low bits of `mask`.
pub fn group_and_set(max_order: usize) -> impl Strategy<Value = (FiniteGroup, GroupSubset)> {
    let all = groups(max_order);
    (0..all.len(), any::<u64>()).prop_map(move |(i, mask)| {
        let g = all[i].clone();
        let mut s = GroupSubset::empty(g.order());
        s.insert(0);
        for x in 1..g.order() {
            if mask >> x & 1 == 1 {
                s.insert(x);
            }
        }
        (g, s)
    })
}

pub fn from_mask(g: &FiniteGroup, mask: u64) -> GroupSubset {
    GroupSubset::from_elements(g.order(), (0..g.order()).filter(|&x| mask >> x & 1 == 1)).unwrap()
}
