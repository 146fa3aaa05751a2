//! Finite groups given by full multiplication tables.
//!
//! Element indices run over `0..n` and the identity is always index 0.
//! Groups are immutable once built and can be shared freely across threads.

use std::collections::{HashSet, VecDeque};

use crate::error::GroupError;
use crate::subset::GroupSubset;

/// Default cap on the order of groups accepted by constructors and the loader.
pub const DEFAULT_MAX_ORDER: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
}

fn check_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order == 0 {
        return Err(GroupError::EmptyGroup);
    }
    if order > cap {
        return Err(GroupError::TooLarge { order, cap });
    }
    Ok(())
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteGroup {
    /// Builds a group from a table that is a group law by construction.
    /// Identity must already be at index 0.
    fn from_trusted(order: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            let j = row.iter().position(|&v| v == 0).expect("row contains identity");
            inverse[i] = j as u32;
        }
        Self {
            order,
            table,
            inverse,
            labels,
        }
    }

    /// Builds and fully validates a group from rows of a multiplication table.
    ///
    /// If the identity is not at index 0 the elements 0 and `e` are swapped so
    /// that it is.
    pub fn from_rows(
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let n = rows.len();
        check_cap(n, cap)?;
        let mut table = vec![0u32; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Parse {
                    line: i + 2,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                table[i * n + j] = v as u32;
            }
        }
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.fill(false);
            for j in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::RowNotPermutation { row: i });
                }
            }
        }
        for j in 0..n {
            seen.fill(false);
            for i in 0..n {
                let v = table[i * n + j] as usize;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(GroupError::ColumnNotPermutation { col: j });
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|j| table[e * n + j] as usize == j && table[j * n + e] as usize == j))
            .ok_or(GroupError::NoIdentity)?;
        let (table, labels) = if identity == 0 {
            (table, labels)
        } else {
            let swap = |x: usize| -> usize {
                if x == 0 {
                    identity
                } else if x == identity {
                    0
                } else {
                    x
                }
            };
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = swap(table[swap(i) * n + swap(j)] as usize) as u32;
                }
            }
            let labels = labels.map(|mut l| {
                l.swap(0, identity);
                l
            });
            (t, labels)
        };
        let mut inverse = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| table[i * n + j] == 0)
                .ok_or(GroupError::MissingInverse { element: i })?;
            if table[j * n + i] != 0 {
                return Err(GroupError::MissingInverse { element: i });
            }
            inverse[i] = j as u32;
        }
        let group = Self {
            order: n,
            table,
            inverse,
            labels,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let check_row = |a: usize| -> Option<(usize, usize, usize)> {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
            None
        };
        #[cfg(feature = "parallel")]
        let bad = {
            use rayon::prelude::*;
            (0..n).into_par_iter().find_map_first(check_row)
        };
        #[cfg(not(feature = "parallel"))]
        let bad = (0..n).find_map(check_row);
        match bad {
            Some((a, b, c)) => Err(GroupError::NotAssociative { a, b, c }),
            None => Ok(()),
        }
    }

    /// Re-checks all group axioms: identity at 0, Latin square, inverses and
    /// associativity.
    pub fn validate(&self) -> Result<(), GroupError> {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect();
        let rebuilt = Self::from_rows(&rows, None, usize::MAX)?;
        if rebuilt.table != self.table {
            return Err(GroupError::NoIdentity);
        }
        Ok(())
    }

    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        Self::cyclic_capped(n, DEFAULT_MAX_ORDER)
    }

    pub fn cyclic_capped(n: usize, cap: usize) -> Result<Self, GroupError> {
        check_cap(n, cap)?;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(((i + j) % n) as u32);
            }
        }
        Ok(Self::from_trusted(n, table, None))
    }

    /// Dihedral group of order `2m`: index `i < m` is `r^i`, index `m + i` is
    /// `r^i f`, with `f r f = r^-1`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        Self::dihedral_capped(m, DEFAULT_MAX_ORDER)
    }

    pub fn dihedral_capped(m: usize, cap: usize) -> Result<Self, GroupError> {
        if m < 3 {
            return Err(GroupError::InvalidDihedral(m));
        }
        let n = 2 * m;
        check_cap(n, cap)?;
        let decode = |x: usize| (x % m, x >= m);
        let encode = |i: usize, f: bool| if f { m + i } else { i };
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (i, fx) = decode(x);
            for y in 0..n {
                let (j, fy) = decode(y);
                // r^i f^a * r^j f^b = r^(i + (-1)^a j) f^(a+b)
                let rot = if fx { (i + m - j) % m } else { (i + j) % m };
                table.push(encode(rot, fx ^ fy) as u32);
            }
        }
        let labels = (0..n)
            .map(|x| {
                let (i, f) = decode(x);
                match (i, f) {
                    (0, false) => "e".to_string(),
                    (0, true) => "f".to_string(),
                    (1, false) => "r".to_string(),
                    (1, true) => "rf".to_string(),
                    (i, false) => format!("r{i}"),
                    (i, true) => format!("r{i}f"),
                }
            })
            .collect();
        Ok(Self::from_trusted(n, table, Some(labels)))
    }

    /// The residues `h` with `h^q = 1 (mod p)`, ascending; for `q | p - 1` this
    /// is the subgroup of order `q` of the multiplicative group mod `p`.
    pub fn roots_of_unity(p: usize, q: usize) -> Vec<usize> {
        (1..p)
            .filter(|&h| {
                let mut acc = 1usize;
                for _ in 0..q {
                    acc = acc * h % p;
                }
                acc == 1
            })
            .collect()
    }

    pub(crate) fn check_semidirect_pair(p: usize, q: usize) -> Result<(), GroupError> {
        let bad = |reason: &str| GroupError::InvalidSemidirect {
            p,
            q,
            reason: reason.to_string(),
        };
        if !is_prime(p) {
            return Err(bad("p is not prime"));
        }
        if !is_prime(q) || q == 2 {
            return Err(bad("q must be an odd prime"));
        }
        if !(p - 1).is_multiple_of(q) {
            return Err(bad("q does not divide p - 1"));
        }
        Ok(())
    }

    /// The group `Z/p x| H0` on pairs `(x, h)` with `(x,h)(y,k) = (x + hy, hk)`,
    /// `H0` the order-`q` subgroup of units mod `p`. Pair `(x, h)` has index
    /// `x*q + rank(h)` where `rank` is the position in ascending `H0`.
    pub fn semidirect(p: usize, q: usize) -> Result<Self, GroupError> {
        Self::semidirect_capped(p, q, DEFAULT_MAX_ORDER)
    }

    pub fn semidirect_capped(p: usize, q: usize, cap: usize) -> Result<Self, GroupError> {
        Self::check_semidirect_pair(p, q)?;
        let n = p * q;
        check_cap(n, cap)?;
        let h0 = Self::roots_of_unity(p, q);
        debug_assert_eq!(h0.len(), q);
        let mut rank = vec![usize::MAX; p];
        for (r, &h) in h0.iter().enumerate() {
            rank[h] = r;
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            let (x, h) = (a / q, h0[a % q]);
            for b in 0..n {
                let (y, k) = (b / q, h0[b % q]);
                let z = (x + h * y) % p;
                let hk = h * k % p;
                table.push((z * q + rank[hk]) as u32);
            }
        }
        let labels = (0..n).map(|a| format!("({},{})", a / q, h0[a % q])).collect();
        Ok(Self::from_trusted(n, table, Some(labels)))
    }

    /// Direct product; the pair `(i, j)` has index `i * |b| + j`.
    pub fn direct_product(a: &Self, b: &Self) -> Result<Self, GroupError> {
        Self::direct_product_capped(a, b, DEFAULT_MAX_ORDER)
    }

    pub fn direct_product_capped(a: &Self, b: &Self, cap: usize) -> Result<Self, GroupError> {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        check_cap(n, cap)?;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xi, xj) = (x / nb, x % nb);
            for y in 0..n {
                let (yi, yj) = (y / nb, y % nb);
                table.push((a.mul(xi, yi) * nb + b.mul(xj, yj)) as u32);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
            .collect();
        Ok(Self::from_trusted(n, table, Some(labels)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn center(&self) -> GroupSubset {
        let n = self.order;
        let z = (0..n).filter(|&a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)));
        GroupSubset::from_elements(n, z).expect("indices in range")
    }

    pub(crate) fn check_subset(&self, x: &GroupSubset) -> Result<(), GroupError> {
        if x.order() != self.order {
            return Err(GroupError::OrderMismatch {
                expected: self.order,
                found: x.order(),
            });
        }
        Ok(())
    }

    pub fn check_element(&self, a: usize) -> Result<(), GroupError> {
        if a >= self.order {
            return Err(GroupError::ElementOutOfRange {
                element: a,
                order: self.order,
            });
        }
        Ok(())
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, elements: I) -> Result<GroupSubset, GroupError> {
        GroupSubset::from_elements(self.order, elements)
    }

    pub fn whole(&self) -> GroupSubset {
        GroupSubset::full(self.order)
    }

    pub fn trivial_subgroup(&self) -> GroupSubset {
        GroupSubset::from_elements(self.order, [0]).expect("identity in range")
    }

    /// Closure of `{1}` under right multiplication by `gens`.
    fn closure(&self, start: &GroupSubset, gens: &[usize]) -> GroupSubset {
        let mut set = start.clone();
        set.insert(0);
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(y) = queue.pop_front() {
            for &t in gens {
                let z = self.mul(y, t);
                if !set.contains(z) {
                    set.insert(z);
                    queue.push_back(z);
                }
            }
        }
        set
    }

    /// The subgroup generated by `x`.
    pub fn generated_subgroup(&self, x: &GroupSubset) -> Result<GroupSubset, GroupError> {
        self.check_subset(x)?;
        if x.is_empty() {
            return Err(GroupError::EmptySubset);
        }
        let gens = x.elements();
        Ok(self.closure(&self.trivial_subgroup(), &gens))
    }

    pub fn generates(&self, x: &GroupSubset) -> bool {
        self.generated_subgroup(x)
            .map(|h| h.len() == self.order)
            .unwrap_or(false)
    }

    pub fn is_subgroup(&self, h: &GroupSubset) -> bool {
        if h.order() != self.order || !h.contains(0) {
            return false;
        }
        let elems = h.elements();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| h.contains(self.mul(a, b))))
    }

    fn require_subgroup(&self, h: &GroupSubset) -> Result<(), GroupError> {
        self.check_subset(h)?;
        if !self.is_subgroup(h) {
            return Err(GroupError::NotASubgroup);
        }
        Ok(())
    }

    /// All subgroups, sorted by size and then lexicographically.
    pub fn subgroups(&self) -> Vec<GroupSubset> {
        let n = self.order;
        let mut seen: HashSet<GroupSubset> = HashSet::new();
        let mut frontier: Vec<(GroupSubset, Vec<usize>)> = Vec::new();
        let trivial = self.trivial_subgroup();
        seen.insert(trivial.clone());
        frontier.push((trivial, Vec::new()));
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (k, gens) in &frontier {
                let mut covered = k.clone();
                for g in 0..n {
                    if covered.contains(g) {
                        continue;
                    }
                    // <K, g> = <K, kg> = <K, gk> = <K, g^-1>
                    for kk in k.iter() {
                        covered.insert(self.mul(kk, g));
                        covered.insert(self.mul(g, kk));
                    }
                    covered.insert(self.inv(g));
                    let mut new_gens = gens.clone();
                    new_gens.push(g);
                    let l = self.closure(k, &new_gens);
                    if seen.insert(l.clone()) {
                        next.push((l, new_gens));
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<GroupSubset> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// `|HaH|` by direct expansion.
    pub fn double_coset_size(&self, h: &GroupSubset, a: usize) -> Result<usize, GroupError> {
        self.require_subgroup(h)?;
        self.check_element(a)?;
        let mut out = GroupSubset::empty(self.order);
        for x in h.iter() {
            let xa = self.mul(x, a);
            for y in h.iter() {
                out.insert(self.mul(xa, y));
            }
        }
        Ok(out.len())
    }

    /// The right coset `Hx`.
    pub fn right_coset(&self, h: &GroupSubset, x: usize) -> GroupSubset {
        let mut c = GroupSubset::empty(self.order);
        for y in h.iter() {
            c.insert(self.mul(y, x));
        }
        c
    }

    /// The left coset `xH`.
    pub fn left_coset(&self, x: usize, h: &GroupSubset) -> GroupSubset {
        let mut c = GroupSubset::empty(self.order);
        for y in h.iter() {
            c.insert(self.mul(x, y));
        }
        c
    }

    /// Right cosets of `h`, ordered by their smallest element, together with
    /// the coset index of every element.
    pub fn right_cosets(&self, h: &GroupSubset) -> Result<(Vec<GroupSubset>, Vec<usize>), GroupError> {
        self.require_subgroup(h)?;
        let n = self.order;
        let mut index = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for x in 0..n {
            if index[x] != usize::MAX {
                continue;
            }
            let c = self.right_coset(h, x);
            for y in c.iter() {
                index[y] = cosets.len();
            }
            cosets.push(c);
        }
        Ok((cosets, index))
    }

    /// Partition of `x` into the nonempty pieces `x ∩ Hy`, ordered by smallest
    /// element.
    pub fn right_coset_decomposition(
        &self,
        x: &GroupSubset,
        h: &GroupSubset,
    ) -> Result<Vec<GroupSubset>, GroupError> {
        self.check_subset(x)?;
        let (cosets, index) = self.right_cosets(h)?;
        let mut parts: Vec<(usize, GroupSubset)> = Vec::new();
        let mut slot = vec![usize::MAX; cosets.len()];
        for e in x.iter() {
            let c = index[e];
            if slot[c] == usize::MAX {
                slot[c] = parts.len();
                parts.push((c, x.intersection(&cosets[c])));
            }
        }
        Ok(parts.into_iter().map(|(_, p)| p).collect())
    }

    /// The subgroup `h` as a group in its own right, with the embedding that
    /// maps its indices back into `self` (ascending, so identity stays at 0).
    pub fn restrict(&self, h: &GroupSubset) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        self.require_subgroup(h)?;
        let embed = h.elements();
        let mut local = vec![u32::MAX; self.order];
        for (i, &e) in embed.iter().enumerate() {
            local[e] = i as u32;
        }
        let m = embed.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                table.push(local[self.mul(a, b)]);
            }
        }
        let labels = self.labels.as_ref().map(|l| embed.iter().map(|&e| l[e].clone()).collect());
        Ok((Self::from_trusted(m, table, labels), embed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_axioms(g: &FiniteGroup) {
        g.validate().unwrap();
        for i in 0..g.order() {
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }

    #[test]
    fn cyclic_examples() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        let g6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(g6.mul(2, 5), 1);
        let g7 = FiniteGroup::cyclic(7).unwrap();
        assert_eq!(g7.inv(3), 4);
        assert_axioms(&g6);
        assert!(matches!(
            FiniteGroup::cyclic(5000),
            Err(GroupError::TooLarge { .. })
        ));
        assert!(FiniteGroup::cyclic(0).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        assert_axioms(&d3);
        // f * r has order 2
        let fr = d3.mul(3, 1);
        assert_eq!(d3.element_order(fr), 2);
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.center().len(), 2);
        assert!(FiniteGroup::dihedral(2).is_err());
        // f r f = r^-1
        assert_eq!(d4.mul(d4.mul(4, 1), 4), 3);
    }

    #[test]
    fn semidirect_examples() {
        assert_eq!(FiniteGroup::roots_of_unity(7, 3), vec![1, 2, 4]);
        let g = FiniteGroup::semidirect(7, 3).unwrap();
        assert_eq!(g.order(), 21);
        assert_axioms(&g);
        // (1,1)(1,1) = (2,1); (x,1) has index 3x
        assert_eq!(g.mul(3, 3), 6);
        let g55 = FiniteGroup::semidirect(11, 5).unwrap();
        assert_eq!(g55.order(), 55);
        assert!(!g55.is_abelian());
        assert!(FiniteGroup::semidirect(5, 3).is_err());
        assert!(FiniteGroup::semidirect(7, 2).is_err());
        assert!(FiniteGroup::semidirect(9, 2).is_err());
    }

    #[test]
    fn product_is_group() {
        let a = FiniteGroup::cyclic(2).unwrap();
        let b = FiniteGroup::dihedral(3).unwrap();
        let g = FiniteGroup::direct_product(&a, &b).unwrap();
        assert_eq!(g.order(), 12);
        assert_axioms(&g);
    }

    #[test]
    fn generated_subgroup_examples() {
        let g6 = FiniteGroup::cyclic(6).unwrap();
        let s = g6.subset([0]).unwrap();
        assert_eq!(g6.generated_subgroup(&s).unwrap().elements(), vec![0]);
        let s = g6.subset([2]).unwrap();
        assert_eq!(g6.generated_subgroup(&s).unwrap().elements(), vec![0, 2, 4]);
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let s = d3.subset([1, 3]).unwrap();
        assert_eq!(d3.generated_subgroup(&s).unwrap().len(), 6);
        assert_eq!(
            g6.generated_subgroup(&GroupSubset::empty(6)),
            Err(GroupError::EmptySubset)
        );
    }

    #[test]
    fn subgroup_enumeration_examples() {
        let g6 = FiniteGroup::cyclic(6).unwrap();
        let sizes: Vec<usize> = g6.subgroups().iter().map(|h| h.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3, 6]);
        let g7 = FiniteGroup::cyclic(7).unwrap();
        assert_eq!(g7.subgroups().len(), 2);
        let g21 = FiniteGroup::semidirect(7, 3).unwrap();
        let subs = g21.subgroups();
        let count = |k: usize| subs.iter().filter(|h| h.len() == k).count();
        assert_eq!((count(1), count(3), count(7), count(21)), (1, 7, 1, 1));
        assert_eq!(subs.len(), 10);
        // {0} x H0 sorts first among order-3 subgroups
        assert_eq!(subs[1].elements(), vec![0, 1, 2]);
    }

    #[test]
    fn double_coset_examples() {
        let g21 = FiniteGroup::semidirect(7, 3).unwrap();
        let h = g21.subset([0, 1, 2]).unwrap();
        assert_eq!(g21.double_coset_size(&h, 1).unwrap(), 3);
        assert_eq!(g21.double_coset_size(&h, 3).unwrap(), 9);
        let g6 = FiniteGroup::cyclic(6).unwrap();
        let h = g6.subset([0, 3]).unwrap();
        assert_eq!(g6.double_coset_size(&h, 1).unwrap(), 2);
        let not_sub = g6.subset([0, 1]).unwrap();
        assert_eq!(g6.double_coset_size(&not_sub, 1), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn coset_decomposition_examples() {
        let g6 = FiniteGroup::cyclic(6).unwrap();
        let h = g6.subset([0, 3]).unwrap();
        let parts = g6.right_coset_decomposition(&h, &h).unwrap();
        assert_eq!(parts, vec![h.clone()]);
        let x = g6.subset([0, 1, 3]).unwrap();
        let parts = g6.right_coset_decomposition(&x, &h).unwrap();
        let lists: Vec<Vec<usize>> = parts.iter().map(|p| p.elements()).collect();
        assert_eq!(lists, vec![vec![0, 3], vec![1]]);
        let parts = g6.right_coset_decomposition(&g6.whole(), &h).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.len() == 2));
    }

    #[test]
    fn restriction_is_a_group() {
        let g21 = FiniteGroup::semidirect(7, 3).unwrap();
        let gp = g21.subset((0..7).map(|x| 3 * x)).unwrap();
        let (sub, embed) = g21.restrict(&gp).unwrap();
        assert_eq!(sub.order(), 7);
        assert!(sub.is_abelian());
        assert_eq!(embed[0], 0);
        sub.validate().unwrap();
    }
}
