//! Product sets, boundaries, isoperimetric numbers, fragments and atoms.
//!
//! Throughout, `S` is a subset of `G` with `1 ∈ S` (callers translate with
//! [`normalize`] first), `∂X = XS \ X` and `X* = G \ (X ∪ XS)`.

use crate::error::SumsetError;
use crate::group::FiniteGroup;
use crate::par::Exec;
use crate::search::{self, Anchor, MAX_SEARCH_ORDER};
use crate::subset::GroupSubset;

/// Default cap on the number of atoms listed in a report.
pub const DEFAULT_ATOM_CAP: usize = 256;

/// Fragments are counted exactly up to this group order.
pub const FRAGMENT_EXACT_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentReport {
    pub k: usize,
    pub separable: bool,
    pub kappa: usize,
    pub alpha: usize,
    /// Atoms containing the identity, in lexicographic order.
    pub atoms: Vec<GroupSubset>,
    pub atoms_truncated: bool,
    /// Number of `k`-fragments containing the identity.
    pub fragment_count: u64,
    /// False when `fragment_count` is only a lower bound.
    pub fragment_count_exact: bool,
    pub oracle_used: bool,
}

impl FragmentReport {
    /// Whether the searches agree on everything except the oracle flag.
    pub fn same_result(&self, other: &Self) -> bool {
        self.k == other.k
            && self.kappa == other.kappa
            && self.alpha == other.alpha
            && self.atoms == other.atoms
            && self.atoms_truncated == other.atoms_truncated
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AtomOptions {
    pub exec: Exec,
    pub atom_cap: usize,
    pub anchor: Anchor,
    pub count_fragments: bool,
}

impl Default for AtomOptions {
    fn default() -> Self {
        Self {
            exec: Exec::Sequential,
            atom_cap: DEFAULT_ATOM_CAP,
            anchor: Anchor::Auto,
            count_fragments: true,
        }
    }
}

fn same_group(g: &FiniteGroup, x: &GroupSubset) -> Result<(), SumsetError> {
    if x.order() != g.order() {
        return Err(SumsetError::GroupMismatch);
    }
    Ok(())
}

pub fn product_set(g: &FiniteGroup, x: &GroupSubset, y: &GroupSubset) -> Result<GroupSubset, SumsetError> {
    same_group(g, x)?;
    same_group(g, y)?;
    let ys = y.elements();
    let mut out = GroupSubset::empty(g.order());
    for a in x.iter() {
        for &b in &ys {
            out.insert(g.mul(a, b));
        }
    }
    Ok(out)
}

/// `gX`.
pub fn left_translate(g: &FiniteGroup, a: usize, x: &GroupSubset) -> GroupSubset {
    GroupSubset::from_elements(g.order(), x.iter().map(|e| g.mul(a, e))).expect("in range")
}

/// `Xg`.
pub fn right_translate(g: &FiniteGroup, x: &GroupSubset, a: usize) -> GroupSubset {
    GroupSubset::from_elements(g.order(), x.iter().map(|e| g.mul(e, a))).expect("in range")
}

pub fn inverse_set(g: &FiniteGroup, x: &GroupSubset) -> GroupSubset {
    GroupSubset::from_elements(g.order(), x.iter().map(|e| g.inv(e))).expect("in range")
}

/// `∂_S X = XS \ X`.
pub fn boundary(g: &FiniteGroup, s: &GroupSubset, x: &GroupSubset) -> Result<GroupSubset, SumsetError> {
    same_group(g, s)?;
    if !s.contains(0) {
        return Err(SumsetError::IdentityNotInSet);
    }
    Ok(product_set(g, x, s)?.difference(x))
}

/// `X* = G \ (X ∪ XS)`.
pub fn remainder(g: &FiniteGroup, s: &GroupSubset, x: &GroupSubset) -> Result<GroupSubset, SumsetError> {
    Ok(product_set(g, x, s)?.union(x).complement())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub set: GroupSubset,
    /// The element `s` with `set = S s⁻¹`.
    pub shift: usize,
    pub contains_identity: bool,
    pub generates: bool,
}

/// Right-translates `S` by the inverse of its smallest element.
pub fn normalize(g: &FiniteGroup, s: &GroupSubset) -> Result<Normalized, SumsetError> {
    same_group(g, s)?;
    let shift = s.min_element().ok_or(SumsetError::EmptySet)?;
    let set = right_translate(g, s, g.inv(shift));
    let generates = g.generates(&set);
    Ok(Normalized {
        contains_identity: set.contains(0),
        set,
        shift,
        generates,
    })
}

/// Whether some `X` has `|X| >= k` and `|X*| >= k`.
pub fn is_k_separable(g: &FiniteGroup, s: &GroupSubset, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if s.order() != n || 2 * k > n {
        return false;
    }
    // Subsets of admissible sets with at least k elements are admissible,
    // and translates are admissible, so k-subsets containing 1 suffice.
    let rows: Vec<GroupSubset> = (0..n).map(|x| left_translate(g, x, s)).collect();
    let mut covered = rows[0].clone();
    covered.insert(0);
    fn dfs(
        rows: &[GroupSubset],
        covered: &GroupSubset,
        start: usize,
        left: usize,
        k: usize,
    ) -> bool {
        let n = rows.len();
        if n - covered.len() < k {
            return false;
        }
        if left == 0 {
            return true;
        }
        for x in start..n {
            if n - x < left {
                break;
            }
            let mut c = covered.union(&rows[x]);
            c.insert(x);
            if dfs(rows, &c, x + 1, left - 1, k) {
                return true;
            }
        }
        false
    }
    dfs(&rows, &covered, 1, k - 1, k)
}

/// Preconditions shared by the isoperimetric operations.
pub(crate) fn check_isoperimetric_input(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Result<(), SumsetError> {
    if k == 0 {
        return Err(SumsetError::InvalidK);
    }
    same_group(g, s)?;
    if s.is_empty() {
        return Err(SumsetError::EmptySet);
    }
    if !s.contains(0) {
        return Err(SumsetError::IdentityNotInSet);
    }
    if !is_k_separable(g, s, k) {
        return Err(SumsetError::NotSeparable { k });
    }
    if !g.generates(s) {
        return Err(SumsetError::NotGenerating);
    }
    if g.order() > MAX_SEARCH_ORDER {
        return Err(SumsetError::Group(crate::error::GroupError::TooLarge {
            order: g.order(),
            cap: MAX_SEARCH_ORDER,
        }));
    }
    Ok(())
}

pub fn find_atoms(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Result<FragmentReport, SumsetError> {
    find_atoms_with(g, s, k, &AtomOptions::default())
}

pub fn find_atoms_with(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    opts: &AtomOptions,
) -> Result<FragmentReport, SumsetError> {
    check_isoperimetric_input(g, s, k)?;
    let n = g.order();
    let opt = search::optimize(g, s, k, opts.anchor, opts.atom_cap, opts.exec)
        .ok_or(SumsetError::NotSeparable { k })?;
    let (fragment_count, fragment_count_exact) = if opts.count_fragments && n <= FRAGMENT_EXACT_LIMIT {
        let (count, _, _) = search::enumerate(g, s, k, opt.f, 1, opts.exec);
        (count, true)
    } else {
        (opt.atoms.len() as u64, false)
    };
    Ok(FragmentReport {
        k,
        separable: true,
        kappa: n - opt.f,
        alpha: opt.alpha,
        atoms: opt.atoms,
        atoms_truncated: opt.truncated,
        fragment_count,
        fragment_count_exact,
        oracle_used: false,
    })
}

/// `κ_k(S)`.
pub fn isoperimetric_number(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Result<usize, SumsetError> {
    let opts = AtomOptions {
        atom_cap: 1,
        count_fragments: false,
        ..AtomOptions::default()
    };
    Ok(find_atoms_with(g, s, k, &opts)?.kappa)
}

/// All `k`-fragments containing the identity (smallest `cap` of them) and
/// whether the list is complete.
pub fn fragments_containing_identity(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    kappa: usize,
    cap: usize,
) -> Result<(Vec<GroupSubset>, bool), SumsetError> {
    check_isoperimetric_input(g, s, k)?;
    let (_, sets, truncated) = search::enumerate(g, s, k, g.order() - kappa, cap, Exec::Sequential);
    Ok((sets, !truncated))
}

/// Some admissible `X` with `|∂X| <= bound`, if any; `S` need not generate.
pub fn boundary_at_most(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    bound: usize,
) -> Result<Option<GroupSubset>, SumsetError> {
    if k == 0 {
        return Err(SumsetError::InvalidK);
    }
    same_group(g, s)?;
    if !s.contains(0) {
        return Err(SumsetError::IdentityNotInSet);
    }
    let n = g.order();
    if !is_k_separable(g, s, k) {
        return Ok(None);
    }
    let target = n.saturating_sub(bound);
    Ok(search::reach(g, s, k, target, Anchor::Auto))
}

/// The stabiliser `{h : hA = A}`, the largest subgroup `H` with `HA = A`.
pub fn maximal_left_period(g: &FiniteGroup, a: &GroupSubset) -> Result<GroupSubset, SumsetError> {
    same_group(g, a)?;
    let a0 = a.min_element().ok_or(SumsetError::EmptySet)?;
    let a0_inv = g.inv(a0);
    let mut h = GroupSubset::empty(g.order());
    // h a0 ∈ A is necessary, so h ranges over A a0⁻¹.
    for x in a.iter() {
        let cand = g.mul(x, a0_inv);
        if a.iter().all(|y| a.contains(g.mul(cand, y))) {
            h.insert(cand);
        }
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionVerdict {
    pub k: usize,
    pub kappa: usize,
    pub alpha: usize,
    /// Whether `|G| >= 2α + κ`.
    pub applicable: bool,
    pub pairs_checked: u64,
    pub counterexample: Option<(GroupSubset, GroupSubset)>,
    /// False when the atom list was truncated.
    pub complete: bool,
}

impl IntersectionVerdict {
    pub fn pass(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `|A ∩ B| <= k - 1` over all pairs of distinct atoms given the atoms
/// containing the identity.
pub fn atom_pairs_intersection(
    g: &FiniteGroup,
    atoms: &[GroupSubset],
    k: usize,
) -> (u64, Option<(GroupSubset, GroupSubset)>) {
    // Every pair translates to one whose first member contains 1.
    let mut checked = 0;
    for a in atoms {
        for b in atoms {
            for t in 0..g.order() {
                let tb = left_translate(g, t, b);
                if &tb == a {
                    continue;
                }
                checked += 1;
                if a.intersection_len(&tb) > k - 1 {
                    return (checked, Some((a.clone(), tb)));
                }
            }
        }
    }
    (checked, None)
}

pub fn check_intersection_property(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
) -> Result<IntersectionVerdict, SumsetError> {
    let report = find_atoms(g, s, k)?;
    Ok(intersection_from_report(g, &report))
}

pub fn intersection_from_report(g: &FiniteGroup, report: &FragmentReport) -> IntersectionVerdict {
    let applicable = g.order() >= 2 * report.alpha + report.kappa;
    let (pairs_checked, counterexample) = if applicable {
        atom_pairs_intersection(g, &report.atoms, report.k)
    } else {
        (0, None)
    };
    IntersectionVerdict {
        k: report.k,
        kappa: report.kappa,
        alpha: report.alpha,
        applicable,
        pairs_checked,
        counterexample,
        complete: !report.atoms_truncated,
    }
}

/// Cell counts of the partitions `(F1, ∂F1, F1*)` and `(F2, ∂F2, F2*)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FragmentDiagram {
    /// `|F1 ∩ ∂F2|`
    pub beta_12: usize,
    /// `|F2 ∩ ∂F1|`
    pub beta_21: usize,
    /// `|∂F1 ∩ F2*|`
    pub beta_p12: usize,
    /// `|∂F2 ∩ F1*|`
    pub beta_p21: usize,
    /// `|∂F1 ∩ ∂F2|`
    pub gamma: usize,
    pub f1_f2: usize,
    pub f1_f2star: usize,
    pub f1star_f2: usize,
    pub f1star_f2star: usize,
}

impl FragmentDiagram {
    pub fn total(&self) -> usize {
        self.beta_12
            + self.beta_21
            + self.beta_p12
            + self.beta_p21
            + self.gamma
            + self.f1_f2
            + self.f1_f2star
            + self.f1star_f2
            + self.f1star_f2star
    }
}

pub fn fragment_diagram(
    g: &FiniteGroup,
    f1: &GroupSubset,
    f2: &GroupSubset,
    s: &GroupSubset,
) -> Result<FragmentDiagram, SumsetError> {
    same_group(g, f1)?;
    same_group(g, f2)?;
    let d1 = boundary(g, s, f1)?;
    let d2 = boundary(g, s, f2)?;
    let r1 = remainder(g, s, f1)?;
    let r2 = remainder(g, s, f2)?;
    Ok(FragmentDiagram {
        beta_12: f1.intersection_len(&d2),
        beta_21: f2.intersection_len(&d1),
        beta_p12: d1.intersection_len(&r2),
        beta_p21: d2.intersection_len(&r1),
        gamma: d1.intersection_len(&d2),
        f1_f2: f1.intersection_len(f2),
        f1_f2star: f1.intersection_len(&r2),
        f1star_f2: r1.intersection_len(f2),
        f1star_f2star: r1.intersection_len(&r2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn product_examples() {
        let g = z(6);
        let x = g.subset([0, 1]).unwrap();
        assert_eq!(product_set(&g, &x, &x).unwrap().elements(), vec![0, 1, 2]);
        let one = g.trivial_subgroup();
        assert_eq!(product_set(&g, &x, &one).unwrap(), x);
        let other = GroupSubset::empty(7);
        assert_eq!(product_set(&g, &x, &other), Err(SumsetError::GroupMismatch));
    }

    #[test]
    fn boundary_examples() {
        let g = z(7);
        let s = g.subset([0, 1, 3]).unwrap();
        let x = g.subset([0, 1]).unwrap();
        assert_eq!(boundary(&g, &s, &x).unwrap().elements(), vec![2, 3, 4]);
        assert_eq!(remainder(&g, &s, &x).unwrap().elements(), vec![5, 6]);
        assert!(boundary(&g, &s, &g.whole()).unwrap().is_empty());
        assert!(remainder(&g, &s, &g.whole()).unwrap().is_empty());
        assert_eq!(remainder(&g, &s, &GroupSubset::empty(7)).unwrap(), g.whole());
        let one = g.trivial_subgroup();
        assert_eq!(boundary(&g, &s, &one).unwrap().elements(), vec![1, 3]);
        let bad = g.subset([1, 2]).unwrap();
        assert_eq!(boundary(&g, &bad, &x), Err(SumsetError::IdentityNotInSet));
    }

    #[test]
    fn separability_examples() {
        let g = z(6);
        assert!(!is_k_separable(&g, &g.whole(), 1));
        assert!(is_k_separable(&g, &g.subset([0, 1]).unwrap(), 2));
        let g7 = z(7);
        assert!(!is_k_separable(&g7, &g7.subset([0, 1, 3]).unwrap(), 3));
        assert!(is_k_separable(&g7, &g7.subset([0, 1, 3]).unwrap(), 2));
    }

    #[test]
    fn kappa_examples() {
        let g6 = z(6);
        assert_eq!(isoperimetric_number(&g6, &g6.subset([0, 1]).unwrap(), 1).unwrap(), 1);
        assert_eq!(isoperimetric_number(&g6, &g6.subset([0, 2, 3]).unwrap(), 2).unwrap(), 2);
        let g7 = z(7);
        assert_eq!(isoperimetric_number(&g7, &g7.subset([0, 1, 3]).unwrap(), 2).unwrap(), 3);
        assert_eq!(
            isoperimetric_number(&g6, &g6.subset([0, 2]).unwrap(), 1),
            Err(SumsetError::NotGenerating)
        );
        assert_eq!(
            isoperimetric_number(&g6, &g6.whole(), 1),
            Err(SumsetError::NotSeparable { k: 1 })
        );
    }

    #[test]
    fn atom_examples() {
        let g7 = z(7);
        let r = find_atoms(&g7, &g7.subset([0, 1, 2]).unwrap(), 2).unwrap();
        assert_eq!((r.kappa, r.alpha), (2, 2));
        assert_eq!(r.atoms, vec![g7.subset([0, 1]).unwrap(), g7.subset([0, 6]).unwrap()]);
        let g6 = z(6);
        let r = find_atoms(&g6, &g6.subset([0, 2, 3]).unwrap(), 2).unwrap();
        assert_eq!(r.atoms, vec![g6.subset([0, 3]).unwrap()]);
        assert!(g6.is_subgroup(&r.atoms[0]));
    }

    #[test]
    fn normalize_examples() {
        let g = z(6);
        let s = g.subset([0, 1]).unwrap();
        assert_eq!(normalize(&g, &s).unwrap().set, s);
        let n = normalize(&g, &g.subset([2, 3]).unwrap()).unwrap();
        assert_eq!(n.set.elements(), vec![0, 1]);
        assert!(n.generates);
        let n = normalize(&g, &g.subset([2, 4]).unwrap()).unwrap();
        assert_eq!(n.set.elements(), vec![0, 2]);
        assert!(!n.generates);
        assert_eq!(normalize(&g, &GroupSubset::empty(6)), Err(SumsetError::EmptySet));
    }

    #[test]
    fn period_examples() {
        let g = z(6);
        assert_eq!(maximal_left_period(&g, &g.trivial_subgroup()).unwrap().elements(), vec![0]);
        let a = g.subset([0, 1, 3, 4]).unwrap();
        assert_eq!(maximal_left_period(&g, &a).unwrap().elements(), vec![0, 3]);
    }

    #[test]
    fn intersection_examples() {
        let g7 = z(7);
        let v = check_intersection_property(&g7, &g7.subset([0, 1, 2]).unwrap(), 2).unwrap();
        assert!(v.applicable && v.pass());
        let v = check_intersection_property(&g7, &g7.subset([0, 1, 2]).unwrap(), 1).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn diagram_examples() {
        let g = z(7);
        let s = g.subset([0, 1, 2]).unwrap();
        let f = g.subset([0, 1]).unwrap();
        let d = fragment_diagram(&g, &f, &f, &s).unwrap();
        assert_eq!((d.beta_12, d.beta_21, d.gamma), (0, 0, 2));
        assert_eq!(d.total(), 7);
        let fstar = remainder(&g, &s, &f).unwrap();
        assert_eq!(fragment_diagram(&g, &f, &fstar, &s).unwrap().f1_f2, 0);
        let f2 = g.subset([3, 4]).unwrap();
        assert_eq!(fragment_diagram(&g, &f, &f2, &s).unwrap().total(), 7);
    }
}
