//! Which of the three structures a set with small doubling has, with
//! witnesses that are re-checked by direct evaluation.

use std::fmt;

use crate::error::ClassifyError;
use crate::example::ExampleInstance;
use crate::group::FiniteGroup;
use crate::report::{set_token, Check, KvReport, Relation};
use crate::subset::GroupSubset;
use crate::sumset::{
    boundary_at_most, find_atoms_with, inverse_set, isoperimetric_number,
    maximal_left_period, normalize, product_set, AtomOptions, Normalized,
};
use crate::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    HypothesisFails,
    CaseI,
    CaseII,
    CaseIII,
    Violation,
}

impl Case {
    pub fn tag(self) -> &'static str {
        match self {
            Case::HypothesisFails => "HYPOTHESIS_FAILS",
            Case::CaseI => "CASE_I",
            Case::CaseII => "CASE_II",
            Case::CaseIII => "CASE_III",
            Case::Violation => "VIOLATION",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// `S` or `S⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Plus,
    Minus,
}

impl Exponent {
    pub fn value(self) -> i8 {
        match self {
            Exponent::Plus => 1,
            Exponent::Minus => -1,
        }
    }

    fn apply(self, g: &FiniteGroup, s: &GroupSubset) -> GroupSubset {
        match self {
            Exponent::Plus => s.clone(),
            Exponent::Minus => inverse_set(g, s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `gS` (left) or `Sg` (right) is `{1, a, …, a^{|S|-1}}`.
    Progression { side: Side, g: usize, a: usize },
    /// `|HS^ε| ≤ |H| + |S| − 1`.
    Subgroup { h: GroupSubset, exponent: Exponent },
    /// `|HaH| = |H|²` and `|AS^ε| = |A| + |S| − 1 = |G| − |A|` for `A = H ∪ Ha`.
    TwoCosets { h: GroupSubset, a: usize, exponent: Exponent },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub holds: bool,
    pub normalized: Normalized,
    /// `S` lies in a proper subgroup; the subgroup case then holds outright.
    pub non_generating: bool,
    /// Some `X` with `|X| ≥ 2`, `|XS'| ≤ |G| − 2` and `|XS'| − |X| ≤ |S| − 1`.
    pub witness: Option<GroupSubset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub case: Case,
    pub witness: Option<Witness>,
    pub hypothesis: Hypothesis,
    pub transcript: Vec<Check>,
}

fn require_pair(g: &FiniteGroup, s: &GroupSubset) -> Result<(), ClassifyError> {
    g.check_subset(s)?;
    if s.len() < 2 {
        return Err(ClassifyError::SetTooSmall);
    }
    Ok(())
}

/// Whether some `T` with `|T| ≥ 2` has `|TS| ≤ min(|G| − 2, |T| + |S| − 1)`,
/// decided as `κ₂(S') ≤ |S| − 1` for the right translate `S' ∋ 1`.
pub fn hypothesis_holds(g: &FiniteGroup, s: &GroupSubset) -> Result<Hypothesis, ClassifyError> {
    require_pair(g, s)?;
    let normalized = normalize(g, s)?;
    if !normalized.generates {
        return Ok(Hypothesis { holds: true, normalized, non_generating: true, witness: None });
    }
    let witness = boundary_at_most(g, &normalized.set, 2, s.len() - 1)?;
    Ok(Hypothesis { holds: witness.is_some(), normalized, non_generating: false, witness })
}

/// Direct scan over every `T ∋ 1`; exponential, for cross-checking.
pub fn hypothesis_by_enumeration(g: &FiniteGroup, s: &GroupSubset) -> Result<bool, ClassifyError> {
    require_pair(g, s)?;
    let n = g.order();
    Ok(scan_translates(g, s, |t, ts| t >= 2 && ts + 2 <= n && ts < t + s.len()))
}

/// Calls `accept(|T|, |TS|)` for every `T` containing the identity, which
/// covers all `T` up to left translation. Limited to order 24.
fn scan_translates(g: &FiniteGroup, s: &GroupSubset, accept: impl Fn(usize, usize) -> bool) -> bool {
    let n = g.order();
    assert!(n <= 24, "translate scan limited to order 24");
    let rows: Vec<u32> = (0..n)
        .map(|x| s.iter().fold(0u32, |m, t| m | 1 << g.mul(x, t)))
        .collect();
    let mut prod = vec![0u32; 1usize << (n - 1)];
    prod[0] = rows[0];
    for m in 0..prod.len() {
        if m > 0 {
            let top = usize::BITS as usize - 1 - m.leading_zeros() as usize;
            prod[m] = prod[m & !(1 << top)] | rows[top + 1];
        }
        if accept(m.count_ones() as usize + 1, prod[m].count_ones() as usize) {
            return true;
        }
    }
    false
}

fn progression_from(g: &FiniteGroup, t: &GroupSubset) -> Option<usize> {
    if !t.contains(0) {
        return None;
    }
    let m = t.len();
    t.iter().filter(|&a| a != 0).find(|&a| {
        let mut x = 0;
        let mut seen = GroupSubset::empty(g.order());
        for _ in 0..m {
            if !t.contains(x) || seen.contains(x) {
                return false;
            }
            seen.insert(x);
            x = g.mul(x, a);
        }
        true
    })
}

/// First `(side, g, a)` with `gS` or `Sg` equal to `{1, a, …}`; left before
/// right, then by `g`, then by `a`.
pub fn detect_geometric_progression(g: &FiniteGroup, s: &GroupSubset) -> Result<Option<Witness>, ClassifyError> {
    require_pair(g, s)?;
    for side in [Side::Left, Side::Right] {
        // 1 ∈ gS forces g ∈ S⁻¹.
        let mut shifts: Vec<usize> = s.iter().map(|x| g.inv(x)).collect();
        shifts.sort_unstable();
        for x in shifts {
            let t = match side {
                Side::Left => crate::sumset::left_translate(g, x, s),
                Side::Right => crate::sumset::right_translate(g, s, x),
            };
            if let Some(a) = progression_from(g, &t) {
                return Ok(Some(Witness::Progression { side, g: x, a }));
            }
        }
    }
    Ok(None)
}

/// Smallest proper nontrivial `H` with `|HS^ε| ≤ |H| + |S| − 1`.
pub fn find_case_ii_subgroup(g: &FiniteGroup, s: &GroupSubset) -> Result<Option<Witness>, ClassifyError> {
    Classifier::new(g).case_ii(s)
}

/// First `(H, a, ε)` with `|HaH| = |H|²` and `|AS^ε| = |A|+|S|−1 = |G|−|A|`;
/// `a` runs over the smallest element of each coset `Ha ≠ H`.
pub fn find_case_iii_witness(g: &FiniteGroup, s: &GroupSubset) -> Result<Option<Witness>, ClassifyError> {
    Classifier::new(g).case_iii(s)
}

/// Re-evaluates the defining (in)equalities of a witness from scratch.
pub fn replay_witness(g: &FiniteGroup, s: &GroupSubset, w: &Witness) -> Result<Vec<Check>, ClassifyError> {
    let n = s.len();
    let mut out = Vec::new();
    match w {
        Witness::Progression { side, g: x, a } => {
            let t = match side {
                Side::Left => crate::sumset::left_translate(g, *x, s),
                Side::Right => crate::sumset::right_translate(g, s, *x),
            };
            let mut powers = GroupSubset::empty(g.order());
            let mut y = 0;
            for _ in 0..n {
                powers.insert(y);
                y = g.mul(y, *a);
            }
            out.push(Check::sets(format!("{} translate by {x}", side.name()), &t, Relation::Eq, &powers));
            out.push(Check::size("distinct powers", powers.len(), Relation::Eq, n));
        }
        Witness::Subgroup { h, exponent } => {
            let hs = product_set(g, h, &exponent.apply(g, s))?;
            out.push(Check::flag("subgroup", g.is_subgroup(h), true));
            out.push(Check::size("|H|", h.len(), Relation::Gt, 1));
            out.push(Check::size("|H|", h.len(), Relation::Lt, g.order()));
            out.push(Check::size(format!("|HS^{}|", exponent.value()), hs.len(), Relation::Le, h.len() + n - 1));
        }
        Witness::TwoCosets { h, a, exponent } => {
            let m = h.len();
            let big_a = h.union(&g.right_coset(h, *a));
            let as_ = product_set(g, &big_a, &exponent.apply(g, s))?;
            out.push(Check::flag("subgroup", g.is_subgroup(h), true));
            out.push(Check::flag("a outside H", !h.contains(*a), true));
            out.push(Check::size("|HaH|", g.double_coset_size(h, *a)?, Relation::Eq, m * m));
            out.push(Check::size("|A|", big_a.len(), Relation::Eq, 2 * m));
            let e = exponent.value();
            out.push(Check::size(format!("|AS^{e}|"), as_.len(), Relation::Eq, big_a.len() + n - 1));
            out.push(Check::size(format!("|AS^{e}|"), as_.len(), Relation::Eq, g.order() - big_a.len()));
        }
    }
    Ok(out)
}

fn hypothesis_checks(g: &FiniteGroup, s: &GroupSubset, hyp: &Hypothesis) -> Result<Vec<Check>, ClassifyError> {
    let mut out = vec![Check::flag("normalized contains 1", hyp.normalized.contains_identity, true)];
    if hyp.non_generating {
        let sub = g.generated_subgroup(&hyp.normalized.set)?;
        out.push(Check::size("|<S>|", sub.len(), Relation::Lt, g.order()));
        return Ok(out);
    }
    if let Some(x) = &hyp.witness {
        let xs = product_set(g, x, &hyp.normalized.set)?;
        out.push(Check::size("|X|", x.len(), Relation::Ge, 2));
        out.push(Check::size("|XS|", xs.len(), Relation::Le, g.order() - 2));
        out.push(Check::int(
            "|XS|-|X|",
            xs.len() as i64 - x.len() as i64,
            Relation::Le,
            s.len() as i64 - 1,
        ));
    }
    Ok(out)
}

/// Hypothesis first, then the three cases in order; `VIOLATION` if the
/// hypothesis holds and no case does.
pub fn classify(g: &FiniteGroup, s: &GroupSubset) -> Result<ClassificationResult, ClassifyError> {
    Classifier::new(g).classify(s)
}

/// A group together with its subgroups, for classifying many sets.
#[derive(Clone, Debug)]
pub struct Classifier<'g> {
    g: &'g FiniteGroup,
    subgroups: Vec<GroupSubset>,
}

impl<'g> Classifier<'g> {
    pub fn new(g: &'g FiniteGroup) -> Self {
        Self { g, subgroups: g.subgroups() }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.g
    }

    pub fn subgroups(&self) -> &[GroupSubset] {
        &self.subgroups
    }

    pub fn classify(&self, s: &GroupSubset) -> Result<ClassificationResult, ClassifyError> {
        let g = self.g;
        let hypothesis = hypothesis_holds(g, s)?;
        let mut transcript = hypothesis_checks(g, s, &hypothesis)?;
        if !hypothesis.holds {
            transcript.push(Check::flag("hypothesis", false, true));
            return Ok(ClassificationResult { case: Case::HypothesisFails, witness: None, hypothesis, transcript });
        }
        let mut found = detect_geometric_progression(g, s)?.map(|w| (Case::CaseI, w));
        if found.is_none() {
            found = self.case_ii(s)?.map(|w| (Case::CaseII, w));
        }
        if found.is_none() {
            found = self.case_iii(s)?.map(|w| (Case::CaseIII, w));
        }
        if let Some((case, w)) = found {
            transcript.extend(replay_witness(g, s, &w)?);
            return Ok(ClassificationResult { case, witness: Some(w), hypothesis, transcript });
        }
        transcript.push(Check::flag("some case holds", false, true));
        Ok(ClassificationResult { case: Case::Violation, witness: None, hypothesis, transcript })
    }

    pub fn case_ii(&self, s: &GroupSubset) -> Result<Option<Witness>, ClassifyError> {
        let g = self.g;
        require_pair(g, s)?;
        let inv = inverse_set(g, s);
        for h in self.subgroups.iter().filter(|h| h.len() > 1 && h.len() < g.order()) {
            for (exponent, set) in [(Exponent::Plus, s), (Exponent::Minus, &inv)] {
                if product_set(g, h, set)?.len() < h.len() + s.len() {
                    return Ok(Some(Witness::Subgroup { h: h.clone(), exponent }));
                }
            }
        }
        Ok(None)
    }

    pub fn case_iii(&self, s: &GroupSubset) -> Result<Option<Witness>, ClassifyError> {
        let g = self.g;
        require_pair(g, s)?;
        let n = g.order();
        let sets = [s.clone(), inverse_set(g, s)];
        for h in &self.subgroups {
            let m = h.len();
            // |A| + |S| - 1 = |G| - |A| pins |S|.
            if m * m > n || s.len() + 4 * m != n + 1 {
                continue;
            }
            let (cosets, _) = g.right_cosets(h)?;
            for c in cosets.iter().skip(1) {
                let a = c.min_element().expect("nonempty");
                if g.double_coset_size(h, a)? != m * m {
                    continue;
                }
                let big_a = h.union(c);
                for (i, exponent) in [Exponent::Plus, Exponent::Minus].into_iter().enumerate() {
                    let as_ = product_set(g, &big_a, &sets[i])?;
                    if as_.len() + 1 == big_a.len() + s.len() && as_.len() + big_a.len() == n {
                        return Ok(Some(Witness::TwoCosets { h: h.clone(), a, exponent }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// See [`verify_mann`].
    pub fn verify_mann(&self, s: &GroupSubset) -> Result<MannVerdict, ClassifyError> {
        let g = self.g;
        let hypothesis = mann_hypothesis(g, s)?;
        let mut checks = Vec::new();
        if !hypothesis {
            return Ok(MannVerdict { hypothesis, witness: None, checks });
        }
        let bound = s.len();
        for h in self.subgroups.iter().filter(|h| h.len() < g.order()) {
            for side in [Side::Left, Side::Right] {
                let prod = match side {
                    Side::Left => product_set(g, h, s)?,
                    Side::Right => product_set(g, s, h)?,
                };
                if prod.len() + 2 <= h.len() + bound {
                    let name = if side == Side::Left { "|HS|" } else { "|SH|" };
                    checks.push(Check::int(name, prod.len() as i64, Relation::Le, (h.len() + bound) as i64 - 2));
                    return Ok(MannVerdict { hypothesis, witness: Some((h.clone(), side)), checks });
                }
            }
        }
        checks.push(Check::flag("covering subgroup found", false, true));
        Ok(MannVerdict { hypothesis, witness: None, checks })
    }
}

/// A case III result has `|S| = |G| + 1 − 4|H|` and `|S| > |G| − 4√|G|`;
/// other cases pass vacuously.
pub fn check_corollary_bound(g: &FiniteGroup, s: &GroupSubset, result: &ClassificationResult) -> Vec<Check> {
    let n = g.order();
    match &result.witness {
        Some(Witness::TwoCosets { h, .. }) if result.case == Case::CaseIII => {
            let gap = n - s.len();
            vec![
                Check::size("|S|", s.len(), Relation::Eq, n + 1 - 4 * h.len()),
                // n - |S| < 4 sqrt(n), squared
                Check::size("(|G|-|S|)^2", gap * gap, Relation::Lt, 16 * n),
            ]
        }
        _ => Vec::new(),
    }
}

pub fn classify_example(inst: &ExampleInstance) -> Result<ClassificationResult, ClassifyError> {
    classify(&inst.group, &inst.s)
}

pub fn classification_kv(g: &FiniteGroup, s: &GroupSubset, r: &ClassificationResult) -> KvReport {
    let mut kv = KvReport::new();
    kv.push("order", g.order())
        .push("set", set_token(s))
        .push("normalized", set_token(&r.hypothesis.normalized.set))
        .push("hypothesis", r.hypothesis.holds)
        .push("non_generating", r.hypothesis.non_generating)
        .push("case", r.case.tag());
    match &r.witness {
        Some(Witness::Progression { side, g: x, a }) => {
            kv.push("witness.side", side.name()).push("witness.g", x).push("witness.a", a);
        }
        Some(Witness::Subgroup { h, exponent }) => {
            kv.push("witness.H", set_token(h)).push("witness.epsilon", exponent.value());
        }
        Some(Witness::TwoCosets { h, a, exponent }) => {
            kv.push("witness.H", set_token(h))
                .push("witness.a", a)
                .push("witness.epsilon", exponent.value());
        }
        None => {}
    }
    kv.push_checks("transcript", &r.transcript);
    kv
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MannVerdict {
    /// Some `T` has `TS ≠ G` and `|TS| ≤ |T| + |S| − 2`.
    pub hypothesis: bool,
    pub witness: Option<(GroupSubset, Side)>,
    pub checks: Vec<Check>,
}

impl MannVerdict {
    pub fn pass(&self) -> bool {
        (!self.hypothesis || self.witness.is_some()) && self.checks.iter().all(|c| c.pass)
    }
}

/// The Mann hypothesis decided through `κ₁`.
pub fn mann_hypothesis(g: &FiniteGroup, s: &GroupSubset) -> Result<bool, ClassifyError> {
    g.check_subset(s)?;
    if s.len() < 2 {
        return Ok(false);
    }
    let norm = normalize(g, s)?;
    if !norm.generates {
        // T = <S'> itself.
        return Ok(true);
    }
    Ok(boundary_at_most(g, &norm.set, 1, s.len() - 2)?.is_some())
}

/// The Mann hypothesis by scanning every `T ∋ 1`.
pub fn mann_hypothesis_by_enumeration(g: &FiniteGroup, s: &GroupSubset) -> Result<bool, ClassifyError> {
    g.check_subset(s)?;
    if s.is_empty() {
        return Err(ClassifyError::SetTooSmall);
    }
    let n = g.order();
    Ok(scan_translates(g, s, |t, ts| ts < n && ts + 2 <= t + s.len()))
}

/// If the hypothesis holds, finds a proper subgroup with
/// `|HS| ≤ |H|+|S|−2` or `|SH| ≤ |H|+|S|−2`.
pub fn verify_mann(g: &FiniteGroup, s: &GroupSubset) -> Result<MannVerdict, ClassifyError> {
    Classifier::new(g).verify_mann(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCosetVerdict {
    /// Hypotheses hold and a two-coset atom was found.
    pub applicable: bool,
    /// Why the theorem does not apply, when it does not.
    pub reason: Option<String>,
    pub h: Option<GroupSubset>,
    pub atom: Option<GroupSubset>,
    pub checks: Vec<Check>,
}

impl TwoCosetVerdict {
    /// An unmet precondition is reported, not failed.
    pub fn pass(&self) -> bool {
        !self.applicable || self.checks.iter().all(|c| c.pass)
    }
}

fn not_applicable(reason: impl Into<String>, checks: Vec<Check>) -> TwoCosetVerdict {
    TwoCosetVerdict { applicable: false, reason: Some(reason.into()), h: None, atom: None, checks }
}

/// The complement of `HS` is two right cosets of `H` and `HS = AS`, for a
/// 2-atom `A = H ∪ Ha` with `|H| ≥ 2`. Works on the right translate
/// `S' ∋ 1`.
pub fn verify_two_coset_theorem(g: &FiniteGroup, s: &GroupSubset, exec: Exec) -> Result<TwoCosetVerdict, ClassifyError> {
    require_pair(g, s)?;
    let norm = normalize(g, s)?;
    let s1 = norm.set;
    let n = g.order();
    if s1.len() < 3 {
        return Ok(not_applicable("|S| < 3", Vec::new()));
    }
    if !norm.generates {
        return Ok(not_applicable("S does not generate", Vec::new()));
    }
    let opts = AtomOptions { exec, count_fragments: false, ..AtomOptions::default() };
    let two = match find_atoms_with(g, &s1, 2, &opts) {
        Ok(r) => r,
        Err(crate::SumsetError::NotSeparable { .. }) => return Ok(not_applicable("not 2-separable", Vec::new())),
        Err(e) => return Err(e.into()),
    };
    let kappa1 = isoperimetric_number(g, &s1, 1)?;
    let mut checks = vec![
        Check::size("kappa2", two.kappa, Relation::Eq, s1.len() - 1),
        Check::size("kappa1", kappa1, Relation::Eq, s1.len() - 1),
        Check::size("|G|", n, Relation::Ge, 2 * two.alpha + two.kappa),
    ];
    if checks.iter().any(|c| !c.pass) {
        return Ok(not_applicable("isoperimetric hypotheses fail", checks));
    }
    checks.clear();
    // No 2-fragment may be a subgroup; fragments are closed under left
    // translation, so a subgroup fragment contains the identity.
    for h in g.subgroups() {
        if h.len() < 2 || n - h.len() < 2 {
            continue;
        }
        let hs = product_set(g, &h, &s1)?;
        if n - hs.len() >= 2 && hs.len() - h.len() == two.kappa {
            return Ok(not_applicable(format!("2-fragment {} is a subgroup", set_token(&h)), checks));
        }
    }
    for atom in &two.atoms {
        let h = maximal_left_period(g, atom)?;
        if h.len() < 2 || atom.len() != 2 * h.len() {
            continue;
        }
        let hs = product_set(g, &h, &s1)?;
        let as_ = product_set(g, atom, &s1)?;
        let rest = hs.complement();
        let pieces = g.right_coset_decomposition(&rest, &h)?;
        let whole_cosets = pieces.iter().all(|p| p.len() == h.len());
        checks.push(Check::flag("complement is a union of H-cosets", whole_cosets, true));
        checks.push(Check::size("cosets outside HS", pieces.len(), Relation::Eq, 2));
        checks.push(Check::sets("HS", &hs, Relation::Eq, &as_));
        return Ok(TwoCosetVerdict { applicable: true, reason: None, h: Some(h), atom: Some(atom.clone()), checks });
    }
    Ok(not_applicable("no 2-atom is two cosets of a nontrivial subgroup", checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example::build_example;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        let g = z(7);
        assert!(hypothesis_holds(&g, &g.subset([0, 1, 2]).unwrap()).unwrap().holds);
        let g5 = z(5);
        assert!(!hypothesis_holds(&g5, &g5.whole()).unwrap().holds);
        assert_eq!(hypothesis_holds(&g5, &g5.subset([1]).unwrap()), Err(ClassifyError::SetTooSmall));
    }

    #[test]
    fn progressions() {
        let g = z(7);
        assert_eq!(
            detect_geometric_progression(&g, &g.subset([0, 2, 4]).unwrap()).unwrap(),
            Some(Witness::Progression { side: Side::Left, g: 0, a: 2 })
        );
        assert_eq!(detect_geometric_progression(&g, &g.subset([0, 1, 3]).unwrap()).unwrap(), None);
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let f = 3;
        assert_eq!(d3.label(f), "f");
        let w = detect_geometric_progression(&d3, &d3.subset([0, f]).unwrap()).unwrap();
        assert!(matches!(w, Some(Witness::Progression { a, .. }) if a == f));
    }

    #[test]
    fn small_cases() {
        let g = z(7);
        let r = classify(&g, &g.subset([0, 1, 2]).unwrap()).unwrap();
        assert_eq!(r.case, Case::CaseI);
        let g6 = z(6);
        let s = g6.subset([0, 2, 3]).unwrap();
        let r = classify(&g6, &s).unwrap();
        assert_eq!(r.case, Case::CaseII);
        assert!(matches!(&r.witness, Some(Witness::Subgroup { h, .. }) if *h == g6.subset([0, 3]).unwrap()));
        assert!(r.transcript.iter().all(|c| c.pass));
        assert_eq!(find_case_iii_witness(&g, &g.subset([0, 1, 2]).unwrap()).unwrap(), None);
    }

    #[test]
    fn example_is_case_three() {
        let inst = build_example(7, 3).unwrap();
        let r = classify_example(&inst).unwrap();
        assert_eq!(r.case, Case::CaseIII, "{:?}", r.transcript);
        match &r.witness {
            Some(Witness::TwoCosets { h, .. }) => assert_eq!(h.len(), 3),
            w => panic!("unexpected witness {w:?}"),
        }
        assert!(r.transcript.iter().all(|c| c.pass));
        let bound = check_corollary_bound(&inst.group, &inst.s, &r);
        assert_eq!(bound.len(), 2);
        assert!(bound.iter().all(|c| c.pass), "{bound:?}");
        assert_eq!(find_case_ii_subgroup(&inst.group, &inst.s).unwrap(), None);
    }

    #[test]
    fn mann_examples() {
        let g = z(6);
        let v = verify_mann(&g, &g.subset([0, 2, 4]).unwrap()).unwrap();
        assert!(v.hypothesis && v.pass());
        let g7 = z(7);
        for s in [vec![0, 1], vec![0, 1, 3], vec![0, 2, 3, 5, 6]] {
            let s = g7.subset(s).unwrap();
            assert!(!mann_hypothesis(&g7, &s).unwrap());
            assert!(!mann_hypothesis_by_enumeration(&g7, &s).unwrap());
        }
        let s = g.subset([0, 3, 4]).unwrap();
        assert_eq!(mann_hypothesis(&g, &s).unwrap(), mann_hypothesis_by_enumeration(&g, &s).unwrap());
        assert!(verify_mann(&g, &s).unwrap().pass());
    }

    #[test]
    fn two_coset_examples() {
        let inst = build_example(7, 3).unwrap();
        let v = verify_two_coset_theorem(&inst.group, &inst.s, Exec::Sequential).unwrap();
        assert!(v.applicable, "{:?}", v.reason);
        assert!(v.pass(), "{:?}", v.checks);
        let g6 = z(6);
        let v = verify_two_coset_theorem(&g6, &g6.subset([0, 2, 3]).unwrap(), Exec::Sequential).unwrap();
        assert!(!v.applicable);
    }
}
