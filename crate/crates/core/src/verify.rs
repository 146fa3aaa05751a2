//! Exhaustive verification sweeps over the catalog.
//!
//! Every suite fans its instances out with [`map_ordered`] and folds the
//! per-block tallies back in input order, so the report does not depend on
//! the number of workers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{catalog, semidirect_pairs, CatalogGroup};
use crate::classify::{
    check_corollary_bound, detect_geometric_progression, hypothesis_by_enumeration, mann_hypothesis,
    mann_hypothesis_by_enumeration, verify_two_coset_theorem, Case, Classifier, Side, Witness,
};
use crate::error::VerifyError;
use crate::example::{build_example, sophie_germain_scan};
use crate::flow::{cardinality_from_report, cut_profile, flow_lambda, DEFAULT_CUT_ATOM_CAP, ENUMERATION_LIMIT};
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};
use crate::oracle::oracle_atoms;
use crate::par::{map_ordered, Exec};
use crate::quotient::{
    build_quotient_graph, contains_k4_star, every_arc_in_oriented_triangle, is_antisymmetric,
    is_octahedron_underlying, verify_translation_transitivity, DirectedGraph,
};
use crate::report::{set_token, Format, KvReport};
use crate::subset::GroupSubset;
use crate::sumset::{
    find_atoms_with, fragments_containing_identity, inverse_set, is_k_separable, left_translate,
    maximal_left_period, product_set, right_translate, AtomOptions, FragmentReport,
};

/// Orders up to which the exponential `T`-scans run inside the sweeps.
const SCAN_LIMIT: usize = 12;

/// Fragments listed per instance for the fragment-atom check.
const FRAGMENT_CAP: usize = 1 << 14;

/// Largest `k` for the graph checks.
const GRAPH_K: usize = 4;

/// Flow is cross-checked against enumeration up to this many vertices.
const FLOW_CHECK_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    MainTheorem,
    Intersection,
    Oracle,
    Mann,
    TwoCoset,
    GraphLemmas,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::MainTheorem,
        Suite::Intersection,
        Suite::Oracle,
        Suite::Mann,
        Suite::TwoCoset,
        Suite::GraphLemmas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::Intersection => "intersection",
            Suite::Oracle => "oracle",
            Suite::Mann => "mann",
            Suite::TwoCoset => "two-coset",
            Suite::GraphLemmas => "graph-lemmas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown suite `{s}`")))
    }
}

/// Instance family for the two-coset suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Constructed examples with `p = 2q + 1`, `p ≤ limit`.
    SophieGermain,
    /// Constructed examples for every valid `(p, q)` with `p ≤ limit`.
    Semidirect,
    /// Every generating `S ∋ 1` in the catalog up to the order bound.
    Catalog,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SophieGermain => "sophie-germain",
            Family::Semidirect => "semidirect",
            Family::Catalog => "catalog",
        }
    }
}

impl FromStr for Family {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Family::SophieGermain, Family::Semidirect, Family::Catalog]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::Config(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_order: usize,
    pub family: Family,
    /// Bound on `p` for the constructed families.
    pub limit: usize,
    pub seed: u64,
    /// Random instances added to the oracle and intersection suites.
    pub samples: usize,
    /// Order bound for those random instances.
    pub sample_order: usize,
    /// Constructed examples up to this order also get the full two-coset
    /// hypothesis check, not only the coset linkage.
    pub theorem_order: usize,
    pub exec: Exec,
}

impl SweepConfig {
    pub fn for_suite(suite: Suite) -> Self {
        let max_order = match suite {
            Suite::MainTheorem | Suite::Intersection | Suite::Oracle => 12,
            Suite::Mann => 10,
            Suite::TwoCoset => 12,
            Suite::GraphLemmas => 24,
        };
        Self {
            max_order,
            family: Family::SophieGermain,
            limit: 25,
            seed: 0,
            samples: 200,
            sample_order: 12,
            theorem_order: 600,
            exec: Exec::Parallel,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub suite: Suite,
    pub instances: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
    /// Summed counters over all sections.
    pub counts: BTreeMap<String, u64>,
    pub kv: KvReport,
}

impl SweepReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn render(&self, format: Format) -> String {
        self.kv.render(format)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    instances: u64,
    failures: u64,
    counts: BTreeMap<String, u64>,
    first_failure: Option<String>,
}

impl Tally {
    fn count(&mut self, key: &str) {
        self.add(key, 1);
    }

    fn add(&mut self, key: &str, n: u64) {
        *self.counts.entry(key.to_string()).or_default() += n;
    }

    fn require(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failures += other.failures;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    fn fold(parts: impl IntoIterator<Item = Tally>) -> Tally {
        let mut out = Tally::default();
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

fn finish(suite: Suite, cfg: &SweepConfig, sections: Vec<(String, Tally)>) -> SweepReport {
    let mut kv = KvReport::new();
    kv.push("suite", suite.name())
        .push("seed", cfg.seed)
        .push("max_order", cfg.max_order);
    match suite {
        Suite::TwoCoset => {
            kv.push("family", cfg.family.name())
                .push("limit", cfg.limit)
                .push("theorem_order", cfg.theorem_order);
        }
        Suite::Oracle | Suite::Intersection => {
            kv.push("samples", cfg.samples).push("sample_order", cfg.sample_order);
        }
        _ => {}
    }
    kv.push("sections", sections.len());
    let mut total = Tally::default();
    for (i, (name, t)) in sections.into_iter().enumerate() {
        let p = format!("section.{i}");
        kv.push(format!("{p}.name"), &name)
            .push(format!("{p}.instances"), t.instances)
            .push(format!("{p}.failures"), t.failures);
        for (k, v) in &t.counts {
            kv.push(format!("{p}.{k}"), v);
        }
        if let Some(f) = &t.first_failure {
            kv.push(format!("{p}.first_failure"), f);
        }
        let mut t = t;
        if let Some(f) = t.first_failure.take() {
            t.first_failure = Some(format!("{name}: {f}"));
        }
        total.absorb(t);
    }
    for (k, v) in &total.counts {
        kv.push(format!("total.{k}"), v);
    }
    kv.push("instances", total.instances)
        .push("failures", total.failures)
        .push("first_failure", total.first_failure.as_deref().unwrap_or("none"));
    SweepReport {
        suite,
        instances: total.instances,
        failures: total.failures,
        first_failure: total.first_failure,
        counts: total.counts,
        kv,
    }
}

/// Runs one suite.
pub fn run_sweep(suite: Suite, cfg: &SweepConfig) -> Result<SweepReport, VerifyError> {
    if cfg.max_order == 0 {
        return Err(VerifyError::Config("order bound must be positive".into()));
    }
    let sections = match suite {
        Suite::MainTheorem => main_theorem(cfg)?,
        Suite::Intersection => intersection(cfg)?,
        Suite::Oracle => oracle_suite(cfg)?,
        Suite::Mann => mann(cfg)?,
        Suite::TwoCoset => two_coset(cfg)?,
        Suite::GraphLemmas => graph_lemmas(cfg)?,
    };
    Ok(finish(suite, cfg, sections))
}

/// The set with bitmask `m`; with `with_identity`, bit `i` stands for
/// element `i + 1` and the identity is always present.
fn mask_set(n: usize, m: u64, with_identity: bool) -> GroupSubset {
    let mut s = GroupSubset::empty(n);
    let offset = usize::from(with_identity);
    if with_identity {
        s.insert(0);
    }
    for i in 0..n - offset {
        if m >> i & 1 == 1 {
            s.insert(i + offset);
        }
    }
    s
}

/// Applies `f` to every nonempty subset (every subset containing 1 with
/// `with_identity`), in mask order.
fn sweep_subsets<F>(n: usize, with_identity: bool, exec: Exec, f: F) -> Tally
where
    F: Fn(&GroupSubset, &mut Tally) + Sync + Send,
{
    const BLOCK: u64 = 256;
    let free = n - usize::from(with_identity);
    let total = 1u64 << free;
    let start = u64::from(!with_identity);
    let blocks: Vec<u64> = (0..total.div_ceil(BLOCK)).collect();
    let parts = map_ordered(exec, &blocks, |&b| {
        let mut t = Tally::default();
        for m in (b * BLOCK).max(start)..((b + 1) * BLOCK).min(total) {
            f(&mask_set(n, m, with_identity), &mut t);
        }
        t
    });
    Tally::fold(parts)
}

fn groups_up_to(max_order: usize) -> Result<Vec<CatalogGroup>, VerifyError> {
    if max_order > 20 {
        return Err(VerifyError::Config(format!(
            "exhaustive set sweeps are limited to order 20, got {max_order}"
        )));
    }
    Ok(catalog(max_order)?.into_iter().filter(|c| c.group.order() >= 2).collect())
}

/// First `(side, g, a)` in the same order as the detector, found by trying
/// every element as shift and ratio.
fn brute_force_progression(g: &FiniteGroup, s: &GroupSubset) -> Option<Witness> {
    let n = g.order();
    for side in [Side::Left, Side::Right] {
        for x in 0..n {
            let t = match side {
                Side::Left => left_translate(g, x, s),
                Side::Right => right_translate(g, s, x),
            };
            if !t.contains(0) {
                continue;
            }
            for a in 1..n {
                let mut powers = GroupSubset::empty(n);
                let mut y = 0;
                for _ in 0..s.len() {
                    powers.insert(y);
                    y = g.mul(y, a);
                }
                if powers == t {
                    return Some(Witness::Progression { side, g: x, a });
                }
            }
        }
    }
    None
}

/// `G \ X` split into right cosets of `h`; `None` unless every piece is a
/// full coset.
fn complement_cosets(g: &FiniteGroup, x: &GroupSubset, h: &GroupSubset) -> Option<usize> {
    let pieces = g.right_coset_decomposition(&x.complement(), h).ok()?;
    pieces.iter().all(|p| p.len() == h.len()).then_some(pieces.len())
}

fn main_theorem(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    let mut out = Vec::new();
    for entry in groups_up_to(cfg.max_order)? {
        let g = &entry.group;
        let n = g.order();
        let cls = Classifier::new(g);
        let t = sweep_subsets(n, true, cfg.exec, |s, t| {
            if s.len() < 2 || !g.generates(s) {
                return;
            }
            t.instances += 1;
            let tok = || set_token(s);
            let r = match cls.classify(s) {
                Ok(r) => r,
                Err(e) => return t.require(false, || format!("{}: {e}", tok())),
            };
            t.count(&r.case.tag().to_ascii_lowercase());
            t.require(r.case != Case::Violation, || format!("VIOLATION on {}", tok()));
            // A failed hypothesis ends on its own failing flag.
            let replayed = match r.case {
                Case::HypothesisFails => &r.transcript[..r.transcript.len() - 1],
                _ => &r.transcript[..],
            };
            t.require(replayed.iter().all(|c| c.pass), || format!("transcript fails on {}", tok()));
            for c in check_corollary_bound(g, s, &r) {
                t.require(c.pass, || format!("{} on {}", c.line(), tok()));
            }
            if let Some(Witness::TwoCosets { h, a, exponent }) = &r.witness {
                let set = if exponent.value() == 1 { s.clone() } else { inverse_set(g, s) };
                let hs = product_set(g, h, &set).expect("same group");
                let conj: GroupSubset = h.iter().map(|x| g.mul(g.mul(g.inv(*a), x), *a)).fold(
                    GroupSubset::empty(n),
                    |mut acc, y| {
                        acc.insert(y);
                        acc
                    },
                );
                t.require(h.intersection_len(&conj) == 1, || format!("H meets its conjugate on {}", tok()));
                t.require(complement_cosets(g, &hs, h) == Some(2), || {
                    format!("complement of HS is not two cosets on {}", tok())
                });
            }
            if n <= SCAN_LIMIT {
                t.count("hypothesis_scanned");
                match hypothesis_by_enumeration(g, s) {
                    Ok(h) => t.require(h == r.hypothesis.holds, || format!("hypothesis scan disagrees on {}", tok())),
                    Err(e) => t.require(false, || format!("{}: {e}", tok())),
                }
                t.count("progression_scanned");
                let found = detect_geometric_progression(g, s).ok().flatten();
                t.require(found == brute_force_progression(g, s), || {
                    format!("progression detector disagrees on {}", tok())
                });
            }
        });
        out.push((entry.name, t));
    }
    Ok(out)
}

/// Seeded `(catalog index, S, k)` triples: `S ∋ 1` generating and
/// `k`-separable, `k ∈ {1, 2}`.
pub fn sample_instances(
    seed: u64,
    count: usize,
    max_order: usize,
) -> Result<Vec<(CatalogGroup, GroupSubset, usize)>, VerifyError> {
    let groups: Vec<CatalogGroup> = groups_up_to(max_order)?.into_iter().filter(|c| c.group.order() >= 3).collect();
    if groups.is_empty() {
        return Err(VerifyError::Config("no catalog group of order at least 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let entry = &groups[rng.gen_range(0..groups.len())];
        let g = &entry.group;
        let k = rng.gen_range(1..=2);
        let mut s = GroupSubset::empty(g.order());
        s.insert(0);
        for x in 1..g.order() {
            if rng.gen_bool(0.5) {
                s.insert(x);
            }
        }
        if s.len() >= 2 && g.generates(&s) && is_k_separable(g, &s, k) {
            out.push((entry.clone(), s, k));
        }
    }
    Ok(out)
}

fn compare_with_oracle(g: &FiniteGroup, s: &GroupSubset, k: usize, t: &mut Tally) {
    t.instances += 1;
    let tok = || format!("{} k={k}", set_token(s));
    let opts = AtomOptions::default();
    match (find_atoms_with(g, s, k, &opts), oracle_atoms(g, s, k)) {
        (Ok(a), Ok(b)) => {
            t.require(a.same_result(&b), || format!("search and oracle differ on {}", tok()));
            t.require(a.fragment_count == b.fragment_count, || format!("fragment counts differ on {}", tok()));
        }
        (a, b) => t.require(false, || format!("{}: {:?} vs {:?}", tok(), a.err(), b.err())),
    }
}

fn oracle_suite(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    let mut out = Vec::new();
    let samples = sample_instances(cfg.seed, cfg.samples, cfg.sample_order)?;
    let parts = map_ordered(cfg.exec, &samples, |(entry, s, k)| {
        let mut t = Tally::default();
        compare_with_oracle(&entry.group, s, *k, &mut t);
        t
    });
    out.push(("random".to_string(), Tally::fold(parts)));
    for entry in groups_up_to(cfg.max_order.min(SCAN_LIMIT))? {
        let g = &entry.group;
        let t = sweep_subsets(g.order(), true, cfg.exec, |s, t| {
            if s.len() < 2 || !g.generates(s) {
                return;
            }
            for k in 1..=2 {
                if is_k_separable(g, s, k) {
                    compare_with_oracle(g, s, k, t);
                }
            }
        });
        out.push((entry.name, t));
    }
    Ok(out)
}

fn atoms_report(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Result<FragmentReport, String> {
    let opts = AtomOptions { count_fragments: false, ..AtomOptions::default() };
    find_atoms_with(g, s, k, &opts).map_err(|e| e.to_string())
}

/// The atom and fragment statements of the isoperimetric method on one
/// generating `S ∋ 1`, for `k = 1, 2`.
fn intersection_checks(g: &FiniteGroup, s: &GroupSubset, t: &mut Tally) {
    let n = g.order();
    let inv = inverse_set(g, s);
    let tok = |k: usize| format!("{} k={k}", set_token(s));
    for k in 1..=2 {
        if !is_k_separable(g, s, k) {
            continue;
        }
        t.instances += 1;
        let (r, ri) = match (atoms_report(g, s, k), atoms_report(g, &inv, k)) {
            (Ok(r), Ok(ri)) => (r, ri),
            (a, b) => return t.require(false, || format!("{}: {:?} {:?}", tok(k), a.err(), b.err())),
        };
        t.require(r.kappa == ri.kappa, || format!("kappa(S) != kappa(S^-1) on {}", tok(k)));
        t.require(!r.atoms_truncated, || format!("atom list truncated on {}", tok(k)));

        let applicable = n >= 2 * r.alpha + r.kappa;
        // One of S, S⁻¹ always satisfies the size condition.
        t.require(applicable || n >= 2 * ri.alpha + ri.kappa, || format!("size condition fails for S and S^-1 on {}", tok(k)));
        if applicable {
            t.count("intersection_applicable");
            let v = crate::sumset::intersection_from_report(g, &r);
            t.add("intersection_pairs", v.pairs_checked);
            t.require(v.pass(), || format!("two atoms meet in {k} or more points on {}", tok(k)));
        }

        if r.alpha <= ri.alpha {
            t.count("fragment_atom_applicable");
            match fragments_containing_identity(g, s, k, r.kappa, FRAGMENT_CAP) {
                Ok((frags, complete)) => {
                    if !complete {
                        t.count("fragment_list_truncated");
                    }
                    for a0 in &r.atoms {
                        for x in 0..n {
                            let a = left_translate(g, x, a0);
                            for f in &frags {
                                t.add("fragment_atom_pairs", 1);
                                let ok = a.is_subset(f) || a.intersection_len(f) < k;
                                t.require(ok, || format!("atom {} vs fragment {} on {}", set_token(&a), set_token(f), tok(k)));
                            }
                        }
                    }
                }
                Err(e) => t.require(false, || format!("{}: {e}", tok(k))),
            }
            if k == 1 {
                t.count("one_atom_applicable");
                t.require(r.atoms.len() == 1 && g.is_subgroup(&r.atoms[0]), || {
                    format!("1-atom is not a subgroup on {}", tok(k))
                });
            }
        }

        if k == 2 && s.len() >= 3 && applicable {
            nonperiodic_checks(g, s, &r, t, &tok(k));
        }
    }
}

/// Statements about 2-atoms under `|S| ≥ 3` and `|G| ≥ 2α₂ + κ₂`.
fn nonperiodic_checks(g: &FiniteGroup, s: &GroupSubset, r: &FragmentReport, t: &mut Tally, tok: &str) {
    let n = g.order();
    for a in &r.atoms {
        let h = match maximal_left_period(g, a) {
            Ok(h) => h,
            Err(e) => return t.require(false, || format!("{tok}: {e}")),
        };
        for x in 1..n {
            let ax = right_translate(g, a, x);
            t.require(a.intersection_len(&ax) <= h.len(), || {
                format!("|A ∩ A{x}| exceeds the left period for A={} on {tok}", set_token(a))
            });
        }
        if h.len() > 1 {
            t.count("periodic_atoms");
            continue;
        }
        t.count("nonperiodic_atoms");
        for x in 1..n {
            let right = a.intersection_len(&right_translate(g, a, x));
            let left = a.intersection_len(&left_translate(g, x, a));
            t.require(right.max(left) <= 1, || format!("A={} meets a translate by {x} twice on {tok}", set_token(a)));
        }
        let bound = 2.max(s.len() - 1);
        t.require(a.len() <= bound, || format!("|A|={} > max(2,|S|-1) on {tok}", a.len()));
        if a.len() > 2.min(s.len() - 1) {
            t.count("atom_size_above_min_form");
        }
        if a.len() >= 3 {
            t.count("large_nonperiodic_atoms");
            t.require(a.len() + s.len() <= r.kappa + 3, || {
                format!("|A|={} > kappa2-|S|+3 on {tok}", a.len())
            });
            generated_atom_check(g, a, t, tok);
        }
    }
}

/// `A` is 2-separable in `⟨A⟩` with `κ₂(A) = 2|A| − 3`.
fn generated_atom_check(g: &FiniteGroup, a: &GroupSubset, t: &mut Tally, tok: &str) {
    let result = g
        .generated_subgroup(a)
        .and_then(|k| g.restrict(&k))
        .map_err(|e| e.to_string())
        .and_then(|(sub, embed)| {
            let local = GroupSubset::from_elements(sub.order(), a.iter().map(|x| embed.iter().position(|&y| y == x).expect("in subgroup")))
                .map_err(|e| e.to_string())?;
            if !is_k_separable(&sub, &local, 2) {
                return Ok(None);
            }
            Ok(Some(atoms_report(&sub, &local, 2)?.kappa))
        });
    match result {
        Ok(Some(kappa)) => t.require(kappa + 3 == 2 * a.len(), || {
            format!("kappa2(A)={kappa} in <A> for |A|={} on {tok}", a.len())
        }),
        Ok(None) => t.require(false, || format!("A={} not 2-separable in <A> on {tok}", set_token(a))),
        Err(e) => t.require(false, || format!("{tok}: {e}")),
    }
}

fn intersection(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    let mut out = Vec::new();
    for entry in groups_up_to(cfg.max_order)? {
        let g = &entry.group;
        let t = sweep_subsets(g.order(), true, cfg.exec, |s, t| {
            if s.len() >= 2 && g.generates(s) {
                intersection_checks(g, s, t);
            }
        });
        out.push((entry.name, t));
    }
    let samples = sample_instances(cfg.seed, cfg.samples, cfg.sample_order)?;
    let parts = map_ordered(cfg.exec, &samples, |(entry, s, _)| {
        let mut t = Tally::default();
        intersection_checks(&entry.group, s, &mut t);
        t
    });
    out.push(("random".to_string(), Tally::fold(parts)));
    Ok(out)
}

fn mann(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    if cfg.max_order > SCAN_LIMIT {
        return Err(VerifyError::Config(format!(
            "the Mann sweep scans every T and is limited to order {SCAN_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    for entry in groups_up_to(cfg.max_order)? {
        let g = &entry.group;
        let cls = Classifier::new(g);
        let t = sweep_subsets(g.order(), false, cfg.exec, |s, t| {
            t.instances += 1;
            let tok = || set_token(s);
            let (fast, slow) = match (mann_hypothesis(g, s), mann_hypothesis_by_enumeration(g, s)) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => return t.require(false, || format!("{}: {:?} {:?}", tok(), a.err(), b.err())),
            };
            t.require(fast == slow, || format!("hypothesis forms disagree on {}", tok()));
            if !fast {
                return;
            }
            t.count("hypothesis_holds");
            match cls.verify_mann(s) {
                Ok(v) => {
                    if let Some((_, side)) = &v.witness {
                        t.count(if *side == Side::Left { "witness_left" } else { "witness_right" });
                    }
                    t.require(v.pass(), || format!("no covering subgroup for {}", tok()));
                }
                Err(e) => t.require(false, || format!("{}: {e}", tok())),
            }
        });
        out.push((entry.name, t));
    }
    Ok(out)
}

fn two_coset(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    if cfg.family == Family::Catalog {
        let mut out = Vec::new();
        for entry in groups_up_to(cfg.max_order)? {
            let g = &entry.group;
            let t = sweep_subsets(g.order(), true, cfg.exec, |s, t| {
                if s.len() < 3 || !g.generates(s) {
                    return;
                }
                t.instances += 1;
                match verify_two_coset_theorem(g, s, Exec::Sequential) {
                    Ok(v) => {
                        if v.applicable {
                            t.count("applicable");
                        }
                        t.require(v.pass(), || format!("two-coset conclusion fails on {}", set_token(s)));
                    }
                    Err(e) => t.require(false, || format!("{}: {e}", set_token(s))),
                }
            });
            out.push((entry.name, t));
        }
        return Ok(out);
    }
    let pairs: Vec<(usize, usize)> = match cfg.family {
        Family::SophieGermain => sophie_germain_scan(cfg.limit)?.into_iter().map(|r| (r.p, r.q)).collect(),
        _ => semidirect_pairs(DEFAULT_MAX_ORDER).into_iter().filter(|&(p, _)| p <= cfg.limit).collect(),
    };
    let parts = map_ordered(cfg.exec, &pairs, |&(p, q)| {
        let mut t = Tally::default();
        t.instances += 1;
        let inst = match build_example(p, q) {
            Ok(i) => i,
            Err(e) => {
                t.require(false, || e.to_string());
                return t;
            }
        };
        let g = &inst.group;
        let hs = product_set(g, &inst.h, &inst.s).expect("same group");
        let as_ = product_set(g, &inst.a_set, &inst.s).expect("same group");
        t.require(complement_cosets(g, &hs, &inst.h) == Some(2), || "complement of HS is not two right cosets".into());
        t.require(hs == as_, || "HS != AS".into());
        t.require(hs.complement() == inst.a_set, || "complement of HS is not H ∪ Ha".into());
        if g.order() > cfg.theorem_order {
            t.count("theorem_skipped");
            return t;
        }
        match verify_two_coset_theorem(g, &inst.s, Exec::Sequential) {
            Ok(v) => {
                if v.applicable {
                    t.count("theorem_applicable");
                } else {
                    t.count("theorem_not_applicable");
                }
                t.require(v.pass(), || "two-coset conclusion fails".into());
            }
            Err(e) => t.require(false, || e.to_string()),
        }
        t
    });
    Ok(pairs
        .iter()
        .zip(parts)
        .map(|(&(p, q), t)| (format!("C{p}:C{q}"), t))
        .collect())
}

/// Arc-transitivity by trying every vertex permutation; small graphs only.
fn arc_transitive_by_search(q: &DirectedGraph) -> bool {
    let n = q.vertex_count();
    assert!(n <= 8, "permutation search limited to 8 vertices");
    let arcs: Vec<(usize, usize)> = q.arcs().collect();
    let Some(&first) = arcs.first() else { return true };
    let mut reached = std::collections::BTreeSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        if arcs.iter().all(|&(u, v)| q.has_arc(p[u], p[v])) {
            reached.insert((p[first.0], p[first.1]));
        }
    });
    reached.len() == arcs.len()
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        return f(p);
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}

/// One graph in the graph-lemma suite.
struct GraphJob {
    name: String,
    graph: DirectedGraph,
    /// Arc-transitivity already certified by the caller.
    certified: bool,
}

/// `λ_k` for every separable `k ≤ 4`, atom cardinalities on certified
/// graphs, and flow against enumeration on small graphs.
fn graph_checks(job: &GraphJob, t: &mut Tally) {
    let q = &job.graph;
    let n = q.vertex_count();
    t.instances += 1;
    if n > ENUMERATION_LIMIT {
        t.count("too_large");
        return;
    }
    let profile = match cut_profile(q, Exec::Sequential, DEFAULT_CUT_ATOM_CAP) {
        Ok(p) => p,
        Err(e) => return t.require(false, || format!("{}: {e}", job.name)),
    };
    let degree = q.regular_degree();
    let antisymmetric = is_antisymmetric(q);
    let mut previous = 0;
    for k in 1..=GRAPH_K.min(n / 2) {
        let report = match profile.report(k) {
            Ok(r) => r,
            Err(e) => return t.require(false, || format!("{} k={k}: {e}", job.name)),
        };
        t.require(report.lambda >= previous, || format!("lambda decreases at k={k} on {}", job.name));
        previous = report.lambda;
        if n <= FLOW_CHECK_LIMIT {
            t.count("flow_checked");
            match flow_lambda(q, k, Exec::Sequential) {
                Ok(f) => t.require(f == report.lambda, || {
                    format!("flow {f} vs enumeration {} at k={k} on {}", report.lambda, job.name)
                }),
                Err(e) => t.require(false, || format!("{} k={k}: {e}", job.name)),
            }
        }
        if job.certified {
            t.count("cardinality_checked");
            match cardinality_from_report(q, &report) {
                Ok(v) => t.require(v.pass(), || {
                    let bad: Vec<String> = v.checks.iter().filter(|c| !c.pass).map(|c| c.line()).collect();
                    format!("{} k={k}: {}", job.name, bad.join("; "))
                }),
                Err(e) => t.require(false, || format!("{} k={k}: {e}", job.name)),
            }
        }
        if k == 4 && job.certified && degree == Some(2) && antisymmetric {
            t.count("degree_two_antisymmetric");
            t.require(report.lambda >= 4, || format!("lambda4={} < 4 on {}", report.lambda, job.name));
        }
    }
}

fn fixed_graphs(max_vertices: usize) -> Result<Vec<GraphJob>, VerifyError> {
    let graph = |r: Result<DirectedGraph, crate::GraphError>| r.map_err(|e| VerifyError::Config(e.to_string()));
    let mut jobs = Vec::new();
    for n in 3..=FLOW_CHECK_LIMIT {
        jobs.push(GraphJob { name: format!("cycle{n}"), graph: graph(DirectedGraph::directed_cycle(n))?, certified: true });
    }
    for n in 2..=8 {
        jobs.push(GraphJob { name: format!("clique{n}"), graph: graph(DirectedGraph::bidirected_complete(n))?, certified: true });
    }
    let z6 = FiniteGroup::cyclic(6)?;
    let octa = graph(DirectedGraph::cayley(&z6, &z6.subset([1, 4])?))?;
    let certified = arc_transitive_by_search(&octa);
    jobs.push(GraphJob { name: "octahedron".into(), graph: octa, certified });
    for (p, q) in semidirect_pairs(max_vertices * max_vertices) {
        if p > max_vertices {
            continue;
        }
        let inst = build_example(p, q)?;
        let quotient = build_quotient_graph(&inst.group, &inst.h, inst.a).map_err(|e| VerifyError::Config(e.to_string()))?;
        let certified = verify_translation_transitivity(&quotient.graph, &inst.group, &inst.h, inst.a)
            .map(|v| v.pass())
            .unwrap_or(false);
        jobs.push(GraphJob { name: format!("C{p}:C{q}/H"), graph: quotient.graph, certified });
    }
    Ok(jobs)
}

/// Connected quotients `X/H` of a group, one per double coset `HaH`.
fn quotient_jobs(entry: &CatalogGroup, subgroups: &[GroupSubset], t: &mut Tally) -> Vec<GraphJob> {
    let g = &entry.group;
    let n = g.order();
    let mut jobs = Vec::new();
    for (hi, h) in subgroups.iter().enumerate() {
        if h.len() == n {
            continue;
        }
        let mut seen = GroupSubset::empty(n);
        for a in 0..n {
            if h.contains(a) || seen.contains(a) {
                continue;
            }
            let ha = product_set(g, h, &GroupSubset::singleton(n, a).expect("in range")).expect("same group");
            let hah = product_set(g, &ha, h).expect("same group");
            seen = seen.union(&hah);
            let mut gens = h.clone();
            gens.insert(a);
            if !g.generates(&gens) {
                continue;
            }
            let quotient = match build_quotient_graph(g, h, a) {
                Ok(q) => q,
                Err(e) => {
                    t.require(false, || format!("{} H{hi} a={a}: {e}", entry.name));
                    continue;
                }
            };
            let name = format!("{}/H{hi}/a{a}", entry.name);
            let verdict = verify_translation_transitivity(&quotient.graph, g, h, a);
            let certified = matches!(&verdict, Ok(v) if v.pass());
            t.count("quotients");
            t.require(certified, || format!("{name}: transitivity not certified"));
            let conj: GroupSubset = h.iter().fold(GroupSubset::empty(n), |mut acc, x| {
                acc.insert(g.mul(g.mul(g.inv(a), x), a));
                acc
            });
            let trivial_meet = h.intersection_len(&conj) == 1;
            let degree = quotient.graph.regular_degree();
            t.require((degree == Some(h.len())) == trivial_meet, || {
                format!("{name}: degree {degree:?} vs |H|={} with trivial meet {trivial_meet}", h.len())
            });
            jobs.push(GraphJob { name, graph: quotient.graph, certified });
        }
    }
    jobs
}

/// Quotients by an involution subgroup `{1, x}` that give connected,
/// antisymmetric graphs of degree 2 on at least 8 vertices.
fn degree_two_jobs(entry: &CatalogGroup, t: &mut Tally) -> Vec<GraphJob> {
    let g = &entry.group;
    let n = g.order();
    let mut jobs = Vec::new();
    if n / 2 > ENUMERATION_LIMIT || n < 16 {
        return jobs;
    }
    for x in 1..n {
        if g.element_order(x) != 2 {
            continue;
        }
        let h = GroupSubset::from_elements(n, [0, x]).expect("in range");
        let mut seen = GroupSubset::empty(n);
        for a in 0..n {
            if h.contains(a) || seen.contains(a) {
                continue;
            }
            let ha = product_set(g, &h, &GroupSubset::singleton(n, a).expect("in range")).expect("same group");
            let hah = product_set(g, &ha, &h).expect("same group");
            seen = seen.union(&hah);
            if hah.len() != 4 {
                continue;
            }
            let mut gens = h.clone();
            gens.insert(a);
            if !g.generates(&gens) {
                continue;
            }
            let Ok(quotient) = build_quotient_graph(g, &h, a) else { continue };
            if !is_antisymmetric(&quotient.graph) {
                continue;
            }
            let certified = matches!(verify_translation_transitivity(&quotient.graph, g, &h, a), Ok(v) if v.pass());
            t.require(certified, || format!("{}: involution quotient not certified", entry.name));
            jobs.push(GraphJob { name: format!("{}/x{x}/a{a}", entry.name), graph: quotient.graph, certified });
        }
    }
    jobs
}

fn run_jobs(exec: Exec, jobs: &[GraphJob]) -> Tally {
    Tally::fold(map_ordered(exec, jobs, |job| {
        let mut t = Tally::default();
        graph_checks(job, &mut t);
        t
    }))
}

fn graph_lemmas(cfg: &SweepConfig) -> Result<Vec<(String, Tally)>, VerifyError> {
    let mut out = Vec::new();
    let fixed = fixed_graphs(ENUMERATION_LIMIT)?;
    let mut t = run_jobs(cfg.exec, &fixed);
    let octa = fixed.iter().find(|j| j.name == "octahedron").expect("listed");
    t.require(octa.certified, || "octahedron not arc-transitive".into());
    t.require(is_octahedron_underlying(&octa.graph), || "octahedron shape not detected".into());
    t.require(every_arc_in_oriented_triangle(&octa.graph), || "octahedron arc outside a triangle".into());
    t.require(contains_k4_star(&octa.graph).is_some(), || "octahedron has no K4*".into());
    out.push(("fixed".to_string(), t));

    let entries = catalog(cfg.max_order)?;
    for entry in entries.iter().filter(|c| c.group.order() >= 2) {
        let subgroups = entry.group.subgroups();
        let mut t = Tally::default();
        let jobs = quotient_jobs(entry, &subgroups, &mut t);
        t.absorb(run_jobs(cfg.exec, &jobs));
        out.push((entry.name.clone(), t));
    }

    // Degree-2 antisymmetric quotients need order at least 16; look twice
    // as far as the main bound for them.
    let mut t = Tally::default();
    for entry in catalog(2 * cfg.max_order)?.iter().filter(|c| c.group.order() > cfg.max_order) {
        let jobs = degree_two_jobs(entry, &mut t);
        t.absorb(run_jobs(cfg.exec, &jobs));
    }
    out.push(("degree-two".to_string(), t));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(max_order: usize) -> SweepConfig {
        SweepConfig { max_order, exec: Exec::Sequential, samples: 10, ..SweepConfig::for_suite(Suite::MainTheorem) }
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("catalog".parse::<Family>().unwrap(), Family::Catalog);
    }

    #[test]
    fn small_sweeps_pass() {
        for suite in [Suite::MainTheorem, Suite::Mann, Suite::Oracle, Suite::Intersection] {
            let r = run_sweep(suite, &cfg(6)).unwrap();
            assert!(r.pass(), "{suite}: {:?}", r.first_failure);
            assert!(r.instances > 0);
        }
    }

    #[test]
    fn mask_sets() {
        assert_eq!(mask_set(5, 0b101, true).elements(), vec![0, 1, 3]);
        assert_eq!(mask_set(5, 0b101, false).elements(), vec![0, 2]);
    }

    #[test]
    fn tally_keeps_first_failure() {
        let mut a = Tally::default();
        a.require(true, || "x".into());
        let mut b = Tally::default();
        b.require(false, || "first".into());
        let mut c = Tally::default();
        c.require(false, || "second".into());
        let t = Tally::fold([a, b, c]);
        assert_eq!((t.failures, t.first_failure.as_deref()), (2, Some("first")));
    }

    #[test]
    fn octahedron_is_arc_transitive() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let octa = DirectedGraph::cayley(&z6, &z6.subset([1, 4]).unwrap()).unwrap();
        assert!(arc_transitive_by_search(&octa));
        assert!(!arc_transitive_by_search(&DirectedGraph::path(4).unwrap()));
    }
}
