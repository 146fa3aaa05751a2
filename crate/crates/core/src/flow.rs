//! Arc connectivity `λ_k`: exhaustive cut enumeration, unit-capacity max
//! flow between pinned seed sets, and a size-bounded sweep for large graphs.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::GraphError;
use crate::par::{map_ordered, Exec};
use crate::quotient::{induced_arc_maximum, is_antisymmetric, DirectedGraph};
use crate::report::{Check, Relation};

/// Largest vertex count handled by full cut enumeration.
pub const ENUMERATION_LIMIT: usize = 24;

pub const DEFAULT_CUT_ATOM_CAP: usize = 256;

/// Number of candidate sets the large-graph sweep may visit.
const SWEEP_BUDGET: u128 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutMethod {
    Enumeration,
    /// Flow lower bound plus a scan of sets of size `k..=max(k, 2k−2)`.
    Sweep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcCutReport {
    pub k: usize,
    pub lambda: usize,
    /// Equal to `lambda` whenever `exact` holds.
    pub lower_bound: usize,
    pub exact: bool,
    pub separable: bool,
    pub atom_size: usize,
    /// Sorted vertex lists, lexicographic, at most the cap.
    pub atoms: Vec<Vec<usize>>,
    pub atoms_truncated: bool,
    pub method: CutMethod,
}

fn check_input(q: &DirectedGraph, k: usize) -> Result<(), GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidK);
    }
    if !q.is_weakly_connected() {
        return Err(GraphError::Disconnected);
    }
    if q.vertex_count() < 2 * k {
        return Err(GraphError::NotSeparable { k });
    }
    Ok(())
}

pub fn arc_connectivity(q: &DirectedGraph, k: usize) -> Result<ArcCutReport, GraphError> {
    arc_connectivity_with(q, k, Exec::Sequential, DEFAULT_CUT_ATOM_CAP)
}

pub fn arc_connectivity_with(
    q: &DirectedGraph,
    k: usize,
    exec: Exec,
    atom_cap: usize,
) -> Result<ArcCutReport, GraphError> {
    check_input(q, k)?;
    if q.vertex_count() <= ENUMERATION_LIMIT {
        exhaustive_cuts(q, k, exec, atom_cap)
    } else {
        sweep_cuts(q, k, exec, atom_cap)
    }
}

/// Smallest-first bounded collection of tied cuts.
#[derive(Default)]
struct Ties {
    e: usize,
    size: usize,
    sets: BTreeSet<Vec<usize>>,
    truncated: bool,
}

impl Ties {
    fn new() -> Self {
        Self { e: usize::MAX, size: usize::MAX, ..Default::default() }
    }

    fn offer(&mut self, e: usize, size: usize, set: impl FnOnce() -> Vec<usize>, cap: usize) {
        if (e, size) < (self.e, self.size) {
            self.e = e;
            self.size = size;
            self.sets.clear();
            self.truncated = false;
        } else if (e, size) > (self.e, self.size) {
            return;
        }
        self.sets.insert(set());
        if self.sets.len() > cap {
            self.sets.pop_last();
            self.truncated = true;
        }
    }

    fn merge(mut self, other: Ties, cap: usize) -> Ties {
        if (other.e, other.size) < (self.e, self.size) {
            return other;
        }
        if (other.e, other.size) == (self.e, self.size) {
            self.truncated |= other.truncated;
            self.sets.extend(other.sets);
            while self.sets.len() > cap {
                self.sets.pop_last();
                self.truncated = true;
            }
        }
        self
    }
}

/// For sets of equal size, ascending key is lexicographic order of the
/// sorted vertex lists.
fn lex_key(m: u32) -> u32 {
    !m.reverse_bits()
}

fn key_vertices(key: u32) -> Vec<usize> {
    let m = (!key).reverse_bits();
    (0..32).filter(|&i| m >> i & 1 == 1).collect()
}

/// Least `e(C)` for every set size `|C|`, with the tied sets (smallest
/// `cap` in lexicographic order). One enumeration serves every `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutProfile {
    n: usize,
    cap: usize,
    best: Vec<usize>,
    ties: Vec<BTreeSet<u32>>,
    truncated: Vec<bool>,
}

impl CutProfile {
    fn empty(n: usize, cap: usize) -> Self {
        Self {
            n,
            cap,
            best: vec![usize::MAX; n + 1],
            ties: vec![BTreeSet::new(); n + 1],
            truncated: vec![false; n + 1],
        }
    }

    #[inline]
    fn offer(&mut self, size: usize, e: usize, mask: u32) {
        let b = self.best[size];
        if e > b {
            return;
        }
        let ties = &mut self.ties[size];
        if e < b {
            self.best[size] = e;
            ties.clear();
            self.truncated[size] = false;
        }
        let key = lex_key(mask);
        if ties.len() == self.cap {
            self.truncated[size] = true;
            if ties.last().is_some_and(|&l| key > l) {
                return;
            }
            ties.insert(key);
            ties.pop_last();
        } else {
            ties.insert(key);
        }
    }

    fn merge(mut self, other: CutProfile) -> CutProfile {
        for s in 0..=self.n {
            if other.best[s] < self.best[s] {
                self.best[s] = other.best[s];
                self.ties[s] = other.ties[s].clone();
                self.truncated[s] = other.truncated[s];
            } else if other.best[s] == self.best[s] {
                self.truncated[s] |= other.truncated[s];
                self.ties[s].extend(other.ties[s].iter().copied());
                while self.ties[s].len() > self.cap {
                    self.ties[s].pop_last();
                    self.truncated[s] = true;
                }
            }
        }
        self
    }

    /// Least `e(C)` over sets of exactly `size` vertices.
    pub fn minimum(&self, size: usize) -> usize {
        self.best[size]
    }

    pub fn report(&self, k: usize) -> Result<ArcCutReport, GraphError> {
        if k == 0 {
            return Err(GraphError::InvalidK);
        }
        if self.n < 2 * k {
            return Err(GraphError::NotSeparable { k });
        }
        let lambda = (k..=self.n - k).map(|s| self.best[s]).min().expect("nonempty range");
        let size = (k..=self.n - k).find(|&s| self.best[s] == lambda).expect("attained");
        Ok(ArcCutReport {
            k,
            lambda,
            lower_bound: lambda,
            exact: true,
            separable: true,
            atom_size: size,
            atoms: self.ties[size].iter().map(|&key| key_vertices(key)).collect(),
            atoms_truncated: self.truncated[size],
            method: CutMethod::Enumeration,
        })
    }
}

/// Every vertex set, walked in Gray-code order so that `e(C)` changes by
/// one vertex at a time.
pub fn cut_profile(q: &DirectedGraph, exec: Exec, atom_cap: usize) -> Result<CutProfile, GraphError> {
    let n = q.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(GraphError::Limit(format!(
            "cut enumeration limited to {ENUMERATION_LIMIT} vertices, graph has {n}"
        )));
    }
    if !q.is_weakly_connected() {
        return Err(GraphError::Disconnected);
    }
    let cap = atom_cap.max(1);
    let out: Vec<u32> = (0..n).map(|v| q.out_mask(v) as u32).collect();
    let inc: Vec<u32> = (0..n).map(|v| q.in_mask(v) as u32).collect();
    let high = n.saturating_sub(16).min(8);
    let low = n - high;
    let chunks: Vec<u32> = (0..1u32 << high).collect();
    let parts = map_ordered(exec, &chunks, |&prefix| {
        let mut profile = CutProfile::empty(n, cap);
        let mut c: u32 = prefix << low;
        let mut e: i64 = (0..n)
            .filter(|&v| c >> v & 1 == 1)
            .map(|v| (out[v] & !c).count_ones() as i64)
            .sum();
        let mut size = c.count_ones() as usize;
        profile.offer(size, e as usize, c);
        for i in 1u32..1 << low {
            let v = i.trailing_zeros() as usize;
            let bit = 1u32 << v;
            if c & bit == 0 {
                e += (out[v] & !c).count_ones() as i64 - (inc[v] & c).count_ones() as i64;
                c |= bit;
                size += 1;
            } else {
                c &= !bit;
                e -= (out[v] & !c).count_ones() as i64 - (inc[v] & c).count_ones() as i64;
                size -= 1;
            }
            profile.offer(size, e as usize, c);
        }
        profile
    });
    Ok(parts
        .into_iter()
        .reduce(CutProfile::merge)
        .expect("at least one chunk"))
}

pub fn exhaustive_cuts(q: &DirectedGraph, k: usize, exec: Exec, atom_cap: usize) -> Result<ArcCutReport, GraphError> {
    check_input(q, k)?;
    cut_profile(q, exec, atom_cap)?.report(k)
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` on every `r`-subset of `0..n`, lexicographically.
fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        f(&idx);
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - r + i {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn sweep_cuts(q: &DirectedGraph, k: usize, exec: Exec, atom_cap: usize) -> Result<ArcCutReport, GraphError> {
    let n = q.vertex_count();
    let top = k.max(2 * k - 2).min(n - k);
    let visits: u128 = (k..=top).map(|s| binomial(n, s)).sum();
    if visits > SWEEP_BUDGET {
        return Err(GraphError::Limit(format!(
            "sweep over sets of size {k}..{top} on {n} vertices exceeds the budget"
        )));
    }
    let lower = flow_lambda(q, 1, exec)?;
    let sizes: Vec<usize> = (k..=top).collect();
    let parts = map_ordered(exec, &sizes, |&s| {
        let mut ties = Ties::new();
        let mut inside = vec![false; n];
        for_each_combination(n, s, |set| {
            for &v in set {
                inside[v] = true;
            }
            let e: usize = set
                .iter()
                .map(|&u| q.out_neighbours(u).iter().filter(|&&v| !inside[v]).count())
                .sum();
            for &v in set {
                inside[v] = false;
            }
            ties.offer(e, s, || set.to_vec(), atom_cap);
        });
        ties
    });
    let ties = parts.into_iter().fold(Ties::new(), |acc, t| acc.merge(t, atom_cap));
    Ok(ArcCutReport {
        k,
        lambda: ties.e,
        lower_bound: lower,
        exact: ties.e == lower,
        separable: true,
        atom_size: ties.size,
        atoms: ties.sets.into_iter().collect(),
        atoms_truncated: ties.truncated,
        method: CutMethod::Sweep,
    })
}

/// Residual network with unit capacities on the graph's arcs.
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
}

impl Network {
    fn new(q: &DirectedGraph) -> Self {
        let n = q.vertex_count();
        let mut head = vec![Vec::new(); n];
        let mut to = Vec::new();
        let mut cap = Vec::new();
        for (u, v) in q.arcs() {
            head[u].push(to.len());
            to.push(v);
            cap.push(1);
            head[v].push(to.len());
            to.push(u);
            cap.push(0);
        }
        Self { head, to, cap }
    }

    fn reset(&mut self) {
        for (i, c) in self.cap.iter_mut().enumerate() {
            *c = u8::from(i % 2 == 0);
        }
    }

    /// Max flow from the set `source` to the set `sink`, stopping once it
    /// reaches `limit`.
    fn max_flow(&mut self, source: &[bool], sink: &[bool], limit: usize) -> usize {
        self.reset();
        let n = self.head.len();
        let mut flow = 0;
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = Vec::with_capacity(n);
        while flow < limit {
            seen.iter_mut().for_each(|s| *s = false);
            queue.clear();
            for v in 0..n {
                if source[v] {
                    seen[v] = true;
                    queue.push(v);
                }
            }
            let mut found = None;
            let mut qi = 0;
            'bfs: while qi < queue.len() {
                let u = queue[qi];
                qi += 1;
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !seen[v] {
                        seen[v] = true;
                        via[v] = e;
                        if sink[v] {
                            found = Some(v);
                            break 'bfs;
                        }
                        queue.push(v);
                    }
                }
            }
            let Some(mut v) = found else { break };
            while !source[v] {
                let e = via[v];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// `λ_k` as the least max flow between disjoint seed sets `P`, `Q` of size
/// `k`, with vertex 0 pinned into `P` or into `Q`. The number of seed pairs
/// grows like `n^(2k-1)`, so this is meant for small graphs and `k = 1`.
pub fn flow_lambda(q: &DirectedGraph, k: usize, exec: Exec) -> Result<usize, GraphError> {
    check_input(q, k)?;
    let n = q.vertex_count();
    // Seed pairs: vertex 0 plus `k-1` others on one side, `k` of the rest
    // on the other.
    let mut pairs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for_each_combination(n - 1, k - 1, |c| {
        let side: Vec<usize> = std::iter::once(0).chain(c.iter().map(|&v| v + 1)).collect();
        let free: Vec<usize> = (0..n).filter(|v| !side.contains(v)).collect();
        for_each_combination(free.len(), k, |d| pairs.push((side.clone(), d.iter().map(|&i| free[i]).collect())));
    });
    let best = AtomicUsize::new(q.arc_count());
    let mark = |vs: &[usize]| {
        let mut m = vec![false; n];
        for &v in vs {
            m[v] = true;
        }
        m
    };
    let _ = map_ordered(exec, &pairs, |(p, r)| {
        let mut net = Network::new(q);
        let (p, r) = (mark(p), mark(r));
        for (from, to) in [(&p, &r), (&r, &p)] {
            let f = net.max_flow(from, to, best.load(Ordering::Relaxed));
            best.fetch_min(f, Ordering::Relaxed);
        }
    });
    Ok(best.into_inner())
}

/// Both routes on one graph; errors if they disagree.
pub fn cross_checked_lambda(q: &DirectedGraph, k: usize, exec: Exec) -> Result<usize, GraphError> {
    let flow = flow_lambda(q, k, exec)?;
    let enumerated = exhaustive_cuts(q, k, exec, 1)?.lambda;
    if flow != enumerated {
        return Err(GraphError::CrossCheck { flow, enumerated });
    }
    Ok(flow)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityVerdict {
    pub k: usize,
    pub degree: Option<usize>,
    pub antisymmetric: bool,
    pub lambda: usize,
    pub atom_size: usize,
    /// `e_k`, when `k ≤ 4`.
    pub induced_max: Option<usize>,
    pub checks: Vec<Check>,
}

impl CardinalityVerdict {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Atom size bounds and `λ_k ≥ dk − e_k` for a connected graph that the
/// caller has certified arc-transitive.
pub fn arc_atom_cardinality_check(q: &DirectedGraph, k: usize, exec: Exec) -> Result<CardinalityVerdict, GraphError> {
    let report = arc_connectivity_with(q, k, exec, DEFAULT_CUT_ATOM_CAP)?;
    cardinality_from_report(q, &report)
}

/// As [`arc_atom_cardinality_check`], reusing a computed report.
pub fn cardinality_from_report(q: &DirectedGraph, report: &ArcCutReport) -> Result<CardinalityVerdict, GraphError> {
    let k = report.k;
    let degree = q.regular_degree();
    let antisymmetric = is_antisymmetric(q);
    let mut checks = vec![
        Check::flag("regular", degree.is_some(), true),
        Check::flag("exact", report.exact, true),
    ];
    let d = degree.unwrap_or(0);
    let s = report.atom_size;
    if k >= 2 {
        checks.push(Check::size("atom size vs 2k-2", s, Relation::Le, 2 * k - 2));
    }
    if 3 * (k - 1) <= d {
        checks.push(Check::size("atom size (k <= d/3+1)", s, Relation::Eq, k));
    }
    if antisymmetric && 3 * (k - 1) <= 2 * d {
        checks.push(Check::size("atom size (antisymmetric, k <= 2d/3+1)", s, Relation::Eq, k));
    }
    let induced_max = if k <= 4 { Some(induced_arc_maximum(q, k)?) } else { None };
    if let Some(e) = induced_max {
        checks.push(Check::int("lambda vs dk-e_k", report.lambda as i64, Relation::Ge, (d * k) as i64 - e as i64));
    }
    Ok(CardinalityVerdict { k, degree, antisymmetric, lambda: report.lambda, atom_size: s, induced_max, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::quotient::build_quotient_graph;

    #[test]
    fn cycle_cuts() {
        let c = DirectedGraph::directed_cycle(5).unwrap();
        let r = arc_connectivity(&c, 1).unwrap();
        assert_eq!((r.lambda, r.atom_size), (1, 1));
        assert_eq!(r.atoms.len(), 5);
        let r = arc_connectivity(&c, 2).unwrap();
        assert_eq!((r.lambda, r.atom_size), (1, 2));
        assert_eq!(r.atoms, vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(flow_lambda(&c, 2, Exec::Sequential).unwrap(), 1);
        assert_eq!(arc_connectivity(&c, 3), Err(GraphError::NotSeparable { k: 3 }));
    }

    #[test]
    fn complete_cuts() {
        let k4 = DirectedGraph::bidirected_complete(4).unwrap();
        assert_eq!(arc_connectivity(&k4, 1).unwrap().lambda, 3);
        let r = arc_connectivity(&k4, 2).unwrap();
        assert_eq!((r.lambda, r.atom_size), (4, 2));
        assert_eq!(cross_checked_lambda(&k4, 2, Exec::Sequential).unwrap(), 4);
        let v = arc_atom_cardinality_check(&k4, 2, Exec::Sequential).unwrap();
        assert!(v.pass(), "{:?}", v.checks);
    }

    #[test]
    fn disconnected_rejected() {
        let g = DirectedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(arc_connectivity(&g, 1), Err(GraphError::Disconnected));
    }

    #[test]
    fn semidirect_quotient_atoms() {
        let g = FiniteGroup::semidirect(7, 3).unwrap();
        let h = g.subset([0, 1, 2]).unwrap();
        let q = build_quotient_graph(&g, &h, 3).unwrap().graph;
        for k in 1..=3 {
            let v = arc_atom_cardinality_check(&q, k, Exec::Sequential).unwrap();
            assert!(v.pass(), "k={k} {:?}", v.checks);
            assert_eq!(flow_lambda(&q, k, Exec::Sequential).unwrap(), v.lambda);
        }
    }

    #[test]
    fn sweep_agrees_with_enumeration_on_a_large_cycle() {
        let c = DirectedGraph::directed_cycle(30).unwrap();
        let r = arc_connectivity(&c, 2).unwrap();
        assert_eq!(r.method, CutMethod::Sweep);
        assert!(r.exact);
        assert_eq!((r.lambda, r.atom_size, r.atoms.len()), (1, 2, 30));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = FiniteGroup::cyclic(18).unwrap();
        let q = DirectedGraph::cayley(&g, &g.subset([1, 5]).unwrap()).unwrap();
        let a = exhaustive_cuts(&q, 3, Exec::Sequential, 8).unwrap();
        let b = exhaustive_cuts(&q, 3, Exec::Parallel, 8).unwrap();
        assert_eq!(a, b);
    }
}
