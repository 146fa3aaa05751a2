//! Branch-and-bound search over subsets `X` maximising `|X| + |X*|`.
//!
//! For a fixed `S` with `1 ∈ S`, `|∂X| = |G| - |X| - |X*|`, so the `k`-fragments
//! are the admissible sets with the largest `|X| + |X*|` and the atoms are the
//! smallest of those. The search walks a subset-enumeration tree in which
//! each node adds one candidate element; a node is cut when an upper bound on
//! every completion is strictly worse than the incumbent.
//!
//! The bound: completing `X` by `U' ⊆ U` gives `|X| + |U'| + |Y \ U'S|` where
//! `Y = G \ XS`. Matching each `u ∈ U` to an element of `uS ∩ Y` shows
//! `|U'| - |N(U')| <= |U| - ν` (deficiency form of Hall), hence
//! `f <= |X| + |Y| + |U| - ν` with `ν` a maximum matching.
//!
//! Two anchorings are supported, both relying on left translates of
//! fragments being fragments. `Inside` fixes `1 ∈ X`. `Outside` fixes
//! `1 ∈ X*`, which confines `X` to `G \ S⁻¹`; this pool has `|G| - |S|`
//! elements and is the better choice for large `S`. Sets found with the
//! outside anchoring are translated back so that they contain `1`.

use std::cmp::Ordering as CmpOrdering;
use std::collections::{BTreeSet, VecDeque};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::group::FiniteGroup;
use crate::par::{map_ordered, Exec};
use crate::subset::GroupSubset;

/// Largest group order the bitset engine handles.
pub const MAX_SEARCH_ORDER: usize = 2048;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Bits<const W: usize>([u64; W]);

impl<const W: usize> Bits<W> {
    const ZERO: Self = Self([0; W]);

    fn full(n: usize) -> Self {
        let mut b = Self::ZERO;
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    fn or(&self, o: &Self) -> Self {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a |= *b;
        }
        r
    }

    #[inline]
    fn and(&self, o: &Self) -> Self {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a &= *b;
        }
        r
    }

    #[inline]
    fn andnot(&self, o: &Self) -> Self {
        let mut r = *self;
        for (a, b) in r.0.iter_mut().zip(o.0.iter()) {
            *a &= !*b;
        }
        r
    }

    #[inline]
    fn andnot_count(&self, o: &Self) -> usize {
        self.0
            .iter()
            .zip(o.0.iter())
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn ones(&self) -> Ones<'_, W> {
        Ones {
            bits: self,
            word: 0,
            cur: self.0[0],
        }
    }

    fn to_subset(self, n: usize) -> GroupSubset {
        GroupSubset::from_elements(n, self.ones()).expect("bits below order")
    }
}

pub(crate) struct Ones<'a, const W: usize> {
    bits: &'a Bits<W>,
    word: usize,
    cur: u64,
}

impl<const W: usize> Iterator for Ones<'_, W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word >= W {
                return None;
            }
            self.cur = self.bits.0[self.word];
        }
    }
}

/// Bitset ordered lexicographically by its ascending element sequence.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Lex<const W: usize>(Bits<W>);

impl<const W: usize> Ord for Lex<W> {
    fn cmp(&self, other: &Self) -> CmpOrdering {
        self.0.ones().cmp(other.0.ones())
    }
}

impl<const W: usize> PartialOrd for Lex<W> {
    fn partial_cmp(&self, other: &Self) -> Option<CmpOrdering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Anchor {
    /// Outside anchoring when `|S| > |G| / 2`, inside otherwise.
    #[default]
    Auto,
    Inside,
    Outside,
}

impl Anchor {
    fn resolve(self, n: usize, s_len: usize) -> Anchor {
        match self {
            Anchor::Auto if 2 * s_len > n => Anchor::Outside,
            Anchor::Auto => Anchor::Inside,
            a => a,
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Goal {
    Optimize,
    Reach(usize),
    Enumerate(usize),
}

fn key(f: usize, size: usize) -> u64 {
    ((f as u64) << 32) | (u32::MAX as u64 - size as u64)
}

fn unkey(key: u64) -> (usize, usize) {
    ((key >> 32) as usize, (u32::MAX as u64 - (key & 0xffff_ffff)) as usize)
}

struct Found<const W: usize> {
    key: u64,
    sets: BTreeSet<Lex<W>>,
    cap: usize,
    truncated: bool,
    count: u64,
}

impl<const W: usize> Found<W> {
    fn new(cap: usize) -> Self {
        Self {
            key: 0,
            sets: BTreeSet::new(),
            cap,
            truncated: false,
            count: 0,
        }
    }

    fn push(&mut self, x: Bits<W>) {
        self.count += 1;
        self.sets.insert(Lex(x));
        if self.sets.len() > self.cap {
            self.sets.pop_last();
            self.truncated = true;
        }
    }

    fn merge(&mut self, other: Found<W>) {
        match other.key.cmp(&self.key) {
            CmpOrdering::Greater => *self = other,
            CmpOrdering::Equal => {
                self.count += other.count;
                self.truncated |= other.truncated;
                for x in other.sets {
                    self.sets.insert(x);
                    if self.sets.len() > self.cap {
                        self.sets.pop_last();
                        self.truncated = true;
                    }
                }
            }
            CmpOrdering::Less => {}
        }
    }
}

struct Inst<const W: usize> {
    n: usize,
    k: usize,
    full: Bits<W>,
    rows: Vec<Bits<W>>,
}

struct Root<const W: usize> {
    x: Bits<W>,
    size: usize,
    xs: Bits<W>,
    cands: Vec<u32>,
}

struct Worker<'a, const W: usize> {
    inst: &'a Inst<W>,
    goal: Goal,
    best: &'a AtomicU64,
    stop: &'a AtomicBool,
    found: Found<W>,
    levels: Vec<Vec<u32>>,
    match_y: Vec<u32>,
    matched: Bits<W>,
}

impl<'a, const W: usize> Worker<'a, W> {
    fn new(
        inst: &'a Inst<W>,
        goal: Goal,
        best: &'a AtomicU64,
        stop: &'a AtomicBool,
        cap: usize,
    ) -> Self {
        Self {
            inst,
            goal,
            best,
            stop,
            found: Found::new(cap),
            levels: vec![Vec::new(); inst.n + 2],
            match_y: vec![NONE; inst.n],
            matched: Bits::ZERO,
        }
    }

    /// Completions of a node of size `size` must reach this value of `f`
    /// to be worth exploring.
    fn threshold(&self, size: usize) -> usize {
        match self.goal {
            Goal::Optimize => {
                let k = self.best.load(Ordering::Relaxed);
                if k == 0 {
                    return 0;
                }
                let (bf, ba) = unkey(k);
                bf + usize::from(size + 1 > ba)
            }
            Goal::Reach(t) | Goal::Enumerate(t) => t,
        }
    }

    fn visit(&mut self, x: &Bits<W>, size: usize, f: usize) {
        match self.goal {
            Goal::Optimize => {
                let k = key(f, size);
                let prev = self.best.fetch_max(k, Ordering::Relaxed);
                if k < prev || k < self.found.key {
                    return;
                }
                if k > self.found.key {
                    self.found.key = k;
                    self.found.sets.clear();
                    self.found.truncated = false;
                    self.found.count = 0;
                }
                self.found.push(*x);
            }
            Goal::Reach(t) => {
                if f >= t {
                    self.found.key = key(f, size);
                    self.found.push(*x);
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
            Goal::Enumerate(t) => {
                if f == t {
                    self.found.key = 1;
                    self.found.push(*x);
                }
            }
        }
    }

    /// Whether some completion of the node can reach `threshold`.
    fn bound_allows(&mut self, size: usize, y: &Bits<W>, yc: usize, cands: &[u32]) -> bool {
        let t = self.threshold(size);
        let trivial = size + yc + cands.len();
        if trivial < t {
            return false;
        }
        // Pruning needs a matching of size > trivial - t.
        let need = trivial - t + 1;
        if need > cands.len() {
            return true;
        }
        !self.matching_reaches(cands, y, need)
    }

    fn matching_reaches(&mut self, cands: &[u32], y: &Bits<W>, need: usize) -> bool {
        let allowed_fail = cands.len() - need;
        let (mut matched, mut failed) = (0, 0);
        let mut reached = false;
        for &u in cands {
            let mut visited = Bits::ZERO;
            if self.augment(u as usize, y, &mut visited) {
                matched += 1;
                if matched >= need {
                    reached = true;
                    break;
                }
            } else {
                failed += 1;
                if failed > allowed_fail {
                    break;
                }
            }
        }
        for v in self.matched.ones() {
            self.match_y[v] = NONE;
        }
        self.matched = Bits::ZERO;
        reached
    }

    fn augment(&mut self, u: usize, y: &Bits<W>, visited: &mut Bits<W>) -> bool {
        let adj = self.inst.rows[u].and(y).andnot(visited);
        if let Some(v) = adj.andnot(&self.matched).first() {
            self.matched.insert(v);
            self.match_y[v] = u as u32;
            return true;
        }
        for v in adj.ones() {
            if visited.contains(v) {
                continue;
            }
            visited.insert(v);
            let m = self.match_y[v] as usize;
            if self.augment(m, y, visited) {
                self.match_y[v] = u as u32;
                return true;
            }
        }
        false
    }

    fn node(&mut self, depth: usize, x: Bits<W>, size: usize, xs: Bits<W>) {
        let inst = self.inst;
        let y = inst.full.andnot(&xs);
        let yc = y.count();
        if size >= inst.k && yc >= inst.k {
            self.visit(&x, size, size + yc);
        }
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        let cands = std::mem::take(&mut self.levels[depth]);
        if !cands.is_empty() && self.bound_allows(size, &y, yc, &cands) {
            for i in 0..cands.len() {
                if self.stop.load(Ordering::Relaxed) {
                    break;
                }
                let u = cands[i] as usize;
                let cxs = xs.or(&inst.rows[u]);
                self.fill_level(depth + 1, &cxs, &cands[i + 1..]);
                let mut cx = x;
                cx.insert(u);
                self.node(depth + 1, cx, size + 1, cxs);
            }
        }
        self.levels[depth] = cands;
    }

    fn fill_level(&mut self, depth: usize, xs: &Bits<W>, from: &[u32]) {
        let inst = self.inst;
        let y = inst.full.andnot(xs);
        let mut next = std::mem::take(&mut self.levels[depth]);
        next.clear();
        next.extend(
            from.iter()
                .copied()
                .filter(|&v| y.andnot_count(&inst.rows[v as usize]) >= inst.k),
        );
        self.levels[depth] = next;
    }
}

fn run<const W: usize>(
    inst: &Inst<W>,
    root: &Root<W>,
    goal: Goal,
    cap: usize,
    exec: Exec,
) -> Found<W> {
    let best = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let mut w = Worker::new(inst, goal, &best, &stop, cap);
    if !exec.is_parallel() || root.cands.len() < 2 || matches!(goal, Goal::Reach(_)) {
        w.levels[0] = root.cands.clone();
        w.node(0, root.x, root.size, root.xs);
        return w.found;
    }
    // Visit the root itself, then hand each child subtree to the pool.
    w.levels[0] = Vec::new();
    w.node(0, root.x, root.size, root.xs);
    let indices: Vec<usize> = (0..root.cands.len()).collect();
    let parts = map_ordered(exec, &indices, |&i| {
        let mut cw = Worker::new(inst, goal, &best, &stop, cap);
        let u = root.cands[i] as usize;
        let cxs = root.xs.or(&inst.rows[u]);
        cw.fill_level(1, &cxs, &root.cands[i + 1..]);
        let mut cx = root.x;
        cx.insert(u);
        let y = inst.full.andnot(&root.xs);
        let yc = y.count();
        // The root bound applies to every child.
        if cw.bound_allows(root.size, &y, yc, &root.cands) {
            cw.node(1, cx, root.size + 1, cxs);
        }
        cw.found
    });
    let mut found = w.found;
    for p in parts {
        found.merge(p);
    }
    found
}

fn words(n: usize) -> usize {
    match n {
        0..=64 => 1,
        65..=128 => 2,
        129..=256 => 4,
        257..=512 => 8,
        513..=1024 => 16,
        _ => 32,
    }
}

macro_rules! dispatch {
    ($n:expr, $f:ident, $($arg:expr),*) => {
        match words($n) {
            1 => $f::<1>($($arg),*),
            2 => $f::<2>($($arg),*),
            4 => $f::<4>($($arg),*),
            8 => $f::<8>($($arg),*),
            16 => $f::<16>($($arg),*),
            _ => $f::<32>($($arg),*),
        }
    };
}

fn build<const W: usize>(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Inst<W> {
    let n = g.order();
    let elems = s.elements();
    let rows = (0..n)
        .map(|x| {
            let mut b = Bits::ZERO;
            for &t in &elems {
                b.insert(g.mul(x, t));
            }
            b
        })
        .collect();
    Inst {
        n,
        k,
        full: Bits::full(n),
        rows,
    }
}

/// Breadth-first order from the identity along `x -> x t`, `t ∈ S ∪ S⁻¹`,
/// with unreachable elements appended in index order.
fn bfs_order(g: &FiniteGroup, s: &GroupSubset) -> Vec<usize> {
    let n = g.order();
    let mut steps: Vec<usize> = s.iter().chain(s.iter().map(|t| g.inv(t))).collect();
    steps.sort_unstable();
    steps.dedup();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &t in &steps {
            let y = g.mul(x, t);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    order.extend((0..n).filter(|&x| !seen[x]));
    order
}

fn make_root<const W: usize>(
    inst: &Inst<W>,
    g: &FiniteGroup,
    s: &GroupSubset,
    anchor: Anchor,
) -> Root<W> {
    let order = bfs_order(g, s);
    let (x, size, xs, pool): (Bits<W>, usize, Bits<W>, Vec<usize>) = match anchor {
        Anchor::Outside => {
            let pool = order.into_iter().filter(|&x| !s.contains(g.inv(x))).collect();
            (Bits::ZERO, 0, Bits::ZERO, pool)
        }
        _ => {
            let mut x = Bits::ZERO;
            x.insert(0);
            (x, 1, inst.rows[0], order.into_iter().filter(|&e| e != 0).collect())
        }
    };
    let y = inst.full.andnot(&xs);
    let cands = if y.count() >= inst.k {
        pool.into_iter()
            .filter(|&v| y.andnot_count(&inst.rows[v]) >= inst.k)
            .map(|v| v as u32)
            .collect()
    } else {
        Vec::new()
    };
    Root { x, size, xs, cands }
}

/// Best `(f, α)` with all atoms containing the identity (smallest `cap` in
/// lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Optimum {
    pub f: usize,
    pub alpha: usize,
    pub atoms: Vec<GroupSubset>,
    pub truncated: bool,
}

/// Raw sets kept per atom slot under the outside anchoring.
const OUTSIDE_RAW_FACTOR: usize = 64;

fn optimize_w<const W: usize>(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    anchor: Anchor,
    cap: usize,
    exec: Exec,
) -> Option<Optimum> {
    let inst = build::<W>(g, s, k);
    let anchor = anchor.resolve(g.order(), s.len());
    let root = make_root(&inst, g, s, anchor);
    let raw_cap = match anchor {
        Anchor::Outside => cap.saturating_mul(OUTSIDE_RAW_FACTOR).max(4096),
        _ => cap,
    };
    let found = run(&inst, &root, Goal::Optimize, raw_cap, exec);
    if found.key == 0 {
        return None;
    }
    let (f, alpha) = unkey(found.key);
    let n = g.order();
    let (atoms, truncated) = match anchor {
        Anchor::Outside => {
            let mut canon: BTreeSet<GroupSubset> = BTreeSet::new();
            let mut truncated = found.truncated;
            for Lex(raw) in &found.sets {
                for x in raw.ones() {
                    let xi = g.inv(x);
                    let t = GroupSubset::from_elements(n, raw.ones().map(|y| g.mul(xi, y)))
                        .expect("in range");
                    canon.insert(t);
                    if canon.len() > cap {
                        canon.pop_last();
                        truncated = true;
                    }
                }
            }
            (canon.into_iter().collect(), truncated)
        }
        _ => (
            found.sets.iter().map(|l| l.0.to_subset(n)).collect(),
            found.truncated,
        ),
    };
    Some(Optimum {
        f,
        alpha,
        atoms,
        truncated,
    })
}

/// Maximises `|X| + |X*|` over admissible `X`; `None` when `S` is not
/// `k`-separable. Requires `1 ∈ S` and `|G| <= MAX_SEARCH_ORDER`.
pub(crate) fn optimize(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    anchor: Anchor,
    cap: usize,
    exec: Exec,
) -> Option<Optimum> {
    dispatch!(g.order(), optimize_w, g, s, k, anchor, cap.max(1), exec)
}

fn reach_w<const W: usize>(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    target: usize,
    anchor: Anchor,
) -> Option<GroupSubset> {
    let inst = build::<W>(g, s, k);
    let anchor = anchor.resolve(g.order(), s.len());
    let root = make_root(&inst, g, s, anchor);
    let found = run(&inst, &root, Goal::Reach(target), 1, Exec::Sequential);
    found.sets.first().map(|l| l.0.to_subset(g.order()))
}

/// Some admissible `X` with `|X| + |X*| >= target`, if one exists.
pub(crate) fn reach(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    target: usize,
    anchor: Anchor,
) -> Option<GroupSubset> {
    dispatch!(g.order(), reach_w, g, s, k, target, anchor)
}

fn enumerate_w<const W: usize>(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    f: usize,
    cap: usize,
    exec: Exec,
) -> (u64, Vec<GroupSubset>, bool) {
    let inst = build::<W>(g, s, k);
    let root = make_root(&inst, g, s, Anchor::Inside);
    let found = run(&inst, &root, Goal::Enumerate(f), cap, exec);
    let sets = found.sets.iter().map(|l| l.0.to_subset(g.order())).collect();
    (found.count, sets, found.truncated)
}

/// All admissible `X ∋ 1` with `|X| + |X*| = f`: the count, the smallest
/// `cap` of them, and whether the list was cut.
pub(crate) fn enumerate(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    f: usize,
    cap: usize,
    exec: Exec,
) -> (u64, Vec<GroupSubset>, bool) {
    dispatch!(g.order(), enumerate_w, g, s, k, f, cap.max(1), exec)
}
