//! Directed graphs on right cosets and the structural tests run on them.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::group::FiniteGroup;
use crate::report::{Check, Relation};
use crate::subset::GroupSubset;

/// Simple directed graph: no loops, no parallel arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl DirectedGraph {
    /// Builds a graph from an arc list; duplicate arcs collapse.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            out[u].push(v);
        }
        let mut inc = vec![Vec::new(); n];
        for (u, list) in out.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            for &v in list.iter() {
                inc[v].push(u);
            }
        }
        Ok(Self { n, out, inc, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
    }

    /// Common out-degree, if every vertex has the same out- and in-degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.out[0].len();
        let ok = (0..self.n).all(|v| self.out[v].len() == d && self.inc[v].len() == d);
        ok.then_some(d)
    }

    /// Connected after forgetting orientation.
    pub fn is_weakly_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.out[u].iter().chain(self.inc[u].iter()) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// `n m` followed by one `u v` line per arc.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n, self.arc_count());
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let nums: Vec<&str> = l.split_whitespace().collect();
            if nums.len() != 2 {
                return Err(GraphError::Parse { line, message: format!("expected two integers, got {l:?}") });
            }
            let p = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| GraphError::Parse { line, message: format!("not an integer: {t:?}") })
            };
            Ok((p(nums[0])?, p(nums[1])?))
        };
        let (line, header) = lines.next().ok_or(GraphError::Parse { line: 1, message: "missing header".into() })?;
        let (n, m) = pair(line, header)?;
        let mut arcs = Vec::with_capacity(m);
        for (line, l) in lines {
            arcs.push(pair(line, l)?);
        }
        if arcs.len() != m {
            return Err(GraphError::Parse {
                line: text.lines().count(),
                message: format!("header announces {m} arcs, found {}", arcs.len()),
            });
        }
        Self::new(n, arcs)
    }

    pub fn directed_cycle(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Both arcs between every pair.
    pub fn bidirected_complete(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))))
    }

    /// Directed path `0 → 1 → … → n−1`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Arcs `x → sx` for every `s` in `gens`.
    pub fn cayley(g: &FiniteGroup, gens: &GroupSubset) -> Result<Self, GraphError> {
        let n = g.order();
        let mut arcs = Vec::new();
        for x in 0..n {
            for s in gens.iter() {
                arcs.push((x, g.mul(s, x)));
            }
        }
        Self::new(n, arcs)
    }

    /// The vertex set as a bit mask (only for `n ≤ 64`).
    pub(crate) fn out_mask(&self, v: usize) -> u64 {
        self.out[v].iter().fold(0, |m, &w| m | 1 << w)
    }

    pub(crate) fn in_mask(&self, v: usize) -> u64 {
        self.inc[v].iter().fold(0, |m, &w| m | 1 << w)
    }
}

/// `X/H` with the bookkeeping back to the group.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: DirectedGraph,
    /// Smallest element of each coset, ascending.
    pub reps: Vec<usize>,
    pub coset_of: Vec<usize>,
    pub subgroup: GroupSubset,
    pub element: usize,
}

impl QuotientGraph {
    /// Vertices whose coset meets `x`, ascending.
    pub fn vertices_meeting(&self, x: &GroupSubset) -> Vec<usize> {
        let mut v: Vec<usize> = x.iter().map(|e| self.coset_of[e]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn double_coset(g: &FiniteGroup, h: &GroupSubset, a: usize) -> GroupSubset {
    let mut d = GroupSubset::empty(g.order());
    for x in h.iter() {
        let xa = g.mul(x, a);
        for y in h.iter() {
            d.insert(g.mul(xa, y));
        }
    }
    d
}

/// Vertices are the right cosets `Hx`; `Hx → Hy` iff `Hy ⊆ HaHx`.
pub fn build_quotient_graph(g: &FiniteGroup, h: &GroupSubset, a: usize) -> Result<QuotientGraph, GraphError> {
    let (cosets, coset_of) = g.right_cosets(h)?;
    g.check_element(a)?;
    if h.contains(a) {
        return Err(GraphError::ElementInSubgroup);
    }
    let d = double_coset(g, h, a);
    let reps: Vec<usize> = cosets.iter().map(|c| c.min_element().expect("cosets are nonempty")).collect();
    let mut arcs = Vec::new();
    for (i, &x) in reps.iter().enumerate() {
        // HaHx is a union of right cosets, so one element per coset decides.
        for y in d.iter() {
            arcs.push((i, coset_of[g.mul(y, x)]));
        }
    }
    let labels = reps.iter().map(|&r| g.label(r)).collect();
    let graph = DirectedGraph::new(reps.len(), arcs)?.with_labels(labels);
    Ok(QuotientGraph { graph, reps, coset_of, subgroup: h.clone(), element: a })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityVerdict {
    pub degree: Option<usize>,
    pub expected_degree: usize,
    pub checks: Vec<Check>,
    /// First offending configuration, if any.
    pub witness: Option<String>,
}

impl TransitivityVerdict {
    pub fn pass(&self) -> bool {
        self.witness.is_none() && self.checks.iter().all(|c| c.pass)
    }
}

/// Certifies vertex- and arc-transitivity of `q` through the coset maps
/// `Hx ↦ Hxz`. Vertex `i` of `q` is read as the `i`-th right coset of `h`.
pub fn verify_translation_transitivity(
    q: &DirectedGraph,
    g: &FiniteGroup,
    h: &GroupSubset,
    a: usize,
) -> Result<TransitivityVerdict, GraphError> {
    let (cosets, coset_of) = g.right_cosets(h)?;
    g.check_element(a)?;
    let reps: Vec<usize> = cosets.iter().map(|c| c.min_element().expect("nonempty")).collect();
    let expected_degree = double_coset(g, h, a).len() / h.len();
    let mut checks = Vec::new();
    let mut witness = None;
    checks.push(Check::size("vertices", q.vertex_count(), Relation::Eq, reps.len()));
    if q.vertex_count() != reps.len() {
        return Ok(TransitivityVerdict { degree: None, expected_degree, checks, witness: Some("vertex count differs from coset count".into()) });
    }
    let image = |v: usize, z: usize| coset_of[g.mul(reps[v], z)];

    // Every right translation preserves arcs.
    let mut bad_maps = 0usize;
    'outer: for z in 0..g.order() {
        for (u, v) in q.arcs() {
            let (pu, pv) = (image(u, z), image(v, z));
            if !q.has_arc(pu, pv) {
                bad_maps += 1;
                witness.get_or_insert_with(|| {
                    format!("translation by {z} sends arc ({u},{v}) to non-arc ({pu},{pv})")
                });
                continue 'outer;
            }
        }
    }
    checks.push(Check::size("non-automorphic translations", bad_maps, Relation::Eq, 0));

    let orbit: std::collections::BTreeSet<usize> = (0..g.order()).map(|z| image(0, z)).collect();
    checks.push(Check::size("vertex orbit", orbit.len(), Relation::Eq, q.vertex_count()));

    // Translations by H fix the coset H and move its out-neighbours around.
    let mut moved = 0usize;
    for z in h.iter() {
        if image(0, z) != 0 {
            moved += 1;
        }
    }
    checks.push(Check::size("stabiliser moves H", moved, Relation::Eq, 0));
    let nbrs = q.out_neighbours(0);
    let arc_orbit: std::collections::BTreeSet<usize> = match nbrs.first() {
        Some(&w) => h.iter().map(|z| image(w, z)).collect(),
        None => Default::default(),
    };
    checks.push(Check::size("out-neighbour orbit", arc_orbit.len(), Relation::Eq, nbrs.len()));
    if nbrs.iter().any(|w| !arc_orbit.contains(w)) && witness.is_none() {
        witness = Some("out-neighbours of H not a single orbit".into());
    }

    let degree = q.regular_degree();
    match degree {
        Some(d) => checks.push(Check::size("degree", d, Relation::Eq, expected_degree)),
        None => {
            let v = (0..q.vertex_count())
                .find(|&v| q.out_neighbours(v).len() != nbrs.len() || q.in_neighbours(v).len() != nbrs.len())
                .unwrap_or(0);
            checks.push(Check::flag("regular", false, true));
            witness.get_or_insert_with(|| {
                format!(
                    "vertex {v} has out-degree {} and in-degree {}, vertex 0 has {}",
                    q.out_neighbours(v).len(),
                    q.in_neighbours(v).len(),
                    nbrs.len()
                )
            });
        }
    }
    Ok(TransitivityVerdict { degree, expected_degree, checks, witness })
}

/// `|e(C)|`: arcs from `c` to its complement. Out-of-range vertices are
/// ignored.
pub fn outgoing_arcs(q: &DirectedGraph, c: &[usize]) -> usize {
    let mut inside = vec![false; q.vertex_count()];
    for &v in c {
        if v < inside.len() {
            inside[v] = true;
        }
    }
    (0..q.vertex_count())
        .filter(|&u| inside[u])
        .map(|u| q.out_neighbours(u).iter().filter(|&&v| !inside[v]).count())
        .sum()
}

pub fn is_antisymmetric(q: &DirectedGraph) -> bool {
    q.arcs().all(|(u, v)| !q.has_arc(v, u))
}

/// Every arc `(u,v)` closes into `u → v → w → u`.
pub fn every_arc_in_oriented_triangle(q: &DirectedGraph) -> bool {
    q.arcs().all(|(u, v)| {
        q.out_neighbours(v)
            .iter()
            .any(|&w| w != u && q.has_arc(w, u))
    })
}

fn induced_arcs(q: &DirectedGraph, vs: &[usize]) -> usize {
    vs.iter()
        .map(|&u| vs.iter().filter(|&&v| q.has_arc(u, v)).count())
        .sum()
}

/// A 4-set inducing at least 5 arcs and no 2-cycle, first in lexicographic
/// order.
pub fn contains_k4_star(q: &DirectedGraph) -> Option<[usize; 4]> {
    let n = q.vertex_count();
    // Walk neighbourhoods: such a set is connected, so it lies within
    // distance two of its smallest vertex in the underlying graph.
    let undirected = |u: usize| -> Vec<usize> {
        let mut v: Vec<usize> = q.out_neighbours(u).iter().chain(q.in_neighbours(u)).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut best: Option<[usize; 4]> = None;
    for a in 0..n {
        let mut ball: Vec<usize> = Vec::new();
        for b in undirected(a) {
            ball.push(b);
            ball.extend(undirected(b));
        }
        ball.retain(|&x| x > a);
        ball.sort_unstable();
        ball.dedup();
        for i in 0..ball.len() {
            for j in i + 1..ball.len() {
                for l in j + 1..ball.len() {
                    let set = [a, ball[i], ball[j], ball[l]];
                    if induced_arcs(q, &set) >= 5
                        && set.iter().all(|&u| set.iter().all(|&v| !(q.has_arc(u, v) && q.has_arc(v, u))))
                        && best.is_none_or(|b| set < b)
                    {
                        best = Some(set);
                    }
                }
            }
        }
        if best.is_some() {
            return best;
        }
    }
    best
}

/// Underlying simple graph is `K_{2,2,2}`.
pub fn is_octahedron_underlying(q: &DirectedGraph) -> bool {
    if q.vertex_count() != 6 {
        return false;
    }
    let adjacent = |u: usize, v: usize| q.has_arc(u, v) || q.has_arc(v, u);
    // Each vertex misses exactly one other, and missing is symmetric.
    (0..6).all(|u| {
        let missing: Vec<usize> = (0..6).filter(|&v| v != u && !adjacent(u, v)).collect();
        missing.len() == 1 && {
            let m = missing[0];
            (0..6).filter(|&v| v != m && !adjacent(m, v)).eq(std::iter::once(u))
        }
    })
}

/// Largest number of arcs induced by `k` vertices, by scanning all
/// `k`-subsets. Limited to `k ≤ 4`.
pub fn induced_arc_maximum(q: &DirectedGraph, k: usize) -> Result<usize, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidK);
    }
    if k > 4 {
        return Err(GraphError::Limit(format!("induced maximum only for k <= 4, got {k}")));
    }
    let n = q.vertex_count();
    if n < k {
        return Ok(0);
    }
    let mut best = 0;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        best = best.max(induced_arcs(q, &idx));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(best);
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> DirectedGraph {
        let g = FiniteGroup::cyclic(6).unwrap();
        DirectedGraph::cayley(&g, &g.subset([1, 4]).unwrap()).unwrap()
    }

    #[test]
    fn rejects_bad_arcs() {
        assert_eq!(DirectedGraph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            DirectedGraph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, count: 3 })
        );
        assert_eq!(DirectedGraph::new(0, []), Err(GraphError::NoVertices));
    }

    #[test]
    fn dump_round_trip() {
        let q = octahedron();
        let text = q.dump();
        assert!(text.starts_with("6 12\n"));
        assert_eq!(DirectedGraph::parse(&text).unwrap(), q);
        assert!(DirectedGraph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn semidirect_quotient() {
        let g = FiniteGroup::semidirect(7, 3).unwrap();
        let h = g.subset([0, 1, 2]).unwrap();
        let q = build_quotient_graph(&g, &h, 3).unwrap();
        assert_eq!(q.graph.vertex_count(), 7);
        assert_eq!(q.graph.regular_degree(), Some(3));
        assert_eq!(q.reps, vec![0, 3, 4, 5, 9, 10, 11]);
        let v = verify_translation_transitivity(&q.graph, &g, &h, 3).unwrap();
        assert!(v.pass(), "{:?}", v);
        assert_eq!(v.degree, Some(3));
        assert!(is_antisymmetric(&q.graph));
    }

    #[test]
    fn abelian_collapse() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let h = g.subset([0, 3]).unwrap();
        let q = build_quotient_graph(&g, &h, 1).unwrap();
        assert_eq!(q.graph.vertex_count(), 3);
        assert_eq!(q.graph.regular_degree(), Some(1));
        assert_eq!(build_quotient_graph(&g, &h, 3).unwrap_err(), GraphError::ElementInSubgroup);
        let not_sub = g.subset([0, 1]).unwrap();
        assert!(matches!(build_quotient_graph(&g, &not_sub, 2), Err(GraphError::Group(_))));
    }

    #[test]
    fn trivial_subgroup_gives_cycles() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let q = build_quotient_graph(&g, &g.trivial_subgroup(), 1).unwrap();
        assert_eq!(q.graph.vertex_count(), 8);
        assert_eq!(q.graph.regular_degree(), Some(1));
        assert!(!q.graph.is_weakly_connected());
        let v = verify_translation_transitivity(&q.graph, &g, &g.trivial_subgroup(), 1).unwrap();
        assert!(v.pass());
    }

    #[test]
    fn path_fails_transitivity() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let p = DirectedGraph::path(3).unwrap();
        let v = verify_translation_transitivity(&p, &g, &g.trivial_subgroup(), 1).unwrap();
        assert!(!v.pass());
        assert!(v.witness.is_some());
        assert_eq!(v.degree, None);
    }

    #[test]
    fn outgoing_counts() {
        let c = DirectedGraph::directed_cycle(6).unwrap();
        assert_eq!(outgoing_arcs(&c, &[0, 1, 2, 3, 4, 5]), 0);
        assert_eq!(outgoing_arcs(&c, &[2, 3, 4]), 1);
        assert_eq!(outgoing_arcs(&c, &[0, 2]), 2);
    }

    #[test]
    fn structure_detectors() {
        let oct = octahedron();
        assert!(is_antisymmetric(&oct));
        assert!(every_arc_in_oriented_triangle(&oct));
        assert!(is_octahedron_underlying(&oct));
        assert_eq!(contains_k4_star(&oct), Some([0, 1, 2, 3]));
        let c3 = DirectedGraph::directed_cycle(3).unwrap();
        assert!(every_arc_in_oriented_triangle(&c3));
        assert_eq!(contains_k4_star(&c3), None);
        let c4 = DirectedGraph::directed_cycle(4).unwrap();
        assert!(!every_arc_in_oriented_triangle(&c4));
        assert_eq!(contains_k4_star(&c4), None);
        let k4 = DirectedGraph::bidirected_complete(4).unwrap();
        assert!(!is_antisymmetric(&k4));
        assert!(!is_octahedron_underlying(&DirectedGraph::directed_cycle(6).unwrap()));
        // triangular prism
        let prism = DirectedGraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!is_octahedron_underlying(&prism));
    }

    #[test]
    fn induced_maximum() {
        let oct = octahedron();
        assert_eq!(induced_arc_maximum(&oct, 3).unwrap(), 3);
        assert_eq!(induced_arc_maximum(&oct, 4).unwrap(), 5);
        let k4 = DirectedGraph::bidirected_complete(4).unwrap();
        assert_eq!(induced_arc_maximum(&k4, 2).unwrap(), 2);
    }
}
