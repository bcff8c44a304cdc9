//! The quantum Bruhat graph of a finite Weyl group.
//!
//! Vertices are elements of `W`; for every positive root `alpha` there is an
//! edge `w -> w s_alpha` when either `l(w s_alpha) = l(w) + 1` (upward,
//! weight 0) or `l(w s_alpha) = l(w) - <2 rho, alpha^vee> + 1` (downward,
//! weight `alpha^vee`). Weights are integer vectors in simple-coroot
//! coordinates.
//!
//! [`Qbg`] generates edges on the fly from elements and is usable for any
//! group; [`IndexedQbg`] precomputes adjacency over an [`EnumeratedGroup`] for
//! exhaustive all-pairs work.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::rootdata::{CoweightVector, MAX_RANK};
use crate::weyl::{ElementKey, EnumeratedGroup, Weyl, WeylElement};

/// Path weight in simple-coroot coordinates (entries past the rank are 0).
pub type Weight = [i64; MAX_RANK];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Upward,
    Downward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbgEdge {
    pub source: WeylElement,
    pub target: WeylElement,
    /// Index into `RootSystem::positive_roots`.
    pub root: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QbgPath {
    pub edges: Vec<QbgEdge>,
    pub weight: Vec<i64>,
}

impl QbgPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// `<2 rho, alpha^vee>` for each positive coroot: twice its height.
fn coroot_heights(weyl: &Weyl) -> Vec<i64> {
    weyl.root_system()
        .positive_coroots
        .iter()
        .map(|c| 2 * c.iter().sum::<i64>())
        .collect()
}

fn add_coroot(w: &mut Weight, coroot: &[i64]) {
    for (slot, c) in w.iter_mut().zip(coroot) {
        *slot += c;
    }
}

/// `<2 rho, c>` for a vector in coroot coordinates.
pub fn pair_two_rho(weight: &[i64]) -> i64 {
    2 * weight.iter().sum::<i64>()
}

/// Anything that can answer `(d(x, y), wt(x, y))` queries.
pub trait QbgOracle {
    fn shortest(&self, x: &WeylElement, y: &WeylElement) -> (usize, Vec<i64>);

    fn distance(&self, x: &WeylElement, y: &WeylElement) -> usize {
        self.shortest(x, y).0
    }
}

/// Quantum Bruhat graph with on-the-fly edge generation.
#[derive(Debug, Clone)]
pub struct Qbg<'a> {
    weyl: &'a Weyl,
    reflections: Vec<WeylElement>,
    heights: Vec<i64>,
}

impl<'a> Qbg<'a> {
    pub fn new(weyl: &'a Weyl) -> Self {
        let reflections = (0..weyl.root_system().num_positive_roots())
            .map(|a| weyl.reflection(a))
            .collect();
        Qbg {
            weyl,
            reflections,
            heights: coroot_heights(weyl),
        }
    }

    pub fn weyl(&self) -> &Weyl {
        self.weyl
    }

    /// All edges out of `w`; each positive root contributes at most one.
    pub fn neighbors(&self, w: &WeylElement) -> Vec<QbgEdge> {
        let l = self.weyl.length(w) as i64;
        let mut out = Vec::new();
        for (a, r) in self.reflections.iter().enumerate() {
            let v = w.mul(r);
            let lv = self.weyl.length(&v) as i64;
            let kind = if lv == l + 1 {
                EdgeKind::Upward
            } else if lv == l - self.heights[a] + 1 {
                EdgeKind::Downward
            } else {
                continue;
            };
            out.push(QbgEdge {
                source: *w,
                target: v,
                root: a,
                kind,
            });
        }
        out
    }

    fn edge_weight(&self, e: &QbgEdge) -> &[i64] {
        match e.kind {
            EdgeKind::Upward => &[],
            EdgeKind::Downward => &self.weyl.root_system().positive_coroots[e.root],
        }
    }

    /// Breadth-first search from `x`, stopping at `y` or once the frontier
    /// passes `bound`. Returns the path as a list of edges.
    fn search(&self, x: &WeylElement, y: &WeylElement, bound: usize) -> Option<Vec<QbgEdge>> {
        let target = self.weyl.key(y);
        let start = self.weyl.key(x);
        if start == target {
            return Some(Vec::new());
        }
        let mut parent: HashMap<ElementKey, Option<QbgEdge>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([(*x, 0usize)]);
        while let Some((w, d)) = queue.pop_front() {
            if d >= bound {
                continue;
            }
            for e in self.neighbors(&w) {
                let k = self.weyl.key(&e.target);
                if parent.contains_key(&k) {
                    continue;
                }
                let found = k == target;
                let next = e.target;
                parent.insert(k, Some(e));
                if found {
                    let mut path = Vec::new();
                    let mut cur = k;
                    while let Some(Some(edge)) = parent.get(&cur) {
                        cur = self.weyl.key(&edge.source);
                        path.push(edge.clone());
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back((next, d + 1));
            }
        }
        None
    }

    /// One shortest path from `x` to `y`.
    pub fn shortest_path(&self, x: &WeylElement, y: &WeylElement) -> QbgPath {
        let edges = self
            .search(x, y, usize::MAX)
            .expect("the quantum Bruhat graph is strongly connected");
        let mut weight = [0; MAX_RANK];
        for e in &edges {
            add_coroot(&mut weight, self.edge_weight(e));
        }
        QbgPath {
            edges,
            weight: weight[..self.weyl.rank()].to_vec(),
        }
    }

    pub fn distance(&self, x: &WeylElement, y: &WeylElement) -> usize {
        self.shortest_path(x, y).len()
    }

    /// `wt(x, y)` in simple-coroot coordinates.
    pub fn weight(&self, x: &WeylElement, y: &WeylElement) -> Vec<i64> {
        self.shortest_path(x, y).weight
    }

    pub fn weight_coweight(&self, x: &WeylElement, y: &WeylElement) -> CoweightVector {
        CoweightVector::from_ints(&self.weight(x, y))
    }

    /// `Some(d(x, y))` if `d(x, y) <= bound`, otherwise `None`.
    pub fn distance_bounded(&self, x: &WeylElement, y: &WeylElement, bound: usize) -> Option<usize> {
        self.search(x, y, bound).map(|p| p.len())
    }
}

impl QbgOracle for Qbg<'_> {
    fn shortest(&self, x: &WeylElement, y: &WeylElement) -> (usize, Vec<i64>) {
        let p = self.shortest_path(x, y);
        (p.len(), p.weight)
    }
}

/// Quantum Bruhat graph with adjacency precomputed over an enumerated group.
#[derive(Debug)]
pub struct IndexedQbg<'g> {
    group: &'g EnumeratedGroup,
    offsets: Vec<u32>,
    /// `(target, root index + 1)`; the root is stored negated for downward
    /// edges.
    edges: Vec<(u32, i16)>,
}

/// Single-source shortest path data.
#[derive(Debug, Clone)]
pub struct BfsResult {
    pub distance: Vec<u32>,
    pub weight: Vec<Weight>,
}

const UNSEEN: u32 = u32::MAX;

impl<'g> IndexedQbg<'g> {
    pub fn new(group: &'g EnumeratedGroup) -> Self {
        let weyl = group.weyl();
        let heights = coroot_heights(weyl);
        let nroots = heights.len();
        let table = group.reflection_table();
        let mut offsets = Vec::with_capacity(group.len() + 1);
        let mut edges = Vec::new();
        offsets.push(0);
        for i in 0..group.len() {
            let l = group.length(i) as i64;
            for (a, h) in heights.iter().enumerate() {
                let j = table[i * nroots + a];
                let lj = group.length(j as usize) as i64;
                if lj == l + 1 {
                    edges.push((j, a as i16 + 1));
                } else if lj == l - h + 1 {
                    edges.push((j, -(a as i16 + 1)));
                }
            }
            offsets.push(edges.len() as u32);
        }
        IndexedQbg {
            group,
            offsets,
            edges,
        }
    }

    pub fn group(&self) -> &'g EnumeratedGroup {
        self.group
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Out-edges of vertex `i` as `(target, root, kind)`.
    pub fn out_edges(&self, i: usize) -> impl Iterator<Item = (usize, usize, EdgeKind)> + '_ {
        let (lo, hi) = (self.offsets[i] as usize, self.offsets[i + 1] as usize);
        self.edges[lo..hi].iter().map(|&(t, r)| {
            if r > 0 {
                (t as usize, (r - 1) as usize, EdgeKind::Upward)
            } else {
                (t as usize, (-r - 1) as usize, EdgeKind::Downward)
            }
        })
    }

    fn coroot(&self, a: usize) -> &[i64] {
        &self.group.weyl().root_system().positive_coroots[a]
    }

    /// Distances and one shortest-path weight from `src` to every vertex.
    pub fn bfs(&self, src: usize) -> BfsResult {
        let n = self.group.len();
        let mut distance = vec![UNSEEN; n];
        let mut weight = vec![[0i64; MAX_RANK]; n];
        let mut queue = VecDeque::with_capacity(n);
        distance[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for (v, a, kind) in self.out_edges(u) {
                if distance[v] != UNSEEN {
                    continue;
                }
                distance[v] = distance[u] + 1;
                let mut w = weight[u];
                if kind == EdgeKind::Downward {
                    add_coroot(&mut w, self.coroot(a));
                }
                weight[v] = w;
                queue.push_back(v);
            }
        }
        BfsResult { distance, weight }
    }

    /// `d(src, dst)` if it is at most `bound`.
    pub fn distance_bounded(&self, src: usize, dst: usize, bound: usize) -> Option<usize> {
        if src == dst {
            return Some(0);
        }
        let mut distance: HashMap<usize, usize> = HashMap::from([(src, 0)]);
        let mut frontier = vec![src];
        for d in 1..=bound {
            let mut next = Vec::new();
            for &u in &frontier {
                for (v, _, _) in self.out_edges(u) {
                    if v == dst {
                        return Some(d);
                    }
                    if let std::collections::hash_map::Entry::Vacant(e) = distance.entry(v) {
                        e.insert(d);
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        None
    }

    /// For every vertex, the set of weights over all shortest paths from
    /// `src`. Exponential in general; intended for small groups.
    pub fn all_shortest_weights(&self, src: usize) -> Vec<BTreeSet<Weight>> {
        let bfs = self.bfs(src);
        let n = self.group.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| bfs.distance[v]);
        let mut sets: Vec<BTreeSet<Weight>> = vec![BTreeSet::new(); n];
        sets[src].insert([0; MAX_RANK]);
        for &u in &order {
            let from = std::mem::take(&mut sets[u]);
            for (v, a, kind) in self.out_edges(u) {
                if bfs.distance[v] != bfs.distance[u] + 1 {
                    continue;
                }
                for w in &from {
                    let mut w = *w;
                    if kind == EdgeKind::Downward {
                        add_coroot(&mut w, self.coroot(a));
                    }
                    sets[v].insert(w);
                }
            }
            sets[u] = from;
        }
        sets
    }

    /// Graphviz rendering with vertices labelled by reduced words.
    pub fn to_dot(&self) -> String {
        let weyl = self.group.weyl();
        let label = |i: usize| {
            let word = weyl.reduced_word(self.group.element(i));
            if word.is_empty() {
                "e".to_string()
            } else {
                word.iter().map(|k| k.to_string()).collect()
            }
        };
        let mut out = String::new();
        writeln!(out, "digraph qbg {{").unwrap();
        for i in 0..self.group.len() {
            writeln!(out, "  v{i} [label=\"{}\"];", label(i)).unwrap();
        }
        for i in 0..self.group.len() {
            for (j, a, kind) in self.out_edges(i) {
                match kind {
                    EdgeKind::Upward => writeln!(out, "  v{i} -> v{j};").unwrap(),
                    EdgeKind::Downward => {
                        let c = self.coroot(a);
                        let w: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                        writeln!(
                            out,
                            "  v{i} -> v{j} [style=dashed, label=\"{}\"];",
                            w.join(",")
                        )
                        .unwrap()
                    }
                }
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// Distance and weight tables for every ordered pair of an enumerated group.
#[derive(Debug)]
pub struct AllPairs<'g> {
    group: &'g EnumeratedGroup,
    distance: Vec<u16>,
    weight: Vec<[i16; MAX_RANK]>,
}

impl<'g> AllPairs<'g> {
    pub fn new(qbg: &IndexedQbg<'g>) -> AllPairs<'g> {
        let group = qbg.group();
        let n = group.len();
        let rows: Vec<BfsResult> = (0..n).into_par_iter().map(|s| qbg.bfs(s)).collect();
        let mut distance = Vec::with_capacity(n * n);
        let mut weight = Vec::with_capacity(n * n);
        for r in rows {
            distance.extend(r.distance.iter().map(|&d| d as u16));
            weight.extend(r.weight.iter().map(|w| w.map(|c| c as i16)));
        }
        AllPairs {
            group,
            distance,
            weight,
        }
    }

    pub fn group(&self) -> &EnumeratedGroup {
        self.group
    }

    pub fn distance_idx(&self, i: usize, j: usize) -> usize {
        self.distance[i * self.group.len() + j] as usize
    }

    pub fn weight_idx(&self, i: usize, j: usize) -> Vec<i64> {
        let rank = self.group.weyl().rank();
        self.weight[i * self.group.len() + j][..rank]
            .iter()
            .map(|&c| c as i64)
            .collect()
    }
}

impl QbgOracle for AllPairs<'_> {
    fn shortest(&self, x: &WeylElement, y: &WeylElement) -> (usize, Vec<i64>) {
        let (i, j) = (self.group.index_of(x), self.group.index_of(y));
        (self.distance_idx(i, j), self.weight_idx(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::TypeLetter;
    use crate::weyl::DEFAULT_GROUP_CAP;

    fn weyl(l: TypeLetter, n: usize) -> Weyl {
        Weyl::of_type(l, n).unwrap()
    }

    #[test]
    fn identity_neighbors() {
        for (l, n) in [(TypeLetter::A, 3), (TypeLetter::B, 3), (TypeLetter::G, 2)] {
            let w = weyl(l, n);
            let g = Qbg::new(&w);
            let edges = g.neighbors(&w.identity());
            let up: Vec<_> = edges.iter().filter(|e| e.kind == EdgeKind::Upward).collect();
            assert_eq!(up.len(), n);
            for e in &edges {
                let r = w.reflection(e.root);
                if e.kind == EdgeKind::Downward {
                    let h = pair_two_rho(&w.root_system().positive_coroots[e.root]);
                    assert_eq!(h, w.length(&r) as i64 + 1);
                }
            }
            let roots: BTreeSet<usize> = edges.iter().map(|e| e.root).collect();
            assert_eq!(roots.len(), edges.len());
        }
    }

    #[test]
    fn a2_longest_to_identity() {
        let w = weyl(TypeLetter::A, 2);
        let g = Qbg::new(&w);
        let w0 = w.longest_element();
        assert_eq!(g.distance(&w0, &w.identity()), 1);
        assert_eq!(g.weight(&w0, &w.identity()), vec![1, 1]);
        assert_eq!(g.distance_bounded(&w0, &w.identity(), 0), None);
        assert_eq!(g.distance_bounded(&w0, &w0, 0), Some(0));
    }

    #[test]
    fn distance_from_identity_is_length() {
        let w = weyl(TypeLetter::B, 3);
        let group = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
        let q = IndexedQbg::new(&group);
        let bfs = q.bfs(0);
        for i in 0..group.len() {
            assert_eq!(bfs.distance[i] as usize, group.length(i));
            assert_eq!(bfs.weight[i], [0; MAX_RANK]);
        }
    }

    #[test]
    fn indexed_and_on_the_fly_agree() {
        let w = weyl(TypeLetter::C, 3);
        let group = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
        let q = IndexedQbg::new(&group);
        let g = Qbg::new(&w);
        for src in (0..group.len()).step_by(5) {
            let bfs = q.bfs(src);
            for dst in (0..group.len()).step_by(11) {
                let p = g.shortest_path(group.element(src), group.element(dst));
                assert_eq!(p.len(), bfs.distance[dst] as usize);
                assert_eq!(p.weight[..], bfs.weight[dst][..3]);
                assert_eq!(q.distance_bounded(src, dst, p.len()), Some(p.len()));
            }
        }
    }

    #[test]
    fn dot_export_shape() {
        let w = weyl(TypeLetter::A, 2);
        let group = w.enumerate(DEFAULT_GROUP_CAP).unwrap();
        let q = IndexedQbg::new(&group);
        let dot = q.to_dot();
        assert!(dot.starts_with("digraph qbg {"));
        assert_eq!(dot.matches("->").count(), q.num_edges());
        assert!(dot.contains("label=\"e\""));
    }
}
