//! Immutable simple undirected graphs stored as bit-matrix rows.
//!
//! Each vertex owns a row of `words` 64-bit words; for graphs on at most 64
//! vertices a row is a single word and the hot paths (refinement, rainbow
//! search) work directly on `u64` masks.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph6;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::argument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from single-word rows. The rows
    /// must already be symmetric and loop-free.
    pub(crate) fn from_rows64(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(n <= WORD && rows.len() == n);
        debug_assert!((0..n).all(|v| rows[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (rows[u] >> v & 1) == (rows[v] >> u & 1))));
        Graph { n, words: 1, rows }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// True when rows fit in a single machine word.
    pub fn is_small(&self) -> bool {
        self.n <= WORD
    }

    /// Neighbor mask of `v`. Only valid for graphs with at most 64 vertices.
    #[inline]
    pub(crate) fn row64(&self, v: usize) -> u64 {
        debug_assert!(self.is_small());
        self.rows[v]
    }

    /// Mask with the low `n` bits set (graphs with at most 64 vertices).
    pub(crate) fn vertex_mask(&self) -> u64 {
        debug_assert!(self.is_small());
        if self.n == WORD {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter(bits).map(move |b| w * WORD + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted into nondecreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.n == 0 || self.max_degree() == self.min_degree()
    }

    /// True when every integer between the minimum and maximum degree is
    /// attained by some vertex.
    pub fn has_consecutive_degrees(&self) -> bool {
        let seq = self.degree_sequence();
        seq.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Edges as `(u, v)` with `u < v`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        2 * self.edge_count() == self.n * self.n.saturating_sub(1)
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    /// Complete or edgeless.
    pub fn is_trivial(&self) -> bool {
        self.is_complete() || self.is_edgeless()
    }

    /// `K_{1,n-1}` with `n >= 3`.
    pub fn is_star(&self) -> bool {
        let n = self.n;
        if n < 3 || self.edge_count() != n - 1 {
            return false;
        }
        let seq = self.degree_sequence();
        seq[n - 1] == n - 1 && seq[..n - 1].iter().all(|&d| d == 1)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for w in 0..self.words {
                let lo = w * WORD;
                let hi = ((w + 1) * WORD).min(self.n);
                if lo >= hi {
                    continue;
                }
                let span = hi - lo;
                let full = if span == WORD {
                    u64::MAX
                } else {
                    (1u64 << span) - 1
                };
                let mut bits = !self.rows[u * self.words + w] & full;
                if u >= lo && u < hi {
                    bits &= !(1u64 << (u - lo));
                }
                g.rows[u * self.words + w] = bits;
            }
        }
        g
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing vertex order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if let Some(&v) = s.members.last() {
            if v >= self.n {
                return Err(Error::argument(format!(
                    "vertex {v} out of range for {} vertices",
                    self.n
                )));
            }
        }
        let mut g = Graph::empty(s.len());
        for (i, &u) in s.members.iter().enumerate() {
            for (j, &v) in s.members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by the vertices in `mask` (graphs with at most 64 vertices).
    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        debug_assert!(self.is_small());
        let verts: Vec<usize> = BitIter(mask).collect();
        let rows = verts
            .iter()
            .map(|&u| {
                let r = self.rows[u] & mask;
                verts
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, &v)| acc | ((r >> v & 1) << j))
            })
            .collect();
        Graph::from_rows64(verts.len(), rows)
    }

    /// `self` followed by `other`, with no edges between them.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::argument(
                "permutation length differs from vertex count",
            ));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::argument("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Largest eccentricity, or `None` for disconnected (or empty) graphs.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::new();
            dist[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += self
                .neighbors(v)
                .filter(|&w| w > v && self.has_edge(u, w))
                .count();
        }
        count
    }

    /// Number of (not necessarily induced) 4-cycles.
    pub fn four_cycle_count(&self) -> usize {
        // each C4 is counted once per diagonal pair, i.e. twice
        let mut twice = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = self.neighbors(u).filter(|&w| self.has_edge(v, w)).count();
                twice += common * common.saturating_sub(1) / 2;
            }
        }
        twice / 2
    }

    pub fn to_graph6(&self) -> String {
        graph6::emit(self).expect("vertex count within graph6 range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match graph6::emit(self) {
            Ok(s) => write!(
                f,
                "Graph({} vertices, {} edges, {s})",
                self.n,
                self.edge_count()
            ),
            Err(_) => write!(f, "Graph({} vertices, {} edges)", self.n, self.edge_count()),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// A set of vertices of some host graph, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Validates `members` against a host with `host_order` vertices.
    pub fn new(members: impl IntoIterator<Item = usize>, host_order: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::argument("duplicate vertex in vertex set"));
        }
        if let Some(&v) = members.last() {
            if v >= host_order {
                return Err(Error::argument(format!(
                    "vertex {v} out of range for {host_order} vertices"
                )));
            }
        }
        Ok(VertexSet { members })
    }

    pub fn all(n: usize) -> Self {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    #[cfg(test)]
    fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: BitIter(mask).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// The vertices of `0..n` not in this set.
    pub fn complement_in(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }
}

/// Iterates the set bit positions of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn complement_of_k3_is_empty() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.complement(), Graph::empty(3));
    }

    #[test]
    fn complement_spans_word_boundary() {
        let g = Graph::from_edges(70, [(0, 69), (63, 64)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 70 * 69 / 2 - 2);
        assert!(!c.has_edge(0, 69));
        assert!(c.has_edge(0, 64));
        assert!(!c.has_edge(5, 5));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_consecutive_cycle_vertices_form_path() {
        let s = VertexSet::new([0, 1, 2], 5).unwrap();
        assert_eq!(cycle(5).induced_subgraph(&s).unwrap(), path(3));
        let all = VertexSet::all(5);
        assert_eq!(cycle(5).induced_subgraph(&all).unwrap(), cycle(5));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let s = VertexSet::new([0, 7], 8).unwrap();
        assert!(matches!(
            cycle(5).induced_subgraph(&s),
            Err(Error::Argument(_))
        ));
        assert!(VertexSet::new([1, 1], 3).is_err());
    }

    #[test]
    fn induced_by_mask_matches_vertex_set() {
        let g = cycle(7);
        for mask in 0u64..(1 << 7) {
            let a = g.induced_by_mask(mask);
            let b = g.induced_subgraph(&VertexSet::from_mask(mask)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let lambda = path(3).disjoint_union(&Graph::empty(1));
        assert_eq!(lambda.vertex_count(), 4);
        assert_eq!(lambda.edge_count(), 2);
        assert_eq!(lambda.degree_sequence(), vec![0, 1, 1, 2]);
        let k2 = Graph::complete(2);
        let m2 = k2.disjoint_union(&k2);
        assert_eq!(m2, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(cycle(5).disjoint_union(&Graph::empty(0)), cycle(5));
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(cycle(5).degree_sequence(), vec![2; 5]);
        let seq = cycle(6).degree_sequence();
        assert_eq!(seq.iter().sum::<usize>(), 2 * cycle(6).edge_count());
    }

    #[test]
    fn consecutive_degree_examples() {
        // K2 + 2K1
        let m3p = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert!(m3p.has_consecutive_degrees());
        // C4 + 2K1
        let c4e2 = cycle(4).disjoint_union(&Graph::empty(2));
        assert!(!c4e2.has_consecutive_degrees());
        assert!(path(4).has_consecutive_degrees());
    }

    #[test]
    fn girth_and_diameter() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(cycle(5).diameter(), Some(2));
        assert_eq!(path(4).girth(), None);
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::empty(3).diameter(), None);
        assert_eq!(cycle(4).four_cycle_count(), 1);
        assert_eq!(Graph::complete(4).four_cycle_count(), 3);
        assert_eq!(Graph::complete(4).triangle_count(), 4);
    }

    #[test]
    fn star_recognition() {
        let s4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(s4.is_star());
        assert!(path(3).is_star());
        assert!(!Graph::complete(2).is_star());
        assert!(!path(4).is_star());
    }

    #[test]
    fn permutation_validation() {
        let g = path(3);
        assert!(g.permuted(&[0, 0, 1]).is_err());
        let p = g.permuted(&[1, 0, 2]).unwrap();
        assert!(p.has_edge(1, 0) && p.has_edge(0, 2) && !p.has_edge(1, 2));
    }
}
