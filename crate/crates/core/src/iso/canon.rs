//! Individualization-refinement search.
//!
//! Ordered partitions are refined to equitable ones, a vertex of the first
//! smallest non-singleton cell is individualized, and the search recurses
//! until the partition is discrete. Each leaf fixes a labelling; the
//! canonical form is the lexicographically greatest relabelled adjacency
//! matrix. Leaves with equal matrices yield automorphisms, which prune
//! sibling subtrees (children in one orbit of the pointwise stabilizer of
//! the current prefix) and give the group order by orbit-stabilizer along
//! the first path.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::graph::{BitIter, Graph};
use crate::orbits::orbit_mask;

/// Output of a full search on one graph.
#[derive(Clone, Debug)]
pub(crate) struct SearchResult {
    /// Canonical position to original vertex.
    pub lab: Vec<usize>,
    /// Rows of the canonically relabelled graph.
    pub form: Vec<u64>,
    pub generators: Vec<Vec<usize>>,
    pub group_order: BigUint,
}

#[derive(Clone, Debug)]
struct Leaf {
    path: Vec<usize>,
    lab: Vec<usize>,
    form: Vec<u64>,
}

struct Searcher<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

/// Splits cells of `cells` against each splitter in `queue` until the
/// partition is equitable. Parts are ordered by neighbour count, so the
/// result depends only on the ordered partition and the graph.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>, queue: &mut VecDeque<u64>) {
    let mut parts: Vec<(u32, u64)> = Vec::new();
    while let Some(w) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & (x - 1) == 0 {
                i += 1;
                continue;
            }
            parts.clear();
            for v in BitIter(x) {
                let c = (adj[v] & w).count_ones();
                match parts.iter_mut().find(|p| p.0 == c) {
                    Some(p) => p.1 |= 1 << v,
                    None => parts.push((c, 1 << v)),
                }
            }
            if parts.len() == 1 {
                i += 1;
                continue;
            }
            parts.sort_unstable_by_key(|p| p.0);
            if let Some(pos) = queue.iter().position(|&q| q == x) {
                queue.remove(pos);
                queue.extend(parts.iter().map(|p| p.1));
            } else {
                let mut largest = 0;
                for (j, p) in parts.iter().enumerate() {
                    if p.1.count_ones() > parts[largest].1.count_ones() {
                        largest = j;
                    }
                }
                queue.extend(
                    parts
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != largest)
                        .map(|(_, p)| p.1),
                );
            }
            let count = parts.len();
            cells.splice(i..i + 1, parts.iter().map(|p| p.1));
            i += count;
        }
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Searcher<'a> {
    fn visit(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored = 0u64;
        for v in BitIter(cell) {
            if explored != 0 {
                let fixing: Vec<&[usize]> = self
                    .generators
                    .iter()
                    .filter(|g| path.iter().all(|&p| g[p] == p))
                    .map(Vec::as_slice)
                    .collect();
                if orbit_mask(v, &fixing) & explored != 0 {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            let mut queue = VecDeque::from([1u64 << v]);
            refine(self.adj, &mut child, &mut queue);
            path.push(v);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = vec![0usize; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let form: Vec<u64> = lab
            .iter()
            .map(|&v| BitIter(self.adj[v]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        let leaf = Leaf {
            path: path.to_vec(),
            lab,
            form,
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.form == first.form {
            let jump = common_prefix(&first.path, &leaf.path);
            let gen = compose_labels(&first.lab, &leaf.lab);
            self.push_generator(gen);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best set with first");
        if leaf.form == best.form {
            let jump = common_prefix(&best.path, &leaf.path);
            let gen = compose_labels(&best.lab, &leaf.lab);
            self.push_generator(gen);
            return Some(jump);
        }
        if leaf.form > best.form {
            self.best = Some(leaf);
        }
        None
    }

    fn push_generator(&mut self, gen: Vec<usize>) {
        if gen.iter().enumerate().any(|(i, &x)| i != x) {
            self.generators.push(gen);
        }
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn compose_labels(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

/// Runs the search on a graph with at most 64 vertices.
pub(crate) fn search(g: &Graph) -> SearchResult {
    let n = g.vertex_count();
    debug_assert!(g.is_small());
    if n == 0 {
        return SearchResult {
            lab: Vec::new(),
            form: Vec::new(),
            generators: Vec::new(),
            group_order: BigUint::from(1u32),
        };
    }
    let adj: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut cells = vec![g.vertex_mask()];
    let mut queue = VecDeque::from([g.vertex_mask()]);
    refine(&adj, &mut cells, &mut queue);
    let mut searcher = Searcher {
        adj: &adj,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut path = Vec::new();
    searcher.visit(cells, &mut path);

    let first = searcher.first.expect("search reaches at least one leaf");
    let best = searcher.best.expect("search reaches at least one leaf");
    let mut group_order = BigUint::from(1u32);
    for depth in 0..first.path.len() {
        let prefix = &first.path[..depth];
        let fixing: Vec<&[usize]> = searcher
            .generators
            .iter()
            .filter(|g| prefix.iter().all(|&p| g[p] == p))
            .map(Vec::as_slice)
            .collect();
        group_order *= orbit_mask(first.path[depth], &fixing).count_ones();
    }
    SearchResult {
        lab: best.lab,
        form: best.form,
        generators: searcher.generators,
        group_order,
    }
}
