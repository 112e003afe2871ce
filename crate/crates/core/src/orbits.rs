//! Union-find and permutation-group orbit helpers.

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Blocks as sorted index lists, ordered by least member.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Option<usize>> = vec![None; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            match by_root[r] {
                Some(i) => out[i].push(x),
                None => {
                    by_root[r] = Some(out.len());
                    out.push(vec![x]);
                }
            }
        }
        out
    }
}

/// Vertex orbits of the group generated by `gens` on `0..n`.
pub(crate) fn vertex_orbits(n: usize, gens: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for (v, &img) in g.iter().enumerate() {
            uf.union(v, img);
        }
    }
    uf.blocks()
}

/// Orbit of `v` (as a bit mask) under the group generated by `gens`.
pub(crate) fn orbit_mask(v: usize, gens: &[&[usize]]) -> u64 {
    let mut orbit = 1u64 << v;
    let mut frontier = vec![v];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g[x];
            if orbit >> y & 1 == 0 {
                orbit |= 1 << y;
                frontier.push(y);
            }
        }
    }
    orbit
}
