//! Rainbow induced embeddings under a fixed colouring.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::iso::canonical_labeling;

use super::partition::Coloring;

/// Search plan for one pattern graph `h`, reusable across colourings.
#[derive(Clone, Debug)]
pub(crate) struct EmbeddingPlan {
    /// Pattern vertices in placement order.
    order: Vec<usize>,
    /// `adjacent[i][j]`: whether `order[i]` and `order[j]` are adjacent, `j < i`.
    adjacent: Vec<Vec<bool>>,
    degree: Vec<usize>,
    k: usize,
}

impl EmbeddingPlan {
    /// Orders pattern vertices by descending degree, ties broken by canonical position.
    pub fn new(h: &Graph) -> Result<Self> {
        let k = h.vertex_count();
        let lab = canonical_labeling(h)?;
        let mut position = vec![0; k];
        for (i, &v) in lab.iter().enumerate() {
            position[v] = i;
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), position[v]));
        let adjacent = (0..k)
            .map(|i| (0..i).map(|j| h.has_edge(order[i], order[j])).collect())
            .collect();
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Ok(EmbeddingPlan {
            order,
            adjacent,
            degree,
            k,
        })
    }

    /// Finds an embedding of the pattern into `g` using one vertex of each
    /// class; returns the map pattern vertex -> host vertex.
    pub fn find(&self, g: &Graph, class_of: &[usize], masks: &[u64]) -> Option<Vec<usize>> {
        let n = g.vertex_count();
        let k = self.k;
        let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
        let all = g.vertex_mask();
        // degree filters per placement slot
        let eligible: Vec<u64> = (0..k)
            .map(|i| {
                let d = self.degree[i];
                let co = k - 1 - d;
                (0..n)
                    .filter(|&v| {
                        let dv = rows[v].count_ones() as usize;
                        dv >= d && n - 1 - dv >= co
                    })
                    .fold(0u64, |acc, v| acc | 1 << v)
            })
            .collect();
        let mut placed = vec![0usize; k];
        let mut used_colors = 0u64;
        if self.extend(
            0,
            &rows,
            all,
            class_of,
            masks,
            &eligible,
            &mut placed,
            &mut used_colors,
        ) {
            let mut map = vec![0; k];
            for (i, &v) in placed.iter().enumerate() {
                map[self.order[i]] = v;
            }
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        depth: usize,
        rows: &[u64],
        all: u64,
        class_of: &[usize],
        masks: &[u64],
        eligible: &[u64],
        placed: &mut [usize],
        used_colors: &mut u64,
    ) -> bool {
        if depth == self.k {
            return true;
        }
        let mut cand = eligible[depth];
        for c in BitIter(*used_colors) {
            cand &= !masks[c];
        }
        for (j, &adj) in self.adjacent[depth].iter().enumerate() {
            let row = rows[placed[j]];
            cand &= if adj { row } else { all & !row };
            cand &= !(1u64 << placed[j]);
        }
        for v in BitIter(cand) {
            placed[depth] = v;
            let bit = 1u64 << class_of[v];
            *used_colors |= bit;
            if self.extend(
                depth + 1,
                rows,
                all,
                class_of,
                masks,
                eligible,
                placed,
                used_colors,
            ) {
                return true;
            }
            *used_colors &= !bit;
        }
        false
    }
}

/// Whether some set with one vertex from each colour class induces a copy
/// of `h`; on success returns the embedding `h`-vertex -> `g`-vertex.
pub fn rainbow_induced_exists(g: &Graph, c: &Coloring, h: &Graph) -> Result<Option<Vec<usize>>> {
    if c.k() != h.vertex_count() {
        return Err(Error::argument(format!(
            "colouring has {} classes but the pattern has {} vertices",
            c.k(),
            h.vertex_count()
        )));
    }
    if c.vertex_count() != g.vertex_count() {
        return Err(Error::argument("colouring does not cover the host graph"));
    }
    if !g.is_small() {
        return Err(Error::capacity(
            "rainbow search supports at most 64 host vertices",
        ));
    }
    let plan = EmbeddingPlan::new(h)?;
    Ok(plan.find(g, c.class_of(), &c.class_masks()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{cycle, path};

    fn check_witness(g: &Graph, c: &Coloring, h: &Graph, map: &[usize]) {
        assert!(c.is_rainbow(map));
        for a in 0..h.vertex_count() {
            for b in 0..h.vertex_count() {
                if a != b {
                    assert_eq!(h.has_edge(a, b), g.has_edge(map[a], map[b]));
                }
            }
        }
    }

    #[test]
    fn c5_with_two_pairs_has_rainbow_p3() {
        let c5 = cycle(5);
        // {1,2},{3,4},{5} on vertices 1..5 -> 0-based
        let c = Coloring::from_classes(&[vec![0, 1], vec![2, 3], vec![4]], 5).unwrap();
        let map = rainbow_induced_exists(&c5, &c, &path(3))
            .unwrap()
            .expect("rainbow P3");
        check_witness(&c5, &c, &path(3), &map);
    }

    #[test]
    fn c6_with_three_pairs_has_none() {
        let c = Coloring::from_classes(&[vec![0, 1], vec![2, 3], vec![4, 5]], 6).unwrap();
        assert!(rainbow_induced_exists(&cycle(6), &c, &path(3))
            .unwrap()
            .is_none());
    }

    #[test]
    fn identity_under_singletons() {
        let g = path(5);
        let c = Coloring::new((0..5).collect(), 5).unwrap();
        let map = rainbow_induced_exists(&g, &c, &g).unwrap().unwrap();
        check_witness(&g, &c, &g, &map);
    }

    #[test]
    fn class_count_mismatch() {
        let c = Coloring::new(vec![0, 1, 1], 2).unwrap();
        assert!(rainbow_induced_exists(&path(3), &c, &path(3)).is_err());
    }
}
