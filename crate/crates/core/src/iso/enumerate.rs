//! One graph per isomorphism class by canonical augmentation.
//!
//! A child on `n` vertices is produced from a parent on `n - 1` by adding
//! vertex `n - 1` with every possible neighbourhood. It is kept only when the
//! added vertex lies in the automorphism orbit of the vertex that the
//! canonical labelling places last, so each class has a unique parent class;
//! isomorphic children of one parent are then merged by certificate.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::search;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orbits::vertex_orbits;

pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// All graphs on `n` vertices up to isomorphism, as canonical forms.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_graphs_capped(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n > cap {
        return Err(Error::capacity(format!(
            "enumeration of {n}-vertex graphs exceeds the cap of {cap}"
        )));
    }
    if n > 16 {
        return Err(Error::capacity("enumeration is limited to 16 vertices"));
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        level = level.par_iter().flat_map_iter(|p| children(p, m)).collect();
    }
    Ok(level)
}

fn children(parent: &Graph, m: usize) -> Vec<Graph> {
    let last = m - 1;
    let base: Vec<u64> = (0..last).map(|v| parent.row64(v)).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for nbhd in 0u64..(1u64 << last) {
        let mut rows = base.clone();
        for (v, row) in rows.iter_mut().enumerate() {
            *row |= (nbhd >> v & 1) << last;
        }
        rows.push(nbhd);
        let child = Graph::from_rows64(m, rows);
        let r = search(&child);
        let canonical_last = r.lab[last];
        if canonical_last != last {
            let orbits = vertex_orbits(m, &r.generators);
            let same = orbits
                .iter()
                .any(|o| o.contains(&last) && o.contains(&canonical_last));
            if !same {
                continue;
            }
        }
        if seen.insert(r.form.clone()) {
            out.push(Graph::from_rows64(m, r.form));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::certificate;

    /// Filters all labelled graphs through certificates.
    fn count_by_filter(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes = HashSet::new();
        for bits in 0u64..(1u64 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            classes.insert(certificate(&g).unwrap());
        }
        classes.len()
    }

    #[test]
    fn counts_agree_with_filter_method() {
        for n in 0..=6 {
            assert_eq!(
                enumerate_graphs(n).unwrap().len(),
                count_by_filter(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn classes_are_distinct() {
        let graphs = enumerate_graphs(6).unwrap();
        let certs: HashSet<_> = graphs.iter().map(|g| certificate(g).unwrap()).collect();
        assert_eq!(certs.len(), graphs.len());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_graphs(9), Err(Error::Capacity(_))));
        assert!(enumerate_graphs_capped(3, 2).is_err());
    }
}
