//! Partitions into `n - 2` blocks up to automorphisms of the host.
//!
//! Such a partition has one block of size three, or two blocks of size two,
//! and all other blocks singletons; it is determined by its non-singleton
//! blocks, which makes the group action cheap to apply.

use std::collections::HashMap;

use super::partition::{class_masks, Coloring, Partitions};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::iso::automorphisms;
use crate::orbits::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRepresentative {
    /// First member of the orbit in restricted-growth order.
    pub coloring: Coloring,
    pub orbit_size: u64,
}

/// The non-singleton blocks, packed: a triple occupies the low word, a pair
/// of pairs is stored smaller mask first.
fn key(masks: &[u64]) -> u128 {
    let mut big: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|m| m.count_ones() > 1)
        .collect();
    big.sort_unstable();
    match big.as_slice() {
        [t] => *t as u128,
        [a, b] => (*a as u128) << 64 | *b as u128,
        _ => unreachable!("n - 2 blocks have one triple or two pairs"),
    }
}

fn apply(perm: &[usize], mask: u64) -> u64 {
    BitIter(mask).fold(0, |acc, v| acc | 1 << perm[v])
}

fn image(perm: &[usize], key: u128) -> u128 {
    let (hi, lo) = ((key >> 64) as u64, key as u64);
    if hi == 0 {
        apply(perm, lo) as u128
    } else {
        let (a, b) = (apply(perm, hi), apply(perm, lo));
        (a.min(b) as u128) << 64 | a.max(b) as u128
    }
}

/// One representative per orbit of `Aut(g)` on partitions of `V(g)` into
/// `k = n - 2` blocks, in order of first appearance.
pub fn orbit_reduced_partitions(g: &Graph, k: usize) -> Result<Vec<OrbitRepresentative>> {
    let n = g.vertex_count();
    if n < 3 || k != n - 2 {
        return Err(Error::argument(format!(
            "orbit reduction is implemented for k = n - 2 only (n = {n}, k = {k})"
        )));
    }
    if !g.is_small() {
        return Err(Error::capacity(
            "orbit reduction supports at most 64 vertices",
        ));
    }
    let generators = automorphisms(g)?.generators;

    let mut ids: HashMap<u128, u32> = HashMap::new();
    let mut keys = Vec::new();
    let mut first = Vec::new();
    let mut partitions = Partitions::new(n, k)?;
    while let Some(rgs) = partitions.next_rgs() {
        let kk = key(&class_masks(rgs, k));
        ids.insert(kk, keys.len() as u32);
        keys.push(kk);
        first.push(Coloring::from_rgs(rgs, k));
    }

    let mut uf = UnionFind::new(keys.len());
    for perm in &generators {
        for (i, &kk) in keys.iter().enumerate() {
            uf.union(i, ids[&image(perm, kk)] as usize);
        }
    }
    let mut size: HashMap<usize, u64> = HashMap::new();
    let mut order = Vec::new();
    for i in 0..keys.len() {
        let root = uf.find(i);
        let s = size.entry(root).or_insert(0);
        if *s == 0 {
            order.push((root, i));
        }
        *s += 1;
    }
    Ok(order
        .into_iter()
        .map(|(root, i)| OrbitRepresentative {
            coloring: first[i].clone(),
            orbit_size: size[&root],
        })
        .collect())
}
