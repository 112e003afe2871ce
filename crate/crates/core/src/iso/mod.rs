//! Canonical forms, isomorphism, automorphism groups, transitivity and decks.

mod canon;
mod enumerate;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::orbits::{vertex_orbits, UnionFind};

pub use enumerate::{enumerate_graphs, enumerate_graphs_capped, DEFAULT_ENUMERATION_CAP};

pub(crate) use canon::search;

/// Largest vertex count handled by the canonical labelling search.
pub const MAX_CANONICAL_ORDER: usize = 64;

fn check_capacity(g: &Graph) -> Result<()> {
    if g.vertex_count() > MAX_CANONICAL_ORDER {
        return Err(Error::capacity(format!(
            "{} vertices exceed the canonical labelling bound of {MAX_CANONICAL_ORDER}",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Canonical form of a graph; two certificates are equal iff the graphs
/// are isomorphic. The bytes are the graph6 encoding of the canonical
/// relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    n: usize,
    bytes: Vec<u8>,
}

impl Certificate {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The canonical representative as graph6.
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.bytes).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        crate::graph6::parse(self.as_graph6()).expect("certificate holds valid graph6")
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.as_graph6())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

fn certificate_from_form(n: usize, form: Vec<u64>) -> Certificate {
    let canon = Graph::from_rows64(n, form);
    Certificate {
        n,
        bytes: canon.to_graph6().into_bytes(),
    }
}

pub fn certificate(g: &Graph) -> Result<Certificate> {
    check_capacity(g)?;
    let r = search(g);
    Ok(certificate_from_form(g.vertex_count(), r.form))
}

/// Canonical labelling: entry `i` is the original vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_capacity(g)?;
    Ok(search(g).lab)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    check_capacity(g)?;
    let r = search(g);
    Ok(Graph::from_rows64(g.vertex_count(), r.form))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return Ok(false);
    }
    Ok(certificate(a)? == certificate(b)?)
}

/// An isomorphism from `a` onto `b` as a vertex map, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if !are_isomorphic(a, b)? {
        return Ok(None);
    }
    let la = canonical_labeling(a)?;
    let lb = canonical_labeling(b)?;
    let mut map = vec![0; a.vertex_count()];
    for (&x, &y) in la.iter().zip(&lb) {
        map[x] = y;
    }
    Ok(Some(map))
}

/// Automorphism group data: generators, orbit partitions and exact order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismInfo {
    pub generators: Vec<Vec<usize>>,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    pub group_order: BigUint,
}

impl AutomorphismInfo {
    /// Orbits of the group on unordered non-adjacent pairs.
    pub fn non_edge_orbits(&self, g: &Graph) -> Vec<Vec<(usize, usize)>> {
        pair_orbits(&g.complement(), &self.generators)
    }
}

fn pair_orbits(g: &Graph, gens: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.vertex_count();
    let mut index = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        index[u * n + v] = i;
        index[v * n + u] = i;
    }
    let mut uf = UnionFind::new(edges.len());
    for gen in gens {
        for (i, &(u, v)) in edges.iter().enumerate() {
            uf.union(i, index[gen[u] * n + gen[v]]);
        }
    }
    uf.blocks()
        .into_iter()
        .map(|b| b.into_iter().map(|i| edges[i]).collect())
        .collect()
}

pub fn automorphisms(g: &Graph) -> Result<AutomorphismInfo> {
    check_capacity(g)?;
    let r = search(g);
    let vertex_orbits = vertex_orbits(g.vertex_count(), &r.generators);
    let edge_orbits = pair_orbits(g, &r.generators);
    Ok(AutomorphismInfo {
        generators: r.generators,
        vertex_orbits,
        edge_orbits,
        group_order: r.group_order,
    })
}

/// Single vertex orbit. Non-regular graphs are rejected without a search.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    check_capacity(g)?;
    if !g.is_regular() {
        return Ok(false);
    }
    if g.vertex_count() <= 1 {
        return Ok(true);
    }
    let r = search(g);
    Ok(vertex_orbits(g.vertex_count(), &r.generators).len() == 1)
}

/// Single edge orbit. Requires at least one edge.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::argument("edge transitivity needs at least one edge"));
    }
    Ok(automorphisms(g)?.edge_orbits.len() == 1)
}

/// Isomorphism classes of the one-vertex-deleted subgraphs of `h`.
pub fn deck(h: &Graph) -> Result<BTreeSet<Certificate>> {
    let k = h.vertex_count();
    if k < 2 {
        return Err(Error::argument("the deck needs at least two vertices"));
    }
    check_capacity(h)?;
    (0..k)
        .map(|v| {
            let rest = VertexSet::new((0..k).filter(|&u| u != v), k)?;
            certificate(&h.induced_subgraph(&rest)?)
        })
        .collect()
}

pub fn is_in_deck(f: &Graph, h: &Graph) -> Result<bool> {
    if f.vertex_count() + 1 != h.vertex_count() {
        return Err(Error::argument(format!(
            "deck members of a {}-vertex graph have {} vertices, got {}",
            h.vertex_count(),
            h.vertex_count().saturating_sub(1),
            f.vertex_count()
        )));
    }
    Ok(deck(h)?.contains(&certificate(f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;

    fn g(edges: &[(usize, usize)], n: usize) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn certificate_examples() {
        let k22 = g(&[(0, 2), (0, 3), (1, 2), (1, 3)], 4);
        assert_eq!(certificate(&cycle(4)).unwrap(), certificate(&k22).unwrap());
        assert_eq!(
            certificate(&path(4)).unwrap(),
            certificate(&path(4).complement()).unwrap()
        );
        let k3k1 = Graph::complete(3).disjoint_union(&Graph::empty(1));
        let lambda = path(3).disjoint_union(&Graph::empty(1));
        assert_ne!(certificate(&k3k1).unwrap(), certificate(&lambda).unwrap());
        assert!(are_isomorphic(&cycle(5), &cycle(5).complement()).unwrap());
        assert!(!are_isomorphic(&k3k1, &lambda).unwrap());
    }

    #[test]
    fn certificate_round_trips_to_isomorphic_graph() {
        let p = path(5);
        let c = certificate(&p).unwrap();
        assert!(are_isomorphic(&c.to_graph(), &p).unwrap());
        assert_eq!(c.vertex_count(), 5);
    }

    #[test]
    fn find_isomorphism_maps_edges() {
        let a = path(5);
        let b = a.permuted(&[3, 1, 4, 0, 2]).unwrap();
        let map = find_isomorphism(&a, &b).unwrap().unwrap();
        assert_eq!(a.permuted(&map).unwrap(), b);
        assert!(find_isomorphism(&a, &cycle(5)).unwrap().is_none());
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(
            automorphisms(&cycle(5)).unwrap().group_order,
            BigUint::from(10u32)
        );
        assert_eq!(
            automorphisms(&path(4)).unwrap().group_order,
            BigUint::from(2u32)
        );
        assert_eq!(
            automorphisms(&Graph::empty(6)).unwrap().group_order,
            BigUint::from(720u32)
        );
        let petersen = graph6::parse("IheA@GUAo").unwrap();
        let info = automorphisms(&petersen).unwrap();
        assert_eq!(info.group_order, BigUint::from(120u32));
        assert_eq!(info.vertex_orbits.len(), 1);
        assert_eq!(info.edge_orbits.len(), 1);
        assert_eq!(info.non_edge_orbits(&petersen).len(), 1);
    }

    #[test]
    fn empty_graph_on_fifty_vertices() {
        let info = automorphisms(&Graph::empty(50)).unwrap();
        let fact: BigUint = (1u32..=50).map(BigUint::from).product();
        assert_eq!(info.group_order, fact);
    }

    #[test]
    fn transitivity_examples() {
        let petersen = graph6::parse("IheA@GUAo").unwrap();
        assert!(is_vertex_transitive(&petersen).unwrap());
        assert!(!is_vertex_transitive(&path(4)).unwrap());
        let m3 = g(&[(0, 1), (2, 3), (4, 5)], 6);
        assert!(is_vertex_transitive(&m3).unwrap());
        assert!(is_edge_transitive(&petersen.complement()).unwrap());
        assert!(!is_edge_transitive(&path(4)).unwrap());
        assert!(is_edge_transitive(&Graph::empty(3)).is_err());
        for n in 3..9 {
            let star = Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap();
            assert!(is_edge_transitive(&star).unwrap());
        }
        // C3 + C4 is 2-regular with two vertex orbits
        let mixed = cycle(3).disjoint_union(&cycle(4));
        assert!(!is_vertex_transitive(&mixed).unwrap());
    }

    #[test]
    fn deck_examples() {
        let d = deck(&path(3)).unwrap();
        let expected: BTreeSet<_> = [Graph::complete(2), Graph::empty(2)]
            .iter()
            .map(|x| certificate(x).unwrap())
            .collect();
        assert_eq!(d, expected);
        assert_eq!(deck(&Graph::complete(4)).unwrap().len(), 1);
        let lambda = path(3).disjoint_union(&Graph::empty(1));
        let expected: BTreeSet<_> = [
            path(3),
            Graph::complete(2).disjoint_union(&Graph::empty(1)),
            Graph::empty(3),
        ]
        .iter()
        .map(|x| certificate(x).unwrap())
        .collect();
        assert_eq!(deck(&lambda).unwrap(), expected);
        assert!(deck(&Graph::empty(1)).is_err());
    }

    #[test]
    fn is_in_deck_examples() {
        assert!(is_in_deck(&Graph::complete(2), &path(3)).unwrap());
        assert!(is_in_deck(&Graph::complete(3), &Graph::complete(4)).unwrap());
        assert!(is_in_deck(&Graph::complete(3), &path(3)).is_err());
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            certificate(&Graph::empty(65)),
            Err(Error::Capacity(_))
        ));
    }
}
