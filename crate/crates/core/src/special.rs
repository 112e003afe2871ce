//! Named graphs and families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::automorphisms;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Empty,
    Star,
    Path,
    Cycle,
    Matching,
    Lambda,
    Petersen,
    HoffmanSingleton,
    GFamily,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Complete,
        Family::Empty,
        Family::Star,
        Family::Path,
        Family::Cycle,
        Family::Matching,
        Family::Lambda,
        Family::Petersen,
        Family::HoffmanSingleton,
        Family::GFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Matching => "matching",
            Family::Lambda => "lambda",
            Family::Petersen => "petersen",
            Family::HoffmanSingleton => "hoffman-singleton",
            Family::GFamily => "g-family",
        }
    }

    /// Smallest admissible parameter, or `None` for parameterless graphs.
    pub fn min_param(self) -> Option<usize> {
        match self {
            Family::Complete | Family::Empty => Some(0),
            Family::Star => Some(3),
            Family::Path => Some(1),
            Family::Cycle => Some(3),
            Family::Matching | Family::GFamily => Some(1),
            Family::Lambda | Family::Petersen | Family::HoffmanSingleton => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::argument(format!("unknown family '{s}'")))
    }
}

/// A family together with its size parameter (vertex count for complete,
/// empty, star, path and cycle; edge count for matchings; `m` for the
/// seven-fold family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub param: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, param: Option<usize>) -> Result<Self> {
        match (family.min_param(), param) {
            (None, None) => {}
            (None, Some(_)) => {
                return Err(Error::argument(format!("{family} takes no parameter")));
            }
            (Some(_), None) => {
                return Err(Error::argument(format!("{family} needs a parameter")));
            }
            (Some(min), Some(p)) if p < min => {
                return Err(Error::argument(format!(
                    "{family} needs a parameter of at least {min}"
                )));
            }
            _ => {}
        }
        Ok(FamilySpec { family, param })
    }
}

pub fn make_named(spec: FamilySpec) -> Result<Graph> {
    let spec = FamilySpec::new(spec.family, spec.param)?;
    let p = spec.param.unwrap_or(0);
    Ok(match spec.family {
        Family::Complete => Graph::complete(p),
        Family::Empty => Graph::empty(p),
        Family::Star => star(p),
        Family::Path => path(p),
        Family::Cycle => cycle(p),
        Family::Matching => matching(p),
        Family::Lambda => lambda(),
        Family::Petersen => petersen(),
        Family::HoffmanSingleton => hoffman_singleton(),
        Family::GFamily => g_family(p)?,
    })
}

/// `K_{1,n-1}`, centre 0.
pub fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i))).expect("in range")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("in range")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("in range")
}

/// `l` disjoint edges `{2i, 2i+1}`.
pub fn matching(l: usize) -> Graph {
    Graph::from_edges(2 * l, (0..l).map(|i| (2 * i, 2 * i + 1))).expect("in range")
}

/// `P_3 + K_1`.
pub fn lambda() -> Graph {
    path(3).disjoint_union(&Graph::empty(1))
}

/// Kneser graph on the 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(10, edges).expect("in range");
    assert_moore(&g, 3);
    g
}

/// Pentagons `P_h` (vertices `(h, j)`, `j ~ j±1`) and pentagrams `Q_i`
/// (vertices `(i, j)`, `j ~ j±2`), with `(h, j)` in `P_h` joined to
/// `(i, h*i + j)` in `Q_i`, all arithmetic mod 5.
pub fn hoffman_singleton() -> Graph {
    let pentagon = |h: usize, j: usize| 5 * h + j % 5;
    let pentagram = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((pentagon(h, j), pentagon(h, j + 1)));
            edges.push((pentagram(h, j), pentagram(h, j + 2)));
            for i in 0..5 {
                edges.push((pentagon(h, j), pentagram(i, h * i + j)));
            }
        }
    }
    let g = Graph::from_edges(50, edges).expect("in range");
    assert_moore(&g, 7);
    g
}

/// Regular of the given degree, girth 5, diameter 2: by the Moore-graph
/// uniqueness theorem these pin the graph down for degrees 2, 3 and 7.
fn assert_moore(g: &Graph, degree: usize) {
    let n = g.vertex_count();
    assert_eq!(n, degree * degree + 1);
    assert!(g.is_regular() && g.max_degree() == degree);
    assert_eq!(g.girth(), Some(5));
    assert_eq!(g.diameter(), Some(2));
}

/// `G(m)`: vertices `v(i, j)` for `i` in `Z_7` and `1 <= j <= m`, with
/// `v(i,j) ~ v(i+1,k)` for `j != k` and `v(i,j) ~ v(i+3,j)`.
pub fn g_family(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::argument("the seven-fold family starts at m = 1"));
    }
    let v = |i: usize, j: usize| (i % 7) * m + j;
    let mut edges = Vec::new();
    for i in 0..7 {
        for j in 0..m {
            for k in 0..m {
                if j != k {
                    edges.push((v(i, j), v(i + 1, k)));
                }
            }
            edges.push((v(i, j), v(i + 3, j)));
        }
    }
    Graph::from_edges(7 * m, edges)
}

/// Deletes one non-adjacent pair from `g`. The result is independent of the
/// pair up to isomorphism exactly when the automorphism group acts
/// transitively on non-adjacent pairs, i.e. when the complement is
/// edge-transitive; that premise is checked rather than assumed.
pub fn prime_of(g: &Graph) -> Result<Graph> {
    let n = g.vertex_count();
    let pair = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v))
        .ok_or_else(|| Error::argument("graph has no non-adjacent pair of vertices"))?;
    let info = automorphisms(g)?;
    let orbits = info.non_edge_orbits(g);
    if orbits.len() != 1 {
        return Err(Error::IllDefined(format!(
            "complement is not edge-transitive ({} orbits on non-adjacent pairs); \
             deleting different pairs gives different graphs",
            orbits.len()
        )));
    }
    let keep = VertexSet::new((0..n).filter(|&x| x != pair.0 && x != pair.1), n)?;
    g.induced_subgraph(&keep)
}

/// `M'_l = (l-2) K_2 + 2 K_1`.
pub fn matching_prime(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::argument(
            "a matching needs two edges to lose two non-adjacent vertices",
        ));
    }
    prime_of(&matching(l))
}

pub fn petersen_prime() -> Graph {
    prime_of(&petersen()).expect("Petersen complement is edge-transitive")
}

pub fn hoffman_singleton_prime() -> Graph {
    prime_of(&hoffman_singleton()).expect("Hoffman-Singleton complement is edge-transitive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{are_isomorphic, certificate, is_vertex_transitive};
    use num_bigint::BigUint;

    #[test]
    fn named_examples() {
        let s4 = make_named(FamilySpec::new(Family::Star, Some(4)).unwrap()).unwrap();
        assert_eq!(
            (s4.vertex_count(), s4.edge_count(), s4.max_degree()),
            (4, 3, 3)
        );
        let l = make_named(FamilySpec::new(Family::Lambda, None).unwrap()).unwrap();
        assert_eq!(l.degree_sequence(), vec![0, 1, 1, 2]);
        let m3 = make_named(FamilySpec::new(Family::Matching, Some(3)).unwrap()).unwrap();
        assert_eq!((m3.vertex_count(), m3.edge_count()), (6, 3));
    }

    #[test]
    fn invalid_parameters() {
        assert!(FamilySpec::new(Family::Star, Some(2)).is_err());
        assert!(FamilySpec::new(Family::Cycle, Some(2)).is_err());
        assert!(FamilySpec::new(Family::Matching, Some(0)).is_err());
        assert!(FamilySpec::new(Family::GFamily, Some(0)).is_err());
        assert!(FamilySpec::new(Family::Petersen, Some(1)).is_err());
        assert!(FamilySpec::new(Family::Path, None).is_err());
        assert!(g_family(0).is_err());
        assert!("pentagon".parse::<Family>().is_err());
        assert_eq!(
            "hoffman_singleton".parse::<Family>().unwrap(),
            Family::HoffmanSingleton
        );
    }

    #[test]
    fn petersen_invariants() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert_eq!(p.triangle_count(), 0);
        assert_eq!(p.four_cycle_count(), 0);
        assert!(is_vertex_transitive(&p).unwrap());
    }

    #[test]
    fn hoffman_singleton_invariants() {
        let hs = hoffman_singleton();
        assert_eq!((hs.vertex_count(), hs.edge_count()), (50, 175));
        assert_eq!(hs.complement().edge_count(), 1050);
        assert_eq!(hs.triangle_count(), 0);
        assert_eq!(hs.four_cycle_count(), 0);
        for u in 0..50 {
            for v in u + 1..50 {
                if !hs.has_edge(u, v) {
                    let common = hs.neighbors(u).filter(|&w| hs.has_edge(v, w)).count();
                    assert_eq!(common, 1, "pair ({u}, {v})");
                }
            }
        }
        let info = automorphisms(&hs).unwrap();
        assert_eq!(info.group_order, BigUint::from(50u32 * 5040));
        assert_eq!(info.vertex_orbits.len(), 1);
    }

    #[test]
    fn prime_examples() {
        let m3p = prime_of(&matching(3)).unwrap();
        let expected = Graph::complete(2).disjoint_union(&Graph::empty(2));
        assert!(are_isomorphic(&m3p, &expected).unwrap());
        let pp = petersen_prime();
        assert_eq!(pp.degree_sequence(), vec![1, 2, 2, 2, 2, 3, 3, 3]);
        assert_eq!(pp.edge_count(), 9);
        assert!(pp.has_consecutive_degrees());
        assert!(matches!(
            prime_of(&Graph::complete(4)),
            Err(Error::Argument(_))
        ));
        // P4: non-adjacent pairs {0,2},{1,3} vs {0,3} are not equivalent
        assert!(matches!(prime_of(&path(4)), Err(Error::IllDefined(_))));
    }

    #[test]
    fn prime_is_independent_of_pair() {
        let check = |g: &Graph| {
            let n = g.vertex_count();
            let mut certs = std::collections::BTreeSet::new();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let keep = VertexSet::new((0..n).filter(|&x| x != u && x != v), n).unwrap();
                        certs.insert(certificate(&g.induced_subgraph(&keep).unwrap()).unwrap());
                    }
                }
            }
            assert_eq!(certs.len(), 1);
            assert!(certs.contains(&certificate(&prime_of(g).unwrap()).unwrap()));
        };
        for l in 2..=5 {
            check(&matching(l));
        }
        check(&petersen());
    }

    #[test]
    fn g_family_examples() {
        assert!(are_isomorphic(&g_family(1).unwrap(), &cycle(7)).unwrap());
        let g2 = g_family(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (14, 28));
        assert!(g2.is_regular() && g2.max_degree() == 4);
        let g3 = g_family(3).unwrap();
        assert_eq!((g3.vertex_count(), g3.edge_count()), (21, 63));
        for m in 1..=4 {
            let g = g_family(m).unwrap();
            assert!(g.is_regular());
            assert_eq!(g.max_degree(), 2 * m);
            assert_eq!(g.edge_count(), 7 * m * m);
        }
    }
}
