//! The classification of arrowing: which patterns are arrowed by arbitrarily
//! large graphs, the exceptional patterns arrowed from two orders up, the
//! single-deletion patterns, and the resulting description of `Arrow(H)`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::{are_isomorphic, certificate, is_vertex_transitive, Certificate};
use crate::special::{
    g_family, hoffman_singleton, hoffman_singleton_prime, matching, petersen, petersen_prime,
};

/// Largest host order accepted by the exhaustive tripartition test.
pub const P3_FAMILY_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InfiniteCase {
    Complete,
    Empty,
    Star,
    CoStar,
    Lambda,
    CoLambda,
}

fn is_lambda(h: &Graph) -> bool {
    h.vertex_count() == 4 && h.edge_count() == 2 && h.degree_sequence() == [0, 1, 1, 2]
}

/// Which infinite case `h` falls under, if any: `K_k`, `E_k` (k >= 2),
/// a star or its complement (k >= 3), `P3 + K1` or its complement.
pub fn in_f_infinity(h: &Graph) -> Result<Option<InfiniteCase>> {
    if h.vertex_count() < 2 {
        return Err(Error::argument(
            "defined for patterns with at least two vertices",
        ));
    }
    let co = h.complement();
    Ok(if h.is_complete() {
        Some(InfiniteCase::Complete)
    } else if h.is_edgeless() {
        Some(InfiniteCase::Empty)
    } else if h.is_star() {
        Some(InfiniteCase::Star)
    } else if co.is_star() {
        Some(InfiniteCase::CoStar)
    } else if is_lambda(h) {
        Some(InfiniteCase::Lambda)
    } else if is_lambda(&co) {
        Some(InfiniteCase::CoLambda)
    } else {
        None
    })
}

/// How a candidate parent was rebuilt from the deleted-vertex pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    VertexTransitive,
    PlusIsolated,
    PlusUniversal,
}

/// A graph `T` in the transitive class together with the deleted vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPrimeCandidate {
    pub parent: Graph,
    pub deleted: usize,
    pub construction: Construction,
}

/// Adds a vertex `w` to `h` adjacent to exactly the vertices in `attach`.
fn with_new_vertex(h: &Graph, attach: &[usize]) -> Graph {
    let k = h.vertex_count();
    let edges = h.edges().chain(attach.iter().map(|&v| (v, k)));
    Graph::from_edges(k + 1, edges).expect("edges stay in range")
}

/// Rebuilds a vertex-transitive `T0` with `T0 - w = h0`, if the degrees allow
/// one: a `d`-regular `T0` loses one degree exactly at the `d` neighbours of `w`.
fn rebuild_transitive(h0: &Graph) -> Result<Option<Graph>> {
    let degrees = h0.degrees();
    let (lo, hi) = (h0.min_degree(), h0.max_degree());
    if h0.vertex_count() == 0 || hi != lo + 1 {
        // regular h0 would make w isolated or universal
        return Ok(None);
    }
    let attach: Vec<usize> = (0..degrees.len()).filter(|&v| degrees[v] == lo).collect();
    if attach.len() != hi {
        return Ok(None);
    }
    let t0 = with_new_vertex(h0, &attach);
    Ok(is_vertex_transitive(&t0)?.then_some(t0))
}

fn excluded(t: &Graph) -> bool {
    let co = t.complement();
    t.is_complete() || t.is_edgeless() || t.is_star() || co.is_star()
}

/// Reconstructions of `h` as `T - w` with `T` in the transitive class, on
/// `h` itself (cases a and b); the caller handles complements.
fn reconstruct(h: &Graph) -> Result<Vec<(Graph, usize)>> {
    let k = h.vertex_count();
    let mut out = Vec::new();
    if let Some(t) = rebuild_transitive(h)? {
        out.push((t, k));
    }
    if let Some(z) = (0..k).find(|&v| h.degree(v) == 0) {
        // T = T0 + K1 with w in T0; strip one isolated vertex of h
        let keep: Vec<usize> = (0..k).filter(|&v| v != z).collect();
        let h0 = h.induced_subgraph(&VertexSet::new(keep, k)?)?;
        if let Some(t0) = rebuild_transitive(&h0)? {
            // T0 on vertices 0..k with w = k - 1; add the isolated vertex last
            let t = t0.disjoint_union(&Graph::empty(1));
            out.push((t, k - 1));
        }
    }
    Ok(out)
}

/// Every `T` in the transitive class with a non-isolated, non-universal
/// vertex `w` such that `T - w` is isomorphic to `h`. The list is expected to
/// have at most one entry; more would be an anomaly worth reporting.
pub fn recognize_t_prime(h: &Graph) -> Result<Vec<TPrimeCandidate>> {
    let k = h.vertex_count();
    if k < 3 {
        return Err(Error::argument(
            "defined for patterns with at least three vertices",
        ));
    }
    let mut raw = reconstruct(h)?;
    raw.extend(
        reconstruct(&h.complement())?
            .into_iter()
            .map(|(t, w)| (t.complement(), w)),
    );

    let mut seen = Vec::new();
    let mut out = Vec::new();
    for (t, w) in raw {
        let dw = t.degree(w);
        if dw == 0 || dw == k || excluded(&t) {
            continue;
        }
        let keep: Vec<usize> = (0..=k).filter(|&v| v != w).collect();
        let minus = t.induced_subgraph(&VertexSet::new(keep, k + 1)?)?;
        if !are_isomorphic(&minus, h)? {
            continue;
        }
        let cert = certificate(&t)?;
        if seen.contains(&cert) {
            continue;
        }
        seen.push(cert);
        let construction = if is_vertex_transitive(&t)? {
            Construction::VertexTransitive
        } else if t.min_degree() == 0 {
            Construction::PlusIsolated
        } else {
            Construction::PlusUniversal
        };
        out.push(TPrimeCandidate {
            parent: t,
            deleted: w,
            construction,
        });
    }
    Ok(out)
}

/// A tripartition whose cross-part components each meet at most two parts
/// or are complete tripartite; its existence excludes `g` from the family.
pub fn p3_witness(g: &Graph) -> Result<Option<[Vec<usize>; 3]>> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(Error::argument(
            "the family is defined on graphs with at least four vertices",
        ));
    }
    if n > P3_FAMILY_CAP {
        return Err(Error::capacity(format!(
            "tripartition search is capped at {P3_FAMILY_CAP} vertices; use the oracle"
        )));
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
    let mut parts = crate::arrow::Partitions::new(n, 3)?;
    while let Some(rgs) = parts.next_rgs() {
        let mut part_mask = [0u64; 3];
        for (v, &p) in rgs.iter().enumerate() {
            part_mask[p] |= 1 << v;
        }
        let cross: Vec<u64> = (0..n).map(|v| rows[v] & !part_mask[rgs[v]]).collect();
        if components_ok(&cross, &part_mask, rgs) {
            let mut out: [Vec<usize>; 3] = Default::default();
            for (v, &p) in rgs.iter().enumerate() {
                out[p].push(v);
            }
            return Ok(Some(out));
        }
    }
    Ok(None)
}

fn components_ok(cross: &[u64], part_mask: &[u64; 3], part: &[usize]) -> bool {
    let n = cross.len();
    let mut unseen: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = cross[v] & !comp;
            comp |= new;
            frontier |= new;
        }
        unseen &= !comp;
        if part_mask.iter().all(|&m| m & comp != 0) {
            // complete tripartite: each vertex sees everything of the component outside its part
            let mut rest = comp;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if cross[v] != comp & !part_mask[part[v]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership in the family arrowing `P3`: graphs on at least four vertices
/// admitting no tripartition as in [`p3_witness`].
pub fn in_p3_family(g: &Graph) -> Result<bool> {
    Ok(p3_witness(g)?.is_none())
}

/// [`in_p3_family`] with a caller-chosen cap on the host order.
pub fn in_p3_family_capped(g: &Graph, cap: usize) -> Result<bool> {
    if g.vertex_count() > cap {
        return Err(Error::capacity(format!(
            "tripartition search is capped at {cap} vertices; use the oracle"
        )));
    }
    in_p3_family(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FKind {
    Infinite,
    KPlus2,
    KPlus1,
    K,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Complete,
    Star,
    Lambda,
    PetersenPrime,
    HoffmanSingletonPrime,
    /// `M'_l` with the matching size `l`.
    MatchingPrime(usize),
    TPrime,
    General,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Complete => f.write_str("complete"),
            CaseTag::Star => f.write_str("star"),
            CaseTag::Lambda => f.write_str("P3+K1"),
            CaseTag::PetersenPrime => f.write_str("Petersen minus a non-adjacent pair"),
            CaseTag::HoffmanSingletonPrime => {
                f.write_str("Hoffman-Singleton minus a non-adjacent pair")
            }
            CaseTag::MatchingPrime(l) => write!(f, "M_{l} minus a non-adjacent pair"),
            CaseTag::TPrime => f.write_str("transitive graph minus a vertex"),
            CaseTag::General => f.write_str("general"),
        }
    }
}

/// `f(H)`: the largest order of a graph arrowing `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FValue {
    pub kind: FKind,
    pub tag: CaseTag,
    /// The case matched the complement of `H` rather than `H`.
    pub complemented: bool,
    pub k: usize,
}

impl FValue {
    /// `None` means unbounded.
    pub fn value(&self) -> Option<usize> {
        match self.kind {
            FKind::Infinite => None,
            FKind::KPlus2 => Some(self.k + 2),
            FKind::KPlus1 => Some(self.k + 1),
            FKind::K => Some(self.k),
        }
    }
}

impl fmt::Display for FValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            None => write!(f, "infinite")?,
            Some(v) => write!(f, "{v}")?,
        }
        write!(
            f,
            " ({}{})",
            if self.complemented {
                "complement of "
            } else {
                ""
            },
            self.tag
        )
    }
}

fn petersen_prime_cert() -> &'static Certificate {
    static C: OnceLock<Certificate> = OnceLock::new();
    C.get_or_init(|| certificate(&petersen_prime()).expect("ten vertices"))
}

fn hoffman_singleton_prime_cert() -> &'static Certificate {
    static C: OnceLock<Certificate> = OnceLock::new();
    C.get_or_init(|| certificate(&hoffman_singleton_prime()).expect("48 vertices"))
}

/// Detects `P'`, `Theta'` and `M'_l` (l >= 3) on `h` itself.
fn plus_two_case(h: &Graph) -> Result<Option<CaseTag>> {
    let k = h.vertex_count();
    if k >= 4 && k.is_multiple_of(2) {
        let l = (k + 2) / 2;
        let mut expected = vec![1; k];
        expected[0] = 0;
        expected[1] = 0;
        if h.edge_count() == l - 2 && h.degree_sequence() == expected {
            return Ok(Some(CaseTag::MatchingPrime(l)));
        }
    }
    if k == 8 && h.edge_count() == 9 && &certificate(h)? == petersen_prime_cert() {
        return Ok(Some(CaseTag::PetersenPrime));
    }
    if k == 48 && h.edge_count() == 161 && &certificate(h)? == hoffman_singleton_prime_cert() {
        return Ok(Some(CaseTag::HoffmanSingletonPrime));
    }
    Ok(None)
}

/// The exceptional case for `h` or its complement, with the complement flag.
fn plus_two(h: &Graph) -> Result<Option<(CaseTag, bool)>> {
    if let Some(tag) = plus_two_case(h)? {
        return Ok(Some((tag, false)));
    }
    Ok(plus_two_case(&h.complement())?.map(|tag| (tag, true)))
}

pub fn f_value(h: &Graph) -> Result<FValue> {
    let k = h.vertex_count();
    let make = |kind, tag, complemented| FValue {
        kind,
        tag,
        complemented,
        k,
    };
    if let Some(case) = in_f_infinity(h)? {
        let (tag, co) = match case {
            InfiniteCase::Complete => (CaseTag::Complete, false),
            InfiniteCase::Empty => (CaseTag::Complete, true),
            InfiniteCase::Star => (CaseTag::Star, false),
            InfiniteCase::CoStar => (CaseTag::Star, true),
            InfiniteCase::Lambda => (CaseTag::Lambda, false),
            InfiniteCase::CoLambda => (CaseTag::Lambda, true),
        };
        return Ok(make(FKind::Infinite, tag, co));
    }
    if let Some((tag, co)) = plus_two(h)? {
        return Ok(make(FKind::KPlus2, tag, co));
    }
    if !recognize_t_prime(h)?.is_empty() {
        return Ok(make(FKind::KPlus1, CaseTag::TPrime, false));
    }
    Ok(make(FKind::K, CaseTag::General, false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArrowSetKind {
    EmptySet,
    FiniteList,
    StarFamily,
    CompleteFamily,
    ConnectedFamily,
    P3Family,
    LambdaPartial,
}

/// `Arrow(H)` restricted to one order `n > |V(H)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSetDescription {
    pub kind: ArrowSetKind,
    /// Family predicates apply to the complement of the host.
    pub complemented: bool,
    pub order: usize,
    /// The members, for finite lists.
    pub graphs: Vec<Certificate>,
    /// Members known at this order, for the partial case.
    pub known_positives: Vec<Certificate>,
    pub note: String,
}

impl ArrowSetDescription {
    fn new(kind: ArrowSetKind, order: usize, note: impl Into<String>) -> Self {
        ArrowSetDescription {
            kind,
            complemented: false,
            order,
            graphs: Vec::new(),
            known_positives: Vec::new(),
            note: note.into(),
        }
    }

    fn finite(order: usize, graphs: Vec<Graph>, note: impl Into<String>) -> Result<Self> {
        if graphs.is_empty() {
            return Ok(ArrowSetDescription::new(
                ArrowSetKind::EmptySet,
                order,
                note,
            ));
        }
        let mut d = ArrowSetDescription::new(ArrowSetKind::FiniteList, order, note);
        d.graphs = graphs.iter().map(certificate).collect::<Result<_>>()?;
        d.graphs.sort();
        d.graphs.dedup();
        Ok(d)
    }

    /// Whether `g` belongs; `None` when the classification does not say.
    pub fn contains(&self, g: &Graph) -> Result<Option<bool>> {
        if g.vertex_count() != self.order {
            return Err(Error::argument(format!(
                "description is for order {}, graph has {} vertices",
                self.order,
                g.vertex_count()
            )));
        }
        let host = if self.complemented {
            g.complement()
        } else {
            g.clone()
        };
        Ok(match self.kind {
            ArrowSetKind::EmptySet => Some(false),
            ArrowSetKind::FiniteList => Some(self.graphs.contains(&certificate(g)?)),
            ArrowSetKind::CompleteFamily => Some(host.is_complete()),
            ArrowSetKind::StarFamily => Some(host.is_star()),
            ArrowSetKind::ConnectedFamily => Some(host.is_connected()),
            ArrowSetKind::P3Family => Some(in_p3_family(&host)?),
            ArrowSetKind::LambdaPartial => {
                if self.known_positives.contains(&certificate(g)?) {
                    Some(true)
                } else if self.order <= 6 {
                    Some(false)
                } else {
                    None
                }
            }
        })
    }
}

impl fmt::Display for ArrowSetDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} at order {}", self.kind, self.order)?;
        if self.complemented {
            f.write_str(" (complemented)")?;
        }
        for c in self.graphs.iter().chain(&self.known_positives) {
            write!(f, " {c}")?;
        }
        write!(f, ": {}", self.note)
    }
}

/// `Arrow(H)` at order `n`, for `n > |V(H)| >= 2`.
pub fn arrow_set(h: &Graph, n: usize) -> Result<ArrowSetDescription> {
    let k = h.vertex_count();
    if k < 2 {
        return Err(Error::argument(
            "every graph arrows a single vertex; no set to describe",
        ));
    }
    if n <= k {
        return Err(Error::argument(format!(
            "Arrow(H) holds graphs of order greater than {k}, got {n}"
        )));
    }
    use ArrowSetKind::*;
    let co = h.complement();
    let family = |kind, complemented, note: &str| {
        let mut d = ArrowSetDescription::new(kind, n, note);
        d.complemented = complemented;
        d
    };
    for (pattern, complemented) in [(h, false), (&co, true)] {
        if pattern.is_complete() {
            return Ok(if k == 2 {
                family(ConnectedFamily, complemented, "connected graphs")
            } else {
                family(CompleteFamily, complemented, "complete graphs")
            });
        }
        if pattern.is_star() {
            return Ok(if k == 3 {
                family(
                    P3Family,
                    complemented,
                    "graphs with no admissible tripartition",
                )
            } else {
                family(StarFamily, complemented, "stars")
            });
        }
    }
    let flip = |g: Graph, complemented: bool| if complemented { g.complement() } else { g };
    for (pattern, complemented) in [(h, false), (&co, true)] {
        if is_lambda(pattern) {
            let mut d = family(LambdaPartial, false, "partially known");
            let c4k1 = crate::special::cycle(4).disjoint_union(&Graph::empty(1));
            let mut positives = Vec::new();
            if n == 5 {
                positives.push(flip(c4k1, complemented));
            }
            if n.is_multiple_of(7) {
                positives.push(flip(g_family(n / 7)?, complemented));
            }
            d.known_positives = positives.iter().map(certificate).collect::<Result<_>>()?;
            d.note = if n <= 6 {
                "complete at this order".into()
            } else if n.is_multiple_of(7) {
                "only the seven-fold family member is known at this order".into()
            } else {
                "open at this order".into()
            };
            return Ok(d);
        }
    }
    if let Some((tag, complemented)) = plus_two(h)? {
        let parents = match (tag, n - k) {
            (CaseTag::PetersenPrime, 2) => vec![petersen()],
            (CaseTag::HoffmanSingletonPrime, 2) => vec![hoffman_singleton()],
            (CaseTag::MatchingPrime(l), 2) => vec![matching(l)],
            (CaseTag::MatchingPrime(l), 1) => {
                vec![matching(l - 1).disjoint_union(&Graph::empty(1))]
            }
            _ => vec![],
        };
        let graphs = parents.into_iter().map(|g| flip(g, complemented)).collect();
        return ArrowSetDescription::finite(n, graphs, format!("exceptional case: {tag}"));
    }
    if n == k + 1 {
        let parents: Vec<Graph> = recognize_t_prime(h)?
            .into_iter()
            .map(|c| c.parent)
            .collect();
        if !parents.is_empty() {
            return ArrowSetDescription::finite(n, parents, "transitive parent");
        }
    }
    Ok(ArrowSetDescription::new(
        EmptySet,
        n,
        "no graph of this order",
    ))
}
