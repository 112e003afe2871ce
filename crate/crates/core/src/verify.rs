//! Cross-checks of the classification against the oracle on small graphs.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::arrow::{
    arrows, arrows_oracle, class_masks, orbit_reduced_partitions, stirling2, Answer, Budget,
    Coloring, CopyIndex, Partitions,
};
use crate::classify::{in_f_infinity, recognize_t_prime, InfiniteCase};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::iso::{automorphisms, certificate, enumerate_graphs, is_edge_transitive, Certificate};
use crate::special::{hoffman_singleton, hoffman_singleton_prime, petersen, petersen_prime};

/// One disagreement, in graph6 so it can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub g: String,
    pub h: Option<String>,
    pub oracle: String,
    pub classified: String,
    pub detail: Option<String>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G={}", self.g)?;
        if let Some(h) = &self.h {
            write!(f, " H={h}")?;
        }
        write!(f, " oracle={} classified={}", self.oracle, self.classified)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub scope: String,
    pub checked: u128,
    pub discrepancies: Vec<Discrepancy>,
    pub notes: Vec<String>,
    /// Pairs `(G, H)` the oracle found arrowing, where the suite records them.
    pub positives: Vec<(Graph, Graph)>,
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(suite: &str, scope: String) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            scope,
            checked: 0,
            discrepancies: Vec::new(),
            notes: Vec::new(),
            positives: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// `RESULT<TAB>suite<TAB>checked<TAB>discrepancies<TAB>seconds`
    pub fn result_line(&self) -> String {
        format!(
            "RESULT\t{}\t{}\t{}\t{:.3}",
            self.suite,
            self.checked,
            self.discrepancies.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {} ({})", self.suite, self.scope)?;
        writeln!(f, "checked: {}", self.checked)?;
        for note in &self.notes {
            writeln!(f, "  {note}")?;
        }
        writeln!(f, "discrepancies: {}", self.discrepancies.len())?;
        for d in &self.discrepancies {
            writeln!(f, "  {d}")?;
        }
        writeln!(f, "status: {}", if self.passed() { "pass" } else { "FAIL" })?;
        write!(f, "{}", self.result_line())
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::argument(format!("cannot start worker threads: {e}")))
}

fn sequential() -> Budget {
    Budget::unlimited().with_jobs(1)
}

fn is_lambda_like(h: &Graph) -> Result<bool> {
    Ok(h.vertex_count() >= 2
        && matches!(
            in_f_infinity(h)?,
            Some(InfiniteCase::Lambda | InfiniteCase::CoLambda)
        ))
}

struct PairOutcome {
    oracle: Answer,
    classified: Answer,
    counterexample: Option<Coloring>,
}

/// Classifier against oracle for every `H` with `2 <= k <= k_max` and every
/// `G` with `k < n <= n_max`. Pairs the classifier leaves open are settled by
/// the oracle and listed separately.
pub fn cmd_verify_main_theorem(
    k_max: usize,
    n_max: usize,
    jobs: usize,
) -> Result<VerificationReport> {
    if k_max > 5 || n_max > 7 {
        return Err(Error::capacity(
            "main theorem suite is capped at k <= 5 and n <= 7",
        ));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "main-theorem",
        format!("2 <= k <= {k_max}, k < n <= {n_max}"),
    );
    let by_order: Vec<Vec<Graph>> = (0..=n_max).map(enumerate_graphs).collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for k in 2..=k_max {
        for h in &by_order[k] {
            for hosts in &by_order[k + 1..=n_max] {
                for g in hosts {
                    pairs.push((g, h));
                }
            }
        }
    }
    let outcomes: Vec<Result<PairOutcome>> = pool(jobs)?.install(|| {
        pairs
            .par_iter()
            .map(|&(g, h)| {
                let o = arrows_oracle(g, h, &sequential())?;
                let c = arrows(g, h)?;
                Ok(PairOutcome {
                    oracle: o.answer,
                    classified: c.answer,
                    counterexample: o.counterexample,
                })
            })
            .collect()
    });

    let mut open_by_order: std::collections::BTreeMap<(String, usize), (usize, Vec<String>)> =
        Default::default();
    let mut lambda_arrowers: std::collections::BTreeMap<(String, usize), Vec<String>> =
        Default::default();
    for (&(g, h), outcome) in pairs.iter().zip(outcomes) {
        let outcome = outcome?;
        report.checked += 1;
        if outcome.oracle == Answer::Yes {
            report.positives.push((g.clone(), h.clone()));
        }
        let n = g.vertex_count();
        if is_lambda_like(h)? {
            let entry = lambda_arrowers.entry((h.to_graph6(), n)).or_default();
            if outcome.oracle == Answer::Yes {
                entry.push(g.to_graph6());
            }
        }
        if outcome.classified == Answer::Unknown {
            let entry = open_by_order.entry((h.to_graph6(), n)).or_default();
            entry.0 += 1;
            if outcome.oracle == Answer::Yes {
                entry.1.push(g.to_graph6());
            }
            continue;
        }
        if outcome.classified != outcome.oracle {
            report.discrepancies.push(Discrepancy {
                g: g.to_graph6(),
                h: Some(h.to_graph6()),
                oracle: outcome.oracle.to_string(),
                classified: outcome.classified.to_string(),
                detail: outcome.counterexample.map(|c| format!("colouring {c}")),
            });
        }
    }
    for ((h, n), arrowers) in &lambda_arrowers {
        report.notes.push(format!(
            "H={h} order {n}: {} arrowers by oracle [{}]",
            arrowers.len(),
            arrowers.join(" ")
        ));
    }
    for ((h, n), (count, yes)) in &open_by_order {
        report.notes.push(format!(
            "H={h} order {n}: {count} pairs open in the classification, settled by oracle, {} arrow",
            yes.len()
        ));
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Patterns where the single-deletion description applies: neither `H`
/// nor its complement complete or a star.
fn lemma_scope(h: &Graph) -> Result<bool> {
    Ok(!matches!(
        in_f_infinity(h)?,
        Some(
            InfiniteCase::Complete
                | InfiniteCase::Empty
                | InfiniteCase::Star
                | InfiniteCase::CoStar
        )
    ))
}

/// Arrowing pairs one order up, by oracle, against the recognizer's pairs.
pub fn cmd_verify_lemma_k1(k: usize, jobs: usize) -> Result<VerificationReport> {
    if !(2..=5).contains(&k) {
        return Err(Error::capacity(
            "one-order-up suite is defined for 2 <= k <= 5",
        ));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new(
        "lemma-k1",
        format!("k = {k}, H neither complete nor a star up to complement"),
    );
    let patterns: Vec<Graph> = enumerate_graphs(k)?
        .into_iter()
        .filter(|h| lemma_scope(h).unwrap_or(false))
        .collect();
    let hosts = enumerate_graphs(k + 1)?;
    let pairs: Vec<(&Graph, &Graph)> = patterns
        .iter()
        .flat_map(|h| hosts.iter().map(move |g| (g, h)))
        .collect();
    let answers: Vec<Result<Answer>> = pool(jobs)?.install(|| {
        pairs
            .par_iter()
            .map(|&(g, h)| Ok(arrows_oracle(g, h, &sequential())?.answer))
            .collect()
    });
    let mut oracle: BTreeSet<(Certificate, Certificate)> = BTreeSet::new();
    for (&(g, h), answer) in pairs.iter().zip(answers) {
        report.checked += 1;
        if answer? == Answer::Yes {
            oracle.insert((certificate(g)?, certificate(h)?));
            report.positives.push((g.clone(), h.clone()));
        }
    }
    let mut recognized = BTreeSet::new();
    for h in &patterns {
        let candidates = recognize_t_prime(h)?;
        if candidates.len() > 1 {
            report
                .notes
                .push(format!("H={h}: {} candidate parents", candidates.len()));
        }
        for c in candidates {
            recognized.insert((certificate(&c.parent)?, certificate(h)?));
        }
    }
    for (g, h) in oracle.union(&recognized) {
        let (in_o, in_r) = (
            oracle.contains(&(g.clone(), h.clone())),
            recognized.contains(&(g.clone(), h.clone())),
        );
        if in_o && in_r {
            report.notes.push(format!("pair G={g} H={h}"));
        } else {
            report.discrepancies.push(Discrepancy {
                g: g.to_string(),
                h: Some(h.to_string()),
                oracle: if in_o { "yes" } else { "no" }.into(),
                classified: if in_r { "yes" } else { "no" }.into(),
                detail: None,
            });
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn edges_within(rows: &[u64], mask: u64) -> u32 {
    BitIter(mask)
        .map(|v| (rows[v] & mask).count_ones())
        .sum::<u32>()
        / 2
}

/// No non-trivial graph has all `t`-subsets spanning the same number of
/// edges, for `2 <= t <= n - 2`.
pub fn cmd_verify_bosak(n_max: usize) -> Result<VerificationReport> {
    if n_max > 8 {
        return Err(Error::capacity(
            "uniform-subset suite is capped at 8 vertices",
        ));
    }
    let start = Instant::now();
    let mut report = VerificationReport::new("bosak", format!("n <= {n_max}, 2 <= t <= n - 2"));
    for n in 4..=n_max {
        for g in enumerate_graphs(n)? {
            let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
            for t in 2..=n - 2 {
                report.checked += 1;
                let mut counts = BTreeSet::new();
                for mask in 0u64..(1 << n) {
                    if mask.count_ones() as usize == t {
                        counts.insert(edges_within(&rows, mask));
                        if counts.len() > 1 {
                            break;
                        }
                    }
                }
                if counts.len() == 1 && !g.is_trivial() {
                    report.discrepancies.push(Discrepancy {
                        g: g.to_graph6(),
                        h: None,
                        oracle: format!("every {t}-subset spans {} edges", counts.first().unwrap()),
                        classified: "not complete or empty".into(),
                        detail: None,
                    });
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialTarget {
    Petersen,
    HoffmanSingleton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpecialMode {
    /// One partition per automorphism orbit, weighted by orbit size.
    OrbitReduced,
    /// Every partition.
    Full,
}

/// Construction facts and the rainbow check over all partitions into
/// `n - 2` blocks. `progress(done, total)` is called every 10,000 partitions.
pub fn cmd_verify_special(
    target: SpecialTarget,
    mode: SpecialMode,
    progress: &mut dyn FnMut(u128, u128),
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (name, g, h, degree, order) = match target {
        SpecialTarget::Petersen => ("petersen", petersen(), petersen_prime(), 3, 120u64),
        SpecialTarget::HoffmanSingleton => (
            "hoffman-singleton",
            hoffman_singleton(),
            hoffman_singleton_prime(),
            7,
            50 * 5040,
        ),
    };
    let mode_name = match mode {
        SpecialMode::OrbitReduced => "orbit-reduced",
        SpecialMode::Full => "full",
    };
    let mut report = VerificationReport::new(name, format!("{mode_name} partition check"));
    let n = g.vertex_count();
    let k = h.vertex_count();
    let non_edges = n * (n - 1) / 2 - g.edge_count();
    let group = automorphisms(&g)?.group_order;
    let facts = [
        ("regular", g.is_regular() && g.max_degree() == degree),
        ("girth 5", g.girth() == Some(5)),
        ("diameter 2", g.diameter() == Some(2)),
        ("no triangle", g.triangle_count() == 0),
        ("no 4-cycle", g.four_cycle_count() == 0),
        ("non-edges", non_edges == n * (n - 1 - degree) / 2),
        ("automorphism group order", group == order.into()),
        (
            "complement edge-transitive",
            is_edge_transitive(&g.complement())?,
        ),
        ("deleted pair leaves n - 2 vertices", k == n - 2),
    ];
    for (fact, ok) in facts {
        report
            .notes
            .push(format!("{fact}: {}", if ok { "ok" } else { "FAILED" }));
        if !ok {
            report.discrepancies.push(Discrepancy {
                g: g.to_graph6(),
                h: None,
                oracle: format!("{fact} expected"),
                classified: "violated".into(),
                detail: None,
            });
        }
    }
    report.notes.push(format!(
        "{n} vertices, {} edges, {non_edges} non-edges, |Aut| = {group}",
        g.edge_count()
    ));

    let index = CopyIndex::new(&g, &h)?;
    if let Some(c) = index.copy_count() {
        report
            .notes
            .push(format!("{c} induced copies of the deleted-pair graph"));
    }
    let total = stirling2(n, k).expect("fits");
    let mut done: u128 = 0;
    let mut fail = |class_of: &[usize], weight: u128, report: &mut VerificationReport| {
        let masks = class_masks(class_of, k);
        if index.rainbow_copy(class_of, &masks).is_none() {
            report.discrepancies.push(Discrepancy {
                g: g.to_graph6(),
                h: Some(h.to_graph6()),
                oracle: "no rainbow copy".into(),
                classified: "arrows".into(),
                detail: Some(format!(
                    "colouring {}",
                    Coloring::new(class_of.to_vec(), k).expect("valid")
                )),
            });
        }
        let before = done / 10_000;
        done += weight;
        if done / 10_000 != before {
            progress(done, total);
        }
    };
    match mode {
        SpecialMode::Full => {
            let mut parts = Partitions::new(n, k)?;
            while let Some(rgs) = parts.next_rgs() {
                fail(rgs, 1, &mut report);
            }
        }
        SpecialMode::OrbitReduced => {
            let reps = orbit_reduced_partitions(&g, k)?;
            report
                .notes
                .push(format!("{} orbit representatives", reps.len()));
            for r in &reps {
                fail(r.coloring.class_of(), r.orbit_size as u128, &mut report);
            }
        }
    }
    report.checked = done;
    report
        .notes
        .push(format!("{done} of {total} partitions covered"));
    if done != total {
        report.discrepancies.push(Discrepancy {
            g: g.to_graph6(),
            h: Some(h.to_graph6()),
            oracle: format!("{total} partitions"),
            classified: format!("{done} covered"),
            detail: None,
        });
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
