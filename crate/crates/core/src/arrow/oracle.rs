//! Exhaustive check of every colouring.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;

use super::partition::{class_masks, Coloring, Partitions};
use super::rainbow::EmbeddingPlan;
use super::{check_orders, Answer, ArrowVerdict, Budget, Provenance};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::iso::certificate;

/// Above this many `k`-subsets the induced copies are not tabulated and each
/// colouring is decided by backtracking instead.
const SUBSET_LIMIT: u128 = 2_000_000;

/// Colourings handed out per batch; time limits are checked between batches.
const CHUNK: usize = 4096;

fn binomial(n: usize, r: usize) -> u128 {
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `f` with every `r`-subset of `0..n` as a bit mask.
fn for_each_subset(n: usize, r: usize, f: &mut impl FnMut(u64)) {
    fn go(start: usize, n: usize, left: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(mask);
            return;
        }
        for v in start..=n - left {
            go(v + 1, n, left - 1, mask | 1 << v, f);
        }
    }
    go(0, n, r, 0, f);
}

/// The vertex sets of `g` that induce a copy of `h`, with the lookups the
/// per-colouring test needs.
pub(crate) struct CopyIndex {
    n: usize,
    k: usize,
    all: u64,
    copies: Option<Vec<u64>>,
    lookup: HashSet<u64>,
    graph: Graph,
    plan: EmbeddingPlan,
}

impl CopyIndex {
    pub fn new(g: &Graph, h: &Graph) -> Result<Self> {
        let (n, k) = (g.vertex_count(), h.vertex_count());
        if !g.is_small() {
            return Err(Error::capacity(
                "the oracle supports at most 64 host vertices",
            ));
        }
        let plan = EmbeddingPlan::new(h)?;
        let all = g.vertex_mask();
        let mut copies = None;
        if binomial(n, k) <= SUBSET_LIMIT {
            let target = certificate(h)?;
            let edges = h.edge_count();
            let degrees = h.degree_sequence();
            let rows: Vec<u64> = (0..n).map(|v| g.row64(v)).collect();
            let mut found = Vec::new();
            let mut failure = None;
            let mut test = |mask: u64| {
                if failure.is_some() {
                    return;
                }
                let mut seq: Vec<usize> = BitIter(mask)
                    .map(|v| (rows[v] & mask).count_ones() as usize)
                    .collect();
                if seq.iter().sum::<usize>() != 2 * edges {
                    return;
                }
                seq.sort_unstable();
                if seq != degrees {
                    return;
                }
                match certificate(&g.induced_by_mask(mask)) {
                    Ok(c) if c == target => found.push(mask),
                    Ok(_) => {}
                    Err(e) => failure = Some(e),
                }
            };
            if k <= n - k {
                for_each_subset(n, k, &mut test);
            } else {
                for_each_subset(n, n - k, &mut |removed| test(all & !removed));
            }
            if let Some(e) = failure {
                return Err(e);
            }
            copies = Some(found);
        }
        let lookup = copies.iter().flatten().copied().collect();
        Ok(CopyIndex {
            n,
            k,
            all,
            copies,
            lookup,
            graph: g.clone(),
            plan,
        })
    }

    /// Number of induced copies, when tabulated.
    pub fn copy_count(&self) -> Option<usize> {
        self.copies.as_ref().map(Vec::len)
    }

    /// A rainbow induced copy under the colouring, as a vertex mask.
    pub fn rainbow_copy(&self, class_of: &[usize], masks: &[u64]) -> Option<u64> {
        let Some(copies) = &self.copies else {
            return self
                .plan
                .find(&self.graph, class_of, masks)
                .map(|m| m.iter().fold(0u64, |acc, &v| acc | 1 << v));
        };
        let mut product: usize = 1;
        for m in masks {
            product = product.saturating_mul(m.count_ones() as usize);
        }
        if product <= copies.len() {
            let singles = masks
                .iter()
                .filter(|m| m.count_ones() == 1)
                .fold(0u64, |acc, m| acc | m);
            let multi: Vec<u64> = masks
                .iter()
                .copied()
                .filter(|m| m.count_ones() > 1)
                .collect();
            return self.transversal(&multi, singles);
        }
        if self.k <= self.n - self.k {
            let full = if self.k == 64 {
                u64::MAX
            } else {
                (1u64 << self.k) - 1
            };
            copies
                .iter()
                .copied()
                .find(|&c| BitIter(c).fold(0u64, |acc, v| acc | 1 << class_of[v]) == full)
        } else {
            // a copy misses a class exactly when that class lies inside the removed set
            copies.iter().copied().find(|&c| {
                let removed = self.all & !c;
                BitIter(removed).all(|v| masks[class_of[v]] & !removed != 0)
            })
        }
    }

    fn transversal(&self, multi: &[u64], chosen: u64) -> Option<u64> {
        match multi.split_first() {
            None => self.lookup.contains(&chosen).then_some(chosen),
            Some((&first, rest)) => {
                BitIter(first).find_map(|v| self.transversal(rest, chosen | 1 << v))
            }
        }
    }
}

/// Decides `g -> h` by testing every partition of `V(g)` into `|V(h)|` blocks,
/// in restricted-growth order; the first failing partition is returned as the
/// counterexample.
pub fn arrows_oracle(g: &Graph, h: &Graph, budget: &Budget) -> Result<ArrowVerdict> {
    check_orders(g, h)?;
    let (n, k) = (g.vertex_count(), h.vertex_count());
    if budget.max_partitions == Some(0) {
        return Err(Error::argument("the partition budget must be positive"));
    }
    let index = CopyIndex::new(g, h)?;
    let pool = if budget.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(budget.jobs)
                .build()
                .map_err(|e| Error::argument(format!("cannot start worker threads: {e}")))?,
        )
    } else {
        None
    };
    let start = Instant::now();
    let mut partitions = Partitions::new(n, k)?;
    let mut checked: u128 = 0;
    let mut buffer: Vec<usize> = Vec::with_capacity(CHUNK * n);
    let fails = |rgs: &[usize]| index.rainbow_copy(rgs, &class_masks(rgs, k)).is_none();
    loop {
        buffer.clear();
        let room = budget
            .max_partitions
            .map_or(CHUNK as u128, |m| (m - checked).min(CHUNK as u128))
            as usize;
        let mut exhausted = false;
        for _ in 0..room {
            match partitions.next_rgs() {
                Some(rgs) => buffer.extend_from_slice(rgs),
                None => {
                    exhausted = true;
                    break;
                }
            }
        }
        let batch = buffer.len() / n.max(1);
        let failing = match &pool {
            Some(pool) => pool.install(|| buffer.par_chunks(n).position_first(fails)),
            None => buffer.chunks(n).position(fails),
        };
        if let Some(i) = failing {
            checked += i as u128 + 1;
            let rgs = &buffer[i * n..(i + 1) * n];
            return Ok(ArrowVerdict {
                answer: Answer::No,
                witness: None,
                counterexample: Some(Coloring::from_rgs(rgs, k)),
                provenance: Provenance::Oracle,
                partitions_checked: checked,
                note: Some(format!("colouring {checked} has no rainbow induced copy")),
            });
        }
        checked += batch as u128;
        if exhausted {
            return Ok(yes(checked));
        }
        let out_of_partitions = budget.max_partitions.is_some_and(|m| checked >= m);
        let out_of_time = budget.max_time.is_some_and(|t| start.elapsed() >= t);
        if out_of_partitions || out_of_time {
            // the budget may end exactly on the last partition
            if partitions.next_rgs().is_none() {
                return Ok(yes(checked));
            }
            let limit = if out_of_partitions {
                "partition"
            } else {
                "time"
            };
            return Ok(ArrowVerdict {
                answer: Answer::Unknown,
                witness: None,
                counterexample: None,
                provenance: Provenance::Oracle,
                partitions_checked: checked,
                note: Some(format!(
                    "{limit} budget exhausted after {checked} colourings"
                )),
            });
        }
    }
}

fn yes(checked: u128) -> ArrowVerdict {
    ArrowVerdict {
        answer: Answer::Yes,
        witness: None,
        counterexample: None,
        provenance: Provenance::Oracle,
        partitions_checked: checked,
        note: Some(format!(
            "all {checked} colourings contain a rainbow induced copy"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrow::{rainbow_induced_exists, stirling2};
    use crate::special::{cycle, lambda, path, petersen, petersen_prime};

    fn run(g: &Graph, h: &Graph) -> ArrowVerdict {
        arrows_oracle(g, h, &Budget::unlimited().with_jobs(1)).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(
            run(&Graph::complete(4), &Graph::complete(3)).answer,
            Answer::Yes
        );
        let v = run(&cycle(6), &path(3));
        assert_eq!(v.answer, Answer::No);
        // first failure in restricted-growth order
        assert_eq!(v.counterexample.unwrap().to_string(), "{0,1,3,4}{2}{5}");
        let v = run(&cycle(5), &path(4));
        assert_eq!((v.answer, v.partitions_checked), (Answer::Yes, 10));
        for g in [path(5), cycle(6), lambda()] {
            assert_eq!(run(&g, &g).answer, Answer::Yes);
        }
    }

    #[test]
    fn petersen_arrows_its_prime() {
        let v = run(&petersen(), &petersen_prime());
        assert_eq!(v.answer, Answer::Yes);
        assert_eq!(v.partitions_checked, 750);
    }

    #[test]
    fn counterexample_reverifies() {
        let (g, h) = (cycle(7), path(4));
        let v = run(&g, &h);
        assert_eq!(v.answer, Answer::No);
        assert!(rainbow_induced_exists(&g, &v.counterexample.unwrap(), &h)
            .unwrap()
            .is_none());
    }

    #[test]
    fn budget_gives_unknown() {
        let budget = Budget {
            max_partitions: Some(5),
            max_time: None,
            jobs: 1,
        };
        let v = arrows_oracle(&petersen(), &petersen_prime(), &budget).unwrap();
        assert_eq!((v.answer, v.partitions_checked), (Answer::Unknown, 5));
        let exact = Budget {
            max_partitions: Some(750),
            ..budget
        };
        assert_eq!(
            arrows_oracle(&petersen(), &petersen_prime(), &exact)
                .unwrap()
                .answer,
            Answer::Yes
        );
    }

    #[test]
    fn threads_agree_with_sequential() {
        let g = cycle(9);
        let h = path(4);
        let a = run(&g, &h);
        let b = arrows_oracle(&g, &h, &Budget::unlimited().with_jobs(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn backtracking_fallback_agrees_with_table() {
        let g = cycle(8);
        let h = path(3);
        let index = CopyIndex::new(&g, &h).unwrap();
        let plan = EmbeddingPlan::new(&h).unwrap();
        let mut parts = Partitions::new(8, 3).unwrap();
        let mut count = 0;
        while let Some(rgs) = parts.next_rgs() {
            let masks = class_masks(rgs, 3);
            let a = index.rainbow_copy(rgs, &masks).is_some();
            let b = plan.find(&g, rgs, &masks).is_some();
            assert_eq!(a, b, "{rgs:?}");
            count += 1;
        }
        assert_eq!(Some(count), stirling2(8, 3));
    }

    #[test]
    fn order_errors() {
        assert!(arrows_oracle(&path(2), &path(3), &Budget::default()).is_err());
    }
}
