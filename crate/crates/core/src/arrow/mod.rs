//! Deciding `G -> H`: an exhaustive oracle over colourings and a fast path
//! that reads the answer off the classification.

mod oracle;
mod orbit;
mod partition;
mod rainbow;

use std::fmt;
use std::time::Duration;

use crate::classify::arrow_set;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;

pub use oracle::arrows_oracle;
pub(crate) use oracle::CopyIndex;
pub use orbit::{orbit_reduced_partitions, OrbitRepresentative};
pub(crate) use partition::class_masks;
pub use partition::{partitions_into_k_blocks, stirling2, Coloring, Partitions};
pub use rainbow::rainbow_induced_exists;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Exhaustive search over colourings.
    Oracle,
    /// Read off the classification.
    Classified,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Oracle => "oracle",
            Provenance::Classified => "classified",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub answer: Answer,
    /// Rainbow embedding `H`-vertex -> `G`-vertex, when a single colouring was decided.
    pub witness: Option<Vec<usize>>,
    /// A colouring with no rainbow induced copy of `H`.
    pub counterexample: Option<Coloring>,
    pub provenance: Provenance,
    /// Colourings examined; zero for classified answers.
    pub partitions_checked: u128,
    pub note: Option<String>,
}

impl ArrowVerdict {
    fn classified(answer: Answer, note: impl Into<String>) -> Self {
        ArrowVerdict {
            answer,
            witness: None,
            counterexample: None,
            provenance: Provenance::Classified,
            partitions_checked: 0,
            note: Some(note.into()),
        }
    }
}

/// Limits on an oracle run; whichever is hit first ends it with `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_partitions: Option<u128>,
    pub max_time: Option<Duration>,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_partitions: Some(10_000_000),
            max_time: Some(Duration::from_secs(60)),
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_partitions: None,
            max_time: None,
            ..Budget::default()
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

pub(crate) fn check_orders(g: &Graph, h: &Graph) -> Result<()> {
    let (n, k) = (g.vertex_count(), h.vertex_count());
    if k == 0 {
        return Err(Error::argument("the pattern graph has no vertices"));
    }
    if n < k {
        return Err(Error::argument(format!(
            "arrowing needs at least as many host vertices as pattern vertices ({n} < {k})"
        )));
    }
    Ok(())
}

/// Decides `g -> h` from the classification where it is known.
///
/// Answers `Unknown` only for `h` equal to `P3 + K1` or its complement at
/// orders where the classification is open; `arrows_oracle` settles those.
pub fn arrows(g: &Graph, h: &Graph) -> Result<ArrowVerdict> {
    check_orders(g, h)?;
    let (n, k) = (g.vertex_count(), h.vertex_count());
    if k == 1 {
        return Ok(ArrowVerdict::classified(
            Answer::Yes,
            "every vertex is a rainbow K1",
        ));
    }
    if n == k {
        return Ok(if are_isomorphic(g, h)? {
            let mut v =
                ArrowVerdict::classified(Answer::Yes, "isomorphic: the only colouring is rainbow");
            v.witness = crate::iso::find_isomorphism(h, g)?;
            v
        } else {
            let mut v = ArrowVerdict::classified(Answer::No, "same order but not isomorphic");
            v.counterexample = Some(Coloring::from_rgs(&(0..n).collect::<Vec<_>>(), n));
            v
        });
    }
    let description = arrow_set(h, n)?;
    let note = description.note.clone();
    Ok(match description.contains(g)? {
        Some(true) => ArrowVerdict::classified(Answer::Yes, note),
        Some(false) => ArrowVerdict::classified(Answer::No, note),
        None => ArrowVerdict::classified(
            Answer::Unknown,
            format!("{note}; not settled by the classification, run the oracle"),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{cycle, g_family, lambda, path, petersen_prime};

    #[test]
    fn classified_examples() {
        assert_eq!(arrows(&cycle(5), &path(4)).unwrap().answer, Answer::Yes);
        assert_eq!(
            arrows(&Graph::complete(10), &petersen_prime())
                .unwrap()
                .answer,
            Answer::No
        );
        let v = arrows(&g_family(2).unwrap(), &lambda()).unwrap();
        assert_eq!(
            (v.answer, v.provenance),
            (Answer::Yes, Provenance::Classified)
        );
        assert_eq!(
            arrows(&cycle(8), &lambda()).unwrap().answer,
            Answer::Unknown
        );
    }

    #[test]
    fn same_order() {
        let v = arrows(&path(4), &path(4)).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        let v = arrows(&cycle(4), &path(4)).unwrap();
        assert_eq!(v.answer, Answer::No);
        let c = v.counterexample.unwrap();
        assert!(rainbow_induced_exists(&cycle(4), &c, &path(4))
            .unwrap()
            .is_none());
    }

    #[test]
    fn order_errors() {
        assert!(arrows(&path(3), &path(4)).is_err());
        assert!(arrows(&path(3), &Graph::empty(0)).is_err());
    }
}
