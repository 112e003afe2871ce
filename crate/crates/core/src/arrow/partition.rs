//! Set partitions into exactly `k` blocks, as restricted growth strings.
//!
//! A restricted growth string `a` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; it names block `a[i]` for element `i`.
//! Strings are produced in lexicographic order, skipping every prefix that
//! can no longer reach `k` blocks.

use std::fmt;

use crate::error::{Error, Result};

/// A vertex colouring with exactly `k` non-empty classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    class_of: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Validates that every colour in `0..k` is used and no other appears.
    pub fn new(class_of: Vec<usize>, k: usize) -> Result<Self> {
        let mut used = vec![false; k];
        for (v, &c) in class_of.iter().enumerate() {
            if c >= k {
                return Err(Error::argument(format!(
                    "vertex {v} has colour {c} outside 0..{k}"
                )));
            }
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::argument(format!("colour {c} has an empty class")));
        }
        Ok(Coloring { class_of, k })
    }

    /// Builds a colouring from explicit classes covering `0..n`.
    pub fn from_classes(classes: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut class_of = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(Error::argument(format!(
                        "vertex {v} out of range for {n} vertices"
                    )));
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::argument(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
                class_of[v] = c;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::argument(format!("vertex {v} is uncoloured")));
        }
        Coloring::new(class_of, classes.len())
    }

    pub(crate) fn from_rgs(rgs: &[usize], k: usize) -> Self {
        Coloring {
            class_of: rgs.to_vec(),
            k,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn color(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub(crate) fn class_masks(&self) -> Vec<u64> {
        class_masks(&self.class_of, self.k)
    }

    /// True when the vertices all carry different colours.
    pub fn is_rainbow(&self, vertices: &[usize]) -> bool {
        let mut seen = vec![false; self.k];
        vertices
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[self.class_of[v]], true))
    }

    /// Relabels colours by first occurrence, giving the restricted growth string.
    pub fn normalized(&self) -> Coloring {
        let mut rename = vec![usize::MAX; self.k];
        let mut next = 0;
        let class_of = self
            .class_of
            .iter()
            .map(|&c| {
                if rename[c] == usize::MAX {
                    rename[c] = next;
                    next += 1;
                }
                rename[c]
            })
            .collect();
        Coloring {
            class_of,
            k: self.k,
        }
    }
}

pub(crate) fn class_masks(class_of: &[usize], k: usize) -> Vec<u64> {
    let mut masks = vec![0u64; k];
    for (v, &c) in class_of.iter().enumerate() {
        masks[c] |= 1 << v;
    }
    masks
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

/// Classes in brace notation, e.g. `{0,1}{2,3}{4}`.
impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for class in self.classes() {
            let body: Vec<String> = class.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", body.join(","))?;
        }
        Ok(())
    }
}

/// Streams the `S(n, k)` partitions of `0..n` into `k` blocks.
#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    k: usize,
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::argument(format!(
                "cannot partition {n} elements into {k} non-empty blocks"
            )));
        }
        let mut rgs = vec![0; n];
        for t in 1..k {
            rgs[n - k + t] = t;
        }
        Ok(Partitions {
            n,
            k,
            rgs,
            started: false,
            done: false,
        })
    }

    /// Advances and returns the next string without allocating.
    pub fn next_rgs(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.rgs);
        }
        if self.advance() {
            Some(&self.rgs)
        } else {
            self.done = true;
            None
        }
    }

    fn advance(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let mut prefix_max = vec![0usize; n];
        for i in 1..n {
            prefix_max[i] = prefix_max[i - 1].max(self.rgs[i]);
        }
        for i in (1..n).rev() {
            let before = prefix_max[i - 1];
            let limit = (before + 1).min(k - 1);
            let remaining = n - i - 1;
            for cand in self.rgs[i] + 1..=limit {
                let used = before.max(cand) + 1;
                if used + remaining >= k {
                    self.rgs[i] = cand;
                    let need = k - used;
                    for j in i + 1..n {
                        self.rgs[j] = 0;
                    }
                    for t in 0..need {
                        self.rgs[n - need + t] = used + t;
                    }
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for Partitions {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let k = self.k;
        self.next_rgs().map(|r| Coloring::from_rgs(r, k))
    }
}

pub fn partitions_into_k_blocks(n: usize, k: usize) -> Result<Partitions> {
    Partitions::new(n, k)
}

/// Stirling number of the second kind, `None` on `u128` overflow.
pub fn stirling2(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        // only S(m, j) with j >= k - (n - m) feed into S(n, k)
        let low = (k + m).saturating_sub(n).max(1);
        for j in (low..=k.min(m)).rev() {
            row[j] = (j as u128).checked_mul(row[j])?.checked_add(row[j - 1])?;
        }
        row[0] = 0;
    }
    Some(row[k])
}
