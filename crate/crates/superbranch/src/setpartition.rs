//! Set partitions of `[n]` stored as arc diagrams.
//!
//! Nodes are 1-based. A partition keeps its ground-set size explicitly, so
//! isolated nodes are part of the value: `{1-2}` on 3 nodes differs from
//! `{1-2}` on 2 nodes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub const fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }

    /// `right - left - 1`, the number of nodes strictly under the arc.
    pub fn dim(&self) -> usize {
        self.right.saturating_sub(self.left + 1)
    }

    /// `self = (i,k)`, `other = (j,l)` with `i < j < k < l`.
    pub fn crosses(&self, other: &Arc) -> bool {
        self.left < other.left && other.left < self.right && self.right < other.right
    }

    /// `self = (i,l)` strictly encloses `other = (j,k)`: `i < j < k < l`.
    pub fn nests(&self, other: &Arc) -> bool {
        self.left < other.left && other.left < other.right && other.right < self.right
    }

    pub fn conflicts(&self, other: &Arc) -> bool {
        self != other && (self.left == other.left || self.right == other.right)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    arcs: Vec<Arc>,
}

impl SetPartition {
    pub fn empty(n: usize) -> Self {
        SetPartition { n, arcs: Vec::new() }
    }

    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort_unstable();
        arcs.dedup();
        for a in &arcs {
            if a.left >= a.right {
                return Err(Error::NotIncreasing { left: a.left, right: a.right });
            }
            if a.left == 0 || a.right > n {
                return Err(Error::OutOfRange { left: a.left, right: a.right, n });
            }
        }
        let mut by_left = vec![None; n + 1];
        let mut by_right = vec![None; n + 1];
        for a in &arcs {
            if let Some(b) = by_left[a.left].replace(*a) {
                return Err(Error::ConflictingLeft(b.to_string(), a.to_string()));
            }
            if let Some(b) = by_right[a.right].replace(*a) {
                return Err(Error::ConflictingRight(b.to_string(), a.to_string()));
            }
        }
        Ok(SetPartition { n, arcs })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&(l, r)| Arc::new(l, r)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.binary_search(a).is_ok()
    }

    /// The arc leaving node `i`, if any.
    pub fn arc_from(&self, i: usize) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.left == i)
    }

    /// The arc entering node `r`, if any.
    pub fn arc_into(&self, r: usize) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.right == r)
    }

    pub fn has_left(&self, i: usize) -> bool {
        self.arc_from(i).is_some()
    }

    pub fn has_right(&self, r: usize) -> bool {
        self.arc_into(r).is_some()
    }

    pub fn dim(&self) -> usize {
        self.arcs.iter().map(Arc::dim).sum()
    }

    /// Same arcs on a different number of nodes.
    pub fn regrounded(&self, n: usize) -> Result<Self> {
        if let Some(a) = self.arcs.iter().find(|a| a.right > n) {
            return Err(Error::OutOfRange { left: a.left, right: a.right, n });
        }
        Ok(SetPartition { n, arcs: self.arcs.clone() })
    }

    pub fn with_arc(&self, a: Arc) -> Result<Self> {
        let mut arcs = self.arcs.clone();
        arcs.push(a);
        Self::new(self.n, arcs)
    }

    pub fn without_arc(&self, a: &Arc) -> Self {
        SetPartition {
            n: self.n,
            arcs: self.arcs.iter().copied().filter(|b| b != a).collect(),
        }
    }

    /// Blocks of the partition, each sorted, ordered by least element.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut next = vec![0usize; self.n + 1];
        let mut has_prev = vec![false; self.n + 1];
        for a in &self.arcs {
            next[a.left] = a.right;
            has_prev[a.right] = true;
        }
        let mut blocks = Vec::new();
        for start in 1..=self.n {
            if has_prev[start] {
                continue;
            }
            let mut block = vec![start];
            let mut cur = start;
            while next[cur] != 0 {
                cur = next[cur];
                block.push(cur);
            }
            blocks.push(block);
        }
        blocks
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

pub fn parse_partition(text: &str, n: usize) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::empty(n));
    }
    let mut arcs = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let (l, r) = token
            .split_once('-')
            .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
        let parse = |s: &str| {
            let s = s.trim();
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::MalformedToken(token.to_string()));
            }
            s.parse::<usize>().map_err(|_| Error::MalformedToken(token.to_string()))
        };
        let arc = Arc::new(parse(l)?, parse(r)?);
        if arcs.contains(&arc) {
            return Err(Error::ConflictingLeft(arc.to_string(), arc.to_string()));
        }
        arcs.push(arc);
    }
    SetPartition::new(n, arcs)
}

pub fn format_partition(sp: &SetPartition) -> String {
    sp.to_string()
}

/// Sorted arc-set operations. Inputs must be sorted; outputs are sorted.
pub mod arcset {
    use super::Arc;

    pub fn union(a: &[Arc], b: &[Arc]) -> Vec<Arc> {
        let mut out: Vec<Arc> = a.iter().chain(b).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn intersection(a: &[Arc], b: &[Arc]) -> Vec<Arc> {
        a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
    }

    pub fn difference(a: &[Arc], b: &[Arc]) -> Vec<Arc> {
        a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
    }
}

pub fn crossing_set(a: &[Arc], b: &[Arc]) -> Vec<(Arc, Arc)> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            if x.crosses(y) {
                out.push((*x, *y));
            }
        }
    }
    out
}

pub fn crossing_number(a: &[Arc], b: &[Arc]) -> usize {
    a.iter().map(|x| b.iter().filter(|y| x.crosses(y)).count()).sum()
}

/// Pairs `(outer, inner)` with `outer` from `a` and `inner` from `b`.
pub fn nesting_set(a: &[Arc], b: &[Arc]) -> Vec<(Arc, Arc)> {
    let mut out = Vec::new();
    for x in a {
        for y in b {
            if x.nests(y) {
                out.push((*x, *y));
            }
        }
    }
    out
}

pub fn nesting_number(a: &[Arc], b: &[Arc]) -> usize {
    a.iter().map(|x| b.iter().filter(|y| x.nests(y)).count()).sum()
}

/// All set partitions of `[n]` in restricted-growth-string order.
///
/// The string `a_1 a_2 ... a_n` assigns node `k` to block `a_k`, with
/// `a_1 = 0` and each `a_k` at most one more than the maximum before it.
/// Strings are produced in lexicographic order.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions { n, rgs: vec![0; n], done: false }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    rgs: Vec<usize>,
    done: bool,
}

impl Partitions {
    fn current(&self) -> SetPartition {
        let mut last = vec![0usize; self.n];
        let mut arcs = Vec::new();
        for (k, &b) in self.rgs.iter().enumerate() {
            let node = k + 1;
            if last[b] != 0 {
                arcs.push(Arc::new(last[b], node));
            }
            last[b] = node;
        }
        arcs.sort_unstable();
        SetPartition { n: self.n, arcs }
    }

    fn advance(&mut self) {
        let n = self.n;
        let mut prefix_max = vec![0usize; n];
        for k in 1..n {
            prefix_max[k] = prefix_max[k - 1].max(self.rgs[k - 1]);
        }
        for k in (1..n).rev() {
            if self.rgs[k] <= prefix_max[k] {
                self.rgs[k] += 1;
                for x in &mut self.rgs[k + 1..] {
                    *x = 0;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    #[test]
    fn parse_sorts_and_validates() {
        let l = sp("3-5,1-4,2-6", 6);
        assert_eq!(l.arcs(), &[Arc::new(1, 4), Arc::new(2, 6), Arc::new(3, 5)]);
        assert!(sp("", 6).is_empty());
        assert!(matches!(parse_partition("1-4,2-4", 6), Err(Error::ConflictingRight(..))));
        assert!(matches!(parse_partition("1-4,1-3", 6), Err(Error::ConflictingLeft(..))));
        assert!(matches!(parse_partition("4-2", 6), Err(Error::NotIncreasing { .. })));
        assert!(matches!(parse_partition("1-7", 6), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse_partition("1-", 6), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_partition("a-3", 6), Err(Error::MalformedToken(_))));
        assert!(matches!(parse_partition("1-2,,3-4", 6), Err(Error::MalformedToken(_))));
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(sp("3-5,1-4", 5).to_string(), "1-4,3-5");
        assert_eq!(SetPartition::empty(4).to_string(), "");
    }

    #[test]
    fn parts_examples() {
        assert_eq!(sp("1-3,3-5,2-6", 6).parts(), vec![vec![1, 3, 5], vec![2, 6], vec![4]]);
        assert_eq!(SetPartition::empty(3).parts(), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(sp("1-2,2-3", 3).parts(), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn statistics_examples() {
        let l = sp("1-4,3-5", 6);
        let m = sp("2-6,3-5", 6);
        assert_eq!(l.dim(), 3);
        assert_eq!(m.dim(), 4);
        assert_eq!(SetPartition::empty(4).dim(), 0);
        assert_eq!(
            crossing_set(l.arcs(), m.arcs()),
            vec![(Arc::new(1, 4), Arc::new(2, 6)), (Arc::new(1, 4), Arc::new(3, 5))]
        );
        assert_eq!(crossing_number(m.arcs(), l.arcs()), 0);
        assert_eq!(crossing_number(l.arcs(), l.arcs()), 1);
        assert_eq!(nesting_number(l.arcs(), l.arcs()), 0);
        assert_eq!(nesting_number(m.arcs(), m.arcs()), 1);
        assert!(nesting_set(l.arcs(), m.arcs()).is_empty());
        assert_eq!(nesting_set(m.arcs(), l.arcs()), vec![(Arc::new(2, 6), Arc::new(3, 5))]);
        assert_eq!(crossing_number(&[], m.arcs()), 0);
        assert_eq!(crossing_number(&[Arc::new(1, 3)], &[Arc::new(2, 4)]), 1);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
        let three: Vec<String> = enumerate_partitions(3).map(|p| p.to_string()).collect();
        // 000, 001, 010, 011, 012
        assert_eq!(three, vec!["1-2,2-3", "1-2", "1-3", "2-3", ""]);
    }
}
