//! Shell tableaux: sequences of labeled generalized shells encoding paths in
//! the Bratteli diagram, and their semi-strict relaxation at `q = 2`.
//!
//! Besides proper arcs `i < l`, a shell may hold the placeholder loop `(n,n)`
//! and degenerate arcs `(x,x)`, which close a spiral whose last smile or
//! frown has nowhere to go. Neither kind contributes to a shape.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::branching::is_shell;
use crate::bratteli::{BratteliDiagram, Path};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::setpartition::{arcset, Arc, SetPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orient {
    Frown,
    Smile,
    Loop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledArc {
    #[serde(rename = "i")]
    pub left: usize,
    #[serde(rename = "l")]
    pub right: usize,
    pub label: usize,
    pub orient: Orient,
}

impl LabeledArc {
    pub fn frown(left: usize, right: usize, label: usize) -> Self {
        LabeledArc { left, right, label, orient: Orient::Frown }
    }

    pub fn smile(left: usize, right: usize, label: usize) -> Self {
        LabeledArc { left, right, label, orient: Orient::Smile }
    }

    pub fn lp(n: usize, label: usize) -> Self {
        LabeledArc { left: n, right: n, label, orient: Orient::Loop }
    }

    /// A real arc `left < right` that shows up in shapes.
    pub fn is_proper(&self) -> bool {
        self.orient != Orient::Loop && self.left < self.right
    }

    pub fn arc(&self) -> Arc {
        Arc::new(self.left, self.right)
    }

    pub fn dim(&self) -> i64 {
        self.right as i64 - self.left as i64 - 1
    }

    fn conflicts(&self, other: &LabeledArc) -> bool {
        (self.left, self.right) != (other.left, other.right)
            && (self.left == other.left || self.right == other.right)
    }
}

impl fmt::Display for LabeledArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.orient {
            Orient::Frown => "⌢",
            Orient::Smile => "⌣",
            Orient::Loop => ",",
        };
        write!(f, "({}{}{};{})", self.left, sym, self.right, self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabeledShell {
    arcs: Vec<LabeledArc>,
}

impl LabeledShell {
    pub fn new(mut arcs: Vec<LabeledArc>) -> Self {
        arcs.sort_by_key(|a| a.label);
        LabeledShell { arcs }
    }

    /// Arcs in increasing label order.
    pub fn arcs(&self) -> &[LabeledArc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn min_label(&self) -> usize {
        self.arcs.first().map_or(0, |a| a.label)
    }

    pub fn is_loop(&self) -> bool {
        self.arcs.len() == 1 && self.arcs[0].orient == Orient::Loop
    }

    /// The arc with the largest label `<= a`.
    pub fn active_at(&self, a: usize) -> Option<&LabeledArc> {
        self.arcs.iter().rev().find(|x| x.label <= a)
    }

    pub fn is_generalized_shell(&self, n: usize) -> bool {
        if self.is_loop() {
            return self.arcs[0].left == n && self.arcs[0].right == n;
        }
        if self.arcs.iter().any(|a| a.orient == Orient::Loop) {
            return false;
        }
        let split = |o: Orient| -> Vec<Arc> {
            self.arcs.iter().filter(|a| a.orient == o).map(LabeledArc::arc).collect()
        };
        is_generalized_shell(&split(Orient::Frown), &split(Orient::Smile), n)
    }

    /// Larger arcs get smaller labels.
    pub fn is_semi_strict(&self) -> bool {
        self.arcs
            .iter()
            .all(|x| self.arcs.iter().all(|y| x.dim() <= y.dim() || x.label < y.label))
    }

    /// Semi-strict, and conflicting arcs of one orientation never carry consecutive labels.
    pub fn is_strict(&self) -> bool {
        self.is_semi_strict() && self.consecutive_conflicts().is_empty()
    }

    /// Arcs followed, at the next label, by a smaller conflicting arc of the same orientation.
    fn consecutive_conflicts(&self) -> Vec<LabeledArc> {
        let mut out = Vec::new();
        for x in &self.arcs {
            for y in &self.arcs {
                if x.orient == y.orient && x.conflicts(y) && x.dim() > y.dim() && y.label == x.label + 1 {
                    out.push(*x);
                }
            }
        }
        out
    }
}

/// Recognizes `U_r {j - min L_r : j in I_r}` (frowns) together with
/// `U_r {max I_r - m : m in L_{r+1}}` (smiles), where
/// `{i} = I_1 < ... < I_s <= L_{s'} < ... < L_1 = {l}` and `l <= n`.
pub fn is_generalized_shell(frowns: &[Arc], smiles: &[Arc], n: usize) -> bool {
    let frowns: BTreeSet<Arc> = frowns.iter().copied().collect();
    let smiles: BTreeSet<Arc> = smiles.iter().copied().collect();
    if frowns.is_empty() || frowns.iter().chain(&smiles).any(|a| a.left == 0 || a.left > a.right || a.right > n) {
        return false;
    }
    // frown groups by right endpoint, outermost first
    let mut rights: Vec<usize> = frowns.iter().map(|a| a.right).collect();
    rights.sort_unstable_by(|a, b| b.cmp(a));
    rights.dedup();
    let groups_i: Vec<Vec<usize>> = rights
        .iter()
        .map(|&r| frowns.iter().filter(|a| a.right == r).map(|a| a.left).collect())
        .collect();
    // smile groups by left endpoint, outermost first
    let mut lefts: Vec<usize> = smiles.iter().map(|a| a.left).collect();
    lefts.sort_unstable();
    lefts.dedup();
    let groups_l: Vec<Vec<usize>> = lefts
        .iter()
        .map(|&l| smiles.iter().filter(|a| a.left == l).map(|a| a.right).collect())
        .collect();
    let s = groups_i.len();
    let s_prime = groups_l.len() + 1;
    if s_prime != s && s_prime != s + 1 {
        return false;
    }
    if groups_i[0].len() != 1 {
        return false;
    }
    // L_1 = {l}; L_{r+1} from smile group r
    let mut ls: Vec<Vec<usize>> = vec![vec![rights[0]]];
    ls.extend(groups_l.iter().cloned());
    for r in 0..s {
        if ls[r][0] != rights[r] {
            return false;
        }
    }
    for r in 0..s_prime - 1 {
        if lefts[r] != *groups_i[r].last().expect("nonempty") {
            return false;
        }
    }
    for r in 0..s.saturating_sub(1) {
        if groups_i[r].last() >= groups_i[r + 1].first() {
            return false;
        }
    }
    for r in 0..s_prime - 1 {
        if ls[r + 1].last() >= ls[r].first() {
            return false;
        }
    }
    let max_i = *groups_i[s - 1].last().expect("nonempty");
    let min_l = ls[s_prime - 1][0];
    max_i <= min_l
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShellTableau {
    n: usize,
    shells: Vec<LabeledShell>,
}

/// The first condition a tableau fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 1 to 5 for the numbered conditions, 0 for shell form and strictness.
    pub condition: u8,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.condition == 0 {
            write!(f, "{}", self.detail)
        } else {
            write!(f, "condition {}: {}", self.condition, self.detail)
        }
    }
}

fn violation(condition: u8, detail: impl Into<String>) -> std::result::Result<(), Violation> {
    Err(Violation { condition, detail: detail.into() })
}

impl ShellTableau {
    pub fn new(n: usize, shells: Vec<LabeledShell>) -> Self {
        ShellTableau { n, shells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shells(&self) -> &[LabeledShell] {
        &self.shells
    }

    /// Length `k`.
    pub fn len(&self) -> usize {
        self.shells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shells.is_empty()
    }

    pub fn total_labels(&self) -> usize {
        self.shells.iter().map(LabeledShell::len).sum()
    }

    /// Proper arcs carrying the largest label `<= a` in their shell.
    pub fn shape_at(&self, a: usize) -> Result<SetPartition> {
        let arcs = self
            .shells
            .iter()
            .filter_map(|s| s.active_at(a))
            .filter(|x| x.is_proper())
            .map(LabeledArc::arc);
        SetPartition::new(self.n, arcs).map_err(|e| Error::InvalidTableau(format!("shape at {a}: {e}")))
    }

    pub fn shape(&self) -> Result<SetPartition> {
        self.shape_at(self.total_labels())
    }

    /// Shell form, conditions 1 to 5 and strictness.
    pub fn check(&self) -> std::result::Result<(), Violation> {
        self.check_basic()?;
        for (r, s) in self.shells.iter().enumerate() {
            if !s.is_strict() {
                return violation(0, format!("shell {} is not strictly labeled", r + 1));
            }
        }
        self.check_whorls()
    }

    pub fn is_shell_tableau(&self) -> bool {
        self.check().is_ok()
    }

    /// Shell form, conditions 1 to 3, and semi-strict labels.
    fn check_basic(&self) -> std::result::Result<(), Violation> {
        let n = self.n;
        let k = self.shells.len();
        if k == 0 {
            return Ok(());
        }
        for (r, s) in self.shells.iter().enumerate() {
            if s.is_empty() {
                return violation(1, format!("shell {} is empty", r + 1));
            }
            if !s.is_generalized_shell(n) {
                return violation(0, format!("shell {} is not a generalized shell", r + 1));
            }
            if !s.is_loop() && !(s.arcs[0].orient == Orient::Frown && s.arcs[0].right == n) {
                return violation(0, format!("shell {} does not open with a frown ending at {n}", r + 1));
            }
            if r + 1 < k && s.len() < 2 && !s.is_loop() {
                return violation(1, format!("shell {} is a single arc before the last shell", r + 1));
            }
            if !s.is_semi_strict() {
                return violation(0, format!("shell {} labels do not decrease with arc size", r + 1));
            }
        }
        if self.shells[k - 1].len() != 1 {
            return violation(1, "the last shell is not a single arc");
        }
        let total = self.total_labels();
        let labels: BTreeSet<usize> = self.shells.iter().flat_map(|s| s.arcs.iter().map(|a| a.label)).collect();
        if labels.len() != total || labels.first() != Some(&1) || labels.last() != Some(&total) {
            return violation(2, "labels are not exactly 1..N");
        }
        for r in 0..k - 1 {
            let head = self.shells[r].arcs.iter().take(2).map(|a| a.label).max().expect("nonempty");
            if head >= self.shells[r + 1].min_label() {
                return violation(3, format!("shell {} starts before shell {} has two labels", r + 2, r + 1));
            }
        }
        Ok(())
    }

    /// Conditions 4 and 5: an arc whose predecessor in another shell shares an
    /// endpoint forces the next label onto an inner arc, and every arc past
    /// the outer whorl of its shell is forced this way.
    fn check_whorls(&self) -> std::result::Result<(), Violation> {
        let total = self.total_labels();
        let mut at = vec![None; total + 2];
        for (r, s) in self.shells.iter().enumerate() {
            for a in &s.arcs {
                at[a.label] = Some((r, *a));
            }
        }
        let mut forced = vec![false; total + 2];
        for b in 1..=total {
            let (rb, bb) = at[b].expect("labels checked");
            if !bb.is_proper() {
                continue;
            }
            for (r, s) in self.shells.iter().enumerate() {
                if r == rb {
                    continue;
                }
                let Some(aa) = s.active_at(b - 1).filter(|x| x.is_proper()) else { continue };
                if aa.left == bb.left && aa.right != bb.right {
                    let m = aa.right.min(bb.right);
                    let target = if aa.right < bb.right { r } else { rb };
                    let ok = matches!(at.get(b + 1), Some(Some((rc, c)))
                        if *rc == target && c.right == m && bb.left < c.left && c.left <= m && c.orient != Orient::Loop);
                    if !ok {
                        return violation(4, format!("{bb} meets {aa} at its left end but label {} is not the inner arc", b + 1));
                    }
                    forced[b + 1] = true;
                }
                if aa.right == bb.right && aa.left != bb.left {
                    let x = aa.left.max(bb.left);
                    let target = if aa.left > bb.left { r } else { rb };
                    let ok = matches!(at.get(b + 1), Some(Some((rc, c)))
                        if *rc == target && c.left == x && x <= c.right && c.right < bb.right && c.orient != Orient::Loop);
                    if !ok {
                        return violation(5, format!("{bb} meets {aa} at its right end but label {} is not the inner arc", b + 1));
                    }
                    forced[b + 1] = true;
                }
            }
        }
        for (r, s) in self.shells.iter().enumerate() {
            for a in s.arcs.iter().skip(2) {
                if !forced[a.label] {
                    return violation(4, format!("inner arc {a} of shell {} has no conflicting outer whorl", r + 1));
                }
            }
        }
        Ok(())
    }

    /// Semi-strict tableau: dropping every arc that is immediately followed by
    /// a smaller conflicting arc of the same orientation, and relabeling,
    /// leaves a shell tableau.
    pub fn check_semi_strict(&self) -> std::result::Result<(), Violation> {
        self.check_basic()?;
        self.reduced().check()
    }

    pub fn is_semi_strict(&self) -> bool {
        self.check_semi_strict().is_ok()
    }

    fn reduced(&self) -> ShellTableau {
        let drop: BTreeSet<usize> = self
            .shells
            .iter()
            .flat_map(|s| s.consecutive_conflicts())
            .map(|a| a.label)
            .collect();
        let mut keep: Vec<(usize, LabeledArc)> = self
            .shells
            .iter()
            .enumerate()
            .flat_map(|(r, s)| s.arcs.iter().map(move |a| (r, *a)))
            .filter(|(_, a)| !drop.contains(&a.label))
            .collect();
        keep.sort_by_key(|(_, a)| a.label);
        let mut shells = vec![Vec::new(); self.shells.len()];
        for (new, (r, mut a)) in keep.into_iter().enumerate() {
            a.label = new + 1;
            shells[r].push(a);
        }
        ShellTableau::new(self.n, shells.into_iter().map(LabeledShell::new).collect())
    }
}

impl fmt::Display for ShellTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (r, s) in self.shells.iter().enumerate() {
            if r > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (j, a) in s.arcs.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("}")?;
        }
        f.write_str(")")
    }
}

pub fn is_shell_tableau(t: &ShellTableau) -> std::result::Result<(), Violation> {
    t.check()
}

pub fn shape_at(a: usize, t: &ShellTableau) -> Result<SetPartition> {
    t.shape_at(a)
}

/// Smiles inserted by one restriction step of a semi-strict expansion.
#[derive(Clone, Debug)]
struct Slot {
    shell: usize,
    /// label of the smile the new arcs precede
    before: usize,
    left: usize,
    /// candidate right endpoints, decreasing
    candidates: Vec<usize>,
}

struct Builder {
    n: usize,
    shells: Vec<Vec<LabeledArc>>,
    total: usize,
    slots: Vec<Slot>,
}

impl Builder {
    /// The shell whose newest arc is `arc`, whichever way it is drawn.
    fn active_shell(&self, arc: Arc) -> Result<usize> {
        self.shells
            .iter()
            .position(|s| s.last().is_some_and(|a| a.is_proper() && a.arc() == arc))
            .ok_or_else(|| Error::InvalidPath(format!("no shell ends in {arc}")))
    }

    fn restrict_step(&mut self, lambda: &SetPartition, mu: &SetPartition) -> Result<()> {
        let n = self.n;
        let mu = mu.regrounded(n)?;
        if lambda.arcs() == mu.arcs() {
            self.total += 1;
            self.shells.push(vec![LabeledArc::lp(n, self.total)]);
            return Ok(());
        }
        let frowns = arcset::difference(lambda.arcs(), mu.arcs());
        let smiles = arcset::difference(mu.arcs(), lambda.arcs());
        let sh = is_shell(&frowns, &smiles, n)
            .filter(|sh| sh.anchor.right == n)
            .ok_or_else(|| Error::InvalidPath(format!("{{{lambda}}} -> {{{mu}}} is not a restriction move")))?;
        let common = arcset::intersection(lambda.arcs(), mu.arcs());
        let t = sh.s();
        for s in 0..t {
            let f = sh.frowns[s];
            let end = sh.smiles.get(s).map_or(f.left, |m| m.right);
            let r = self.active_shell(f)?;
            let label = self.total + s + 1;
            self.shells[r].push(LabeledArc::smile(f.left, end, label));
            let mut candidates: Vec<usize> = common
                .iter()
                .filter(|c| c.left < f.left && f.left < c.right && c.right < f.right)
                .filter(|c| !(c.right < end))
                .map(|c| c.right)
                .collect();
            candidates.sort_unstable_by(|a, b| b.cmp(a));
            if !candidates.is_empty() {
                self.slots.push(Slot { shell: r, before: label, left: f.left, candidates });
            }
        }
        self.total += t + 1;
        self.shells.push(vec![LabeledArc::lp(n, self.total)]);
        Ok(())
    }

    fn induce_step(&mut self, mu: &SetPartition, lambda: &SetPartition) -> Result<()> {
        let n = self.n;
        let mu = mu.regrounded(n)?;
        if lambda.arcs() == mu.arcs() {
            return Ok(());
        }
        let frowns = arcset::difference(lambda.arcs(), mu.arcs());
        let smiles = arcset::difference(mu.arcs(), lambda.arcs());
        let sh = is_shell(&frowns, &smiles, n)
            .filter(|sh| sh.anchor.right == n)
            .ok_or_else(|| Error::InvalidPath(format!("{{{mu}}} -> {{{lambda}}} is not an induction move")))?;
        let last = self.shells.last_mut().ok_or_else(|| Error::InvalidPath("induction before restriction".into()))?;
        match last.as_slice() {
            [only] if only.orient == Orient::Loop => {
                last[0] = LabeledArc::frown(sh.anchor.left, n, only.label);
            }
            _ => return Err(Error::InvalidPath("the newest shell is not a placeholder".into())),
        }
        for (r, m) in sh.smiles.iter().enumerate() {
            let x = self.active_shell(*m)?;
            let arc = match sh.frowns.get(r + 1) {
                Some(f) => LabeledArc::frown(f.left, f.right, self.total + r + 1),
                None => LabeledArc::frown(m.right, m.right, self.total + r + 1),
            };
            self.shells[x].push(arc);
        }
        self.total += sh.smiles.len();
        Ok(())
    }

    fn finish(self) -> (ShellTableau, Vec<Slot>) {
        let shells = self.shells.into_iter().map(LabeledShell::new).collect();
        (ShellTableau::new(self.n, shells), self.slots)
    }
}

fn construct(p: &Path) -> Result<(ShellTableau, Vec<Slot>)> {
    p.validate()?;
    let mut b = Builder { n: p.n(), shells: Vec::new(), total: 0, slots: Vec::new() };
    for (h, pair) in p.steps().windows(2).enumerate() {
        if h % 2 == 0 {
            b.restrict_step(&pair[0], &pair[1])?;
        } else {
            b.induce_step(&pair[0], &pair[1])?;
        }
    }
    Ok(b.finish())
}

pub fn path_to_tableau(p: &Path) -> Result<ShellTableau> {
    construct(p).map(|(t, _)| t)
}

/// Reads the path back from label thresholds: the placeholder of shell `j+1`
/// carries the label right after `lambda^{j+1/2}` is complete, and the second
/// label of shell `j+1` (or the next placeholder) comes right after `lambda^{j+1}`.
pub fn tableau_to_path(t: &ShellTableau) -> Result<Path> {
    t.check().map_err(|v| Error::InvalidTableau(v.to_string()))?;
    let n = t.n();
    let k = t.len();
    let mut steps = vec![SetPartition::empty(n)];
    for j in 0..k {
        let shell = &t.shells()[j];
        let opened = shell.min_label();
        steps.push(t.shape_at(opened - 1)?.regrounded(n - 1)?);
        let closed = if j + 1 == k {
            t.total_labels()
        } else if shell.len() >= 2 {
            shell.arcs()[1].label - 1
        } else {
            t.shells()[j + 1].min_label() - 1
        };
        steps.push(t.shape_at(closed)?);
    }
    let p = Path::new(n, steps)?;
    p.validate()?;
    Ok(p)
}

/// All semi-strict tableaux attached to a path; the first is `path_to_tableau(p)`.
pub fn semistrict_expansions(p: &Path) -> Result<Vec<ShellTableau>> {
    let (base, slots) = construct(p)?;
    let bits: usize = slots.iter().map(|s| s.candidates.len()).sum();
    if bits >= usize::BITS as usize {
        return Err(Error::InvalidPath("too many semi-strict expansions to list".into()));
    }
    let mut out = Vec::with_capacity(1 << bits);
    for mask in 0..(1usize << bits) {
        out.push(expand(&base, &slots, mask));
    }
    Ok(out)
}

pub fn semistrict_count(p: &Path) -> Result<u128> {
    let (_, slots) = construct(p)?;
    let bits: u32 = slots.iter().map(|s| s.candidates.len() as u32).sum();
    Ok(1u128 << bits)
}

fn expand(base: &ShellTableau, slots: &[Slot], mask: usize) -> ShellTableau {
    // sort keys: (label of the original arc, 0 for inserted / 1 for original, rank)
    let mut keyed: Vec<((usize, u8, usize), usize, LabeledArc)> = Vec::new();
    for (r, s) in base.shells().iter().enumerate() {
        for a in s.arcs() {
            keyed.push(((a.label, 1, 0), r, *a));
        }
    }
    let mut bit = 0;
    for slot in slots {
        let mut rank = 0;
        for &m in &slot.candidates {
            if mask >> bit & 1 == 1 {
                keyed.push(((slot.before, 0, rank), slot.shell, LabeledArc::smile(slot.left, m, 0)));
                rank += 1;
            }
            bit += 1;
        }
    }
    keyed.sort_by_key(|e| e.0);
    let mut shells = vec![Vec::new(); base.len()];
    for (new, (_, r, mut a)) in keyed.into_iter().enumerate() {
        a.label = new + 1;
        shells[r].push(a);
    }
    ShellTableau::new(base.n(), shells.into_iter().map(LabeledShell::new).collect())
}

/// Semi-strict tableaux of shape `lambda` and length `k`, summed over paths.
pub fn count_semistrict(d: &BratteliDiagram, lambda: &SetPartition, k: usize, exec: Exec) -> Result<u128> {
    let paths: Vec<Path> = d.paths_to(lambda, k)?.collect();
    let counts = exec.map(&paths, |p| semistrict_expansions(p).map(|v| v.len() as u128));
    counts.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpartition::parse_partition;

    fn sp(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    fn arcs(pairs: &[(usize, usize)]) -> Vec<Arc> {
        pairs.iter().map(|&(a, b)| Arc::new(a, b)).collect()
    }

    #[test]
    fn generalized_shell_examples() {
        assert!(is_generalized_shell(&arcs(&[(2, 6)]), &arcs(&[(2, 3), (2, 4)]), 6));
        assert!(is_generalized_shell(&arcs(&[(2, 6), (3, 5), (4, 5)]), &arcs(&[(2, 5)]), 6));
        assert!(is_generalized_shell(&arcs(&[(2, 6), (3, 5)]), &arcs(&[(2, 5), (3, 4)]), 6));
        assert!(!is_generalized_shell(&arcs(&[(2, 6)]), &arcs(&[(3, 5)]), 6));
        assert!(!is_generalized_shell(&arcs(&[(2, 6), (3, 6)]), &[], 6));
        assert!(!is_generalized_shell(&arcs(&[(2, 6), (3, 5)]), &arcs(&[(2, 4)]), 6));
    }

    #[test]
    fn loop_only_tableau() {
        let t = ShellTableau::new(4, vec![LabeledShell::new(vec![LabeledArc::lp(4, 1)])]);
        assert!(t.is_shell_tableau());
        assert_eq!(t.shape().unwrap(), SetPartition::empty(4));
        let p = tableau_to_path(&t).unwrap();
        assert_eq!(p.steps(), &[SetPartition::empty(4), SetPartition::empty(3), SetPartition::empty(4)]);
    }

    #[test]
    fn shape_at_zero_is_empty() {
        let t = ShellTableau::new(3, vec![LabeledShell::new(vec![LabeledArc::frown(1, 3, 1)])]);
        assert_eq!(t.shape_at(0).unwrap(), SetPartition::empty(3));
        assert_eq!(t.shape().unwrap(), sp("1-3", 3));
    }

    #[test]
    fn degenerate_arcs_stay_out_of_shapes() {
        let t = ShellTableau::new(
            3,
            vec![
                LabeledShell::new(vec![LabeledArc::frown(1, 3, 1), LabeledArc::smile(1, 1, 2)]),
                LabeledShell::new(vec![LabeledArc::lp(3, 3)]),
            ],
        );
        assert!(t.is_shell_tableau(), "{:?}", t.check());
        assert_eq!(t.shape().unwrap(), SetPartition::empty(3));
    }
}
