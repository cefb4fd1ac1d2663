//! Shells, shell sets and the restriction/induction branching rules between
//! `U_n` and `U_{n-1}` (embedded as the matrices with zero last column).

use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

use crate::coeff::{CharCombination, Laurent, QMonomial};
use crate::error::{Error, Result};
use crate::setpartition::{arcset, crossing_number, enumerate_partitions, Arc, SetPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Frown,
    Smile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedArc {
    pub left: usize,
    pub right: usize,
    pub orientation: Orientation,
}

/// Frowns `i_r - l_r` for `r = 1..s` and smiles `i_r - l_{r+1}` for
/// `r = 1..s'-1`, with `i_1 < ... < i_s <= l_{s'} < ... < l_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shell {
    pub frowns: Vec<Arc>,
    pub smiles: Vec<Arc>,
    pub n: usize,
    pub anchor: Arc,
}

impl Shell {
    pub fn s(&self) -> usize {
        self.frowns.len()
    }

    pub fn s_prime(&self) -> usize {
        self.smiles.len() + 1
    }

    pub fn width(&self) -> usize {
        self.anchor.right - self.anchor.left
    }

    /// Arcs in spiral order: frown 1, smile 1, frown 2, ...
    pub fn spiral(&self) -> Vec<OrientedArc> {
        let mut out = Vec::new();
        for r in 0..self.s() {
            let f = self.frowns[r];
            out.push(OrientedArc { left: f.left, right: f.right, orientation: Orientation::Frown });
            if let Some(m) = self.smiles.get(r) {
                out.push(OrientedArc { left: m.left, right: m.right, orientation: Orientation::Smile });
            }
        }
        out
    }
}

pub fn is_shell(frowns: &[Arc], smiles: &[Arc], n: usize) -> Option<Shell> {
    let mut frowns = frowns.to_vec();
    let mut smiles = smiles.to_vec();
    frowns.sort_unstable();
    smiles.sort_unstable();
    let s = frowns.len();
    if s == 0 || (smiles.len() != s && smiles.len() + 1 != s) {
        return None;
    }
    if frowns.iter().chain(&smiles).any(|a| a.left == 0 || a.left >= a.right || a.right > n) {
        return None;
    }
    for w in frowns.windows(2) {
        if !(w[0].left < w[1].left && w[0].right > w[1].right) {
            return None;
        }
    }
    for (r, m) in smiles.iter().enumerate() {
        let f = frowns[r];
        if m.left != f.left {
            return None;
        }
        match frowns.get(r + 1) {
            Some(next) => {
                if m.right != next.right {
                    return None;
                }
            }
            None => {
                if m.right >= f.right {
                    return None;
                }
            }
        }
    }
    Some(Shell { anchor: frowns[0], frowns, smiles, n })
}

pub fn whorl_count(sh: &Shell) -> usize {
    (sh.s() + sh.s_prime() - 1).div_ceil(2)
}

fn check_anchor(lambda: &SetPartition, i: usize, l: usize) -> Result<()> {
    if i == 0 || i >= l || l > lambda.n() {
        return Err(Error::BadAnchor { i, l, n: lambda.n() });
    }
    if lambda.has_left(i) {
        return Err(Error::LeftEndpointTaken(i));
    }
    Ok(())
}

/// `lambda` plus the anchor arc, as a raw arc set (it may conflict at `l`).
fn augmented(lambda: &SetPartition, i: usize, l: usize) -> Vec<Arc> {
    arcset::union(lambda.arcs(), &[Arc::new(i, l)])
}

/// The shell decomposition of the symmetric difference of `lambda + i-l`
/// and `mu`, if it is a shell anchored at `i-l`.
pub fn shell_between(lambda: &SetPartition, i: usize, l: usize, mu: &SetPartition) -> Option<Shell> {
    let a = augmented(lambda, i, l);
    let frowns = arcset::difference(&a, mu.arcs());
    let smiles = arcset::difference(mu.arcs(), &a);
    is_shell(&frowns, &smiles, lambda.n()).filter(|sh| sh.anchor == Arc::new(i, l))
}

/// Shell set by the recursive description.
pub fn shell_set(lambda: &SetPartition, i: usize, l: usize) -> Result<Vec<SetPartition>> {
    check_anchor(lambda, i, l)?;
    let mut out = BTreeSet::new();
    shell_set_rec(lambda, i, l, &mut out)?;
    Ok(out.into_iter().collect())
}

fn shell_set_rec(lambda: &SetPartition, i: usize, l: usize, out: &mut BTreeSet<SetPartition>) -> Result<()> {
    out.insert(lambda.clone());
    for k in i + 1..l {
        if !lambda.has_right(k) {
            out.insert(lambda.with_arc(Arc::new(i, k))?);
        }
    }
    for a in lambda.arcs() {
        let (j, k) = (a.left, a.right);
        if i < j && k < l {
            let moved = lambda.without_arc(a).with_arc(Arc::new(i, k))?;
            shell_set_rec(&moved, j, k, out)?;
        }
    }
    Ok(())
}

/// Shell set by scanning every partition of the ground set.
pub fn shell_set_bruteforce(lambda: &SetPartition, i: usize, l: usize) -> Result<Vec<SetPartition>> {
    check_anchor(lambda, i, l)?;
    Ok(enumerate_partitions(lambda.n())
        .filter(|mu| shell_between(lambda, i, l, mu).is_some())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect())
}

pub fn shell_coefficient(lambda: &SetPartition, i: usize, l: usize, mu: &SetPartition) -> Result<QMonomial> {
    check_anchor(lambda, i, l)?;
    if mu.n() != lambda.n() {
        return Err(Error::GroundMismatch(lambda.n(), mu.n()));
    }
    if shell_between(lambda, i, l, mu).is_none() {
        return Err(Error::NotInShellSet {
            lambda: lambda.to_string(),
            mu: mu.to_string(),
            i,
            l,
        });
    }
    let a = augmented(lambda, i, l);
    let common = arcset::intersection(&a, mu.arcs());
    let gone = arcset::difference(&a, mu.arcs());
    let new = arcset::difference(mu.arcs(), &a);
    let eq = crossing_number(&common, &gone) as i64 - crossing_number(&common, &new) as i64;
    QMonomial::new(1, eq, gone.len() as u32)
        .integral(|| format!("shell coefficient of {{{mu}}} in C({{{lambda}}}, {i}-{l})"))
}

/// `chi^lambda (x) chi^{i -x l}` expanded over the shell set.
pub fn tensor_expand_arc(lambda: &SetPartition, i: usize, l: usize) -> Result<CharCombination> {
    let mut out = CharCombination::new(lambda.n());
    for mu in shell_set(lambda, i, l)? {
        let c = shell_coefficient(lambda, i, l, &mu)?;
        out.insert(mu, c)?;
    }
    Ok(out)
}

/// Result of rewriting `chi^{a} (x) chi^{b}` for two arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorRewrite {
    /// No shared endpoint: the product is the supercharacter of both arcs.
    Product(SetPartition),
    /// Shared right endpoint: `chi^{kept} (x) chi^{j -x l}` for the shorter
    /// arc `j-l`, expanded over its shell set.
    RightConflict {
        kept: Arc,
        expanded: Arc,
        expansion: CharCombination,
    },
    /// Shared left endpoint: `chi^{kept} (x) chi^{i x- k}` for the shorter
    /// arc `i-k`. No closed-form expansion is available.
    LeftConflict { kept: Arc, expanded: Arc },
}

pub fn tensor_pair(arc1: Arc, arc2: Arc, n: usize) -> Result<TensorRewrite> {
    if arc1 == arc2 {
        return Err(Error::IdenticalArcs(arc1.to_string(), arc2.to_string()));
    }
    for a in [arc1, arc2] {
        if a.left == 0 || a.left >= a.right || a.right > n {
            return Err(Error::OutOfRange { left: a.left, right: a.right, n });
        }
    }
    let (long, short) = if arc1.dim() >= arc2.dim() { (arc1, arc2) } else { (arc2, arc1) };
    if arc1.right == arc2.right {
        let kept = SetPartition::new(n, [long])?;
        let expansion = tensor_expand_arc(&kept, short.left, short.right)?;
        Ok(TensorRewrite::RightConflict { kept: long, expanded: short, expansion })
    } else if arc1.left == arc2.left {
        Ok(TensorRewrite::LeftConflict { kept: long, expanded: short })
    } else {
        Ok(TensorRewrite::Product(SetPartition::new(n, [arc1, arc2])?))
    }
}

/// `Res^{U_n}_{U_{n-1}} chi^lambda`, over `n - 1` nodes.
pub fn restrict(lambda: &SetPartition) -> Result<CharCombination> {
    let n = lambda.n();
    if n == 0 {
        return Err(Error::GroundTooSmall(n));
    }
    let Some(last) = lambda.arc_into(n) else {
        return Ok(CharCombination::single(lambda.regrounded(n - 1)?, QMonomial::ONE));
    };
    let base = lambda.without_arc(&last);
    let mut out = CharCombination::new(n - 1);
    for mu in shell_set(&base, last.left, n)? {
        let c = restriction_coefficient(lambda, &mu)?;
        out.insert(mu.regrounded(n - 1)?, c)?;
    }
    Ok(out)
}

/// `c^lambda_mu` for `mu` on the same `n` nodes, `mu` in the shell set.
fn restriction_coefficient(lambda: &SetPartition, mu: &SetPartition) -> Result<QMonomial> {
    let common = arcset::intersection(lambda.arcs(), mu.arcs());
    let gone = arcset::difference(lambda.arcs(), mu.arcs());
    let new = arcset::difference(mu.arcs(), lambda.arcs());
    let eq = crossing_number(&common, &gone) as i64 - crossing_number(&common, &new) as i64;
    QMonomial::new(1, eq, gone.len() as u32)
        .integral(|| format!("restriction coefficient of {{{mu}}} in {{{lambda}}}"))
}

/// Restriction of a single-arc character, straight from the reattachment rule.
pub fn restrict_arc(i: usize, l: usize, n: usize) -> Result<CharCombination> {
    if i == 0 || i >= l || l > n {
        return Err(Error::BadAnchor { i, l, n });
    }
    let mut out = CharCombination::new(n - 1);
    if l != n {
        out.insert(SetPartition::new(n - 1, [Arc::new(i, l)])?, QMonomial::ONE)?;
        return Ok(out);
    }
    let t = QMonomial::t_pow(1);
    out.insert(SetPartition::empty(n - 1), t)?;
    for k in i + 1..l {
        out.insert(SetPartition::new(n - 1, [Arc::new(i, k)])?, t)?;
    }
    Ok(out)
}

/// `d^lambda_mu` for `lambda` on `n` nodes and `mu` on `n - 1` nodes.
pub fn induction_coefficient(lambda: &SetPartition, mu: &SetPartition) -> Result<QMonomial> {
    let n = lambda.n();
    if mu.n() + 1 != n {
        return Err(Error::GroundMismatch(n - 1, mu.n()));
    }
    let mu_n = mu.regrounded(n)?;
    let Some(last) = lambda.arc_into(n) else {
        return Ok(if lambda.arcs() == mu.arcs() { QMonomial::ONE } else { QMonomial::ZERO });
    };
    let base = lambda.without_arc(&last);
    if shell_between(&base, last.left, n, &mu_n).is_none() {
        return Ok(QMonomial::ZERO);
    }
    induction_value(lambda, &mu_n)
}

fn induction_value(lambda: &SetPartition, mu_n: &SetPartition) -> Result<QMonomial> {
    let common = arcset::intersection(lambda.arcs(), mu_n.arcs());
    let gone = arcset::difference(lambda.arcs(), mu_n.arcs());
    let new = arcset::difference(mu_n.arcs(), lambda.arcs());
    let eq = crossing_number(&new, &common) as i64 - crossing_number(&gone, &common) as i64;
    QMonomial::new(1, eq, new.len() as u32)
        .integral(|| format!("induction coefficient of {{{lambda}}} from {{{mu_n}}}"))
}

/// `Ind^{U_n}_{U_{n-1}} chi^mu` for `mu` on `n - 1` nodes.
///
/// Candidates are found by running shell moves backwards from `mu`: add the
/// frown `i_1-n`; whenever `i_r` already leaves along `i_r-x` in `mu`, that
/// arc is the smile `i_r-l_{r+1}` and is removed, after which the spiral
/// either stops or continues with a frown `i_{r+1}-l_{r+1}`.
pub fn induce(mu: &SetPartition, n: usize) -> Result<CharCombination> {
    if mu.n() + 1 != n {
        return Err(Error::GroundMismatch(n - 1, mu.n()));
    }
    let mu_n = mu.regrounded(n)?;
    let mut found = BTreeSet::new();
    found.insert(mu_n.clone());
    for i1 in 1..n {
        let mut frowns = vec![Arc::new(i1, n)];
        let mut smiles = Vec::new();
        reverse_spiral(&mu_n, &mut frowns, &mut smiles, &mut found);
    }
    let mut out = CharCombination::new(n);
    for lambda in found {
        let d = if lambda == mu_n {
            QMonomial::ONE
        } else {
            let last = lambda.arc_into(n).expect("candidate ends at n");
            let base = lambda.without_arc(&last);
            debug_assert!(shell_between(&base, last.left, n, &mu_n).is_some());
            induction_value(&lambda, &mu_n)?
        };
        out.insert(lambda, d)?;
    }
    Ok(out)
}

fn reverse_spiral(mu: &SetPartition, frowns: &mut Vec<Arc>, smiles: &mut Vec<Arc>, found: &mut BTreeSet<SetPartition>) {
    let cur = *frowns.last().expect("nonempty");
    let emit = |frowns: &[Arc], smiles: &[Arc], found: &mut BTreeSet<SetPartition>| {
        let kept = arcset::difference(mu.arcs(), &{
            let mut s = smiles.to_vec();
            s.sort_unstable();
            s
        });
        let lambda = SetPartition::new(mu.n(), kept.into_iter().chain(frowns.iter().copied()))
            .expect("reverse shell move keeps a partition");
        found.insert(lambda);
    };
    match mu.arc_from(cur.left) {
        None => emit(frowns, smiles, found),
        Some(out) => {
            if out.right >= cur.right {
                return;
            }
            smiles.push(out);
            emit(frowns, smiles, found);
            for j in cur.left + 1..out.right {
                frowns.push(Arc::new(j, out.right));
                reverse_spiral(mu, frowns, smiles, found);
                frowns.pop();
            }
            smiles.pop();
        }
    }
}

/// Induction by testing every partition of `[n]`; the slow reference.
pub fn induce_bruteforce(mu: &SetPartition, n: usize) -> Result<CharCombination> {
    if mu.n() + 1 != n {
        return Err(Error::GroundMismatch(n - 1, mu.n()));
    }
    let mut out = CharCombination::new(n);
    for lambda in enumerate_partitions(n) {
        let d = induction_coefficient(&lambda, mu)?;
        out.insert(lambda, d)?;
    }
    Ok(out)
}

/// Checks `sum_{i-k in lambda, i<j<k<l} q^{crs(lambda, j-k)} = [crs(lambda, j-l)]_q`.
pub fn q_crossing_identity_check(lambda: &SetPartition, j: usize, l: usize) -> bool {
    let mut lhs = Laurent::zero();
    for a in lambda.arcs() {
        if a.left < j && j < a.right && a.right < l {
            let c = crossing_number(lambda.arcs(), &[Arc::new(j, a.right)]);
            lhs += &Laurent::q_pow(c as i64);
        }
    }
    let c = crossing_number(lambda.arcs(), &[Arc::new(j, l)]);
    // compare lhs * (q - 1) with q^c - 1
    &lhs * &QMonomial::t_pow(1).canonical() == Laurent::q_pow(c as i64) - Laurent::one()
}

/// Memoized restriction and induction, safe to share between threads.
#[derive(Debug, Default)]
pub struct BranchingCache {
    restrictions: RwLock<HashMap<SetPartition, CharCombination>>,
    inductions: RwLock<HashMap<SetPartition, CharCombination>>,
}

impl BranchingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn restrict(&self, lambda: &SetPartition) -> Result<CharCombination> {
        if let Some(hit) = self.restrictions.read().expect("cache lock").get(lambda) {
            return Ok(hit.clone());
        }
        let value = restrict(lambda)?;
        self.restrictions.write().expect("cache lock").insert(lambda.clone(), value.clone());
        Ok(value)
    }

    pub fn induce(&self, mu: &SetPartition) -> Result<CharCombination> {
        if let Some(hit) = self.inductions.read().expect("cache lock").get(mu) {
            return Ok(hit.clone());
        }
        let value = induce(mu, mu.n() + 1)?;
        self.inductions.write().expect("cache lock").insert(mu.clone(), value.clone());
        Ok(value)
    }
}
