//! Brute-force group oracle: enumerates `U_n(F_q)` for small `n` and prime
//! `q`, finds superclasses as two-sided `B_n` orbits, and decomposes
//! restricted and induced supercharacters by summing over group elements.
//!
//! Supercharacter values come from the closed formula at each class
//! representative; everything else (class membership, class sizes, the
//! embedding of `U_{n-1}`, conjugation) is computed from matrices.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::branching::{induce, restrict};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::setpartition::{enumerate_partitions, Arc, SetPartition};
use crate::supercharacter::{char_value, inner_product_formula};

/// Largest matrix size the fixed storage holds.
pub const MAX_N: usize = 6;

/// Square matrix over `F_q`, `q` prime, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    n: usize,
    q: u8,
    a: [[u8; MAX_N]; MAX_N],
}

impl FqMatrix {
    pub fn identity(n: usize, q: u8) -> Self {
        assert!(n <= MAX_N);
        let mut a = [[0; MAX_N]; MAX_N];
        for (i, row) in a.iter_mut().enumerate().take(n) {
            row[i] = 1;
        }
        FqMatrix { n, q, a }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.a[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.a[i][j] = v % self.q;
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| if i == j { self.a[i][j] == 1 } else { j > i || self.a[i][j] == 0 }))
    }

    pub fn is_upper_invertible(&self) -> bool {
        (0..self.n).all(|i| self.a[i][i] != 0 && (0..i).all(|j| self.a[i][j] == 0))
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        let (n, q) = (self.n, self.q as u32);
        let mut out = FqMatrix { n, q: self.q, a: [[0; MAX_N]; MAX_N] };
        for i in 0..n {
            for j in i..n {
                let mut s = 0u32;
                for k in i..=j {
                    s += self.a[i][k] as u32 * other.a[k][j] as u32;
                }
                out.a[i][j] = (s % q) as u8;
            }
        }
        out
    }

    /// Inverse of an invertible upper triangular matrix.
    pub fn inverse(&self) -> FqMatrix {
        let (n, q) = (self.n, self.q as u32);
        let inv = |x: u32| -> u32 { (1..q).find(|y| x * y % q == 1).expect("nonzero in a prime field") };
        let mut out = FqMatrix { n, q: self.q, a: [[0; MAX_N]; MAX_N] };
        for j in 0..n {
            out.a[j][j] = inv(self.a[j][j] as u32) as u8;
            for i in (0..j).rev() {
                let mut s = 0u32;
                for k in i + 1..=j {
                    s += self.a[i][k] as u32 * out.a[k][j] as u32;
                }
                let d = inv(self.a[i][i] as u32);
                out.a[i][j] = ((q - s % q) % q * d % q) as u8;
            }
        }
        out
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                f.write_str("/")?;
            }
            for j in 0..self.n {
                write!(f, "{}", self.a[i][j])?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// Upper unitriangular.
    U,
    /// Invertible upper triangular.
    B,
}

fn check_field(q: u64) -> Result<u8> {
    match q {
        2 | 3 => Ok(q as u8),
        _ => Err(Error::UnsupportedField(q)),
    }
}

/// Largest `n` whose group is enumerated.
pub fn table_limit(q: u8) -> usize {
    if q == 2 {
        5
    } else {
        3
    }
}

/// Largest `n` for sums over pairs of group elements.
pub fn full_sum_limit(q: u8) -> usize {
    if q == 2 {
        4
    } else {
        3
    }
}

fn guard(n: usize, q: u8, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::GuardExceeded(format!("{what} needs n <= {limit} at q = {q}, got n = {n}")));
    }
    Ok(())
}

/// Strictly upper positions in row-major order; element codes are base-`q`
/// numbers over these entries, least significant first.
fn positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn group_order(n: usize, q: u8) -> usize {
    (q as usize).pow((n * (n.saturating_sub(1)) / 2) as u32)
}

fn decode(code: usize, n: usize, q: u8, pos: &[(usize, usize)]) -> FqMatrix {
    let mut m = FqMatrix::identity(n, q);
    let mut c = code;
    for &(i, j) in pos {
        m.a[i][j] = (c % q as usize) as u8;
        c /= q as usize;
    }
    m
}

fn encode(m: &FqMatrix, pos: &[(usize, usize)]) -> usize {
    let q = m.q as usize;
    pos.iter().rev().fold(0, |acc, &(i, j)| acc * q + m.a[i][j] as usize)
}

pub fn enumerate_group(n: usize, q: u64, kind: GroupKind) -> Result<Vec<FqMatrix>> {
    let q = check_field(q)?;
    guard(n, q, table_limit(q), "group enumeration")?;
    let pos = positions(n);
    let unipotent: Vec<FqMatrix> = (0..group_order(n, q)).map(|c| decode(c, n, q, &pos)).collect();
    if kind == GroupKind::U {
        return Ok(unipotent);
    }
    let mut diagonals = vec![vec![]];
    for _ in 0..n {
        diagonals = diagonals
            .into_iter()
            .flat_map(|d: Vec<u8>| {
                (1..q).map(move |x| {
                    let mut d = d.clone();
                    d.push(x);
                    d
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for d in &diagonals {
        for u in &unipotent {
            let mut m = *u;
            for (i, &x) in d.iter().enumerate() {
                for j in i..n {
                    m.a[i][j] = (m.a[i][j] as u32 * x as u32 % q as u32) as u8;
                }
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// Superclasses of `U_n(F_q)`.
#[derive(Clone, Debug)]
pub struct SuperclassTable {
    n: usize,
    q: u8,
    pos: Vec<(usize, usize)>,
    class_of: Vec<u32>,
    reps: Vec<SetPartition>,
    sizes: Vec<usize>,
}

pub fn superclasses(n: usize, q: u64) -> Result<SuperclassTable> {
    SuperclassTable::build(n, q)
}

impl SuperclassTable {
    pub fn build(n: usize, q: u64) -> Result<Self> {
        let q = check_field(q)?;
        guard(n, q, table_limit(q), "superclass table")?;
        let pos = positions(n);
        let index: BTreeMap<(usize, usize), usize> = pos.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        let order = group_order(n, q);
        let unset = u32::MAX;
        let mut class_of = vec![unset; order];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let qz = q as usize;
        let digits = |c: usize| -> Vec<u8> {
            let mut c = c;
            (0..pos.len())
                .map(|_| {
                    let d = (c % qz) as u8;
                    c /= qz;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u8]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * qz + x as usize) };
        for start in 0..order {
            if class_of[start] != unset {
                continue;
            }
            let id = reps.len() as u32;
            class_of[start] = id;
            let mut queue = VecDeque::from([start]);
            let mut size = 0;
            let mut found: Vec<SetPartition> = Vec::new();
            while let Some(c) = queue.pop_front() {
                size += 1;
                let x = digits(c);
                if let Some(sp) = zero_one_partition(n, &pos, &x) {
                    found.push(sp);
                }
                let entry = |x: &[u8], i: usize, j: usize| -> u8 { index.get(&(i, j)).map_or(0, |&k| x[k]) };
                let mut next = Vec::new();
                // x -> (1 + e_ij) x adds row j to row i; x -> x (1 + e_ij) adds column i to column j
                for i in 0..n {
                    for j in i + 1..n {
                        let mut y = x.clone();
                        for m in j + 1..n {
                            let k = index[&(i, m)];
                            y[k] = (y[k] + entry(&x, j, m)) % q;
                        }
                        next.push(y);
                        let mut y = x.clone();
                        for m in 0..i {
                            let k = index[&(m, j)];
                            y[k] = (y[k] + entry(&x, m, i)) % q;
                        }
                        next.push(y);
                    }
                }
                if q > 2 {
                    for r in 0..n {
                        for s in 2..q {
                            let mut y = x.clone();
                            for (k, &(i, j)) in pos.iter().enumerate() {
                                if i == r || j == r {
                                    y[k] = ((y[k] as u32 * s as u32) % q as u32) as u8;
                                }
                            }
                            next.push(y);
                        }
                    }
                }
                for y in next {
                    let d = undigits(&y);
                    if class_of[d] == unset {
                        class_of[d] = id;
                        queue.push_back(d);
                    }
                }
            }
            if found.len() != 1 {
                return Err(Error::GuardExceeded(format!(
                    "superclass {id} of U_{n}(F_{q}) has {} zero-one representatives",
                    found.len()
                )));
            }
            reps.push(found.pop().expect("one"));
            sizes.push(size);
        }
        Ok(SuperclassTable { n, q, pos, class_of, reps, sizes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn representatives(&self) -> &[SetPartition] {
        &self.reps
    }

    pub fn class_of_code(&self, code: usize) -> usize {
        self.class_of[code] as usize
    }

    pub fn class_of(&self, g: &FqMatrix) -> usize {
        self.class_of_code(encode(g, &self.pos))
    }

    pub fn class_index(&self, sp: &SetPartition) -> Option<usize> {
        self.reps.iter().position(|r| r == sp)
    }

    pub fn element(&self, code: usize) -> FqMatrix {
        decode(code, self.n, self.q, &self.pos)
    }

    pub fn code(&self, g: &FqMatrix) -> usize {
        encode(g, &self.pos)
    }
}

fn zero_one_partition(n: usize, pos: &[(usize, usize)], x: &[u8]) -> Option<SetPartition> {
    let mut arcs = Vec::new();
    for (k, &(i, j)) in pos.iter().enumerate() {
        match x[k] {
            0 => {}
            1 => arcs.push(Arc::new(i + 1, j + 1)),
            _ => return None,
        }
    }
    SetPartition::new(n, arcs).ok()
}

/// `chi^lambda` on every element of `U_n`, indexed by element code.
pub fn char_function(lambda: &SetPartition, table: &SuperclassTable) -> Result<Vec<i128>> {
    if lambda.n() != table.n() {
        return Err(Error::GroundMismatch(lambda.n(), table.n()));
    }
    let mut per_class = Vec::with_capacity(table.class_count());
    for rep in &table.reps {
        let v = char_value(lambda, rep)?.eval_int(table.q())?;
        per_class.push(i128::try_from(v).expect("small values"));
    }
    Ok(table.class_of.iter().map(|&c| per_class[c as usize]).collect())
}

/// `(1/|G|) sum_g f(g) g(g)`; values are real at the supported fields.
pub fn group_inner_product(f: &[i128], g: &[i128]) -> BigRational {
    assert_eq!(f.len(), g.len());
    let s: i128 = f.iter().zip(g).map(|(a, b)| a * b).sum();
    BigRational::new(BigInt::from(s), BigInt::from(f.len()))
}

fn rational_inner(f: &[BigRational], g: &[i128]) -> BigRational {
    let mut s = BigRational::zero();
    for (a, b) in f.iter().zip(g) {
        s += a * BigRational::from_integer(BigInt::from(*b));
    }
    s / BigRational::from_integer(BigInt::from(f.len()))
}

pub type Decomposition = BTreeMap<SetPartition, BigRational>;

/// `U_n` together with `U_{n-1}` embedded as the matrices with zero last column.
#[derive(Clone, Debug)]
pub struct Oracle {
    g: SuperclassTable,
    h: SuperclassTable,
    /// for each code of `U_{n-1}`, the code of its image in `U_n`
    embed: Vec<usize>,
    /// for each code of `U_n`, the code in `U_{n-1}` when the last column is zero
    project: Vec<Option<usize>>,
}

impl Oracle {
    pub fn new(n: usize, q: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::GroundTooSmall(n));
        }
        let g = SuperclassTable::build(n, q)?;
        let h = SuperclassTable::build(n - 1, q)?;
        let mut project = vec![None; g.order()];
        let mut embed = Vec::with_capacity(h.order());
        for code in 0..h.order() {
            let small = h.element(code);
            let mut big = FqMatrix::identity(n, g.q);
            for i in 0..n - 1 {
                for j in 0..n - 1 {
                    big.a[i][j] = small.a[i][j];
                }
            }
            let c = g.code(&big);
            embed.push(c);
            project[c] = Some(code);
        }
        Ok(Oracle { g, h, embed, project })
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    pub fn q(&self) -> u64 {
        self.g.q()
    }

    pub fn group(&self) -> &SuperclassTable {
        &self.g
    }

    pub fn subgroup(&self) -> &SuperclassTable {
        &self.h
    }

    /// `<Res chi^lambda, chi^mu> / <chi^mu, chi^mu>` over `U_{n-1}`.
    pub fn restrict(&self, lambda: &SetPartition) -> Result<Decomposition> {
        let full = char_function(lambda, &self.g)?;
        let res: Vec<i128> = self.embed.iter().map(|&c| full[c]).collect();
        let mut out = Decomposition::new();
        for mu in enumerate_partitions(self.h.n()) {
            let chi = char_function(&mu, &self.h)?;
            let c = group_inner_product(&res, &chi) / group_inner_product(&chi, &chi);
            if !c.is_zero() {
                out.insert(mu, c);
            }
        }
        Ok(out)
    }

    /// `Ind chi^mu` by summing `chi^mu(x g x^-1)` over all `x`, at every element.
    pub fn induced_function(&self, mu: &SetPartition) -> Result<Vec<BigRational>> {
        guard(self.n(), self.g.q, full_sum_limit(self.g.q), "full induction")?;
        let codes: Vec<usize> = (0..self.g.order()).collect();
        self.induced_at(mu, &codes)
    }

    fn induced_at(&self, mu: &SetPartition, codes: &[usize]) -> Result<Vec<BigRational>> {
        let chi = char_function(mu, &self.h)?;
        let elements: Vec<FqMatrix> = (0..self.g.order()).map(|c| self.g.element(c)).collect();
        let inverses: Vec<FqMatrix> = elements.iter().map(FqMatrix::inverse).collect();
        let h_order = BigInt::from(self.h.order());
        Ok(codes
            .iter()
            .map(|&c| {
                let g = elements[c];
                let mut s = 0i128;
                for (x, xi) in elements.iter().zip(&inverses) {
                    let y = x.mul(&g).mul(xi);
                    if let Some(hc) = self.project[self.g.code(&y)] {
                        s += chi[hc];
                    }
                }
                BigRational::new(BigInt::from(s), h_order.clone())
            })
            .collect())
    }

    /// `SInd chi^mu (g) = |G:H| / |K_g| * sum_{x in K_g} chi^mu(x)`, at every element.
    pub fn superinduced_function(&self, mu: &SetPartition) -> Result<Vec<BigRational>> {
        let chi = char_function(mu, &self.h)?;
        let mut sums = vec![0i128; self.g.class_count()];
        for (hc, &gc) in self.embed.iter().enumerate() {
            sums[self.g.class_of_code(gc)] += chi[hc];
        }
        let index = BigInt::from(self.g.order() / self.h.order());
        let per_class: Vec<BigRational> = sums
            .iter()
            .zip(self.g.sizes())
            .map(|(&s, &k)| BigRational::new(BigInt::from(s) * &index, BigInt::from(k)))
            .collect();
        Ok(self.g.class_of.iter().map(|&c| per_class[c as usize].clone()).collect())
    }

    fn decompose(&self, f: &[BigRational]) -> Result<Decomposition> {
        let mut out = Decomposition::new();
        for lambda in enumerate_partitions(self.n()) {
            let chi = char_function(&lambda, &self.g)?;
            let d = rational_inner(f, &chi) / group_inner_product(&chi, &chi);
            if !d.is_zero() {
                out.insert(lambda, d);
            }
        }
        Ok(out)
    }

    /// Decomposition of `Ind chi^mu`. Beyond the full-sum guard, the induced
    /// character is evaluated only at class representatives and treated as
    /// constant on superclasses.
    pub fn induce(&self, mu: &SetPartition) -> Result<Decomposition> {
        if self.n() <= full_sum_limit(self.g.q) {
            return self.decompose(&self.induced_function(mu)?);
        }
        let rep_codes: Vec<usize> = (0..self.g.class_count())
            .map(|k| {
                let mut m = FqMatrix::identity(self.n(), self.g.q);
                for a in self.g.reps[k].arcs() {
                    m.a[a.left - 1][a.right - 1] = 1;
                }
                self.g.code(&m)
            })
            .collect();
        let at_reps = self.induced_at(mu, &rep_codes)?;
        let f: Vec<BigRational> = self.g.class_of.iter().map(|&c| at_reps[c as usize].clone()).collect();
        self.decompose(&f)
    }

    pub fn superinduce(&self, mu: &SetPartition) -> Result<Decomposition> {
        self.decompose(&self.superinduced_function(mu)?)
    }

    /// `<Ind chi^mu, chi^lambda>_G` and `<chi^mu, Res chi^lambda>_H` by group sums.
    pub fn frobenius_pair(&self, lambda: &SetPartition, mu: &SetPartition) -> Result<(BigRational, BigRational)> {
        let ind = self.induced_function(mu)?;
        let chi_l = char_function(lambda, &self.g)?;
        let left = rational_inner(&ind, &chi_l);
        let res: Vec<i128> = self.embed.iter().map(|&c| chi_l[c]).collect();
        let right = group_inner_product(&char_function(mu, &self.h)?, &res);
        Ok((left, right))
    }
}

pub fn restrict_oracle(lambda: &SetPartition, q: u64) -> Result<Decomposition> {
    Oracle::new(lambda.n(), q)?.restrict(lambda)
}

pub fn induce_oracle(mu: &SetPartition, n: usize, q: u64) -> Result<Decomposition> {
    check_ground(mu, n)?;
    Oracle::new(n, q)?.induce(mu)
}

pub fn superinduce_oracle(mu: &SetPartition, n: usize, q: u64) -> Result<Decomposition> {
    check_ground(mu, n)?;
    Oracle::new(n, q)?.superinduce(mu)
}

fn check_ground(mu: &SetPartition, n: usize) -> Result<()> {
    if mu.n() + 1 != n {
        return Err(Error::GroundMismatch(mu.n(), n - 1));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Orthogonality,
    Restriction,
    Induction,
    Superinduction,
    Frobenius,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] =
        [Suite::Orthogonality, Suite::Restriction, Suite::Induction, Suite::Superinduction, Suite::Frobenius];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Restriction => "restriction",
            Suite::Induction => "induction",
            Suite::Superinduction => "superinduction",
            Suite::Frobenius => "frobenius",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub check: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub n: usize,
    pub q: u64,
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn render(d: &Decomposition) -> String {
    if d.is_empty() {
        return "0".into();
    }
    d.iter().map(|(sp, c)| format!("{{{sp}}}: {c}")).collect::<Vec<_>>().join(", ")
}

fn formula_decomposition(c: &crate::coeff::CharCombination, q: u64) -> Decomposition {
    c.eval(q).into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn check(suite: Suite, what: String, expected: String, actual: String) -> Check {
    Check { suite: suite.name().into(), pass: expected == actual, check: what, expected, actual }
}

/// Runs one suite (or all) at `(n, q)`.
pub fn verify(suite: Suite, n: usize, q: u64, exec: Exec) -> Result<Report> {
    let qq = check_field(q)?;
    guard(n, qq, table_limit(qq), "verification")?;
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let needs_pair = suites.iter().any(|s| *s != Suite::Orthogonality);
    if needs_pair && n < 2 {
        return Err(Error::GroundTooSmall(n));
    }
    if suites.iter().any(|s| matches!(s, Suite::Frobenius | Suite::Superinduction)) {
        guard(n, qq, full_sum_limit(qq), "superinduction and Frobenius suites")?;
    }
    let oracle = if needs_pair { Some(Oracle::new(n, q)?) } else { None };
    let mut checks = Vec::new();
    for s in suites {
        match s {
            Suite::Orthogonality => {
                let table = match &oracle {
                    Some(o) => o.group().clone(),
                    None => SuperclassTable::build(n, q)?,
                };
                checks.push(check(
                    s,
                    "superclass count equals the number of set partitions".into(),
                    enumerate_partitions(n).count().to_string(),
                    table.class_count().to_string(),
                ));
                let lambdas: Vec<SetPartition> = enumerate_partitions(n).collect();
                let chis: Vec<Vec<i128>> =
                    exec.map(&lambdas, |l| char_function(l, &table)).into_iter().collect::<Result<_>>()?;
                let pairs: Vec<(usize, usize)> =
                    (0..lambdas.len()).flat_map(|a| (0..lambdas.len()).map(move |b| (a, b))).collect();
                let rows = exec.map(&pairs, |&(a, b)| -> Result<Check> {
                    let want = inner_product_formula(&lambdas[a], &lambdas[b])?.eval(q);
                    let got = group_inner_product(&chis[a], &chis[b]);
                    Ok(check(s, format!("<chi^{{{}}}, chi^{{{}}}>", lambdas[a], lambdas[b]), want.to_string(), got.to_string()))
                });
                for r in rows {
                    checks.push(r?);
                }
            }
            Suite::Restriction => {
                let o = oracle.as_ref().expect("built");
                let lambdas: Vec<SetPartition> = enumerate_partitions(n).collect();
                let rows = exec.map(&lambdas, |l| -> Result<Check> {
                    let want = formula_decomposition(&restrict(l)?, q);
                    let got = o.restrict(l)?;
                    Ok(check(s, format!("Res chi^{{{l}}}"), render(&want), render(&got)))
                });
                for r in rows {
                    checks.push(r?);
                }
            }
            Suite::Induction => {
                let o = oracle.as_ref().expect("built");
                let mus: Vec<SetPartition> = enumerate_partitions(n - 1).collect();
                let rows = exec.map(&mus, |mu| -> Result<Vec<Check>> {
                    let mut out = Vec::new();
                    let want = formula_decomposition(&induce(mu, n)?, q);
                    let got = o.induce(mu)?;
                    out.push(check(s, format!("Ind chi^{{{mu}}}"), render(&want), render(&got)));
                    if n <= full_sum_limit(qq) {
                        let f = o.induced_function(mu)?;
                        let constant = (0..o.group().order()).all(|c| {
                            let k = o.group().class_of_code(c);
                            let rep = (0..o.group().order()).find(|&d| o.group().class_of_code(d) == k).expect("class");
                            f[c] == f[rep]
                        });
                        out.push(check(
                            s,
                            format!("Ind chi^{{{mu}}} is constant on superclasses"),
                            "true".into(),
                            constant.to_string(),
                        ));
                    }
                    Ok(out)
                });
                for r in rows {
                    checks.extend(r?);
                }
            }
            Suite::Superinduction => {
                let o = oracle.as_ref().expect("built");
                let mus: Vec<SetPartition> = enumerate_partitions(n - 1).collect();
                let rows = exec.map(&mus, |mu| -> Result<Check> {
                    let ind = o.induced_function(mu)?;
                    let sind = o.superinduced_function(mu)?;
                    let same = if ind == sind { "equal" } else { "different" };
                    Ok(check(s, format!("SInd chi^{{{mu}}} = Ind chi^{{{mu}}} pointwise"), "equal".into(), same.into()))
                });
                for r in rows {
                    checks.push(r?);
                }
            }
            Suite::Frobenius => {
                let o = oracle.as_ref().expect("built");
                let pairs: Vec<(SetPartition, SetPartition)> = enumerate_partitions(n)
                    .flat_map(|l| enumerate_partitions(n - 1).map(move |m| (l.clone(), m)))
                    .collect();
                let rows = exec.map(&pairs, |(l, mu)| -> Result<Check> {
                    let (left, right) = o.frobenius_pair(l, mu)?;
                    Ok(check(
                        s,
                        format!("<Ind chi^{{{mu}}}, chi^{{{l}}}> = <chi^{{{mu}}}, Res chi^{{{l}}}>"),
                        right.to_string(),
                        left.to_string(),
                    ))
                });
                for r in rows {
                    checks.push(r?);
                }
            }
            Suite::All => unreachable!(),
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report { n, q, suite: suite.name().into(), pass, checks })
}

/// `1` as a rational, for callers comparing decompositions.
pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setpartition::parse_partition;

    fn sp(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(3, 2, GroupKind::U).unwrap().len(), 8);
        assert_eq!(enumerate_group(4, 2, GroupKind::U).unwrap().len(), 64);
        assert_eq!(enumerate_group(4, 2, GroupKind::B).unwrap().len(), 64);
        assert_eq!(enumerate_group(2, 3, GroupKind::B).unwrap().len(), 12);
        assert!(enumerate_group(6, 2, GroupKind::U).is_err());
        assert!(enumerate_group(3, 4, GroupKind::U).is_err());
        for m in enumerate_group(3, 3, GroupKind::B).unwrap() {
            assert!(m.is_upper_invertible());
            assert_eq!(m.mul(&m.inverse()), FqMatrix::identity(3, 3));
        }
    }

    #[test]
    fn class_counts() {
        let t3 = superclasses(3, 2).unwrap();
        assert_eq!(t3.class_count(), 5);
        let t4 = superclasses(4, 2).unwrap();
        assert_eq!(t4.class_count(), 15);
        assert_eq!(t4.sizes().iter().sum::<usize>(), 64);
        let id = t4.class_of(&FqMatrix::identity(4, 2));
        assert_eq!(t4.sizes()[id], 1);
        assert_eq!(t4.representatives()[id], SetPartition::empty(4));
        assert_eq!(superclasses(3, 3).unwrap().class_count(), 5);
    }

    #[test]
    fn character_functions() {
        let t = superclasses(4, 2).unwrap();
        assert!(char_function(&SetPartition::empty(4), &t).unwrap().iter().all(|&v| v == 1));
        for lambda in enumerate_partitions(4).skip(1) {
            if lambda.is_empty() {
                continue;
            }
            let f = char_function(&lambda, &t).unwrap();
            assert_eq!(f.iter().sum::<i128>(), 0, "{lambda}");
        }
        let f = char_function(&sp("1-3", 3), &superclasses(3, 2).unwrap()).unwrap();
        assert_eq!(group_inner_product(&f, &f), BigRational::one());
    }

    #[test]
    fn induced_trivial() {
        let d = induce_oracle(&SetPartition::empty(3), 4, 2).unwrap();
        let mut want = Decomposition::new();
        want.insert(SetPartition::empty(4), one());
        for i in 1..4 {
            want.insert(sp(&format!("{i}-4"), 4), one());
        }
        assert_eq!(d, want);
    }

    #[test]
    fn guards() {
        assert!(matches!(restrict_oracle(&sp("1-4,2-6,3-5", 6), 2), Err(Error::GuardExceeded(_))));
        assert!(matches!(verify(Suite::All, 5, 2, Exec::Sequential), Err(Error::GuardExceeded(_))));
        assert!(matches!(verify(Suite::Orthogonality, 3, 5, Exec::Sequential), Err(Error::UnsupportedField(5))));
    }
}
