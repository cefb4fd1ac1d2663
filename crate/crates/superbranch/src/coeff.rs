//! Exact coefficients `±q^a t^b` with `t = q - 1`, their sums, and
//! supercharacter combinations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::setpartition::SetPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMonomial {
    sign: i8,
    eq: i64,
    et: u32,
}

impl QMonomial {
    pub const ZERO: QMonomial = QMonomial { sign: 0, eq: 0, et: 0 };
    pub const ONE: QMonomial = QMonomial { sign: 1, eq: 0, et: 0 };

    pub fn new(sign: i8, eq: i64, et: u32) -> Self {
        match sign.signum() {
            0 => Self::ZERO,
            s => QMonomial { sign: s, eq, et },
        }
    }

    pub fn q_pow(eq: i64) -> Self {
        Self::new(1, eq, 0)
    }

    pub fn t_pow(et: u32) -> Self {
        Self::new(1, 0, et)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn eq(&self) -> i64 {
        self.eq
    }

    pub fn et(&self) -> u32 {
        self.et
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Guard for values that must be polynomial in `q`.
    pub fn integral(self, context: impl FnOnce() -> String) -> Result<Self> {
        if self.eq < 0 {
            Err(Error::NegativeExponent(context()))
        } else {
            Ok(self)
        }
    }

    pub fn eval(&self, q: u64) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let qb = BigInt::from(q);
        let t = num_traits::pow(BigInt::from(q) - 1, self.et as usize);
        let mut v = BigRational::from_integer(t);
        let qp = num_traits::pow(qb, self.eq.unsigned_abs() as usize);
        if self.eq >= 0 {
            v *= BigRational::from_integer(qp);
        } else {
            v /= BigRational::from_integer(qp);
        }
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Exact integer value; fails when `q` appears with a negative power.
    pub fn eval_int(&self, q: u64) -> Result<BigInt> {
        let v = self.integral(|| self.to_string())?.eval(q);
        Ok(v.to_integer())
    }

    pub fn canonical(&self) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        // (q - 1)^b = sum_k C(b,k) q^k (-1)^(b-k)
        let b = self.et as usize;
        let mut out = BTreeMap::new();
        let mut binom = BigInt::one();
        for k in 0..=b {
            let mut c = binom.clone();
            if (b - k) % 2 == 1 {
                c = -c;
            }
            if self.sign < 0 {
                c = -c;
            }
            out.insert(self.eq + k as i64, c);
            binom = binom * BigInt::from(b - k) / BigInt::from(k + 1);
        }
        Laurent { coeffs: out }
    }
}

impl Mul for QMonomial {
    type Output = QMonomial;

    fn mul(self, rhs: QMonomial) -> QMonomial {
        if self.is_zero() || rhs.is_zero() {
            return QMonomial::ZERO;
        }
        QMonomial {
            sign: self.sign * rhs.sign,
            eq: self.eq + rhs.eq,
            et: self.et + rhs.et,
        }
    }
}

impl Neg for QMonomial {
    type Output = QMonomial;

    fn neg(self) -> QMonomial {
        QMonomial { sign: -self.sign, ..self }
    }
}

pub fn mono_mul(a: QMonomial, b: QMonomial) -> QMonomial {
    a * b
}

/// Renders as `["-"]["t^"b]["*"]["q^"a]` with unit factors dropped.
impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.et {
            0 => {}
            1 => parts.push("t".to_string()),
            b => parts.push(format!("t^{b}")),
        }
        match self.eq {
            0 => {}
            1 => parts.push("q".to_string()),
            a => parts.push(format!("q^{a}")),
        }
        let body = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
        if self.sign < 0 {
            write!(f, "-{body}")
        } else {
            f.write_str(&body)
        }
    }
}

/// Integer Laurent polynomial in `q`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Self::term(BigInt::one(), 0)
    }

    pub fn term(c: BigInt, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Laurent { coeffs }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::term(BigInt::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    fn add_term(&mut self, e: i64, c: &BigInt) {
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn eval(&self, q: u64) -> BigRational {
        let qb = BigRational::from_integer(BigInt::from(q));
        let mut v = BigRational::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 {
                num_traits::pow(qb.clone(), *e as usize)
            } else {
                num_traits::pow(qb.clone(), e.unsigned_abs() as usize).recip()
            };
            v += p * BigRational::from_integer(c.clone());
        }
        v
    }
}

impl From<QMonomial> for Laurent {
    fn from(m: QMonomial) -> Laurent {
        m.canonical()
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl Add for Laurent {
    type Output = Laurent;

    fn add(mut self, rhs: Laurent) -> Laurent {
        self += &rhs;
        self
    }
}

impl Neg for Laurent {
    type Output = Laurent;

    fn neg(self) -> Laurent {
        Laurent { coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for Laurent {
    type Output = Laurent;

    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;

    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for Laurent {
    type Output = Laurent;

    fn mul(self, rhs: Laurent) -> Laurent {
        &self * &rhs
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let unit = abs.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{abs}*q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{abs}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// A finite multiset of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial {
    terms: Vec<QMonomial>,
}

impl QPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, m: QMonomial) {
        if !m.is_zero() {
            self.terms.push(m);
        }
    }

    pub fn terms(&self) -> &[QMonomial] {
        &self.terms
    }

    pub fn canonicalize(&self) -> Laurent {
        let mut out = Laurent::zero();
        for m in &self.terms {
            out += &m.canonical();
        }
        out
    }

    pub fn eval(&self, q: u64) -> BigRational {
        self.terms.iter().map(|m| m.eval(q)).sum()
    }
}

impl FromIterator<QMonomial> for QPolynomial {
    fn from_iter<I: IntoIterator<Item = QMonomial>>(iter: I) -> Self {
        let mut p = QPolynomial::new();
        for m in iter {
            p.push(m);
        }
        p
    }
}

pub fn canonicalize(p: &QPolynomial) -> Laurent {
    p.canonicalize()
}

/// `sum c_mu chi^mu` over partitions of a common ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharCombination {
    n: usize,
    terms: BTreeMap<SetPartition, QMonomial>,
}

impl CharCombination {
    pub fn new(n: usize) -> Self {
        CharCombination { n, terms: BTreeMap::new() }
    }

    pub fn single(sp: SetPartition, c: QMonomial) -> Self {
        let mut out = Self::new(sp.n());
        out.insert(sp, c).expect("fresh combination");
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds a term for a partition not yet present. Zero coefficients are dropped.
    pub fn insert(&mut self, sp: SetPartition, c: QMonomial) -> Result<()> {
        if sp.n() != self.n {
            return Err(Error::GroundMismatch(self.n, sp.n()));
        }
        if c.is_zero() {
            return Ok(());
        }
        if let Some(old) = self.terms.insert(sp.clone(), c) {
            panic!("duplicate term {sp} ({old} and {c})");
        }
        Ok(())
    }

    pub fn get(&self, sp: &SetPartition) -> QMonomial {
        self.terms.get(sp).copied().unwrap_or(QMonomial::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SetPartition, &QMonomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &SetPartition> {
        self.terms.keys()
    }

    pub fn eval(&self, q: u64) -> BTreeMap<SetPartition, BigRational> {
        self.terms.iter().map(|(k, c)| (k.clone(), c.eval(q))).collect()
    }
}
