//! Symmetric functions in the Schur basis.
//!
//! The quotient `Λ[x₁,…,x_n]` is modelled inside `Λ` by dropping Schur
//! functions with more than `n` rows; see [`SchurExpansion::restrict_vars`].

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{determinant, Ring};
use crate::cache::{compute_product, LrCache};
use crate::error::{Error, Result};
use crate::partition::{degree_revlex, Partition};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero expansion.
    Empty,
    Homogeneous(u64),
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    LessOrEqual,
    GreaterOrEqual,
    Incomparable,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn one() -> Self {
        SchurExpansion::schur(Partition::empty())
    }

    /// The single Schur function `s_λ`.
    pub fn schur(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, BigInt::one());
        SchurExpansion { terms }
    }

    /// `s_{(k)}`.
    pub fn h(k: u32) -> Self {
        SchurExpansion::schur(Partition::row(k))
    }

    /// `s_{(1^k)}`.
    pub fn e(k: u32) -> Self {
        SchurExpansion::schur(Partition::column(k))
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = SchurExpansion::zero();
        for (p, c) in terms {
            out.add_term(p, c.into());
        }
        out
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    /// Terms in serialization order: degree ascending, then reverse lexicographic.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| degree_revlex(a.0, b.0));
        v
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => Degree::Empty,
            Some(d) if sizes.all(|s| s == d) => Degree::Homogeneous(d),
            Some(_) => Degree::Mixed,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return SchurExpansion::zero();
        }
        SchurExpansion {
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// Product through the process-wide LR cache.
    pub fn multiply(&self, other: &Self) -> Self {
        self.multiply_with(LrCache::global(), other)
    }

    pub fn multiply_with(&self, cache: &LrCache, other: &Self) -> Self {
        self.multiply_by(other, |a, b| cache.product(a, b))
    }

    /// Product recomputing every LR expansion from scratch.
    pub fn multiply_uncached(&self, other: &Self) -> Self {
        self.multiply_by(other, compute_product)
    }

    fn multiply_by<F>(&self, other: &Self, product: F) -> Self
    where
        F: Fn(&Partition, &Partition) -> crate::cache::ProductTerms,
    {
        let mut acc: HashMap<Partition, BigInt> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let scale = ca * cb;
                for (theta, c) in product(a, b).iter() {
                    *acc.entry(theta.clone()).or_insert_with(BigInt::zero) += &scale * BigInt::from(*c);
                }
            }
        }
        SchurExpansion {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `s_λ ↦ s_{λ'}`.
    pub fn omega(&self) -> Self {
        SchurExpansion {
            terms: self.terms.iter().map(|(p, c)| (p.transpose(), c.clone())).collect(),
        }
    }

    /// Drops every `s_λ` with `ℓ(λ) > n`.
    pub fn restrict_vars(&self, n: usize) -> Self {
        SchurExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() <= n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_schur_positive(&self) -> bool {
        self.negative_witness().is_none()
    }

    /// The first negative term in serialization order.
    pub fn negative_witness(&self) -> Option<(Partition, BigInt)> {
        self.sorted_terms()
            .into_iter()
            .find(|(_, c)| c.is_negative())
            .map(|(p, c)| (p.clone(), c.clone()))
    }

    /// Classifies `self - other` by the signs of its coefficients.
    pub fn compare(&self, other: &Self) -> Comparison {
        let d = self.sub(other);
        let has_pos = d.terms.values().any(|c| c.is_positive());
        let has_neg = d.terms.values().any(|c| c.is_negative());
        match (has_pos, has_neg) {
            (false, false) => Comparison::Equal,
            (true, false) => Comparison::GreaterOrEqual,
            (false, true) => Comparison::LessOrEqual,
            (true, true) => Comparison::Incomparable,
        }
    }
}

impl Ring for SchurExpansion {
    fn zero() -> Self {
        SchurExpansion::zero()
    }
    fn one() -> Self {
        SchurExpansion::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        SchurExpansion::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        SchurExpansion::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

/// Leibniz expansion of a square matrix with Schur-expansion entries.
pub fn det_expansion(m: &[Vec<SchurExpansion>]) -> SchurExpansion {
    determinant(m)
}

/// `(h_{λ_i - i + j})`, with `h_r = 0` for `r < 0`.
pub fn jacobi_trudi_h(lambda: &Partition) -> Vec<Vec<SchurExpansion>> {
    index_matrix(lambda, SchurExpansion::h)
}

/// `(e_{λ_i - i + j})`, whose determinant is `s_{λ'}`.
pub fn jacobi_trudi_e(lambda: &Partition) -> Vec<Vec<SchurExpansion>> {
    index_matrix(lambda, SchurExpansion::e)
}

fn index_matrix(lambda: &Partition, f: fn(u32) -> SchurExpansion) -> Vec<Vec<SchurExpansion>> {
    let n = lambda.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = i64::from(lambda.part(i)) - i as i64 + j as i64;
                    if idx < 0 {
                        SchurExpansion::zero()
                    } else {
                        f(idx as u32)
                    }
                })
                .collect()
        })
        .collect()
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.sorted_terms().into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c}*{p}")?,
                (0, true) => write!(f, "-{}*{p}", c.abs())?,
                (_, false) => write!(f, " + {c}*{p}")?,
                (_, true) => write!(f, " - {}*{p}", c.abs())?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SchurExpansion {
    type Err = Error;

    /// Parses the `c1*[p1] + c2*[p2] - …` form; a bare `[p]` has coefficient 1.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(SchurExpansion::zero());
        }
        let mut out = SchurExpansion::zero();
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(Error::Parse("empty expansion".into()));
        }
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == compact.len() => (false, rest),
                _ => return Err(Error::Parse(format!("expected a sign in `{s}`"))),
            };
            let close = body
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unterminated partition in `{s}`")))?;
            let term = &body[..=close];
            let (coeff, part) = match term.split_once('*') {
                Some((c, p)) => (
                    c.parse::<BigInt>()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))?,
                    p,
                ),
                None => (BigInt::one(), term),
            };
            let p: Partition = part.parse()?;
            out.add_term(p, if negative { -coeff } else { coeff });
            rest = &body[close + 1..];
        }
        Ok(out)
    }
}
