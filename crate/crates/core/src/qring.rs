//! Laurent polynomials in `q`, quantum integers and binomials, and the
//! `SL₂` character side: decomposition into irreducibles `[n]` and
//! specialisations of Schur functions at powers of `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{determinant, Ring};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::schur::SchurExpansion;

/// A finite sum `Σ c_e q^e` with integer exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

/// Multiplicities of the irreducible characters `[n]`, `n ≥ 1`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IrrDecomp {
    mults: BTreeMap<u32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        LaurentPoly::from_terms([(exp, c.into())])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.coeffs {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LaurentPoly::from_terms(self.coeffs.iter().map(|(&e, x)| (e, x * c)))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The image under `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_centred(&self) -> bool {
        *self == self.bar()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Exact quotient by top-down elimination of the leading exponent, or
    /// `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (d_lo, d_hi) = (divisor.min_exp()?, divisor.max_exp()?);
        let d_lead = &divisor.coeffs[&d_hi];
        let Some(n_lo) = self.min_exp() else {
            return Some(LaurentPoly::zero());
        };
        let floor = n_lo - d_lo;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(r_hi) = rem.max_exp() {
            let shift = r_hi - d_hi;
            if shift < floor {
                return None;
            }
            let (c, r) = rem.coeffs[&r_hi].div_rem(d_lead);
            if !r.is_zero() {
                return None;
            }
            let term = LaurentPoly::monomial(shift, c);
            rem = rem.sub(&divisor.mul(&term));
            quot = quot.add(&term);
        }
        Some(quot)
    }

    /// Nonnegative, centred, and unimodal on each exponent-parity class.
    pub fn is_unimodal_centred(&self) -> bool {
        if !self.has_nonnegative_coeffs() || !self.is_centred() {
            return false;
        }
        [0i64, 1].into_iter().all(|parity| {
            let class: Vec<(i64, &BigInt)> = self
                .coeffs
                .iter()
                .filter(|(&e, _)| e.rem_euclid(2) == parity)
                .map(|(&e, c)| (e, c))
                .collect();
            let (Some(&(lo, _)), Some(&(hi, _))) = (class.first(), class.last()) else {
                return true;
            };
            // walk the class in steps of two, zero gaps included
            let seq: Vec<BigInt> = (0..=(hi - lo) / 2).map(|t| self.coeff(lo + 2 * t)).collect();
            is_unimodal_sequence(&seq)
        })
    }

    /// Evaluation at an integer value of `q`, for `q ≠ 0`; exact rational
    /// results are returned as `(numerator, denominator)`.
    pub fn eval_at(&self, q: i64) -> (BigInt, BigInt) {
        assert!(q != 0, "Laurent polynomials are not defined at q = 0");
        let lo = self.min_exp().unwrap_or(0).min(0);
        let qb = BigInt::from(q);
        let num: BigInt = self
            .coeffs
            .iter()
            .map(|(&e, c)| c * num_traits::pow(qb.clone(), (e - lo) as usize))
            .sum();
        (num, num_traits::pow(qb, (-lo) as usize))
    }
}

fn is_unimodal_sequence(seq: &[BigInt]) -> bool {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    i + 1 >= seq.len()
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
}

impl IrrDecomp {
    pub fn zero() -> Self {
        IrrDecomp::default()
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut out = IrrDecomp::zero();
        for (n, c) in terms {
            out.add_term(n, c.into());
        }
        out
    }

    fn add_term(&mut self, n: u32, c: BigInt) {
        assert!(n >= 1, "[0] is not an irreducible character");
        if c.is_zero() {
            return;
        }
        let slot = self.mults.entry(n).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.mults.remove(&n);
        }
    }

    pub fn mults(&self) -> &BTreeMap<u32, BigInt> {
        &self.mults
    }

    pub fn mult(&self, n: u32) -> BigInt {
        self.mults.get(&n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    /// All multiplicities non-negative.
    pub fn is_character(&self) -> bool {
        self.mults.values().all(|c| !c.is_negative())
    }

    /// The first negative multiplicity, scanning from the largest `[n]`.
    pub fn negative_witness(&self) -> Option<(u32, BigInt)> {
        self.mults
            .iter()
            .rev()
            .find(|(_, c)| c.is_negative())
            .map(|(&n, c)| (n, c.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, c) in &other.mults {
            out.add_term(n, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&n, c) in &other.mults {
            out.add_term(n, -c);
        }
        out
    }

    /// Product of characters by the Clebsch–Gordan rule.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = IrrDecomp::zero();
        for (&a, ca) in &self.mults {
            for (&b, cb) in &other.mults {
                let scale = ca * cb;
                for (&n, c) in clebsch_gordan(a, b).mults() {
                    out.add_term(n, &scale * c);
                }
            }
        }
        out
    }

    /// `Σ mult(n)·[n]` as a Laurent polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        self.mults
            .iter()
            .fold(LaurentPoly::zero(), |acc, (&n, c)| acc.add(&quantum_int(n).scale(c)))
    }
}

/// `[n] = q^{-n+1} + q^{-n+3} + … + q^{n-1}`, with `[0] = 0`.
pub fn quantum_int(n: u32) -> LaurentPoly {
    let n = i64::from(n);
    LaurentPoly::from_terms((0..n).map(|t| (-n + 1 + 2 * t, 1)))
}

/// `⟦n⟧ = 1 + q + … + q^{n-1}`.
pub fn q_int(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..i64::from(n)).map(|t| (t, 1)))
}

fn check_index(n: i64, k: i64) -> Result<()> {
    if k < 0 || k > n {
        return Err(Error::InvalidIndex { n, k });
    }
    Ok(())
}

/// The exponents `-n+1, -n+3, …, n-1` of the monomials of `[n]`.
pub fn principal_exponents(n: u32) -> Vec<i64> {
    quantum_int(n).coeffs().keys().copied().collect()
}

/// Quantum binomial as `s_{(1^k)}` at the monomials of `[n]`.
pub fn quantum_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    check_index(n, k)?;
    Ok(eval_schur_at_qpowers(
        &Partition::column(k as u32),
        &principal_exponents(n as u32),
    ))
}

/// Quantum binomial as `[n][n-1]⋯[n-k+1] / [k][k-1]⋯[1]`, by exact division.
pub fn quantum_binomial_product(n: i64, k: i64) -> Result<LaurentPoly> {
    check_index(n, k)?;
    let (n, k) = (n as u32, k as u32);
    let num = (n - k + 1..=n).fold(LaurentPoly::one(), |acc, m| acc.mul(&quantum_int(m)));
    let den = (1..=k).fold(LaurentPoly::one(), |acc, m| acc.mul(&quantum_int(m)));
    Ok(num.div_exact(&den).expect("quantum binomials are exact quotients"))
}

/// Quantum binomial as `h_{n-k}` at the monomials of `[k+1]`.
pub fn quantum_binomial_h(n: i64, k: i64) -> Result<LaurentPoly> {
    check_index(n, k)?;
    Ok(eval_schur_at_qpowers(
        &Partition::row((n - k) as u32),
        &principal_exponents(k as u32 + 1),
    ))
}

/// The Gaussian binomial in `1 + q + …` normalisation, recovered from the
/// principal specialisation `s_{(1^k)}(1, q, …, q^{n-1})`.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<LaurentPoly> {
    check_index(n, k)?;
    let exps: Vec<i64> = (0..n).collect();
    let spec = eval_schur_at_qpowers(&Partition::column(k as u32), &exps);
    Ok(spec.shift(-(k * (k - 1) / 2)))
}

/// `[a]·[b] = Σ_{t < min(a,b)} [a + b - 1 - 2t]`.
pub fn clebsch_gordan(a: u32, b: u32) -> IrrDecomp {
    if a == 0 || b == 0 {
        return IrrDecomp::zero();
    }
    IrrDecomp::from_terms((0..a.min(b)).map(|t| (a + b - 1 - 2 * t, 1)))
}

/// Unique expansion in the basis `[n]`, peeling from the top exponent.
pub fn decompose_irr(p: &LaurentPoly) -> Result<IrrDecomp> {
    if !p.is_centred() {
        return Err(Error::NotCentred);
    }
    let mut parities = p.coeffs.keys().map(|e| e.rem_euclid(2));
    if let Some(first) = parities.next() {
        if parities.any(|x| x != first) {
            return Err(Error::NotDecomposable);
        }
    }
    let mut rest = p.clone();
    let mut out = IrrDecomp::zero();
    while let Some(top) = rest.max_exp() {
        debug_assert!(top >= 0);
        let n = (top + 1) as u32;
        let c = rest.coeffs[&top].clone();
        rest = rest.sub(&quantum_int(n).scale(&c));
        out.add_term(n, c);
    }
    Ok(out)
}

/// Whether `p` is the character of an `SL₂` representation. Mixed-parity
/// input is split into its even and odd parts.
pub fn is_character(p: &LaurentPoly) -> bool {
    if !p.is_centred() {
        return false;
    }
    [0i64, 1].into_iter().all(|parity| {
        let part = LaurentPoly::from_terms(
            p.coeffs
                .iter()
                .filter(|(&e, _)| e.rem_euclid(2) == parity)
                .map(|(&e, c)| (e, c.clone())),
        );
        decompose_irr(&part).is_ok_and(|d| d.is_character())
    })
}

/// `h_r(q^{a₁}, …, q^{a_m})` for `r = 0..=max_r`.
fn complete_at(exps: &[i64], max_r: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(); max_r + 1];
    h[0] = LaurentPoly::one();
    for &a in exps {
        // h_r(x₁…x_m) = h_r(x₁…x_{m-1}) + x_m·h_{r-1}(x₁…x_m)
        for r in 1..=max_r {
            let next = h[r].add(&h[r - 1].shift(a));
            h[r] = next;
        }
    }
    h
}

/// `e_r(q^{a₁}, …, q^{a_m})` for `r = 0..=max_r`.
fn elementary_at(exps: &[i64], max_r: usize) -> Vec<LaurentPoly> {
    let mut e = vec![LaurentPoly::zero(); max_r + 1];
    e[0] = LaurentPoly::one();
    for &a in exps {
        for r in (1..=max_r).rev() {
            let next = e[r].add(&e[r - 1].shift(a));
            e[r] = next;
        }
    }
    e
}

/// `s_λ(q^{a₁}, …, q^{a_m})`, zero when `ℓ(λ) > m`. Uses whichever
/// Jacobi–Trudi determinant is smaller.
pub fn eval_schur_at_qpowers(lambda: &Partition, exps: &[i64]) -> LaurentPoly {
    if lambda.len() > exps.len() {
        return LaurentPoly::zero();
    }
    let conj = lambda.transpose();
    let (shape, table) = if lambda.len() <= conj.len() {
        let max_r = lambda.part(0) as usize + lambda.len();
        (lambda, complete_at(exps, max_r))
    } else {
        let max_r = conj.part(0) as usize + conj.len();
        (&conj, elementary_at(exps, max_r))
    };
    let n = shape.len();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let idx = i64::from(shape.part(i)) - i as i64 + j as i64;
                    if idx < 0 {
                        LaurentPoly::zero()
                    } else {
                        table[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(&m)
}

/// Linear extension of [`eval_schur_at_qpowers`].
pub fn eval_expansion_at_qpowers(f: &SchurExpansion, exps: &[i64]) -> LaurentPoly {
    f.terms().iter().fold(LaurentPoly::zero(), |acc, (lam, c)| {
        acc.add(&eval_schur_at_qpowers(lam, exps).scale(c))
    })
}

/// `s_λ(x₁, x₂) ↦ s_λ(q, q⁻¹)` in the basis `[n]`: `s_{(a,b)} ↦ [a-b+1]`.
pub fn sl2_specialize(f: &SchurExpansion) -> IrrDecomp {
    let mut out = IrrDecomp::zero();
    for (lam, c) in f.terms() {
        if lam.len() <= 2 {
            out.add_term(lam.part(0) - lam.part(1) + 1, c.clone());
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    /// `q^-2 + 1 + q^2`; non-unit coefficients print as `c*q^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IrrDecomp {
    /// `[7]+[5]+[3]-[1]`, largest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return f.write_str("0");
        }
        for (i, (&n, c)) in self.mults.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (_, false) => f.write_str("+")?,
                (_, true) => f.write_str("-")?,
            }
            if mag.is_one() {
                write!(f, "[{n}]")?;
            } else {
                write!(f, "{mag}*[{n}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IrrDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
