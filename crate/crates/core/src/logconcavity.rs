//! Sequence families and (strong) log-concavity checks in `Λ` and in
//! `ℤ[q, q⁻¹]`.
//!
//! A sequence `f_0, f_1, …` is strongly log-concave up to `i_max` when
//! `f_n f_{n+i} - f_{n-1} f_{n+i+1}` is positive for every `n ≥ 1` and
//! `0 ≤ i ≤ i_max` inside the sequence. Every difference is kept as a
//! certificate so that a caller can recheck it independently.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::cache::LrCache;
use crate::error::{Error, Result};
use crate::par::{map_ordered, Execution};
use crate::partition::{partitions_up_to, IntVector, Partition};
use crate::qring::{decompose_irr, quantum_binomial, IrrDecomp, LaurentPoly};
use crate::schur::{Comparison, SchurExpansion};

/// The family `s_λ, s_{λ∪β+α}, s_{λ∪²β+2α}, …` truncated to `max_terms`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub lambda: Partition,
    pub beta: Partition,
    pub alpha: IntVector,
    pub max_terms: usize,
}

impl FamilySpec {
    pub fn new(lambda: Partition, beta: Partition, alpha: IntVector, max_terms: usize) -> Result<Self> {
        if max_terms < 2 {
            return Err(Error::InvalidArgument(format!(
                "a family needs at least 2 terms, got {max_terms}"
            )));
        }
        Ok(FamilySpec {
            lambda,
            beta,
            alpha,
            max_terms,
        })
    }

    /// `ℓ(α) < ℓ(λ)` and `β₁ ≤ λ_{ℓ(λ)}`, the regime in which the scans
    /// expect positivity.
    pub fn in_tested_regime(&self) -> bool {
        let len = self.lambda.len();
        len > 0 && self.alpha.support_len() < len && self.beta.part(0) <= self.lambda.part(len - 1)
    }

    pub fn terms(&self) -> Vec<Option<Partition>> {
        (0..self.max_terms as u64).map(|n| family_term(self, n)).collect()
    }
}

/// `λ ∪ⁿ β + nα`, or `None` when that vector is not a partition.
pub fn family_term(spec: &FamilySpec, n: u64) -> Option<Partition> {
    let base = spec.lambda.union_n(&spec.beta, n as usize);
    base.add_vector(&spec.alpha.scale(n as i64)).to_partition()
}

/// `λ ∪ (1^{nj}) + (nk)`.
pub fn theorem1_term(lambda: &Partition, k: u32, j: u32, n: u32) -> Option<Partition> {
    let base = lambda.union(&Partition::column(n * j));
    base.add_vector(&IntVector::new(vec![i64::from(n) * i64::from(k)]))
        .to_partition()
}

/// `k = 0 or k ≥ λ₂`, and `j = 0 or j ≥ λ'₂`.
pub fn theorem1_hypotheses(lambda: &Partition, k: u32, j: u32) -> bool {
    (k == 0 || k >= lambda.part(1)) && (j == 0 || j >= lambda.transpose().part(1))
}

pub fn theorem1_terms(lambda: &Partition, k: u32, j: u32, len: usize) -> Vec<Option<Partition>> {
    (0..len as u32).map(|n| theorem1_term(lambda, k, j, n)).collect()
}

/// Missing terms become the zero expansion.
pub fn as_expansions(terms: &[Option<Partition>]) -> Vec<SchurExpansion> {
    terms
        .iter()
        .map(|t| t.clone().map_or_else(SchurExpansion::zero, SchurExpansion::schur))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Fewer than two nonzero terms.
    Vacuous,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Vacuous => "vacuous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Schur(SchurExpansion),
    Irr(IrrDecomp),
    Poly(LaurentPoly),
}

/// The first negative coefficient of a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Schur(Partition, BigInt),
    Irr(u32, BigInt),
    Coefficient(i64, BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub n: usize,
    pub i: usize,
    pub certificate: Certificate,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub i_max: usize,
    pub pairs: Vec<PairRecord>,
}

impl CheckReport {
    fn from_pairs(nonzero_terms: usize, i_max: usize, pairs: Vec<PairRecord>) -> Self {
        let verdict = if nonzero_terms < 2 {
            Verdict::Vacuous
        } else if pairs.iter().any(|p| p.witness.is_some()) {
            Verdict::Fails
        } else {
            Verdict::Holds
        };
        CheckReport { verdict, i_max, pairs }
    }

    pub fn holds(&self) -> bool {
        self.verdict != Verdict::Fails
    }

    pub fn first_failure(&self) -> Option<&PairRecord> {
        self.pairs.iter().find(|p| p.witness.is_some())
    }
}

/// Index pairs `(n, i)` with `n ≥ 1`, `i ≤ i_max` and `n + i + 1 < len`.
fn pair_indices(len: usize, i_max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..len).flat_map(move |n| (0..=i_max).filter(move |i| n + i + 1 < len).map(move |i| (n, i)))
}

/// Strong Schur log-concavity up to `i_max`; `i_max = 0` is plain
/// log-concavity.
pub fn check_strong_schur_lc(terms: &[SchurExpansion], i_max: usize) -> CheckReport {
    check_strong_schur_lc_with(LrCache::global(), terms, i_max)
}

pub fn check_strong_schur_lc_with(cache: &LrCache, terms: &[SchurExpansion], i_max: usize) -> CheckReport {
    let pairs = pair_indices(terms.len(), i_max)
        .map(|(n, i)| {
            let left = terms[n].multiply_with(cache, &terms[n + i]);
            let right = terms[n - 1].multiply_with(cache, &terms[n + i + 1]);
            let diff = left.sub(&right);
            let witness = diff.negative_witness().map(|(p, c)| Witness::Schur(p, c));
            PairRecord {
                n,
                i,
                certificate: Certificate::Schur(diff),
                witness,
            }
        })
        .collect();
    let nonzero = terms.iter().filter(|t| !t.is_zero()).count();
    CheckReport::from_pairs(nonzero, i_max, pairs)
}

/// Recomputes every Schur certificate with fresh LR expansions, bypassing
/// all caches.
pub fn recheck_certificates(terms: &[SchurExpansion], report: &CheckReport) -> bool {
    report.pairs.iter().all(|pair| {
        let (n, i) = (pair.n, pair.i);
        let diff = terms[n]
            .multiply_uncached(&terms[n + i])
            .sub(&terms[n - 1].multiply_uncached(&terms[n + i + 1]));
        pair.certificate == Certificate::Schur(diff)
    })
}

/// Expansion in the basis `[m]` of a centred polynomial, one parity class at
/// a time.
fn decompose_centred(p: &LaurentPoly) -> Result<IrrDecomp> {
    let (even, odd): (Vec<_>, Vec<_>) = p
        .coeffs()
        .iter()
        .map(|(&e, c)| (e, c.clone()))
        .partition(|(e, _)| e.rem_euclid(2) == 0);
    Ok(decompose_irr(&LaurentPoly::from_terms(even))?.add(&decompose_irr(&LaurentPoly::from_terms(odd))?))
}

/// Strong log-concavity in `ℤ[q, q⁻¹]`: every difference must be an `SL₂`
/// character. Fails with [`Error::NotCentred`] if a difference is not
/// invariant under `q ↦ q⁻¹`.
pub fn check_strong_lc_q(terms: &[LaurentPoly], i_max: usize) -> Result<CheckReport> {
    let pairs = pair_indices(terms.len(), i_max)
        .map(|(n, i)| {
            let diff = terms[n].mul(&terms[n + i]).sub(&terms[n - 1].mul(&terms[n + i + 1]));
            let irr = decompose_centred(&diff)?;
            let witness = irr.negative_witness().map(|(m, c)| Witness::Irr(m, c));
            Ok(PairRecord {
                n,
                i,
                certificate: Certificate::Irr(irr),
                witness,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let nonzero = terms.iter().filter(|t| !t.is_zero()).count();
    Ok(CheckReport::from_pairs(nonzero, i_max, pairs))
}

/// Strong `q`-log-concavity: every difference has non-negative coefficients
/// as a plain polynomial.
pub fn check_strong_q_coefficients(terms: &[LaurentPoly], i_max: usize) -> CheckReport {
    let pairs = pair_indices(terms.len(), i_max)
        .map(|(n, i)| {
            let diff = terms[n].mul(&terms[n + i]).sub(&terms[n - 1].mul(&terms[n + i + 1]));
            let witness = diff
                .coeffs()
                .iter()
                .find(|(_, c)| c.is_negative())
                .map(|(&e, c)| Witness::Coefficient(e, c.clone()));
            PairRecord {
                n,
                i,
                certificate: Certificate::Poly(diff),
                witness,
            }
        })
        .collect();
    let nonzero = terms.iter().filter(|t| !t.is_zero()).count();
    CheckReport::from_pairs(nonzero, i_max, pairs)
}

/// `Qbinom(n - tα, k + tβ)` for `t = 0, 1, …` up to `len` terms, stopping at
/// the first invalid index.
pub fn diagonal_terms(n: i64, k: i64, alpha: i64, beta: i64, len: usize) -> Vec<LaurentPoly> {
    (0..len as i64)
        .map_while(|t| quantum_binomial(n - t * alpha, k + t * beta).ok())
        .collect()
}

/// `n ≥ k ≥ 0`, `α ≥ -1`, `β ≥ 0`.
pub fn diagonal_in_conjecture(n: i64, k: i64, alpha: i64, beta: i64) -> bool {
    n >= k && k >= 0 && alpha >= -1 && beta >= 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Unimodality {
    /// `f_0 ≤ … ≤ f_peak ≥ … ≥ f_last`.
    Unimodal {
        peak: usize,
    },
    NotUnimodal,
    /// `f_at` and `f_{at+1}` are incomparable.
    Incomparable {
        at: usize,
    },
}

pub fn sequence_unimodality(terms: &[SchurExpansion]) -> Unimodality {
    let steps: Vec<Comparison> = terms.windows(2).map(|w| w[1].compare(&w[0])).collect();
    if let Some(at) = steps.iter().position(|c| *c == Comparison::Incomparable) {
        return Unimodality::Incomparable { at };
    }
    let rising = steps
        .iter()
        .take_while(|c| matches!(c, Comparison::GreaterOrEqual | Comparison::Equal))
        .count();
    if steps[rising..]
        .iter()
        .all(|c| matches!(c, Comparison::LessOrEqual | Comparison::Equal))
    {
        Unimodality::Unimodal { peak: rising }
    } else {
        Unimodality::NotUnimodal
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture1Bounds {
    pub max_lambda_size: u32,
    pub max_lambda_len: usize,
    pub alpha_min: i64,
    pub alpha_max: i64,
    pub max_beta_size: u32,
    pub max_terms: usize,
    pub i_max: usize,
    /// Also scan `ℓ(α) = ℓ(λ)` and `β₁ > λ_{ℓ(λ)}`.
    pub include_out_of_regime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub spec: FamilySpec,
    pub in_regime: bool,
    pub report: CheckReport,
}

/// Every vector of length `len` with entries in `lo..=hi`, last coordinate
/// varying fastest.
fn vectors_in_box(len: usize, lo: i64, hi: i64) -> Vec<IntVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(IntVector::new).collect()
}

/// Drops trailing zeros.
fn normalise(v: &IntVector) -> IntVector {
    IntVector::new(v.entries()[..v.support_len()].to_vec())
}

/// Family points in degree-ascending order of `λ`.
pub fn conjecture1_points(bounds: &Conjecture1Bounds) -> Vec<FamilySpec> {
    if bounds.max_terms < 2 {
        return Vec::new();
    }
    let mut lambdas: Vec<Partition> = partitions_up_to(bounds.max_lambda_size, bounds.max_lambda_len)
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    lambdas.sort_by(scan_order);
    let betas = partitions_up_to(bounds.max_beta_size, bounds.max_beta_size as usize);
    let mut out = Vec::new();
    for lambda in lambdas {
        let len = lambda.len();
        let alpha_len = if bounds.include_out_of_regime { len } else { len - 1 };
        let last = lambda.part(len - 1);
        for alpha in vectors_in_box(alpha_len, bounds.alpha_min, bounds.alpha_max) {
            for beta in &betas {
                let spec = FamilySpec {
                    lambda: lambda.clone(),
                    beta: beta.clone(),
                    alpha: normalise(&alpha),
                    max_terms: bounds.max_terms,
                };
                if bounds.include_out_of_regime || beta.part(0) <= last {
                    out.push(spec);
                }
            }
        }
    }
    out
}

/// Runs [`check_strong_schur_lc`] on every point of [`conjecture1_points`].
/// Results come back in point order for either execution mode.
pub fn conjecture1_scan(bounds: &Conjecture1Bounds, exec: Execution) -> Vec<ScanPoint> {
    let points = conjecture1_points(bounds);
    map_ordered(exec, &points, |spec| ScanPoint {
        spec: spec.clone(),
        in_regime: spec.in_tested_regime(),
        report: check_strong_schur_lc(&as_expansions(&spec.terms()), bounds.i_max),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjecture2Bounds {
    pub max_n: i64,
    pub alphas: Vec<i64>,
    pub betas: Vec<i64>,
    pub len: usize,
    pub i_max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPoint {
    pub n: i64,
    pub k: i64,
    pub alpha: i64,
    pub beta: i64,
    pub in_conjecture: bool,
    pub report: CheckReport,
}

pub fn conjecture2_scan(bounds: &Conjecture2Bounds, exec: Execution) -> Vec<DiagonalPoint> {
    let mut points = Vec::new();
    for n in 0..=bounds.max_n {
        for k in 0..=n {
            for &alpha in &bounds.alphas {
                for &beta in &bounds.betas {
                    points.push((n, k, alpha, beta));
                }
            }
        }
    }
    map_ordered(exec, &points, |&(n, k, alpha, beta)| {
        let terms = diagonal_terms(n, k, alpha, beta, bounds.len);
        DiagonalPoint {
            n,
            k,
            alpha,
            beta,
            in_conjecture: diagonal_in_conjecture(n, k, alpha, beta),
            report: check_strong_lc_q(&terms, bounds.i_max).expect("quantum binomials are centred"),
        }
    })
}

/// A point `(λ, k, j)` of Theorem 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Theorem1Point {
    pub lambda: Partition,
    pub k: u32,
    pub j: u32,
}

/// All `λ` with `|λ| ≤ max_size`, `ℓ(λ) ≤ max_len`, with `k ∈ {0} ∪
/// [λ₂, λ₂ + spread]` and `j ∈ {0} ∪ [λ'₂, λ'₂ + spread]`.
pub fn theorem1_grid(max_size: u32, max_len: usize, spread: u32) -> Vec<Theorem1Point> {
    let mut lambdas = partitions_up_to(max_size, max_len);
    lambdas.sort_by(scan_order);
    let range = |lo: u32| {
        let mut v: Vec<u32> = std::iter::once(0).chain(lo..=lo + spread).collect();
        v.dedup();
        v
    };
    let mut out = Vec::new();
    for lambda in lambdas {
        let ks = range(lambda.part(1));
        let js = range(lambda.transpose().part(1));
        for &k in &ks {
            for &j in &js {
                out.push(Theorem1Point {
                    lambda: lambda.clone(),
                    k,
                    j,
                });
            }
        }
    }
    out
}

/// Degree-ascending, then reverse lexicographic.
pub fn scan_order(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{gaussian_binomial, quantum_int};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn spec(l: &[u32], b: &[u32], a: &[i64], terms: usize) -> FamilySpec {
        FamilySpec::new(p(l), p(b), IntVector::new(a.to_vec()), terms).unwrap()
    }

    #[test]
    fn family_term_examples() {
        let s = spec(&[3, 3], &[3], &[1, 1], 4);
        assert_eq!(family_term(&s, 2), Some(p(&[5, 5, 3, 3])));
        assert_eq!(family_term(&s, 0), Some(p(&[3, 3])));
        assert_eq!(family_term(&spec(&[3], &[], &[-1], 5), 4), None);
        assert!(FamilySpec::new(p(&[1]), p(&[]), IntVector::new(vec![]), 1).is_err());
    }

    #[test]
    fn theorem1_term_examples() {
        assert_eq!(theorem1_term(&p(&[2, 1]), 1, 1, 1), Some(p(&[3, 1, 1])));
        assert_eq!(theorem1_term(&p(&[2, 1]), 4, 3, 0), Some(p(&[2, 1])));
        assert_eq!(theorem1_term(&p(&[]), 0, 1, 5), Some(Partition::column(5)));
    }

    #[test]
    fn section7_family_fails_at_first_pair() {
        let terms = as_expansions(&spec(&[3, 3], &[3], &[1, 1], 4).terms());
        let report = check_strong_schur_lc(&terms, 1);
        assert_eq!(report.verdict, Verdict::Fails);
        let first = report.first_failure().unwrap();
        assert_eq!((first.n, first.i), (1, 0));
        let Some(Witness::Schur(theta, c)) = &first.witness else {
            panic!("expected a Schur witness");
        };
        assert!(c.is_negative());
        // independent recount of the witness coefficient
        let direct = crate::lr::lr_coefficient(&p(&[4, 4, 3]), &p(&[4, 4, 3]), theta) as i64
            - crate::lr::lr_coefficient(&p(&[3, 3]), &p(&[5, 5, 3, 3]), theta) as i64;
        assert_eq!(BigInt::from(direct), *c);
        assert!(recheck_certificates(&terms, &report));
    }

    #[test]
    fn lambda_example_sequence() {
        let a = SchurExpansion::schur(p(&[2, 1])).scale(&BigInt::from(3));
        let b = SchurExpansion::from_terms([(p(&[3]), 2), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 2)]);
        let terms = vec![a.clone(), b.clone(), b, a];
        assert_eq!(check_strong_schur_lc(&terms, 0).verdict, Verdict::Holds);
        let strong = check_strong_schur_lc(&terms, 1);
        assert_eq!(strong.verdict, Verdict::Fails);
        assert_eq!(
            strong.first_failure().unwrap().witness,
            Some(Witness::Schur(p(&[3, 3]), BigInt::from(-1)))
        );
    }

    #[test]
    fn single_term_is_vacuous() {
        let report = check_strong_schur_lc(&[SchurExpansion::schur(p(&[2]))], 3);
        assert_eq!(report.verdict, Verdict::Vacuous);
        assert!(report.pairs.is_empty());
    }

    #[test]
    fn plain_log_concavity_matches_direct_difference() {
        let terms = as_expansions(&theorem1_terms(&p(&[2, 1]), 1, 1, 4));
        let report = check_strong_schur_lc(&terms, 0);
        for pair in &report.pairs {
            let n = pair.n;
            let direct = terms[n].multiply(&terms[n]).sub(&terms[n - 1].multiply(&terms[n + 1]));
            assert_eq!(pair.certificate, Certificate::Schur(direct));
        }
        assert_eq!(report.pairs.len(), 2);
    }

    #[test]
    fn quantum_examples() {
        let terms: Vec<LaurentPoly> = [1, 3, 5, 1].iter().map(|&m| quantum_int(m)).collect();
        assert_eq!(check_strong_lc_q(&terms, 0).unwrap().verdict, Verdict::Holds);
        let strong = check_strong_lc_q(&terms, 1).unwrap();
        assert_eq!(strong.verdict, Verdict::Fails);
        let failing = strong.first_failure().unwrap();
        assert_eq!(
            failing.certificate,
            Certificate::Irr(IrrDecomp::from_terms([(7, 1), (5, 1), (3, 1), (1, -1)]))
        );
        let ones = vec![LaurentPoly::one(); 3];
        assert_eq!(check_strong_lc_q(&ones, 2).unwrap().verdict, Verdict::Holds);
        let skew = vec![
            LaurentPoly::one(),
            LaurentPoly::monomial(1, 1),
            LaurentPoly::monomial(3, 1),
        ];
        assert_eq!(check_strong_lc_q(&skew, 0), Err(Error::NotCentred));
    }

    #[test]
    fn diagonal_examples() {
        let row: Vec<_> = diagonal_terms(4, 0, 0, 1, 5);
        assert_eq!(row.len(), 5);
        assert_eq!(row[1], quantum_int(4));
        assert_eq!(row[2], quantum_binomial(4, 2).unwrap());
        for t in 0..5 {
            assert_eq!(row[t], row[4 - t]);
        }
        assert_eq!(diagonal_terms(4, 0, 0, 1, 9).len(), 5);
        let col = diagonal_terms(0, 3, -1, 0, 4);
        for (t, term) in col.iter().enumerate() {
            assert_eq!(*term, quantum_binomial(3 + t as i64, 3).unwrap());
        }
        let fib = diagonal_terms(6, 0, 1, 1, 10);
        assert_eq!(fib.len(), 4);
        assert_eq!(fib[3], quantum_binomial(3, 3).unwrap());
    }

    #[test]
    fn unimodality_examples() {
        let s = |v: &[u32]| SchurExpansion::schur(p(v));
        assert_eq!(
            sequence_unimodality(&[SchurExpansion::one(), s(&[1]), s(&[2])]),
            Unimodality::Incomparable { at: 0 }
        );
        assert!(matches!(
            sequence_unimodality(&[s(&[4]), s(&[3, 1]), s(&[2, 2])]),
            Unimodality::Incomparable { .. }
        ));
        let f = s(&[2, 1]);
        assert_eq!(
            sequence_unimodality(&[f.clone(), f.clone(), f]),
            Unimodality::Unimodal { peak: 2 }
        );
        let two = f_scaled(2);
        assert_eq!(
            sequence_unimodality(&[f_scaled(1), two.clone(), f_scaled(1), two]),
            Unimodality::NotUnimodal
        );
    }

    fn f_scaled(c: i64) -> SchurExpansion {
        SchurExpansion::schur(p(&[1])).scale(&BigInt::from(c))
    }

    #[test]
    fn gaussian_columns_are_q_log_concave() {
        for k in 0..=3 {
            let terms: Vec<_> = (0..5).map(|l| gaussian_binomial(k + l, k).unwrap()).collect();
            assert_eq!(check_strong_q_coefficients(&terms, 3).verdict, Verdict::Holds);
        }
        let bad = vec![LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::monomial(0, 2)];
        let report = check_strong_q_coefficients(&bad, 0);
        assert_eq!(
            report.first_failure().unwrap().witness,
            Some(Witness::Coefficient(0, BigInt::from(-1)))
        );
    }

    #[test]
    fn conjecture1_points_respect_regime() {
        let bounds = Conjecture1Bounds {
            max_lambda_size: 4,
            max_lambda_len: 3,
            alpha_min: 0,
            alpha_max: 1,
            max_beta_size: 2,
            max_terms: 3,
            i_max: 1,
            include_out_of_regime: false,
        };
        let pts = conjecture1_points(&bounds);
        assert!(!pts.is_empty());
        assert!(pts.iter().all(FamilySpec::in_tested_regime));
        assert!(pts.windows(2).all(|w| w[0].lambda.size() <= w[1].lambda.size()));
        let wide = conjecture1_points(&Conjecture1Bounds {
            include_out_of_regime: true,
            ..bounds.clone()
        });
        assert!(wide.len() > pts.len());
        assert!(pts.iter().all(|s| wide.contains(s)));
        let empty = Conjecture1Bounds {
            max_lambda_size: 0,
            ..bounds
        };
        assert!(conjecture1_scan(&empty, Execution::Parallel).is_empty());
    }

    #[test]
    fn scan_modes_agree() {
        let bounds = Conjecture1Bounds {
            max_lambda_size: 3,
            max_lambda_len: 2,
            alpha_min: 0,
            alpha_max: 1,
            max_beta_size: 2,
            max_terms: 3,
            i_max: 1,
            include_out_of_regime: true,
        };
        assert_eq!(
            conjecture1_scan(&bounds, Execution::Sequential),
            conjecture1_scan(&bounds, Execution::Parallel)
        );
    }

    #[test]
    fn grid_contents() {
        let grid = theorem1_grid(2, 3, 2);
        let lam = p(&[1, 1]);
        let ks: Vec<u32> = grid
            .iter()
            .filter(|t| t.lambda == lam && t.j == 0)
            .map(|t| t.k)
            .collect();
        assert_eq!(ks, vec![0, 1, 2, 3]);
        assert!(grid.iter().all(|t| theorem1_hypotheses(&t.lambda, t.k, t.j)));
    }
}
