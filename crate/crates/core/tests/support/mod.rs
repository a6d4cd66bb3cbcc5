//! Property checks shared by the property tests and the acceptance runner.
//! Each returns `Err` with the first counterexample.

#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use schurlc::conditions::{gr_containment, sort_lemma_check};
use schurlc::logconcavity::{as_expansions, check_strong_schur_lc, diagonal_terms, theorem1_terms, Verdict};
use schurlc::lr::{enumerate_ssyt, lr_coefficient, lr_product_counts, lr_tableaux, SkewShape};
use schurlc::partition::{dominance_leq, partitions_of, partitions_up_to};
use schurlc::qring::{
    decompose_irr, is_character, quantum_binomial, quantum_binomial_h, quantum_binomial_product, sl2_specialize,
    IrrDecomp, LaurentPoly,
};
use schurlc::schur::{det_expansion, jacobi_trudi_e, jacobi_trudi_h};
use schurlc::{IntVector, Partition, SchurExpansion};

pub type Check = Result<(), String>;
pub type Suite = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}

/// Sparse expansions over partitions of size at most 4.
fn small_expansion() -> impl Strategy<Value = SchurExpansion> {
    let basis = partitions_up_to(4, 4);
    let n = basis.len();
    prop::collection::vec((0..n, -3i64..=3), 0..4)
        .prop_map(move |terms| SchurExpansion::from_terms(terms.into_iter().map(|(i, c)| (basis[i].clone(), c))))
}

pub fn ring_axioms() -> Check {
    runner(64)
        .run(
            &(small_expansion(), small_expansion(), small_expansion()),
            |(f, g, h)| {
                prop_assert_eq!(f.multiply(&g), g.multiply(&f));
                prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
                prop_assert_eq!(f.multiply(&g.add(&h)), f.multiply(&g).add(&f.multiply(&h)));
                prop_assert_eq!(SchurExpansion::one().multiply(&f), f.clone());
                prop_assert!(f.sub(&f).is_zero());
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub fn omega_homomorphism() -> Check {
    let ps = partitions_up_to(6, 6);
    for a in &ps {
        for b in &ps {
            if a > b {
                continue;
            }
            let (f, g) = (SchurExpansion::schur(a.clone()), SchurExpansion::schur(b.clone()));
            let prod = f.multiply(&g);
            ensure(prod.omega() == f.omega().multiply(&g.omega()), || {
                format!("ω(s_{a} s_{b})")
            })?;
            ensure(prod.omega().omega() == prod, || format!("ω² on s_{a} s_{b}"))?;
        }
    }
    Ok(())
}

pub fn restrict_homomorphism() -> Check {
    for d1 in 0..=4 {
        for d2 in 0..=4 {
            for a in partitions_of(d1) {
                for b in partitions_of(d2) {
                    // one homogeneous sum per degree pair keeps this exhaustive over pairs
                    let f = SchurExpansion::schur(a.clone()).add(&SchurExpansion::schur(partitions_of(d1)[0].clone()));
                    let g = SchurExpansion::schur(b.clone());
                    for n in [2, 3] {
                        let lhs = f.multiply(&g).restrict_vars(n);
                        let rhs = f.restrict_vars(n).multiply(&g.restrict_vars(n)).restrict_vars(n);
                        ensure(lhs == rhs, || format!("restrict to {n} on {f} · {g}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn lr_symmetry() -> Check {
    let ps = partitions_up_to(10, 10);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() > 10 || a >= b {
                continue;
            }
            ensure(lr_product_counts(a, b) == lr_product_counts(b, a), || {
                format!("c_{{{a},{b}}} ≠ c_{{{b},{a}}}")
            })?;
        }
    }
    Ok(())
}

fn horizontal_strip(theta: &Partition, mu: &Partition) -> bool {
    theta.contains(mu) && (0..theta.len()).all(|i| theta.part(i + 1) <= mu.part(i))
}

fn vertical_strip(theta: &Partition, mu: &Partition) -> bool {
    theta.contains(mu) && (0..theta.len()).all(|i| theta.part(i) - mu.part(i) <= 1)
}

pub fn pieri_rules() -> Check {
    for mu in partitions_up_to(6, 6) {
        for k in 0..=(8 - mu.size() as u32).min(4) {
            let h = SchurExpansion::schur(mu.clone()).multiply(&SchurExpansion::h(k));
            let e = SchurExpansion::schur(mu.clone()).multiply(&SchurExpansion::e(k));
            let one = BigInt::from(1);
            ensure(
                h.terms().iter().all(|(t, c)| *c == one && horizontal_strip(t, &mu)),
                || format!("h_{k} · s_{mu}"),
            )?;
            ensure(
                e.terms().iter().all(|(t, c)| *c == one && vertical_strip(t, &mu)),
                || format!("e_{k} · s_{mu}"),
            )?;
            // every horizontal strip of size k appears
            let expected = partitions_of(mu.size() as u32 + k)
                .into_iter()
                .filter(|t| horizontal_strip(t, &mu))
                .count();
            ensure(h.len() == expected, || format!("missing strips in h_{k} · s_{mu}"))?;
        }
    }
    Ok(())
}

fn ssyt_count(p: &Partition, n: u32) -> BigInt {
    BigInt::from(enumerate_ssyt(&SkewShape::straight(p.clone()), n).count())
}

pub fn dimension_counts() -> Check {
    let ps = partitions_up_to(5, 5);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() > 8 {
                continue;
            }
            let prod = SchurExpansion::schur(a.clone()).multiply(&SchurExpansion::schur(b.clone()));
            for n in [2, 3] {
                let lhs = ssyt_count(a, n) * ssyt_count(b, n);
                let rhs: BigInt = prod.terms().iter().map(|(t, c)| c * ssyt_count(t, n)).sum();
                ensure(lhs == rhs, || format!("dimension of s_{a} s_{b} in {n} variables"))?;
            }
        }
    }
    Ok(())
}

pub fn omega_compatibility() -> Check {
    let ps = partitions_up_to(5, 5);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() > 8 {
                continue;
            }
            let direct = lr_product_counts(a, b);
            let dual = lr_product_counts(&a.transpose(), &b.transpose());
            ensure(direct.len() == dual.len(), || format!("support of s_{a} s_{b}"))?;
            for (theta, c) in &direct {
                ensure(dual.get(&theta.transpose()) == Some(c), || {
                    format!("c^{theta}_{{{a},{b}}}")
                })?;
            }
        }
    }
    Ok(())
}

pub fn lr_tableaux_predicates() -> Check {
    let ps = partitions_up_to(4, 4);
    for a in &ps {
        for b in &ps {
            for theta in partitions_of((a.size() + b.size()) as u32) {
                let ts = lr_tableaux(a, b, &theta);
                ensure(ts.iter().all(|t| t.is_lr_tableau(a, b, &theta)), || {
                    format!("LR^{theta}_{{{a},{b}}}")
                })?;
                ensure(ts.len() as u64 == lr_coefficient(a, b, &theta), || "count".into())?;
            }
        }
    }
    Ok(())
}

pub fn jacobi_trudi() -> Check {
    for n in 0..=8 {
        for lam in partitions_of(n) {
            ensure(
                det_expansion(&jacobi_trudi_h(&lam)) == SchurExpansion::schur(lam.clone()),
                || format!("h-JT {lam}"),
            )?;
            ensure(
                det_expansion(&jacobi_trudi_e(&lam)) == SchurExpansion::schur(lam.transpose()),
                || format!("e-JT {lam}"),
            )?;
        }
    }
    Ok(())
}

pub fn partition_laws() -> Check {
    for n in 0..=12 {
        for p in partitions_of(n) {
            ensure(p.transpose().transpose() == p, || format!("transpose {p}"))?;
        }
    }
    for n in 0..=8 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                let ab = dominance_leq(a, b).unwrap();
                ensure(ab == dominance_leq(&b.transpose(), &a.transpose()).unwrap(), || {
                    format!("duality {a} {b}")
                })?;
                ensure(!(ab && dominance_leq(b, a).unwrap()) || a == b, || {
                    format!("antisymmetry {a} {b}")
                })?;
                for c in &ps {
                    if ab && dominance_leq(b, c).unwrap() {
                        ensure(dominance_leq(a, c).unwrap(), || format!("transitivity {a} {b} {c}"))?;
                    }
                }
            }
        }
    }
    let ps = partitions_up_to(4, 4);
    for a in &ps {
        for b in &ps {
            ensure(a.union(b) == b.union(a), || "union commutes".into())?;
            ensure(a.union(b).size() == a.size() + b.size(), || "union size".into())?;
            for c in &ps {
                ensure(a.union(b).union(c) == a.union(&b.union(c)), || {
                    "union associates".into()
                })?;
            }
        }
    }
    Ok(())
}

/// Every composition quadruple of length `len` with entries up to `max`
/// satisfying the lemma's hypotheses.
pub fn sort_lemma_exhaustive(len: usize, max: i64) -> Check {
    let columns: Vec<[i64; 4]> = (0..=max)
        .flat_map(|r| (r..=max).flat_map(move |m| (m..=max).map(move |n| (r, m, n))))
        .filter_map(|(r, m, n)| {
            let d = m + n - r;
            (d >= n && d <= max).then_some([m, n, r, d])
        })
        .collect();
    let mut idx = vec![0usize; len];
    loop {
        let pick = |k: usize| IntVector::new(idx.iter().map(|&i| columns[i][k]).collect::<Vec<_>>());
        let (mu, nu, rho, delta) = (pick(0), pick(1), pick(2), pick(3));
        match sort_lemma_check(&mu, &nu, &rho, &delta) {
            Ok(true) => {}
            other => return Err(format!("{mu} {nu} {rho} {delta}: {other:?}")),
        }
        let mut pos = 0;
        while pos < len && idx[pos] + 1 == columns.len() {
            idx[pos] = 0;
            pos += 1;
        }
        if pos == len {
            return Ok(());
        }
        idx[pos] += 1;
    }
}

pub fn sort_lemma_random() -> Check {
    let column = (0i64..=8, 0i64..=8, 0i64..=8).prop_filter_map("hypothesis", |(a, b, c)| {
        let mut v = [a, b, c];
        v.sort_unstable();
        let [r, m, n] = v;
        let d = m + n - r;
        (d <= 8).then_some([m, n, r, d])
    });
    runner(512)
        .run(&prop::collection::vec(column, 1..=4), |cols| {
            let pick = |k: usize| IntVector::new(cols.iter().map(|c| c[k]).collect::<Vec<_>>());
            prop_assert_eq!(sort_lemma_check(&pick(0), &pick(1), &pick(2), &pick(3)), Ok(true));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn gr_theorem(max_total: u64) -> Check {
    let ps = partitions_up_to(max_total as u32, max_total as usize);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() > max_total {
                continue;
            }
            for (theta, c) in lr_product_counts(a, b) {
                ensure(c == 0 || gr_containment(&theta, a, b), || {
                    format!("GR fails for c^{theta}_{{{a},{b}}}")
                })?;
            }
        }
    }
    Ok(())
}

pub fn quantum_binomial_routes() -> Check {
    for n in 0..=12 {
        for k in 0..=n {
            let a = quantum_binomial(n, k).unwrap();
            ensure(a == quantum_binomial_product(n, k).unwrap(), || {
                format!("product route ({n},{k})")
            })?;
            ensure(a == quantum_binomial_h(n, k).unwrap(), || format!("h route ({n},{k})"))?;
            ensure(a == quantum_binomial(n, n - k).unwrap(), || {
                format!("symmetry ({n},{k})")
            })?;
        }
    }
    Ok(())
}

fn centred(class: u8, coeffs: &[i64]) -> LaurentPoly {
    // coeffs[t] sits at exponents ±(class + 2t)
    LaurentPoly::from_terms(coeffs.iter().enumerate().flat_map(|(t, &c)| {
        let e = i64::from(class) + 2 * t as i64;
        if e == 0 {
            vec![(0, c)]
        } else {
            vec![(e, c), (-e, c)]
        }
    }))
}

pub fn decompose_recompose() -> Check {
    let strategy = (0u8..=1, prop::collection::vec(-4i64..=4, 0..6));
    runner(256)
        .run(&strategy, |(class, coeffs)| {
            let p = centred(class, &coeffs);
            let d = decompose_irr(&p).unwrap();
            prop_assert_eq!(d.to_poly(), p);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Character test against unimodality on every centred polynomial of radius
/// at most 6 with coefficients in `0..=3`, then on random signed input.
pub fn character_iff_unimodal() -> Check {
    for code in 0..4usize.pow(7) {
        let digits: Vec<i64> = (0..7).map(|t| ((code / 4usize.pow(t)) % 4) as i64).collect();
        let p = centred(0, &digits[..4]).add(&centred(1, &digits[4..]));
        ensure(is_character(&p) == p.is_unimodal_centred(), || format!("{p}"))?;
    }
    let strategy = (
        prop::collection::vec(-3i64..=3, 0..5),
        prop::collection::vec(-3i64..=3, 0..4),
    );
    runner(512)
        .run(&strategy, |(even, odd)| {
            let p = centred(0, &even).add(&centred(1, &odd));
            prop_assert_eq!(is_character(&p), p.is_unimodal_centred());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn palindromic_rows() -> Check {
    for n in 0..=10 {
        let row = diagonal_terms(n, 0, 0, 1, n as usize + 1);
        ensure(row.len() == n as usize + 1, || format!("row {n} length"))?;
        ensure(row.iter().eq(row.iter().rev()), || format!("row {n} palindromic"))?;
    }
    Ok(())
}

/// ω, two-variable restriction and `(q, q⁻¹)` specialisation carry strong
/// log-concavity of a Theorem 1 family to its images.
pub fn transport(lambda: &Partition, k: u32, j: u32, len: usize, i_max: usize) -> Check {
    let terms = as_expansions(&theorem1_terms(lambda, k, j, len));
    if check_strong_schur_lc(&terms, i_max).verdict == Verdict::Fails {
        return Ok(());
    }
    let omega: Vec<_> = terms.iter().map(SchurExpansion::omega).collect();
    ensure(check_strong_schur_lc(&omega, i_max).verdict != Verdict::Fails, || {
        format!("ω image of {lambda};{k};{j}")
    })?;
    let two: Vec<_> = terms.iter().map(|t| t.restrict_vars(2)).collect();
    for pair in check_strong_schur_lc(&two, i_max).pairs {
        let schurlc::logconcavity::Certificate::Schur(diff) = pair.certificate else {
            unreachable!()
        };
        ensure(diff.restrict_vars(2).is_schur_positive(), || {
            format!("two-variable image of {lambda};{k};{j}")
        })?;
    }
    let sl2: Vec<IrrDecomp> = terms.iter().map(sl2_specialize).collect();
    for n in 1..len {
        for i in 0..=i_max {
            if n + i + 1 >= len {
                continue;
            }
            let diff = sl2[n].mul(&sl2[n + i]).sub(&sl2[n - 1].mul(&sl2[n + i + 1]));
            ensure(diff.is_character(), || {
                format!("SL₂ image of {lambda};{k};{j} at ({n},{i})")
            })?;
        }
    }
    Ok(())
}

/// Every property suite, by name.
pub fn all() -> Vec<Suite> {
    vec![
        ("partition laws", partition_laws),
        ("ring axioms", ring_axioms),
        ("omega homomorphism", omega_homomorphism),
        ("restriction homomorphism", restrict_homomorphism),
        ("LR symmetry", lr_symmetry),
        ("Pieri rules", pieri_rules),
        ("dimension counts", dimension_counts),
        ("omega compatibility", omega_compatibility),
        ("LR tableau predicates", lr_tableaux_predicates),
        ("Jacobi-Trudi", jacobi_trudi),
        ("sort lemma, exhaustive", || {
            sort_lemma_exhaustive(4, 4)?;
            sort_lemma_exhaustive(2, 8)
        }),
        ("sort lemma, random", sort_lemma_random),
        ("quantum binomial routes", quantum_binomial_routes),
        ("decompose and recompose", decompose_recompose),
        ("character iff unimodal", character_iff_unimodal),
        ("palindromic rows", palindromic_rows),
        ("homomorphism transport", || {
            for lam in partitions_up_to(4, 3) {
                transport(&lam, lam.part(1).max(1), lam.transpose().part(1).max(1), 5, 2)?;
            }
            Ok(())
        }),
    ]
}
