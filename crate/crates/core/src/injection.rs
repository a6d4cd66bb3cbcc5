//! The injection `LR^θ_{ρδ} → LR^θ_{μν}` behind Theorem 1, where
//! `λ^{(m)} = λ ∪ (1^{mj}) + (mk)` and
//!
//! * `μ = λ^{(n+i)}`, `ν = λ^{(n)}`,
//! * `ρ = λ^{(n+i+1)}`, `δ = λ^{(n-1)}`.
//!
//! `Y(ρ) ∖ Y(μ)` is `k` cells at the end of row 1 and `j` cells at the
//! bottom of column 1. The image of `T` inserts `k` ones into row 1, which
//! fill the freed row cells, and inserts `λ'₁ + (n-1)j + 1, …, λ'₁ + nj`
//! into column 1. Those values exceed every letter of `δ`, so they sink to
//! the bottom of the column and the column-1 entries of `T` move up by `j`.

use std::collections::HashSet;

use crate::cache::LrCache;
use crate::error::{Error, Result};
use crate::logconcavity::{theorem1_hypotheses, theorem1_term};
use crate::lr::{lr_tableaux, SkewShape, Tableau};
use crate::par::{map_ordered, Execution};
use crate::partition::Partition;

/// One coefficient inequality `c^θ_{μν} ≥ c^θ_{ρδ}` of Theorem 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InjectionPoint {
    pub lambda: Partition,
    pub k: u32,
    pub j: u32,
    pub n: u32,
    pub i: u32,
    pub theta: Partition,
}

/// `(μ, ν, ρ, δ)` for a sequence point `(λ, k, j, n, i)` with `n ≥ 1`.
pub fn injection_shapes(lambda: &Partition, k: u32, j: u32, n: u32, i: u32) -> Result<[Partition; 4]> {
    if n == 0 {
        return Err(Error::InvalidArgument("the sequence index n starts at 1".into()));
    }
    let term = |m: u32| theorem1_term(lambda, k, j, m).ok_or(Error::InvalidFamilyPoint { index: u64::from(m) });
    Ok([term(n + i)?, term(n)?, term(n + i + 1)?, term(n - 1)?])
}

impl InjectionPoint {
    pub fn shapes(&self) -> Result<[Partition; 4]> {
        injection_shapes(&self.lambda, self.k, self.j, self.n, self.i)
    }

    pub fn satisfies_hypotheses(&self) -> bool {
        theorem1_hypotheses(&self.lambda, self.k, self.j)
    }

    /// The values inserted into column 1, in increasing order.
    fn column_values(&self) -> impl Iterator<Item = u32> {
        let base = self.lambda.len() as u32 + (self.n - 1) * self.j;
        (1..=self.j).map(move |t| base + t)
    }
}

/// Maps `T ∈ LR^θ_{ρδ}` to its image in `LR^θ_{μν}`.
pub fn inject(t: &Tableau, pt: &InjectionPoint) -> Result<Tableau> {
    let [mu, nu, rho, delta] = pt.shapes()?;
    if !t.is_lr_tableau(&rho, &delta, &pt.theta) {
        return Err(Error::NotLrInput(format!(
            "expected an LR tableau of shape {}/{rho} and content {delta}",
            pt.theta
        )));
    }
    let (mu_depth, rho_depth) = (mu.transpose().part(0) as usize, rho.transpose().part(0) as usize);
    // column 1 of the image below μ: T's own column-1 entries, then the new
    // values, which exceed every letter of δ
    let mut column: Vec<u32> = t.rows()[rho_depth.max(1).min(t.rows().len())..]
        .iter()
        .map(|row| row[0])
        .collect();
    column.extend(pt.column_values());
    let mut column = column.into_iter();
    let mut rows = Vec::with_capacity(pt.theta.len());
    for (r, source_row) in t.rows().iter().enumerate() {
        let mut row = Vec::with_capacity(source_row.len() + pt.k as usize);
        if r == 0 {
            row.extend(std::iter::repeat_n(1, (rho.part(0) - mu.part(0)) as usize));
        }
        if r >= mu_depth && r > 0 {
            row.push(
                column
                    .next()
                    .ok_or_else(|| Error::InternalNonSemistandard("column 1 ran out of entries".into()))?,
            );
            let skip = usize::from(r >= rho_depth);
            row.extend_from_slice(&source_row[skip..]);
        } else {
            row.extend_from_slice(source_row);
        }
        rows.push(row);
    }
    if column.next().is_some() {
        return Err(Error::InternalNonSemistandard(format!(
            "θ = {} leaves no room for the new column entries",
            pt.theta
        )));
    }
    let shape = SkewShape::new(pt.theta.clone(), mu).expect("μ ⊆ ρ ⊆ θ");
    let image = Tableau::from_rows(shape, rows).map_err(|e| Error::InternalNonSemistandard(e.to_string()))?;
    if !image.is_semistandard() {
        return Err(Error::InternalNonSemistandard(format!("image {:?}", image.rows())));
    }
    debug_assert!(image.has_content(&nu));
    Ok(image)
}

/// Left inverse of [`inject`]: drops the new `1`s from row 1 and the new
/// values from the bottom of column 1.
pub fn uninject(image: &Tableau, pt: &InjectionPoint) -> Result<Tableau> {
    let [mu, _, rho, _] = pt.shapes()?;
    let (mu_depth, rho_depth) = (mu.transpose().part(0) as usize, rho.transpose().part(0) as usize);
    let rows = image.rows();
    let mut column: Vec<u32> = rows[mu_depth.max(1).min(rows.len())..]
        .iter()
        .map(|row| row[0])
        .collect();
    let kept = column.len().saturating_sub(pt.j as usize);
    if !column[kept..].iter().copied().eq(pt.column_values()) {
        return Err(Error::NotLrInput(
            "column 1 does not end with the inserted values".into(),
        ));
    }
    column.truncate(kept);
    let mut column = column.into_iter();
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut row = row.as_slice();
        if r == 0 {
            row = &row[(rho.part(0) - mu.part(0)) as usize..];
        }
        if r >= mu_depth && r > 0 {
            let mut source = Vec::with_capacity(row.len());
            if r >= rho_depth {
                source.extend(column.next());
            }
            source.extend_from_slice(&row[1..]);
            out.push(source);
        } else {
            out.push(row.to_vec());
        }
    }
    let shape = SkewShape::new(pt.theta.clone(), rho)?;
    Tableau::from_rows(shape, out)
}

/// Outcome of the injection for one `θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaCheck {
    pub theta: Partition,
    /// `|LR^θ_{ρδ}|` by cell filling.
    pub source_count: u64,
    /// `|LR^θ_{μν}|` by cell filling.
    pub target_count: u64,
    /// Every image is an LR tableau of shape `θ/μ` and content `ν`.
    pub well_defined: bool,
    pub injective: bool,
    /// `source ≤ target`, and both counts agree with the product expansions.
    pub counts_consistent: bool,
    /// Stripping the inserted cells recovers every source tableau.
    pub left_inverse: bool,
    pub failure: Option<String>,
}

impl ThetaCheck {
    pub fn passed(&self) -> bool {
        self.well_defined && self.injective && self.counts_consistent && self.left_inverse
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionReport {
    pub lambda: Partition,
    pub k: u32,
    pub j: u32,
    pub n: u32,
    pub i: u32,
    pub hypotheses: bool,
    pub shapes: [Partition; 4],
    pub thetas: Vec<ThetaCheck>,
}

impl InjectionReport {
    pub fn passed(&self) -> bool {
        self.thetas.iter().all(ThetaCheck::passed)
    }
}

fn check_theta(pt: &InjectionPoint, shapes: &[Partition; 4], expected: (u64, u64)) -> ThetaCheck {
    let [mu, nu, rho, delta] = shapes;
    let sources = lr_tableaux(rho, delta, &pt.theta);
    let targets: HashSet<Tableau> = lr_tableaux(mu, nu, &pt.theta).into_iter().collect();
    let (source_count, target_count) = (sources.len() as u64, targets.len() as u64);
    let mut check = ThetaCheck {
        theta: pt.theta.clone(),
        source_count,
        target_count,
        well_defined: true,
        injective: true,
        counts_consistent: source_count <= target_count && (source_count, target_count) == expected,
        left_inverse: true,
        failure: None,
    };
    let mut seen = HashSet::new();
    for t in &sources {
        let image = match inject(t, pt) {
            Ok(image) => image,
            Err(e) => {
                check.well_defined = false;
                check.failure.get_or_insert(e.to_string());
                continue;
            }
        };
        if !image.is_lr_tableau(mu, nu, &pt.theta) || !targets.contains(&image) {
            check.well_defined = false;
            check
                .failure
                .get_or_insert(format!("image {:?} is not an LR tableau", image.rows()));
        }
        if uninject(&image, pt).ok().as_ref() != Some(t) {
            check.left_inverse = false;
        }
        if !seen.insert(image) {
            check.injective = false;
        }
    }
    check
}

/// Runs the injection on every `θ` in the support of `s_ρ s_δ`.
pub fn verify_injection(lambda: &Partition, k: u32, j: u32, n: u32, i: u32) -> Result<InjectionReport> {
    verify_injection_with(Execution::Parallel, lambda, k, j, n, i)
}

pub fn verify_injection_with(
    exec: Execution,
    lambda: &Partition,
    k: u32,
    j: u32,
    n: u32,
    i: u32,
) -> Result<InjectionReport> {
    let shapes = injection_shapes(lambda, k, j, n, i)?;
    let [mu, nu, rho, delta] = &shapes;
    let cache = LrCache::global();
    let support: Vec<Partition> = cache.product(rho, delta).iter().map(|(t, _)| t.clone()).collect();
    let thetas = map_ordered(exec, &support, |theta| {
        let pt = InjectionPoint {
            lambda: lambda.clone(),
            k,
            j,
            n,
            i,
            theta: theta.clone(),
        };
        let expected = (cache.coefficient(rho, delta, theta), cache.coefficient(mu, nu, theta));
        check_theta(&pt, &shapes, expected)
    });
    Ok(InjectionReport {
        lambda: lambda.clone(),
        k,
        j,
        n,
        i,
        hypotheses: theorem1_hypotheses(lambda, k, j),
        shapes,
        thetas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shapes_follow_the_index_convention() {
        let [mu, nu, rho, delta] = injection_shapes(&p(&[2, 1]), 2, 2, 1, 0).unwrap();
        assert_eq!(mu, p(&[4, 1, 1, 1]));
        assert_eq!(nu, mu);
        assert_eq!(rho, p(&[6, 1, 1, 1, 1, 1]));
        assert_eq!(delta, p(&[2, 1]));
        assert!(injection_shapes(&p(&[2, 1]), 2, 2, 0, 0).is_err());
    }

    #[test]
    fn spec_points_pass() {
        for (lam, k, j, n, i) in [(&[2, 1][..], 2, 2, 1, 0), (&[2, 2], 2, 2, 1, 0), (&[3], 1, 0, 2, 1)] {
            let report = verify_injection(&p(lam), k, j, n, i).unwrap();
            assert!(report.hypotheses);
            assert!(!report.thetas.is_empty());
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn double_hooks_pass() {
        for a in 1..=3 {
            for m in 0..=2 {
                let mut parts = vec![a];
                parts.extend(std::iter::repeat_n(1, m));
                for (n, i) in [(1, 0), (1, 1), (2, 0)] {
                    assert!(verify_injection(&p(&parts), 1, 1, n, i).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn empty_source_content() {
        // n = 1 and λ = ∅ make δ empty: the only source is the empty filling
        let report = verify_injection(&Partition::empty(), 1, 0, 1, 0).unwrap();
        assert_eq!(report.shapes[3], Partition::empty());
        assert_eq!(report.thetas.len(), 1);
        assert!(report.passed());
    }

    #[test]
    fn trivial_steps_are_the_identity() {
        for lam in [Partition::empty(), p(&[2, 1])] {
            let report = verify_injection(&lam, 0, 0, 1, 1).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn rejects_foreign_tableaux() {
        let pt = InjectionPoint {
            lambda: p(&[1]),
            k: 1,
            j: 1,
            n: 1,
            i: 0,
            theta: p(&[3, 1]),
        };
        let wrong = Tableau::from_rows(SkewShape::straight(p(&[3, 1])), vec![vec![1, 1, 1], vec![2]]).unwrap();
        assert!(matches!(inject(&wrong, &pt), Err(Error::NotLrInput(_))));
    }

    #[test]
    fn below_the_hypothesis_the_map_breaks() {
        let lam = p(&[2, 2]);
        assert!(!theorem1_hypotheses(&lam, 1, 0));
        let broken = (1..=2)
            .flat_map(|n| (0..=1).map(move |i| (n, i)))
            .map(|(n, i)| verify_injection(&lam, 1, 0, n, i).unwrap())
            .find(|r| !r.passed())
            .expect("k < λ₂ should break well-definedness somewhere");
        assert!(broken.thetas.iter().any(|t| !t.well_defined));
    }
}
