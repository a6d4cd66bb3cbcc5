//! Necessary conditions for `s_μ s_ν - s_ρ s_δ` to be Schur positive.
//!
//! McNamara: positivity forces `μ ∪ ν ⪯ ρ ∪ δ`. Gutiérrez–Rosas: every `θ`
//! with `c^θ_{μν} > 0` avoids `Out(μ) + Out(ν) + ℕ²`, where cells add as
//! `(i, j) + (l, k) = (i + l - 1, j + k - 1)`.

use crate::cache::LrCache;
use crate::error::{Error, Result};
use crate::logconcavity::{family_term, FamilySpec};
use crate::partition::{dominance_leq, sort_concat, Cell, IntVector, Partition};

/// A finite set of cells, e.g. the outer corners of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerSet {
    cells: Vec<Cell>,
}

impl CornerSet {
    pub fn outer(p: &Partition) -> Self {
        CornerSet {
            cells: p.outer_corners(),
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// `A + B` under [`shifted_sum`], sorted and deduplicated.
    pub fn sum(&self, other: &CornerSet) -> CornerSet {
        let mut cells: Vec<Cell> = self
            .cells
            .iter()
            .flat_map(|&a| other.cells.iter().map(move |&b| shifted_sum(a, b)))
            .collect();
        cells.sort_unstable();
        cells.dedup();
        CornerSet { cells }
    }
}

/// `(i, j) + (l, k) = (i + l - 1, j + k - 1)`; `(1, 1)` is the unit.
pub fn shifted_sum(a: Cell, b: Cell) -> Cell {
    Cell::new(a.row + b.row - 1, a.col + b.col - 1)
}

fn check_sizes(mu: &Partition, nu: &Partition, rho: &Partition, delta: &Partition) -> Result<()> {
    let (left, right) = (mu.size() + nu.size(), rho.size() + delta.size());
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

/// `μ ∪ ν ⪯ ρ ∪ δ`.
pub fn mcnamara_necessary(mu: &Partition, nu: &Partition, rho: &Partition, delta: &Partition) -> Result<bool> {
    check_sizes(mu, nu, rho, delta)?;
    dominance_leq(&mu.union(nu), &rho.union(delta))
}

/// Whether `Y(θ)^c ⊇ Out(μ) + Out(ν) + ℕ²`. The complement of a diagram is
/// an up-set for the shifted sum, so the corner sums suffice.
pub fn gr_containment(theta: &Partition, mu: &Partition, nu: &Partition) -> bool {
    CornerSet::outer(mu)
        .sum(&CornerSet::outer(nu))
        .cells()
        .iter()
        .all(|&c| !theta.contains_cell(c))
}

/// Checks [`gr_containment`] for `μ, ν` against every `θ` in the support of
/// `s_ρ s_δ`. Returns the first failing `θ` in partition order, if any.
pub fn gr_necessary(mu: &Partition, nu: &Partition, rho: &Partition, delta: &Partition) -> Result<Option<Partition>> {
    check_sizes(mu, nu, rho, delta)?;
    let support = LrCache::global().product(rho, delta);
    let mut failing: Vec<&Partition> = support
        .iter()
        .map(|(theta, _)| theta)
        .filter(|theta| !gr_containment(theta, mu, nu))
        .collect();
    failing.sort();
    Ok(failing.first().map(|&t| t.clone()))
}

fn term(spec: &FamilySpec, index: u64) -> Result<Partition> {
    if index >= spec.max_terms as u64 {
        return Err(Error::InvalidFamilyPoint { index });
    }
    family_term(spec, index).ok_or(Error::InvalidFamilyPoint { index })
}

/// `λ^{(n)} ∪ λ^{(n+i)} ⪯ λ^{(n-1)} ∪ λ^{(n+i+1)}` for the family of
/// `spec`, with `n ≥ 1`. Holds whenever `β₁ ≤ λ_{ℓ(λ)}` and `ℓ(α) < ℓ(λ)`.
pub fn prop_mcnamara_family(spec: &FamilySpec, n: u64, i: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("the family index n starts at 1".into()));
    }
    let (mu, nu) = (term(spec, n)?, term(spec, n + i)?);
    let (rho, delta) = (term(spec, n - 1)?, term(spec, n + i + 1)?);
    mcnamara_necessary(&mu, &nu, &rho, &delta)
}

/// `Sort(μ, ν) ⪯ Sort(ρ, δ)` for compositions with `μ_i + ν_i = ρ_i + δ_i`
/// and `ρ_i ≤ μ_i ≤ ν_i ≤ δ_i`. The hypotheses are checked.
pub fn sort_lemma_check(mu: &IntVector, nu: &IntVector, rho: &IntVector, delta: &IntVector) -> Result<bool> {
    let len = mu.len();
    if let Some(index) = [nu.len(), rho.len(), delta.len()].into_iter().find(|&l| l != len) {
        return Err(Error::HypothesisViolated { index: index.min(len) });
    }
    for index in 0..len {
        let (m, n, r, d) = (mu.entry(index), nu.entry(index), rho.entry(index), delta.entry(index));
        if m + n != r + d || !(r <= m && m <= n && n <= d) {
            return Err(Error::HypothesisViolated { index });
        }
    }
    dominance_leq(&sort_concat(mu, nu)?, &sort_concat(rho, delta)?)
}

/// [`gr_necessary`] on `μ = λ+nα`, `ν = λ+(n+i)α` against
/// `ρ = λ+(n-1)α`, `δ = λ+(n+i+1)α`. Only defined for `β = ∅`.
pub fn prop_gr_family(spec: &FamilySpec, n: u64, i: u64) -> Result<Option<Partition>> {
    if !spec.beta.is_empty() {
        return Err(Error::InvalidArgument("the support condition needs β = ∅".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("the family index n starts at 1".into()));
    }
    let (mu, nu) = (term(spec, n)?, term(spec, n + i)?);
    let (rho, delta) = (term(spec, n - 1)?, term(spec, n + i + 1)?);
    if cfg!(debug_assertions) {
        corner_sum_tripwires(&spec.alpha, [&mu, &nu, &rho, &delta]);
    }
    gr_necessary(&mu, &nu, &rho, &delta)
}

/// The two pointwise inequalities that make the family containment work.
fn corner_sum_tripwires(alpha: &IntVector, [mu, nu, rho, delta]: [&Partition; 4]) {
    let len = [mu.len(), nu.len(), rho.len(), delta.len(), alpha.len()]
        .into_iter()
        .max()
        .unwrap_or(0);
    let at = |p: &Partition, j: usize| i64::from(p.part(j));
    for j in 0..len {
        for l in 0..len {
            if alpha.entry(j) >= alpha.entry(l) {
                debug_assert!(at(mu, j) + at(nu, l) >= at(rho, j) + at(delta, l));
            } else {
                debug_assert!(at(mu, j) + at(nu, l) >= at(rho, l) + at(delta, j));
            }
        }
    }
}
