//! A minimal commutative-ring interface and a determinant over it.

pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

/// Leibniz expansion of a square matrix, skipping zero entries.
///
/// Panics if the matrix is not square.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    let mut used = vec![false; n];
    let mut acc = (R::zero(), R::zero());
    expand(m, 0, &mut used, &R::one(), false, &mut acc);
    acc.0.sub(&acc.1)
}

/// Accumulates even permutations into `acc.0` and odd ones into `acc.1`.
fn expand<R: Ring>(m: &[Vec<R>], row: usize, used: &mut [bool], partial: &R, odd: bool, acc: &mut (R, R)) {
    if row == m.len() {
        if odd {
            acc.1 = acc.1.add(partial);
        } else {
            acc.0 = acc.0.add(partial);
        }
        return;
    }
    for col in 0..m.len() {
        if used[col] || m[row][col].is_zero() {
            continue;
        }
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        let next = partial.mul(&m[row][col]);
        expand(m, row + 1, used, &next, odd ^ (inversions % 2 == 1), acc);
        used[col] = false;
    }
}
