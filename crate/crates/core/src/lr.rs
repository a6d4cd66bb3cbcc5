//! Skew shapes, semistandard tableaux and the Littlewood–Richardson rule.
//!
//! Two independent enumerations live here. [`lr_tableaux`] fills the cells of
//! a fixed skew shape `θ/μ` one at a time in reverse reading order and is the
//! reference route for single coefficients. [`lr_product_counts`] grows the
//! outer shape one horizontal strip per letter of `ν`, so it never visits
//! shapes with a zero coefficient; it backs the Schur product.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotAPartition(format!("{outer}/{inner} is not a skew shape")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells of the skew diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|i| {
                let lo = self.inner.part(i) as usize + 1;
                let hi = self.outer.part(i) as usize;
                (lo..=hi).map(move |j| Cell::new(i + 1, j))
            })
            .collect()
    }
}

/// A filling of a skew shape by positive integers. Row `r` of `rows` holds the
/// entries of columns `inner_r + 1 ..= outer_r`, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = shape.outer.len();
        let mut rows = rows;
        if rows.len() > n && rows[n..].iter().any(|r| !r.is_empty()) {
            return Err(Error::Parse("too many rows for shape".into()));
        }
        rows.resize(n, Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let width = (shape.outer.part(i) - shape.inner.part(i)) as usize;
            if row.len() != width || row.contains(&0) {
                return Err(Error::Parse(format!("row {} does not fit the shape", i + 1)));
            }
        }
        Ok(Tableau { shape, rows })
    }

    fn from_row_major(shape: &SkewShape, vals: &[u32]) -> Self {
        let mut rows = Vec::with_capacity(shape.outer.len());
        let mut it = vals.iter().copied();
        for i in 0..shape.outer.len() {
            let width = (shape.outer.part(i) - shape.inner.part(i)) as usize;
            rows.push(it.by_ref().take(width).collect());
        }
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        if !self.shape.contains(cell) {
            return None;
        }
        let offset = self.shape.inner.part(cell.row - 1) as usize;
        Some(self.rows[cell.row - 1][cell.col - offset - 1])
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let offset = self.shape.inner.part(i) as usize;
            row.iter()
                .enumerate()
                .map(move |(j, &v)| (Cell::new(i + 1, offset + j + 1), v))
        })
    }

    pub fn is_semistandard(&self) -> bool {
        self.entries().all(|(c, v)| {
            let right_ok = self.get(Cell::new(c.row, c.col + 1)).is_none_or(|r| v <= r);
            let below_ok = self.get(Cell::new(c.row + 1, c.col)).is_none_or(|b| v < b);
            right_ok && below_ok
        })
    }

    /// `content[k-1]` is the number of entries equal to `k`.
    pub fn content(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (_, v) in self.entries() {
            if out.len() < v as usize {
                out.resize(v as usize, 0);
            }
            out[v as usize - 1] += 1;
        }
        out
    }

    /// Whether the content equals the given partition.
    pub fn has_content(&self, nu: &Partition) -> bool {
        let content = self.content();
        content.len() == nu.len() && content.iter().zip(nu.parts()).all(|(a, b)| a == b)
    }

    /// Rows read right to left, top row first.
    pub fn reverse_reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Whether this is a Littlewood–Richardson tableau of shape `θ/μ` and
    /// content `ν`, checked from scratch.
    pub fn is_lr_tableau(&self, mu: &Partition, nu: &Partition, theta: &Partition) -> bool {
        self.shape.inner == *mu
            && self.shape.outer == *theta
            && self.is_semistandard()
            && self.has_content(nu)
            && is_yamanouchi(&self.reverse_reading_word())
    }
}

/// True iff every prefix has at least as many `k`s as `k+1`s, for every `k`.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        let k = v as usize;
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
        if k >= 2 && counts[k - 1] > counts[k - 2] {
            return false;
        }
    }
    true
}

/// Streams the semistandard tableaux of `shape` with entries in `1..=max_entry`.
pub fn enumerate_ssyt(shape: &SkewShape, max_entry: u32) -> SsytIter {
    let cells = shape.cells();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let deps = cells
        .iter()
        .map(|c| {
            let left = (c.col > 1)
                .then(|| index.get(&Cell::new(c.row, c.col - 1)).copied())
                .flatten();
            let above = (c.row > 1)
                .then(|| index.get(&Cell::new(c.row - 1, c.col)).copied())
                .flatten();
            (left, above)
        })
        .collect();
    SsytIter {
        shape: shape.clone(),
        deps,
        vals: Vec::with_capacity(cells.len()),
        max_entry,
        started: false,
        done: max_entry == 0 && !cells.is_empty(),
    }
}

/// Backtracking iterator behind [`enumerate_ssyt`].
pub struct SsytIter {
    shape: SkewShape,
    /// Row-major index of the left and upper neighbour of each cell.
    deps: Vec<(Option<usize>, Option<usize>)>,
    vals: Vec<u32>,
    max_entry: u32,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn min_at(&self, pos: usize) -> u32 {
        let (left, above) = self.deps[pos];
        let l = left.map_or(1, |i| self.vals[i]);
        let a = above.map_or(1, |i| self.vals[i] + 1);
        l.max(a)
    }

    fn search(&mut self, mut resume: bool) -> bool {
        loop {
            if resume {
                loop {
                    let Some(last) = self.vals.pop() else {
                        return false;
                    };
                    if last < self.max_entry {
                        self.vals.push(last + 1);
                        break;
                    }
                }
                resume = false;
            }
            while self.vals.len() < self.deps.len() {
                let m = self.min_at(self.vals.len());
                if m > self.max_entry {
                    resume = true;
                    break;
                }
                self.vals.push(m);
            }
            if !resume {
                return true;
            }
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        if self.search(resume) {
            Some(Tableau::from_row_major(&self.shape, &self.vals))
        } else {
            self.done = true;
            None
        }
    }
}

/// The Littlewood–Richardson tableaux of shape `θ/μ` and content `ν`.
pub fn lr_tableaux(mu: &Partition, nu: &Partition, theta: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill_lr_cells(mu, nu, theta, &mut |t| out.push(t.clone()));
    out
}

/// `c^θ_{μν}`, counted by filling the cells of `θ/μ`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, theta: &Partition) -> u64 {
    let mut n = 0u64;
    fill_lr_cells(mu, nu, theta, &mut |_| n += 1);
    n
}

fn fill_lr_cells(mu: &Partition, nu: &Partition, theta: &Partition, emit: &mut dyn FnMut(&Tableau)) {
    if theta.size() != mu.size() + nu.size() || !theta.contains(mu) {
        return;
    }
    let shape = SkewShape {
        outer: theta.clone(),
        inner: mu.clone(),
    };
    // reverse reading order: rows top to bottom, right to left within a row
    let mut order: Vec<Cell> = shape.cells();
    order.sort_by(|a, b| a.row.cmp(&b.row).then(b.col.cmp(&a.col)));
    let index: HashMap<Cell, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let deps: Vec<(Option<usize>, Option<usize>)> = order
        .iter()
        .map(|c| {
            let right = index.get(&Cell::new(c.row, c.col + 1)).copied();
            let above = (c.row > 1)
                .then(|| index.get(&Cell::new(c.row - 1, c.col)).copied())
                .flatten();
            (right, above)
        })
        .collect();

    struct Search<'a> {
        deps: &'a [(Option<usize>, Option<usize>)],
        nu: &'a [u32],
        vals: Vec<u32>,
        counts: Vec<u32>,
    }

    fn go(s: &mut Search<'_>, shape: &SkewShape, order: &[Cell], emit: &mut dyn FnMut(&Tableau)) {
        let pos = s.vals.len();
        if pos == s.deps.len() {
            let mut by_cell: Vec<(Cell, u32)> = order.iter().copied().zip(s.vals.iter().copied()).collect();
            by_cell.sort_by_key(|&(c, _)| c);
            let vals: Vec<u32> = by_cell.into_iter().map(|(_, v)| v).collect();
            emit(&Tableau::from_row_major(shape, &vals));
            return;
        }
        let (right, above) = s.deps[pos];
        let hi = right.map_or(s.nu.len() as u32, |i| s.vals[i]);
        let lo = above.map_or(1, |i| s.vals[i] + 1);
        for v in lo..=hi {
            let k = v as usize - 1;
            if s.counts[k] >= s.nu[k] {
                continue;
            }
            if k > 0 && s.counts[k] + 1 > s.counts[k - 1] {
                continue;
            }
            s.counts[k] += 1;
            s.vals.push(v);
            go(s, shape, order, emit);
            s.vals.pop();
            s.counts[k] -= 1;
        }
    }

    let mut search = Search {
        deps: &deps,
        nu: nu.parts(),
        vals: Vec::with_capacity(order.len()),
        counts: vec![0; nu.len()],
    };
    go(&mut search, &shape, &order, emit);
}

/// Strip-by-strip LR enumeration: the `ν_v` copies of letter `v` are added to
/// the current shape as a horizontal strip whose cumulative row counts never
/// exceed those of letter `v-1` one row higher. Calls `emit(θ, a)` once per LR
/// tableau, where `a[r][v]` is the number of letters `v+1` in row `r+1`.
/// Receives `(θ, a)` for each LR tableau found.
type Emit<'a> = dyn FnMut(&[u32], &[Vec<u32>]) + 'a;

fn for_each_lr_filling(mu: &Partition, nu: &Partition, emit: &mut Emit<'_>) {
    // one spare row keeps a trailing zero part
    let rows = mu.len() + nu.len() + 1;
    let letters = nu.len();
    let mut st = StripSearch {
        content: nu.parts().to_vec(),
        shape: (0..rows).map(|i| mu.part(i)).collect(),
        a: vec![vec![0; letters]; rows],
        prev_cum: vec![0; rows],
    };
    st.letter(0, emit);
}

struct StripSearch {
    content: Vec<u32>,
    /// Current outer shape, zero padded.
    shape: Vec<u32>,
    a: Vec<Vec<u32>>,
    /// `prev_cum[r]`: copies of the previous letter in rows `0..=r`.
    prev_cum: Vec<u32>,
}

impl StripSearch {
    fn letter(&mut self, v: usize, emit: &mut Emit<'_>) {
        if v == self.content.len() {
            let used = self.shape.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
            emit(&self.shape[..used], &self.a[..used]);
            return;
        }
        let saved = v.checked_sub(1).map(|_| self.prev_cum.clone());
        if v > 0 {
            let mut acc = 0;
            for r in 0..self.shape.len() {
                acc += self.a[r][v - 1];
                self.prev_cum[r] = acc;
            }
        }
        self.strip(v, 0, self.content[v], 0, emit);
        if let Some(saved) = saved {
            self.prev_cum = saved;
        }
    }

    /// Places the remaining `rem` copies of letter `v` in rows `r..`; `cum`
    /// copies went into rows above `r`.
    fn strip(&mut self, v: usize, r: usize, rem: u32, cum: u32, emit: &mut Emit<'_>) {
        if rem == 0 {
            self.letter(v + 1, emit);
            return;
        }
        if r == self.shape.len() {
            return;
        }
        let here = self.shape[r];
        let mut hi = rem;
        if r > 0 {
            // horizontal strip: stay weakly left of the old row above
            let above_old = self.shape[r - 1] - self.a[r - 1][v];
            hi = hi.min(above_old - here);
        }
        if v > 0 {
            let lattice = if r == 0 { 0 } else { self.prev_cum[r - 1] };
            hi = hi.min(lattice.saturating_sub(cum));
        }
        // rows below can absorb at most `here` more cells of this strip
        let lo = rem.saturating_sub(here);
        if lo > hi {
            return;
        }
        for b in (lo..=hi).rev() {
            self.a[r][v] = b;
            self.shape[r] += b;
            self.strip(v, r + 1, rem - b, cum + b, emit);
            self.shape[r] -= b;
        }
        self.a[r][v] = 0;
    }
}

/// The multiset `{θ : c^θ_{μν}}` as shape → coefficient, via row-strip
/// additions of the letters of `ν` onto `μ`.
pub fn lr_product_counts(mu: &Partition, nu: &Partition) -> HashMap<Partition, u64> {
    let mut out: HashMap<Partition, u64> = HashMap::new();
    for_each_lr_filling(mu, nu, &mut |theta, _| {
        let theta = Partition::new(theta.to_vec()).expect("row additions keep a partition");
        *out.entry(theta).or_insert(0) += 1;
    });
    out
}

/// All LR tableaux with inner shape `μ` and content `ν`, grouped by outer shape.
pub fn lr_tableaux_by_shape(mu: &Partition, nu: &Partition) -> HashMap<Partition, Vec<Tableau>> {
    let mut out: HashMap<Partition, Vec<Tableau>> = HashMap::new();
    for_each_lr_filling(mu, nu, &mut |theta, a| {
        let theta = Partition::new(theta.to_vec()).expect("row additions keep a partition");
        let rows: Vec<Vec<u32>> = (0..theta.len())
            .map(|r| {
                let mut row = Vec::new();
                if let Some(counts) = a.get(r) {
                    for (v, &c) in counts.iter().enumerate() {
                        row.extend(std::iter::repeat_n(v as u32 + 1, c as usize));
                    }
                }
                row
            })
            .collect();
        let shape = SkewShape {
            outer: theta.clone(),
            inner: mu.clone(),
        };
        let t = Tableau::from_rows(shape, rows).expect("row counts fit the shape");
        out.entry(theta).or_default().push(t);
    });
    out
}
