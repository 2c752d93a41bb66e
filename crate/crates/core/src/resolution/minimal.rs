use std::collections::BTreeMap;

use super::field::Field;
use super::schreyer::{Complex, Mat};
use super::{Control, ResolutionError};

/// Graded Betti numbers: `(homological index, weighted degree) -> count`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), usize>,
}

impl BettiTable {
    pub fn from_degrees(degrees: &[Vec<u64>]) -> Self {
        let mut entries = BTreeMap::new();
        for (i, ds) in degrees.iter().enumerate() {
            for &d in ds {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn get(&self, i: usize, degree: u64) -> usize {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u64), usize> {
        &self.entries
    }

    /// Rank of the `i`-th free module.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .range((i, 0)..=(i, u64::MAX))
            .map(|(_, c)| *c)
            .sum()
    }

    /// Ranks `β_0, β_1, ...` up to the last nonzero one.
    pub fn ranks(&self) -> Vec<usize> {
        match self.length() {
            None => Vec::new(),
            Some(l) => (0..=l).map(|i| self.total(i)).collect(),
        }
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> Option<usize> {
        self.entries
            .iter()
            .filter(|(_, c)| **c > 0)
            .map(|((i, _), _)| *i)
            .max()
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for ((i, d), c) in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{i}:{d}^{c}")?;
        }
        Ok(())
    }
}

/// Cancel unit entries from homological degree 1 upward.
///
/// For a unit `u = d_i[r][c]`, every other column `b` of `d_i` gets
/// `col_b -= (d_i[r][b] / u) col_c`; then basis element `c` of `F_i` and `r`
/// of `F_{i-1}` are dropped, which deletes row `c` of `d_{i+1}` and column `r`
/// of `d_{i-1}`. Each cancellation lowers the rank of two adjacent modules by
/// one, so the Euler characteristic is unchanged.
pub(crate) fn minimalize<F: Field>(
    field: &F,
    c: &Complex<F::Elem>,
    ctl: &Control,
) -> Result<Complex<F::Elem>, ResolutionError> {
    let mut diffs = c.diffs.clone();
    let ranks = c.ranks();
    let mut alive: Vec<Vec<bool>> = ranks.iter().map(|&r| vec![true; r]).collect();

    for i in 0..diffs.len() {
        loop {
            ctl.check_cancel()?;
            let pivot = find_unit(&diffs[i], &alive[i], &alive[i + 1]);
            let Some((r, col)) = pivot else { break };
            let d = &mut diffs[i];
            let u = d.cols[col][r].as_unit().expect("unit pivot").clone();
            let pivot_col = d.cols[col].clone();
            for b in 0..d.cols.len() {
                if b == col || !alive[i + 1][b] || d.cols[b][r].is_zero() {
                    continue;
                }
                let factor = d.cols[b][r].scale(field, &field.neg(&field.inv(&u)));
                for (a, entry) in pivot_col.iter().enumerate() {
                    if alive[i][a] && !entry.is_zero() {
                        d.cols[b][a] = d.cols[b][a].add(field, &entry.mul(field, &factor));
                    }
                }
                debug_assert!(d.cols[b][r].is_zero());
            }
            alive[i + 1][col] = false;
            alive[i][r] = false;
        }
    }

    let mut out_diffs = Vec::new();
    for (i, d) in diffs.iter().enumerate() {
        let cols: Vec<_> = d
            .cols
            .iter()
            .enumerate()
            .filter(|(b, _)| alive[i + 1][*b])
            .map(|(_, col)| {
                col.iter()
                    .enumerate()
                    .filter(|(a, _)| alive[i][*a])
                    .map(|(_, p)| p.clone())
                    .collect::<Vec<_>>()
            })
            .collect();
        out_diffs.push(Mat {
            rows: alive[i].iter().filter(|&&x| x).count(),
            cols,
        });
    }
    let mut degrees: Vec<Vec<u64>> = c
        .degrees
        .iter()
        .zip(&alive)
        .map(|(ds, al)| ds.iter().zip(al).filter(|(_, &a)| a).map(|(d, _)| *d).collect())
        .collect();
    while out_diffs.last().is_some_and(|m| m.ncols() == 0) {
        out_diffs.pop();
        degrees.pop();
    }
    Ok(Complex {
        nvars: c.nvars,
        diffs: out_diffs,
        degrees,
    })
}

fn find_unit<E: Clone>(
    d: &Mat<E>,
    rows_alive: &[bool],
    cols_alive: &[bool],
) -> Option<(usize, usize)> {
    // among unit entries, prefer the sparsest column to limit fill-in
    let mut best: Option<(usize, usize, usize)> = None;
    for (c, col) in d.cols.iter().enumerate() {
        if !cols_alive[c] {
            continue;
        }
        for (r, p) in col.iter().enumerate() {
            if rows_alive[r] && p.as_unit().is_some() {
                let weight = col.iter().filter(|q| !q.is_zero()).count();
                if best.is_none_or(|(w, _, _)| weight < w) {
                    best = Some((weight, r, c));
                }
            }
        }
    }
    best.map(|(_, r, c)| (r, c))
}

/// No differential has a unit entry.
pub(crate) fn is_minimal<E: Clone>(c: &Complex<E>) -> bool {
    c.diffs
        .iter()
        .all(|d| d.cols.iter().all(|col| col.iter().all(|p| p.as_unit().is_none())))
}
