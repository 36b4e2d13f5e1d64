//! Enumeration of the Grassmannian Gr(i, n, q).
//!
//! Every dimension-i subspace of F_q^n has exactly one i x n row-reduced
//! basis. We walk pivot sets in lexicographic order, and for each pivot set
//! all fillings of the free positions (entries right of a pivot in
//! non-pivot columns) in lexicographic code order.

use super::field::{Elem, Field};
use super::matrix::{EchelonForm, FqMatrix};
use crate::error::MatrixError;

/// All `i`-subsets of `0..n` in lexicographic order.
pub fn pivot_patterns(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in start..=n - left {
            cur.push(c);
            rec(c + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= n {
        rec(0, n, i, &mut Vec::with_capacity(i), &mut out);
    }
    out
}

/// Positions `(row, col)` free to vary for a given pivot pattern.
fn free_positions(n: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        for c in p + 1..n {
            if !pivots.contains(&c) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Iterator over the canonical bases of every subspace with one fixed pivot
/// pattern. There are `q^f` of them, `f` the number of free positions.
pub struct PivotCell {
    field: Field,
    base: FqMatrix,
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
    done: bool,
}

impl PivotCell {
    pub fn new(n: usize, pivots: Vec<usize>, field: &Field) -> Self {
        let mut base = FqMatrix::zeros(pivots.len(), n);
        for (r, &p) in pivots.iter().enumerate() {
            base.set(r, p, Elem::ONE);
        }
        let free = free_positions(n, &pivots);
        PivotCell {
            field: field.clone(),
            base,
            counter: vec![0; free.len()],
            free,
            pivots,
            done: false,
        }
    }

    /// Number of subspaces in this cell.
    pub fn len(&self) -> u128 {
        (self.field.q() as u128).pow(self.free.len() as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl Iterator for PivotCell {
    type Item = EchelonForm;

    fn next(&mut self) -> Option<EchelonForm> {
        if self.done {
            return None;
        }
        let mut m = self.base.clone();
        for (&(r, c), &code) in self.free.iter().zip(&self.counter) {
            m.set(r, c, self.field.elem(code).expect("counter below q"));
        }
        let out = EchelonForm::from_parts(m, self.pivots.clone());

        // Advance: last free position varies fastest.
        let q = self.field.q();
        let mut j = self.counter.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            self.counter[j] += 1;
            if self.counter[j] < q {
                break;
            }
            self.counter[j] = 0;
        }
        Some(out)
    }
}

/// Stream of every dimension-`i` subspace of F_q^n as a canonical i x n
/// row-reduced basis.
pub struct SubspaceIter {
    n: usize,
    field: Field,
    patterns: std::vec::IntoIter<Vec<usize>>,
    cell: Option<PivotCell>,
}

impl Iterator for SubspaceIter {
    type Item = EchelonForm;

    fn next(&mut self) -> Option<EchelonForm> {
        loop {
            if let Some(cell) = self.cell.as_mut() {
                if let Some(e) = cell.next() {
                    return Some(e);
                }
            }
            let pivots = self.patterns.next()?;
            self.cell = Some(PivotCell::new(self.n, pivots, &self.field));
        }
    }
}

pub fn subspace_iter(n: usize, i: usize, field: &Field) -> Result<SubspaceIter, MatrixError> {
    if i > n {
        return Err(MatrixError::BadDimension { n, i });
    }
    Ok(SubspaceIter {
        n,
        field: field.clone(),
        patterns: pivot_patterns(n, i).into_iter(),
        cell: None,
    })
}

/// `|Gr(i, n, q)|` by summing cell sizes; saturates instead of overflowing.
pub fn grassmannian_size(n: usize, i: usize, q: u32) -> u128 {
    if i > n {
        return 0;
    }
    pivot_patterns(n, i)
        .iter()
        .map(|p| {
            let f = free_positions(n, p).len() as u32;
            (q as u128).checked_pow(f).unwrap_or(u128::MAX)
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}
