use num_traits::{One, Zero};

use super::scalar::Rational;

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    /// A solution; `free` lists unknowns that were unconstrained and set to 0.
    Solved { values: Vec<Rational>, free: Vec<usize> },
    /// Some equation reduced to `0 = c` with `c != 0`; `row` is its index.
    Inconsistent { row: usize },
}

/// Solves the (possibly overdetermined) system `rows[i] . c = rhs[i]` over the
/// rationals by Gauss-Jordan elimination.
pub fn solve_exact(rows: &[Vec<Rational>], rhs: &[Rational], unknowns: usize) -> LinearSolution {
    let mut m: Vec<(Vec<Rational>, Rational, usize)> = rows
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (r, b))| (r.clone(), b.clone(), i))
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(p) = (row..m.len()).find(|&i| !m[i].0[col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::one() / m[row].0[col].clone();
        for v in m[row].0.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        m[row].1 = m[row].1.clone() * inv;
        let (pivot_row, pivot_rhs) = (m[row].0.clone(), m[row].1.clone());
        for (i, (r, b, _)) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (v, pv) in r.iter_mut().zip(&pivot_row) {
                *v = v.clone() - f.clone() * pv.clone();
            }
            *b = b.clone() - f * pivot_rhs.clone();
        }
        pivots.push(col);
        row += 1;
    }
    if let Some((_, _, orig)) = m[row..].iter().find(|(_, b, _)| !b.is_zero()) {
        return LinearSolution::Inconsistent { row: *orig };
    }
    let mut values = vec![Rational::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        values[col] = m[r].1.clone();
    }
    let free = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    LinearSolution::Solved { values, free }
}
