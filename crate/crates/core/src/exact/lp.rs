//! Box-bounded feasibility by an exact phase-1 simplex.
//!
//! Decides whether `target = sum b_i g_i` has a solution with
//! `lower_i <= b_i <= upper_i`. Bland's rule keeps degenerate problems (points
//! on zonotope faces) from cycling.

use num::{One, Signed, Zero};

use super::{Rational, WeightVector};
use crate::error::{Error, Result};

/// Returns a witness `b` or `None` when the box-constrained system is infeasible.
///
/// Any returned witness has been substituted back and checked exactly.
pub fn lp_feasible(
    generators: &[WeightVector],
    lower: &[Rational],
    upper: &[Rational],
    target: &WeightVector,
) -> Result<Option<Vec<Rational>>> {
    let m = generators.len();
    let n = target.dim();
    if lower.len() != m || upper.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: lower.len().min(upper.len()) });
    }
    if let Some(g) = generators.iter().find(|g| g.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: g.dim() });
    }
    if let Some(i) = (0..m).find(|&i| lower[i] > upper[i]) {
        return Err(Error::InvalidInput(format!("lower bound exceeds upper bound at index {i}")));
    }

    // shift b = lower + y, 0 <= y <= width
    let width: Vec<Rational> = (0..m).map(|i| &upper[i] - &lower[i]).collect();
    let mut rhs_eq: Vec<Rational> = target.coords().to_vec();
    for (g, l) in generators.iter().zip(lower) {
        for (r, gi) in rhs_eq.iter_mut().zip(g.coords()) {
            *r -= l * gi;
        }
    }

    // columns: y (m) | s (m) | artificial (n) | rhs
    let ncols = 2 * m + n;
    let rhs = ncols;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(n + m);
    let mut basis: Vec<usize> = Vec::with_capacity(n + m);
    for i in 0..n {
        let sign = if rhs_eq[i].is_negative() { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); ncols + 1];
        for (j, g) in generators.iter().enumerate() {
            row[j] = &g.coords()[i] * &sign;
        }
        row[2 * m + i] = Rational::one();
        row[rhs] = &rhs_eq[i] * &sign;
        tab.push(row);
        basis.push(2 * m + i);
    }
    for j in 0..m {
        let mut row = vec![Rational::zero(); ncols + 1];
        row[j] = Rational::one();
        row[m + j] = Rational::one();
        row[rhs] = width[j].clone();
        tab.push(row);
        basis.push(m + j);
    }

    // reduced costs of the phase-1 objective sum(artificials)
    let mut cost = vec![Rational::zero(); ncols + 1];
    for row in tab.iter().take(n) {
        for c in 0..=ncols {
            if c >= 2 * m && c < 2 * m + n {
                continue;
            }
            cost[c] -= &row[c];
        }
    }

    while let Some(enter) = (0..ncols).find(|&c| cost[c].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (r, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            leave = match leave {
                None => Some((r, ratio)),
                Some((br, bq)) => {
                    if ratio < bq || (ratio == bq && basis[r] < basis[br]) {
                        Some((r, ratio))
                    } else {
                        Some((br, bq))
                    }
                }
            };
        }
        let Some((pr, _)) = leave else {
            // Phase-1 objective is bounded below by zero, so this cannot happen.
            return Err(Error::Internal("unbounded phase-1 simplex".into()));
        };
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[rhs].is_zero() {
        return Ok(None);
    }
    let mut y = vec![Rational::zero(); m];
    for (r, &b) in basis.iter().enumerate() {
        if b < m {
            y[b] = tab[r][rhs].clone();
        }
    }
    let witness: Vec<Rational> = y.iter().zip(lower).map(|(yi, l)| yi + l).collect();
    if !check_witness(generators, lower, upper, target, &witness) {
        return Err(Error::Internal("simplex witness failed its exact self-check".into()));
    }
    Ok(Some(witness))
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for x in tab[pr].iter_mut() {
        *x *= &inv;
    }
    let prow = tab[pr].clone();
    for (r, row) in tab.iter_mut().enumerate() {
        if r == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
    }
}

/// Exact check that `b` satisfies the bounds and reproduces `target`.
pub fn check_witness(
    generators: &[WeightVector],
    lower: &[Rational],
    upper: &[Rational],
    target: &WeightVector,
    b: &[Rational],
) -> bool {
    if b.len() != generators.len() {
        return false;
    }
    let in_box = b.iter().zip(lower.iter().zip(upper)).all(|(x, (l, u))| l <= x && x <= u);
    let mut acc = WeightVector::zero(target.dim());
    for (bi, g) in b.iter().zip(generators) {
        acc = acc.add_scaled(bi, g);
    }
    in_box && acc == *target
}
