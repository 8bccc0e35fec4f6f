//! Exact rational linear feasibility by phase-1 simplex.
//!
//! Finds x >= 0 with Ax = b over the rationals, or reports infeasibility.
//! Bland's rule guarantees termination; everything stays in BigRational.

use crate::scalar::Rational;
use num_traits::{One, Signed, Zero};

/// Solve Ax = b, x >= 0 exactly. Returns a feasible point if one exists.
pub fn solve_nonneg(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    // Tableau with artificial basis; rhs kept nonnegative.
    let mut t = vec![vec![Rational::zero(); n + m + 1]; m];
    for i in 0..m {
        let flip = b[i].is_negative();
        for j in 0..n {
            t[i][j] = if flip { -a[i][j].clone() } else { a[i][j].clone() };
        }
        t[i][n + i] = Rational::one();
        t[i][n + m] = if flip { -b[i].clone() } else { b[i].clone() };
    }
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();
    // Phase-1 cost row: minimize the sum of artificials.
    let mut cost = vec![Rational::zero(); n + m + 1];
    for j in 0..=n + m {
        let mut s = Rational::zero();
        for row in t.iter() {
            s += row[j].clone();
        }
        cost[j] = -s;
    }
    for i in 0..m {
        cost[n + i] = Rational::zero();
    }
    // Bland: entering column = smallest index with negative reduced cost.
    while let Some(col) = (0..n + m).find(|&j| cost[j].is_negative()) {
        // Ratio test, ties broken by smallest basis label.
        let mut pick: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][col].is_positive() {
                let ratio = t[i][n + m].clone() / t[i][col].clone();
                let better = match &pick {
                    None => true,
                    Some((pi, pr)) => {
                        ratio < *pr || (ratio == *pr && basis[i] < basis[*pi])
                    }
                };
                if better {
                    pick = Some((i, ratio));
                }
            }
        }
        let Some((row, _)) = pick else {
            // Unbounded phase-1 problem cannot happen (objective >= 0),
            // treat defensively as infeasible.
            return None;
        };
        pivot(&mut t, &mut cost, row, col);
        basis[row] = col;
    }
    // Feasible iff the phase-1 objective is zero.
    if !cost[n + m].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][n + m].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], row: usize, col: usize) {
    let width = t[0].len();
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= p.clone();
    }
    for i in 0..t.len() {
        if i == row || t[i][col].is_zero() {
            continue;
        }
        let f = t[i][col].clone();
        for j in 0..width {
            let delta = f.clone() * t[row][j].clone();
            t[i][j] -= delta;
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        for j in 0..width {
            let delta = f.clone() * t[row][j].clone();
            cost[j] -= delta;
        }
    }
}
