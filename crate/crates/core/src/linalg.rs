//! Exact Gaussian elimination over [`Scalar`].

use crate::scalars::Scalar;

/// Row-reduce `rows` in place and return the pivot columns.
fn echelon(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot is invertible");
        let pivot_row: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        rows[r] = pivot_row;
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..ncols {
                    if !rows[r][j].is_zero() {
                        let t = &f * &rows[r][j];
                        rows[i][j] -= t;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank of the matrix whose columns are `cols` (all of equal length).
pub fn rank(cols: &[Vec<Scalar>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    // eliminate on the transpose: rows = the given vectors
    let ncols = cols[0].len();
    let mut rows: Vec<Vec<Scalar>> = cols.iter().filter(|c| c.iter().any(|x| !x.is_zero())).cloned().collect();
    echelon(&mut rows, ncols).len()
}

/// Coefficients `x` with `Σ x_i cols[i] = target`, if the target lies in the span.
/// Assumes the columns are linearly independent.
pub fn solve_in_span(cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = cols.len();
    let len = target.len();
    // augmented system: rows indexed by vector component, columns by unknowns
    let mut rows: Vec<Vec<Scalar>> = (0..len)
        .filter(|&i| cols.iter().any(|c| !c[i].is_zero()) || !target[i].is_zero())
        .map(|i| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = echelon(&mut rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = rows[r][n].clone();
    }
    Some(x)
}
