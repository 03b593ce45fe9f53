//! Exact homogeneous linear systems over a field.

use super::{ArithError, Field, Matrix};
#[cfg(test)]
use super::{CycMatrix, CycNumber};

/// Basis of the null space of `rows` (each row a linear form in `nvars`
/// unknowns), by Gauss–Jordan elimination with first-nonzero pivoting.
///
/// Each basis vector has a 1 in one free coordinate and 0 in the others.
pub fn null_space<F: Field>(rows: &[Vec<F>], nvars: usize) -> Result<Vec<Vec<F>>, ArithError> {
    let mut a: Vec<Vec<F>> = Vec::with_capacity(rows.len());
    for r in rows {
        if r.len() != nvars {
            return Err(ArithError::DimensionMismatch {
                left: nvars,
                right: r.len(),
            });
        }
        a.push(r.clone());
    }

    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..nvars {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inv()?;
        for v in a[row].iter_mut() {
            *v = v.times(&inv);
        }
        for r in 0..a.len() {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..nvars {
                let v = a[r][c].minus(&f.times(&a[row][c]));
                a[r][c] = v;
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }

    let mut basis = Vec::new();
    for free in (0..nvars).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); nvars];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = a[r][free].negate();
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Basis of `{X : A_k X = X B_k for every k}` over n×n matrices X.
///
/// This is the shape of every intertwining problem in the crate; the
/// unknowns are the entries of X in row-major order.
pub fn solve_commuting<F: Field>(
    constraints: &[(Matrix<F>, Matrix<F>)],
    n: usize,
) -> Result<Vec<Matrix<F>>, ArithError> {
    let mut rows = Vec::new();
    for (a, b) in constraints {
        if a.dim() != n || b.dim() != n {
            return Err(ArithError::DimensionMismatch {
                left: n,
                right: a.dim().max(b.dim()),
            });
        }
        // (AX − XB)_{ij} = Σ_k A_ik X_kj − Σ_k X_ik B_kj
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![F::zero(); n * n];
                for k in 0..n {
                    row[k * n + j] = row[k * n + j].plus(a.get(i, k));
                    row[i * n + k] = row[i * n + k].minus(b.get(k, j));
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(null_space(&rows, n * n)?
        .into_iter()
        .map(|v| Matrix::from_flat(n, v))
        .collect())
}
