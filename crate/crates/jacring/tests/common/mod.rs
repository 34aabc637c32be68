//! Shared fixtures and independent oracles for the integration suites.
//! Everything here recomputes expected values by a route disjoint from the
//! library path it checks.
#![allow(dead_code)] // each integration test binary uses its own subset

use jacring::{parse_polynomial, Field, LinearForm, Polynomial, Scalar};

pub const FERMAT: &str = "x0^3 + x1^3 + x2^3 + x3^3 + x4^3";

pub fn fermat(field: Field) -> Polynomial {
    parse_polynomial(FERMAT, field, 5).unwrap()
}

pub fn linear_form(text: &str, field: Field) -> LinearForm {
    LinearForm::new(parse_polynomial(text, field, 5).unwrap()).unwrap()
}

/// Independent oracle: coefficients of ((1 - t^{d-1}) / (1 - t))^{n+1},
/// expanded as a product of truncated geometric series over the integers.
/// This is the Hilbert series of an Artinian complete intersection cut out
/// by `n+1` forms of degree `d-1`.
pub fn complete_intersection_hilbert(num_vars: usize, d: u32) -> Vec<usize> {
    let block = vec![1u64; (d - 1) as usize];
    let mut coeffs = vec![1u64];
    for _ in 0..num_vars {
        let mut next = vec![0u64; coeffs.len() + block.len() - 1];
        for (i, a) in coeffs.iter().enumerate() {
            for (j, b) in block.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        coeffs = next;
    }
    coeffs.into_iter().map(|c| c as usize).collect()
}

/// Independent oracle: plain in-place forward elimination with first-nonzero
/// pivoting, counting pivots. Shares no code with the library's row basis.
pub fn naive_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().unwrap();
        for r in rank + 1..nrows {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() * inv.clone();
            for c in col..ncols {
                rows[r][c] = rows[r][c].clone() - factor.clone() * rows[rank][c].clone();
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rows of a matrix as scalar vectors, for feeding `naive_rank`.
pub fn matrix_rows(m: &jacring::Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}
