//! Deterministic exact linear algebra over the prime field F_p.
//!
//! Everything is reduced row-echelon form with lowest-index pivoting, so a
//! subspace has exactly one representation and span equality is row-by-row
//! equality. Matrices are dense `Vec<Vec<u64>>` with entries in `[0, p)`.

use alloc::vec;
use alloc::vec::Vec;

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is a small prime.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// removed, remaining rows are ordered by pivot column.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let scale = inv_mod(rows[pivot_row][col], p);
        for v in rows[pivot_row][col..].iter_mut() {
            *v = *v * scale % p;
        }
        let pivot_vals = core::mem::take(&mut rows[pivot_row]);
        for row in rows.iter_mut() {
            if !row.is_empty() && row[col] != 0 {
                let factor = row[col];
                for (v, &pv) in row[col..].iter_mut().zip(&pivot_vals[col..]) {
                    *v = (*v + p - factor * pv % p) % p;
                }
            }
        }
        rows[pivot_row] = pivot_vals;
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|&c| c != 0));
    rows.len()
}

/// Reduces `row` against an RREF basis in place; the result is zero exactly
/// when `row` lies in the span.
pub fn reduce(row: &mut [u64], basis: &[Vec<u64>], p: u64) {
    for b in basis {
        let pivot = b.iter().position(|&c| c != 0).expect("no zero basis rows");
        let factor = row[pivot];
        if factor != 0 {
            for (rc, bc) in row.iter_mut().zip(b) {
                *rc = (*rc + p - factor * bc % p) % p;
            }
        }
    }
}

pub fn in_span(row: &[u64], basis: &[Vec<u64>], p: u64) -> bool {
    let mut work = row.to_vec();
    reduce(&mut work, basis, p);
    work.iter().all(|&c| c == 0)
}

/// Basis of the null space of the constraint matrix, itself in RREF.
///
/// Kernel vectors are generated per free column in ascending order and then
/// normalized, so the output is canonical.
pub fn kernel(constraints: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut mat: Vec<Vec<u64>> = constraints.to_vec();
    rref(&mut mat, p);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    for (r, row) in mat.iter().enumerate() {
        let pivot = row.iter().position(|&c| c != 0).unwrap();
        pivot_of_col[pivot] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (col, entry) in pivot_of_col.iter().enumerate() {
            if let Some(r) = entry {
                // Pivot variable = -(coefficient at the free column).
                v[col] = (p - mat[*r][free] % p) % p;
            }
        }
        basis.push(v);
    }
    rref(&mut basis, p);
    basis
}
