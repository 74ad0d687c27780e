//! Dense linear algebra over `F_p` on row-major `Vec<Vec<u64>>`.

use super::field::PrimeField;

/// Reduced row echelon form in place; returns the rank.
pub(crate) fn row_reduce(field: PrimeField, rows: &mut Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][c]).expect("pivot is nonzero");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                for k in 0..cols {
                    let delta = field.mul(factor, rows[rank][k]);
                    rows[r][k] = field.sub(rows[r][k], delta);
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rank
}

pub(crate) fn inverse(field: PrimeField, a: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = a.len();
    let mut aug: Vec<Vec<u64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u64> = row.iter().map(|&x| x % field.p()).collect();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    row_reduce(field, &mut aug);
    if aug.len() < n || (0..n).any(|i| aug[i][i] != 1) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
pub(crate) fn mat_mul(field: PrimeField, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(0, |acc, k| field.add(acc, field.mul(row[k], b[k][j])))).collect())
        .collect()
}

pub(crate) fn is_square_of_size(a: &[Vec<u64>], n: usize) -> bool {
    a.len() == n && a.iter().all(|r| r.len() == n)
}
