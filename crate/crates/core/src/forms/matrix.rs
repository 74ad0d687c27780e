use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::algebra::StructureConstants;
use super::field::PrimeField;
use super::linalg::is_square_of_size;
use super::poly::FpMultiPoly;
use crate::error::{Error, Result};

/// Matrix whose entries are linear forms in `x₁..x_nvars`; each entry is
/// its coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct LinearFormMatrix {
    field: PrimeField,
    nvars: usize,
    entries: Vec<Vec<Vec<u64>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    p: u64,
    nvars: usize,
    entries: Vec<Vec<Vec<u64>>>,
}

impl TryFrom<MatrixJson> for LinearFormMatrix {
    type Error = Error;

    fn try_from(raw: MatrixJson) -> Result<Self> {
        LinearFormMatrix::new(PrimeField::new(raw.p)?, raw.nvars, raw.entries)
    }
}

impl From<LinearFormMatrix> for MatrixJson {
    fn from(m: LinearFormMatrix) -> Self {
        MatrixJson { p: m.field.p(), nvars: m.nvars, entries: m.entries }
    }
}

impl LinearFormMatrix {
    pub fn new(field: PrimeField, nvars: usize, entries: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        let well_shaped = entries.iter().all(|row| row.len() == cols && row.iter().all(|e| e.len() == nvars));
        if !well_shaped {
            return Err(Error::input(format!("every row needs the same length and every form {nvars} coefficients")));
        }
        let entries = entries
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.into_iter().map(|c| c % field.p()).collect()).collect())
            .collect();
        Ok(LinearFormMatrix { field, nvars, entries })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficients of the form at `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &[u64] {
        &self.entries[i][j]
    }

    pub fn entry_poly(&self, i: usize, j: usize) -> FpMultiPoly {
        FpMultiPoly::linear(self.field, &self.entries[i][j])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().flatten().all(|&c| c == 0)
    }

    /// `Γᵗʳ · M(Φx) · Φ`, for `Φ` of size `nvars` (which must equal the
    /// column count) and `Γ` of size `rows`.
    pub fn act(&self, phi: &[Vec<u64>], gamma: &[Vec<u64>]) -> Result<Self> {
        let f = self.field;
        let (m, n) = (self.rows(), self.cols());
        if self.nvars != n || !is_square_of_size(phi, n) || !is_square_of_size(gamma, m) {
            return Err(Error::input("Φ must match the columns and variables, Γ the rows"));
        }
        // x ↦ Φx turns coefficient vector c into Φᵀc
        let substituted: Vec<Vec<Vec<u64>>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| (0..n).map(|s| (0..n).fold(0, |acc, l| f.add(acc, f.mul(c[l], phi[l][s])))).collect())
                    .collect()
            })
            .collect();
        let combine = |acc: &mut Vec<u64>, form: &[u64], k: u64| {
            for (a, &x) in acc.iter_mut().zip(form) {
                *a = f.add(*a, f.mul(k, x));
            }
        };
        let mut out = vec![vec![vec![0u64; n]; n]; m];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (j, cell) in out_row.iter_mut().enumerate() {
                for a in 0..m {
                    for b in 0..n {
                        let k = f.mul(gamma[a][i], phi[b][j]);
                        if k != 0 {
                            combine(cell, &substituted[a][b], k);
                        }
                    }
                }
            }
        }
        LinearFormMatrix::new(f, n, out)
    }
}

impl fmt::Display for LinearFormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..self.rows() {
            let cells: Vec<String> = (0..self.cols()).map(|j| self.entry_poly(row, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `m_ij(x) = Σ_l λ_lj^(i) x_l`: an `m×n` matrix in `n` variables.
pub fn linear_form_matrix(sc: &StructureConstants) -> LinearFormMatrix {
    let (n, m) = (sc.n(), sc.m());
    let entries = (0..m).map(|i| (0..n).map(|j| (0..n).map(|l| sc.lambda(l, j, i)).collect()).collect()).collect();
    LinearFormMatrix::new(sc.field(), n, entries).expect("shape follows from the constants")
}

/// One `r×r` minor with the rows and columns it was taken from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub det: FpMultiPoly,
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Laplace expansion along the first row.
fn determinant(cells: &[Vec<FpMultiPoly>]) -> FpMultiPoly {
    if cells.len() == 1 {
        return cells[0][0].clone();
    }
    let mut acc = FpMultiPoly::zero(cells[0][0].field_of(), cells[0][0].nvars());
    for (j, head) in cells[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let sub: Vec<Vec<FpMultiPoly>> = cells[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = head.mul(&determinant(&sub));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Every `r×r` minor, rows and columns taken in increasing order.
pub fn submatrix_determinants(m: &LinearFormMatrix, r: usize) -> Result<Vec<Minor>> {
    if r == 0 || r > m.rows().min(m.cols()) {
        return Err(Error::input(format!(
            "minor size {r} must lie in 1..={} for a {}x{} matrix",
            m.rows().min(m.cols()),
            m.rows(),
            m.cols()
        )));
    }
    let mut out = Vec::new();
    for rows in combinations(m.rows(), r) {
        for cols in combinations(m.cols(), r) {
            let cells: Vec<Vec<FpMultiPoly>> =
                rows.iter().map(|&i| cols.iter().map(|&j| m.entry_poly(i, j)).collect()).collect();
            out.push(Minor { rows: rows.clone(), cols, det: determinant(&cells) });
        }
    }
    Ok(out)
}

/// The nonzero `r×r` minors, each scaled to be monic, without repeats.
pub fn minors(m: &LinearFormMatrix, r: usize) -> Result<Vec<FpMultiPoly>> {
    let set: BTreeSet<FpMultiPoly> = submatrix_determinants(m, r)?
        .into_iter()
        .filter(|minor| !minor.det.is_zero())
        .map(|minor| minor.det.monic())
        .collect();
    Ok(set.into_iter().collect())
}
