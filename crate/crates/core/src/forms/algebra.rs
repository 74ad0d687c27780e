use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::linalg::{inverse, is_square_of_size};
use crate::error::{Error, Result};

/// Bracket `[e_i, e_j] = Σ_k λ_ij^(k) f_k` of a class-2 algebra with
/// `A/[A,A]` spanned by `e_1..e_n` and `[A,A]` by `f_1..f_m`.
/// Indices are zero-based in the API.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConstantsJson", into = "ConstantsJson")]
pub struct StructureConstants {
    field: PrimeField,
    n: usize,
    m: usize,
    /// `lambda[k][i][j]`
    lambda: Vec<Vec<Vec<u64>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConstantsJson {
    p: u64,
    n: usize,
    m: usize,
    lambda: Vec<Vec<Vec<u64>>>,
}

impl TryFrom<ConstantsJson> for StructureConstants {
    type Error = Error;

    fn try_from(raw: ConstantsJson) -> Result<Self> {
        StructureConstants::new(PrimeField::new(raw.p)?, raw.n, raw.m, raw.lambda)
    }
}

impl From<StructureConstants> for ConstantsJson {
    fn from(sc: StructureConstants) -> Self {
        ConstantsJson { p: sc.field.p(), n: sc.n, m: sc.m, lambda: sc.lambda }
    }
}

impl StructureConstants {
    /// `lambda[k][i][j]` must be an alternating `n×n` array for each `k < m`.
    pub fn new(field: PrimeField, n: usize, m: usize, lambda: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        if lambda.len() != m || lambda.iter().any(|layer| !is_square_of_size(layer, n)) {
            return Err(Error::input(format!("structure constants must form {m} arrays of size {n}x{n}")));
        }
        let lambda: Vec<Vec<Vec<u64>>> = lambda
            .into_iter()
            .map(|layer| layer.into_iter().map(|row| row.into_iter().map(|x| x % field.p()).collect()).collect())
            .collect();
        for (k, layer) in lambda.iter().enumerate() {
            for i in 0..n {
                for j in 0..=i {
                    if layer[i][j] != field.neg(layer[j][i]) || (i == j && layer[i][i] != 0) {
                        return Err(Error::input(format!(
                            "bracket is not alternating at (e{}, e{}) in component f{}",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(StructureConstants { field, n, m, lambda })
    }

    /// Builds from the brackets `[e_i, e_j]` for `i < j`, each a vector of length `m`.
    pub fn from_brackets(
        field: PrimeField,
        n: usize,
        m: usize,
        brackets: &[((usize, usize), Vec<i128>)],
    ) -> Result<Self> {
        let mut lambda = vec![vec![vec![0u64; n]; n]; m];
        for ((i, j), v) in brackets {
            let (i, j) = (*i, *j);
            if i >= n || j >= n || i == j || v.len() != m {
                return Err(Error::input(format!("bad bracket entry for ({i}, {j})")));
            }
            for (k, &c) in v.iter().enumerate() {
                lambda[k][i][j] = field.reduce(c);
                lambda[k][j][i] = field.reduce(-c);
            }
        }
        StructureConstants::new(field, n, m, lambda)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `dim A/[A,A]`
    pub fn n(&self) -> usize {
        self.n
    }

    /// `dim [A,A]`
    pub fn m(&self) -> usize {
        self.m
    }

    /// `λ_ij^(k)`, zero-based.
    pub fn lambda(&self, i: usize, j: usize, k: usize) -> u64 {
        self.lambda[k][i][j]
    }

    /// `[x, y]` for coordinate vectors of length `n`.
    pub fn bracket(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.field;
        (0..self.m)
            .map(|k| {
                let mut acc = 0;
                for i in 0..self.n {
                    for j in 0..self.n {
                        let term = f.mul(f.mul(x[i], y[j]), self.lambda[k][i][j]);
                        acc = f.add(acc, term);
                    }
                }
                acc
            })
            .collect()
    }

    /// Constants in the basis `e'_i = Σ_a P[a][i] e_a`, `f'_k = Σ_c Q[c][k] f_c`.
    pub fn change_basis(&self, p: &[Vec<u64>], q: &[Vec<u64>]) -> Result<Self> {
        let f = self.field;
        if !is_square_of_size(p, self.n) || !is_square_of_size(q, self.m) {
            return Err(Error::input("basis change matrices have the wrong size"));
        }
        inverse(f, p).ok_or_else(|| Error::input("P is not invertible"))?;
        let q_inv = inverse(f, q).ok_or_else(|| Error::input("Q is not invertible"))?;
        let mut lambda = vec![vec![vec![0u64; self.n]; self.n]; self.m];
        for i in 0..self.n {
            for j in 0..self.n {
                let column_i: Vec<u64> = p.iter().map(|r| r[i]).collect();
                let column_j: Vec<u64> = p.iter().map(|r| r[j]).collect();
                let old = self.bracket(&column_i, &column_j);
                for (k, layer) in lambda.iter_mut().enumerate() {
                    layer[i][j] = (0..self.m).fold(0, |acc, c| f.add(acc, f.mul(q_inv[k][c], old[c])));
                }
            }
        }
        StructureConstants::new(f, self.n, self.m, lambda)
    }
}

/// Multiplies `a·b` in `F_p[t]/(f)`; `f` monic of degree `d`, inputs of length `d`.
fn mul_mod_f(field: PrimeField, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; 2 * d];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = field.add(prod[i + j], field.mul(x, y));
        }
    }
    for top in (d..prod.len()).rev() {
        let c = prod[top];
        if c != 0 {
            for (k, &fk) in f[..d].iter().enumerate() {
                let idx = top - d + k;
                prod[idx] = field.sub(prod[idx], field.mul(c, fk));
            }
            prod[top] = 0;
        }
    }
    prod.truncate(d);
    prod
}

/// Structure constants of the graded Lie algebra of the group of upper
/// unitriangular 3×3 matrices over `F_p[t]/(f)`.
///
/// With `d = deg f`, `e_1..e_d` are the coordinates `a·t^i` of the
/// corner above the diagonal on the left, `e_{d+1}..e_{2d}` those of the
/// one on the right, and `f_1..f_d` those of the top-right corner, all in
/// the monomial basis `1, t, …, t^{d−1}`. The bracket is `a₁b₂ − a₂b₁`.
pub fn heisenberg_algebra(f: &[u64], p: u64) -> Result<StructureConstants> {
    let field = PrimeField::new(p)?;
    if p == 2 {
        return Err(Error::input("the characteristic must be odd"));
    }
    let f: Vec<u64> = f.iter().map(|&c| c % p).collect();
    let d = match f.iter().rposition(|&c| c != 0) {
        Some(d) if d >= 1 && f[d] == 1 => d,
        Some(0) | None => return Err(Error::input("f must have degree at least 1")),
        Some(_) => return Err(Error::input("f must be monic")),
    };
    let f = &f[..=d];
    let basis = |i: usize| -> Vec<u64> { (0..d).map(|k| u64::from(k == i)).collect() };
    let mut lambda = vec![vec![vec![0u64; 2 * d]; 2 * d]; d];
    for i in 0..d {
        for j in 0..d {
            let c = mul_mod_f(field, &basis(i), &basis(j), f);
            for (k, &ck) in c.iter().enumerate() {
                lambda[k][i][d + j] = ck;
                lambda[k][d + j][i] = field.neg(ck);
            }
        }
    }
    StructureConstants::new(field, 2 * d, d, lambda)
}
