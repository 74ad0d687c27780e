use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use crate::error::{Error, Result};

/// Sparse polynomial over `F_p` in `x₁..x_n`, keyed by exponent vectors.
/// Stored coefficients are always nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct FpMultiPoly {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, u64>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    p: u64,
    nvars: usize,
    terms: Vec<(Vec<u32>, u64)>,
}

impl TryFrom<PolyJson> for FpMultiPoly {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        let field = PrimeField::new(raw.p)?;
        let mut poly = FpMultiPoly::zero(field, raw.nvars);
        for (exps, c) in raw.terms {
            if exps.len() != raw.nvars {
                return Err(Error::input(format!("monomial {exps:?} does not have {} exponents", raw.nvars)));
            }
            poly.add_term(field, exps, c % raw.p);
        }
        Ok(poly)
    }
}

impl From<FpMultiPoly> for PolyJson {
    fn from(poly: FpMultiPoly) -> Self {
        PolyJson { p: poly.p, nvars: poly.nvars, terms: poly.terms.into_iter().collect() }
    }
}

impl FpMultiPoly {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        FpMultiPoly { p: field.p(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: u64) -> Self {
        let mut poly = FpMultiPoly::zero(field, nvars);
        poly.add_term(field, vec![0; nvars], c);
        poly
    }

    /// `Σ coeffs[l]·x_{l+1}`
    pub fn linear(field: PrimeField, coeffs: &[u64]) -> Self {
        let nvars = coeffs.len();
        let mut poly = FpMultiPoly::zero(field, nvars);
        for (l, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; nvars];
            e[l] = 1;
            poly.add_term(field, e, c);
        }
        poly
    }

    /// Builds from `(exponents, coefficient)` pairs; coefficients are reduced mod p.
    pub fn from_terms(field: PrimeField, nvars: usize, terms: &[(Vec<u32>, i128)]) -> Result<Self> {
        FpMultiPoly::try_from(PolyJson {
            p: field.p(),
            nvars,
            terms: terms.iter().map(|(e, c)| (e.clone(), field.reduce(*c))).collect(),
        })
    }

    fn add_term(&mut self, field: PrimeField, exps: Vec<u32>, c: u64) {
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = field.add(*entry, c);
        if *entry == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub(crate) fn field_of(&self) -> PrimeField {
        PrimeField::trusted(self.p)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every monomial has total degree `d` (vacuous for zero).
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!((self.p, self.nvars), (other.p, other.nvars), "polynomials over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let field = self.field_of();
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(field, e.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: u64) -> Self {
        let field = self.field_of();
        let mut out = FpMultiPoly::zero(field, self.nvars);
        for (e, &c) in &self.terms {
            out.add_term(field, e.clone(), field.mul(c, k));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.p - 1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let field = self.field_of();
        let mut out = FpMultiPoly::zero(field, self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(field, e, field.mul(c1, c2));
            }
        }
        out
    }

    /// Scalar multiple whose coefficient on the largest monomial is 1.
    pub fn monic(&self) -> Self {
        match self.terms.values().next_back() {
            Some(&lead) => self.scale(self.field_of().inv(lead).expect("nonzero")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for FpMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k > 0)
                .map(|(l, &k)| if k == 1 { format!("x{}", l + 1) } else { format!("x{}^{k}", l + 1) })
                .collect();
            match (c, vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&vars.join("*"))?,
                _ => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}
