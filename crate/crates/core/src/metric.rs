//! Distance tables and the pseudo-metric axiom checker.

use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extnat::ExtendedNat;

/// A square table of distances over a finite point set. Entries may be
/// missing when the table comes from partial input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable<T> {
    points: Vec<T>,
    values: Vec<Option<ExtendedNat>>,
}

impl<T: Ord + Clone + Debug> DistanceTable<T> {
    /// Total table from a distance function. Points are used in the given order.
    pub fn from_fn(points: Vec<T>, mut d: impl FnMut(&T, &T) -> ExtendedNat) -> Self {
        let mut values = Vec::with_capacity(points.len() * points.len());
        for x in &points {
            for y in &points {
                values.push(Some(d(x, y)));
            }
        }
        DistanceTable { points, values }
    }

    /// Possibly partial table from explicit entries.
    pub fn from_entries(points: Vec<T>, entries: impl IntoIterator<Item = (T, T, ExtendedNat)>) -> Result<Self> {
        let n = points.len();
        let mut table = DistanceTable { points, values: vec![None; n * n] };
        for (a, b, d) in entries {
            let i = table.position(&a)?;
            let j = table.position(&b)?;
            table.values[i * n + j] = Some(d);
        }
        Ok(table)
    }

    fn position(&self, x: &T) -> Result<usize> {
        self.points.iter().position(|p| p == x).ok_or_else(|| Error::input(format!("unknown point {x:?}")))
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn get(&self, a: &T, b: &T) -> Option<ExtendedNat> {
        let n = self.points.len();
        let i = self.points.iter().position(|p| p == a)?;
        let j = self.points.iter().position(|p| p == b)?;
        self.values[i * n + j]
    }

    fn total(&self) -> Result<Vec<ExtendedNat>> {
        let n = self.points.len();
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| {
                v.ok_or_else(|| {
                    Error::input(format!("missing distance entry ({:?}, {:?})", self.points[k / n], self.points[k % n]))
                })
            })
            .collect()
    }

    /// Nested map form, used for JSON output.
    pub fn to_map(&self) -> BTreeMap<T, BTreeMap<T, ExtendedNat>> {
        let n = self.points.len();
        let mut out = BTreeMap::new();
        for (i, x) in self.points.iter().enumerate() {
            let row: BTreeMap<T, ExtendedNat> = self
                .points
                .iter()
                .enumerate()
                .filter_map(|(j, y)| self.values[i * n + j].map(|d| (y.clone(), d)))
                .collect();
            out.insert(x.clone(), row);
        }
        out
    }
}

/// A single failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation<T> {
    /// `d(x, x) ≠ 0`
    Identity { x: T, d: ExtendedNat },
    /// `d(x, y) ≠ d(y, x)`
    Symmetry { x: T, y: T, xy: ExtendedNat, yx: ExtendedNat },
    /// `d(x, y) > d(x, z) + d(z, y)`
    Triangle { x: T, y: T, z: T },
}

/// Outcome of [`check_pseudometric`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudometricReport<T> {
    pub violations: Vec<Violation<T>>,
}

impl<T> PseudometricReport<T> {
    pub fn is_pseudometric(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the three axioms over index set `0..n`.
pub fn check_axioms(n: usize, d: impl Fn(usize, usize) -> ExtendedNat) -> Vec<Violation<usize>> {
    let mut out = Vec::new();
    let table: Vec<ExtendedNat> = (0..n * n).map(|k| d(k / n, k % n)).collect();
    let at = |i: usize, j: usize| table[i * n + j];
    for x in 0..n {
        if at(x, x) != ExtendedNat::ZERO {
            out.push(Violation::Identity { x, d: at(x, x) });
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if at(x, y) != at(y, x) {
                out.push(Violation::Symmetry { x, y, xy: at(x, y), yx: at(y, x) });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let dxy = at(x, y);
            if dxy == ExtendedNat::ZERO {
                continue;
            }
            for z in 0..n {
                if dxy > at(x, z) + at(z, y) {
                    out.push(Violation::Triangle { x, y, z });
                }
            }
        }
    }
    out
}

/// List every violated axiom instance of a distance table.
///
/// A missing table entry is an input error.
pub fn check_pseudometric<T: Ord + Clone + Debug>(table: &DistanceTable<T>) -> Result<PseudometricReport<T>> {
    let values = table.total()?;
    let n = table.points.len();
    let p = |i: usize| table.points[i].clone();
    let violations = check_axioms(n, |i, j| values[i * n + j])
        .into_iter()
        .map(|v| match v {
            Violation::Identity { x, d } => Violation::Identity { x: p(x), d },
            Violation::Symmetry { x, y, xy, yx } => Violation::Symmetry { x: p(x), y: p(y), xy, yx },
            Violation::Triangle { x, y, z } => Violation::Triangle { x: p(x), y: p(y), z: p(z) },
        })
        .collect();
    Ok(PseudometricReport { violations })
}

/// The profile `z ↦ d(x, z)` of one point.
///
/// Fails when `d` is not a pseudo-metric.
pub fn metric_invariant<T: Ord + Clone + Debug>(table: &DistanceTable<T>, x: &T) -> Result<BTreeMap<T, ExtendedNat>> {
    let report = check_pseudometric(table)?;
    if !report.is_pseudometric() {
        return Err(Error::input(format!("distance table violates {} axiom instance(s)", report.violations.len())));
    }
    table.position(x)?;
    Ok(table.points.iter().map(|z| (z.clone(), table.get(x, z).expect("table is total"))).collect())
}
