//! Upper bounds on the spectral radius that depend only on the degree
//! sequence, and the shape of the `φ_ℓ` family.
//!
//! For a non-increasing degree sequence `d_1 >= ... >= d_n`,
//!
//! ```text
//! φ_ℓ = (d_ℓ − 1 + √((d_ℓ + 1)² + 4·Σ_{i<ℓ}(d_i − d_ℓ))) / 2
//! ```
//!
//! Everything under the square root is an integer and is computed exactly; the
//! radical is the only inexact step. Comparisons between members of the family
//! never subtract floats: consecutive levels are ordered by the integer test
//! in [`compare_step`] and the minimiser comes from [`min_phi`].

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::{DegreeSequence, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("level {level} outside 1..={n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error("step {step} outside 1..={max}")]
    StepOutOfRange { step: usize, max: usize },
}

fn check_level(seq: &DegreeSequence, level: usize) -> Result<(), BoundsError> {
    if level == 0 || level > seq.len() {
        return Err(BoundsError::LevelOutOfRange { level, n: seq.len() });
    }
    Ok(())
}

/// `(d − 1 + √((d + 1)² + 4·excess)) / 2`, the common shape of the bounds
/// derived from a diagonal similarity.
fn radical_bound<T: Scalar>(d: usize, excess: u64) -> T {
    let d = d as u64;
    let discriminant = (d + 1) * (d + 1) + 4 * excess;
    let root = T::from_int(discriminant.into()).sqrt();
    (T::from_int(d.into()) - T::one() + root) * T::half()
}

/// `Σ_{i<ℓ} (d_i − d_ℓ)`, exactly.
fn excess_above(seq: &DegreeSequence, level: usize) -> u64 {
    seq.prefix(level - 1) - (level as u64 - 1) * seq.degree(level) as u64
}

pub fn phi<T: Scalar>(seq: &DegreeSequence, level: usize) -> Result<T, BoundsError> {
    check_level(seq, level)?;
    Ok(radical_bound(seq.degree(level), excess_above(seq, level)))
}

/// Same radical with the excess replaced by `(ℓ − 1)(d_1 − d_ℓ)`.
pub fn bound_shu_wu<T: Scalar>(seq: &DegreeSequence, level: usize) -> Result<T, BoundsError> {
    check_level(seq, level)?;
    let d = seq.degree(level);
    let excess = (level as u64 - 1) * (seq.max_degree() - d) as u64;
    Ok(radical_bound(d, excess))
}

/// `(d_n − 1 + √((d_n + 1)² + 4(2m − n·d_n))) / 2`.
pub fn bound_hong_shu_fang<T: Scalar>(seq: &DegreeSequence) -> T {
    let d_n = seq.min_degree();
    let excess = 2 * seq.edges() - (seq.len() * d_n) as u64;
    radical_bound(d_n, excess)
}

/// `√(2m − n + 1)`; `None` when `2m < n − 1`, which no connected graph has.
pub fn bound_hong<T: Scalar>(seq: &DegreeSequence) -> Option<T> {
    let radicand = (2 * seq.edges() + 1).checked_sub(seq.len() as u64)?;
    Some(T::from_int(radicand.into()).sqrt())
}

/// `(−1 + √(1 + 8m)) / 2`.
pub fn bound_stanley<T: Scalar>(m: u64) -> T {
    (T::from_int((1 + 8 * m).into()).sqrt() - T::one()) * T::half()
}

/// `k − 1` for the smallest `k` with `m <= k(k − 1)/2`.
pub fn bound_brualdi_hoffman<T: Scalar>(m: u64) -> T {
    let mut k = 1u64;
    while k * (k - 1) / 2 < m {
        k += 1;
    }
    T::from_int((k - 1).into())
}

/// Largest row sum of the adjacency matrix.
pub fn bound_max_degree<T: Scalar>(seq: &DegreeSequence) -> T {
    T::from_count(seq.max_degree())
}

/// Order of `φ_s` relative to `φ_{s+1}`, decided in integers.
///
/// Equal degrees give equal values; otherwise the order of `φ_s` against
/// `φ_{s+1}` is the order of `d_1 + ... + d_s` against `s(s − 1)`.
pub fn compare_step(seq: &DegreeSequence, s: usize) -> Result<Ordering, BoundsError> {
    if s == 0 || s >= seq.len() {
        return Err(BoundsError::StepOutOfRange { step: s, max: seq.len().saturating_sub(1) });
    }
    if seq.degree(s) == seq.degree(s + 1) {
        return Ok(Ordering::Equal);
    }
    Ok(seq.prefix(s).cmp(&(s as u64 * (s as u64 - 1))))
}

/// Minimum of the `φ` family located without evaluating it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiMinimum<T> {
    pub value: T,
    /// Smallest `ℓ >= 3` with `d_1 + ... + d_ℓ < ℓ(ℓ − 1)`, if any.
    pub pivot: Option<usize>,
    pub argmin_levels: Vec<usize>,
}

/// Minimum of `φ_1..φ_n` via the pivot level.
///
/// With a pivot `ℓ`, `φ_j` is minimal iff `d_j = d_ℓ`, or `d_j = d_{ℓ−1}` and
/// `d_1 + ... + d_{ℓ−1} = (ℓ − 1)(ℓ − 2)`. Without one the family is
/// non-increasing and the minimisers are the levels sharing `d_n`.
pub fn min_phi<T: Scalar>(seq: &DegreeSequence) -> PhiMinimum<T> {
    let n = seq.len();
    let pivot = (3..=n).find(|&l| seq.prefix(l) < (l as u64) * (l as u64 - 1));
    let (level, argmin_levels) = match pivot {
        Some(l) => {
            let ties_before = seq.prefix(l - 1) == (l as u64 - 1) * (l as u64 - 2);
            let levels = (1..=n)
                .filter(|&j| {
                    seq.degree(j) == seq.degree(l) || (ties_before && seq.degree(j) == seq.degree(l - 1))
                })
                .collect();
            (l, levels)
        }
        None => (n, (1..=n).filter(|&j| seq.degree(j) == seq.min_degree()).collect()),
    };
    PhiMinimum { value: radical_bound(seq.degree(level), excess_above(seq, level)), pivot, argmin_levels }
}

/// All of `φ_1..φ_n` with their step orderings and minimiser.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiSequence<T> {
    pub values: Vec<T>,
    /// `steps[s − 1]` orders `φ_s` against `φ_{s+1}`.
    #[serde(serialize_with = "serialize_steps")]
    pub steps: Vec<Ordering>,
    /// Levels attaining the minimum, derived from `steps` alone.
    pub argmin_levels: Vec<usize>,
    pub pivot: Option<usize>,
}

fn serialize_steps<S: serde::Serializer>(steps: &[Ordering], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(steps.iter().map(|o| match o {
        Ordering::Greater => ">",
        Ordering::Equal => "=",
        Ordering::Less => "<",
    }))
}

impl<T: Scalar> PhiSequence<T> {
    pub fn new(seq: &DegreeSequence) -> Self {
        let n = seq.len();
        let values = (1..=n).map(|l| radical_bound(seq.degree(l), excess_above(seq, l))).collect();
        let steps: Vec<Ordering> = (1..n).map(|s| compare_step(seq, s).unwrap()).collect();
        let argmin_levels = valley_levels(&steps);
        let pivot = min_phi::<T>(seq).pivot;
        Self { values, steps, argmin_levels, pivot }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `φ_level`, 1-based.
    pub fn value(&self, level: usize) -> T {
        self.values[level - 1]
    }

    pub fn min_value(&self) -> T {
        self.value(self.argmin_levels[0])
    }

    /// No step goes back down after the sequence has started rising.
    pub fn is_unimodal(&self) -> bool {
        is_valley(&self.steps)
    }
}

pub fn phi_sequence<T: Scalar>(seq: &DegreeSequence) -> PhiSequence<T> {
    PhiSequence::new(seq)
}

/// True when no `Greater` step follows a `Less` step.
pub fn is_valley(steps: &[Ordering]) -> bool {
    let first_rise = steps.iter().position(|&o| o == Ordering::Less).unwrap_or(steps.len());
    steps[first_rise..].iter().all(|&o| o != Ordering::Greater)
}

/// Minimising levels of a valley-shaped sequence described by its steps:
/// the plateau after the last descent, up to the first ascent.
fn valley_levels(steps: &[Ordering]) -> Vec<usize> {
    let start = steps.iter().rposition(|&o| o == Ordering::Greater).map_or(1, |s| s + 2);
    let mut end = start;
    while end <= steps.len() && steps[end - 1] == Ordering::Equal {
        end += 1;
    }
    (start..=end).collect()
}

/// Every bound evaluated on one degree sequence, optionally against a known
/// spectral radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub n: usize,
    pub m: u64,
    pub rho: Option<T>,
    pub phi_min: T,
    pub pivot: Option<usize>,
    pub argmin_levels: Vec<usize>,
    pub phi_at: Vec<T>,
    pub shu_wu: Vec<T>,
    pub hong_shu_fang: T,
    pub hong: Option<T>,
    pub stanley: T,
    pub brualdi_hoffman: T,
    pub max_degree: T,
    /// `phi_min − rho`.
    pub slack_min: Option<T>,
    /// Name of the smallest bound; earlier names win ties.
    pub winner: &'static str,
}

impl<T: Scalar> BoundReport<T> {
    pub fn new(seq: &DegreeSequence, rho: Option<T>) -> Self {
        let n = seq.len();
        let minimum = min_phi::<T>(seq);
        let phis = PhiSequence::<T>::new(seq);
        let shu_wu: Vec<T> = (1..=n).map(|l| bound_shu_wu(seq, l).unwrap()).collect();
        let mut report = Self {
            n,
            m: seq.edges(),
            rho,
            phi_min: minimum.value,
            pivot: minimum.pivot,
            argmin_levels: minimum.argmin_levels,
            phi_at: phis.values,
            hong_shu_fang: bound_hong_shu_fang(seq),
            hong: bound_hong(seq),
            stanley: bound_stanley(seq.edges()),
            brualdi_hoffman: bound_brualdi_hoffman(seq.edges()),
            max_degree: bound_max_degree(seq),
            shu_wu,
            slack_min: rho.map(|r| minimum.value - r),
            winner: "",
        };
        report.winner = report.named_bounds().into_iter().fold(("", T::infinity()), |best, (name, v)| {
            if v < best.1 {
                (name, v)
            } else {
                best
            }
        }).0;
        report
    }

    pub fn shu_wu_min(&self) -> T {
        self.shu_wu.iter().fold(T::infinity(), |m, &v| m.min(v))
    }

    pub fn named_bounds(&self) -> Vec<(&'static str, T)> {
        let mut out = vec![
            ("phi", self.phi_min),
            ("shu_wu", self.shu_wu_min()),
            ("hong_shu_fang", self.hong_shu_fang),
        ];
        if let Some(h) = self.hong {
            out.push(("hong", h));
        }
        out.extend([("stanley", self.stanley), ("brualdi_hoffman", self.brualdi_hoffman), ("max_degree", self.max_degree)]);
        out
    }

    /// Bounds that `rho` exceeds by more than `tol`.
    pub fn violations(&self, tol: T) -> Vec<&'static str> {
        let Some(rho) = self.rho else { return Vec::new() };
        let mut names: Vec<&'static str> =
            self.named_bounds().into_iter().filter(|&(_, v)| rho > v + tol).map(|(name, _)| name).collect();
        if self.phi_at.iter().any(|&v| rho > v + tol) && !names.contains(&"phi") {
            names.push("phi");
        }
        names
    }
}
