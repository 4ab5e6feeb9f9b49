//! Points in the search space and the box they live in.

use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in an n-dimensional real search space. Every component is finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RealVector(Vec<f64>);

impl RealVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("vector must have at least one component".into()));
        }
        if let Some(bad) = components.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "component {bad} is not finite ({})",
                components[bad]
            )));
        }
        Ok(RealVector(components))
    }

    /// Builds a vector without the finiteness check. Callers guarantee the invariant.
    pub(crate) fn from_vec_unchecked(components: Vec<f64>) -> Self {
        debug_assert!(components.iter().all(|c| c.is_finite()));
        RealVector(components)
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn distance(&self, other: &RealVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

impl Deref for RealVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for RealVector {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        RealVector::new(v)
    }
}

/// Closed interval `[low, high]` for one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub low: f64,
    pub high: f64,
}

/// Per-dimension box constraints with `low < high` everywhere.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Bounds(Vec<Interval>);

impl Bounds {
    pub fn new(pairs: impl IntoIterator<Item = (f64, f64)>) -> Result<Self> {
        let intervals: Vec<Interval> = pairs
            .into_iter()
            .map(|(low, high)| Interval { low, high })
            .collect();
        if intervals.is_empty() {
            return Err(Error::InvalidBounds("bounds must cover at least one dimension".into()));
        }
        for (j, iv) in intervals.iter().enumerate() {
            if !(iv.low.is_finite() && iv.high.is_finite()) {
                return Err(Error::InvalidBounds(format!(
                    "dimension {j}: endpoints must be finite, got [{}, {}]",
                    iv.low, iv.high
                )));
            }
            if iv.low >= iv.high {
                return Err(Error::InvalidBounds(format!(
                    "dimension {j}: low {} is not below high {}",
                    iv.low, iv.high
                )));
            }
        }
        Ok(Bounds(intervals))
    }

    /// The same interval repeated `dimension` times.
    pub fn uniform(low: f64, high: f64, dimension: usize) -> Result<Self> {
        Bounds::new(std::iter::repeat_n((low, high), dimension))
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.0
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.0.len()
            && x.iter()
                .zip(&self.0)
                .all(|(v, iv)| *v >= iv.low && *v <= iv.high)
    }

    /// Projects `x` into the box in place. Lengths must already agree.
    pub(crate) fn project_in_place(&self, x: &mut [f64]) {
        debug_assert_eq!(x.len(), self.0.len());
        for (v, iv) in x.iter_mut().zip(&self.0) {
            *v = v.clamp(iv.low, iv.high);
        }
    }

    /// Repeats the last interval until the box reaches `dimension`.
    pub(crate) fn extended_to(&self, dimension: usize) -> Bounds {
        let mut intervals = self.0.clone();
        let last = *intervals.last().expect("bounds are nonempty");
        intervals.resize(dimension.max(intervals.len()), last);
        Bounds(intervals)
    }
}

/// Componentwise projection of `x` onto `bounds`.
pub fn clamp_to_bounds(x: &RealVector, bounds: &Bounds) -> Result<RealVector> {
    if x.dimension() != bounds.dimension() {
        return Err(Error::InvalidInput(format!(
            "vector has dimension {} but bounds have dimension {}",
            x.dimension(),
            bounds.dimension()
        )));
    }
    let mut out = x.as_slice().to_vec();
    bounds.project_in_place(&mut out);
    Ok(RealVector(out))
}
