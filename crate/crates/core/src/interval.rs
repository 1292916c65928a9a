//! Finite unions of closed intervals: spectra and their gaps.

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// Default distance below which neighbouring intervals are merged.
pub const TOL_MERGE: f64 = 1e-8;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl From<[f64; 2]> for Interval {
    fn from(v: [f64; 2]) -> Self {
        Interval::new(v[0], v[1])
    }
}

impl From<Interval> for [f64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Self {
        Interval { lo: a.min(b), hi: a.max(b) }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Open interval `(lo, hi)`: a spectral gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    pub lo: f64,
    pub hi: f64,
}

impl Gap {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return input(format!("gap ({lo}, {hi}) is empty"));
        }
        Ok(Gap { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo < x && x < self.hi
    }
}

/// Sorted union of disjoint closed intervals. Serializes as `[[a, b], ...]`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntervalUnion {
    intervals: Vec<Interval>,
}

impl IntervalUnion {
    /// Sorts and merges intervals whose distance is at most `tol_merge`.
    pub fn from_intervals(mut intervals: Vec<Interval>, tol_merge: f64) -> Self {
        intervals.retain(|i| i.lo.is_finite() && i.hi.is_finite());
        intervals.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi + tol_merge => last.hi = last.hi.max(iv.hi),
                _ => merged.push(iv),
            }
        }
        IntervalUnion { intervals: merged }
    }

    pub fn points(xs: impl IntoIterator<Item = f64>) -> Self {
        IntervalUnion::from_intervals(xs.into_iter().map(Interval::point).collect(), 0.0)
    }

    pub fn union(&self, other: &IntervalUnion, tol_merge: f64) -> IntervalUnion {
        let all = self.intervals.iter().chain(&other.intervals).copied().collect();
        IntervalUnion::from_intervals(all, tol_merge)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn hull(&self) -> Option<Interval> {
        Some(Interval::new(self.intervals.first()?.lo, self.intervals.last()?.hi))
    }

    pub fn contains(&self, x: f64) -> bool {
        self.component_of(x).is_some()
    }

    pub fn component_of(&self, x: f64) -> Option<&Interval> {
        let i = self.intervals.partition_point(|iv| iv.hi < x);
        self.intervals.get(i).filter(|iv| iv.lo <= x)
    }

    /// Distance from `x` to the union (0 inside).
    pub fn distance(&self, x: f64) -> f64 {
        let i = self.intervals.partition_point(|iv| iv.hi < x);
        let right = self.intervals.get(i).map(|iv| (iv.lo - x).max(0.0));
        let left = i.checked_sub(1).map(|j| x - self.intervals[j].hi);
        match (left, right) {
            (Some(l), Some(r)) => l.min(r),
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => f64::INFINITY,
        }
    }

    /// True if `[lo, hi]` lies inside a single component with clearance `margin`.
    pub fn interior_contains(&self, lo: f64, hi: f64, margin: f64) -> bool {
        self.component_of(lo)
            .is_some_and(|iv| iv.lo + margin < lo && hi < iv.hi - margin)
    }

    /// Bounded complementary components between consecutive members.
    pub fn gaps(&self) -> Vec<Gap> {
        self.intervals
            .windows(2)
            .map(|w| Gap { lo: w[0].hi, hi: w[1].lo })
            .collect()
    }

    pub fn scaled(&self, c: f64) -> IntervalUnion {
        IntervalUnion::from_intervals(
            self.intervals.iter().map(|iv| Interval::new(c * iv.lo, c * iv.hi)).collect(),
            0.0,
        )
    }
}

/// Bounded open gaps of a union; unbounded components are never reported.
pub fn gaps_of(u: &IntervalUnion) -> Vec<Gap> {
    u.gaps()
}

/// Merged union of `[ℓ − 2, ℓ + 2]` over the given letter values.
pub fn free_bands_around(values: impl IntoIterator<Item = f64>) -> IntervalUnion {
    IntervalUnion::from_intervals(values.into_iter().map(|v| Interval::new(v - 2.0, v + 2.0)).collect(), 0.0)
}

/// Hausdorff distance between two nonempty unions.
///
/// `x ↦ d(x, B)` is piecewise linear on each interval of `A`, so its maximum
/// sits at an endpoint of `A` or at the midpoint of a gap of `B` lying in `A`.
pub fn hausdorff_distance(u1: &IntervalUnion, u2: &IntervalUnion) -> Result<f64> {
    if u1.is_empty() || u2.is_empty() {
        return input("hausdorff distance of an empty set");
    }
    Ok(directed(u1, u2).max(directed(u2, u1)))
}

fn directed(a: &IntervalUnion, b: &IntervalUnion) -> f64 {
    let mut worst = 0.0f64;
    for iv in a.intervals() {
        worst = worst.max(b.distance(iv.lo)).max(b.distance(iv.hi));
        for g in b.gaps() {
            let mid = g.midpoint();
            if iv.contains(mid) {
                worst = worst.max(b.distance(mid));
            }
        }
    }
    worst
}
