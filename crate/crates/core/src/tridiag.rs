//! Dirichlet truncations of ergodic Jacobi operators and exact eigenvalue
//! counting by negative inertia.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{input, Result};
use crate::rational::{self, Rational};
use crate::sampling::{Hopping, SamplingFunction};
use crate::shift::SequenceSource;

/// Symmetric tridiagonal matrix with nonnegative off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diagonal: Vec<f64>,
    offdiagonal: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diagonal: Vec<f64>, offdiagonal: Vec<f64>) -> Result<Self> {
        if diagonal.is_empty() {
            return input("operator must have size ≥ 1");
        }
        if offdiagonal.len() + 1 != diagonal.len() {
            return input("off-diagonal must have N − 1 entries");
        }
        if offdiagonal.iter().any(|&b| !(b >= 0.0)) {
            return input("off-diagonal entries must be nonnegative");
        }
        Ok(TridiagonalOperator { diagonal, offdiagonal })
    }

    /// Dirichlet free Laplacian of size `n`.
    pub fn free_laplacian(n: usize) -> Self {
        TridiagonalOperator::new(vec![0.0; n], vec![1.0; n.saturating_sub(1)]).expect("n ≥ 1")
    }

    pub fn size(&self) -> usize {
        self.diagonal.len()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn offdiagonal(&self) -> &[f64] {
        &self.offdiagonal
    }

    /// Gershgorin enclosure of the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.size();
        let radius = |i: usize| {
            let left = if i > 0 { self.offdiagonal[i - 1] } else { 0.0 };
            let right = if i + 1 < n { self.offdiagonal[i] } else { 0.0 };
            left + right
        };
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            (lo.min(self.diagonal[i] - radius(i)), hi.max(self.diagonal[i] + radius(i)))
        })
    }

    fn scale(&self) -> f64 {
        let a = self.diagonal.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let b = self.offdiagonal.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if a + b > 0.0 {
            a + b
        } else {
            1.0
        }
    }
}

/// Restriction of `J_{q,p,ω}` to `[0, N−1]`.
pub fn build_truncation(
    q: &SamplingFunction,
    p: &Hopping,
    s: &SequenceSource,
    n: usize,
) -> Result<TridiagonalOperator> {
    if n == 0 {
        return input("truncation size must be ≥ 1");
    }
    if p.min_value().is_negative() {
        return input("off-diagonal sampling function takes negative values");
    }
    let m = match p {
        Hopping::Function(f) if f.alphabet_size() != q.alphabet_size() => {
            return input("q and p are defined over different alphabets")
        }
        _ => q.alphabet_size(),
    };
    if s.max_symbol() >= m {
        return input(format!("sequence uses symbol {} but alphabet has size {m}", s.max_symbol()));
    }
    let diagonal = q.values_along(s, 0, n);
    let offdiagonal = p.values_along(s, 0, n - 1);
    TridiagonalOperator::new(diagonal, offdiagonal)
}

/// Number of eigenvalues `≤ e`.
///
/// Counts negative pivots of the LDLᵀ factorisation of `T − e`. An exactly
/// zero pivot is replaced by `−2⁻⁵⁰·scale(T)`, which counts an eigenvalue
/// sitting exactly at `e`.
pub fn count_eigenvalues_leq(t: &TridiagonalOperator, e: f64) -> usize {
    let guard = t.scale() * 2f64.powi(-50);
    let mut count = 0;
    let mut d = 1.0;
    let mut b2 = 0.0;
    for (k, &a) in t.diagonal.iter().enumerate() {
        d = (a - e) - b2 / d;
        if d == 0.0 {
            d = -guard;
        }
        if d < 0.0 {
            count += 1;
        }
        if k < t.offdiagonal.len() {
            b2 = t.offdiagonal[k] * t.offdiagonal[k];
        }
    }
    count
}

/// Truncated eigenvalue count at one energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdsSample {
    pub energy: f64,
    pub count: usize,
    pub size: usize,
}

impl IdsSample {
    /// `count / size`, exactly.
    pub fn ids(&self) -> Rational {
        Rational::new(BigInt::from(self.count), BigInt::from(self.size))
    }

    pub fn ids_f64(&self) -> f64 {
        self.count as f64 / self.size as f64
    }

    pub fn ids_string(&self) -> String {
        rational::fmt(&self.ids())
    }
}

pub fn ids_estimate(
    q: &SamplingFunction,
    p: &Hopping,
    s: &SequenceSource,
    e: f64,
    n: usize,
) -> Result<IdsSample> {
    let t = build_truncation(q, p, s, n)?;
    Ok(IdsSample { energy: e, count: count_eigenvalues_leq(&t, e), size: n })
}

/// Counts for several energies on one truncation.
pub fn ids_curve(t: &TridiagonalOperator, energies: &[f64]) -> Vec<IdsSample> {
    energies
        .iter()
        .map(|&e| IdsSample { energy: e, count: count_eigenvalues_leq(t, e), size: t.size() })
        .collect()
}

/// Smallest energy (to `tol`) at which the count reaches `target`.
pub fn energy_for_count(t: &TridiagonalOperator, target: usize, tol: f64) -> f64 {
    let (mut lo, mut hi) = t.gershgorin();
    lo -= 1.0;
    hi += 1.0;
    if target == 0 {
        return lo;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if count_eigenvalues_leq(t, mid) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Closed-form IDS of the free Laplacian, `1 − arccos(E/2)/π` on `[−2, 2]`.
pub fn free_ids(e: f64) -> f64 {
    if e <= -2.0 {
        0.0
    } else if e >= 2.0 {
        1.0
    } else {
        1.0 - (e / 2.0).acos() / std::f64::consts::PI
    }
}
