//! Gap labelling, gap stability, large-coupling sweeps, the
//! diagonal-to-Schrödinger rescaling and closed-gap witnesses.

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{input, Result};
use crate::interval::{Gap, IntervalUnion, TOL_MERGE};
use crate::rational::{self, Rational};
use crate::sampling::{delta_separation, scale, Hopping, SamplingFunction};
use crate::shift::{enumerate_labels, Alphabet, LabelSet, SequenceSource};
use crate::spectrum::spectrum_union_periodic;
use crate::tridiag::{build_truncation, count_eigenvalues_leq, energy_for_count, IdsSample, TridiagonalOperator};

/// Default user tolerance for matching an IDS value to a label.
pub const DEFAULT_LABEL_TOL: f64 = 1e-3;

/// Tolerance for matching a truncated IDS value to a label:
/// `max(2/N, user_tol, stat)`. `stat` bounds the sampling error of the
/// sequence: `3/√N` for i.i.d. sequences, `period/N` for periodic ones.
pub fn label_tolerance(n: usize, user_tol: f64, s: &SequenceSource) -> f64 {
    let n = n as f64;
    let stat = match s.period() {
        Some(p) => p as f64 / n,
        None => 3.0 / n.sqrt(),
    };
    (2.0 / n).max(user_tol).max(stat)
}

/// A spectral gap with its truncated IDS value and matched label.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelledGap {
    pub gap: Gap,
    pub ids: IdsSample,
    pub matched_label: Option<Rational>,
    pub label_tolerance: f64,
}

impl LabelledGap {
    pub fn ids_value(&self) -> Rational {
        self.ids.ids()
    }
}

/// Labels every gap of `spectrum` by the IDS of the truncation at its midpoint.
pub fn label_gaps(
    q: &SamplingFunction,
    p: &Hopping,
    s: &SequenceSource,
    spectrum: &IntervalUnion,
    n: usize,
    labels: &LabelSet,
    user_tol: f64,
) -> Result<Vec<LabelledGap>> {
    let t = build_truncation(q, p, s, n)?;
    Ok(label_gaps_on(&t, spectrum, labels, label_tolerance(n, user_tol, s)))
}

fn label_gaps_on(t: &TridiagonalOperator, spectrum: &IntervalUnion, labels: &LabelSet, tol: f64) -> Vec<LabelledGap> {
    spectrum
        .gaps()
        .into_iter()
        .map(|gap| {
            let e = gap.midpoint();
            let ids = IdsSample { energy: e, count: count_eigenvalues_leq(t, e), size: t.size() };
            let matched_label = labels
                .nearest(ids.ids_f64())
                .filter(|(_, d)| *d <= tol)
                .map(|(l, _)| l.clone());
            LabelledGap { gap, ids, matched_label, label_tolerance: tol }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Guaranteed,
    NotGuaranteed,
}

/// Sufficient condition for a perturbed family to keep an open gap with
/// the same label: `‖q − q₂‖∞ + 2‖p − p₂‖∞ < |gap|/2`, evaluated exactly.
pub fn check_gap_stability(
    q: &SamplingFunction,
    p: &Hopping,
    q2: &SamplingFunction,
    p2: &Hopping,
    gap: &Gap,
) -> Result<Stability> {
    let width = rational::from_f64(gap.hi)? - rational::from_f64(gap.lo)?;
    if !width.is_positive() {
        return input("gap is empty");
    }
    let budget = q.sup_distance(q2)? + rational::int(2) * p.sup_distance(p2)?;
    Ok(if budget < width / rational::int(2) {
        Stability::Guaranteed
    } else {
        Stability::NotGuaranteed
    })
}

/// Result of one coupling constant in a large-coupling sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub lambda: Rational,
    pub spectrum: IntervalUnion,
    pub gaps: Vec<LabelledGap>,
    /// Distinct matched labels, ascending.
    pub open_labels: Vec<Rational>,
    /// `4/δ(q)`; every label `j/m^R` is open for `λ` above it.
    pub threshold: Rational,
    /// Every label of the sweep's resolution was matched to an open gap.
    pub all_open: bool,
}

impl SweepReport {
    pub fn threshold_passed(&self) -> bool {
        self.lambda > self.threshold
    }
}

/// Opens the gaps of `λq` for `q` separating all words of its window.
///
/// For each `λ`, the Schrödinger spectrum of `λq` is approximated by the
/// periodic orbits of period `≤ max_period` and its gaps are labelled
/// against the label group at resolution `R` = window length of `q`.
#[allow(clippy::too_many_arguments)]
pub fn large_coupling_sweep(
    q: &SamplingFunction,
    a: &Alphabet,
    lambdas: &[Rational],
    s: &SequenceSource,
    n: usize,
    max_period: usize,
    user_tol: f64,
) -> Result<Vec<SweepReport>> {
    if !q.separates_all_words() {
        return input(format!(
            "q must take m^R = {} distinct values on its window of length {}",
            q.table().len(),
            q.window_length()
        ));
    }
    if q.alphabet_size() != a.size() {
        return input("q and the alphabet have different sizes");
    }
    if let Some(l) = lambdas.iter().find(|l| !l.is_positive()) {
        return input(format!("coupling {} must be positive", rational::fmt(l)));
    }
    let labels = enumerate_labels(a, q.window_length())?;
    let threshold = rational::int(4) / delta_separation(q)?;
    let tol = label_tolerance(n, user_tol, s);
    lambdas
        .par_iter()
        .map(|lambda| {
            let scaled = scale(q, lambda);
            let spectrum = spectrum_union_periodic(&scaled, max_period);
            let t = build_truncation(&scaled, &Hopping::schrodinger(), s, n)?;
            let gaps = label_gaps_on(&t, &spectrum, &labels, tol);
            let mut open_labels: Vec<Rational> = gaps.iter().filter_map(|g| g.matched_label.clone()).collect();
            open_labels.sort();
            open_labels.dedup();
            let all_open = labels.labels.iter().all(|l| open_labels.contains(l));
            Ok(SweepReport {
                lambda: lambda.clone(),
                spectrum,
                gaps,
                open_labels,
                threshold: threshold.clone(),
                all_open,
            })
        })
        .collect()
}

/// Rescaling that turns an open gap of the diagonal family `V_q` into an
/// open gap of the Schrödinger family `Δ + ε⁻¹V_q` with the same label.
/// Returns `ε = |gap|/8` and `ε⁻¹q`.
pub fn scale_diagonal_to_schrodinger(q: &SamplingFunction, gap: &Gap) -> Result<(Rational, SamplingFunction)> {
    let width = rational::from_f64(gap.hi)? - rational::from_f64(gap.lo)?;
    if !width.is_positive() {
        return input("gap is empty");
    }
    let epsilon = width / rational::int(8);
    let scaled = scale(q, &epsilon.recip());
    Ok((epsilon, scaled))
}

/// Labels whose gap is closed at this resolution.
///
/// For each label `ℓ` the energies where the truncated IDS crosses
/// `ℓ ± tol` are located; the label is closed when both lie inside a single
/// component of the periodic-orbit spectrum of period `≤ max_period`.
pub fn closed_label_witness(
    q: &SamplingFunction,
    labels: &LabelSet,
    s: &SequenceSource,
    n: usize,
    max_period: usize,
    user_tol: f64,
) -> Result<Vec<Rational>> {
    if labels.is_empty() {
        return Ok(Vec::new());
    }
    let t = build_truncation(q, &Hopping::schrodinger(), s, n)?;
    let spectrum = spectrum_union_periodic(q, max_period);
    let tol = label_tolerance(n, user_tol, s);
    let count_at = |x: f64| ((x * n as f64).ceil().max(1.0) as usize).min(n);
    Ok(labels
        .labels
        .iter()
        .filter(|l| {
            let l = rational::to_f64(l);
            let e_lo = energy_for_count(&t, count_at(l - tol), 1e-12);
            let e_hi = energy_for_count(&t, count_at(l + tol), 1e-12);
            spectrum.interior_contains(e_lo, e_hi, TOL_MERGE)
        })
        .cloned()
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallCouplingVerdict {
    ClosedConfirmed,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SmallCouplingReport {
    pub verdict: SmallCouplingVerdict,
    /// Energy with free IDS equal to the label.
    pub free_energy: f64,
    /// Radius `½ dist(E, {±2})` of the ball around the zero function.
    pub epsilon: f64,
    pub sup_norm: f64,
    /// Energy in `[E − ‖q‖∞, E + ‖q‖∞]` where the truncated IDS of `q`
    /// equals the free one.
    pub witness_energy: Option<f64>,
}

/// Checks that the gap with label `ℓ` is closed for a small potential `q`.
///
/// The truncated counts obey `count_q(E − ‖q‖) ≤ count_0(E) ≤ count_q(E + ‖q‖)`,
/// so some `E′` in that window carries the free count; the label is closed
/// when `E′` lies in the interior of the periodic-orbit spectrum.
pub fn small_coupling_closed_gap(
    label: &Rational,
    q: &SamplingFunction,
    s: &SequenceSource,
    n: usize,
    max_period: usize,
) -> Result<SmallCouplingReport> {
    if !(label.is_positive() && label < &Rational::one()) {
        return input(format!("label {} must lie in (0, 1)", rational::fmt(label)));
    }
    let l = rational::to_f64(label);
    let free_energy = 2.0 * (std::f64::consts::PI * (1.0 - l)).cos();
    let epsilon = 0.5 * (2.0 - free_energy.abs());
    let sup = q.sup_norm();
    let sup_f = rational::to_f64(&sup);
    let mut report = SmallCouplingReport {
        verdict: SmallCouplingVerdict::Inconclusive,
        free_energy,
        epsilon,
        sup_norm: sup_f,
        witness_energy: None,
    };
    if !(sup_f < epsilon) {
        return Ok(report);
    }
    let free = TridiagonalOperator::free_laplacian(n);
    let target = count_eigenvalues_leq(&free, free_energy);
    let t = build_truncation(q, &Hopping::schrodinger(), s, n)?;
    let slack = 1e-9;
    let (lo, hi) = (free_energy - sup_f - slack, free_energy + sup_f + slack);
    let witness = if count_eigenvalues_leq(&t, lo) == target {
        lo
    } else {
        energy_for_count(&t, target, 1e-13)
    };
    let in_window = lo <= witness && witness <= hi && count_eigenvalues_leq(&t, witness) == target;
    let ids_ok = (target as f64 / n as f64 - l).abs() <= 2.0 / n as f64;
    let spectrum = spectrum_union_periodic(q, max_period);
    if in_window && ids_ok && spectrum.interior_contains(witness, witness, TOL_MERGE) {
        report.verdict = SmallCouplingVerdict::ClosedConfirmed;
        report.witness_energy = Some(witness);
    }
    Ok(report)
}
