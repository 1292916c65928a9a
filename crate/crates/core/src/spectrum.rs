//! Spectra of periodic Schrödinger operators via the Floquet discriminant,
//! and their unions over all periodic orbits up to a given period.

use rayon::prelude::*;

use crate::error::Result;
use crate::interval::{free_bands_around, Interval, IntervalUnion, TOL_MERGE};
use crate::rational;
use crate::sampling::SamplingFunction;
use crate::shift::{periodic_sequence, Alphabet, Word};
use crate::tridiag::{energy_for_count, TridiagonalOperator};

/// Bisection tolerance for band edges.
pub const TOL_EDGE: f64 = 1e-10;

/// Trace of the one-period transfer matrix `Π [[E − V(n), −1], [1, 0]]`.
pub fn discriminant(potential: &[f64], e: f64) -> f64 {
    discriminant_with_error(potential, e).0
}

/// `Δ(E)` and a bound on its rounding error, from the same recursion run on
/// absolute values.
fn discriminant_with_error(potential: &[f64], e: f64) -> (f64, f64) {
    // columns of the running product applied to (1,0) and (0,1)
    let (mut u0, mut u1, mut v0, mut v1) = (1.0, 0.0, 0.0, 1.0);
    let (mut au0, mut au1, mut av0, mut av1) = (1.0f64, 0.0f64, 0.0f64, 1.0f64);
    for &v in potential {
        let a = e - v;
        (u0, u1) = (a * u0 - u1, u0);
        (v0, v1) = (a * v0 - v1, v0);
        let a = a.abs();
        (au0, au1) = (a * au0 + au1, au0);
        (av0, av1) = (a * av0 + av1, av0);
    }
    let err = 4.0 * (potential.len() as f64 + 1.0) * f64::EPSILON * (au0 + av1);
    (u0 + v1, err)
}

/// Bands `{E : |Δ(E)| ≤ 2}` of the periodic operator with the given
/// one-period potential.
///
/// The Dirichlet eigenvalues of one period with site 0 removed lie one in
/// each gap closure, so consecutive ones bracket exactly one band. Inside a
/// bracket `Δ` has a single zero, and each edge is bisected between that
/// zero and the bracket end. `|Δ| = 2` is decided up to the rounding error
/// of `Δ`, so bands touching at a double root merge.
pub fn periodic_bands(potential: &[f64]) -> IntervalUnion {
    let period = potential.len();
    let vmin = potential.iter().copied().fold(f64::INFINITY, f64::min);
    let vmax = potential.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut brackets = vec![vmin - 3.0];
    if period > 1 {
        let t = TridiagonalOperator::new(potential[1..].to_vec(), vec![1.0; period - 2]).expect("finite potential");
        brackets.extend((1..period).map(|k| energy_for_count(&t, k, 1e-13)));
    }
    brackets.push(vmax + 3.0);
    let inside = |e: f64| {
        let (d, err) = discriminant_with_error(potential, e);
        d.abs() <= 2.0 + err
    };
    let bands = brackets
        .windows(2)
        .map(|w| {
            let centre = band_centre(potential, &inside, w[0], w[1]);
            if !inside(centre) {
                // narrower than the float spacing at this energy
                return Interval::point(centre);
            }
            Interval::new(bisect(&inside, centre, w[0]), bisect(&inside, centre, w[1]))
        })
        .collect();
    IntervalUnion::from_intervals(bands, TOL_MERGE)
}

/// Zero of `Δ` in a bracket, refined until it lies inside the band; bands
/// at strong coupling can be far narrower than `TOL_EDGE`.
fn band_centre(potential: &[f64], inside: impl Fn(f64) -> bool, lo: f64, hi: f64) -> f64 {
    let positive_at_lo = discriminant(potential, lo) > 0.0;
    let (mut a, mut b) = (lo, hi);
    loop {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b || inside(mid) {
            return mid;
        }
        if (discriminant(potential, mid) > 0.0) == positive_at_lo {
            a = mid;
        } else {
            b = mid;
        }
    }
}

/// Bisects between `from`, where `pred` holds its reference value, and
/// `to`, which is taken to hold the opposite one.
fn bisect(pred: impl Fn(f64) -> bool, from: f64, to: f64) -> f64 {
    let start = pred(from);
    let (mut a, mut b) = (from, to);
    while (b - a).abs() > TOL_EDGE {
        let mid = 0.5 * (a + b);
        if mid == a || mid == b {
            break;
        }
        if pred(mid) == start {
            a = mid;
        } else {
            b = mid;
        }
    }
    0.5 * (a + b)
}

/// Spectrum of `H_{q,ω}` for the periodic sequence `ω = word^ℤ`.
pub fn periodic_schrodinger_spectrum(q: &SamplingFunction, word: &Word) -> Result<IntervalUnion> {
    let s = periodic_sequence(word)?;
    let potential = q.values_along(&s, 0, word.len());
    Ok(periodic_bands(&potential))
}

/// Range of `q`, as degenerate intervals.
pub fn diagonal_spectrum(q: &SamplingFunction) -> IntervalUnion {
    IntervalUnion::points(q.distinct_values().iter().map(rational::to_f64))
}

/// Merged union of periodic spectra over all words of length `1..=max_period`.
///
/// Only primitive words in minimal rotation are solved: rotations and
/// powers of a word generate the same operator up to translation.
pub fn spectrum_union_periodic(q: &SamplingFunction, max_period: usize) -> IntervalUnion {
    let m = q.alphabet_size();
    let words: Vec<Word> = (1..=max_period)
        .flat_map(|p| Word::all(m, p, 0))
        .filter(|w| w.is_primitive() && w.min_rotation() == *w)
        .collect();
    let bands: Vec<Interval> = words
        .par_iter()
        .map(|w| periodic_schrodinger_spectrum(q, w).expect("nonempty word"))
        .collect::<Vec<_>>()
        .into_iter()
        .flat_map(|u| u.intervals().to_vec())
        .collect();
    IntervalUnion::from_intervals(bands, TOL_MERGE)
}

/// Almost-sure spectrum of the Anderson model, `A + [−2, 2]`.
pub fn anderson_oracle(a: &Alphabet) -> IntervalUnion {
    free_bands_around(a.letters().iter().map(rational::to_f64))
}
