//! The Cantor set `C_m` generated by `f_j(x) = (2j + x)/(2m − 1)`, its
//! counting function, and the check that the diagonal family built from the
//! truncated Cantor potential has IDS equal to that counting function.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{input, GapError, Result};
use crate::rational::{self, Rational};
use crate::sampling::{cantor_function, Hopping};
use crate::shift::{random_sequence, Alphabet};
use crate::tridiag::{build_truncation, count_eigenvalues_leq, IdsSample};

/// Closed interval with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl ExactInterval {
    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }
}

/// The `n`-th IFS stage `F_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct IfsLevel {
    pub m: usize,
    pub level: usize,
    pub components: Vec<ExactInterval>,
}

impl IfsLevel {
    /// Open intervals between consecutive components.
    pub fn gaps(&self) -> Vec<ExactInterval> {
        self.components
            .windows(2)
            .map(|w| ExactInterval { lo: w[0].hi.clone(), hi: w[1].lo.clone() })
            .collect()
    }
}

pub fn ifs_level(m: usize, n: usize) -> Result<IfsLevel> {
    if m < 2 {
        return input("IFS needs m ≥ 2");
    }
    let ratio = rational::int(2 * m as i64 - 1);
    let mut components = vec![ExactInterval { lo: Rational::zero(), hi: Rational::one() }];
    for _ in 0..n {
        let ratio = &ratio;
        components = (0..m)
            .flat_map(|j| {
                let shift = rational::int(2 * j as i64);
                components.iter().map(move |c| ExactInterval {
                    lo: (&shift + &c.lo) / ratio,
                    hi: (&shift + &c.hi) / ratio,
                })
            })
            .collect();
    }
    Ok(IfsLevel { m, level: n, components })
}

/// `g_n(x)`: fraction of the `m^n` components of `F_n` lying strictly left of `x`.
///
/// Exact for `x` outside the interior of every component; points inside a
/// surviving component raise a resolution error. Points left of 0 map to 0,
/// points right of 1 to 1.
pub fn g_infinity(m: usize, x: &Rational, depth: usize) -> Result<Rational> {
    if m < 2 {
        return input("IFS needs m ≥ 2");
    }
    let total = num_traits::pow(BigInt::from(m), depth);
    let ratio = rational::int(2 * m as i64 - 1);
    let mut x = x.clone();
    let mut left = BigInt::zero();
    for level in (0..depth).rev() {
        let block = num_traits::pow(BigInt::from(m), level);
        // images f_j([0,1]) = [2j/(2m−1), (2j+1)/(2m−1)], ordered left to right
        let y = &x * &ratio;
        let fully_left = (0..m).filter(|&j| y > rational::int(2 * j as i64 + 1)).count();
        left += &block * BigInt::from(fully_left);
        if fully_left == m || y < rational::int(2 * fully_left as i64) {
            return Ok(Rational::new(left, total));
        }
        x = y - rational::int(2 * fully_left as i64);
    }
    if x > Rational::one() {
        left += BigInt::one();
    } else if x > Rational::zero() && x < Rational::one() {
        return Err(GapError::Resolution(format!(
            "point lies inside a component of F_{depth}; increase the depth"
        )));
    }
    Ok(Rational::new(left, total))
}

/// Comparison at one gap of `F_level`.
#[derive(Debug, Clone, PartialEq)]
pub struct CantorGapCheck {
    pub level: usize,
    pub gap: ExactInterval,
    pub g_infinity: Rational,
    pub ids: IdsSample,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CantorReport {
    pub m: usize,
    pub depth: usize,
    pub size: usize,
    pub tolerance: f64,
    pub checks: Vec<CantorGapCheck>,
    pub max_deviation: f64,
}

impl CantorReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Compares the truncated IDS of the diagonal Cantor family at every gap
/// midpoint of `F_1, …, F_max_level` with `g_∞`.
///
/// The sequence is i.i.d. uniform over `m` letters. The pass tolerance is
/// `max(2/N, 3/√N)`.
pub fn verify_cantor_ids(m: usize, depth: usize, n: usize, max_level: usize, seed: u64) -> Result<CantorReport> {
    if max_level > depth {
        return Err(GapError::Resolution(format!(
            "gaps of level {max_level} are not resolved by a potential of depth {depth}"
        )));
    }
    let q = cantor_function(m, depth)?;
    let a = Alphabet::uniform(m)?;
    let s = random_sequence(&a, seed);
    let t = build_truncation(&q, &Hopping::diagonal(), &s, n)?;
    let tolerance = (2.0 / n as f64).max(3.0 / (n as f64).sqrt());
    let mut tasks = Vec::new();
    for level in 1..=max_level {
        for gap in ifs_level(m, level)?.gaps() {
            tasks.push((level, gap));
        }
    }
    let checks = tasks
        .into_par_iter()
        .map(|(level, gap)| {
            let mid = gap.midpoint();
            let g = g_infinity(m, &mid, level)?;
            let e = rational::to_f64(&mid);
            let ids = IdsSample { energy: e, count: count_eigenvalues_leq(&t, e), size: n };
            let pass = (ids.ids_f64() - rational::to_f64(&g)).abs() <= tolerance;
            Ok(CantorGapCheck { level, gap, g_infinity: g, ids, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    let max_deviation = checks
        .iter()
        .map(|c| (c.ids.ids_f64() - rational::to_f64(&c.g_infinity)).abs())
        .fold(0.0, f64::max);
    Ok(CantorReport { m, depth, size: n, tolerance, checks, max_deviation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn iv(a: (i64, i64), b: (i64, i64)) -> ExactInterval {
        ExactInterval { lo: ratio(a.0, a.1), hi: ratio(b.0, b.1) }
    }

    #[test]
    fn levels() {
        assert_eq!(ifs_level(2, 0).unwrap().components, vec![iv((0, 1), (1, 1))]);
        assert_eq!(ifs_level(2, 1).unwrap().components, vec![iv((0, 1), (1, 3)), iv((2, 3), (1, 1))]);
        assert_eq!(
            ifs_level(2, 2).unwrap().components,
            vec![iv((0, 1), (1, 9)), iv((2, 9), (1, 3)), iv((2, 3), (7, 9)), iv((8, 9), (1, 1))]
        );
        assert_eq!(
            ifs_level(3, 1).unwrap().components,
            vec![iv((0, 1), (1, 5)), iv((2, 5), (3, 5)), iv((4, 5), (1, 1))]
        );
        assert!(ifs_level(1, 1).is_err());
    }

    #[test]
    fn counting_function_values() {
        assert_eq!(g_infinity(2, &ratio(1, 2), 1).unwrap(), ratio(1, 2));
        assert_eq!(g_infinity(2, &ratio(15, 100), 2).unwrap(), ratio(1, 4));
        assert_eq!(g_infinity(2, &int(0), 5).unwrap(), int(0));
        assert_eq!(g_infinity(2, &int(2), 3).unwrap(), int(1));
        assert_eq!(g_infinity(3, &ratio(3, 10), 1).unwrap(), ratio(1, 3));
        assert_eq!(g_infinity(3, &ratio(7, 10), 1).unwrap(), ratio(2, 3));
        // endpoints: components touching x from the right are not counted
        assert_eq!(g_infinity(2, &ratio(2, 3), 3).unwrap(), ratio(1, 2));
        assert_eq!(g_infinity(2, &ratio(1, 3), 3).unwrap(), ratio(3, 8));
    }

    #[test]
    fn interior_points_need_more_depth() {
        assert!(matches!(g_infinity(2, &ratio(1, 10), 1), Err(GapError::Resolution(_))));
        assert!(matches!(g_infinity(2, &ratio(1, 2), 0), Err(GapError::Resolution(_))));
        assert!(g_infinity(2, &ratio(1, 10), 2).is_err());
        assert!(g_infinity(2, &ratio(1, 10), 3).is_err());
        // 1/10 = 0.0022 0022… in base 3 never leaves the Cantor set
        assert!(g_infinity(2, &ratio(1, 10), 8).is_err());
        assert_eq!(g_infinity(2, &ratio(1, 8), 4).unwrap(), ratio(4, 16));
    }

    #[test]
    fn small_report() {
        let r = verify_cantor_ids(2, 4, 20_000, 2, 5).unwrap();
        assert_eq!(r.checks.len(), 1 + 3);
        assert!(r.all_pass(), "{r:?}");
        let r3 = verify_cantor_ids(3, 3, 20_000, 1, 5).unwrap();
        let labels: Vec<_> = r3.checks.iter().map(|c| c.g_infinity.clone()).collect();
        assert_eq!(labels, vec![ratio(1, 3), ratio(2, 3)]);
        assert!(matches!(verify_cantor_ids(2, 2, 100, 3, 1), Err(GapError::Resolution(_))));
    }
}
