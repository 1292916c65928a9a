//! Library results against independent computations.

use gaplab::cantor::{g_infinity, ifs_level};
use gaplab::interval::{hausdorff_distance, Interval, IntervalUnion, TOL_MERGE};
use gaplab::obstruction::{binomial_row, to_paper_form, LabelPoly};
use gaplab::rational::{int, ratio, Rational};
use gaplab::sampling::{Hopping, SamplingFunction};
use gaplab::shift::{clopen_measure, enumerate_labels, periodic_sequence, Alphabet, ClopenSet, Word};
use gaplab::spectrum::periodic_bands;
use gaplab::tridiag::{build_truncation, count_eigenvalues_leq, TridiagonalOperator};
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

fn dense(t: &TridiagonalOperator) -> DMatrix<f64> {
    let n = t.size();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            t.diagonal()[i]
        } else if i + 1 == j {
            t.offdiagonal()[i]
        } else if j + 1 == i {
            t.offdiagonal()[j]
        } else {
            0.0
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sturm_count_matches_dense_eigenvalues(
        diag in prop::collection::vec(-4.0f64..4.0, 1..13),
        off_seed in prop::collection::vec(0.0f64..2.0, 12),
        e in -7.0f64..7.0,
    ) {
        let n = diag.len();
        let t = TridiagonalOperator::new(diag, off_seed[..n - 1].to_vec()).unwrap();
        let expected = eigenvalues(dense(&t)).iter().filter(|&&l| l <= e).count();
        prop_assert_eq!(count_eigenvalues_leq(&t, e), expected);
    }
}

#[test]
fn free_dirichlet_count_is_exact() {
    // eigenvalues of the free N×N truncation are 2cos(πk/(N+1))
    for n in [1usize, 2, 7, 50, 333] {
        let t = TridiagonalOperator::free_laplacian(n);
        for e in [-1.99, -1.3, -0.2, 0.013, 0.7, 1.5, 1.999] {
            let expected = (1..=n)
                .filter(|&k| 2.0 * (std::f64::consts::PI * k as f64 / (n as f64 + 1.0)).cos() <= e)
                .count();
            assert_eq!(count_eigenvalues_leq(&t, e), expected, "n={n} e={e}");
        }
    }
}

/// Band edges of a period-`P` operator are the periodic and antiperiodic
/// eigenvalues; band `j` runs between the `j`-th of each.
fn floquet_bands(v: &[f64]) -> IntervalUnion {
    let p = v.len();
    if p == 1 {
        return IntervalUnion::from_intervals(vec![Interval::new(v[0] - 2.0, v[0] + 2.0)], TOL_MERGE);
    }
    let build = |sign: f64| {
        let mut m = DMatrix::<f64>::zeros(p, p);
        for i in 0..p {
            m[(i, i)] = v[i];
            if i + 1 < p {
                m[(i, i + 1)] = 1.0;
                m[(i + 1, i)] = 1.0;
            }
        }
        m[(0, p - 1)] += sign;
        m[(p - 1, 0)] += sign;
        eigenvalues(m)
    };
    let (per, anti) = (build(1.0), build(-1.0));
    let bands = per.iter().zip(&anti).map(|(&a, &b)| Interval::new(a.min(b), a.max(b))).collect();
    IntervalUnion::from_intervals(bands, TOL_MERGE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn discriminant_bands_match_floquet_eigenvalues(v in prop::collection::vec(-3i32..=3, 1..7)) {
        let v: Vec<f64> = v.iter().map(|&x| x as f64 * 0.75).collect();
        let got = periodic_bands(&v);
        let want = floquet_bands(&v);
        prop_assert_eq!(got.len(), want.len(), "{:?} vs {:?}", got, want);
        for (a, b) in got.intervals().iter().zip(want.intervals()) {
            prop_assert!((a.lo - b.lo).abs() < 1e-7 && (a.hi - b.hi).abs() < 1e-7, "{:?} vs {:?}", a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // strong coupling: bands far narrower than the edge tolerance
    #[test]
    fn strong_coupling_bands_match_floquet_eigenvalues(v in prop::collection::vec(0u8..4, 1..9)) {
        let v: Vec<f64> = v.iter().map(|&x| 20.0 * x as f64).collect();
        let got = periodic_bands(&v);
        let want = floquet_bands(&v);
        prop_assert!(hausdorff_distance(&got, &want).unwrap() < 1e-7, "{:?} vs {:?}", got, want);
        let (lo, hi) = (want.hull().unwrap().lo, want.hull().unwrap().hi);
        prop_assert!(got.intervals().iter().all(|iv| iv.lo >= lo - 1e-7 && iv.hi <= hi + 1e-7));
    }
}

#[test]
fn periodic_truncation_count_follows_bands() {
    // each band of a period-P operator carries IDS mass 1/P
    let s = periodic_sequence(&Word::parse("0112", 0).unwrap()).unwrap();
    let a = Alphabet::new(vec![int(0), int(1), int(2)], vec![ratio(1, 3); 3]).unwrap();
    let q = SamplingFunction::anderson(&a);
    let v = [0.0, 1.0, 1.0, 2.0];
    let bands = floquet_bands(&v);
    let n = 4000;
    let t = build_truncation(&q, &Hopping::schrodinger(), &s, n).unwrap();
    for (j, gap) in bands.gaps().iter().enumerate() {
        let ids = count_eigenvalues_leq(&t, gap.midpoint()) as f64 / n as f64;
        assert!((ids - (j + 1) as f64 / 4.0).abs() <= 2.0 / n as f64, "gap {j}: {ids}");
    }
}

/// Forward substitution in `x^k (1 − x)^{n−k} = Σ_j (−1)^{j−k} C(n−k, j−k) x^j`.
fn paper_form_by_solve(p: &LabelPoly, n: usize) -> Vec<BigInt> {
    let mut gamma: Vec<BigInt> = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut g = p.coefficient(j);
        for (k, gk) in gamma.iter().enumerate() {
            let c = &binomial_row(n - k)[j - k];
            let term = c * gk;
            if (j - k).is_odd() {
                g += term;
            } else {
                g -= term;
            }
        }
        gamma.push(g);
    }
    gamma
}

proptest! {
    #[test]
    fn paper_form_matches_triangular_solve(
        coeffs in prop::collection::vec(-20i64..=20, 1..7),
        extra in 0usize..6,
    ) {
        let p = LabelPoly::from_i64(&coeffs);
        let n = p.degree() + extra;
        prop_assert_eq!(to_paper_form(&p, n).unwrap(), paper_form_by_solve(&p, n));
    }
}

#[test]
fn golden_certificate_for_cubic() {
    let p = LabelPoly::from_i64(&[0, 2, -2, 1]);
    let gamma = to_paper_form(&p, 3).unwrap();
    assert_eq!(gamma, paper_form_by_solve(&p, 3));
    assert_eq!(gamma, [0, 2, 2, 1].map(BigInt::from).to_vec());
}

fn word_weight(w: &[usize], a: &Alphabet) -> Rational {
    w.iter().map(|&s| a.weights()[s].clone()).product()
}

#[test]
fn clopen_measure_by_enumeration() {
    let a = Alphabet::new(vec![int(-1), int(0), int(4)], vec![ratio(1, 6), ratio(1, 2), ratio(1, 3)]).unwrap();
    let cylinders = vec![Word::parse("20", -1).unwrap(), Word::parse("1", 1).unwrap(), Word::parse("012", -1).unwrap()];
    let set = ClopenSet::new(cylinders.clone());
    // window [-1, 1]: enumerate all 27 words and keep those hitting some cylinder
    let mut expected = Rational::zero();
    for idx in 0..27usize {
        let w = [idx / 9, (idx / 3) % 3, idx % 3];
        let hit = cylinders.iter().any(|c| {
            c.symbols.iter().enumerate().all(|(i, &s)| w[(c.anchor + 1) as usize + i] == s)
        });
        if hit {
            expected += word_weight(&w, &a);
        }
    }
    assert_eq!(clopen_measure(&set, &a).unwrap(), expected);
}

/// Labels at window bound `R`: positive multiples below 1 of the generator of
/// the group spanned by all length-`R` cylinder measures.
fn labels_by_span(a: &Alphabet, r: usize) -> Vec<Rational> {
    let m = a.size();
    let measures: Vec<Rational> = (0..m.pow(r as u32))
        .map(|mut idx| {
            let mut w = vec![0; r];
            for slot in w.iter_mut().rev() {
                *slot = idx % m;
                idx /= m;
            }
            word_weight(&w, a)
        })
        .collect();
    let den = measures.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let g = measures.iter().fold(BigInt::zero(), |acc, x| acc.gcd(&(x.numer() * (&den / x.denom()))));
    let step = Rational::new(g, den);
    let mut out = Vec::new();
    let mut x = step.clone();
    while x < Rational::one() {
        out.push(x.clone());
        x += &step;
    }
    out
}

#[test]
fn label_sets_match_cylinder_span() {
    let alphabets = [
        Alphabet::uniform(2).unwrap(),
        Alphabet::uniform(3).unwrap(),
        Alphabet::bernoulli(ratio(1, 4)).unwrap(),
        Alphabet::bernoulli(ratio(2, 5)).unwrap(),
        Alphabet::new(vec![int(0), int(1), int(2)], vec![ratio(1, 2), ratio(1, 3), ratio(1, 6)]).unwrap(),
    ];
    for a in &alphabets {
        for r in 1..=3 {
            assert_eq!(enumerate_labels(a, r).unwrap().labels, labels_by_span(a, r), "{a:?} R={r}");
        }
    }
}

#[test]
fn counting_function_by_components() {
    for m in [2usize, 3] {
        for level in 1..=4 {
            let f = ifs_level(m, level).unwrap();
            let total = Rational::from_integer(BigInt::from(f.components.len()));
            for gap in f.gaps() {
                let x = gap.midpoint();
                let left = f.components.iter().filter(|c| c.hi < x).count();
                let expected = Rational::from_integer(BigInt::from(left)) / &total;
                assert_eq!(g_infinity(m, &x, level).unwrap(), expected);
                assert!(!expected.is_negative());
            }
        }
    }
}
