//! An open gap survives perturbations smaller than half its width.

use gaplab::gaps::{check_gap_stability, label_gaps};
use gaplab::interval::Gap;
use gaplab::rational::{fmt, int, ratio};
use gaplab::sampling::{Hopping, SamplingFunction};
use gaplab::shift::{random_sequence, Alphabet, LabelSet};
use gaplab::spectrum::spectrum_union_periodic;

fn main() -> gaplab::Result<()> {
    let a = Alphabet::uniform(2)?;
    let s = random_sequence(&a, 3);
    let p = Hopping::schrodinger();
    let q = SamplingFunction::from_values(0, 1, 2, vec![int(0), int(20)])?;
    let gap = Gap::new(2.0, 18.0)?;
    let labels = LabelSet::dyadic_like(2, 1);
    for (d0, d1) in [(ratio(1, 2), ratio(-1, 2)), (int(3), int(-4)), (ratio(15, 2), int(-7)), (int(9), int(0))] {
        let q2 = SamplingFunction::from_values(0, 1, 2, vec![d0.clone(), int(20) + &d1])?;
        let verdict = check_gap_stability(&q, &p, &q2, &p, &gap)?;
        let spectrum = spectrum_union_periodic(&q2, 6);
        let labelled = label_gaps(&q2, &p, &s, &spectrum, 20_000, &labels, 0.0)?;
        let matched: Vec<String> = labelled
            .iter()
            .map(|g| format!("({:.3}, {:.3}) → {}", g.gap.lo, g.gap.hi, g.matched_label.as_ref().map_or("-".into(), fmt)))
            .collect();
        println!("q' = ({}, {}): {verdict:?}; gaps {}", fmt(&d0), fmt(&(int(20) + &d1)), matched.join(", "));
    }
    Ok(())
}
