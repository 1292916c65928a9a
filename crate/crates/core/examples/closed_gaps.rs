//! Labels whose gaps stay closed: weak Anderson coupling and small potentials.

use gaplab::gaps::{closed_label_witness, small_coupling_closed_gap};
use gaplab::rational::{fmt, ratio};
use gaplab::sampling::SamplingFunction;
use gaplab::shift::{random_sequence, Alphabet, LabelSet};

fn main() -> gaplab::Result<()> {
    let a = Alphabet::uniform(2)?;
    let s = random_sequence(&a, 5);
    let labels = LabelSet::dyadic_like(2, 3);
    let anderson = SamplingFunction::anderson(&a);
    let closed = closed_label_witness(&anderson, &labels, &s, 20_000, 8, 0.0)?;
    println!("Anderson λ=1, closed among j/8: {:?}", closed.iter().map(fmt).collect::<Vec<_>>());

    let q = SamplingFunction::from_values(0, 2, 2, vec![ratio(1, 5), ratio(-2, 5), ratio(1, 10), ratio(0, 1)])?;
    for label in [ratio(1, 2), ratio(1, 4), ratio(1, 16)] {
        let r = small_coupling_closed_gap(&label, &q, &s, 20_000, 6)?;
        println!(
            "ℓ = {:<5} E = {:+.4} ε = {:.4} ‖q‖ = {} → {:?} (witness {:?})",
            fmt(&label),
            r.free_energy,
            r.epsilon,
            r.sup_norm,
            r.verdict,
            r.witness_energy
        );
    }
    Ok(())
}
