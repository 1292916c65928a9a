//! Finite-volume IDS of the Anderson model against the free closed form.

use gaplab::rational::int;
use gaplab::sampling::{scale, Hopping, SamplingFunction};
use gaplab::shift::{random_sequence, Alphabet};
use gaplab::tridiag::{build_truncation, free_ids, ids_curve};

fn main() -> gaplab::Result<()> {
    let a = Alphabet::uniform(2)?;
    let s = random_sequence(&a, 42);
    let n = 20_000;
    let energies: Vec<f64> = (0..=24).map(|i| -3.0 + 0.25 * i as f64).collect();
    println!("{:>6} {:>8} {:>8} {:>8}", "E", "free", "λ=1", "λ=3");
    let weak = build_truncation(&SamplingFunction::anderson(&a), &Hopping::schrodinger(), &s, n)?;
    let strong = build_truncation(&scale(&SamplingFunction::anderson(&a), &int(3)), &Hopping::schrodinger(), &s, n)?;
    for (w, st) in ids_curve(&weak, &energies).iter().zip(ids_curve(&strong, &energies)) {
        println!("{:>6.2} {:>8.4} {:>8.4} {:>8.4}", w.energy, free_ids(w.energy), w.ids_f64(), st.ids_f64());
    }
    Ok(())
}
