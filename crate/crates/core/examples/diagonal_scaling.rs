//! Turning a gap of a diagonal family into a Schrödinger gap with the same label.

use gaplab::gaps::scale_diagonal_to_schrodinger;
use gaplab::rational::{fmt, to_f64};
use gaplab::sampling::{Hopping, SamplingFunction};
use gaplab::shift::{random_sequence, Alphabet};
use gaplab::spectrum::{diagonal_spectrum, spectrum_union_periodic};
use gaplab::tridiag::ids_estimate;

fn main() -> gaplab::Result<()> {
    let a = Alphabet::uniform(3)?;
    let q = SamplingFunction::anderson(&a);
    let s = random_sequence(&a, 2);
    for gap in diagonal_spectrum(&q).gaps() {
        let (eps, scaled) = scale_diagonal_to_schrodinger(&q, &gap)?;
        let mid = gap.midpoint() / to_f64(&eps);
        let diag = ids_estimate(&q, &Hopping::diagonal(), &s, gap.midpoint(), 30_000)?;
        let schr = ids_estimate(&scaled, &Hopping::schrodinger(), &s, mid, 30_000)?;
        let open = spectrum_union_periodic(&scaled, 6).gaps().iter().any(|g| g.contains(mid));
        println!(
            "gap ({}, {}): ε = {}, diagonal ids {:.5}, Schrödinger ids at {mid} = {:.5}, open: {open}",
            gap.lo,
            gap.hi,
            fmt(&eps),
            diag.ids_f64(),
            schr.ids_f64()
        );
    }
    Ok(())
}
