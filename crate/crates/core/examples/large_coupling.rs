//! Opening every gap of the label group by increasing the coupling.
//!
//! `q` takes four distinct values on words of length 2, so the labels are
//! `j/4` and the gaps are guaranteed open once `λ > 4/δ(q)`.

use gaplab::rational::{fmt, int, Rational};
use gaplab::sampling::{delta_separation, make_locally_constant};
use gaplab::gaps::large_coupling_sweep;
use gaplab::shift::{random_sequence, Alphabet, Word};

fn main() -> gaplab::Result<()> {
    let a = Alphabet::uniform(2)?;
    let entries = [("00", 0), ("01", 1), ("10", 2), ("11", 3)]
        .into_iter()
        .map(|(w, v)| Ok((Word::parse(w, 0)?, int(v))))
        .collect::<gaplab::Result<Vec<_>>>()?;
    let q = make_locally_constant(0, 2, entries, &a)?;
    println!("δ(q) = {}", fmt(&delta_separation(&q)?));
    let lambdas: Vec<Rational> = [1, 2, 4, 8, 16, 20, 40].map(int).to_vec();
    let s = random_sequence(&a, 7);
    for r in large_coupling_sweep(&q, &a, &lambdas, &s, 50_000, 8, 0.0)? {
        let open: Vec<String> = r.open_labels.iter().map(fmt).collect();
        println!(
            "λ = {:>2} (threshold {}): {} gaps, open labels [{}]{}",
            fmt(&r.lambda),
            fmt(&r.threshold),
            r.gaps.len(),
            open.join(", "),
            if r.all_open { ", all open" } else { "" }
        );
    }
    Ok(())
}
