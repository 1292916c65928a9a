//! Periodic-orbit approximations of the Anderson spectrum `A + [−2, 2]`.

use gaplab::interval::hausdorff_distance;
use gaplab::rational::{int, ratio};
use gaplab::sampling::SamplingFunction;
use gaplab::shift::Word;
use gaplab::sampling::make_locally_constant;
use gaplab::shift::Alphabet;
use gaplab::spectrum::{anderson_oracle, spectrum_union_periodic};

fn main() -> gaplab::Result<()> {
    for letters in [[0, 10], [0, 3], [0, 1]] {
        let a = Alphabet::new(letters.iter().map(|&l| int(l)).collect(), vec![ratio(1, 2); 2])?;
        let q = SamplingFunction::anderson(&a);
        let oracle = anderson_oracle(&a);
        println!("A = {letters:?}, oracle {}", serde_json::to_string(&oracle).unwrap());
        for l in [1, 2, 4, 6, 8] {
            let union = spectrum_union_periodic(&q, l);
            let d = hausdorff_distance(&union, &oracle)?;
            println!("  L = {l}: {} components, d_H = {d:.3e}", union.len());
        }
    }

    // A window-2 potential has no closed form; compare against a long period.
    let a = Alphabet::uniform(2)?;
    let entries = [("00", 0), ("01", 3), ("10", 1), ("11", 5)].map(|(w, v)| (Word::parse(w, 0).unwrap(), int(v)));
    let q = make_locally_constant(0, 2, entries, &a)?;
    let reference = spectrum_union_periodic(&q, 12);
    println!("window-2 q, reference L = 12: {} components", reference.len());
    for l in [2, 4, 6, 8, 10] {
        let d = hausdorff_distance(&spectrum_union_periodic(&q, l), &reference)?;
        println!("  L = {l}: d_H = {d:.4}");
    }
    Ok(())
}
