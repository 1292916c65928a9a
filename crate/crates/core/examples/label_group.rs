//! Admissible gap labels: measures of clopen sets, up to a window bound.

use gaplab::rational::{fmt, ratio};
use gaplab::shift::{clopen_measure, enumerate_labels, Alphabet, ClopenSet, Word};

fn show(name: &str, a: &Alphabet, r: usize) -> gaplab::Result<()> {
    let labels = enumerate_labels(a, r)?;
    let shown: Vec<String> = labels.labels.iter().take(12).map(fmt).collect();
    let more = if labels.len() > 12 { ", …" } else { "" };
    println!("{name}, R = {r}: {} labels [{}{more}]", labels.len(), shown.join(", "));
    Ok(())
}

fn main() -> gaplab::Result<()> {
    let uniform = Alphabet::uniform(3)?;
    let biased = Alphabet::bernoulli(ratio(1, 4))?;
    for r in 1..=3 {
        show("uniform m=3", &uniform, r)?;
        show("Bernoulli(1/4)", &biased, r)?;
    }
    let c = ClopenSet::new(vec![Word::parse("01", 0)?, Word::parse("1", 5)?]);
    println!("μ([01]_0 ∪ [1]_5) under Bernoulli(1/4) = {}", fmt(&clopen_measure(&c, &biased)?));
    Ok(())
}
