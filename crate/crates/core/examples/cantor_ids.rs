//! The diagonal family built from the Cantor potential has the Cantor
//! counting function as its IDS.

use gaplab::cantor::verify_cantor_ids;
use gaplab::rational::fmt;

fn main() -> gaplab::Result<()> {
    for m in [2, 3] {
        let report = verify_cantor_ids(m, 8, 100_000, 3, 1)?;
        println!("m = {m}, tolerance {:.4}", report.tolerance);
        for c in &report.checks {
            println!(
                "  level {} gap ({}, {}): g = {:<6} ids = {:.5} {}",
                c.level,
                fmt(&c.gap.lo),
                fmt(&c.gap.hi),
                fmt(&c.g_infinity),
                c.ids.ids_f64(),
                if c.pass { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
