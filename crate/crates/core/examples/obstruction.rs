//! Decides which label polynomials come from clopen sets.
//!
//!     cargo run --example obstruction -- "b + b^2" "b(1-b)" "2b - 2b^2 + b^3"

use gaplab::obstruction::{poly_of_label_expression, representable_up_to, to_paper_form, Representability};

fn main() -> gaplab::Result<()> {
    let mut exprs: Vec<String> = std::env::args().skip(1).collect();
    if exprs.is_empty() {
        exprs = ["b", "b + b^2", "b(1-b)", "1 - b^2", "2b - 2b^2 + b^3"].map(String::from).to_vec();
    }
    for expr in exprs {
        let p = poly_of_label_expression(&expr)?;
        let gammas = to_paper_form(&p, p.degree())?;
        print!("{expr:>18}  =  {:<18} γ = {:?}  ", p.to_string(), gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>());
        match representable_up_to(&p, 30)? {
            Representability::Certificate { witness_degree, certificate } => {
                let counts: Vec<String> = certificate.counts.iter().map(|c| c.to_string()).collect();
                println!("certificate at degree {witness_degree}: c = [{}]", counts.join(", "));
            }
            Representability::Rejected { rejection_reason } => println!("rejected ({rejection_reason})"),
            Representability::Unknown { max_degree } => println!("no certificate up to degree {max_degree}"),
        }
    }
    Ok(())
}
