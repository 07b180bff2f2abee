//! Randomized evidence for one constraint at the default weights.
//!
//! cargo run --release --example positive_suite [-- <phi> <psi> <seed>]

use rota_baxter::constraint::Constraint;
use rota_baxter::verifier::{emit_report, run_positive_suite, Format, PositiveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let phi = args.first().map(String::as_str).unwrap_or("");
    let psi = args.get(1).map(String::as_str).unwrap_or("0,1");
    let seed = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(7);
    let mut opts = PositiveOptions::new(Constraint::parse(phi, psi)?, seed);
    opts.trials = 10;
    print!("{}", emit_report(&run_positive_suite(&opts)?, Format::Text));
    Ok(())
}
