//! Monad, comonad, θ and ϑ laws on seeded random inputs.
//!
//! cargo run --release --example structure_laws [-- <seed>]

use rota_baxter::verifier::{emit_report, exit_code, run_law_suite, Format, LawOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2024);
    let entries = run_law_suite(&LawOptions::new(seed))?;
    print!("{}", emit_report(&entries, Format::Text));
    std::process::exit(exit_code(&entries));
}
