//! Classifies a few constraints ω = xy - (φ(x) + yψ(x)).
//!
//! cargo run --example classify [-- <phi> <psi>]

use rota_baxter::verifier::run_classify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [phi, psi] => vec![(phi.clone(), psi.clone())],
        [phi] => vec![(phi.clone(), String::new())],
        _ => [("1", ""), ("", "0,1"), ("", ""), ("5", ""), ("", "3,1"), ("0,0,1", ""), ("1", "0,2")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    for (phi, psi) in pairs {
        println!("φ = {phi:?}, ψ = {psi:?}");
        println!("{}\n", run_classify(&phi, &psi)?);
    }
    Ok(())
}
