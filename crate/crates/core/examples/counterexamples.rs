//! Reproduces the weight-0 counterexamples over a small grid and the
//! weight-λ recipes, then prints one line per case.
//!
//! cargo run --release --example counterexamples

use std::collections::BTreeMap;

use rota_baxter::scalar::ratio;
use rota_baxter::verifier::{run_counterexample_suite, CaseId, ReproOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = ReproOptions { grid: vec![-1, 2], max_degree: 3, ..ReproOptions::default() };
    let zero = run_counterexample_suite(&opts)?;
    let weighted = run_counterexample_suite(&ReproOptions {
        cases: vec![CaseId::WA0, CaseId::WB0],
        weight: ratio(3, 5),
        grid: vec![-2, -1, 1, 2, 3],
        ..ReproOptions::default()
    })?;
    let mut per_case: BTreeMap<String, (usize, usize, String)> = BTreeMap::new();
    for e in zero.entries.iter().chain(&weighted.entries) {
        let slot = per_case
            .entry(e.case.clone())
            .or_insert((0, 0, format!("{}: {}", e.constraint, e.computed)));
        slot.0 += 1;
        slot.1 += usize::from(e.matched);
    }
    for id in CaseId::ALL {
        if let Some((total, ok, sample)) = per_case.get(id.as_str()) {
            println!("{:6} {ok}/{total} match   e.g. {sample}", id.as_str());
        }
    }
    Ok(())
}
