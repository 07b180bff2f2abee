use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rota_baxter::constraint::Constraint;
use rota_baxter::error::{Error, Result};
use rota_baxter::scalar::{parse_scalar, Scalar};
use rota_baxter::verifier::{
    emit_report, exit_code, run_classify, run_counterexample_suite, run_law_suite,
    run_positive_suite, strip_timing, AlgebraSelector, CaseId, Format, LawOptions,
    PositiveOptions, ReportEntry, ReproOptions,
};

/// Classifies constraints and checks covers of Rota-Baxter operators.
#[derive(Parser)]
#[command(name = "rbverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Membership of ω = xy - (φ(x) + yψ(x)) in Ω₀ and Ω_k.
    Classify {
        /// Coefficients of φ, low to high, e.g. "0,1" for x.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        psi: String,
        #[arg(long)]
        json: bool,
    },
    /// Reproduces the counterexamples and compares with their closed forms.
    Repro {
        /// all, or a comma list of i..viii, C1, C2, C2-s0, C2-s1, C2-s2, W, W-a0, W-b0.
        #[arg(long, default_value = "all")]
        cases: String,
        #[arg(long, default_value = "0", value_parser = parse_scalar, allow_hyphen_values = true)]
        weight: Scalar,
        #[arg(long, default_value = "-2,-1,1,2", value_delimiter = ',', allow_hyphen_values = true)]
        grid: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Report elapsed_ms as 0 so that runs compare byte for byte.
        #[arg(long)]
        no_timing: bool,
    },
    /// Randomized checks that covers stay Rota-Baxter.
    Positive {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        psi: String,
        #[arg(long, default_value = "0,1,-2,3/5", value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true)]
        weights: Vec<Scalar>,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// dp:<m>, dp:all, dp:inf or free:dp:<m>.
        #[arg(long, default_value = "dp:all")]
        algebra: AlgebraSelector,
        /// Pairs for the extension-side differential check; 0 skips it.
        #[arg(long, default_value_t = 10)]
        extension_pairs: usize,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        no_timing: bool,
    },
    /// Monad, comonad, θ and ϑ laws.
    Laws {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        degree_cap: usize,
        #[arg(long, default_value = "text")]
        format: Format,
        #[arg(long)]
        no_timing: bool,
    },
}

fn parse_cases(text: &str) -> Result<Vec<CaseId>> {
    let mut out = Vec::new();
    for part in text.split(',') {
        let ids = CaseId::parse_selector(part)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown case {part:?}")))?;
        for id in ids {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(out)
}

fn finish(mut entries: Vec<ReportEntry>, format: Format, no_timing: bool) -> u8 {
    if no_timing {
        strip_timing(&mut entries);
    }
    print!("{}", emit_report(&entries, format));
    exit_code(&entries) as u8
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Classify { phi, psi, json } => {
            let report = run_classify(&phi, &psi)?;
            if json {
                let value = serde_json::json!({
                    "constraint": report.constraint.to_string(),
                    "verdict": report.verdict,
                });
                println!("{value}");
            } else {
                println!("{report}");
            }
            Ok(0)
        }
        Command::Repro { cases, weight, grid, max_degree, format, no_timing } => {
            let opts = ReproOptions { cases: parse_cases(&cases)?, weight, grid, max_degree };
            let report = run_counterexample_suite(&opts)?;
            for (what, reason) in &report.skipped {
                eprintln!("skipped {what}: {reason}");
            }
            Ok(finish(report.entries, format, no_timing))
        }
        Command::Positive {
            phi, psi, weights, order, trials, seed, algebra, extension_pairs, format, no_timing,
        } => {
            let opts = PositiveOptions {
                constraint: Constraint::parse(&phi, &psi)?,
                weights,
                order,
                trials,
                seed,
                algebra,
                extension_pairs,
            };
            Ok(finish(run_positive_suite(&opts)?, format, no_timing))
        }
        Command::Laws { seed, degree_cap, format, no_timing } => {
            let opts = LawOptions { degree_cap, ..LawOptions::new(seed.ok_or(Error::MissingSeed)?) };
            Ok(finish(run_law_suite(&opts)?, format, no_timing))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
