use std::process::ExitCode;

use clap::{Parser, Subcommand};
use eisenstein::export::{export, Format};
use eisenstein::verify::{registry, run_checks, select, Params};
use eisenstein::SeriesCatalog;

/// Exact verification of Eisenstein series identities.
#[derive(Parser)]
#[command(name = "eisenstein", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check, a family such as KS-DE, or `all`.
    Verify {
        id: String,
        /// Truncation order for series identities.
        #[arg(long, default_value_t = 64)]
        order: usize,
        /// Upper end of the n range for convolution identities.
        #[arg(long, default_value_t = 200)]
        nmax: usize,
        /// Length of the tau table for multiplicativity and congruences.
        #[arg(long, default_value_t = 1000)]
        table_max: usize,
        /// Largest m for positivity and scalar recursions.
        #[arg(long, default_value_t = 20)]
        mmax: u32,
        #[arg(long)]
        parallel: bool,
        /// One JSON report per line instead of a summary.
        #[arg(long)]
        json: bool,
        /// Report elapsed_ms as 0 so output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a series, table or `poly:E{2m}star` polynomial.
    Export {
        name: String,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// List registered check ids.
    List,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify {
            id,
            order,
            nmax,
            table_max,
            mmax,
            parallel,
            json,
            no_timing,
        } => {
            let checks = match select(&id) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let params = Params {
                order,
                nmax,
                table_max,
                mmax,
            };
            let mut reports = run_checks(&checks, &SeriesCatalog::new(), &params, parallel);
            let mut ok = true;
            for report in &mut reports {
                if no_timing {
                    report.elapsed_ms = 0;
                }
                ok &= report.passed();
                if json {
                    println!("{}", report.to_json());
                } else {
                    println!("{}", report.summary());
                    for note in &report.notes {
                        println!("    {note}");
                    }
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Command::Export {
            name,
            order,
            format,
        } => {
            match format
                .parse::<Format>()
                .and_then(|f| export(&name, order, f))
            {
                Ok(text) => {
                    print!("{text}");
                    if !text.ends_with('\n') {
                        println!();
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::List => {
            for check in registry() {
                println!("{:<16} {}", check.id, check.description);
            }
            ExitCode::SUCCESS
        }
    }
}
