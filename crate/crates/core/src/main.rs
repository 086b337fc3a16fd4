use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use quasimap_sl2::runner::{run, Suite, SuiteConfig};

/// Exact verification of the quasi-map sl2 constructions.
#[derive(Parser, Debug)]
#[command(name = "quasimap-verify", version)]
struct Args {
    #[arg(long, default_value_t = 4)]
    dmax: usize,
    #[arg(long, default_value_t = 4)]
    nmax: usize,
    #[arg(long, default_value_t = 20)]
    vmax: i64,
    /// zastava, koszul, verma, omega, nilhecke or potential; repeatable, all by default.
    #[arg(long = "suite")]
    suites: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let mut suites = Vec::new();
    for s in &args.suites {
        match s.parse::<Suite>() {
            Ok(s) => suites.push(s),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if args.vmax < 0 {
        eprintln!("error: --vmax must be non-negative");
        return ExitCode::from(2);
    }
    let cfg = SuiteConfig { dmax: args.dmax, nmax: args.nmax, vmax: args.vmax, suites, seed: args.seed };
    let report = run(&cfg);
    print!("{}", report.to_table());
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
