use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use qident::partition::Flavor;
use qident::report::CheckReport;
use qident::suite::{export_csv, run_suite, Check, Grid, SuiteConfig};
use qident::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Regular,
    Over,
    Both,
}

/// Verify partition identities and their series proofs over parameter grids.
///
/// Grids accept `all`, `lo..hi` (inclusive), comma lists or single values.
/// Exit status: 0 if nothing failed, 1 if a check failed, 2 on a
/// configuration error.
#[derive(Debug, Parser)]
#[command(name = "verify", version)]
struct Cli {
    /// Checks to run: lemma31, cor32, lemma33, cor34, prop35, thm36 or all.
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long, default_value = "2..3")]
    k: String,
    #[arg(long, default_value = "all")]
    a: String,
    #[arg(long, default_value = "all")]
    d: String,
    #[arg(long, default_value = "all")]
    s: String,
    #[arg(long, value_enum, default_value = "both")]
    flavor: FlavorArg,
    /// Largest q-degree (weight) compared.
    #[arg(long, default_value_t = 30)]
    trunc_n: i64,
    /// Largest x-degree (number of parts) compared.
    #[arg(long, default_value_t = 10)]
    trunc_x: usize,
    /// Largest summation index in the term recurrences.
    #[arg(long, default_value_t = 3)]
    index_max: i64,
    /// Read the companion exclusion as 2(a+s) != 2k+2-d.
    #[arg(long)]
    alt_condition: bool,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write counter and series coefficient tables into this directory.
    #[arg(long)]
    csv_dir: Option<PathBuf>,
    /// Print failures and a summary only.
    #[arg(long)]
    quiet: bool,
}

fn config(cli: &Cli) -> Result<SuiteConfig, Error> {
    let k = match cli.k.parse::<Grid>()? {
        Grid::Values(v) => v,
        Grid::All => return Err(Error::Config("k needs explicit values".into())),
    };
    Ok(SuiteConfig {
        checks: Check::parse_list(&cli.checks)?,
        k,
        a: cli.a.parse()?,
        d: cli.d.parse()?,
        s: cli.s.parse()?,
        flavors: match cli.flavor {
            FlavorArg::Regular => vec![Flavor::Regular],
            FlavorArg::Over => vec![Flavor::Over],
            FlavorArg::Both => Flavor::ALL.to_vec(),
        },
        trunc_n: cli.trunc_n,
        trunc_x: cli.trunc_x,
        index_max: cli.index_max,
        alt_condition: cli.alt_condition,
    })
}

fn run(cli: &Cli) -> Result<Vec<CheckReport>, Error> {
    let cfg = config(cli)?;
    let reports = run_suite(&cfg)?;
    if let Some(path) = &cli.out {
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, &reports)?;
        writeln!(w)?;
    }
    if let Some(dir) = &cli.csv_dir {
        export_csv(&cfg, dir)?;
    }
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let reports = match run(&cli) {
        Ok(r) => r,
        Err(e @ Error::Config(_)) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let mut stdout = std::io::stdout().lock();
    for r in &reports {
        if !cli.quiet || r.failed() {
            let _ = writeln!(stdout, "{r}");
        }
    }
    let failed = reports.iter().filter(|r| r.failed()).count();
    let skipped = reports.iter().filter(|r| r.skipped()).count();
    let _ = writeln!(
        stdout,
        "{} checks: {} passed, {failed} failed, {skipped} skipped",
        reports.len(),
        reports.len() - failed - skipped
    );
    if failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
