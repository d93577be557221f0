use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use papr_lab::codes::CodeSpec;
use papr_lab::harness::{self, ExperimentConfig, InputSource, ReportFormat};
use papr_lab::ofdm::Modulation;

#[derive(Parser)]
#[command(name = "papr-lab", version, about = "PAPR of coded OFDM signals: Monte-Carlo CCDF experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the encode → map → synthesize → PAPR pipeline and write CCDF/summary reports.
    Run(RunArgs),
    /// Inspect code constructions.
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
}

#[derive(Subcommand)]
enum CodesAction {
    /// Print n, k, rate, minimum distance and the generator of a code spec.
    Show { spec: CodeSpec },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, default_value_t = 64)]
    subcarriers: usize,
    #[arg(long = "mod", default_value = "qam16")]
    modulation: Modulation,
    #[arg(long, default_value_t = 4)]
    oversample: usize,
    #[arg(long, default_value_t = 20_000)]
    frames: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// `random` or a path to a file whose bytes are used MSB first.
    #[arg(long, default_value = "random")]
    input: InputSource,
    /// Code spec, e.g. `hamming:m=6`, `conv:rate=1/2,K=6`, `rm:r=1,m=4`. Repeatable.
    #[arg(long = "code", default_value = "none")]
    codes: Vec<CodeSpec>,
    #[arg(long, default_value_t = 0.01)]
    ccdf_level: f64,
    #[arg(long, default_value = "papr-out")]
    out_dir: PathBuf,
    /// Comma-separated list of `csv` and `json`.
    #[arg(long, value_delimiter = ',', default_value = "csv,json")]
    format: Vec<ReportFormat>,
}

fn run(args: RunArgs) -> Result<()> {
    let config = ExperimentConfig {
        subcarriers: args.subcarriers,
        modulation: args.modulation,
        oversample: args.oversample,
        frames: args.frames,
        seed: args.seed,
        input: args.input,
        codes: args.codes,
        ccdf_level: args.ccdf_level,
    };
    let report = harness::run_experiment(&config).context("experiment failed")?;
    let files = harness::emit_report(&report, &args.format, &args.out_dir)
        .with_context(|| format!("writing reports to {}", args.out_dir.display()))?;

    println!(
        "{:<22} {:>12} {:>12} {:>10} {:>9}",
        "code", "uncoded dB", "coded dB", "reduction", "rate"
    );
    for row in report.rows() {
        println!(
            "{:<22} {:>12.4} {:>12.4} {:>10.4} {:>9.4}",
            row.label, row.uncoded_papr_db, row.coded_papr_db, row.reduction_db, row.code_rate
        );
    }
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => run(args),
        Command::Codes {
            action: CodesAction::Show { spec },
        } => harness::describe_code(&spec)
            .map(|text| print!("{text}"))
            .map_err(Into::into),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("papr-lab: error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
