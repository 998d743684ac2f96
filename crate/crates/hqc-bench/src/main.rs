//! Command-line harness: repeated timing of keygen/encaps/decaps with
//! per-component breakdowns, optimized-versus-baseline comparisons, a
//! multiplication threshold sweep, and the differential self-test suite.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hqc_bench::{bench, selftest, sweep};
use hqc::{ParamName, ALL_PARAMS};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hqc-bench", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time KEM operations and report per-component breakdowns.
    Bench(BenchArgs),
    /// Run the differential and round-trip suites on all parameter sets.
    Selftest,
}

#[derive(Args)]
struct BenchArgs {
    /// Parameter set to measure.
    #[arg(long, value_enum, default_value_t = ParamChoice::All)]
    param: ParamChoice,
    /// Operation to measure.
    #[arg(long, value_enum, default_value_t = OpChoice::All)]
    op: OpChoice,
    /// Timed iterations per operation (10 warm-up iterations run first).
    #[arg(long, default_value_t = 100)]
    iters: u64,
    /// Kernel selection: the optimized paths or the naive-oracle baselines.
    #[arg(long, value_enum, default_value_t = VariantChoice::Optimized)]
    variant: VariantChoice,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatChoice::Table)]
    format: FormatChoice,
    /// Hex seed for the run's deterministic input generation.
    #[arg(long)]
    seed: Option<String>,
    /// Comma-separated thresholds: time mul() under each instead of the
    /// standard benchmark.
    #[arg(long, value_delimiter = ',')]
    sweep_threshold: Option<Vec<usize>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParamChoice {
    Hqc1,
    Hqc3,
    Hqc5,
    All,
}

impl ParamChoice {
    fn names(self) -> Vec<ParamName> {
        match self {
            ParamChoice::Hqc1 => vec![ParamName::Hqc1],
            ParamChoice::Hqc3 => vec![ParamName::Hqc3],
            ParamChoice::Hqc5 => vec![ParamName::Hqc5],
            ParamChoice::All => ALL_PARAMS.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpChoice {
    Keygen,
    Encaps,
    Decaps,
    All,
}

impl OpChoice {
    fn ops(self) -> Vec<bench::Op> {
        match self {
            OpChoice::Keygen => vec![bench::Op::Keygen],
            OpChoice::Encaps => vec![bench::Op::Encaps],
            OpChoice::Decaps => vec![bench::Op::Decaps],
            OpChoice::All => vec![bench::Op::Keygen, bench::Op::Encaps, bench::Op::Decaps],
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantChoice {
    Optimized,
    Baseline,
}

impl VariantChoice {
    fn variant(self) -> bench::Variant {
        match self {
            VariantChoice::Optimized => bench::Variant::Optimized,
            VariantChoice::Baseline => bench::Variant::Baseline,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatChoice {
    Table,
    Csv,
    Json,
}

fn parse_seed(seed: &Option<String>) -> Result<[u8; 32], String> {
    match seed {
        None => Ok(*b"hqc-bench-default-run-seed-0000!"),
        Some(s) => {
            let raw = hex::decode(s).map_err(|e| format!("--seed must be hex: {e}"))?;
            if raw.len() > 32 {
                return Err("--seed must be at most 32 bytes of hex".into());
            }
            let mut out = [0u8; 32];
            out[..raw.len()].copy_from_slice(&raw);
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Bench(args) => {
            let seed = match parse_seed(&args.seed) {
                Ok(s) => s,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return ExitCode::from(2);
                }
            };
            if args.iters == 0 {
                eprintln!("error: --iters must be at least 1");
                return ExitCode::from(2);
            }
            if let Some(thresholds) = &args.sweep_threshold {
                if thresholds.is_empty() || thresholds.contains(&0) {
                    eprintln!("error: --sweep-threshold needs a nonempty list of positive values");
                    return ExitCode::from(2);
                }
                let report = sweep::run(&args.param.names(), thresholds, args.iters, &seed);
                match args.format {
                    FormatChoice::Table => print!("{}", sweep::format_table(&report)),
                    FormatChoice::Csv => print!("{}", sweep::format_csv(&report)),
                    FormatChoice::Json => {
                        println!("{}", serde_json::to_string_pretty(&report).unwrap())
                    }
                }
            } else {
                let reports = bench::run(
                    &args.param.names(),
                    &args.op.ops(),
                    args.iters,
                    args.variant.variant(),
                    &seed,
                );
                match args.format {
                    FormatChoice::Table => print!("{}", bench::format_table(&reports)),
                    FormatChoice::Csv => print!("{}", bench::format_csv(&reports)),
                    FormatChoice::Json => {
                        println!("{}", serde_json::to_string_pretty(&reports).unwrap())
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Selftest => {
            if selftest::run() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
