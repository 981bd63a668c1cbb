use clap::{Args, Parser, Subcommand, ValueEnum};

use gitq_cli::{
    parse_m_list, parse_target_list, run_describe, run_example_table, run_matrix, run_realize,
    run_verify, CheckName, CliError, OutputFormat, RunConfig, VerifyOptions, DEFAULT_KMAX,
    DEFAULT_LIMIT, DEFAULT_SEED, DEFAULT_TRIALS,
};

/// Exact verification runs for torus quotients of Richardson varieties in
/// the Grassmannian G(r, n), n = qr + 1.
#[derive(Parser)]
#[command(name = "gitq", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct ParamArgs {
    /// Ambient dimension n = qr + 1 (any two of n, r, q suffice)
    #[arg(long)]
    n: Option<usize>,
    /// Subspace dimension r
    #[arg(long)]
    r: Option<usize>,
    /// Block size q
    #[arg(long)]
    q: Option<usize>,
    /// Comma-separated tuple m_1,...,m_{r-1} with 1 <= m_j <= q
    #[arg(long)]
    m: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the extremal representatives, lengths, section count, and the
    /// quotient identification
    Describe {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full verification suite and report per-check verdicts
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Highest tableau degree checked by the multi-degree suites
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: usize,
        /// Random trials for the independence certification
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: u32,
        /// Seed for all randomized checks (echoed in the report)
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Search-space bound on enumerations
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
        /// Corrupt the named check to exercise the failure path
        #[arg(long, value_name = "CHECK")]
        inject_fault: Option<String>,
        /// Include wall-clock timings (disables byte-determinism)
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Reproduce the nine-case table over (n, r, q) = (10, 3, 3)
    ExampleTable {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the chart matrix
    Matrix {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Find parameters whose quotient is the given product of projective
    /// spaces (comma-separated dimensions)
    Realize {
        targets: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn build_config(params: &ParamArgs) -> Result<RunConfig, CliError> {
    RunConfig::new(
        params.n,
        params.r,
        params.q,
        parse_m_list(&params.m)?,
        VerifyOptions::default(),
        None,
    )
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Describe { params, format } => {
            let cfg = build_config(&params)?;
            println!("{}", run_describe(&cfg, format.into())?);
            Ok(0)
        }
        Command::Verify {
            params,
            kmax,
            trials,
            seed,
            limit,
            inject_fault,
            timings,
            format,
        } => {
            let fault = inject_fault
                .as_deref()
                .map(CheckName::parse)
                .transpose()?;
            let cfg = RunConfig::new(
                params.n,
                params.r,
                params.q,
                parse_m_list(&params.m)?,
                VerifyOptions {
                    kmax,
                    trials,
                    seed,
                    limit,
                },
                fault,
            )?;
            let (rendered, passed) = run_verify(&cfg, format.into(), timings)?;
            println!("{rendered}");
            Ok(if passed { 0 } else { 1 })
        }
        Command::ExampleTable { format } => {
            println!("{}", run_example_table(format.into())?);
            Ok(0)
        }
        Command::Matrix { params, format } => {
            let cfg = build_config(&params)?;
            println!("{}", run_matrix(&cfg, format.into())?);
            Ok(0)
        }
        Command::Realize { targets, format } => {
            let targets = parse_target_list(&targets)?;
            println!("{}", run_realize(&targets, format.into())?);
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("{err}");
            let code = match err {
                CliError::Usage(_) => 2,
                CliError::Resource(_) => 3,
            };
            std::process::exit(code);
        }
    }
}
