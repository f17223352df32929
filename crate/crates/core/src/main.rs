use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dtc_sim::policy::PolicyMode;
use dtc_sim::sim::config::{Overrides, SuiteConfig};
use dtc_sim::sim::output::{emit_outputs, format_table};
use dtc_sim::sim::run_suite;
use dtc_sim::verify;

#[derive(Parser, Debug)]
#[command(
    name = "dtc-sim",
    version,
    about = "Simulate clean/dirty directed technical change with AI-driven innovation"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the numerical oracles and print a pass/fail report
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Scenario config (TOML); the bundled four-scenario suite if omitted
    #[arg(long)]
    config: Option<PathBuf>,

    /// Only run the scenario with this label
    #[arg(long)]
    scenario: Option<String>,

    /// Output directory
    #[arg(long, default_value = "out")]
    out: PathBuf,

    /// Also write SVG figures
    #[arg(long)]
    emit_plots: bool,

    /// Keep recording past the horizon until a disaster (at most 200 periods)
    #[arg(long)]
    extend_until_disaster: bool,

    /// Override the policy of every scenario: none, temporary or permanent
    #[arg(long)]
    policy: Option<PolicyMode>,

    /// Number of periods to record
    #[arg(long)]
    horizon: Option<u32>,

    /// Years per period
    #[arg(long)]
    period_years: Option<f64>,
}

fn run(args: RunArgs) -> Result<bool, String> {
    let mut cfg = match &args.config {
        Some(path) => SuiteConfig::from_path(path).map_err(|e| e.to_string())?,
        None => SuiteConfig::default_suite(),
    };
    cfg.apply(&Overrides {
        scenario: args.scenario,
        policy: args.policy,
        horizon_periods: args.horizon,
        period_years: args.period_years,
        extend_until_disaster: args.extend_until_disaster,
    })
    .map_err(|e| e.to_string())?;
    let built = cfg.build().map_err(|e| e.to_string())?;
    let suite = run_suite(&built.scenarios).map_err(|e| e.to_string())?;

    print!("{}", format_table(&suite.rows()));
    for (label, err) in suite.failures() {
        eprintln!("scenario `{label}` failed: {err}");
    }
    let files = emit_outputs(&suite, Some(&built.report), &args.out, args.emit_plots)
        .map_err(|e| e.to_string())?;
    eprintln!("wrote {} files to {}", files.len(), args.out.display());
    Ok(suite.all_ok())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Some(Command::Verify { seed }) => {
            let report = verify::run_all(seed);
            print!("{}", report.render());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        None => match run(cli.run) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::FAILURE,
            Err(msg) => {
                eprintln!("error: {msg}");
                ExitCode::FAILURE
            }
        },
    }
}
