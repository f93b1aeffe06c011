use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Parser;

use policymix_cli::config::ConfigDraft;
use policymix_cli::{execute, CliError};

/// Monetary-fiscal policy analysis in a frictionless endowment economy:
/// steady states, regime classification, optimal policy, and simulation.
#[derive(Debug, Parser)]
#[command(name = "policymix", version, arg_required_else_help = true)]
struct Cli {
    /// Path to a `key = value` configuration file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,

    /// Command to run: steady, system, classify, grid, ramsey, sweep, or simulate.
    #[arg(long)]
    command: Option<String>,

    /// Discount factor, in (0, 1).
    #[arg(long)]
    beta: Option<f64>,

    /// Endowment level.
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,

    /// Government consumption.
    #[arg(long, allow_negative_numbers = true)]
    g: Option<f64>,

    /// Steady-state real debt.
    #[arg(long, allow_negative_numbers = true)]
    b_star: Option<f64>,

    /// Gross inflation target (fixed at 1).
    #[arg(long, allow_negative_numbers = true)]
    pi_star: Option<f64>,

    /// Probability that the policy plan survives each period, in (0, 1].
    #[arg(long)]
    q: Option<f64>,

    /// Loss weight on inflation deviations.
    #[arg(long, allow_negative_numbers = true)]
    qpi: Option<f64>,

    /// Loss weight on debt deviations.
    #[arg(long, allow_negative_numbers = true)]
    qb: Option<f64>,

    /// Adjustment cost on the interest-rate instrument.
    #[arg(long, allow_negative_numbers = true)]
    mur: Option<f64>,

    /// Adjustment cost on the surplus instrument.
    #[arg(long, allow_negative_numbers = true)]
    mus: Option<f64>,

    /// Interest-rate response to inflation in the ad-hoc rule.
    #[arg(long, allow_negative_numbers = true)]
    fpi: Option<f64>,

    /// Surplus response to lagged debt in the ad-hoc rule.
    #[arg(long, allow_negative_numbers = true)]
    gb: Option<f64>,

    /// Stationary standard deviation of the monetary shock.
    #[arg(long)]
    sigma_r: Option<f64>,

    /// Stationary standard deviation of the fiscal shock.
    #[arg(long)]
    sigma_s: Option<f64>,

    /// AR(1) coefficient of the monetary shock, in (-1, 1).
    #[arg(long, allow_negative_numbers = true)]
    rho_r: Option<f64>,

    /// AR(1) coefficient of the fiscal shock, in (-1, 1).
    #[arg(long, allow_negative_numbers = true)]
    rho_s: Option<f64>,

    /// Comma-separated ascending tax-smoothing weights for `sweep`.
    #[arg(long)]
    mus_grid: Option<String>,

    /// Lower edge of the `grid` rule rectangle in the inflation response.
    #[arg(long, allow_negative_numbers = true)]
    f_min: Option<f64>,

    /// Upper edge of the `grid` rule rectangle in the inflation response.
    #[arg(long, allow_negative_numbers = true)]
    f_max: Option<f64>,

    /// Lower edge of the `grid` rule rectangle in the debt response.
    #[arg(long, allow_negative_numbers = true)]
    g_min: Option<f64>,

    /// Upper edge of the `grid` rule rectangle in the debt response.
    #[arg(long, allow_negative_numbers = true)]
    g_max: Option<f64>,

    /// Number of grid nodes along the inflation-response axis (at least 2).
    #[arg(long)]
    n_f: Option<usize>,

    /// Number of grid nodes along the debt-response axis (at least 2).
    #[arg(long)]
    n_g: Option<usize>,

    /// Policy driving `simulate`: adhoc or ramsey.
    #[arg(long)]
    policy: Option<String>,

    /// System units: linear or loglinear.
    #[arg(long)]
    variant: Option<String>,

    /// Number of simulated periods after the initial one.
    #[arg(long)]
    horizon: Option<usize>,

    /// Initial debt deviation.
    #[arg(long, allow_negative_numbers = true)]
    b0_dev: Option<f64>,

    /// Seed for the shock generator.
    #[arg(long)]
    seed: Option<u64>,

    /// Boundary half-width for regime classification.
    #[arg(long)]
    tol: Option<f64>,

    /// Output encoding: csv or json.
    #[arg(long)]
    output_format: Option<String>,

    /// Output file; omit to write to standard output.
    #[arg(long)]
    output_path: Option<String>,
}

fn parse_flag<T: FromStr>(flag: &str, raw: Option<String>) -> Result<Option<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    match raw {
        None => Ok(None),
        Some(text) => text
            .parse()
            .map(Some)
            .map_err(|e| CliError::Usage(format!("invalid value for `--{flag}`: {e}"))),
    }
}

impl Cli {
    fn to_draft(&self) -> Result<ConfigDraft, CliError> {
        let mus_grid =
            match &self.mus_grid {
                None => None,
                Some(text) => {
                    let grid: Result<Vec<f64>, _> =
                        text.split(',').map(str::trim).map(str::parse).collect();
                    Some(grid.map_err(|e| {
                        CliError::Usage(format!("invalid value for `--mus-grid`: {e}"))
                    })?)
                }
            };
        Ok(ConfigDraft {
            command: parse_flag("command", self.command.clone())?,
            beta: self.beta,
            y: self.y,
            g: self.g,
            b_star: self.b_star,
            pi_star: self.pi_star,
            q: self.q,
            q_pi: self.qpi,
            q_b: self.qb,
            mu_r: self.mur,
            mu_s: self.mus,
            f_pi: self.fpi,
            g_b: self.gb,
            sigma_r: self.sigma_r,
            sigma_s: self.sigma_s,
            rho_r: self.rho_r,
            rho_s: self.rho_s,
            mus_grid,
            f_min: self.f_min,
            f_max: self.f_max,
            g_min: self.g_min,
            g_max: self.g_max,
            n_f: self.n_f,
            n_g: self.n_g,
            policy: parse_flag("policy", self.policy.clone())?,
            variant: parse_flag("variant", self.variant.clone())?,
            horizon: self.horizon,
            b0_dev: self.b0_dev,
            seed: self.seed,
            tol: self.tol,
            output_format: parse_flag("output-format", self.output_format.clone())?,
            output_path: self.output_path.clone(),
        })
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let mut warnings = Vec::new();
    let file_draft = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            ConfigDraft::parse(&text, &mut warnings)?
        }
        None => ConfigDraft::default(),
    };
    let config = file_draft.overlay(cli.to_draft()?).finalize()?;
    let rendered = execute(&config, warnings)?;
    match &rendered.destination {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    fs::create_dir_all(parent)?;
                }
            }
            fs::write(path, rendered.content)?;
        }
        None => std::io::stdout().write_all(rendered.content.as_bytes())?,
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(error) = run(&cli) {
        eprintln!("error: {error}");
        std::process::exit(error.exit_code());
    }
}
