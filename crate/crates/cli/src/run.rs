//! Command dispatch: builds the core inputs from a `RunConfig`, runs the
//! requested computation, and renders the result.

use std::env;
use std::path::PathBuf;

use policymix::{
    build_linear_system, classify_regime, compute_steady_state, draw_shocks, persistence_sweep,
    ramsey_solution, regime_grid, simulate_adhoc, simulate_ramsey, AdHocRule, ModelParams, Path,
    PolicyPreferences, RamseySolution, Variant,
};

use crate::config::{Command, Policy, RunConfig};
use crate::output::{render, Cell, Table};
use crate::CliError;

/// Environment variable that relocates relative output paths.
pub const OUTPUT_DIR_VAR: &str = "POLICYMIX_OUTPUT_DIR";

/// A fully rendered result, ready to write.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub content: String,
    /// Resolved destination; `None` means standard output.
    pub destination: Option<PathBuf>,
}

fn model_params(config: &RunConfig) -> Result<ModelParams, CliError> {
    let params = ModelParams {
        beta: config.beta,
        y: config.y,
        g: config.g,
        b_star: config.b_star,
        pi_star: config.pi_star,
        q: config.q,
    };
    params.validate()?;
    Ok(params)
}

fn preferences(config: &RunConfig) -> Result<PolicyPreferences, CliError> {
    // `mu_s` is irrelevant for sweeps, which supply their own grid.
    let mu_s = config.mu_s.unwrap_or(1.0);
    Ok(PolicyPreferences::new(
        config.q_pi.expect("checked by finalize"),
        config.q_b.expect("checked by finalize"),
        config.mu_r.expect("checked by finalize"),
        mu_s,
    )?)
}

fn adhoc_rule(config: &RunConfig) -> AdHocRule {
    AdHocRule {
        f_pi: config.f_pi.expect("checked by finalize"),
        g_b: config.g_b.expect("checked by finalize"),
        sigma_r: config.sigma_r,
        sigma_s: config.sigma_s,
        rho_r: config.rho_r,
        rho_s: config.rho_s,
    }
}

fn steady_table(config: &RunConfig) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let ss = compute_steady_state(&params)?;
    let mut table = Table::new(vec!["R_star", "tau_star", "s_star", "c", "r"]);
    table.push(vec![
        Cell::Float(ss.r_star),
        Cell::Float(ss.tau_star),
        Cell::Float(ss.s_star),
        Cell::Float(ss.c),
        Cell::Float(ss.r),
    ]);
    Ok(table)
}

fn system_table(config: &RunConfig) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let sys = build_linear_system(&params, config.variant)?;
    let mut table = Table::new(vec![
        "a_pi", "a_pib", "a_bpi", "a_b", "b_piR", "b_pis", "b_bR", "b_bs", "variant",
    ]);
    table.push(vec![
        Cell::Float(sys.a_pi),
        Cell::Float(sys.a_pib),
        Cell::Float(sys.a_bpi),
        Cell::Float(sys.a_b),
        Cell::Float(sys.b_pir),
        Cell::Float(sys.b_pis),
        Cell::Float(sys.b_br),
        Cell::Float(sys.b_bs),
        Cell::Text(sys.variant.to_string()),
    ]);
    Ok(table)
}

fn regime_columns() -> Vec<&'static str> {
    vec!["f_pi", "g_b", "label", "abs_lambda_pi", "abs_lambda_b"]
}

fn classify_table(config: &RunConfig) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let rule = adhoc_rule(config);
    let class = classify_regime(&params, &rule, config.tol)?;
    let mut table = Table::new(regime_columns());
    table.push(vec![
        Cell::Float(rule.f_pi),
        Cell::Float(rule.g_b),
        Cell::Text(class.label.to_string()),
        Cell::Float(class.abs_lambda_pi),
        Cell::Float(class.abs_lambda_b),
    ]);
    Ok(table)
}

fn grid_table(config: &RunConfig) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let grid = regime_grid(
        &params,
        (
            config.f_min.expect("checked by finalize"),
            config.f_max.expect("checked by finalize"),
        ),
        (
            config.g_min.expect("checked by finalize"),
            config.g_max.expect("checked by finalize"),
        ),
        config.n_f.expect("checked by finalize"),
        config.n_g.expect("checked by finalize"),
        config.tol,
    )?;
    let mut table = Table::new(regime_columns());
    for (i, &f_pi) in grid.f_values.iter().enumerate() {
        for (j, &g_b) in grid.g_values.iter().enumerate() {
            let cell = grid.cell(i, j);
            table.push(vec![
                Cell::Float(f_pi),
                Cell::Float(g_b),
                Cell::Text(cell.label.to_string()),
                Cell::Float(cell.abs_lambda_pi),
                Cell::Float(cell.abs_lambda_b),
            ]);
        }
    }
    Ok(table)
}

fn solve(config: &RunConfig, warnings: &mut Vec<String>) -> Result<RamseySolution, CliError> {
    let params = model_params(config)?;
    let prefs = preferences(config)?;
    let solution = ramsey_solution(&params, &prefs)?;
    warnings.extend(solution.warnings.iter().cloned());
    Ok(solution)
}

fn ramsey_table(config: &RunConfig, warnings: &mut Vec<String>) -> Result<Table, CliError> {
    let sol = solve(config, warnings)?;
    let mut table = Table::new(vec![
        "p_pi",
        "p_pib",
        "p_b",
        "lambda_pi_opt",
        "lambda_b_opt",
        "lambda_2",
        "s_sum",
        "f_opt",
        "g_b_opt",
        "rho_R_opt",
        "sigma2_R_opt",
        "pi0_anchor",
        "pi0_indeterminate",
        "degenerate",
        "oracle_lambda_residual",
        "oracle_p_residual",
    ]);
    table.push(vec![
        Cell::Float(sol.p_pi),
        Cell::Float(sol.p_pib),
        Cell::Float(sol.p_b),
        Cell::Float(sol.lambda_pi_opt),
        Cell::Float(sol.lambda_b_opt),
        Cell::Float(sol.lambda_2),
        Cell::Float(sol.s_sum),
        Cell::Float(sol.f_opt),
        Cell::Float(sol.g_b_opt),
        Cell::Float(sol.rho_r_opt),
        Cell::Float(sol.sigma2_r_opt),
        Cell::Float(sol.pi0_anchor),
        Cell::Bool(sol.pi0_indeterminate),
        Cell::Bool(sol.degenerate),
        Cell::Float(sol.oracle_lambda_residual),
        Cell::Float(sol.oracle_p_residual),
    ]);
    Ok(table)
}

fn sweep_table(config: &RunConfig) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let prefs = preferences(config)?;
    let grid = config.mus_grid.as_ref().expect("checked by finalize");
    let points = persistence_sweep(&prefs, &params, grid)?;
    let mut table = Table::new(vec!["mu_s", "lambda_b_opt", "g_b_opt", "p_b"]);
    for point in points {
        table.push(vec![
            Cell::Float(point.mu_s),
            Cell::Float(point.lambda_b_opt),
            Cell::Float(point.g_b_opt),
            Cell::Float(point.p_b),
        ]);
    }
    Ok(table)
}

fn simulate_table(config: &RunConfig, warnings: &mut Vec<String>) -> Result<Table, CliError> {
    let params = model_params(config)?;
    let path: Path = match config.policy {
        Policy::AdHoc => {
            let rule = adhoc_rule(config);
            let shocks = draw_shocks(
                rule.sigma_r,
                rule.sigma_s,
                rule.rho_r,
                rule.rho_s,
                config.horizon,
                config.seed,
            )?;
            simulate_adhoc(&params, &rule, &shocks, config.b0_dev)?
        }
        Policy::Ramsey => {
            let sol = solve(config, warnings)?;
            simulate_ramsey(&sol, &params, config.b0_dev, config.horizon)?
        }
    };
    let path = match config.variant {
        Variant::Linear => path,
        Variant::LogLinear => path.to_log_linear(&params)?,
    };
    let mut table = Table::new(vec![
        "t",
        "pi_dev",
        "b_dev",
        "R_dev",
        "s_dev",
        "fisher_residual",
        "budget_residual",
    ]);
    for row in &path.rows {
        table.push(vec![
            Cell::Int(row.t as u64),
            Cell::Float(row.pi_dev),
            Cell::Float(row.b_dev),
            Cell::Float(row.r_dev),
            Cell::Float(row.s_dev),
            Cell::Float(row.fisher_residual),
            Cell::Float(row.budget_residual),
        ]);
    }
    Ok(table)
}

/// Resolves the output destination, honoring the output-directory override for
/// relative paths.
fn destination(config: &RunConfig) -> Option<PathBuf> {
    let path = PathBuf::from(config.output_path.as_ref()?);
    if path.is_relative() {
        if let Ok(dir) = env::var(OUTPUT_DIR_VAR) {
            if !dir.is_empty() {
                return Some(PathBuf::from(dir).join(path));
            }
        }
    }
    Some(path)
}

/// Runs the configured command and renders its output table.
pub fn execute(config: &RunConfig, mut warnings: Vec<String>) -> Result<Rendered, CliError> {
    let table = match config.command {
        Command::Steady => steady_table(config)?,
        Command::System => system_table(config)?,
        Command::Classify => classify_table(config)?,
        Command::Grid => grid_table(config)?,
        Command::Ramsey => ramsey_table(config, &mut warnings)?,
        Command::Sweep => sweep_table(config)?,
        Command::Simulate => simulate_table(config, &mut warnings)?,
    };
    Ok(Rendered {
        content: render(config, &warnings, &table),
        destination: destination(config),
    })
}
