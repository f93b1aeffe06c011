//! Run configuration: `key = value` file parsing, flag overlay, defaults,
//! per-command required keys, and a lossless text serialization.

use std::fmt;
use std::str::FromStr;

use policymix::Variant;

use crate::CliError;

/// Dispatchable CLI command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Steady,
    System,
    Classify,
    Grid,
    Ramsey,
    Sweep,
    Simulate,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Command::Steady => "steady",
            Command::System => "system",
            Command::Classify => "classify",
            Command::Grid => "grid",
            Command::Ramsey => "ramsey",
            Command::Sweep => "sweep",
            Command::Simulate => "simulate",
        };
        f.write_str(name)
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "steady" => Ok(Command::Steady),
            "system" => Ok(Command::System),
            "classify" => Ok(Command::Classify),
            "grid" => Ok(Command::Grid),
            "ramsey" => Ok(Command::Ramsey),
            "sweep" => Ok(Command::Sweep),
            "simulate" => Ok(Command::Simulate),
            other => Err(format!(
                "unknown command `{other}` (expected steady, system, classify, grid, ramsey, sweep, or simulate)"
            )),
        }
    }
}

/// Policy driving the `simulate` command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    AdHoc,
    Ramsey,
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::AdHoc => "adhoc",
            Policy::Ramsey => "ramsey",
        })
    }
}

impl FromStr for Policy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "adhoc" => Ok(Policy::AdHoc),
            "ramsey" => Ok(Policy::Ramsey),
            other => Err(format!(
                "unknown policy `{other}` (expected adhoc or ramsey)"
            )),
        }
    }
}

/// Output table encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown output format `{other}` (expected csv or json)"
            )),
        }
    }
}

/// Fully resolved configuration: defaults applied, required keys present.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub beta: f64,
    pub y: f64,
    pub g: f64,
    pub b_star: f64,
    pub pi_star: f64,
    pub q: f64,
    pub q_pi: Option<f64>,
    pub q_b: Option<f64>,
    pub mu_r: Option<f64>,
    pub mu_s: Option<f64>,
    pub f_pi: Option<f64>,
    pub g_b: Option<f64>,
    pub sigma_r: f64,
    pub sigma_s: f64,
    pub rho_r: f64,
    pub rho_s: f64,
    pub mus_grid: Option<Vec<f64>>,
    pub f_min: Option<f64>,
    pub f_max: Option<f64>,
    pub g_min: Option<f64>,
    pub g_max: Option<f64>,
    pub n_f: Option<usize>,
    pub n_g: Option<usize>,
    pub policy: Policy,
    pub variant: Variant,
    pub horizon: usize,
    pub b0_dev: f64,
    pub seed: u64,
    pub tol: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<String>,
}

/// Prints a float with enough digits to round-trip exactly.
pub fn format_float(value: f64) -> String {
    format!("{value:.16e}")
}

fn format_grid(grid: &[f64]) -> String {
    grid.iter()
        .map(|v| format_float(*v))
        .collect::<Vec<_>>()
        .join(",")
}

impl RunConfig {
    /// Serializes the configuration as `key = value` lines; parsing the result
    /// reproduces `self` exactly.
    pub fn to_config_text(&self) -> String {
        let mut lines = Vec::new();
        let mut push = |key: &str, value: String| lines.push(format!("{key} = {value}"));
        push("command", self.command.to_string());
        push("beta", format_float(self.beta));
        push("y", format_float(self.y));
        push("g", format_float(self.g));
        push("b_star", format_float(self.b_star));
        push("pi_star", format_float(self.pi_star));
        push("q", format_float(self.q));
        if let Some(v) = self.q_pi {
            push("qpi", format_float(v));
        }
        if let Some(v) = self.q_b {
            push("qb", format_float(v));
        }
        if let Some(v) = self.mu_r {
            push("mur", format_float(v));
        }
        if let Some(v) = self.mu_s {
            push("mus", format_float(v));
        }
        if let Some(v) = self.f_pi {
            push("fpi", format_float(v));
        }
        if let Some(v) = self.g_b {
            push("gb", format_float(v));
        }
        push("sigma_r", format_float(self.sigma_r));
        push("sigma_s", format_float(self.sigma_s));
        push("rho_r", format_float(self.rho_r));
        push("rho_s", format_float(self.rho_s));
        if let Some(grid) = &self.mus_grid {
            push("mus_grid", format_grid(grid));
        }
        if let Some(v) = self.f_min {
            push("f_min", format_float(v));
        }
        if let Some(v) = self.f_max {
            push("f_max", format_float(v));
        }
        if let Some(v) = self.g_min {
            push("g_min", format_float(v));
        }
        if let Some(v) = self.g_max {
            push("g_max", format_float(v));
        }
        if let Some(v) = self.n_f {
            push("n_f", v.to_string());
        }
        if let Some(v) = self.n_g {
            push("n_g", v.to_string());
        }
        push("policy", self.policy.to_string());
        push("variant", self.variant.to_string());
        push("horizon", self.horizon.to_string());
        push("b0_dev", format_float(self.b0_dev));
        push("seed", self.seed.to_string());
        push("tol", format_float(self.tol));
        push("output_format", self.output_format.to_string());
        if let Some(path) = &self.output_path {
            push("output_path", path.clone());
        }
        lines.join("\n") + "\n"
    }
}

/// Partially specified configuration collected from a file and/or flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigDraft {
    pub command: Option<Command>,
    pub beta: Option<f64>,
    pub y: Option<f64>,
    pub g: Option<f64>,
    pub b_star: Option<f64>,
    pub pi_star: Option<f64>,
    pub q: Option<f64>,
    pub q_pi: Option<f64>,
    pub q_b: Option<f64>,
    pub mu_r: Option<f64>,
    pub mu_s: Option<f64>,
    pub f_pi: Option<f64>,
    pub g_b: Option<f64>,
    pub sigma_r: Option<f64>,
    pub sigma_s: Option<f64>,
    pub rho_r: Option<f64>,
    pub rho_s: Option<f64>,
    pub mus_grid: Option<Vec<f64>>,
    pub f_min: Option<f64>,
    pub f_max: Option<f64>,
    pub g_min: Option<f64>,
    pub g_max: Option<f64>,
    pub n_f: Option<usize>,
    pub n_g: Option<usize>,
    pub policy: Option<Policy>,
    pub variant: Option<Variant>,
    pub horizon: Option<usize>,
    pub b0_dev: Option<f64>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub output_format: Option<OutputFormat>,
    pub output_path: Option<String>,
}

fn parse_value<T: FromStr>(key: &str, line: usize, raw: &str) -> Result<T, CliError>
where
    T::Err: fmt::Display,
{
    raw.parse()
        .map_err(|e| CliError::usage(format!("line {line}: invalid value for `{key}`: {e}")))
}

fn parse_grid(key: &str, line: usize, raw: &str) -> Result<Vec<f64>, CliError> {
    raw.split(',')
        .map(str::trim)
        .map(|item| parse_value::<f64>(key, line, item))
        .collect()
}

impl ConfigDraft {
    /// Parses line-oriented `key = value` text. `#` starts a comment; blank
    /// lines are skipped; a repeated key keeps its last occurrence and emits a
    /// warning; an unknown key is an error.
    pub fn parse(text: &str, warnings: &mut Vec<String>) -> Result<Self, CliError> {
        let mut draft = ConfigDraft::default();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = idx + 1;
            let content = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            let content = content.trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| {
                CliError::usage(format!(
                    "line {line}: expected `key = value`, got `{content}`"
                ))
            })?;
            let key = key.trim();
            let value = value.trim();
            if value.is_empty() {
                return Err(CliError::usage(format!(
                    "line {line}: empty value for `{key}`"
                )));
            }
            draft.set(key, value, line, warnings)?;
        }
        Ok(draft)
    }

    fn set(
        &mut self,
        key: &str,
        value: &str,
        line: usize,
        warnings: &mut Vec<String>,
    ) -> Result<(), CliError> {
        fn assign<T>(
            slot: &mut Option<T>,
            parsed: T,
            key: &str,
            line: usize,
            warnings: &mut Vec<String>,
        ) {
            if slot.is_some() {
                warnings.push(format!(
                    "line {line}: duplicate key `{key}`; the last occurrence wins"
                ));
            }
            *slot = Some(parsed);
        }

        match key {
            "command" => assign(
                &mut self.command,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "beta" => assign(
                &mut self.beta,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "y" => assign(
                &mut self.y,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "g" => assign(
                &mut self.g,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "b_star" => assign(
                &mut self.b_star,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "pi_star" => assign(
                &mut self.pi_star,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "q" => assign(
                &mut self.q,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "qpi" => assign(
                &mut self.q_pi,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "qb" => assign(
                &mut self.q_b,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "mur" => assign(
                &mut self.mu_r,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "mus" => assign(
                &mut self.mu_s,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "fpi" => assign(
                &mut self.f_pi,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "gb" => assign(
                &mut self.g_b,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "sigma_r" => assign(
                &mut self.sigma_r,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "sigma_s" => assign(
                &mut self.sigma_s,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "rho_r" => assign(
                &mut self.rho_r,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "rho_s" => assign(
                &mut self.rho_s,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "mus_grid" => assign(
                &mut self.mus_grid,
                parse_grid(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "f_min" => assign(
                &mut self.f_min,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "f_max" => assign(
                &mut self.f_max,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "g_min" => assign(
                &mut self.g_min,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "g_max" => assign(
                &mut self.g_max,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "n_f" => assign(
                &mut self.n_f,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "n_g" => assign(
                &mut self.n_g,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "policy" => assign(
                &mut self.policy,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "variant" => assign(
                &mut self.variant,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "horizon" => assign(
                &mut self.horizon,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "b0_dev" => assign(
                &mut self.b0_dev,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "seed" => assign(
                &mut self.seed,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "tol" => assign(
                &mut self.tol,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "output_format" => assign(
                &mut self.output_format,
                parse_value(key, line, value)?,
                key,
                line,
                warnings,
            ),
            "output_path" => assign(
                &mut self.output_path,
                value.to_string(),
                key,
                line,
                warnings,
            ),
            other => {
                return Err(CliError::usage(format!(
                    "line {line}: unknown key `{other}`"
                )));
            }
        }
        Ok(())
    }

    /// Lays `overrides` on top of `self`: any value present in `overrides`
    /// replaces the one collected so far.
    pub fn overlay(mut self, overrides: ConfigDraft) -> ConfigDraft {
        macro_rules! take {
            ($($field:ident),* $(,)?) => {
                $(if overrides.$field.is_some() { self.$field = overrides.$field; })*
            };
        }
        take!(
            command,
            beta,
            y,
            g,
            b_star,
            pi_star,
            q,
            q_pi,
            q_b,
            mu_r,
            mu_s,
            f_pi,
            g_b,
            sigma_r,
            sigma_s,
            rho_r,
            rho_s,
            mus_grid,
            f_min,
            f_max,
            g_min,
            g_max,
            n_f,
            n_g,
            policy,
            variant,
            horizon,
            b0_dev,
            seed,
            tol,
            output_format,
            output_path,
        );
        self
    }

    /// Applies defaults and enforces the per-command required keys.
    pub fn finalize(self) -> Result<RunConfig, CliError> {
        let command = self
            .command
            .ok_or_else(|| CliError::usage("missing required key: command".to_string()))?;

        let mut missing = Vec::new();
        if self.beta.is_none() {
            missing.push("beta");
        }
        let policy = self.policy.unwrap_or(Policy::AdHoc);
        let needs_preferences = matches!(command, Command::Ramsey)
            || (matches!(command, Command::Simulate) && policy == Policy::Ramsey);
        if needs_preferences || matches!(command, Command::Sweep) {
            if self.q_pi.is_none() {
                missing.push("qpi");
            }
            if self.q_b.is_none() {
                missing.push("qb");
            }
            if self.mu_r.is_none() {
                missing.push("mur");
            }
        }
        if needs_preferences && self.mu_s.is_none() {
            missing.push("mus");
        }
        if matches!(command, Command::Sweep) && self.mus_grid.is_none() {
            missing.push("mus_grid");
        }
        let needs_rule = matches!(command, Command::Classify)
            || (matches!(command, Command::Simulate) && policy == Policy::AdHoc);
        if needs_rule {
            if self.f_pi.is_none() {
                missing.push("fpi");
            }
            if self.g_b.is_none() {
                missing.push("gb");
            }
        }
        if matches!(command, Command::Grid) {
            for (slot, key) in [
                (self.f_min.is_none(), "f_min"),
                (self.f_max.is_none(), "f_max"),
                (self.g_min.is_none(), "g_min"),
                (self.g_max.is_none(), "g_max"),
                (self.n_f.is_none(), "n_f"),
                (self.n_g.is_none(), "n_g"),
            ] {
                if slot {
                    missing.push(key);
                }
            }
        }
        if !missing.is_empty() {
            return Err(CliError::usage(format!(
                "missing required key{} for `{command}`: {}",
                if missing.len() > 1 { "s" } else { "" },
                missing.join(", ")
            )));
        }

        Ok(RunConfig {
            command,
            beta: self.beta.unwrap(),
            y: self.y.unwrap_or(1.0),
            g: self.g.unwrap_or(0.0),
            b_star: self.b_star.unwrap_or(1.0),
            pi_star: self.pi_star.unwrap_or(1.0),
            q: self.q.unwrap_or(1.0),
            q_pi: self.q_pi,
            q_b: self.q_b,
            mu_r: self.mu_r,
            mu_s: self.mu_s,
            f_pi: self.f_pi,
            g_b: self.g_b,
            sigma_r: self.sigma_r.unwrap_or(0.0),
            sigma_s: self.sigma_s.unwrap_or(0.0),
            rho_r: self.rho_r.unwrap_or(0.0),
            rho_s: self.rho_s.unwrap_or(0.0),
            mus_grid: self.mus_grid,
            f_min: self.f_min,
            f_max: self.f_max,
            g_min: self.g_min,
            g_max: self.g_max,
            n_f: self.n_f,
            n_g: self.n_g,
            policy,
            variant: self.variant.unwrap_or(Variant::Linear),
            horizon: self.horizon.unwrap_or(20),
            b0_dev: self.b0_dev.unwrap_or(0.0),
            seed: self.seed.unwrap_or(0),
            tol: self.tol.unwrap_or(policymix::DEFAULT_BOUNDARY_TOL),
            output_format: self.output_format.unwrap_or(OutputFormat::Csv),
            output_path: self.output_path,
        })
    }
}

/// Parses config text and finalizes it in one step.
pub fn parse_config(text: &str, warnings: &mut Vec<String>) -> Result<RunConfig, CliError> {
    ConfigDraft::parse(text, warnings)?.finalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramsey_text() -> &'static str {
        "command = ramsey\nbeta = 0.99\nqpi = 1\nqb = 1\nmur = 1\nmus = 1\n"
    }

    #[test]
    fn happy_path_config_parses_with_defaults() {
        let mut warnings = Vec::new();
        let cfg = parse_config(ramsey_text(), &mut warnings).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(cfg.command, Command::Ramsey);
        assert_eq!(cfg.beta, 0.99);
        assert_eq!(cfg.q, 1.0);
        assert_eq!(cfg.horizon, 20);
        assert_eq!(cfg.seed, 0);
        assert_eq!(cfg.output_format, OutputFormat::Csv);
        assert_eq!(cfg.variant, Variant::Linear);
        assert_eq!(cfg.output_path, None);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let mut warnings = Vec::new();
        let text = "# leading comment\n\ncommand = steady\nbeta = 0.99 # trailing\n";
        let cfg = parse_config(text, &mut warnings).unwrap();
        assert_eq!(cfg.command, Command::Steady);
        assert_eq!(cfg.beta, 0.99);
    }

    #[test]
    fn duplicate_key_keeps_the_last_value_and_warns() {
        let mut warnings = Vec::new();
        let text = "command = steady\nbeta = 0.9\nbeta = 0.99\n";
        let cfg = parse_config(text, &mut warnings).unwrap();
        assert_eq!(cfg.beta, 0.99);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("line 3"));
        assert!(warnings[0].contains("duplicate key `beta`"));
    }

    #[test]
    fn unknown_key_is_rejected_with_its_line_number() {
        let mut warnings = Vec::new();
        let err = parse_config("command = steady\nbetaa = 0.99\n", &mut warnings).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("line 2"));
        assert!(message.contains("unknown key `betaa`"));
    }

    #[test]
    fn malformed_line_is_rejected_with_its_line_number() {
        let mut warnings = Vec::new();
        let err = parse_config("command = steady\nbeta 0.99\n", &mut warnings).unwrap_err();
        assert!(err.to_string().contains("line 2"));
        let err = parse_config("beta =\n", &mut warnings).unwrap_err();
        assert!(err.to_string().contains("empty value"));
    }

    #[test]
    fn unparsable_number_is_rejected_with_key_and_line() {
        let mut warnings = Vec::new();
        let err = parse_config("command = steady\nbeta = fast\n", &mut warnings).unwrap_err();
        let message = err.to_string();
        assert!(message.contains("line 2"));
        assert!(message.contains("`beta`"));
    }

    #[test]
    fn missing_required_keys_are_listed_together() {
        let mut warnings = Vec::new();
        let err = parse_config("command = ramsey\nbeta = 0.99\n", &mut warnings).unwrap_err();
        let message = err.to_string();
        for key in ["qpi", "qb", "mur", "mus"] {
            assert!(message.contains(key), "missing `{key}` in: {message}");
        }
    }

    #[test]
    fn simulate_requirements_depend_on_the_policy() {
        let mut warnings = Vec::new();
        let err = parse_config("command = simulate\nbeta = 0.99\n", &mut warnings).unwrap_err();
        assert!(err.to_string().contains("fpi"));
        let err = parse_config(
            "command = simulate\nbeta = 0.99\npolicy = ramsey\n",
            &mut warnings,
        )
        .unwrap_err();
        assert!(err.to_string().contains("mus"));
        assert!(!err.to_string().contains("fpi"));
    }

    #[test]
    fn grid_requires_its_rectangle() {
        let mut warnings = Vec::new();
        let err =
            parse_config("command = grid\nbeta = 0.99\nf_min = -3\n", &mut warnings).unwrap_err();
        let message = err.to_string();
        for key in ["f_max", "g_min", "g_max", "n_f", "n_g"] {
            assert!(message.contains(key));
        }
        assert!(!message.contains("f_min,"));
    }

    #[test]
    fn flags_override_file_values() {
        let mut warnings = Vec::new();
        let file =
            ConfigDraft::parse("command = ramsey\nbeta = 0.9\nqpi = 2\n", &mut warnings).unwrap();
        let flags = ConfigDraft {
            beta: Some(0.99),
            q_b: Some(1.0),
            mu_r: Some(1.0),
            mu_s: Some(1.0),
            ..ConfigDraft::default()
        };
        let cfg = file.overlay(flags).finalize().unwrap();
        assert_eq!(cfg.beta, 0.99);
        assert_eq!(cfg.q_pi, Some(2.0));
    }

    #[test]
    fn serialization_round_trips_exactly() {
        let mut warnings = Vec::new();
        let text = "command = simulate\nbeta = 0.987654321\nfpi = 1.5\ngb = 0.1\n\
                    sigma_r = 0.25\nrho_r = -0.85\nhorizon = 7\nseed = 99\n\
                    output_format = json\noutput_path = out/run.json\n";
        let cfg = parse_config(text, &mut warnings).unwrap();
        let round = parse_config(&cfg.to_config_text(), &mut warnings).unwrap();
        assert_eq!(round, cfg);
    }

    #[test]
    fn grid_list_round_trips_exactly() {
        let mut warnings = Vec::new();
        let text = "command = sweep\nbeta = 0.99\nqpi = 1\nqb = 1\nmur = 1\n\
                    mus_grid = 0.1, 1, 10\n";
        let cfg = parse_config(text, &mut warnings).unwrap();
        assert_eq!(cfg.mus_grid, Some(vec![0.1, 1.0, 10.0]));
        let round = parse_config(&cfg.to_config_text(), &mut warnings).unwrap();
        assert_eq!(round, cfg);
    }

    #[test]
    fn command_is_always_required() {
        let mut warnings = Vec::new();
        let err = parse_config("beta = 0.99\n", &mut warnings).unwrap_err();
        assert!(err.to_string().contains("command"));
    }
}
