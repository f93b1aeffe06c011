//! Ad-hoc feedback rules, closed-loop eigenvalues, and Leeper-style regime
//! classification of the (f_pi, g_b) plane.

use std::fmt;

use crate::error::Error;
use crate::model::ModelParams;
use crate::Result;

/// Default tolerance for calling an eigenvalue "on" the unit circle.
pub const DEFAULT_BOUNDARY_TOL: f64 = 1e-9;

/// An ad-hoc interest-rate rule and fiscal rule, with optional shock processes.
///
/// The shock moments ride along for simulation; they play no role in
/// classification, which is a property of the homogeneous system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdHocRule {
    /// Interest-rate response to contemporaneous inflation deviations.
    pub f_pi: f64,
    /// Surplus response to the previous period's debt deviation.
    pub g_b: f64,
    /// Standard deviation of the monetary shock.
    pub sigma_r: f64,
    /// Standard deviation of the fiscal shock.
    pub sigma_s: f64,
    /// AR(1) coefficient of the monetary shock.
    pub rho_r: f64,
    /// AR(1) coefficient of the fiscal shock.
    pub rho_s: f64,
}

impl AdHocRule {
    /// A deterministic rule: feedback parameters only, no shocks.
    pub fn new(f_pi: f64, g_b: f64) -> Self {
        Self {
            f_pi,
            g_b,
            sigma_r: 0.0,
            sigma_s: 0.0,
            rho_r: 0.0,
            rho_s: 0.0,
        }
    }

    /// Checks feedback parameters are finite and shock moments are admissible.
    pub fn validate(&self) -> Result<()> {
        if !self.f_pi.is_finite() {
            return Err(Error::invalid("f_pi", "must be finite"));
        }
        if !self.g_b.is_finite() {
            return Err(Error::invalid("g_b", "must be finite"));
        }
        for (name, sigma) in [("sigma_r", self.sigma_r), ("sigma_s", self.sigma_s)] {
            if !sigma.is_finite() || sigma < 0.0 {
                return Err(Error::invalid(
                    name,
                    format!("must be a nonnegative standard deviation, got {sigma}"),
                ));
            }
        }
        for (name, rho) in [("rho_r", self.rho_r), ("rho_s", self.rho_s)] {
            if !rho.is_finite() || rho.abs() >= 1.0 {
                return Err(Error::invalid(
                    name,
                    format!("autocorrelation must satisfy |rho| < 1, got {rho}"),
                ));
            }
        }
        Ok(())
    }
}

impl Default for AdHocRule {
    /// The interest-rate peg with no fiscal feedback and no shocks.
    fn default() -> Self {
        Self::new(0.0, 0.0)
    }
}

/// The four-way partition of the policy plane, plus the knife-edge case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegimeLabel {
    /// |beta f_pi| > 1 and |1/beta - g_b| < 1: unique bounded equilibrium where
    /// monetary policy pins inflation and fiscal policy stabilizes debt.
    ActiveMPassiveF,
    /// |beta f_pi| < 1 and |1/beta - g_b| > 1: unique bounded equilibrium where
    /// fiscal variables determine the price level.
    PassiveMActiveF,
    /// Both eigenvalues inside the unit circle: sunspot multiplicity.
    Indeterminate,
    /// Both eigenvalues outside: no bounded solution with predetermined debt.
    Explosive,
    /// At least one eigenvalue within tolerance of the unit circle.
    Boundary,
}

impl fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegimeLabel::ActiveMPassiveF => "ActiveMPassiveF",
            RegimeLabel::PassiveMActiveF => "PassiveMActiveF",
            RegimeLabel::Indeterminate => "Indeterminate",
            RegimeLabel::Explosive => "Explosive",
            RegimeLabel::Boundary => "Boundary",
        };
        write!(f, "{s}")
    }
}

/// A regime label together with the eigenvalue magnitudes that justified it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeClass {
    pub label: RegimeLabel,
    pub abs_lambda_pi: f64,
    pub abs_lambda_b: f64,
}

/// Closed-loop eigenvalues of the rule-augmented system: (beta*f_pi, 1/beta - g_b).
///
/// The inflation block inherits its root from the interest-rate rule through the
/// Fisher relation; the debt block's root is the gross real rate net of fiscal feedback.
pub fn closed_loop_eigenvalues(params: &ModelParams, rule: &AdHocRule) -> Result<(f64, f64)> {
    params.validate()?;
    rule.validate()?;
    Ok((params.beta * rule.f_pi, 1.0 / params.beta - rule.g_b))
}

/// Classifies a rule pair by where its two closed-loop eigenvalues sit relative
/// to the unit circle, with a `tol`-wide band reported as `Boundary`.
///
/// `tol = 0` is accepted and makes the four open regions exhaustive up to
/// exact unit-modulus eigenvalues.
pub fn classify_regime(params: &ModelParams, rule: &AdHocRule, tol: f64) -> Result<RegimeClass> {
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::invalid(
            "tol",
            format!("boundary tolerance must be finite and nonnegative, got {tol}"),
        ));
    }
    let (lambda_pi, lambda_b) = closed_loop_eigenvalues(params, rule)?;
    let abs_lambda_pi = lambda_pi.abs();
    let abs_lambda_b = lambda_b.abs();
    let label = if (abs_lambda_pi - 1.0).abs() <= tol || (abs_lambda_b - 1.0).abs() <= tol {
        RegimeLabel::Boundary
    } else if abs_lambda_pi > 1.0 && abs_lambda_b < 1.0 {
        RegimeLabel::ActiveMPassiveF
    } else if abs_lambda_pi < 1.0 && abs_lambda_b > 1.0 {
        RegimeLabel::PassiveMActiveF
    } else if abs_lambda_pi < 1.0 && abs_lambda_b < 1.0 {
        RegimeLabel::Indeterminate
    } else {
        RegimeLabel::Explosive
    };
    Ok(RegimeClass {
        label,
        abs_lambda_pi,
        abs_lambda_b,
    })
}

/// A row-major classification grid over the Cartesian product of rule parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RegimeGrid {
    /// Evenly spaced f_pi values (outer index).
    pub f_values: Vec<f64>,
    /// Evenly spaced g_b values (inner index).
    pub g_values: Vec<f64>,
    /// Cell (i, j) classifies (f_values[i], g_values[j]) and lives at i*n_g + j.
    pub cells: Vec<RegimeClass>,
}

impl RegimeGrid {
    /// The classification of (f_values[i], g_values[j]).
    pub fn cell(&self, i: usize, j: usize) -> &RegimeClass {
        &self.cells[i * self.g_values.len() + j]
    }
}

fn linspace(name: &'static str, range: (f64, f64), n: usize) -> Result<Vec<f64>> {
    let (lo, hi) = range;
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::range(format!(
            "{name} range must be finite, got [{lo}, {hi}]"
        )));
    }
    if lo >= hi {
        return Err(Error::range(format!(
            "{name} range must be non-degenerate with lower < upper, got [{lo}, {hi}]"
        )));
    }
    if n < 2 {
        return Err(Error::range(format!(
            "{name} grid needs at least 2 points, got {n}"
        )));
    }
    let last = (n - 1) as f64;
    Ok((0..n)
        .map(|i| {
            let t = i as f64 / last;
            lo * (1.0 - t) + hi * t
        })
        .collect())
}

/// Classifies every node of an evenly spaced rectangle in the (f_pi, g_b) plane.
pub fn regime_grid(
    params: &ModelParams,
    f_range: (f64, f64),
    g_range: (f64, f64),
    n_f: usize,
    n_g: usize,
    tol: f64,
) -> Result<RegimeGrid> {
    params.validate()?;
    let f_values = linspace("f_pi", f_range, n_f)?;
    let g_values = linspace("g_b", g_range, n_g)?;
    let mut cells = Vec::with_capacity(n_f * n_g);
    for &f_pi in &f_values {
        for &g_b in &g_values {
            cells.push(classify_regime(params, &AdHocRule::new(f_pi, g_b), tol)?);
        }
    }
    Ok(RegimeGrid {
        f_values,
        g_values,
        cells,
    })
}
