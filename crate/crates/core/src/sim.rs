//! Deterministic and shocked trajectories under the Ramsey plan and under
//! determinate ad-hoc rules, with per-period re-substitution residuals.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal};

use crate::error::Error;
use crate::model::{ModelParams, Variant};
use crate::ramsey::RamseySolution;
use crate::rules::{classify_regime, AdHocRule, RegimeLabel, DEFAULT_BOUNDARY_TOL};
use crate::Result;

/// One period of a simulated trajectory, all in deviations from steady state.
///
/// `fisher_residual` re-substitutes the expectational Fisher row and
/// `budget_residual` the budget row; both should be numerically zero on any
/// correctly constructed path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathRow {
    pub t: usize,
    pub pi_dev: f64,
    pub b_dev: f64,
    pub r_dev: f64,
    pub s_dev: f64,
    pub fisher_residual: f64,
    pub budget_residual: f64,
}

/// A simulated trajectory of length `horizon + 1`, tagged with its variant.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub variant: Variant,
    pub horizon: usize,
    pub rows: Vec<PathRow>,
}

impl Path {
    /// Largest re-substitution residual anywhere on the path.
    pub fn max_abs_residual(&self) -> f64 {
        self.rows
            .iter()
            .map(|row| row.fisher_residual.abs().max(row.budget_residual.abs()))
            .fold(0.0, f64::max)
    }

    /// Rescales a linear-deviation path into log deviations: debt by `b_star`,
    /// surplus by `s_star`, the rate by `R_star` (inflation is already relative,
    /// the target being 1). Residuals rescale the same way, so the log-linear
    /// system's equations hold with the same numerical quality.
    pub fn to_log_linear(&self, params: &ModelParams) -> Result<Path> {
        if self.variant != Variant::Linear {
            return Err(Error::invalid(
                "variant",
                "only a linear-deviation path can be rescaled to log deviations",
            ));
        }
        params.validate()?;
        if params.b_star == 0.0 {
            return Err(Error::invalid(
                "b_star",
                "log deviations are undefined at b_star = 0 (zero debt and surplus base); \
                 keep the linear variant instead",
            ));
        }
        let ss = crate::model::compute_steady_state(params)?;
        let rows = self
            .rows
            .iter()
            .map(|row| PathRow {
                t: row.t,
                pi_dev: row.pi_dev,
                b_dev: row.b_dev / params.b_star,
                r_dev: row.r_dev / ss.r_star,
                s_dev: row.s_dev / ss.s_star,
                fisher_residual: row.fisher_residual,
                budget_residual: row.budget_residual / params.b_star,
            })
            .collect();
        Ok(Path {
            variant: Variant::LogLinear,
            horizon: self.horizon,
            rows,
        })
    }
}

/// Realized shock draws, one pair of sequences of length `horizon + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShockSequence {
    pub horizon: usize,
    pub eps_r: Vec<f64>,
    pub eps_s: Vec<f64>,
}

impl ShockSequence {
    /// Wraps explicit shock realizations; both sequences must share a length
    /// of at least one period.
    pub fn new(eps_r: Vec<f64>, eps_s: Vec<f64>) -> Result<Self> {
        if eps_r.is_empty() || eps_r.len() != eps_s.len() {
            return Err(Error::invalid(
                "shocks",
                format!(
                    "shock sequences must be nonempty and equally long, got {} and {}",
                    eps_r.len(),
                    eps_s.len()
                ),
            ));
        }
        if eps_r.iter().chain(eps_s.iter()).any(|e| !e.is_finite()) {
            return Err(Error::invalid("shocks", "realizations must be finite"));
        }
        Ok(Self {
            horizon: eps_r.len() - 1,
            eps_r,
            eps_s,
        })
    }

    /// The zero-shock sequence over `horizon + 1` periods.
    pub fn zeros(horizon: usize) -> Self {
        Self {
            horizon,
            eps_r: vec![0.0; horizon + 1],
            eps_s: vec![0.0; horizon + 1],
        }
    }
}

fn draw_ar1(rng: &mut ChaCha12Rng, sigma: f64, rho: f64, horizon: usize) -> Vec<f64> {
    let n = horizon + 1;
    if sigma == 0.0 {
        return vec![0.0; n];
    }
    let normal = Normal::new(0.0, 1.0).expect("unit normal is well formed");
    // `sigma` is the stationary standard deviation: the first draw comes from
    // the stationary distribution and innovations are scaled by sqrt(1 - rho^2),
    // so every period has identical unconditional moments. rho = 0 degenerates
    // to i.i.d. N(0, sigma^2) draws.
    let innovation_scale = sigma * (1.0 - rho * rho).sqrt();
    let mut out = Vec::with_capacity(n);
    let mut prev = sigma * normal.sample(rng);
    out.push(prev);
    for _ in 1..n {
        prev = rho * prev + innovation_scale * normal.sample(rng);
        out.push(prev);
    }
    out
}

/// Draws reproducible Gaussian shock sequences with the requested moments.
///
/// The same seed (and moments and horizon) yields a bit-identical sequence on
/// every platform, courtesy of a counter-based stream cipher generator.
pub fn draw_shocks(
    sigma_r: f64,
    sigma_s: f64,
    rho_r: f64,
    rho_s: f64,
    horizon: usize,
    seed: u64,
) -> Result<ShockSequence> {
    let moments = AdHocRule {
        sigma_r,
        sigma_s,
        rho_r,
        rho_s,
        ..AdHocRule::default()
    };
    moments.validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let eps_r = draw_ar1(&mut rng, sigma_r, rho_r, horizon);
    let eps_s = draw_ar1(&mut rng, sigma_s, rho_s, horizon);
    Ok(ShockSequence {
        horizon,
        eps_r,
        eps_s,
    })
}

/// Simulates the Ramsey plan from an initial debt deviation.
///
/// Inflation and the policy rate are pegged at their targets, debt decays
/// geometrically at the optimal persistence, and the surplus is read off the
/// budget row each period so the constraint holds by construction. Period 0 is
/// the inherited initial condition: its surplus deviation and residuals are
/// zero by convention.
///
/// A degenerate solution (`q_b = 0`) yields a constant-debt (unit-root) path;
/// the warning attached to the solution applies to the path as well.
pub fn simulate_ramsey(
    solution: &RamseySolution,
    params: &ModelParams,
    b0_dev: f64,
    horizon: usize,
) -> Result<Path> {
    params.validate()?;
    if !b0_dev.is_finite() {
        return Err(Error::invalid("b0_dev", "must be finite"));
    }
    if horizon < 1 {
        return Err(Error::invalid("horizon", "must be at least 1"));
    }
    let r_gross = 1.0 / params.beta;
    let lambda = solution.lambda_b_opt;
    let mut rows = Vec::with_capacity(horizon + 1);
    rows.push(PathRow {
        t: 0,
        pi_dev: 0.0,
        b_dev: b0_dev,
        r_dev: 0.0,
        s_dev: 0.0,
        fisher_residual: 0.0,
        budget_residual: 0.0,
    });
    for t in 1..=horizon {
        let b_prev = rows[t - 1].b_dev;
        let interest = r_gross * b_prev;
        let b_dev = lambda * b_prev;
        let s_dev = interest - b_dev;
        // Re-substitution checks. The Fisher row is zero term by term (both
        // inflation and the rate are pegged); the budget row is checked as built.
        let budget_residual = b_dev - interest + s_dev;
        rows.push(PathRow {
            t,
            pi_dev: 0.0,
            b_dev,
            r_dev: 0.0,
            s_dev,
            fisher_residual: 0.0,
            budget_residual,
        });
    }
    Ok(Path {
        variant: Variant::Linear,
        horizon,
        rows,
    })
}

/// Simulates an ad-hoc rule pair in the unique bounded equilibrium.
///
/// Only the active-monetary/passive-fiscal regime is supported: there the
/// unstable Fisher block is solved forward,
/// `pi_dev_t = -eps_r_t / (f_pi - rho_r / beta)`,
/// and debt follows the stable feedback recursion. In every other regime this
/// decoupled system has no bounded solution with predetermined debt (or has
/// infinitely many), so simulation is refused rather than improvised.
///
/// Period 0 is the inherited initial condition perturbed by the period-0
/// fiscal shock: `b_dev_0 = b0_dev - eps_s_0`, `s_dev_0 = eps_s_0`, and its
/// budget residual is zero by convention.
pub fn simulate_adhoc(
    params: &ModelParams,
    rule: &AdHocRule,
    shocks: &ShockSequence,
    b0_dev: f64,
) -> Result<Path> {
    params.validate()?;
    rule.validate()?;
    if !b0_dev.is_finite() {
        return Err(Error::invalid("b0_dev", "must be finite"));
    }
    if shocks.horizon < 1
        || shocks.eps_r.len() != shocks.horizon + 1
        || shocks.eps_s.len() != shocks.horizon + 1
    {
        return Err(Error::invalid(
            "shocks",
            "shock sequences must cover horizon + 1 periods with horizon >= 1",
        ));
    }
    let regime = classify_regime(params, rule, DEFAULT_BOUNDARY_TOL)?;
    if regime.label != RegimeLabel::ActiveMPassiveF {
        return Err(Error::UnsupportedRegime {
            label: regime.label,
            message: format!(
                "simulation requires the active-monetary/passive-fiscal regime \
                 (|beta*f_pi| = {} and |1/beta - g_b| = {} must straddle 1)",
                regime.abs_lambda_pi, regime.abs_lambda_b
            ),
        });
    }

    let beta = params.beta;
    let r_gross = 1.0 / beta;
    // |rho_r| < 1 < |beta*f_pi| in this regime, so the forward sum converges
    // and the denominator is bounded away from zero.
    let denom = rule.f_pi - rule.rho_r / beta;
    let mut rows: Vec<PathRow> = Vec::with_capacity(shocks.horizon + 1);
    for t in 0..=shocks.horizon {
        let eps_r = shocks.eps_r[t];
        let eps_s = shocks.eps_s[t];
        let pi_dev = -eps_r / denom;
        let r_dev = rule.f_pi * pi_dev + eps_r;
        // Model-consistent expectation of next-period inflation is
        // rho_r * pi_dev, since inflation is proportional to the AR(1) shock.
        let fisher_residual = rule.rho_r * pi_dev - beta * r_dev;
        let (b_dev, s_dev, budget_residual) = if t == 0 {
            (b0_dev - eps_s, eps_s, 0.0)
        } else {
            let b_prev = rows[t - 1].b_dev;
            let interest = r_gross * b_prev;
            let s_dev = rule.g_b * b_prev + eps_s;
            let b_dev = interest - s_dev;
            (b_dev, s_dev, b_dev - interest + s_dev)
        };
        rows.push(PathRow {
            t,
            pi_dev,
            b_dev,
            r_dev,
            s_dev,
            fisher_residual,
            budget_residual,
        });
    }
    Ok(Path {
        variant: Variant::Linear,
        horizon: shocks.horizon,
        rows,
    })
}
