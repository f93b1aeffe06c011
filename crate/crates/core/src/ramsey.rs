//! Ramsey-optimal policy under quasi-commitment, solved as a discounted
//! scalar linear-quadratic regulator.
//!
//! The transmission mechanism decouples into an inflation block and a debt
//! block, so the optimal plan reduces to two scalar Riccati problems with the
//! credibility-adjusted discount `beta * q`. Both blocks have closed forms;
//! an independent value-iteration solver ([`dare_value_iteration`]) acts as a
//! numerical oracle against which the closed forms are cross-checked.

use crate::error::Error;
use crate::model::ModelParams;
use crate::Result;

/// Fixed-point tolerance used when the value-iteration oracle cross-checks
/// the closed-form solution.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-12;

/// Iteration budget for the value-iteration oracle; scalar steps are cheap,
/// so the budget is generous.
pub const ORACLE_MAX_ITER: u64 = 1_000_000;

/// Threshold below which a strictly positive weight (or credibility) earns a
/// numerical-fragility warning.
pub const WEIGHT_WARN_FLOOR: f64 = 1e-7;

/// Loss-function weights of the policymaker.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolicyPreferences {
    /// Weight on squared inflation deviations.
    pub q_pi: f64,
    /// Weight on squared debt deviations.
    pub q_b: f64,
    /// Interest-smoothing weight; must be strictly positive for strict concavity.
    pub mu_r: f64,
    /// Tax-smoothing weight; must be strictly positive for strict concavity.
    pub mu_s: f64,
}

impl PolicyPreferences {
    pub fn new(q_pi: f64, q_b: f64, mu_r: f64, mu_s: f64) -> Result<Self> {
        let prefs = Self {
            q_pi,
            q_b,
            mu_r,
            mu_s,
        };
        prefs.validate()?;
        Ok(prefs)
    }

    /// Checks the sign restrictions on the loss weights.
    pub fn validate(&self) -> Result<()> {
        for (name, weight) in [("q_pi", self.q_pi), ("q_b", self.q_b)] {
            if !weight.is_finite() || weight < 0.0 {
                return Err(Error::invalid(
                    name,
                    format!("must be a nonnegative weight, got {weight}"),
                ));
            }
        }
        for (name, weight) in [("mu_r", self.mu_r), ("mu_s", self.mu_s)] {
            if !weight.is_finite() || weight <= 0.0 {
                return Err(Error::invalid(
                    name,
                    format!("instrument weight must be strictly positive, got {weight}"),
                ));
            }
        }
        Ok(())
    }
}

impl Default for PolicyPreferences {
    fn default() -> Self {
        Self {
            q_pi: 1.0,
            q_b: 1.0,
            mu_r: 1.0,
            mu_s: 1.0,
        }
    }
}

/// Closed-form solution of the inflation block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InflationBlock {
    /// Value-function weight on squared inflation; equals `q_pi` exactly.
    pub p_pi: f64,
    /// Optimal interest-rate feedback; the peg, exactly zero.
    pub f_opt: f64,
    /// Optimal initial inflation deviation.
    pub pi0_anchor: f64,
    /// True when `q_pi = 0`, in which case any initial inflation is optimal and
    /// the zero anchor is a reporting convention.
    pub pi0_indeterminate: bool,
}

/// Closed-form solution of the debt block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DebtBlock {
    /// Trace of the Hamiltonian system, 1 + 1/(beta q) + beta q * q_b / mu_s.
    pub s_sum: f64,
    /// Stable Hamiltonian root: the optimal debt persistence, in (0, 1] .
    pub lambda_b_opt: f64,
    /// Unstable Hamiltonian root.
    pub lambda_2: f64,
    /// Optimal fiscal feedback, 1/(beta q) - lambda_b_opt.
    pub g_b_opt: f64,
    /// Value-function weight on squared debt, q_b / (1 - lambda_b_opt).
    pub p_b: f64,
    /// True when `q_b = 0`: debt costs nothing, the roots collapse to
    /// (1, 1/(beta q)) and `p_b` is 0 by the limiting convention.
    pub degenerate: bool,
}

/// Output of the value-iteration Riccati solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DareSolution {
    /// Fixed point of the Riccati recursion.
    pub p: f64,
    /// Feedback gain under the convention `instrument = k_gain * state`.
    pub k_gain: f64,
    /// Closed-loop root `a + b * k_gain`.
    pub lambda_cl: f64,
    /// Iterations spent reaching the fixed point.
    pub iterations: u64,
}

/// One node of a tax-smoothing sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub mu_s: f64,
    pub lambda_b_opt: f64,
    pub g_b_opt: f64,
    pub p_b: f64,
}

/// The complete Ramsey-optimal plan.
#[derive(Debug, Clone, PartialEq)]
pub struct RamseySolution {
    /// Value-function weight on squared inflation (= q_pi).
    pub p_pi: f64,
    /// Off-diagonal value-function weight (= 0: the blocks are decoupled).
    pub p_pib: f64,
    /// Value-function weight on squared debt.
    pub p_b: f64,
    /// Optimal inflation persistence (= 0: inflation jumps to target).
    pub lambda_pi_opt: f64,
    /// Optimal debt persistence.
    pub lambda_b_opt: f64,
    /// Unstable Hamiltonian root of the debt block.
    pub lambda_2: f64,
    /// Hamiltonian trace of the debt block.
    pub s_sum: f64,
    /// Optimal interest-rate feedback (= 0: the peg).
    pub f_opt: f64,
    /// Optimal fiscal feedback.
    pub g_b_opt: f64,
    /// Optimal autocorrelation of monetary shocks (= 0).
    pub rho_r_opt: f64,
    /// Optimal variance of monetary shocks (= 0).
    pub sigma2_r_opt: f64,
    /// Optimal initial inflation deviation.
    pub pi0_anchor: f64,
    /// True when `q_pi = 0` leaves initial inflation undetermined.
    pub pi0_indeterminate: bool,
    /// True when `q_b = 0` makes the debt block degenerate (unit root).
    pub degenerate: bool,
    /// |closed-form lambda_b_opt - oracle closed-loop root|; 0 when degenerate
    /// (the unit-root convention has no oracle counterpart).
    pub oracle_lambda_residual: f64,
    /// |closed-form p_b - oracle fixed point|, same convention.
    pub oracle_p_residual: f64,
    /// Numerical-fragility and degeneracy notes attached during solving.
    pub warnings: Vec<String>,
}

/// Solves the inflation block.
///
/// The inflation state does not feed back into itself (its state-matrix entry
/// is zero), so the Riccati recursion collapses in one step to the stage weight
/// regardless of `mu_r` and the discount: `p_pi = q_pi`, and the optimal rule
/// never moves the costly instrument: `f_opt = 0`. The initial jump variable is
/// anchored at zero; with `q_pi = 0` the anchor is a convention and is flagged.
pub fn solve_inflation_block(
    prefs: &PolicyPreferences,
    params: &ModelParams,
) -> Result<InflationBlock> {
    params.validate()?;
    prefs.validate()?;
    Ok(InflationBlock {
        p_pi: prefs.q_pi,
        f_opt: 0.0,
        pi0_anchor: 0.0,
        pi0_indeterminate: prefs.q_pi == 0.0,
    })
}

/// Solves the debt block: the stable root of the Hamiltonian characteristic
/// polynomial `lambda^2 - S*lambda + 1/(beta q) = 0`.
///
/// The stable root is recovered through the unstable one via the product
/// identity `lambda * lambda_2 = 1/(beta q)`, and the discriminant is expanded
/// as a sum of nonnegative terms. The naive `(S - sqrt(S^2 - 4/(beta q)))/2`
/// is algebraically identical but loses all precision when `mu_s` is small
/// (S grows like `q_b/mu_s` and the subtraction cancels catastrophically).
pub fn solve_debt_block(prefs: &PolicyPreferences, params: &ModelParams) -> Result<DebtBlock> {
    params.validate()?;
    prefs.validate()?;
    let d = params.beta * params.q;
    let a = 1.0 / d;
    if prefs.q_b == 0.0 {
        // The polynomial factors as (lambda - 1)(lambda - 1/(beta q)).
        return Ok(DebtBlock {
            s_sum: 1.0 + a,
            lambda_b_opt: 1.0,
            lambda_2: a,
            g_b_opt: a - 1.0,
            p_b: 0.0,
            degenerate: true,
        });
    }
    let gap = a - 1.0; // 1/(beta q) - 1 > 0
    let eps = d * prefs.q_b / prefs.mu_s;
    let s_sum = 1.0 + a + eps;
    // S^2 - 4/(beta q) rewritten with only nonnegative addends.
    let disc = gap * gap + eps * (2.0 * (1.0 + a) + eps);
    let sqrt_disc = disc.sqrt();
    let lambda_2 = 0.5 * (s_sum + sqrt_disc);
    let lambda_b_opt = a / lambda_2;
    // 1 - lambda_b_opt = (lambda_2 - a)/lambda_2, with
    // sqrt(disc) - gap = (disc - gap^2)/(sqrt(disc) + gap) to avoid cancelling
    // when eps is tiny (huge mu_s).
    let sqrt_disc_minus_gap = eps * (2.0 * (1.0 + a) + eps) / (sqrt_disc + gap);
    let one_minus_lambda = (eps + sqrt_disc_minus_gap) / (2.0 * lambda_2);
    Ok(DebtBlock {
        s_sum,
        lambda_b_opt,
        lambda_2,
        g_b_opt: a - lambda_b_opt,
        p_b: prefs.q_b / one_minus_lambda,
        degenerate: false,
    })
}

/// Iterates the scalar discounted Riccati recursion
/// `P_{k+1} = q_w + d a P_k a - (d a P_k b)^2 / (r_w + d b P_k b)`
/// from `P_0 = q_w` until successive iterates differ by less than `tol`,
/// measured relative to `max(1, |P|)` so that fixed points far above unity
/// remain reachable at double precision.
///
/// Serves as an independent numerical oracle for the closed-form solutions.
/// Returns the fixed point, the implied feedback gain (sign convention:
/// `instrument = k_gain * state`), and the closed-loop root `a + b * k_gain`.
pub fn dare_value_iteration(
    a: f64,
    b: f64,
    q_w: f64,
    r_w: f64,
    discount: f64,
    tol: f64,
    max_iter: u64,
) -> Result<DareSolution> {
    if !a.is_finite() {
        return Err(Error::invalid("a", format!("must be finite, got {a}")));
    }
    if !b.is_finite() {
        return Err(Error::invalid("b", format!("must be finite, got {b}")));
    }
    if !q_w.is_finite() || q_w < 0.0 {
        return Err(Error::invalid(
            "q_w",
            format!("state weight must be nonnegative, got {q_w}"),
        ));
    }
    if !r_w.is_finite() || r_w <= 0.0 {
        return Err(Error::invalid(
            "r_w",
            format!("instrument weight must be strictly positive, got {r_w}"),
        ));
    }
    if !discount.is_finite() || discount <= 0.0 || discount > 1.0 {
        return Err(Error::invalid(
            "discount",
            format!("must lie in (0, 1], got {discount}"),
        ));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::invalid(
            "tol",
            format!("must be strictly positive, got {tol}"),
        ));
    }
    if max_iter == 0 {
        return Err(Error::invalid("max_iter", "must be at least 1"));
    }

    let mut p = q_w;
    let mut residual = f64::INFINITY;
    for iteration in 1..=max_iter {
        let denom = r_w + discount * b * p * b;
        let offset = discount * a * p * b;
        let p_next = q_w + discount * a * p * a - offset * offset / denom;
        if !p_next.is_finite() {
            return Err(Error::NoConvergence {
                iterations: iteration,
                last: p,
                residual: f64::INFINITY,
            });
        }
        residual = (p_next - p).abs();
        p = p_next;
        if residual < tol * p.abs().max(1.0) {
            let k_gain = -discount * a * p * b / (r_w + discount * b * p * b);
            return Ok(DareSolution {
                p,
                k_gain,
                lambda_cl: a + b * k_gain,
                iterations: iteration,
            });
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        last: p,
        residual,
    })
}

fn floor_warnings(prefs: &PolicyPreferences, params: &ModelParams) -> Vec<String> {
    let mut warnings = Vec::new();
    for (name, value) in [("mu_r", prefs.mu_r), ("mu_s", prefs.mu_s), ("q", params.q)] {
        if value < WEIGHT_WARN_FLOOR {
            warnings.push(format!(
                "{name} = {value:e} is below {WEIGHT_WARN_FLOOR:e}; results near the \
                 free-instrument (or zero-credibility) limit are numerically fragile"
            ));
        }
    }
    warnings
}

/// Assembles the full Ramsey plan and cross-checks the debt block against the
/// value-iteration oracle.
///
/// The oracle runs the recursion with the same quasi-commitment data
/// (`a = 1/(beta q)`, `b = -1`, discount `beta q`) and must reproduce the
/// closed-form persistence and value weight: disagreement beyond 1e-6 is an
/// error, beyond 1e-8 a warning. The residuals are embedded in the result.
/// With `q_b = 0` the oracle is skipped: the costless block's value iteration
/// sits at zero and has no counterpart for the unit-root convention.
pub fn ramsey_solution(params: &ModelParams, prefs: &PolicyPreferences) -> Result<RamseySolution> {
    params.validate()?;
    prefs.validate()?;
    let mut warnings = floor_warnings(prefs, params);
    let inflation = solve_inflation_block(prefs, params)?;
    let debt = solve_debt_block(prefs, params)?;

    let (oracle_lambda_residual, oracle_p_residual) = if debt.degenerate {
        warnings.push(
            "q_b = 0: debt carries no loss weight; the unit-root convention \
             lambda_b_opt = 1 is reported and the oracle cross-check is skipped"
                .to_string(),
        );
        (0.0, 0.0)
    } else {
        let d = params.beta * params.q;
        let oracle = dare_value_iteration(
            1.0 / d,
            -1.0,
            prefs.q_b,
            prefs.mu_s,
            d,
            DEFAULT_ORACLE_TOL,
            ORACLE_MAX_ITER,
        )?;
        let lambda_residual = (debt.lambda_b_opt - oracle.lambda_cl).abs();
        let p_residual = (debt.p_b - oracle.p).abs();
        let p_scale = debt.p_b.abs().max(1.0);
        if lambda_residual > 1e-6 || p_residual > 1e-6 * p_scale {
            return Err(Error::CrossCheck {
                message: format!(
                    "closed form (lambda = {:.17e}, p_b = {:.17e}) vs value iteration \
                     (lambda = {:.17e}, p = {:.17e})",
                    debt.lambda_b_opt, debt.p_b, oracle.lambda_cl, oracle.p
                ),
            });
        }
        if lambda_residual > 1e-8 || p_residual > 1e-8 * p_scale {
            warnings.push(format!(
                "oracle agreement is loose: |delta lambda| = {lambda_residual:e}, \
                 |delta p_b| = {p_residual:e}"
            ));
        }
        (lambda_residual, p_residual)
    };

    Ok(RamseySolution {
        p_pi: inflation.p_pi,
        p_pib: 0.0,
        p_b: debt.p_b,
        lambda_pi_opt: 0.0,
        lambda_b_opt: debt.lambda_b_opt,
        lambda_2: debt.lambda_2,
        s_sum: debt.s_sum,
        f_opt: inflation.f_opt,
        g_b_opt: debt.g_b_opt,
        rho_r_opt: 0.0,
        sigma2_r_opt: 0.0,
        pi0_anchor: inflation.pi0_anchor,
        pi0_indeterminate: inflation.pi0_indeterminate,
        degenerate: debt.degenerate,
        oracle_lambda_residual,
        oracle_p_residual,
        warnings,
    })
}

/// Optimal expected loss from initial deviations `(pi0_dev, b0_dev)`:
/// `-(p_pi * pi0^2 + p_b * b0^2) / 2`, which is nonpositive.
///
/// When inflation is costly (`p_pi > 0`) the initial inflation must sit on the
/// optimality anchor, zero; when it is free the term drops out and any
/// `pi0_dev` yields the same loss.
pub fn loss_value(solution: &RamseySolution, b0_dev: f64, pi0_dev: f64) -> Result<f64> {
    if !b0_dev.is_finite() {
        return Err(Error::invalid("b0_dev", "must be finite"));
    }
    if !pi0_dev.is_finite() {
        return Err(Error::invalid("pi0_dev", "must be finite"));
    }
    if solution.p_pi > 0.0 && pi0_dev != solution.pi0_anchor {
        return Err(Error::AnchorViolation {
            message: format!(
                "initial inflation must equal the anchor {} when q_pi > 0, got {}",
                solution.pi0_anchor, pi0_dev
            ),
        });
    }
    Ok(-0.5 * (solution.p_pi * pi0_dev * pi0_dev + solution.p_b * b0_dev * b0_dev))
}

/// Evaluates the debt block along an ascending grid of tax-smoothing weights.
///
/// The optimal persistence rises with `mu_s`: costless tax adjustment repays
/// debt at once (`lambda -> 0`), prohibitive adjustment leaves it a random
/// walk (`lambda -> 1`).
pub fn persistence_sweep(
    prefs: &PolicyPreferences,
    params: &ModelParams,
    mu_s_grid: &[f64],
) -> Result<Vec<SweepPoint>> {
    params.validate()?;
    prefs.validate()?;
    if mu_s_grid.is_empty() {
        return Err(Error::range("mu_s grid must not be empty".to_string()));
    }
    for &mu_s in mu_s_grid {
        if !mu_s.is_finite() || mu_s <= 0.0 {
            return Err(Error::range(format!(
                "mu_s grid values must be strictly positive and finite, got {mu_s}"
            )));
        }
    }
    for window in mu_s_grid.windows(2) {
        if window[0] >= window[1] {
            return Err(Error::range(format!(
                "mu_s grid must be strictly ascending, got {} before {}",
                window[0], window[1]
            )));
        }
    }
    mu_s_grid
        .iter()
        .map(|&mu_s| {
            let node = PolicyPreferences { mu_s, ..*prefs };
            let block = solve_debt_block(&node, params)?;
            Ok(SweepPoint {
                mu_s,
                lambda_b_opt: block.lambda_b_opt,
                g_b_opt: block.g_b_opt,
                p_b: block.p_b,
            })
        })
        .collect()
}
