//! Structural parameters, the steady state, and the linearized transmission mechanism.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Result;

/// Deep structural parameters of the frictionless endowment economy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Subjective discount factor, strictly between 0 and 1.
    pub beta: f64,
    /// Constant endowment of goods per period.
    pub y: f64,
    /// Government purchases per period.
    pub g: f64,
    /// Steady-state real debt.
    pub b_star: f64,
    /// Gross inflation target; all linearizations are taken around 1.
    pub pi_star: f64,
    /// Probability that the current policy plan survives into the next period.
    pub q: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            beta: 0.99,
            y: 1.0,
            g: 0.0,
            b_star: 1.0,
            pi_star: 1.0,
            q: 1.0,
        }
    }
}

impl ModelParams {
    /// Builds a parameter set with the inflation target pinned at 1 and validates it.
    pub fn new(beta: f64, y: f64, g: f64, b_star: f64, q: f64) -> Result<Self> {
        let params = Self {
            beta,
            y,
            g,
            b_star,
            pi_star: 1.0,
            q,
        };
        params.validate()?;
        Ok(params)
    }

    /// Checks every structural invariant, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        if !self.beta.is_finite() || self.beta <= 0.0 || self.beta >= 1.0 {
            return Err(Error::invalid(
                "beta",
                format!("must lie strictly between 0 and 1, got {}", self.beta),
            ));
        }
        if !self.q.is_finite() || self.q <= 0.0 || self.q > 1.0 {
            return Err(Error::invalid(
                "q",
                format!("must lie in (0, 1], got {}", self.q),
            ));
        }
        if !self.g.is_finite() || self.g < 0.0 {
            return Err(Error::invalid(
                "g",
                format!("must be nonnegative, got {}", self.g),
            ));
        }
        if !self.y.is_finite() || self.y <= self.g {
            return Err(Error::invalid(
                "y",
                format!(
                    "must exceed government purchases g = {} so that consumption is positive, got {}",
                    self.g, self.y
                ),
            ));
        }
        if !self.b_star.is_finite() || self.b_star < 0.0 {
            return Err(Error::invalid(
                "b_star",
                format!("must be nonnegative, got {}", self.b_star),
            ));
        }
        if self.pi_star != 1.0 {
            return Err(Error::invalid(
                "pi_star",
                format!(
                    "the inflation target is fixed at 1 (all linearizations assume it), got {}",
                    self.pi_star
                ),
            ));
        }
        Ok(())
    }
}

/// Long-run values implied by the structural parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    /// Gross nominal interest rate, 1/beta.
    pub r_star: f64,
    /// Lump-sum tax level, g plus the steady-state interest expense.
    pub tau_star: f64,
    /// Primary surplus, tau_star - g.
    pub s_star: f64,
    /// Private consumption, y - g.
    pub c: f64,
    /// Net real interest rate, 1/beta - 1.
    pub r: f64,
}

/// Computes the steady state: the nominal rate equals the inverse discount factor
/// and the surplus exactly covers interest on the outstanding debt.
pub fn compute_steady_state(params: &ModelParams) -> Result<SteadyState> {
    params.validate()?;
    let r = 1.0 / params.beta - 1.0;
    let s_star = r * params.b_star;
    Ok(SteadyState {
        r_star: 1.0 / params.beta,
        tau_star: params.g + s_star,
        s_star,
        c: params.y - params.g,
        r,
    })
}

/// Whether deviations are plain differences from steady state or relative ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Linear,
    LogLinear,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Linear => write!(f, "linear"),
            Variant::LogLinear => write!(f, "loglinear"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Variant::Linear),
            "loglinear" => Ok(Variant::LogLinear),
            other => Err(Error::invalid(
                "variant",
                format!("expected `linear` or `loglinear`, got `{other}`"),
            )),
        }
    }
}

/// The 2x2 state matrix A and 2x2 instrument matrix B of the transmission
/// mechanism, with the variant tag that travels with every downstream object.
///
/// The state is (inflation, debt) and the instruments are (nominal rate, surplus),
/// all in deviations. Both blocks are decoupled: A is diagonal with entries
/// (0, 1/beta) and B is diagonal in the (rate -> inflation, surplus -> debt) sense.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearSystem {
    pub a_pi: f64,
    pub a_pib: f64,
    pub a_bpi: f64,
    pub a_b: f64,
    pub b_pir: f64,
    pub b_pis: f64,
    pub b_br: f64,
    pub b_bs: f64,
    pub variant: Variant,
}

/// Builds the linearized (or log-linearized) system matrices around the steady state.
///
/// The log-linear variant divides each row by its steady-state level, which is
/// undefined when `b_star` (and hence the steady-state surplus) is zero.
pub fn build_linear_system(params: &ModelParams, variant: Variant) -> Result<LinearSystem> {
    params.validate()?;
    if variant == Variant::LogLinear && params.b_star == 0.0 {
        return Err(Error::invalid(
            "b_star",
            "log-linear deviations are undefined at b_star = 0 (zero debt and surplus base); \
             use the linear variant instead",
        ));
    }
    let (b_pir, b_bs) = match variant {
        Variant::Linear => (params.beta, -1.0),
        Variant::LogLinear => (1.0, -(1.0 / params.beta - 1.0)),
    };
    Ok(LinearSystem {
        a_pi: 0.0,
        a_pib: 0.0,
        a_bpi: 0.0,
        a_b: 1.0 / params.beta,
        b_pir,
        b_pis: 0.0,
        b_br: 0.0,
        b_bs,
        variant,
    })
}
