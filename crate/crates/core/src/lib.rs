//! Monetary-fiscal policy interactions in a frictionless constant-endowment
//! economy.
//!
//! The model is deliberately small: a Fisher relation links the nominal rate
//! to expected inflation, and a flow budget constraint links real debt to the
//! primary surplus. Around the zero-inflation steady state the two blocks
//! decouple, which makes every question below answerable in closed form and
//! cheap to verify numerically:
//!
//! - [`model`] computes the steady state and the (log-)linearized system;
//! - [`rules`] classifies ad-hoc feedback rules into Leeper regimes by where
//!   the closed-loop eigenvalues sit relative to the unit circle;
//! - [`ramsey`] solves the optimal-policy problem under quasi-commitment as a
//!   discounted scalar LQR, closed form cross-checked against an independent
//!   value-iteration Riccati oracle;
//! - [`sim`] generates trajectories (deterministic or with seeded Gaussian
//!   shocks) and re-substitutes them into the model equations, reporting
//!   per-period residuals.

pub mod error;
pub mod model;
pub mod ramsey;
pub mod rules;
pub mod sim;

pub use error::Error;
pub use model::{
    build_linear_system, compute_steady_state, LinearSystem, ModelParams, SteadyState, Variant,
};
pub use ramsey::{
    dare_value_iteration, loss_value, persistence_sweep, ramsey_solution, solve_debt_block,
    solve_inflation_block, DareSolution, DebtBlock, InflationBlock, PolicyPreferences,
    RamseySolution, SweepPoint, DEFAULT_ORACLE_TOL, ORACLE_MAX_ITER, WEIGHT_WARN_FLOOR,
};
pub use rules::{
    classify_regime, closed_loop_eigenvalues, regime_grid, AdHocRule, RegimeClass, RegimeGrid,
    RegimeLabel, DEFAULT_BOUNDARY_TOL,
};
pub use sim::{draw_shocks, simulate_adhoc, simulate_ramsey, Path, PathRow, ShockSequence};

/// Library-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
