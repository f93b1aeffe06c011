//! Property-based invariants spanning the model, the classifier, the solver,
//! and the simulators.

use policymix::{
    build_linear_system, classify_regime, compute_steady_state, draw_shocks, persistence_sweep,
    ramsey_solution, simulate_adhoc, simulate_ramsey, solve_debt_block, AdHocRule, ModelParams,
    PolicyPreferences, RegimeLabel, ShockSequence, Variant,
};
use proptest::prelude::*;

fn beta_st() -> impl Strategy<Value = f64> {
    0.2f64..0.995
}

fn credibility_st() -> impl Strategy<Value = f64> {
    0.05f64..=1.0
}

/// Log-uniform weights spanning six orders of magnitude.
fn weight_st() -> impl Strategy<Value = f64> {
    (-3.0f64..3.0).prop_map(|e| 10f64.powf(e))
}

fn params(beta: f64, q: f64) -> ModelParams {
    ModelParams::new(beta, 2.0, 0.5, 1.0, q).unwrap()
}

proptest! {
    #[test]
    fn steady_state_identities_hold(
        beta in beta_st(),
        q in credibility_st(),
        g in 0.0f64..2.0,
        slack in 0.1f64..5.0,
        b_star in 0.0f64..10.0,
    ) {
        let p = ModelParams::new(beta, g + slack, g, b_star, q).unwrap();
        let ss = compute_steady_state(&p).unwrap();
        prop_assert!((ss.r_star * p.beta - 1.0).abs() <= 1e-15);
        let budget_gap = ss.tau_star - p.g - (1.0 / p.beta - 1.0) * p.b_star;
        prop_assert!(budget_gap.abs() <= 1e-12 * ss.tau_star.abs().max(1.0));
        prop_assert!(ss.c > 0.0);
        prop_assert!(ss.s_star >= 0.0);
    }

    #[test]
    fn state_matrix_has_exactly_one_unstable_root(
        beta in beta_st(),
        q in credibility_st(),
        log_linear in any::<bool>(),
    ) {
        let p = params(beta, q);
        let variant = if log_linear { Variant::LogLinear } else { Variant::Linear };
        let sys = build_linear_system(&p, variant).unwrap();
        // Diagonal state matrix: the spectrum is read off the diagonal.
        prop_assert_eq!(sys.a_pi, 0.0);
        prop_assert_eq!(sys.a_pib, 0.0);
        prop_assert_eq!(sys.a_bpi, 0.0);
        prop_assert!((sys.a_b * p.beta - 1.0).abs() <= 1e-15);
        let unstable = [sys.a_pi, sys.a_b].iter().filter(|l| l.abs() > 1.0).count();
        prop_assert_eq!(unstable, 1);
    }

    #[test]
    fn classification_is_total_and_symmetric(
        beta in beta_st(),
        q in credibility_st(),
        f_pi in -5.0f64..5.0,
        g_b in -5.0f64..5.0,
    ) {
        let p = params(beta, q);
        let class = classify_regime(&p, &AdHocRule::new(f_pi, g_b), 0.0).unwrap();
        let m_pi = (beta * f_pi).abs();
        let m_b = (1.0 / beta - g_b).abs();
        let expected = if m_pi == 1.0 || m_b == 1.0 {
            RegimeLabel::Boundary
        } else {
            match (m_pi > 1.0, m_b > 1.0) {
                (true, false) => RegimeLabel::ActiveMPassiveF,
                (false, true) => RegimeLabel::PassiveMActiveF,
                (false, false) => RegimeLabel::Indeterminate,
                (true, true) => RegimeLabel::Explosive,
            }
        };
        prop_assert_eq!(class.label, expected);

        // The label depends on the rule only through the eigenvalue magnitudes,
        // so reflecting either parameter across its symmetry point preserves it
        // (checked away from the unit circle, where a rounding flip would be fair).
        if (m_pi - 1.0).abs() > 1e-9 && (m_b - 1.0).abs() > 1e-9 {
            let flip_f = classify_regime(&p, &AdHocRule::new(-f_pi, g_b), 0.0).unwrap();
            prop_assert_eq!(flip_f.label, class.label);
            let flip_g =
                classify_regime(&p, &AdHocRule::new(f_pi, 2.0 / beta - g_b), 0.0).unwrap();
            prop_assert_eq!(flip_g.label, class.label);
        }
    }

    #[test]
    fn grids_agree_with_the_pointwise_classifier(
        beta in beta_st(),
        f_lo in -3.0f64..0.0,
        f_width in 0.5f64..4.0,
        g_lo in -2.0f64..0.0,
        g_width in 0.5f64..4.0,
        n_f in 2usize..7,
        n_g in 2usize..7,
    ) {
        let p = params(beta, 1.0);
        let grid = policymix::regime_grid(
            &p,
            (f_lo, f_lo + f_width),
            (g_lo, g_lo + g_width),
            n_f,
            n_g,
            1e-9,
        )
        .unwrap();
        prop_assert_eq!(grid.cells.len(), n_f * n_g);
        for (i, &f_pi) in grid.f_values.iter().enumerate() {
            for (j, &g_b) in grid.g_values.iter().enumerate() {
                let direct = classify_regime(&p, &AdHocRule::new(f_pi, g_b), 1e-9).unwrap();
                prop_assert_eq!(*grid.cell(i, j), direct);
            }
        }
    }

    #[test]
    fn hamiltonian_root_identities_hold(
        beta in beta_st(),
        q in credibility_st(),
        q_b in weight_st(),
        mu_s in weight_st(),
    ) {
        let p = params(beta, q);
        let prefs = PolicyPreferences::new(1.0, q_b, 1.0, mu_s).unwrap();
        let block = solve_debt_block(&prefs, &p).unwrap();
        let d = beta * q;
        let a = 1.0 / d;
        prop_assert!((block.lambda_b_opt * block.lambda_2 - a).abs() <= 1e-12 * a);
        prop_assert!(
            (block.lambda_b_opt + block.lambda_2 - block.s_sum).abs() <= 1e-12 * block.s_sum
        );
        // Stable root and feedback bracket.
        prop_assert!(block.lambda_b_opt > 0.0);
        prop_assert!(block.lambda_b_opt < 1.0);
        prop_assert!(block.g_b_opt > a - 1.0);
        prop_assert!(block.g_b_opt < a);
        // The value weight solves the Riccati fixed-point equation.
        let p_b = block.p_b;
        let offset = d * a * p_b;
        let rhs = q_b + d * a * p_b * a - offset * offset / (mu_s + d * p_b);
        prop_assert!((p_b - rhs).abs() <= 1e-10 * p_b.abs().max(1.0));
    }

    #[test]
    fn persistence_is_monotone_in_both_weights(
        beta in beta_st(),
        q in credibility_st(),
        q_b in weight_st(),
        mu_s in weight_st(),
        factor in 1.5f64..8.0,
    ) {
        let p = params(beta, q);
        let base = solve_debt_block(&PolicyPreferences::new(1.0, q_b, 1.0, mu_s).unwrap(), &p)
            .unwrap();
        let smoother =
            solve_debt_block(&PolicyPreferences::new(1.0, q_b, 1.0, mu_s * factor).unwrap(), &p)
                .unwrap();
        prop_assert!(base.lambda_b_opt < smoother.lambda_b_opt);
        let keener =
            solve_debt_block(&PolicyPreferences::new(1.0, q_b * factor, 1.0, mu_s).unwrap(), &p)
                .unwrap();
        prop_assert!(keener.lambda_b_opt < base.lambda_b_opt);
    }

    #[test]
    fn sweeps_increase_along_any_ascending_grid(
        beta in beta_st(),
        q in credibility_st(),
        start in -2.0f64..1.0,
        step in 1.2f64..4.0,
    ) {
        let p = params(beta, q);
        let grid: Vec<f64> = (0..4).map(|k| 10f64.powf(start) * step.powi(k)).collect();
        let points = persistence_sweep(&PolicyPreferences::default(), &p, &grid).unwrap();
        for pair in points.windows(2) {
            prop_assert!(pair[0].lambda_b_opt < pair[1].lambda_b_opt);
        }
    }

    #[test]
    fn optimal_policy_pegs_the_rate_for_every_preference(
        beta in beta_st(),
        q in credibility_st(),
        q_pi in 0.0f64..10.0,
        q_b in weight_st(),
        mu_r in weight_st(),
        mu_s in weight_st(),
    ) {
        let p = params(beta, q);
        let prefs = PolicyPreferences::new(q_pi, q_b, mu_r, mu_s).unwrap();
        let sol = ramsey_solution(&p, &prefs).unwrap();
        // Bitwise exactness, not approximation: the inflation block is trivial.
        prop_assert!(sol.p_pi == q_pi);
        prop_assert!(sol.p_pib == 0.0);
        prop_assert!(sol.f_opt == 0.0);
        prop_assert!(sol.lambda_pi_opt == 0.0);
        prop_assert!(sol.rho_r_opt == 0.0);
        prop_assert!(sol.sigma2_r_opt == 0.0);
        prop_assert!(sol.pi0_anchor == 0.0);
        prop_assert_eq!(sol.pi0_indeterminate, q_pi == 0.0);
        prop_assert!(sol.oracle_lambda_residual <= 1e-6);
    }

    #[test]
    fn ramsey_paths_satisfy_their_difference_equations(
        beta in beta_st(),
        q in credibility_st(),
        q_b in weight_st(),
        mu_s in weight_st(),
        b0_dev in -5.0f64..5.0,
        horizon in 1usize..40,
    ) {
        let p = params(beta, q);
        let prefs = PolicyPreferences::new(1.0, q_b, 1.0, mu_s).unwrap();
        let sol = ramsey_solution(&p, &prefs).unwrap();
        let path = simulate_ramsey(&sol, &p, b0_dev, horizon).unwrap();
        prop_assert_eq!(path.rows.len(), horizon + 1);
        prop_assert!(path.max_abs_residual() <= 1e-12);
        for (t, row) in path.rows.iter().enumerate() {
            prop_assert_eq!(row.t, t);
            prop_assert!(row.pi_dev == 0.0);
            prop_assert!(row.r_dev == 0.0);
        }
        // Debt contracts monotonically toward steady state.
        for pair in path.rows.windows(2) {
            prop_assert!(pair[1].b_dev.abs() <= pair[0].b_dev.abs());
        }
    }

    #[test]
    fn adhoc_paths_satisfy_their_difference_equations(
        beta in 0.8f64..0.995,
        magnitude in 1.01f64..4.0,
        hawkish in any::<bool>(),
        u in -0.85f64..0.85,
        sigma_r in 0.0f64..0.3,
        sigma_s in 0.0f64..0.3,
        rho_r in -0.9f64..0.9,
        rho_s in -0.9f64..0.9,
        b0_dev in -2.0f64..2.0,
        horizon in 2usize..40,
        seed in any::<u64>(),
    ) {
        let p = params(beta, 1.0);
        let f_pi = if hawkish { magnitude / beta } else { -magnitude / beta };
        let rule = AdHocRule {
            sigma_r,
            sigma_s,
            rho_r,
            rho_s,
            ..AdHocRule::new(f_pi, 1.0 / beta - u)
        };
        let shocks = draw_shocks(sigma_r, sigma_s, rho_r, rho_s, horizon, seed).unwrap();
        let path = simulate_adhoc(&p, &rule, &shocks, b0_dev).unwrap();
        prop_assert_eq!(path.rows.len(), horizon + 1);
        prop_assert!(path.max_abs_residual() <= 1e-12);
        // Independent re-check against the model matrices and the rules.
        let sys = build_linear_system(&p, Variant::Linear).unwrap();
        for t in 1..path.rows.len() {
            let row = &path.rows[t];
            let prev = &path.rows[t - 1];
            let b_expected = sys.a_b * prev.b_dev + sys.b_bs * row.s_dev;
            prop_assert!((row.b_dev - b_expected).abs() <= 1e-12 * b_expected.abs().max(1.0));
            let s_expected = rule.g_b * prev.b_dev + shocks.eps_s[t];
            prop_assert!((row.s_dev - s_expected).abs() <= 1e-12 * s_expected.abs().max(1.0));
        }
        for (t, row) in path.rows.iter().enumerate() {
            prop_assert_eq!(row.t, t);
            let r_expected = rule.f_pi * row.pi_dev + shocks.eps_r[t];
            prop_assert!((row.r_dev - r_expected).abs() <= 1e-12);
        }
    }

    #[test]
    fn simulation_is_homogeneous_of_degree_one(
        beta in 0.8f64..0.995,
        u in -0.85f64..0.85,
        sigma_r in 0.01f64..0.3,
        sigma_s in 0.01f64..0.3,
        b0_dev in -2.0f64..2.0,
        horizon in 2usize..20,
        seed in any::<u64>(),
    ) {
        let p = params(beta, 1.0);
        let rule = AdHocRule {
            sigma_r,
            sigma_s,
            ..AdHocRule::new(2.0 / beta, 1.0 / beta - u)
        };
        let shocks = draw_shocks(sigma_r, sigma_s, 0.0, 0.0, horizon, seed).unwrap();
        let doubled = ShockSequence::new(
            shocks.eps_r.iter().map(|e| 2.0 * e).collect(),
            shocks.eps_s.iter().map(|e| 2.0 * e).collect(),
        )
        .unwrap();
        let base = simulate_adhoc(&p, &rule, &shocks, b0_dev).unwrap();
        let scaled = simulate_adhoc(&p, &rule, &doubled, 2.0 * b0_dev).unwrap();
        // Doubling is exact in binary floating point, so so is the comparison.
        for (b, s) in base.rows.iter().zip(scaled.rows.iter()) {
            prop_assert_eq!(2.0 * b.pi_dev, s.pi_dev);
            prop_assert_eq!(2.0 * b.b_dev, s.b_dev);
            prop_assert_eq!(2.0 * b.r_dev, s.r_dev);
            prop_assert_eq!(2.0 * b.s_dev, s.s_dev);
        }
    }

    #[test]
    fn shock_draws_are_deterministic_per_seed(
        sigma_r in 0.0f64..2.0,
        sigma_s in 0.0f64..2.0,
        rho_r in -0.95f64..0.95,
        rho_s in -0.95f64..0.95,
        horizon in 0usize..50,
        seed in any::<u64>(),
    ) {
        let first = draw_shocks(sigma_r, sigma_s, rho_r, rho_s, horizon, seed).unwrap();
        let second = draw_shocks(sigma_r, sigma_s, rho_r, rho_s, horizon, seed).unwrap();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(first.eps_r.len(), horizon + 1);
        prop_assert_eq!(first.eps_s.len(), horizon + 1);
    }

    #[test]
    fn variants_produce_the_same_dynamics_after_rescaling(
        beta in 0.8f64..0.995,
        b_star in 0.25f64..4.0,
        u in -0.85f64..0.85,
        magnitude in 1.01f64..3.0,
        sigma_r in 0.0f64..0.3,
        sigma_s in 0.0f64..0.3,
        rho_r in -0.8f64..0.8,
        horizon in 2usize..15,
        seed in any::<u64>(),
    ) {
        let p = ModelParams::new(beta, 2.0, 0.5, b_star, 1.0).unwrap();
        let rule = AdHocRule {
            sigma_r,
            sigma_s,
            rho_r,
            ..AdHocRule::new(magnitude / beta, 1.0 / beta - u)
        };
        let shocks = draw_shocks(sigma_r, sigma_s, rho_r, 0.0, horizon, seed).unwrap();
        let linear = simulate_adhoc(&p, &rule, &shocks, 0.5).unwrap();
        let log = linear.to_log_linear(&p).unwrap();
        prop_assert_eq!(log.variant, Variant::LogLinear);
        prop_assert!(log.max_abs_residual() <= 1e-12);

        // The rescaled path satisfies the log-linear system equations.
        let sys = build_linear_system(&p, Variant::LogLinear).unwrap();
        let ss = compute_steady_state(&p).unwrap();
        for t in 1..log.rows.len() {
            let row = &log.rows[t];
            let prev = &log.rows[t - 1];
            let rebuilt = sys.a_b * prev.b_dev + sys.b_bs * row.s_dev;
            prop_assert!((row.b_dev - rebuilt).abs() <= 1e-12 * rebuilt.abs().max(1.0));
        }
        for t in 0..log.rows.len() {
            let fisher = rule.rho_r * log.rows[t].pi_dev - sys.b_pir * log.rows[t].r_dev;
            prop_assert!(fisher.abs() <= 1e-12);
            // Identical trajectories once units are restored.
            let restored = log.rows[t].b_dev * b_star;
            prop_assert!((restored - linear.rows[t].b_dev).abs()
                <= 1e-13 * linear.rows[t].b_dev.abs().max(1.0));
            let r_restored = log.rows[t].r_dev * ss.r_star;
            prop_assert!((r_restored - linear.rows[t].r_dev).abs()
                <= 1e-13 * linear.rows[t].r_dev.abs().max(1.0));
        }
    }

    #[test]
    fn optimal_rule_pair_is_doubly_passive_at_full_credibility(
        beta in beta_st(),
        q_b in weight_st(),
        mu_s in weight_st(),
    ) {
        let p = params(beta, 1.0);
        let prefs = PolicyPreferences::new(1.0, q_b, 1.0, mu_s).unwrap();
        let sol = ramsey_solution(&p, &prefs).unwrap();
        let class =
            classify_regime(&p, &AdHocRule::new(sol.f_opt, sol.g_b_opt), 1e-9).unwrap();
        prop_assert!(class.abs_lambda_pi == 0.0);
        prop_assert!(class.abs_lambda_b < 1.0);
        // Reconstructing the root as 1/beta - g_b is exact up to rounding of
        // the subtraction, i.e. a few ulps of 1/beta.
        prop_assert!((class.abs_lambda_b - sol.lambda_b_opt).abs() <= 1e-14 / beta);
        prop_assert_eq!(class.label, RegimeLabel::Indeterminate);
    }
}
