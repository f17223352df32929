//! Invariants of the model checked over random parameters and states.

use proptest::prelude::*;

use dtc_sim::allocation::{ai_level, solve_allocation, AIParams, PolicyWedge, Regime};
use dtc_sim::calibration::{calibrate_k, initial_productivities, theorem4_t_bound, KCalibration};
use dtc_sim::economy::{sector_outputs, EconomyParams, SectorState};
use dtc_sim::environment::{env_step, EnvParams, EnvState};
use dtc_sim::numeric::rel_diff;
use dtc_sim::policy::required_wedge;
use dtc_sim::verify::{allocation_by_scan, check_identities, reference_params};

prop_compose! {
    fn economy()(
        alpha in 0.05f64..0.95,
        sigma in 1.05f64..20.0,
        psi in 0.05f64..2.0,
        gamma in 0.2f64..3.0,
        eta_c in 0.005f64..0.2,
        eta_d in 0.005f64..0.2,
    ) -> EconomyParams {
        EconomyParams::new(alpha, sigma, psi, gamma, eta_c, eta_d).unwrap()
    }
}

prop_compose! {
    fn state(span: f64)(ln_a_c in -span..span, ln_a_d in -span..span) -> SectorState {
        SectorState::from_logs(ln_a_c, ln_a_d).unwrap()
    }
}

fn environment() -> EnvParams {
    EnvParams::new(280.0, 1120.0, 0.0095866, 0.0024494, 741.0).unwrap()
}

proptest! {
    #[test]
    fn equilibrium_identities_hold(params in economy(), s in state(6.9)) {
        let rep = check_identities(&s, &params);
        prop_assert!(rep.passed(), "{:?}", rep.failures());
    }

    #[test]
    fn outputs_scale_with_productivity(params in economy(), s in state(3.0), ln_lambda in -3.0f64..3.0) {
        let lambda = ln_lambda.exp();
        let (y_c, y_d) = sector_outputs(&s, &params);
        let (y_c2, y_d2) = sector_outputs(&s.scaled(lambda).unwrap(), &params);
        prop_assert!(rel_diff(y_c2, lambda * y_c) < 1e-10);
        prop_assert!(rel_diff(y_d2, lambda * y_d) < 1e-10);
    }

    #[test]
    fn environment_stays_in_bounds(s in -100.0f64..1000.0, y_d in 0.0f64..1e6) {
        let env = environment();
        let next = env_step(EnvState::new(s, &env).unwrap(), y_d, &env).quality();
        prop_assert!((0.0..=env.s_bar()).contains(&next));
    }

    #[test]
    fn environment_recovers_without_emissions(s in 1e-6f64..840.0) {
        let env = environment();
        let state = EnvState::new(s, &env).unwrap();
        let next = env_step(state, 0.0, &env).quality();
        prop_assert!(next >= state.quality());
    }

    #[test]
    fn required_wedge_selects_clean(s in state(4.0), k in 0.0f64..0.3, t in 0u32..40) {
        let params = reference_params();
        let levels = ai_level(t, &AIParams::with_k(k).unwrap());
        let wedge = required_wedge(&s, &levels, &params).unwrap();
        prop_assert!(wedge.value() >= 1.0);
        let alloc = solve_allocation(&s, &levels, wedge, &params).unwrap();
        prop_assert_eq!(alloc.regime, Regime::CleanOnly);
        if wedge.value() > 1.0 {
            let weaker = PolicyWedge::new(wedge.value() * (1.0 - 1e-6)).unwrap();
            let alloc = solve_allocation(&s, &levels, weaker, &params).unwrap();
            prop_assert_ne!(alloc.regime, Regime::CleanOnly);
        }
    }

    #[test]
    fn allocation_matches_scan(params in economy(), s in state(1.0), k in 0.0f64..0.3, t in 0u32..12, g in 0.5f64..2.0) {
        let levels = ai_level(t, &AIParams::with_k(k).unwrap());
        let wedge = PolicyWedge::new(g).unwrap();
        let solved = solve_allocation(&s, &levels, wedge, &params).unwrap();
        let (regime, s_c) = allocation_by_scan(&s, &levels, wedge, &params, 20_000);
        prop_assert_eq!(solved.regime, regime);
        prop_assert!((solved.s_c - s_c).abs() <= 1e-4);
        prop_assert!((solved.s_c + solved.s_d - 1.0).abs() < 1e-15);
    }

    #[test]
    fn initial_productivities_invert_outputs(params in economy(), ln_y_c in -8.0f64..8.0, ln_y_d in -8.0f64..8.0) {
        let (y_c0, y_d0) = (ln_y_c.exp(), ln_y_d.exp());
        let s = initial_productivities(y_c0, y_d0, &params).unwrap();
        let (y_c, y_d) = sector_outputs(&s, &params);
        prop_assert!(rel_diff(y_c, y_c0) < 1e-8);
        prop_assert!(rel_diff(y_d, y_d0) < 1e-8);
    }

    #[test]
    fn clean_lockin_bound_falls_with_k(k in 0.001f64..2.0, dk in 1e-3f64..0.5) {
        let params = reference_params();
        let lo = theorem4_t_bound(k, &params).unwrap();
        let hi = theorem4_t_bound(k + dk, &params).unwrap();
        prop_assert!(hi < lo);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn calibrated_k_is_non_decreasing_in_target(a in 0.001f64..0.7, b in 0.001f64..0.7) {
        prop_assume!((a - b).abs() > 1e-3);
        let params = reference_params();
        let start = initial_productivities(61.554, 378.65, &params).unwrap();
        let spec = KCalibration::default();
        let k = |target| calibrate_k(target, &start, &params, 3.0, 2.0, &spec).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(k(lo) <= k(hi));
    }
}
