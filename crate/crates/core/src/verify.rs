//! Independent oracles for the closed forms: grid searches, cross-identities
//! evaluated from first-principle formulas, and lock-in simulations.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::allocation::{
    ai_level, expected_profit, innovate, ln_profit_ratio, profit_ratio, solve_allocation, AIParams,
    AiLevels, AllocationResult, PolicyWedge, Regime, Sector,
};
use crate::calibration::{theorem2_t_bound, theorem4_t_bound, theorem4_terms};
use crate::economy::{
    ln_ces_aggregate, ln_final_output, ln_labor_allocation, machine_demand, EconomyParams,
    SectorState, StaticEquilibrium,
};
use crate::error::{finite, ModelError, Result};
use crate::numeric::softplus;

pub const DEFAULT_GRID: usize = 201;
pub const MAX_LOCKIN_HORIZON: u32 = 500;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FocReport {
    pub closed_form_x: f64,
    pub closed_form_profit: f64,
    pub best_grid_x: f64,
    pub best_grid_profit: f64,
    /// First grid point whose profit beats the closed form, if any.
    pub violation: Option<(f64, f64)>,
}

impl FocReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Grid-searches machine-producer profit `(p_jit(x) - psi) x` with inverse
/// demand `p_jit = alpha p_j (x / (L_j A_j))^(alpha-1)` over `x` in
/// `[0.5, 2] * x*`, where `x*` is the closed-form demand.
pub fn check_foc_machine(
    p_j: f64,
    l_j: f64,
    a_j: f64,
    params: &EconomyParams,
    grid_size: usize,
) -> Result<FocReport> {
    if grid_size < 101 {
        return Err(ModelError::InvalidParameter {
            name: "grid_size",
            value: grid_size as f64,
            reason: "grid needs at least 101 points",
        });
    }
    let x_star = machine_demand(p_j, l_j, a_j, params)?;
    if l_j == 0.0 || a_j == 0.0 {
        return Ok(FocReport {
            closed_form_x: x_star,
            closed_form_profit: 0.0,
            best_grid_x: x_star,
            best_grid_profit: 0.0,
            violation: None,
        });
    }
    let alpha = params.alpha();
    let psi = params.psi();
    let la = l_j * a_j;
    let profit = |x: f64| (alpha * p_j * (x / la).powf(alpha - 1.0) - psi) * x;
    let best = profit(x_star);
    let (lo, hi) = (0.5f64.ln(), 2.0f64.ln());
    let mut report = FocReport {
        closed_form_x: x_star,
        closed_form_profit: best,
        best_grid_x: x_star,
        best_grid_profit: best,
        violation: None,
    };
    let slack = 1e-12 * best.abs();
    for i in 0..grid_size {
        let x = x_star * (lo + (hi - lo) * i as f64 / (grid_size - 1) as f64).exp();
        let v = profit(x);
        if v > report.best_grid_profit {
            report.best_grid_profit = v;
            report.best_grid_x = x;
        }
        if v > best + slack && report.violation.is_none() {
            report.violation = Some((x, v));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub error: f64,
    pub tolerance: f64,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Relative error of two quantities given by their logs.
fn ln_gap(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).exp_m1().abs()
    }
}

pub fn check_identities(state: &SectorState, params: &EconomyParams) -> IdentityReport {
    let eq = StaticEquilibrium::solve(state, params);
    check_equilibrium_identities(&eq, state, params)
}

/// Cross-checks an equilibrium snapshot against relations it must satisfy.
/// Takes the snapshot separately so that perturbed values can be fed in.
pub fn check_equilibrium_identities(
    eq: &StaticEquilibrium,
    state: &SectorState,
    params: &EconomyParams,
) -> IdentityReport {
    let sigma = params.sigma();
    let alpha = params.alpha();
    let mut checks = Vec::new();
    let mut push = |name, error: f64, tolerance| {
        checks.push(IdentityCheck {
            name,
            error: if error.is_nan() { f64::INFINITY } else { error },
            tolerance,
        })
    };

    // relative prices against relative outputs
    push(
        "price ratio vs output ratio",
        ln_gap(eq.ln_p_c - eq.ln_p_d, -(eq.ln_y_c - eq.ln_y_d) / sigma),
        1e-8,
    );

    // ideal price index of the CES aggregate
    let a = (1.0 - sigma) * eq.ln_p_c;
    let b = (1.0 - sigma) * eq.ln_p_d;
    let m = a.max(b);
    let norm = (m + ((a - m).exp() + (b - m).exp()).ln()) / (1.0 - sigma);
    push("price normalisation", norm.abs(), 1e-10);

    push("labour clearing", (eq.l_c + eq.l_d - 1.0).abs(), 1e-12);

    let (ln_lc, ln_ld) = ln_labor_allocation(state, params);
    push(
        "labour ratio",
        ln_gap(
            ln_lc - ln_ld,
            -params.phi() * (state.ln_a_c() - state.ln_a_d()),
        ),
        1e-8,
    );

    push(
        "CES aggregation",
        ln_gap(ln_ces_aggregate(eq.ln_y_c, eq.ln_y_d, sigma), eq.ln_y),
        1e-10,
    );

    // output net of machine spending, C = Y - psi (x_c + x_d)
    let machine_share = (params.psi().ln() + eq.ln_x_c - eq.ln_y).exp()
        + (params.psi().ln() + eq.ln_x_d - eq.ln_y).exp();
    push(
        "consumption accounting",
        ((1.0 - machine_share).ln() - (eq.ln_c - eq.ln_y)).abs(),
        1e-8,
    );
    push(
        "consumption share",
        ((eq.ln_c - eq.ln_y) - (1.0 - alpha * alpha).ln()).abs(),
        1e-12,
    );

    // both sectors pay the value of labour's marginal product (1 - alpha) p_j Y_j / L_j
    let ln_w_c = (1.0 - alpha).ln() + eq.ln_p_c + eq.ln_y_c - ln_lc;
    let ln_w_d = (1.0 - alpha).ln() + eq.ln_p_d + eq.ln_y_d - ln_ld;
    push("wage equalisation", ln_gap(ln_w_c, ln_w_d), 1e-10);
    push("wage level", ln_gap(ln_w_c, eq.ln_wage), 1e-10);

    // degree-one homogeneity of output in machine qualities, prices invariant
    let lambda = 3.7f64;
    let scaled = SectorState::from_logs(state.ln_a_c() + lambda.ln(), state.ln_a_d() + lambda.ln());
    let (hom_y, hom_p) = match scaled {
        Ok(s) => {
            let eq2 = StaticEquilibrium::solve(&s, params);
            (
                ln_gap(ln_final_output(&s, params), eq.ln_y + lambda.ln()),
                (eq2.ln_p_c - eq.ln_p_c)
                    .abs()
                    .max((eq2.ln_p_d - eq.ln_p_d).abs()),
            )
        }
        Err(_) => (f64::INFINITY, f64::INFINITY),
    };
    push("output homogeneity", hom_y, 1e-10);
    push("price homogeneity", hom_p, 1e-10);

    let signs_ok = eq.l_c >= 0.0 && eq.l_d >= 0.0 && !eq.ln_p_c.is_nan() && !eq.ln_p_d.is_nan();
    push(
        "non-negativity",
        if signs_ok { 0.0 } else { f64::INFINITY },
        0.0,
    );

    IdentityReport { checks }
}

/// Profit ratio rebuilt from sector profits: innovate with allocation
/// `(s_c, 1 - s_c)`, solve the resulting static economy and divide the two
/// expected profits.
pub fn profit_ratio_via_profits(
    s_c: f64,
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
) -> Result<f64> {
    let alloc = AllocationResult {
        s_c,
        s_d: 1.0 - s_c,
        regime: Regime::Interior,
        profit_ratio_at_solution: f64::NAN,
    };
    let next = innovate(prev, &alloc, ai, params)?;
    let eq = StaticEquilibrium::solve(&next, params);
    let pi_c = expected_profit(
        Sector::Clean,
        eq.p_c,
        eq.l_c,
        prev.a_c(),
        ai.clean(),
        params,
    )?;
    let pi_d = expected_profit(
        Sector::Dirty,
        eq.p_d,
        eq.l_d,
        prev.a_d(),
        ai.dirty(),
        params,
    )?;
    finite("profit ratio", wedge.value() * pi_c / pi_d)
}

/// Profit ratio evaluated factor by factor in plain arithmetic.
pub fn profit_ratio_direct(
    s_c: f64,
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
) -> f64 {
    let g = params.gamma();
    let phi = params.phi();
    let (i_c, i_d) = (ai.clean(), ai.dirty());
    let step =
        (1.0 + g * params.eta_c() * i_c * s_c) / (1.0 + g * params.eta_d() * i_d * (1.0 - s_c));
    wedge.value() * (params.eta_c() / params.eta_d()) * (1.0 + g * i_c) / (1.0 + g * i_d)
        * step.powf(-phi - 1.0)
        * (prev.a_c() / prev.a_d()).powf(-phi)
}

/// Regime and root located by scanning `f - 1` on a uniform grid.
pub fn allocation_by_scan(
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
    points: usize,
) -> (Regime, f64) {
    let f = |s: f64| profit_ratio_direct(s, prev, ai, wedge, params);
    if f(1.0) >= 1.0 {
        return (Regime::CleanOnly, 1.0);
    }
    if f(0.0) <= 1.0 {
        return (Regime::DirtyOnly, 0.0);
    }
    let n = points.max(2);
    let mut last = 0.0;
    for i in 1..=n {
        let s = i as f64 / n as f64;
        if f(s) <= 1.0 {
            return (Regime::Interior, 0.5 * (last + s));
        }
        last = s;
    }
    (Regime::Interior, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LockIn {
    /// Dirty-only research persists.
    Dirty,
    /// Clean-only research persists.
    Clean,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LockinReport {
    pub theorem: LockIn,
    pub k: f64,
    pub bound: f64,
    pub start_period: u32,
    pub periods_checked: u32,
    /// First period where the locked-in corner stops being an equilibrium.
    pub regime_violation: Option<u32>,
    /// First period where the clean-first selection rule would pick another
    /// regime although the locked-in corner is still an equilibrium. This
    /// happens when both corners are equilibria and is not a failure.
    pub selection_departure: Option<u32>,
    /// First period whose per-step factor bound fails.
    pub factor_violation: Option<(u32, &'static str)>,
    /// First period where the simulated corner ratio moves the wrong way.
    pub ratio_violation: Option<u32>,
}

impl LockinReport {
    pub fn passed(&self) -> bool {
        self.regime_violation.is_none()
            && self.factor_violation.is_none()
            && self.ratio_violation.is_none()
    }
}

fn ln_1p_gamma_exp(g: f64, x: f64) -> f64 {
    softplus(g.ln() + x)
}

/// AI part of the corner-ratio growth factor, `ln first(t)`.
fn ln_ai_factor(t: f64, k: f64, m: f64, g: f64) -> f64 {
    ln_1p_gamma_exp(g, m * k * (t + 1.0)) - ln_1p_gamma_exp(g, m * k * t)
        + ln_1p_gamma_exp(g, k * t)
        - ln_1p_gamma_exp(g, k * (t + 1.0))
}

/// Simulates from a state that meets the lock-in premise at the analytic
/// bound and checks that the locked-in corner stays an equilibrium.
///
/// The path follows the corner allocation. Each period the corner condition
/// (`f(0) <= 1` for dirty, `f(1) >= 1` for clean) must hold and the corner
/// ratio must move monotonically; the per-step factor bounds are checked too.
///
/// The start state's productivity gap is widened (towards the dirty sector for
/// [`LockIn::Dirty`], the clean sector otherwise) until the premise holds at
/// `T = max(1, ceil(bound))`.
pub fn check_lockin(
    theorem: LockIn,
    k: f64,
    params: &EconomyParams,
    start_state: &SectorState,
    horizon: u32,
) -> Result<LockinReport> {
    if horizon > MAX_LOCKIN_HORIZON {
        return Err(ModelError::InvalidParameter {
            name: "horizon",
            value: f64::from(horizon),
            reason: "at most 500 periods",
        });
    }
    let ai = AIParams::with_k(k)?;
    let bound = match theorem {
        LockIn::Dirty => theorem2_t_bound(k, params)?,
        LockIn::Clean => theorem4_t_bound(k, params)?,
    };
    let start = bound.ceil().max(1.0) as u32;
    let (target, shift) = match theorem {
        LockIn::Dirty => (Regime::DirtyOnly, -0.25),
        LockIn::Clean => (Regime::CleanOnly, 0.25),
    };

    let levels = ai_level(start, &ai);
    let mut state = *start_state;
    let mut tries = 0;
    while solve_allocation(&state, &levels, PolicyWedge::LAISSEZ_FAIRE, params)?.regime != target {
        tries += 1;
        if tries > 10_000 {
            return Err(ModelError::NoConvergence {
                iterations: tries,
                residual: f64::NAN,
            });
        }
        state = SectorState::from_logs(state.ln_a_c() + shift, state.ln_a_d())?;
    }

    let mut report = LockinReport {
        theorem,
        k,
        bound,
        start_period: start,
        periods_checked: 0,
        regime_violation: None,
        selection_departure: None,
        factor_violation: None,
        ratio_violation: None,
    };
    let g = params.gamma();
    let phi = params.phi();
    let m = ai.clean_multiplier();
    let (first_term, _) = theorem4_terms(k, params);
    let corner = match theorem {
        LockIn::Dirty => 0.0,
        LockIn::Clean => 1.0,
    };
    let mut prev_ratio = None;
    for t in start..=start + horizon {
        let levels = ai_level(t, &ai);
        let selected = solve_allocation(&state, &levels, PolicyWedge::LAISSEZ_FAIRE, params)
            .map_err(|e| e.at_period(t))?
            .regime;
        let ln_r = ln_profit_ratio(corner, &state, &levels, PolicyWedge::LAISSEZ_FAIRE, params);
        let holds = match theorem {
            LockIn::Dirty => ln_r <= 0.0,
            LockIn::Clean => ln_r >= 0.0,
        };
        if !holds {
            report.regime_violation.get_or_insert(t);
        } else if selected != target {
            report.selection_departure.get_or_insert(t);
        }

        if let Some(prev) = prev_ratio {
            let wrong_way = match theorem {
                LockIn::Dirty => ln_r > prev + 1e-9,
                LockIn::Clean => ln_r < prev - 1e-9,
            };
            if wrong_way && report.ratio_violation.is_none() {
                report.ratio_violation = Some(t);
            }
        }
        prev_ratio = Some(ln_r);

        let tf = f64::from(t);
        let ln_first = ln_ai_factor(tf, k, m, g);
        let violation = match theorem {
            LockIn::Dirty => {
                let x = |s: f64| ln_1p_gamma_exp(g * params.eta_d(), k * s);
                let ln_second = (phi + 1.0) * x(tf + 1.0) - x(tf);
                if ln_first > m * k + 1e-12 {
                    Some("AI factor above e^(3k)")
                } else if tf >= bound && ln_second > -m * k + 1e-12 {
                    Some("step factor above e^(-3k)")
                } else {
                    None
                }
            }
            LockIn::Clean => {
                let x = |s: f64| ln_1p_gamma_exp(g * params.eta_c(), m * k * s);
                let ln_second = x(tf) - (phi + 1.0) * x(tf + 1.0);
                if tf >= first_term && ln_first < (m - 1.0) * k - 1e-12 {
                    Some("AI factor below e^(2k)")
                } else if ln_second < -(m - 1.0) * k - 1e-12 {
                    Some("step factor below e^(-2k)")
                } else {
                    None
                }
            }
        };
        if let Some(what) = violation {
            report.factor_violation.get_or_insert((t, what));
        }

        let alloc = AllocationResult {
            s_c: corner,
            s_d: 1.0 - corner,
            regime: target,
            profit_ratio_at_solution: ln_r.exp(),
        };
        state = innovate(&state, &alloc, &levels, params).map_err(|e| e.at_period(t))?;
        report.periods_checked += 1;
    }
    Ok(report)
}

/// One section of the verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySection {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl VerifySection {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub sections: Vec<VerifySection>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(VerifySection::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let status = if s.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} cases)\n", s.name, s.cases));
            for f in s.failures.iter().take(5) {
                out.push_str(&format!("    {f}\n"));
            }
        }
        out
    }
}

/// Baseline economy used by the reference scenarios.
pub fn reference_params() -> EconomyParams {
    EconomyParams::new(1.0 / 3.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02)
        .expect("reference parameters are valid")
}

pub const REFERENCE_KS: [f64; 4] = [0.0160, 0.102, 0.180, 0.201];

/// Random economy with `sigma` in (1, 20] and `alpha` in (0.05, 0.95).
pub fn random_params(rng: &mut StdRng) -> EconomyParams {
    loop {
        let alpha = rng.gen_range(0.05..0.95);
        let sigma = 20.0 - rng.gen_range(0.0..19.0);
        let psi = rng.gen_range(0.05..2.0);
        let gamma = rng.gen_range(0.2..3.0);
        let eta_c = rng.gen_range(0.005..0.2);
        let eta_d = rng.gen_range(0.005..0.2);
        if let Ok(p) = EconomyParams::new(alpha, sigma, psi, gamma, eta_c, eta_d) {
            return p;
        }
    }
}

/// States on a `n x n` log grid with productivities in `[1e-3, 1e3]`.
pub fn state_grid(n: usize) -> Vec<SectorState> {
    let lo = 1e-3f64.ln();
    let hi = 1e3f64.ln();
    let at = |i: usize| lo + (hi - lo) * i as f64 / (n - 1).max(1) as f64;
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(SectorState::from_logs(at(i), at(j)).expect("finite grid"));
        }
    }
    out
}

pub fn identity_sweep(rng: &mut StdRng, draws: usize) -> VerifySection {
    let mut failures = Vec::new();
    let mut cases = 0;
    let reference = reference_params();
    let mut param_sets = vec![reference];
    param_sets.extend((0..draws).map(|_| random_params(rng)));
    for params in &param_sets {
        for state in state_grid(10) {
            cases += 1;
            let rep = check_identities(&state, params);
            for c in rep.failures() {
                failures.push(format!(
                    "{} at A=({:.3e}, {:.3e}), alpha={:.3}, sigma={:.3}: {:e} > {:e}",
                    c.name,
                    state.a_c(),
                    state.a_d(),
                    params.alpha(),
                    params.sigma(),
                    c.error,
                    c.tolerance
                ));
            }
        }
    }
    VerifySection {
        name: "equilibrium identities".into(),
        cases,
        failures,
    }
}

pub fn foc_sweep(rng: &mut StdRng, instances: usize) -> VerifySection {
    let mut failures = Vec::new();
    let mut cases = 1;
    match check_foc_machine(1.0, 1.0, 1.0, &reference_params(), DEFAULT_GRID) {
        Ok(r) if r.passed() && (r.closed_form_x - 1.0).abs() < 1e-12 => {}
        Ok(r) => failures.push(format!("reference instance: {r:?}")),
        Err(e) => failures.push(format!("reference instance: {e}")),
    }
    for _ in 0..instances {
        cases += 1;
        let params = random_params(rng);
        let p = rng.gen_range(0.1..5.0);
        let l = rng.gen_range(0.01..1.0);
        let a = (rng.gen_range(-5.0f64..5.0)).exp();
        match check_foc_machine(p, l, a, &params, DEFAULT_GRID) {
            Ok(r) if r.passed() => {}
            Ok(r) => failures.push(format!("p={p}, L={l}, A={a}: {:?}", r.violation)),
            Err(e) => failures.push(format!("p={p}, L={l}, A={a}: {e}")),
        }
    }
    VerifySection {
        name: "machine demand first-order condition".into(),
        cases,
        failures,
    }
}

pub fn profit_ratio_sweep(rng: &mut StdRng, instances: usize) -> VerifySection {
    let mut failures = Vec::new();
    for _ in 0..instances {
        let params = random_params(rng);
        let prev = SectorState::from_logs(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            .expect("finite");
        let ai = AIParams::with_k(rng.gen_range(0.0..0.3)).expect("valid k");
        let levels = ai_level(rng.gen_range(0..12), &ai);
        let wedge = PolicyWedge::new(rng.gen_range(0.5..2.0)).expect("positive");
        let s = rng.gen_range(0.0..1.0);
        let closed = match profit_ratio(s, &prev, &levels, wedge, &params) {
            Ok(v) => v,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        let direct = profit_ratio_direct(s, &prev, &levels, wedge, &params);
        match profit_ratio_via_profits(s, &prev, &levels, wedge, &params) {
            Ok(via) => {
                let e1 = crate::numeric::rel_diff(closed, via);
                let e2 = crate::numeric::rel_diff(closed, direct);
                if e1 > 1e-9 || e2 > 1e-12 {
                    failures.push(format!(
                        "s={s}: closed {closed}, via profits {via}, direct {direct}"
                    ));
                }
            }
            Err(e) => failures.push(e.to_string()),
        }
        let solved = solve_allocation(&prev, &levels, wedge, &params);
        let (regime, s_scan) = allocation_by_scan(&prev, &levels, wedge, &params, 100_000);
        match solved {
            Ok(r) if r.regime == regime && (r.s_c - s_scan).abs() <= 1e-5 => {}
            Ok(r) => failures.push(format!(
                "allocation {:?} {} vs scan {:?} {}",
                r.regime, r.s_c, regime, s_scan
            )),
            Err(e) => failures.push(e.to_string()),
        }
    }
    VerifySection {
        name: "profit ratio and allocation".into(),
        cases: instances,
        failures,
    }
}

pub fn lockin_sweep(horizon: u32) -> VerifySection {
    let params = reference_params();
    let start = SectorState::new(1.0, 1.0).expect("positive");
    let mut failures = Vec::new();
    let mut cases = 0;
    for &k in &REFERENCE_KS {
        for theorem in [LockIn::Dirty, LockIn::Clean] {
            cases += 1;
            match check_lockin(theorem, k, &params, &start, horizon) {
                Ok(r) if r.passed() => {}
                Ok(r) => failures.push(format!("{theorem:?} k={k}: {r:?}")),
                Err(e) => failures.push(format!("{theorem:?} k={k}: {e}")),
            }
        }
    }
    VerifySection {
        name: "lock-in".into(),
        cases,
        failures,
    }
}

/// Runs every oracle with a seeded generator.
pub fn run_all(seed: u64) -> VerifyReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let sections = vec![
        identity_sweep(&mut rng, 100),
        foc_sweep(&mut rng, 100),
        profit_ratio_sweep(&mut rng, 200),
        lockin_sweep(200),
    ];
    VerifyReport { seed, sections }
}
