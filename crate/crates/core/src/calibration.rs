//! Calibration of the model primitives from observed energy and emissions
//! data, and the analytic lock-in bounds.

use serde::{Deserialize, Serialize};

use crate::allocation::{ai_level, innovate, solve_allocation, AIParams, PolicyWedge};
use crate::economy::{ln_consumption, EconomyParams, GrowthConvention, SectorState};
use crate::error::{finite, ModelError, Result};
use crate::numeric::{bisect, softplus, BisectionTolerance};

/// Observables behind the initial state and the emissions law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationInputs {
    /// Initial clean input production, quadrillion Btu per year.
    pub y_c0: f64,
    /// Initial dirty input production, quadrillion Btu per year.
    pub y_d0: f64,
    /// Relative consumption gain from AI after ten years.
    pub gdp_ai_10yr: f64,
    /// Gt CO2 per year emitted by dirty production.
    pub co2_emissions_per_year: f64,
    pub ppm_per_gt: f64,
    pub period_years: f64,
}

impl CalibrationInputs {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("y_c0", self.y_c0),
            ("y_d0", self.y_d0),
            ("ppm_per_gt", self.ppm_per_gt),
            ("period_years", self.period_years),
        ];
        for (name, v) in positive {
            finite(name, v)?;
            if v <= 0.0 {
                return Err(ModelError::InvalidParameter {
                    name,
                    value: v,
                    reason: "must be positive",
                });
            }
        }
        for (name, v) in [
            ("gdp_ai_10yr", self.gdp_ai_10yr),
            ("co2_emissions_per_year", self.co2_emissions_per_year),
        ] {
            finite(name, v)?;
            if v < 0.0 {
                return Err(ModelError::InvalidParameter {
                    name,
                    value: v,
                    reason: "must be non-negative",
                });
            }
        }
        Ok(())
    }
}

/// Machine qualities that make the static equilibrium produce `(y_c0, y_d0)`.
///
/// `A_d = r A_c` with `r = (Y_c/Y_d)^(1/(alpha+phi-1))` and
/// `A_c = (alpha^2/psi)^(-alpha/(1-alpha)) (1 + r^(-phi))^((alpha+phi)/phi) Y_c`.
pub fn initial_productivities(y_c0: f64, y_d0: f64, params: &EconomyParams) -> Result<SectorState> {
    for (name, v) in [("Y_c0", y_c0), ("Y_d0", y_d0)] {
        finite(name, v)?;
        if v <= 0.0 {
            return Err(ModelError::OutOfDomain {
                name,
                value: v,
                domain: "(0, inf)",
            });
        }
    }
    let a = params.alpha();
    let phi = params.phi();
    let ln_r = (y_c0.ln() - y_d0.ln()) / (a + phi - 1.0);
    let ln_a_c = -params.ln_output_scale() + (a + phi) / phi * softplus(-phi * ln_r) + y_c0.ln();
    SectorState::from_logs(ln_a_c, ln_a_c + ln_r)
}

/// How the AI growth rate is backed out of a ten-year GDP forecast.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KCalibration {
    pub horizon_years: f64,
    /// Interpretation of the innovation step over the forecast window.
    pub convention: GrowthConvention,
    pub k_upper: f64,
    pub tolerance: f64,
}

impl Default for KCalibration {
    fn default() -> Self {
        Self {
            horizon_years: 10.0,
            convention: GrowthConvention::AnnualSimple,
            k_upper: 10.0,
            tolerance: 1e-6,
        }
    }
}

/// `ln C` after `periods` periods of laissez-faire dynamics from `start`.
fn ln_consumption_after(
    k: f64,
    periods: u32,
    start: &SectorState,
    params: &EconomyParams,
    ai_multiplier: f64,
) -> Result<f64> {
    let ai = AIParams::new(k, ai_multiplier)?;
    let mut state = *start;
    for t in 1..=periods {
        let levels = ai_level(t, &ai);
        let alloc = solve_allocation(&state, &levels, PolicyWedge::LAISSEZ_FAIRE, params)
            .map_err(|e| e.at_period(t))?;
        state = innovate(&state, &alloc, &levels, params).map_err(|e| e.at_period(t))?;
    }
    Ok(ln_consumption(&state, params))
}

/// Relative consumption gain over the `k = 0` path after the forecast window.
pub fn ai_consumption_gain(
    k: f64,
    start: &SectorState,
    params: &EconomyParams,
    ai_multiplier: f64,
    period_years: f64,
    spec: &KCalibration,
) -> Result<f64> {
    let stepped = params.with_growth_convention(spec.convention, period_years)?;
    let periods = (spec.horizon_years / period_years).round().max(1.0) as u32;
    let with_ai = ln_consumption_after(k, periods, start, &stepped, ai_multiplier)?;
    let baseline = ln_consumption_after(0.0, periods, start, &stepped, ai_multiplier)?;
    Ok((with_ai - baseline).exp_m1())
}

/// Cells in the upward scan that brackets the calibrated `k`.
const K_SCAN_CELLS: u32 = 4000;

/// The smallest AI growth rate `k` whose free-equilibrium consumption gain
/// after the forecast window reaches `target`.
///
/// The gain jumps whenever a larger `k` moves the switch to clean research
/// earlier, and can dip right after such a jump, so a plain bisection over
/// `[0, k_upper]` may land on any crossing. Scanning upward for the first
/// bracketing cell and bisecting inside it keeps the result non-decreasing
/// in `target`.
pub fn calibrate_k(
    target: f64,
    start: &SectorState,
    params: &EconomyParams,
    ai_multiplier: f64,
    period_years: f64,
    spec: &KCalibration,
) -> Result<f64> {
    finite("target", target)?;
    if target < 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "target",
            value: target,
            reason: "GDP gain must be non-negative",
        });
    }
    if target == 0.0 {
        return Ok(0.0);
    }
    let gain = |k: f64| ai_consumption_gain(k, start, params, ai_multiplier, period_years, spec);
    let step = spec.k_upper / f64::from(K_SCAN_CELLS);
    let mut lo = 0.0;
    let hi = loop {
        let hi = lo + step;
        if gain(hi)? >= target {
            break hi;
        }
        if hi >= spec.k_upper {
            return Err(ModelError::NotBracketed {
                target,
                lower: 0.0,
                upper: spec.k_upper,
            });
        }
        lo = hi;
    };
    let mut failure = None;
    let k = bisect(
        |k| match gain(k) {
            Ok(v) => v - target,
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        },
        lo,
        hi,
        BisectionTolerance {
            residual: 0.0,
            width: spec.tolerance,
            max_iterations: 200,
        },
    );
    match failure {
        Some(e) => Err(e),
        None => k,
    }
}

fn check_k(k: f64, params: &EconomyParams) -> Result<()> {
    finite("k", k)?;
    if k <= 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "k",
            value: k,
            reason: "lock-in bound needs a positive AI growth rate",
        });
    }
    if params.phi() >= 0.0 {
        return Err(ModelError::InvalidParameter {
            name: "phi",
            value: params.phi(),
            reason: "lock-in bound needs gross substitutes",
        });
    }
    Ok(())
}

/// Period after which dirty-only research persists:
/// `(1/k) ln((e^(-4k/phi) - 1) / (gamma eta_d)) - 1`.
pub fn theorem2_t_bound(k: f64, params: &EconomyParams) -> Result<f64> {
    check_k(k, params)?;
    let phi = params.phi();
    let arg = (-4.0 * k / phi).exp_m1() / (params.gamma() * params.eta_d());
    Ok(arg.ln() / k - 1.0)
}

/// Period after which clean-only research persists, the max of
/// `(1/2k) ln((gamma(e^2k + e^k + 1) + 2) / (gamma e^2k))` and
/// `(1/3k) ln((e^(-k/phi) - 1) / (gamma eta_c)) - 1`.
pub fn theorem4_t_bound(k: f64, params: &EconomyParams) -> Result<f64> {
    check_k(k, params)?;
    let (first, second) = theorem4_terms(k, params);
    Ok(first.max(second))
}

/// Both terms of the clean lock-in bound, unvalidated.
pub(crate) fn theorem4_terms(k: f64, params: &EconomyParams) -> (f64, f64) {
    let g = params.gamma();
    let phi = params.phi();
    let e2k = (2.0 * k).exp();
    let first = ((g * (e2k + k.exp() + 1.0) + 2.0) / (g * e2k)).ln() / (2.0 * k);
    let second = ((-k / phi).exp_m1() / (g * params.eta_c())).ln() / (3.0 * k) - 1.0;
    (first, second)
}

/// Years of intervention for a bound in periods: `ceil(period_years * T)`, zero if `T <= 0`.
pub fn intervention_years(t_bound: f64, period_years: f64) -> u32 {
    let years = (period_years * t_bound).ceil();
    if years > 0.0 {
        years as u32
    } else {
        0
    }
}

/// Emission intensity and regeneration rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmissionCalibration {
    /// ppm of quality lost per unit of dirty input per period.
    pub xi: f64,
    /// Regeneration rate per period.
    pub delta: f64,
}

/// `xi` is ppm emitted per unit of dirty input; `delta` makes regeneration at
/// `S_0` absorb half of the initial gross emissions.
///
/// With `scale_with_period`, annual emissions are multiplied by the period
/// length before dividing by (annual) dirty output.
pub fn calibrate_emissions(
    inputs: &CalibrationInputs,
    y_d0: f64,
    s_0: f64,
    scale_with_period: bool,
) -> Result<EmissionCalibration> {
    inputs.validate()?;
    for (name, v) in [("Y_d0", y_d0), ("S_0", s_0)] {
        finite(name, v)?;
        if v <= 0.0 {
            return Err(ModelError::InvalidParameter {
                name,
                value: v,
                reason: "must be positive",
            });
        }
    }
    let per = if scale_with_period {
        inputs.period_years
    } else {
        1.0
    };
    let xi = inputs.co2_emissions_per_year * per * inputs.ppm_per_gt / y_d0;
    let delta = xi * y_d0 / (2.0 * s_0);
    Ok(EmissionCalibration { xi, delta })
}

/// One derived primitive with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportEntry {
    pub name: String,
    pub value: f64,
    pub formula: String,
}

/// Structured record of every calibrated quantity.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct CalibrationReport {
    pub entries: Vec<ReportEntry>,
}

impl CalibrationReport {
    pub fn push(&mut self, name: impl Into<String>, value: f64, formula: impl Into<String>) {
        self.entries.push(ReportEntry {
            name: name.into(),
            value,
            formula: formula.into(),
        });
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.value)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report contains only strings and floats")
    }
}
