//! TOML scenario configuration.
//!
//! A config holds shared economy, data and run sections plus one
//! `[[scenario]]` block per AI forecast. A scenario either fixes `k` or gives
//! `gdp_ai_10yr`, from which `k` is calibrated. See `configs/four_scenarios.toml`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Scenario, DEFAULT_CONSUMPTION_CAP};
use crate::allocation::AIParams;
use crate::calibration::{
    calibrate_emissions, calibrate_k, initial_productivities, intervention_years, theorem2_t_bound,
    theorem4_t_bound, CalibrationInputs, CalibrationReport, KCalibration,
};
use crate::economy::{sector_outputs, EconomyParams};
use crate::environment::EnvParams;
use crate::error::{ModelError, Result};
use crate::policy::PolicyMode;

pub const DEFAULT_CONFIG: &str = include_str!("../../configs/four_scenarios.toml");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EconomySection {
    pub alpha: f64,
    pub sigma: f64,
    pub psi: f64,
    pub gamma: f64,
    pub eta_c: f64,
    pub eta_d: f64,
}

impl Default for EconomySection {
    fn default() -> Self {
        Self {
            alpha: 1.0 / 3.0,
            sigma: 10.0,
            psi: 1.0 / 9.0,
            gamma: 1.0,
            eta_c: 0.02,
            eta_d: 0.02,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AiSection {
    pub clean_multiplier: f64,
}

impl Default for AiSection {
    fn default() -> Self {
        Self {
            clean_multiplier: AIParams::DEFAULT_CLEAN_MULTIPLIER,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataSection {
    pub y_c0: f64,
    pub y_d0: f64,
    pub co2_emissions_per_year: f64,
    pub ppm_per_gt: f64,
    pub co2_now: f64,
    #[serde(default = "default_co2_pre")]
    pub co2_pre: f64,
    #[serde(default = "default_co2_disaster")]
    pub co2_disaster: f64,
    /// Multiply annual emissions by the period length when computing `xi`.
    #[serde(default)]
    pub emissions_scale_with_period: bool,
}

fn default_co2_pre() -> f64 {
    crate::environment::DEFAULT_CO2_PRE
}
fn default_co2_disaster() -> f64 {
    crate::environment::DEFAULT_CO2_DISASTER
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunSection {
    pub horizon_periods: u32,
    pub period_years: f64,
    pub consumption_cap: f64,
    pub extend_until_disaster: bool,
    pub policy: PolicyMode,
}

impl Default for RunSection {
    fn default() -> Self {
        Self {
            horizon_periods: 50,
            period_years: 2.0,
            consumption_cap: DEFAULT_CONSUMPTION_CAP,
            extend_until_disaster: false,
            policy: PolicyMode::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub label: String,
    #[serde(default)]
    pub gdp_ai_10yr: Option<f64>,
    #[serde(default)]
    pub k: Option<f64>,
    #[serde(default)]
    pub policy: Option<PolicyMode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub economy: EconomySection,
    #[serde(default)]
    pub ai: AiSection,
    pub data: DataSection,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub k_calibration: KCalibration,
    #[serde(rename = "scenario", default)]
    pub scenarios: Vec<ScenarioSpec>,
}

/// Command-line overrides applied on top of a config.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub scenario: Option<String>,
    pub policy: Option<PolicyMode>,
    pub horizon_periods: Option<u32>,
    pub period_years: Option<f64>,
    pub extend_until_disaster: bool,
}

/// Scenarios ready to run plus the calibration record behind them.
#[derive(Debug, Clone)]
pub struct BuiltSuite {
    pub scenarios: Vec<Scenario>,
    pub report: CalibrationReport,
}

impl SuiteConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| ModelError::Config(e.to_string()))
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| ModelError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml(&text).map_err(|e| match e {
            ModelError::Config(msg) => ModelError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn default_suite() -> Self {
        Self::from_toml(DEFAULT_CONFIG).expect("bundled config parses")
    }

    pub fn apply(&mut self, o: &Overrides) -> Result<()> {
        if let Some(label) = &o.scenario {
            self.scenarios.retain(|s| &s.label == label);
            if self.scenarios.is_empty() {
                return Err(ModelError::Config(format!(
                    "no scenario labelled `{label}`"
                )));
            }
        }
        if let Some(p) = o.policy {
            self.run.policy = p;
            for s in &mut self.scenarios {
                s.policy = None;
            }
        }
        if let Some(h) = o.horizon_periods {
            self.run.horizon_periods = h;
        }
        if let Some(y) = o.period_years {
            self.run.period_years = y;
        }
        self.run.extend_until_disaster |= o.extend_until_disaster;
        Ok(())
    }

    pub fn economy_params(&self) -> Result<EconomyParams> {
        let e = &self.economy;
        EconomyParams::new(e.alpha, e.sigma, e.psi, e.gamma, e.eta_c, e.eta_d)
    }

    pub fn calibration_inputs(&self, gdp_ai_10yr: f64) -> CalibrationInputs {
        CalibrationInputs {
            y_c0: self.data.y_c0,
            y_d0: self.data.y_d0,
            gdp_ai_10yr,
            co2_emissions_per_year: self.data.co2_emissions_per_year,
            ppm_per_gt: self.data.ppm_per_gt,
            period_years: self.run.period_years,
        }
    }

    /// Calibrates the shared primitives and turns every scenario block into a
    /// runnable [`Scenario`].
    pub fn build(&self) -> Result<BuiltSuite> {
        if self.scenarios.is_empty() {
            return Err(ModelError::Config("config lists no scenarios".into()));
        }
        let economy = self.economy_params()?;
        let d = &self.data;
        let years = self.run.period_years;
        let inputs = self.calibration_inputs(0.0);
        inputs.validate()?;

        let initial_state = initial_productivities(d.y_c0, d.y_d0, &economy)?;
        let (_, y_d0_model) = sector_outputs(&initial_state, &economy);
        let s_0 = d.co2_disaster - d.co2_now;
        let emis = calibrate_emissions(&inputs, y_d0_model, s_0, d.emissions_scale_with_period)?;
        let env = EnvParams::new(d.co2_pre, d.co2_disaster, emis.xi, emis.delta, s_0)?;

        let mut report = CalibrationReport::default();
        report.push("phi", economy.phi(), "(1 - alpha)(1 - sigma)");
        report.push(
            "ln_r",
            -initial_state.ln_ratio(),
            "ln(Y_c0 / Y_d0) / (alpha + phi - 1)",
        );
        report.push(
            "A_c0",
            initial_state.a_c(),
            "(alpha^2/psi)^(-alpha/(1-alpha)) (1 + r^(-phi))^((alpha+phi)/phi) Y_c0",
        );
        report.push("A_d0", initial_state.a_d(), "r A_c0");
        report.push("S_bar", env.s_bar(), "co2_disaster - co2_pre");
        report.push("S_0", s_0, "co2_disaster - co2_now");
        let xi_rule = if d.emissions_scale_with_period {
            "co2_emissions_per_year * period_years * ppm_per_gt / Y_d0"
        } else {
            "co2_emissions_per_year * ppm_per_gt / Y_d0"
        };
        report.push("xi", emis.xi, xi_rule);
        report.push("delta", emis.delta, "xi Y_d0 / (2 S_0)");

        let mut scenarios = Vec::with_capacity(self.scenarios.len());
        for spec in &self.scenarios {
            let fitted = match spec.gdp_ai_10yr {
                Some(target) => Some(calibrate_k(
                    target,
                    &initial_state,
                    &economy,
                    self.ai.clean_multiplier,
                    years,
                    &self.k_calibration,
                )?),
                None => None,
            };
            let k = match (spec.k, fitted) {
                (Some(k), _) => k,
                (None, Some(k)) => k,
                (None, None) => {
                    return Err(ModelError::Config(format!(
                        "scenario `{}` needs `k` or `gdp_ai_10yr`",
                        spec.label
                    )))
                }
            };
            if let Some(kf) = fitted {
                report.push(
                    format!("{}.k_calibrated", spec.label),
                    kf,
                    "k with C(10y; k) / C(10y; 0) - 1 = gdp_ai_10yr under laissez-faire",
                );
            }
            report.push(
                format!("{}.k", spec.label),
                k,
                "AI growth rate used in the run",
            );
            if k > 0.0 {
                let t4 = theorem4_t_bound(k, &economy)?;
                report.push(
                    format!("{}.T_clean", spec.label),
                    t4,
                    "max((1/2k) ln((gamma(e^2k+e^k+1)+2)/(gamma e^2k)), (1/3k) ln((e^(-k/phi)-1)/(gamma eta_c)) - 1)",
                );
                report.push(
                    format!("{}.T_dirty", spec.label),
                    theorem2_t_bound(k, &economy)?,
                    "(1/k) ln((e^(-4k/phi)-1)/(gamma eta_d)) - 1",
                );
                report.push(
                    format!("{}.intervention_years", spec.label),
                    f64::from(intervention_years(t4, years)),
                    "ceil(period_years T_clean)",
                );
            }
            scenarios.push(Scenario {
                label: spec.label.clone(),
                gdp_ai_10yr: spec.gdp_ai_10yr,
                economy,
                ai: AIParams::new(k, self.ai.clean_multiplier)?,
                env,
                initial_state,
                policy_mode: spec.policy.unwrap_or(self.run.policy),
                horizon_periods: self.run.horizon_periods,
                period_years: years,
                consumption_cap: self.run.consumption_cap,
                extend_until_disaster: self.run.extend_until_disaster,
            });
        }
        Ok(BuiltSuite { scenarios, report })
    }
}
