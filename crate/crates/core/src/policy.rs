//! Research subsidies and taxes that steer scientists into the clean sector.

use serde::{Deserialize, Serialize};

use crate::allocation::{ln_profit_ratio, AiLevels, PolicyWedge};
use crate::calibration::theorem4_t_bound;
use crate::economy::{EconomyParams, SectorState};
use crate::error::{finite, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PolicyMode {
    #[default]
    None,
    /// Intervene until the clean lock-in bound has passed, then laissez-faire.
    Temporary,
    /// Intervene every period.
    Permanent,
}

impl std::str::FromStr for PolicyMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(PolicyMode::None),
            "temporary" => Ok(PolicyMode::Temporary),
            "permanent" => Ok(PolicyMode::Permanent),
            other => Err(format!(
                "unknown policy `{other}` (expected none, temporary or permanent)"
            )),
        }
    }
}

/// Which periods carry a wedge. The wedge values themselves depend on the
/// state and are filled in by the simulation as it goes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterventionSchedule {
    pub mode: PolicyMode,
    pub duration_periods: u32,
    pub wedge_per_period: Vec<PolicyWedge>,
}

impl InterventionSchedule {
    pub fn none() -> Self {
        Self {
            mode: PolicyMode::None,
            duration_periods: 0,
            wedge_per_period: Vec::new(),
        }
    }

    /// Periods are numbered from 1.
    pub fn is_active(&self, t: u32) -> bool {
        t >= 1 && t <= self.duration_periods
    }

    pub fn record(&mut self, wedge: PolicyWedge) {
        self.wedge_per_period.push(wedge);
    }

    pub fn max_wedge(&self) -> Option<f64> {
        self.wedge_per_period
            .iter()
            .map(PolicyWedge::value)
            .fold(None, |m, g| Some(m.map_or(g, |m: f64| m.max(g))))
    }
}

/// Smallest wedge `G >= 1` that makes clean-only research optimal:
/// `max(1, 1/f(1))` with `f` the laissez-faire profit ratio.
pub fn required_wedge(
    prev: &SectorState,
    ai: &AiLevels,
    params: &EconomyParams,
) -> Result<PolicyWedge> {
    let ln_f1 = ln_profit_ratio(1.0, prev, ai, PolicyWedge::LAISSEZ_FAIRE, params);
    finite("f(1)", ln_f1)?;
    if ln_f1 >= 0.0 {
        return Ok(PolicyWedge::LAISSEZ_FAIRE);
    }
    // 1/f(1), nudged up until the allocation rule itself sees G f(1) >= 1
    let mut wedge = PolicyWedge::new((-ln_f1).exp())?;
    while ln_profit_ratio(1.0, prev, ai, wedge, params) < 0.0 {
        wedge = PolicyWedge::new(wedge.value() * (1.0 + 4.0 * f64::EPSILON))?;
    }
    Ok(wedge)
}

pub fn build_schedule(
    k: f64,
    params: &EconomyParams,
    mode: PolicyMode,
    horizon: u32,
) -> Result<InterventionSchedule> {
    let duration_periods = match mode {
        PolicyMode::None => 0,
        PolicyMode::Temporary => theorem4_t_bound(k, params)?.ceil().max(0.0) as u32,
        PolicyMode::Permanent => horizon,
    };
    Ok(InterventionSchedule {
        mode,
        duration_periods,
        wedge_per_period: Vec::with_capacity(duration_periods as usize),
    })
}
