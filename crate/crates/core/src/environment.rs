//! Environmental quality, CO2 concentration and temperature.
//!
//! Quality `S` lives in `[0, S_bar]` where `S_bar = co2_disaster - co2_pre`,
//! so `S = co2_disaster - CO2`. Quality zero is a disaster.

use serde::Serialize;

use crate::error::{finite, ModelError, Result};

pub const DEFAULT_CO2_PRE: f64 = 280.0;
pub const DEFAULT_CO2_DISASTER: f64 = 1120.0;
/// Warming at two doublings of pre-industrial CO2.
pub const TEMPERATURE_CAP: f64 = 6.0;
/// Quality at or below this counts as zero.
pub const DISASTER_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvParams {
    co2_pre: f64,
    co2_disaster: f64,
    xi: f64,
    delta: f64,
    s_0: f64,
}

impl EnvParams {
    pub fn new(co2_pre: f64, co2_disaster: f64, xi: f64, delta: f64, s_0: f64) -> Result<Self> {
        for (name, v) in [
            ("co2_pre", co2_pre),
            ("co2_disaster", co2_disaster),
            ("xi", xi),
            ("delta", delta),
            ("S_0", s_0),
        ] {
            finite(name, v)?;
        }
        if co2_pre <= 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "co2_pre",
                value: co2_pre,
                reason: "pre-industrial concentration must be positive",
            });
        }
        if co2_disaster <= co2_pre {
            return Err(ModelError::InvalidParameter {
                name: "co2_disaster",
                value: co2_disaster,
                reason: "disaster concentration must exceed the pre-industrial one",
            });
        }
        if xi < 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "xi",
                value: xi,
                reason: "emission intensity must be non-negative",
            });
        }
        if delta < 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "delta",
                value: delta,
                reason: "regeneration rate must be non-negative",
            });
        }
        let s_bar = co2_disaster - co2_pre;
        if !(0.0..=s_bar).contains(&s_0) {
            return Err(ModelError::InvalidParameter {
                name: "S_0",
                value: s_0,
                reason: "initial quality must lie in [0, S_bar]",
            });
        }
        Ok(Self {
            co2_pre,
            co2_disaster,
            xi,
            delta,
            s_0,
        })
    }

    /// Default thresholds with today's concentration `co2_now`.
    pub fn with_current_co2(xi: f64, delta: f64, co2_now: f64) -> Result<Self> {
        Self::new(
            DEFAULT_CO2_PRE,
            DEFAULT_CO2_DISASTER,
            xi,
            delta,
            DEFAULT_CO2_DISASTER - co2_now,
        )
    }

    pub fn s_bar(&self) -> f64 {
        self.co2_disaster - self.co2_pre
    }
    pub fn xi(&self) -> f64 {
        self.xi
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn s_0(&self) -> f64 {
        self.s_0
    }
    pub fn co2_pre(&self) -> f64 {
        self.co2_pre
    }
    pub fn co2_disaster(&self) -> f64 {
        self.co2_disaster
    }

    pub fn initial_state(&self) -> EnvState {
        EnvState { s: self.s_0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnvState {
    s: f64,
}

impl EnvState {
    /// Quality clamped into `[0, S_bar]`.
    pub fn new(s: f64, env: &EnvParams) -> Result<Self> {
        finite("S", s)?;
        Ok(Self {
            s: s.clamp(0.0, env.s_bar()),
        })
    }

    pub fn quality(&self) -> f64 {
        self.s
    }
}

/// `S' = clamp(-xi Y_d + (1 + delta) S, 0, S_bar)`.
pub fn env_step(state: EnvState, y_d: f64, env: &EnvParams) -> EnvState {
    let raw = -env.xi * y_d + (1.0 + env.delta) * state.s;
    // NaN only from inf * 0 or inf - inf; both mean emissions swamp regeneration
    let s = if raw.is_nan() {
        0.0
    } else {
        raw.clamp(0.0, env.s_bar())
    };
    EnvState { s }
}

pub fn co2_of(s: f64, env: &EnvParams) -> Result<f64> {
    finite("S", s)?;
    if !(0.0..=env.s_bar()).contains(&s) {
        return Err(ModelError::OutOfDomain {
            name: "S",
            value: s,
            domain: "[0, S_bar]",
        });
    }
    Ok(env.co2_disaster - s)
}

/// `3 log2(CO2 / co2_pre)`, capped at [`TEMPERATURE_CAP`].
pub fn temperature_increase(co2: f64, env: &EnvParams) -> Result<f64> {
    finite("CO2", co2)?;
    if co2 < env.co2_pre {
        return Err(ModelError::OutOfDomain {
            name: "CO2",
            value: co2,
            domain: "[co2_pre, inf)",
        });
    }
    Ok((3.0 * (co2 / env.co2_pre).log2()).min(TEMPERATURE_CAP))
}

pub fn is_disaster(s: f64) -> bool {
    s <= DISASTER_EPS
}
