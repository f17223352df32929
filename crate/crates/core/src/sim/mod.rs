//! Scenario runner: per-period composition of AI growth, research
//! allocation, innovation, the static economy and the environment.

pub mod config;
pub mod output;
pub mod plot;

use serde::Serialize;

use crate::allocation::{ai_level, innovate, solve_allocation, AIParams, PolicyWedge, Regime};
use crate::calibration::{intervention_years, theorem4_t_bound};
use crate::economy::{sector_outputs, EconomyParams, SectorState, StaticEquilibrium};
use crate::environment::{
    co2_of, env_step, is_disaster, temperature_increase, EnvParams, EnvState, TEMPERATURE_CAP,
};
use crate::error::{ModelError, Result};
use crate::policy::{build_schedule, required_wedge, PolicyMode};

/// Hard cap on periods when running on past the horizon.
pub const MAX_PERIODS: u32 = 200;
pub const DEFAULT_CONSUMPTION_CAP: f64 = 1e100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scenario {
    pub label: String,
    /// Ten-year GDP gain attributed to AI, if the scenario came from a forecast.
    pub gdp_ai_10yr: Option<f64>,
    pub economy: EconomyParams,
    pub ai: AIParams,
    pub env: EnvParams,
    pub initial_state: SectorState,
    pub policy_mode: PolicyMode,
    pub horizon_periods: u32,
    pub period_years: f64,
    pub consumption_cap: f64,
    pub extend_until_disaster: bool,
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        if self.horizon_periods == 0 || self.horizon_periods > MAX_PERIODS {
            return Err(ModelError::InvalidParameter {
                name: "horizon_periods",
                value: f64::from(self.horizon_periods),
                reason: "must lie in 1..=200",
            });
        }
        if !(self.period_years.is_finite() && self.period_years > 0.0) {
            return Err(ModelError::InvalidParameter {
                name: "period_years",
                value: self.period_years,
                reason: "must be positive",
            });
        }
        if self.consumption_cap.is_nan() || self.consumption_cap <= 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "consumption_cap",
                value: self.consumption_cap,
                reason: "must be positive",
            });
        }
        Ok(())
    }
}

/// One simulated period. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodRecord {
    pub t: u32,
    pub year: f64,
    #[serde(rename = "I_c")]
    pub i_c: f64,
    #[serde(rename = "I_d")]
    pub i_d: f64,
    pub s_c: f64,
    pub s_d: f64,
    pub regime: Regime,
    #[serde(rename = "G")]
    pub wedge: f64,
    #[serde(rename = "A_c")]
    pub a_c: f64,
    #[serde(rename = "A_d")]
    pub a_d: f64,
    #[serde(rename = "lnA_c")]
    pub ln_a_c: f64,
    #[serde(rename = "lnA_d")]
    pub ln_a_d: f64,
    pub p_c: f64,
    pub p_d: f64,
    #[serde(rename = "L_c")]
    pub l_c: f64,
    #[serde(rename = "L_d")]
    pub l_d: f64,
    #[serde(rename = "Y_c")]
    pub y_c: f64,
    #[serde(rename = "Y_d")]
    pub y_d: f64,
    #[serde(rename = "Y")]
    pub y: f64,
    pub clean_share: f64,
    /// Consumption, capped at the scenario's consumption cap.
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "S")]
    pub s: f64,
    #[serde(rename = "CO2")]
    pub co2: f64,
    /// Temperature increase, capped at 6 degrees.
    #[serde(rename = "Delta")]
    pub delta: f64,
    pub disaster: bool,
}

pub const CSV_HEADER: &str =
    "t,year,I_c,I_d,s_c,s_d,regime,G,A_c,A_d,lnA_c,lnA_d,p_c,p_d,L_c,L_d,Y_c,Y_d,Y,clean_share,C,S,CO2,Delta,disaster";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrajectorySummary {
    /// A disaster occurs within the recorded periods.
    pub disaster: bool,
    pub disaster_year: Option<f64>,
    /// First disaster year when the dynamics are continued to the period cap.
    pub eventual_disaster_year: Option<f64>,
    /// Years of intervention implied by the clean lock-in bound.
    pub intervention_years: Option<u32>,
    /// Periods during which the schedule applied a wedge.
    pub intervention_periods: u32,
    /// First year with all research in the clean sector.
    pub switch_year: Option<f64>,
    pub max_wedge: Option<f64>,
}

impl TrajectorySummary {
    pub fn avoids_disaster(&self) -> bool {
        self.eventual_disaster_year.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub label: String,
    pub gdp_ai_10yr: Option<f64>,
    pub k: f64,
    pub period_years: f64,
    pub records: Vec<PeriodRecord>,
    pub summary: TrajectorySummary,
}

struct Stepper<'a> {
    sc: &'a Scenario,
    state: SectorState,
    env_state: EnvState,
    prev_y_d: f64,
    disaster_latched: bool,
}

impl Stepper<'_> {
    fn step(&mut self, t: u32, wedge_active: bool) -> Result<PeriodRecord> {
        let sc = self.sc;
        let params = &sc.economy;
        self.env_state = env_step(self.env_state, self.prev_y_d, &sc.env);

        let levels = ai_level(t, &sc.ai);
        let wedge = if wedge_active {
            required_wedge(&self.state, &levels, params)?
        } else {
            PolicyWedge::LAISSEZ_FAIRE
        };
        let alloc = solve_allocation(&self.state, &levels, wedge, params)?;
        self.state = innovate(&self.state, &alloc, &levels, params)?;

        let eq = StaticEquilibrium::solve(&self.state, params);
        eq.check(&self.state, params)?;
        self.prev_y_d = eq.y_d();

        let s = self.env_state.quality();
        self.disaster_latched |= is_disaster(s);
        let co2 = co2_of(s, &sc.env)?;
        Ok(PeriodRecord {
            t,
            year: f64::from(t) * sc.period_years,
            i_c: levels.clean(),
            i_d: levels.dirty(),
            s_c: alloc.s_c,
            s_d: alloc.s_d,
            regime: alloc.regime,
            wedge: wedge.value(),
            a_c: self.state.a_c(),
            a_d: self.state.a_d(),
            ln_a_c: self.state.ln_a_c(),
            ln_a_d: self.state.ln_a_d(),
            p_c: eq.p_c,
            p_d: eq.p_d,
            l_c: eq.l_c,
            l_d: eq.l_d,
            y_c: eq.y_c(),
            y_d: eq.y_d(),
            y: eq.y(),
            clean_share: eq.clean_share(params),
            c: eq.consumption().min(sc.consumption_cap),
            s,
            co2,
            delta: temperature_increase(co2, &sc.env)?.min(TEMPERATURE_CAP),
            disaster: self.disaster_latched,
        })
    }
}

/// Simulates one scenario.
///
/// Periods run `t = 1..=horizon`; with `extend_until_disaster` the run goes on
/// until the first disaster or [`MAX_PERIODS`]. The dynamics are always
/// continued (unrecorded) to the cap to decide whether disaster is avoided.
pub fn run_scenario(sc: &Scenario) -> Result<Trajectory> {
    sc.validate()?;
    let params = &sc.economy;
    let k = sc.ai.k();
    let mut schedule = build_schedule(k, params, sc.policy_mode, MAX_PERIODS)?;

    let (_, y_d0) = sector_outputs(&sc.initial_state, params);
    let mut stepper = Stepper {
        sc,
        state: sc.initial_state,
        env_state: sc.env.initial_state(),
        prev_y_d: y_d0,
        disaster_latched: false,
    };

    let mut records = Vec::with_capacity(sc.horizon_periods as usize);
    let mut eventual_disaster = None;
    let mut recording = true;
    for t in 1..=MAX_PERIODS {
        let active = schedule.is_active(t);
        let rec = stepper.step(t, active).map_err(|e| e.at_period(t))?;
        if active && recording {
            schedule.record(PolicyWedge::new(rec.wedge)?);
        }
        if rec.disaster && eventual_disaster.is_none() {
            eventual_disaster = Some(rec.year);
        }
        if recording {
            records.push(rec);
            let past_horizon = t >= sc.horizon_periods;
            if past_horizon && (!sc.extend_until_disaster || eventual_disaster.is_some()) {
                recording = false;
            }
        }
        if !recording && eventual_disaster.is_some() {
            break;
        }
    }

    let disaster_year = records.iter().find(|r| r.disaster).map(|r| r.year);
    let summary = TrajectorySummary {
        disaster: disaster_year.is_some(),
        disaster_year,
        eventual_disaster_year: eventual_disaster,
        intervention_years: if k > 0.0 {
            Some(intervention_years(
                theorem4_t_bound(k, params)?,
                sc.period_years,
            ))
        } else {
            None
        },
        intervention_periods: schedule.wedge_per_period.len() as u32,
        switch_year: records.iter().find(|r| r.s_c == 1.0).map(|r| r.year),
        max_wedge: schedule.max_wedge(),
    };
    Ok(Trajectory {
        label: sc.label.clone(),
        gdp_ai_10yr: sc.gdp_ai_10yr,
        k,
        period_years: sc.period_years,
        records,
        summary,
    })
}

/// One line of the suite table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteRow {
    pub label: String,
    pub gdp_ai_10yr: Option<f64>,
    pub k: f64,
    pub intervention_years: Option<u32>,
    pub avoid_disaster: bool,
    pub switch_year: Option<f64>,
    pub disaster_year: Option<f64>,
}

impl SuiteRow {
    pub fn from_trajectory(tr: &Trajectory) -> Self {
        Self {
            label: tr.label.clone(),
            gdp_ai_10yr: tr.gdp_ai_10yr,
            k: tr.k,
            intervention_years: tr.summary.intervention_years,
            avoid_disaster: tr.summary.avoids_disaster(),
            switch_year: tr.summary.switch_year,
            disaster_year: tr.summary.eventual_disaster_year,
        }
    }
}

/// Outcome of a suite: one entry per scenario, in input order.
#[derive(Debug)]
pub struct SuiteResult {
    pub outcomes: Vec<(String, Result<Trajectory>)>,
}

impl SuiteResult {
    pub fn trajectories(&self) -> impl Iterator<Item = &Trajectory> {
        self.outcomes.iter().filter_map(|(_, r)| r.as_ref().ok())
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &ModelError)> {
        self.outcomes
            .iter()
            .filter_map(|(l, r)| r.as_ref().err().map(|e| (l.as_str(), e)))
    }

    pub fn rows(&self) -> Vec<SuiteRow> {
        self.trajectories().map(SuiteRow::from_trajectory).collect()
    }

    pub fn all_ok(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Runs independent scenarios in parallel. A failing scenario does not stop
/// the others.
pub fn run_suite(scenarios: &[Scenario]) -> Result<SuiteResult> {
    if scenarios.is_empty() {
        return Err(ModelError::Config("scenario list is empty".into()));
    }
    let outcomes = std::thread::scope(|scope| {
        let handles: Vec<_> = scenarios
            .iter()
            .map(|sc| scope.spawn(move || run_scenario(sc)))
            .collect();
        handles
            .into_iter()
            .zip(scenarios)
            .map(|(h, sc)| {
                let res = h.join().unwrap_or_else(|_| {
                    Err(ModelError::Config(format!(
                        "scenario `{}` panicked",
                        sc.label
                    )))
                });
                (sc.label.clone(), res)
            })
            .collect()
    });
    Ok(SuiteResult { outcomes })
}
