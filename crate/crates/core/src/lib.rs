//! Deterministic simulator of a two-sector clean/dirty economy with directed
//! technical change, AI-accelerated innovation and a stock of environmental
//! quality.
//!
//! Each period scientists choose a sector from expected research profits,
//! successful research raises that sector's machine quality, the static
//! equilibrium fixes prices, labour and output, and dirty output degrades the
//! environment. Policy enters as a multiplicative wedge on the clean/dirty
//! profit ratio.

pub mod allocation;
pub mod calibration;
pub mod economy;
pub mod environment;
pub mod error;
pub mod numeric;
pub mod policy;
pub mod sim;
pub mod verify;

pub use allocation::{
    ai_level, innovate, solve_allocation, AIParams, AllocationResult, PolicyWedge, Regime,
};
pub use economy::{EconomyParams, SectorState, StaticEquilibrium};
pub use environment::{EnvParams, EnvState};
pub use error::{ModelError, Result};
pub use policy::{InterventionSchedule, PolicyMode};
pub use sim::{run_scenario, run_suite, PeriodRecord, Scenario, Trajectory};
