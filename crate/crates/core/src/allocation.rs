//! AI trajectory, scientist allocation and the innovation law.
//!
//! Scientists pick the sector with the higher expected profit. The clean to
//! dirty profit ratio `f(s_c)` is monotone in `s_c`, so the equilibrium is a
//! corner unless `f(1) < 1 < f(0)`, in which case the unique interior root of
//! `f(s) = 1` is found by bisection.

use serde::{Deserialize, Serialize};

use crate::economy::{EconomyParams, SectorState};
use crate::error::{finite, ModelError, Result};
use crate::numeric::{bisect, ln_1p_scaled, BisectionTolerance};

/// Exogenous AI growth: `I_c = exp(m k t)`, `I_d = exp(k t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AIParams {
    k: f64,
    clean_multiplier: f64,
}

impl AIParams {
    pub const DEFAULT_CLEAN_MULTIPLIER: f64 = 3.0;

    pub fn new(k: f64, clean_multiplier: f64) -> Result<Self> {
        finite("k", k)?;
        finite("clean_multiplier", clean_multiplier)?;
        if k < 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "k",
                value: k,
                reason: "AI growth rate must be non-negative",
            });
        }
        if clean_multiplier < 1.0 {
            return Err(ModelError::InvalidParameter {
                name: "clean_multiplier",
                value: clean_multiplier,
                reason: "clean AI exponent multiple must be at least 1",
            });
        }
        Ok(Self {
            k,
            clean_multiplier,
        })
    }

    pub fn with_k(k: f64) -> Result<Self> {
        Self::new(k, Self::DEFAULT_CLEAN_MULTIPLIER)
    }

    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn clean_multiplier(&self) -> f64 {
        self.clean_multiplier
    }
}

/// AI levels of one period, stored as logs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiLevels {
    pub ln_clean: f64,
    pub ln_dirty: f64,
}

impl AiLevels {
    pub fn clean(&self) -> f64 {
        self.ln_clean.exp()
    }
    pub fn dirty(&self) -> f64 {
        self.ln_dirty.exp()
    }
}

pub fn ai_level(t: u32, ai: &AIParams) -> AiLevels {
    let t = f64::from(t);
    AiLevels {
        ln_clean: ai.clean_multiplier * ai.k * t,
        ln_dirty: ai.k * t,
    }
}

/// Multiplicative subsidy/tax wedge on the clean/dirty profit ratio.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct PolicyWedge(f64);

impl PolicyWedge {
    pub const LAISSEZ_FAIRE: PolicyWedge = PolicyWedge(1.0);

    pub fn new(g: f64) -> Result<Self> {
        finite("G", g)?;
        if g < 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "G",
                value: g,
                reason: "wedge must be non-negative",
            });
        }
        Ok(Self(g))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl Default for PolicyWedge {
    fn default() -> Self {
        Self::LAISSEZ_FAIRE
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Clean,
    Dirty,
}

/// Expected profit of a scientist in one sector:
/// `eta_j (1 + gamma I_j) (1-alpha) alpha^((1+alpha)/(1-alpha)) psi^(-alpha/(1-alpha)) p_j^(1/(1-alpha)) L_j A_{j,t-1}`.
pub fn expected_profit(
    sector: Sector,
    p_j: f64,
    l_j: f64,
    a_prev_j: f64,
    i_j: f64,
    params: &EconomyParams,
) -> Result<f64> {
    for (name, v) in [
        ("p_j", p_j),
        ("L_j", l_j),
        ("A_prev_j", a_prev_j),
        ("I_j", i_j),
    ] {
        finite(name, v)?;
        if v < 0.0 {
            return Err(ModelError::OutOfDomain {
                name,
                value: v,
                domain: "[0, inf)",
            });
        }
    }
    let a = params.alpha();
    let eta = match sector {
        Sector::Clean => params.eta_c(),
        Sector::Dirty => params.eta_d(),
    };
    let e = 1.0 / (1.0 - a);
    Ok(eta
        * (1.0 + params.gamma() * i_j)
        * (1.0 - a)
        * a.powf((1.0 + a) * e)
        * params.psi().powf(-a * e)
        * p_j.powf(e)
        * l_j
        * a_prev_j)
}

/// `ln f(s_c)`, the log profit ratio including the policy wedge.
pub fn ln_profit_ratio(
    s_c: f64,
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
) -> f64 {
    let g = params.gamma();
    let phi = params.phi();
    let s_d = 1.0 - s_c;
    let ai_term = ln_1p_scaled(g, ai.ln_clean) - ln_1p_scaled(g, ai.ln_dirty);
    let step_term = ln_1p_scaled(g * params.eta_c(), ai.ln_clean + s_c.ln())
        - ln_1p_scaled(g * params.eta_d(), ai.ln_dirty + s_d.ln());
    wedge.value().ln() + (params.eta_c() / params.eta_d()).ln() + ai_term + (-phi - 1.0) * step_term
        - phi * prev.ln_ratio()
}

/// Clean/dirty expected profit ratio `G * f(s_c)` with `s_d = 1 - s_c`.
pub fn profit_ratio(
    s_c: f64,
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
) -> Result<f64> {
    finite("s_c", s_c)?;
    if !(0.0..=1.0).contains(&s_c) {
        return Err(ModelError::OutOfDomain {
            name: "s_c",
            value: s_c,
            domain: "[0, 1]",
        });
    }
    Ok(ln_profit_ratio(s_c, prev, ai, wedge, params).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    CleanOnly,
    DirtyOnly,
    Interior,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::CleanOnly => "CleanOnly",
            Regime::DirtyOnly => "DirtyOnly",
            Regime::Interior => "Interior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AllocationResult {
    pub s_c: f64,
    pub s_d: f64,
    pub regime: Regime,
    pub profit_ratio_at_solution: f64,
}

const BISECTION: BisectionTolerance = BisectionTolerance {
    residual: 1e-10,
    width: 1e-12,
    max_iterations: 200,
};

/// Equilibrium allocation of scientists given last period's productivities.
///
/// Corners take precedence: `f(1) >= 1` selects clean-only research, then
/// `f(0) <= 1` selects dirty-only research.
pub fn solve_allocation(
    prev: &SectorState,
    ai: &AiLevels,
    wedge: PolicyWedge,
    params: &EconomyParams,
) -> Result<AllocationResult> {
    finite("ln I_c", ai.ln_clean)?;
    finite("ln I_d", ai.ln_dirty)?;
    let ln_f = |s: f64| ln_profit_ratio(s, prev, ai, wedge, params);
    let at_one = ln_f(1.0);
    if at_one >= 0.0 {
        return Ok(AllocationResult {
            s_c: 1.0,
            s_d: 0.0,
            regime: Regime::CleanOnly,
            profit_ratio_at_solution: at_one.exp(),
        });
    }
    let at_zero = ln_f(0.0);
    if at_zero <= 0.0 {
        return Ok(AllocationResult {
            s_c: 0.0,
            s_d: 1.0,
            regime: Regime::DirtyOnly,
            profit_ratio_at_solution: at_zero.exp(),
        });
    }
    // f(1) < 1 < f(0): strictly decreasing, unique root
    let s_c = bisect(|s| ln_f(s).exp_m1(), 0.0, 1.0, BISECTION)?;
    Ok(AllocationResult {
        s_c,
        s_d: 1.0 - s_c,
        regime: Regime::Interior,
        profit_ratio_at_solution: ln_f(s_c).exp(),
    })
}

/// `A_j = (1 + gamma eta_j I_j s_j) A_{j,t-1}`.
pub fn innovate(
    prev: &SectorState,
    alloc: &AllocationResult,
    ai: &AiLevels,
    params: &EconomyParams,
) -> Result<SectorState> {
    let g = params.gamma();
    let ln_c = prev.ln_a_c() + ln_1p_scaled(g * params.eta_c(), ai.ln_clean + alloc.s_c.ln());
    let ln_d = prev.ln_a_d() + ln_1p_scaled(g * params.eta_d(), ai.ln_dirty + alloc.s_d.ln());
    SectorState::from_logs(ln_c, ln_d)
}
