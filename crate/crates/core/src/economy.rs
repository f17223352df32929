//! Static equilibrium of the two-sector economy for given machine qualities.
//!
//! Final output is a CES aggregate of a clean and a dirty input. Each input is
//! produced from labour and a continuum of sector-specific machines sold by
//! monopolists at the markup price `psi / alpha`. Everything here is a closed
//! form in the sector productivities `(A_c, A_d)`; ratios are evaluated in log
//! space so that productivity gaps far outside the `f64` power range stay exact.

use serde::{Deserialize, Serialize};

use crate::error::{finite, ModelError, Result};
use crate::numeric::log_add_exp;

/// Structural constants of the economy.
///
/// `phi = (1 - alpha)(1 - sigma)` is derived and always negative because the
/// inputs are gross substitutes (`sigma > 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EconomyParams {
    alpha: f64,
    sigma: f64,
    psi: f64,
    gamma: f64,
    eta_c: f64,
    eta_d: f64,
    phi: f64,
}

/// How the per-period innovation step `gamma * eta_j` relates to the
/// configured success probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthConvention {
    /// `eta_j` is already a per-period probability.
    #[default]
    PerPeriod,
    /// `eta_j` is per year and scaled linearly: `eta_j * period_years`.
    AnnualSimple,
    /// `eta_j` is per year and compounded: `((1 + gamma eta_j)^years - 1) / gamma`.
    AnnualCompound,
}

impl EconomyParams {
    pub fn new(
        alpha: f64,
        sigma: f64,
        psi: f64,
        gamma: f64,
        eta_c: f64,
        eta_d: f64,
    ) -> Result<Self> {
        for (name, v) in [
            ("alpha", alpha),
            ("sigma", sigma),
            ("psi", psi),
            ("gamma", gamma),
            ("eta_c", eta_c),
            ("eta_d", eta_d),
        ] {
            finite(name, v)?;
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(ModelError::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must lie in (0, 1)",
            });
        }
        if sigma <= 1.0 {
            return Err(ModelError::InvalidParameter {
                name: "sigma",
                value: sigma,
                reason: "inputs must be gross substitutes (sigma > 1)",
            });
        }
        if psi <= 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "psi",
                value: psi,
                reason: "machine cost must be positive",
            });
        }
        if gamma <= 0.0 {
            return Err(ModelError::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "innovation step must be positive",
            });
        }
        for (name, eta) in [("eta_c", eta_c), ("eta_d", eta_d)] {
            if !(eta > 0.0 && eta <= 1.0) {
                return Err(ModelError::InvalidParameter {
                    name,
                    value: eta,
                    reason: "success probability must lie in (0, 1]",
                });
            }
        }
        Ok(Self {
            alpha,
            sigma,
            psi,
            gamma,
            eta_c,
            eta_d,
            phi: (1.0 - alpha) * (1.0 - sigma),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn psi(&self) -> f64 {
        self.psi
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn eta_c(&self) -> f64 {
        self.eta_c
    }
    pub fn eta_d(&self) -> f64 {
        self.eta_d
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Price charged by every machine monopolist (constant markup `1/alpha` over `psi`).
    pub fn machine_price(&self) -> f64 {
        self.psi / self.alpha
    }

    /// `ln(alpha^2 / psi)`.
    pub(crate) fn ln_alpha2_over_psi(&self) -> f64 {
        2.0 * self.alpha.ln() - self.psi.ln()
    }

    /// `ln((alpha^2/psi)^(alpha/(1-alpha)))`, the common output scale.
    pub(crate) fn ln_output_scale(&self) -> f64 {
        self.alpha / (1.0 - self.alpha) * self.ln_alpha2_over_psi()
    }

    /// Re-expresses the success probabilities as per-period values.
    pub fn with_growth_convention(
        &self,
        convention: GrowthConvention,
        period_years: f64,
    ) -> Result<Self> {
        if !(period_years.is_finite() && period_years > 0.0) {
            return Err(ModelError::InvalidParameter {
                name: "period_years",
                value: period_years,
                reason: "must be positive",
            });
        }
        let convert = |eta: f64| match convention {
            GrowthConvention::PerPeriod => eta,
            GrowthConvention::AnnualSimple => eta * period_years,
            GrowthConvention::AnnualCompound => {
                ((1.0 + self.gamma * eta).powf(period_years) - 1.0) / self.gamma
            }
        };
        Self::new(
            self.alpha,
            self.sigma,
            self.psi,
            self.gamma,
            convert(self.eta_c),
            convert(self.eta_d),
        )
    }
}

/// Validates and builds [`EconomyParams`].
pub fn make_params(
    alpha: f64,
    sigma: f64,
    psi: f64,
    gamma: f64,
    eta_c: f64,
    eta_d: f64,
) -> Result<EconomyParams> {
    EconomyParams::new(alpha, sigma, psi, gamma, eta_c, eta_d)
}

/// Aggregate machine qualities of the two sectors, held in log form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectorState {
    ln_a_c: f64,
    ln_a_d: f64,
}

impl SectorState {
    pub fn new(a_c: f64, a_d: f64) -> Result<Self> {
        for (name, a) in [("A_c", a_c), ("A_d", a_d)] {
            finite(name, a)?;
            if a <= 0.0 {
                return Err(ModelError::InvalidParameter {
                    name,
                    value: a,
                    reason: "productivity must be positive",
                });
            }
        }
        Ok(Self {
            ln_a_c: a_c.ln(),
            ln_a_d: a_d.ln(),
        })
    }

    pub fn from_logs(ln_a_c: f64, ln_a_d: f64) -> Result<Self> {
        finite("ln A_c", ln_a_c)?;
        finite("ln A_d", ln_a_d)?;
        Ok(Self { ln_a_c, ln_a_d })
    }

    pub fn ln_a_c(&self) -> f64 {
        self.ln_a_c
    }
    pub fn ln_a_d(&self) -> f64 {
        self.ln_a_d
    }
    /// May be `+inf` once the log exceeds the `f64` range.
    pub fn a_c(&self) -> f64 {
        self.ln_a_c.exp()
    }
    pub fn a_d(&self) -> f64 {
        self.ln_a_d.exp()
    }
    /// `ln(A_c / A_d)`.
    pub fn ln_ratio(&self) -> f64 {
        self.ln_a_c - self.ln_a_d
    }

    /// Multiplies both productivities by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Result<Self> {
        Self::from_logs(self.ln_a_c + lambda.ln(), self.ln_a_d + lambda.ln())
    }
}

/// `ln L_c`, `ln L_d` via a softmax over `-phi ln A_j`.
pub fn ln_labor_allocation(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let u_c = -params.phi * state.ln_a_c;
    let u_d = -params.phi * state.ln_a_d;
    let norm = log_add_exp(u_c, u_d);
    (u_c - norm, u_d - norm)
}

/// Labour shares `L_j = A_j^-phi / (A_c^-phi + A_d^-phi)`.
pub fn labor_allocation(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let (lc, ld) = ln_labor_allocation(state, params);
    (lc.exp(), ld.exp())
}

/// `ln p_c`, `ln p_d`.
pub fn ln_input_prices(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let (lc, ld) = ln_labor_allocation(state, params);
    let inv = 1.0 / (1.0 - params.sigma);
    (lc * inv, ld * inv)
}

/// Input prices with the final good as numeraire: `p_j = L_j^(1/(1-sigma))`.
pub fn input_prices(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let (pc, pd) = ln_input_prices(state, params);
    (pc.exp(), pd.exp())
}

fn check_non_negative(name: &'static str, v: f64) -> Result<f64> {
    finite(name, v)?;
    if v < 0.0 {
        return Err(ModelError::OutOfDomain {
            name,
            value: v,
            domain: "[0, inf)",
        });
    }
    Ok(v)
}

/// Aggregate machine demand in sector `j`:
/// `x_j = (alpha^2/psi)^(1/(1-alpha)) p_j^(1/(1-alpha)) L_j A_j`.
pub fn machine_demand(p_j: f64, l_j: f64, a_j: f64, params: &EconomyParams) -> Result<f64> {
    check_non_negative("p_j", p_j)?;
    check_non_negative("L_j", l_j)?;
    check_non_negative("A_j", a_j)?;
    let e = 1.0 / (1.0 - params.alpha);
    Ok((params.alpha * params.alpha / params.psi).powf(e) * p_j.powf(e) * l_j * a_j)
}

/// Wage implied by the labour first-order condition of input producer `j`,
/// `w = (1 - alpha) p_j Y_j / L_j = (alpha^2/psi)^(alpha/(1-alpha)) (1 - alpha) p_j^(1/(1-alpha)) A_j`.
pub fn wage(p_j: f64, a_j: f64, params: &EconomyParams) -> Result<f64> {
    check_non_negative("p_j", p_j)?;
    check_non_negative("A_j", a_j)?;
    let e = 1.0 / (1.0 - params.alpha);
    Ok(
        (params.alpha * params.alpha / params.psi).powf(params.alpha * e)
            * (1.0 - params.alpha)
            * p_j.powf(e)
            * a_j,
    )
}

fn ln_wage_from(ln_p: f64, ln_a: f64, params: &EconomyParams) -> f64 {
    params.ln_output_scale() + ln_p / (1.0 - params.alpha) + (1.0 - params.alpha).ln() + ln_a
}

fn ln_machine_demand_from(ln_p: f64, ln_l: f64, ln_a: f64, params: &EconomyParams) -> f64 {
    (params.ln_alpha2_over_psi() + ln_p) / (1.0 - params.alpha) + ln_l + ln_a
}

/// `ln Y_c`, `ln Y_d`.
pub fn ln_sector_outputs(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let phi = params.phi;
    let a = params.alpha;
    let base = log_add_exp(phi * state.ln_a_c, phi * state.ln_a_d);
    let common = params.ln_output_scale() - (a + phi) / phi * base;
    (
        common + state.ln_a_c + (a + phi) * state.ln_a_d,
        common + (a + phi) * state.ln_a_c + state.ln_a_d,
    )
}

/// Clean and dirty input quantities.
pub fn sector_outputs(state: &SectorState, params: &EconomyParams) -> (f64, f64) {
    let (yc, yd) = ln_sector_outputs(state, params);
    (yc.exp(), yd.exp())
}

/// `ln Y`.
pub fn ln_final_output(state: &SectorState, params: &EconomyParams) -> f64 {
    let phi = params.phi;
    let base = log_add_exp(phi * state.ln_a_c, phi * state.ln_a_d);
    params.ln_output_scale() - base / phi + state.ln_a_c + state.ln_a_d
}

/// Final output `Y = (alpha^2/psi)^(alpha/(1-alpha)) (A_c^phi + A_d^phi)^(-1/phi) A_c A_d`.
pub fn final_output(state: &SectorState, params: &EconomyParams) -> f64 {
    ln_final_output(state, params).exp()
}

/// `ln C`.
pub fn ln_consumption(state: &SectorState, params: &EconomyParams) -> f64 {
    ln_final_output(state, params) + (1.0 - params.alpha * params.alpha).ln()
}

/// Consumption, i.e. output net of machine costs: `C = (1 - alpha^2) Y`.
pub fn consumption(state: &SectorState, params: &EconomyParams) -> f64 {
    ln_consumption(state, params).exp()
}

/// CES aggregate `(Y_c^r + Y_d^r)^(1/r)` with `r = (sigma-1)/sigma`.
pub fn ces_aggregate(y_c: f64, y_d: f64, sigma: f64) -> Result<f64> {
    check_non_negative("Y_c", y_c)?;
    check_non_negative("Y_d", y_d)?;
    finite("sigma", sigma)?;
    if sigma <= 1.0 {
        return Err(ModelError::InvalidParameter {
            name: "sigma",
            value: sigma,
            reason: "inputs must be gross substitutes (sigma > 1)",
        });
    }
    let r = (sigma - 1.0) / sigma;
    Ok((y_c.powf(r) + y_d.powf(r)).powf(1.0 / r))
}

/// [`ces_aggregate`] on log inputs.
pub fn ln_ces_aggregate(ln_y_c: f64, ln_y_d: f64, sigma: f64) -> f64 {
    let r = (sigma - 1.0) / sigma;
    log_add_exp(r * ln_y_c, r * ln_y_d) / r
}

/// Snapshot of every static-equilibrium quantity for one productivity pair.
///
/// Prices and labour shares are always representable; quantities are kept in
/// log form and exposed through accessors that may return `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StaticEquilibrium {
    pub p_c: f64,
    pub p_d: f64,
    pub ln_p_c: f64,
    pub ln_p_d: f64,
    pub l_c: f64,
    pub l_d: f64,
    pub ln_x_c: f64,
    pub ln_x_d: f64,
    pub ln_wage: f64,
    pub ln_y_c: f64,
    pub ln_y_d: f64,
    pub ln_y: f64,
    pub ln_c: f64,
}

impl StaticEquilibrium {
    pub fn solve(state: &SectorState, params: &EconomyParams) -> Self {
        let (ln_lc, ln_ld) = ln_labor_allocation(state, params);
        let (ln_pc, ln_pd) = ln_input_prices(state, params);
        let (ln_y_c, ln_y_d) = ln_sector_outputs(state, params);
        let ln_y = ln_final_output(state, params);
        Self {
            p_c: ln_pc.exp(),
            p_d: ln_pd.exp(),
            ln_p_c: ln_pc,
            ln_p_d: ln_pd,
            l_c: ln_lc.exp(),
            l_d: ln_ld.exp(),
            ln_x_c: ln_machine_demand_from(ln_pc, ln_lc, state.ln_a_c, params),
            ln_x_d: ln_machine_demand_from(ln_pd, ln_ld, state.ln_a_d, params),
            ln_wage: ln_wage_from(ln_pc, state.ln_a_c, params),
            ln_y_c,
            ln_y_d,
            ln_y,
            ln_c: ln_y + (1.0 - params.alpha * params.alpha).ln(),
        }
    }

    pub fn x_c(&self) -> f64 {
        self.ln_x_c.exp()
    }
    pub fn x_d(&self) -> f64 {
        self.ln_x_d.exp()
    }
    pub fn wage(&self) -> f64 {
        self.ln_wage.exp()
    }
    pub fn y_c(&self) -> f64 {
        self.ln_y_c.exp()
    }
    pub fn y_d(&self) -> f64 {
        self.ln_y_d.exp()
    }
    pub fn y(&self) -> f64 {
        self.ln_y.exp()
    }
    pub fn consumption(&self) -> f64 {
        self.ln_c.exp()
    }

    /// Contribution share of the clean input in the CES aggregate,
    /// `Y_c^r / (Y_c^r + Y_d^r)`, which equals its value share `p_c Y_c / Y`.
    pub fn clean_share(&self, params: &EconomyParams) -> f64 {
        let r = (params.sigma - 1.0) / params.sigma;
        (r * self.ln_y_c - log_add_exp(r * self.ln_y_c, r * self.ln_y_d)).exp()
    }

    /// Checks the equilibrium identities that every snapshot must satisfy:
    /// price normalisation (1e-10), labour clearing (1e-12), CES consistency
    /// (1e-10), `C = (1 - alpha^2) Y` (1e-12) and wage equalisation (1e-10).
    pub fn check(&self, state: &SectorState, params: &EconomyParams) -> Result<()> {
        let one_minus_sigma = 1.0 - params.sigma;
        let ln_norm = log_add_exp(one_minus_sigma * self.ln_p_c, one_minus_sigma * self.ln_p_d)
            / one_minus_sigma;
        ensure("price normalisation", ln_norm.exp_m1().abs(), 1e-10)?;
        ensure("labour clearing", (self.l_c + self.l_d - 1.0).abs(), 1e-12)?;
        let ces = ln_ces_aggregate(self.ln_y_c, self.ln_y_d, params.sigma);
        ensure("CES aggregation", (ces - self.ln_y).exp_m1().abs(), 1e-10)?;
        let ratio = self.ln_c - self.ln_y - (1.0 - params.alpha * params.alpha).ln();
        ensure("consumption share", ratio.exp_m1().abs(), 1e-12)?;
        let dirty_wage = ln_wage_from(self.ln_p_d, state.ln_a_d, params);
        ensure(
            "wage equalisation",
            (dirty_wage - self.ln_wage).exp_m1().abs(),
            1e-10,
        )?;
        if !(self.l_c >= 0.0 && self.l_d >= 0.0 && self.p_c > 0.0 && self.p_d > 0.0) {
            return Err(ModelError::IdentityViolated {
                identity: "non-negativity",
                error: f64::NAN,
                tolerance: 0.0,
            });
        }
        Ok(())
    }
}

fn ensure(identity: &'static str, error: f64, tolerance: f64) -> Result<()> {
    if error <= tolerance {
        Ok(())
    } else {
        Err(ModelError::IdentityViolated {
            identity,
            error,
            tolerance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rel_diff;

    fn baseline() -> EconomyParams {
        make_params(1.0 / 3.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        rel_diff(a, b) <= tol
    }

    #[test]
    fn phi_values() {
        assert!(close(baseline().phi(), -6.0, 1e-15));
        let p = make_params(0.5, 2.0, 1.0, 1.0, 0.5, 0.5).unwrap();
        assert!(close(p.phi(), -0.5, 1e-15));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(make_params(1.0 / 3.0, 1.0, 1.0 / 9.0, 1.0, 0.02, 0.02).is_err());
        assert!(make_params(0.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02).is_err());
        assert!(make_params(1.0, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02).is_err());
        assert!(make_params(1.0 / 3.0, 10.0, 0.0, 1.0, 0.02, 0.02).is_err());
        assert!(make_params(1.0 / 3.0, 10.0, 1.0 / 9.0, -1.0, 0.02, 0.02).is_err());
        assert!(make_params(1.0 / 3.0, 10.0, 1.0 / 9.0, 1.0, 0.0, 0.02).is_err());
        assert!(make_params(f64::NAN, 10.0, 1.0 / 9.0, 1.0, 0.02, 0.02).is_err());
    }

    #[test]
    fn machine_price_is_markup() {
        let p = baseline();
        assert!(close(p.machine_price(), (1.0 / 9.0) * 3.0, 1e-15));
    }

    #[test]
    fn symmetric_prices() {
        let p = baseline();
        let s = SectorState::new(1.0, 1.0).unwrap();
        let (pc, pd) = input_prices(&s, &p);
        assert!(close(pc, 2f64.powf(1.0 / 9.0), 1e-14));
        assert!(close(pc, pd, 1e-15));
        assert!((pc - 1.0801).abs() < 1e-4);
    }

    #[test]
    fn price_ratio_law() {
        let p = baseline();
        let s = SectorState::new(2.0, 1.0).unwrap();
        let (pc, pd) = input_prices(&s, &p);
        assert!(close(pc / pd, 2f64.powf(-2.0 / 3.0), 1e-13));
        assert!((pc / pd - 0.6300).abs() < 1e-4);
    }

    #[test]
    fn labor_examples() {
        let p = baseline();
        let (lc, ld) = labor_allocation(&SectorState::new(1.0, 1.0).unwrap(), &p);
        assert!(close(lc, 0.5, 1e-15) && close(ld, 0.5, 1e-15));
        let (lc, _) = labor_allocation(&SectorState::new(2.0, 1.0).unwrap(), &p);
        assert!(close(lc, 64.0 / 65.0, 1e-14));
        let mut prev = lc;
        for r in [4.0, 16.0, 1e3, 1e6, 1e60] {
            let (lc, _) = labor_allocation(&SectorState::new(r, 1.0).unwrap(), &p);
            assert!(lc >= prev);
            prev = lc;
        }
        assert_eq!(prev, 1.0);
    }

    #[test]
    fn machine_demand_examples() {
        let p = baseline();
        assert!(close(
            machine_demand(1.0, 1.0, 1.0, &p).unwrap(),
            1.0,
            1e-14
        ));
        let x1 = machine_demand(0.7, 0.3, 1.5, &p).unwrap();
        let x2 = machine_demand(0.7, 0.3, 3.0, &p).unwrap();
        assert!(close(x2, 2.0 * x1, 1e-14));
        let x = machine_demand(0.5, 0.5, 2.0, &p).unwrap();
        assert!(close(x, 0.5f64.powf(1.5) * 0.5 * 2.0, 1e-14));
        assert!((x - 0.35355).abs() < 1e-5);
        assert!(machine_demand(f64::INFINITY, 1.0, 1.0, &p).is_err());
        assert!(machine_demand(-1.0, 1.0, 1.0, &p).is_err());
    }

    #[test]
    fn wage_examples() {
        let p = baseline();
        let s = SectorState::new(1.0, 1.0).unwrap();
        let (pc, _) = input_prices(&s, &p);
        let w = wage(pc, 1.0, &p).unwrap();
        assert!(close(w, (2.0 / 3.0) * 2f64.powf(1.0 / 6.0), 1e-14));
        assert!((w - 0.74831).abs() < 1e-5);
        let s = SectorState::new(3.7, 0.2).unwrap();
        let (pc, pd) = input_prices(&s, &p);
        assert!(close(
            wage(pc, 3.7, &p).unwrap(),
            wage(pd, 0.2, &p).unwrap(),
            1e-12
        ));
        // away from alpha^2 = psi the wage is still the value of labour's marginal product
        let p = make_params(0.4, 3.0, 0.5, 1.0, 0.02, 0.02).unwrap();
        let s = SectorState::new(2.0, 1.1).unwrap();
        let (pc, _) = input_prices(&s, &p);
        let (lc, _) = labor_allocation(&s, &p);
        let (yc, _) = sector_outputs(&s, &p);
        assert!(close(wage(pc, 2.0, &p).unwrap(), 0.6 * pc * yc / lc, 1e-12));
    }

    #[test]
    fn sector_output_examples() {
        let p = baseline();
        let (yc, yd) = sector_outputs(&SectorState::new(1.0, 1.0).unwrap(), &p);
        assert!(close(yc, 2f64.powf(-17.0 / 18.0), 1e-14));
        assert!(close(yc, yd, 1e-15));
        assert!((yc - 0.51963).abs() < 1e-5);
        let s = SectorState::new(1.4, 0.9).unwrap();
        let (yc, yd) = sector_outputs(&s, &p);
        let expected = (0.9f64 / 1.4).powf(p.alpha() + p.phi() - 1.0);
        assert!(close(yc / yd, expected, 1e-12));
    }

    #[test]
    fn final_output_and_ces() {
        let p = baseline();
        let s = SectorState::new(1.0, 1.0).unwrap();
        assert!(close(final_output(&s, &p), 2f64.powf(1.0 / 6.0), 1e-14));
        assert!((final_output(&s, &p) - 1.12246).abs() < 1e-5);
        let (yc, yd) = sector_outputs(&s, &p);
        assert!(close(
            ces_aggregate(yc, yd, 10.0).unwrap(),
            final_output(&s, &p),
            1e-13
        ));
        let s3 = SectorState::new(3.0, 3.0).unwrap();
        assert!(close(
            final_output(&s3, &p),
            3.0 * final_output(&s, &p),
            1e-13
        ));
    }

    #[test]
    fn ces_examples() {
        assert!(close(
            ces_aggregate(1.0, 1.0, 10.0).unwrap(),
            2f64.powf(10.0 / 9.0),
            1e-14
        ));
        assert!((ces_aggregate(1.0, 1.0, 10.0).unwrap() - 2.16012).abs() < 1e-5);
        assert!(close(ces_aggregate(4.2, 0.0, 3.0).unwrap(), 4.2, 1e-14));
        assert_eq!(ces_aggregate(0.0, 0.0, 3.0).unwrap(), 0.0);
        assert_eq!(
            ces_aggregate(0.3, 7.0, 5.0).unwrap(),
            ces_aggregate(7.0, 0.3, 5.0).unwrap()
        );
        assert!(ces_aggregate(1.0, f64::NAN, 3.0).is_err());
        assert!(ces_aggregate(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn consumption_examples() {
        let p = baseline();
        let s = SectorState::new(1.0, 1.0).unwrap();
        let c = consumption(&s, &p);
        assert!(close(c, 8.0 / 9.0 * 2f64.powf(1.0 / 6.0), 1e-14));
        assert!((c - 0.99774).abs() < 1e-5);
        let s = SectorState::new(5.0, 0.3).unwrap();
        assert!(close(
            consumption(&s, &p) / final_output(&s, &p),
            8.0 / 9.0,
            1e-14
        ));
        // machine accounting: C = Y - psi (x_c + x_d)
        let (pc, pd) = input_prices(&s, &p);
        let (lc, ld) = labor_allocation(&s, &p);
        let xc = machine_demand(pc, lc, 5.0, &p).unwrap();
        let xd = machine_demand(pd, ld, 0.3, &p).unwrap();
        let direct = final_output(&s, &p) - p.psi() * (xc + xd);
        assert!(close(direct, consumption(&s, &p), 1e-12));
    }

    #[test]
    fn equilibrium_survives_extreme_ratios() {
        let p = baseline();
        let s = SectorState::from_logs(3000.0, 10.0).unwrap();
        let eq = StaticEquilibrium::solve(&s, &p);
        eq.check(&s, &p).unwrap();
        assert!(eq.y().is_infinite());
        assert_eq!(eq.l_c, 1.0);
        assert!(eq.clean_share(&p) > 1.0 - 1e-12);
    }

    #[test]
    fn growth_conventions() {
        let p = baseline();
        let simple = p
            .with_growth_convention(GrowthConvention::AnnualSimple, 2.0)
            .unwrap();
        assert!(close(simple.eta_d(), 0.04, 1e-15));
        let compound = p
            .with_growth_convention(GrowthConvention::AnnualCompound, 2.0)
            .unwrap();
        assert!(close(compound.eta_c(), 1.02f64.powi(2) - 1.0, 1e-14));
        assert_eq!(
            p.with_growth_convention(GrowthConvention::PerPeriod, 2.0)
                .unwrap(),
            p
        );
    }
}
