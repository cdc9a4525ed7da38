//! Planar and three-body energies, and the finite-difference oracles that adjudicate them.

use std::f64::consts::SQRT_2;

use serde::{Deserialize, Serialize};

use crate::angular::exact_b;
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::numerics::{richardson, tridiag_eigen, Tridiagonal};
use crate::report::{DiscrepancyEntry, DiscrepancyReport};

/// Relative tolerance for radial-oracle energy matches.
pub const ENERGY_TOLERANCE: f64 = 2e-3;
/// Relative tolerance for the center-of-mass oscillator check.
pub const CMS_TOLERANCE: f64 = 1e-3;
/// Largest eigenvalue drift tolerated when the box is enlarged by 25%.
pub const BOX_DRIFT_TOLERANCE: f64 = 1e-3;

/// Two candidate closed forms for the same level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyPair {
    /// `sqrt2 omega (2n + (sqrt2/2) b_m + 1)`, as commonly quoted.
    pub printed_form: f64,
    /// `sqrt2 omega (2n + b_m + 1)`, from separating the planar oscillator in polar coordinates.
    pub oracle_form: f64,
}

pub fn planar_energy(params: &ModelParams, n: u32, m: u32) -> EnergyPair {
    let w = params.omega();
    let b = exact_b(params, m);
    let n = f64::from(n);
    EnergyPair {
        printed_form: SQRT_2 * w * (2.0 * n + 0.5 * SQRT_2 * b + 1.0),
        oracle_form: SQRT_2 * w * (2.0 * n + b + 1.0),
    }
}

/// Planar energy plus the center-of-mass ladder `sqrt2 omega (t + 1/2)`.
pub fn threebody_energy(params: &ModelParams, n: u32, m: u32, t: u32) -> EnergyPair {
    let planar = planar_energy(params, n, m);
    let cms = SQRT_2 * params.omega() * (f64::from(t) + 0.5);
    EnergyPair {
        printed_form: planar.printed_form + cms,
        oracle_form: planar.oracle_form + cms,
    }
}

/// Smallest box for which the top requested radial level is well decayed:
/// `8 (2/omega²)^(1/4) sqrt(b + count)`.
pub fn radial_min_box(omega: f64, b: f64, count: usize) -> f64 {
    8.0 * (2.0 / (omega * omega)).powf(0.25) * (b + count as f64).sqrt()
}

/// Lowest `count` eigenvalues of `-u'' + W(x) u` on `(lo, lo + length)` with Dirichlet ends,
/// 3-point stencil on `intervals` subintervals.
fn dirichlet_levels<W: Fn(f64) -> f64>(
    well: W,
    lo: f64,
    length: f64,
    intervals: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let h = length / intervals as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..intervals)
        .map(|i| 2.0 * inv_h2 + well(lo + i as f64 * h))
        .collect();
    let t = Tridiagonal::new(diag, vec![-inv_h2; intervals - 2])?;
    tridiag_eigen(&t, count)
}

fn extrapolated_levels<W: Fn(f64) -> f64 + Copy>(
    well: W,
    lo: f64,
    length: f64,
    intervals: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let coarse = dirichlet_levels(well, lo, length, intervals, count)?;
    let fine = dirichlet_levels(well, lo, length, 2 * intervals, count)?;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(&c, &f)| richardson(c, f, 2, 2.0))
        .collect())
}

fn check_grid(grid_size: usize, count: usize) -> Result<()> {
    if grid_size < 64 || count == 0 || count >= grid_size {
        return Err(Error::InvalidParameter(format!(
            "grid_size = {grid_size}, count = {count}"
        )));
    }
    Ok(())
}

/// Radial levels of `-u'' + [(omega²/2) r² + (b² - 1/4)/r²] u = E u` on `(0, r_max)`.
///
/// These are the planar energies for angular eigenvalue `b²`. The result is Richardson-extrapolated
/// from `grid_size` and `2 grid_size` subintervals; the same computation on a box 25% larger must
/// agree to [`BOX_DRIFT_TOLERANCE`].
pub fn radial_oracle(
    omega: f64,
    b: f64,
    count: usize,
    grid_size: usize,
    r_max: f64,
) -> Result<Vec<f64>> {
    if !(omega > 0.0) || !(b > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "omega = {omega} and b = {b} must be > 0"
        )));
    }
    check_grid(grid_size, count)?;
    let needed = radial_min_box(omega, b, count);
    if r_max < needed {
        return Err(Error::InvalidParameter(format!(
            "r_max = {r_max} is below the minimum box {needed}"
        )));
    }
    let half_w2 = 0.5 * omega * omega;
    let centrifugal = b * b - 0.25;
    let well = move |r: f64| half_w2 * r * r + centrifugal / (r * r);
    let levels = extrapolated_levels(well, 0.0, r_max, grid_size, count)?;
    let wide_grid = (1.25 * grid_size as f64).round() as usize;
    let wide = extrapolated_levels(well, 0.0, 1.25 * r_max, wide_grid, count)?;
    for (index, (a, w)) in levels.iter().zip(&wide).enumerate() {
        let drift = ((a - w) / a).abs();
        if drift > BOX_DRIFT_TOLERANCE {
            return Err(Error::RadialBoxTooSmall {
                r_max,
                index,
                drift,
            });
        }
    }
    Ok(levels)
}

/// Levels of the center-of-mass oscillator `-d²/dY² + (omega²/2) Y²` on a symmetric box.
pub fn cms_oracle(omega: f64, count: usize, grid_size: usize) -> Result<Vec<f64>> {
    if !(omega > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "omega = {omega} must be > 0"
        )));
    }
    check_grid(grid_size, count)?;
    let half = radial_min_box(omega, 0.5, count);
    let half_w2 = 0.5 * omega * omega;
    extrapolated_levels(
        move |y: f64| half_w2 * y * y,
        -half,
        2.0 * half,
        grid_size,
        count,
    )
}

/// Compares both planar energy formulas with the radial oracle for `n <= n_max`, `m <= m_max`
/// and names the formula that reproduces the ground level.
pub fn energy_adjudication(
    params: &ModelParams,
    n_max: u32,
    m_max: u32,
    grid_size: usize,
) -> Result<DiscrepancyReport> {
    let omega = params.omega();
    let count = n_max as usize + 1;
    let mut report = DiscrepancyReport::new(
        format!(
            "planar energies N={} g1={} g2={} omega={}",
            params.n_order(),
            params.couplings().g1(),
            params.couplings().g2(),
            omega
        ),
        ENERGY_TOLERANCE,
    );
    let mut ground: Option<(bool, bool)> = None;
    for m in 0..=m_max {
        let b = exact_b(params, m);
        let levels = radial_oracle(omega, b, count, grid_size, radial_min_box(omega, b, count))?;
        for (n, &observed) in levels.iter().enumerate() {
            let pair = planar_energy(params, n as u32, m);
            let literal = DiscrepancyEntry::new(
                format!("printed_form E({n},{m})"),
                pair.printed_form,
                observed,
                ENERGY_TOLERANCE,
            );
            let oracle = DiscrepancyEntry::new(
                format!("oracle_form E({n},{m})"),
                pair.oracle_form,
                observed,
                ENERGY_TOLERANCE,
            );
            if n == 0 && m == 0 {
                ground = Some((literal.within_tolerance, oracle.within_tolerance));
            }
            report.push(literal);
            report.push(oracle);
        }
    }
    report.winner = Some(
        match ground {
            Some((false, true)) => "oracle_form",
            Some((true, false)) => "printed_form",
            Some((true, true)) => "both",
            _ => "neither",
        }
        .to_string(),
    );
    report.note("radial problem -u'' + [(omega^2/2) r^2 + (b^2 - 1/4)/r^2] u = E u, Dirichlet, 3-point FD + Richardson");
    report.note("a planar oscillator with potential (omega^2/2) r^2 has levels sqrt2 omega (2n + b + 1) for angular eigenvalue b^2");
    Ok(report)
}

/// Center-of-mass ladder `sqrt2 omega (t + 1/2)`, `t <= t_max`, against the 1D FD oracle.
pub fn cms_oracle_check(omega: f64, t_max: u32, grid_size: usize) -> Result<DiscrepancyReport> {
    let levels = cms_oracle(omega, t_max as usize + 1, grid_size)?;
    let mut report = DiscrepancyReport::new(
        format!("center-of-mass oscillator omega={omega}"),
        CMS_TOLERANCE,
    );
    for (t, &observed) in levels.iter().enumerate() {
        let claimed = SQRT_2 * omega * (t as f64 + 0.5);
        report.push(DiscrepancyEntry::new(
            format!("E_cms({t})"),
            claimed,
            observed,
            CMS_TOLERANCE,
        ));
    }
    Ok(report)
}
