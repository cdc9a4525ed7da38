//! The generalized angular operator
//!
//! ```text
//! -d²/dphi² + sum_k G1 / sin²(phi - 2k pi/N) + sum_l G2 / cos²(phi - 2l pi/N),   G_i = g_i (g_i - 1)
//! ```
//!
//! on one fundamental cell with Dirichlet ends. After summation the potential becomes a
//! one-cell Poschl-Teller well in `theta = scale * phi`, which fixes the closed-form
//! eigenvalues and eigenfunctions. Every closed form here is paired with a numerical check:
//! a finite-difference Rayleigh residual and a Sturm-bisection spectrum.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    domain_cell, lattice_distance, lattice_nearest, DomainCell, ModelParams, NClass, SINGULAR_GUARD,
};
use crate::numerics::{richardson, second_derivative, tridiag_eigen, Tridiagonal};
use crate::report::{DiscrepancyEntry, DiscrepancyReport};
use crate::special::{gegenbauer_c, jacobi_p, JacobiParams};

/// Relative tolerance for matching closed-form levels against the extrapolated FD spectrum.
pub const FD_MATCH_TOLERANCE: f64 = 5e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PotentialForm {
    /// The double sum term by term.
    DirectSum,
    /// The summed closed form for the class of `N`.
    Reduced,
}

/// Angular problem reduced to a Poschl-Teller well in the scaled variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularProblem {
    pub params: ModelParams,
    pub cell: DomainCell,
    /// `a(a-1)`, coefficient of `1/sin²theta`.
    pub coupling_sin: f64,
    /// `b(b-1)`, coefficient of `1/cos²theta`; zero when `4 | N`.
    pub coupling_cos: f64,
    pub exponent_a: f64,
    /// `None` when `4 | N`, where the well has a single barrier family on `(0, pi)`.
    pub exponent_b: Option<f64>,
}

fn positive_root(coupling: f64) -> f64 {
    0.5 * (1.0 + (1.0 + 4.0 * coupling).sqrt())
}

impl AngularProblem {
    pub fn new(params: ModelParams) -> Self {
        let cell = domain_cell(&params);
        let c = params.couplings();
        let (g1s, g2s) = (c.strength1(), c.strength2());
        let (coupling_sin, coupling_cos, exponent_a, exponent_b) = match cell.n_class {
            NClass::Odd => (g1s, g2s, c.g1(), Some(c.g2())),
            NClass::TwoMod4 => {
                let (s, t) = (2.0 * g1s, 2.0 * g2s);
                (s, t, positive_root(s), Some(positive_root(t)))
            }
            NClass::ZeroMod4 => {
                let s = 2.0 * (g1s + g2s);
                (s, 0.0, positive_root(s), None)
            }
        };
        Self {
            params,
            cell,
            coupling_sin,
            coupling_cos,
            exponent_a,
            exponent_b,
        }
    }

    pub fn exact_b(&self, m: u32) -> f64 {
        exact_b(&self.params, m)
    }

    /// Potential on the open cell, guarded against the cell endpoints only.
    fn cell_potential(&self, phi: f64) -> f64 {
        direct_sum(&self.params, phi)
    }
}

fn direct_sum(params: &ModelParams, phi: f64) -> f64 {
    let n = params.n();
    let c = params.couplings();
    let (g1s, g2s) = (c.strength1(), c.strength2());
    let mut v = 0.0;
    for k in 0..params.n_order() {
        let s = phi - TAU * f64::from(k) / n;
        if g1s != 0.0 {
            v += g1s / s.sin().powi(2);
        }
        if g2s != 0.0 {
            v += g2s / s.cos().powi(2);
        }
    }
    v
}

fn reduced(params: &ModelParams, phi: f64) -> f64 {
    let n = params.n();
    let c = params.couplings();
    let (g1s, g2s) = (c.strength1(), c.strength2());
    match params.n_class() {
        NClass::Odd => n * n * (g1s / (n * phi).sin().powi(2) + g2s / (n * phi).cos().powi(2)),
        NClass::TwoMod4 => {
            let t = 0.5 * n * phi;
            0.5 * n * n * (g1s / t.sin().powi(2) + g2s / t.cos().powi(2))
        }
        NClass::ZeroMod4 => 0.5 * n * n * (g1s + g2s) / (0.5 * n * phi).sin().powi(2),
    }
}

/// Distance from `phi` to the nearest active singularity, with that singularity.
pub fn nearest_singularity(params: &ModelParams, phi: f64) -> Option<(f64, f64)> {
    let n = params.n();
    let period = if params.n_order() % 2 == 1 {
        PI / n
    } else {
        TAU / n
    };
    let c = params.couplings();
    let mut best: Option<(f64, f64)> = None;
    for (active, offset) in [(c.g1() > 1.0, 0.0), (c.g2() > 1.0, FRAC_PI_2)] {
        if active {
            let d = lattice_distance(phi, offset, period);
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, lattice_nearest(phi, offset, period)));
            }
        }
    }
    best
}

pub fn angular_potential(params: &ModelParams, phi: f64, form: PotentialForm) -> Result<f64> {
    if let Some((distance, singularity)) = nearest_singularity(params, phi) {
        if distance < SINGULAR_GUARD {
            return Err(Error::NearSingularity {
                phi,
                singularity,
                distance,
            });
        }
    }
    Ok(match form {
        PotentialForm::DirectSum => direct_sum(params, phi),
        PotentialForm::Reduced => reduced(params, phi),
    })
}

/// Closed-form angular eigenvalue `b_m` (the operator eigenvalue is `b_m²`).
pub fn exact_b(params: &ModelParams, m: u32) -> f64 {
    let n = params.n();
    let c = params.couplings();
    let m = f64::from(m);
    match params.n_class() {
        NClass::ZeroMod4 => {
            0.25 * n * (1.0 + (1.0 + 8.0 * (c.strength1() + c.strength2())).sqrt() + 4.0 * m)
        }
        NClass::TwoMod4 => {
            0.25 * n
                * (2.0
                    + (1.0 + 8.0 * c.strength1()).sqrt()
                    + (1.0 + 8.0 * c.strength2()).sqrt()
                    + 4.0 * m)
        }
        NClass::Odd => n * (c.g1() + c.g2() + 2.0 * m),
    }
}

/// Unnormalized eigenfunction for level `m` at `phi` in the open cell.
///
/// With `theta = scale * phi`: `sin^a theta cos^b theta P_m^(a-1/2, b-1/2)(cos 2theta)` for the two
/// classes with a cosine barrier, `sin^a theta C_{2m}^a(cos theta)` when `4 | N`. The doubled
/// Gegenbauer degree keeps only the states symmetric about `theta = pi/2`, which is the ladder
/// `exact_b` produces.
pub fn exact_eigenfunction(problem: &AngularProblem, m: u32, phi: f64) -> Result<f64> {
    let cell = &problem.cell;
    if !cell.contains(phi) {
        return Err(Error::OutsideCell {
            phi,
            lo: cell.phi_lo,
            hi: cell.phi_hi,
        });
    }
    let theta = cell.theta(phi);
    let a = problem.exponent_a;
    match problem.exponent_b {
        Some(b) => {
            let jp = JacobiParams::new(m, a - 0.5, b - 0.5)?;
            Ok(theta.sin().powf(a) * theta.cos().powf(b) * jacobi_p(jp, (2.0 * theta).cos()))
        }
        None => Ok(theta.sin().powf(a) * gegenbauer_c(2 * m, a, theta.cos())?),
    }
}

/// Minimum admissible distance of a Rayleigh grid point from the cell ends.
pub fn rayleigh_min_distance(cell: &DomainCell) -> f64 {
    0.05 * cell.length() / PI
}

/// Max over `grid` of `|(-xi'' + V xi)/xi - b_m²| / b_m²`, with `xi''` from a sixth-order stencil.
pub fn rayleigh_residual(problem: &AngularProblem, m: u32, grid: &[f64]) -> Result<f64> {
    let cell = &problem.cell;
    let min_distance = rayleigh_min_distance(cell);
    let b2 = problem.exact_b(m).powi(2);
    let mut worst = 0.0f64;
    for &phi in grid {
        if !cell.contains(phi) || cell.distance_to_edge(phi) < min_distance {
            return Err(Error::GridTooCloseToBoundary { phi, min_distance });
        }
        let h = (1e-3 * cell.length()).min(0.05 * cell.distance_to_edge(phi));
        let xi = exact_eigenfunction(problem, m, phi)?;
        let d2 = second_derivative(
            |x| exact_eigenfunction(problem, m, x).unwrap_or(f64::NAN),
            phi,
            h,
        );
        let v = angular_potential(&problem.params, phi, PotentialForm::DirectSum)?;
        let r = ((-d2 + v * xi) / xi - b2).abs() / b2;
        if r.is_nan() {
            return Ok(f64::NAN);
        }
        worst = worst.max(r);
    }
    Ok(worst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    ExactFormula,
    FiniteDifference,
}

/// Ascending eigenvalues of the angular operator (values are `b²`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub provenance: Provenance,
    /// Subintervals of the (finest) grid; zero for closed-form spectra.
    pub grid_size: usize,
    pub extrapolated: bool,
}

impl Spectrum {
    pub fn exact(params: &ModelParams, count: u32) -> Self {
        Self {
            values: (0..count).map(|m| exact_b(params, m).powi(2)).collect(),
            provenance: Provenance::ExactFormula,
            grid_size: 0,
            extrapolated: false,
        }
    }
}

/// Minimum number of subintervals accepted by [`fd_spectrum`].
pub const MIN_GRID: usize = 64;

/// Lowest `count` eigenvalues of the 3-point Dirichlet discretization on `grid_size`
/// uniform subintervals of the cell. The potential is the literal double sum at interior nodes.
pub fn fd_spectrum(problem: &AngularProblem, grid_size: usize, count: usize) -> Result<Spectrum> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidParameter(format!(
            "grid_size = {grid_size} must be >= {MIN_GRID}"
        )));
    }
    if count == 0 || count >= grid_size {
        return Err(Error::InvalidParameter(format!(
            "count = {count} must be in 1..{grid_size}"
        )));
    }
    let cell = &problem.cell;
    let h = cell.length() / grid_size as f64;
    let inv_h2 = 1.0 / (h * h);
    let diag = (1..grid_size)
        .map(|i| 2.0 * inv_h2 + problem.cell_potential(cell.phi_lo + i as f64 * h))
        .collect();
    let t = Tridiagonal::new(diag, vec![-inv_h2; grid_size - 2])?;
    Ok(Spectrum {
        values: tridiag_eigen(&t, count)?,
        provenance: Provenance::FiniteDifference,
        grid_size,
        extrapolated: false,
    })
}

/// Largest relative change between the coarse and fine FD level accepted before extrapolating.
pub const RESOLUTION_GUARD: f64 = 0.05;

/// [`fd_spectrum`] on `grid_size` and `2 grid_size`, combined by one second-order Richardson step.
///
/// Fails with [`Error::Unresolved`] when halving the step moves a level by more than
/// [`RESOLUTION_GUARD`]; the asymptotic error model behind the extrapolation does not hold there.
pub fn fd_spectrum_extrapolated(
    problem: &AngularProblem,
    grid_size: usize,
    count: usize,
) -> Result<Spectrum> {
    let coarse = fd_spectrum(problem, grid_size, count)?;
    let fine = fd_spectrum(problem, 2 * grid_size, count)?;
    for (index, (&c, &f)) in coarse.values.iter().zip(&fine.values).enumerate() {
        if ((c - f) / f).abs() > RESOLUTION_GUARD {
            return Err(Error::Unresolved {
                index,
                coarse: c,
                fine: f,
            });
        }
    }
    Ok(Spectrum {
        values: coarse
            .values
            .iter()
            .zip(&fine.values)
            .map(|(&c, &f)| richardson(c, f, 2, 2.0))
            .collect(),
        provenance: Provenance::FiniteDifference,
        grid_size: 2 * grid_size,
        extrapolated: true,
    })
}

/// Number of FD levels needed to reach the closed-form level `m_max`.
fn levels_needed(class: NClass, m_max: u32) -> usize {
    match class {
        // the 4|N ladder skips every other Dirichlet level
        NClass::ZeroMod4 => 2 * m_max as usize + 2,
        _ => m_max as usize + 2,
    }
}

/// Checks every `exact_b(m)²`, `m <= m_max`, against the extrapolated FD spectrum.
///
/// Entries hold the claimed `b_m²` and the nearest FD level; FD levels at or below the top
/// claimed level that no claimed level matched are listed in `skipped`.
pub fn spectrum_crosscheck(
    params: &ModelParams,
    m_max: u32,
    grid_size: usize,
) -> Result<DiscrepancyReport> {
    let problem = AngularProblem::new(*params);
    let count = levels_needed(params.n_class(), m_max);
    let fd = fd_spectrum_extrapolated(&problem, grid_size, count)?;
    let mut report = DiscrepancyReport::new(
        format!(
            "angular spectrum N={} g1={} g2={} (class {})",
            params.n_order(),
            params.couplings().g1(),
            params.couplings().g2(),
            params.n_class().as_str()
        ),
        FD_MATCH_TOLERANCE,
    );
    let mut used = vec![false; fd.values.len()];
    for m in 0..=m_max {
        let claimed = exact_b(params, m).powi(2);
        let (idx, observed) = fd
            .values
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| (a.1 - claimed).abs().total_cmp(&(b.1 - claimed).abs()))
            .expect("non-empty spectrum");
        let entry =
            DiscrepancyEntry::new(format!("b_{m}^2"), claimed, observed, FD_MATCH_TOLERANCE);
        if entry.within_tolerance {
            used[idx] = true;
        }
        report.push(entry);
    }
    let top = exact_b(params, m_max).powi(2) * (1.0 + FD_MATCH_TOLERANCE);
    report.skipped = fd
        .values
        .iter()
        .zip(&used)
        .filter(|(&v, &u)| !u && v <= top)
        .map(|(&v, _)| v)
        .collect();
    if !report.skipped.is_empty() {
        report.note(format!(
            "{} Dirichlet level(s) below b_{m_max}^2 are absent from the closed-form ladder",
            report.skipped.len()
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, g1: f64, g2: f64) -> ModelParams {
        ModelParams::from_values(n, g1, g2, 1.0).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn coarse_grid_high_levels_are_unresolved() {
        let p = ModelParams::from_values(1, 2.0, 3.0, 1.0).unwrap();
        let r = fd_spectrum_extrapolated(&AngularProblem::new(p), 64, 60);
        assert!(matches!(r, Err(Error::Unresolved { .. })), "{r:?}");
    }

    #[test]
    fn potential_spot_values() {
        let p = params(1, 2.0, 2.0);
        let phi = PI / 4.0;
        assert!(
            rel(
                angular_potential(&p, phi, PotentialForm::DirectSum).unwrap(),
                8.0
            ) < 1e-14
        );
        assert!(
            rel(
                angular_potential(&p, phi, PotentialForm::Reduced).unwrap(),
                8.0
            ) < 1e-14
        );

        let p = params(2, 2.0, 1.0);
        let phi = PI / 3.0;
        assert!(
            rel(
                angular_potential(&p, phi, PotentialForm::DirectSum).unwrap(),
                16.0 / 3.0
            ) < 1e-14
        );
        assert!(
            rel(
                angular_potential(&p, phi, PotentialForm::Reduced).unwrap(),
                16.0 / 3.0
            ) < 1e-14
        );
    }

    #[test]
    fn potential_rejects_singular_points() {
        let p = params(3, 2.0, 2.0);
        assert!(matches!(
            angular_potential(&p, PI / 3.0, PotentialForm::DirectSum),
            Err(Error::NearSingularity { .. })
        ));
        assert!(angular_potential(&p, PI / 6.0, PotentialForm::Reduced).is_err());
        // without the cosine family pi/6 is regular for N = 3
        assert!(angular_potential(&params(3, 2.0, 1.0), PI / 6.0, PotentialForm::Reduced).is_ok());
    }

    #[test]
    fn exact_b_examples() {
        assert_eq!(exact_b(&params(1, 2.0, 3.0), 0), 5.0);
        assert_eq!(exact_b(&params(2, 1.0, 1.0), 1), 4.0);
        assert_eq!(exact_b(&params(4, 1.0, 1.0), 0), 2.0);
    }

    #[test]
    fn ladder_spacing() {
        for n in 1..=16 {
            let p = params(n, 1.7, 2.9);
            let step = if n % 2 == 1 {
                2.0 * f64::from(n)
            } else {
                f64::from(n)
            };
            for m in 0..6 {
                let d = exact_b(&p, m + 1) - exact_b(&p, m);
                assert!((d - step).abs() <= 1e-12 * exact_b(&p, m + 1), "N = {n}");
            }
        }
    }

    #[test]
    fn exponents_follow_class() {
        let odd = AngularProblem::new(params(3, 2.0, 3.0));
        assert_eq!((odd.exponent_a, odd.exponent_b), (2.0, Some(3.0)));
        let two = AngularProblem::new(params(2, 2.0, 1.0));
        assert!((two.exponent_a - 0.5 * (1.0 + 17f64.sqrt())).abs() < 1e-15);
        assert_eq!(two.exponent_b, Some(1.0));
        let four = AngularProblem::new(params(4, 2.0, 2.0));
        assert!((four.exponent_a * (four.exponent_a - 1.0) - 8.0).abs() < 1e-12);
        assert!(four.exponent_b.is_none() && four.coupling_cos == 0.0);
    }

    #[test]
    fn eigenfunction_ground_state_value() {
        let prob = AngularProblem::new(params(1, 2.0, 3.0));
        let v = exact_eigenfunction(&prob, 0, PI / 4.0).unwrap();
        assert!((v - 0.5 * 2f64.sqrt() / 4.0).abs() < 1e-15);
        assert!(exact_eigenfunction(&prob, 0, 2.0).is_err());
        assert!(exact_eigenfunction(&prob, 0, 0.0).is_err());
    }

    #[test]
    fn eigenfunction_boundary_exponent() {
        let prob = AngularProblem::new(params(2, 2.0, 2.0));
        let (x1, x2) = (1e-4, 1e-3);
        let (f1, f2) = (
            exact_eigenfunction(&prob, 1, x1).unwrap(),
            exact_eigenfunction(&prob, 1, x2).unwrap(),
        );
        let slope = (f2.abs().ln() - f1.abs().ln()) / (x2.ln() - x1.ln());
        assert!(
            (slope - prob.exponent_a).abs() < 1e-3,
            "{slope} vs {}",
            prob.exponent_a
        );
    }

    #[test]
    fn rayleigh_residual_small() {
        let grid = |cell: &DomainCell| -> Vec<f64> {
            (0..50)
                .map(|i| cell.phi_lo + cell.length() * (0.03 + 0.94 * (i as f64 + 0.37) / 50.0))
                .collect()
        };
        for (n, g1, g2, ms) in [
            (1, 2.0, 3.0, 0..4),
            (3, 1.5, 2.5, 0..1),
            (4, 2.0, 2.0, 0..1),
        ] {
            let prob = AngularProblem::new(params(n, g1, g2));
            for m in ms {
                let r = rayleigh_residual(&prob, m, &grid(&prob.cell)).unwrap();
                assert!(r <= 1e-6, "N = {n}, m = {m}: {r}");
            }
        }
    }

    #[test]
    fn rayleigh_rejects_boundary_points() {
        let prob = AngularProblem::new(params(1, 2.0, 3.0));
        let err = rayleigh_residual(&prob, 0, &[1e-3]).unwrap_err();
        assert!(matches!(err, Error::GridTooCloseToBoundary { .. }));
    }

    #[test]
    fn free_dirichlet_levels() {
        let prob = AngularProblem::new(params(2, 1.0, 1.0));
        let s = fd_spectrum_extrapolated(&prob, 500, 3).unwrap();
        for (v, e) in s.values.iter().zip([4.0, 16.0, 36.0]) {
            assert!(rel(*v, e) < 1e-3, "{v} vs {e}");
        }
    }

    #[test]
    fn fd_argument_checks() {
        let prob = AngularProblem::new(params(1, 2.0, 2.0));
        assert!(fd_spectrum(&prob, 32, 1).is_err());
        assert!(fd_spectrum(&prob, 64, 0).is_err());
        assert!(fd_spectrum(&prob, 64, 64).is_err());
    }

    #[test]
    fn ground_level_n1() {
        let prob = AngularProblem::new(params(1, 2.0, 3.0));
        let s = fd_spectrum_extrapolated(&prob, 2000, 1).unwrap();
        assert!(rel(s.values[0], 25.0) < 5e-3, "{}", s.values[0]);
    }

    #[test]
    fn crosscheck_zero_mod_four_reports_skipped_levels() {
        let r = spectrum_crosscheck(&params(4, 1.0, 1.0), 2, 1000).unwrap();
        assert!(r.all_within_tolerance(), "{r:?}");
        // Dirichlet levels 16 and 64 on (0, pi/2) are not on the 2, 6, 10 ladder
        assert_eq!(r.skipped.len(), 2);
        assert!(rel(r.skipped[0], 16.0) < 1e-3 && rel(r.skipped[1], 64.0) < 1e-3);
    }
}
