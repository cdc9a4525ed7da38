//! WebAssembly bindings for the browser demo.
//!
//! Each export returns a flat `Float64Array`; the `*_data` functions behind them are plain Rust
//! and carry the tests.

use angspec_core::angular::{
    angular_potential, exact_b, exact_eigenfunction, fd_spectrum_extrapolated, AngularProblem,
    PotentialForm,
};
use angspec_core::model::domain_cell;
use angspec_core::{ModelParams, Result};
use wasm_bindgen::prelude::*;

/// Demo grids are capped so a slider drag never stalls the page.
const MAX_POINTS: usize = 4000;
const MAX_GRID: usize = 4000;

fn model(n: u32, g1: f64, g2: f64) -> Result<ModelParams> {
    ModelParams::from_values(n, g1, g2, 1.0)
}

fn interior(params: &ModelParams, points: usize) -> Vec<f64> {
    let cell = domain_cell(params);
    let points = points.clamp(2, MAX_POINTS);
    let step = cell.length() / (points + 1) as f64;
    (1..=points)
        .map(|i| cell.phi_lo + i as f64 * step)
        .collect()
}

/// `[phi_lo, phi_hi]` of the fundamental cell.
pub fn cell_data(n: u32, g1: f64, g2: f64) -> Result<Vec<f64>> {
    let cell = domain_cell(&model(n, g1, g2)?);
    Ok(vec![cell.phi_lo, cell.phi_hi])
}

/// Interleaved `phi, V(phi)` pairs across the cell.
pub fn potential_data(n: u32, g1: f64, g2: f64, points: usize) -> Result<Vec<f64>> {
    let p = model(n, g1, g2)?;
    let mut out = Vec::with_capacity(2 * points);
    for phi in interior(&p, points) {
        out.push(phi);
        out.push(angular_potential(&p, phi, PotentialForm::Reduced)?);
    }
    Ok(out)
}

/// Interleaved `phi, psi(phi)` pairs, scaled to unit maximum modulus.
pub fn eigenfunction_data(n: u32, g1: f64, g2: f64, m: u32, points: usize) -> Result<Vec<f64>> {
    let p = model(n, g1, g2)?;
    let problem = AngularProblem::new(p);
    let phis = interior(&p, points);
    let psi = phis
        .iter()
        .map(|&phi| exact_eigenfunction(&problem, m, phi))
        .collect::<Result<Vec<_>>>()?;
    let peak = psi.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let scale = if peak > 0.0 { 1.0 / peak } else { 1.0 };
    Ok(phis
        .into_iter()
        .zip(psi)
        .flat_map(|(phi, v)| [phi, v * scale])
        .collect())
}

/// First `count` closed-form `b_m²` followed by the lowest `fd_count` extrapolated FD eigenvalues.
pub fn spectrum_data(
    n: u32,
    g1: f64,
    g2: f64,
    count: u32,
    fd_count: usize,
    grid: usize,
) -> Result<Vec<f64>> {
    let p = model(n, g1, g2)?;
    let mut out: Vec<f64> = (0..count).map(|m| exact_b(&p, m).powi(2)).collect();
    let fd = fd_spectrum_extrapolated(&AngularProblem::new(p), grid.min(MAX_GRID), fd_count)?;
    out.extend(fd.values);
    Ok(out)
}

fn js<T>(r: Result<T>) -> std::result::Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn cell(n: u32, g1: f64, g2: f64) -> std::result::Result<Vec<f64>, JsError> {
    js(cell_data(n, g1, g2))
}

#[wasm_bindgen]
pub fn potential_curve(
    n: u32,
    g1: f64,
    g2: f64,
    points: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    js(potential_data(n, g1, g2, points))
}

#[wasm_bindgen]
pub fn eigenfunction_curve(
    n: u32,
    g1: f64,
    g2: f64,
    m: u32,
    points: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    js(eigenfunction_data(n, g1, g2, m, points))
}

#[wasm_bindgen]
pub fn spectrum(
    n: u32,
    g1: f64,
    g2: f64,
    count: u32,
    fd_count: usize,
    grid: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    js(spectrum_data(n, g1, g2, count, fd_count, grid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves_are_interleaved_and_inside_the_cell() {
        let [lo, hi] = cell_data(3, 2.0, 1.5).unwrap()[..] else {
            panic!()
        };
        let v = potential_data(3, 2.0, 1.5, 100).unwrap();
        assert_eq!(v.len(), 200);
        assert!(v.chunks(2).all(|c| c[0] > lo && c[0] < hi && c[1] > 0.0));
        let psi = eigenfunction_data(3, 2.0, 1.5, 2, 100).unwrap();
        let peak = psi.chunks(2).map(|c| c[1].abs()).fold(0.0, f64::max);
        assert!((peak - 1.0).abs() < 1e-15);
    }

    #[test]
    fn spectrum_lists_exact_then_fd() {
        let s = spectrum_data(1, 2.0, 3.0, 3, 3, 500).unwrap();
        assert_eq!(s.len(), 6);
        for (exact, fd) in s[..3].iter().zip(&s[3..]) {
            assert!(((exact - fd) / exact).abs() < 1e-4);
        }
    }

    #[test]
    fn bad_couplings_are_errors() {
        assert!(potential_data(2, 0.5, 2.0, 10).is_err());
    }
}
