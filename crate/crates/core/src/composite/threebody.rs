//! Three particles on a line: Jacobi coordinates and the pulled-back planar potential.

use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use serde::{Deserialize, Serialize};

use super::inverse_square;
use super::planar::{planar_singular_part, PlanarPoint};
use crate::error::{Error, Result};
use crate::model::ModelParams;

const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

/// Row-major 3x3 map `(x1, x2, x3) -> (y1, y2, Y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CmsMatrix(pub [[f64; 3]; 3]);

impl CmsMatrix {
    /// Orthonormal Jacobi map: relative pair, particle 3 against the pair, center of mass.
    pub fn standard() -> Self {
        Self([
            [-FRAC_1_SQRT_2, FRAC_1_SQRT_2, 0.0],
            [1.0 / SQRT6, 1.0 / SQRT6, -2.0 / SQRT6],
            [1.0 / SQRT3, 1.0 / SQRT3, 1.0 / SQRT3],
        ])
    }

    /// The commonly printed variant whose second row is `(1, 1, -1) sqrt6/6`.
    pub fn printed() -> Self {
        let mut m = Self::standard();
        m.0[1] = [SQRT6 / 6.0, SQRT6 / 6.0, -SQRT6 / 6.0];
        m
    }

    pub fn apply(&self, x: [f64; 3]) -> [f64; 3] {
        self.0
            .map(|row| row[0] * x[0] + row[1] * x[1] + row[2] * x[2])
    }

    pub fn apply_transpose(&self, y: [f64; 3]) -> [f64; 3] {
        let m = &self.0;
        [0, 1, 2].map(|j| m[0][j] * y[0] + m[1][j] * y[1] + m[2][j] * y[2])
    }

    /// `max |M M^T - I|` entrywise.
    pub fn orthonormality_defect(&self) -> f64 {
        let m = &self.0;
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| m[i][k] * m[j][k]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThreeBodyPoint {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl ThreeBodyPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn norm_sq(&self) -> f64 {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    pub fn translated(&self, c: f64) -> Self {
        Self::new(self.x1 + c, self.x2 + c, self.x3 + c)
    }
}

/// `(y1, y2, Y)` of the standard orthonormal Jacobi map.
pub fn cms_transform(p: ThreeBodyPoint) -> (f64, f64, f64) {
    let [y1, y2, y] = CmsMatrix::standard().apply(p.as_array());
    (y1, y2, y)
}

pub fn cms_inverse(y1: f64, y2: f64, y: f64) -> ThreeBodyPoint {
    let [x1, x2, x3] = CmsMatrix::standard().apply_transpose([y1, y2, y]);
    ThreeBodyPoint::new(x1, x2, x3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThreeBodyForm {
    /// Planar potential at the Jacobi coordinates plus the center-of-mass oscillator.
    Pullback,
    /// The same potential written out in particle coordinates with `2 g(g-1)` numerators.
    Printed,
    /// Pair interactions only: `N = 3` with the three-body family switched off (`g1 = 1`).
    Calogero,
    /// Pair and three-body interactions, `N = 3`.
    Wolfes,
    /// `N = 5`, lines at multiples of `pi/5`.
    N5,
    /// `N = 8`, a single merged coupling on four lines.
    N8,
}

impl ThreeBodyForm {
    fn name(&self) -> &'static str {
        match self {
            ThreeBodyForm::Pullback => "Pullback",
            ThreeBodyForm::Printed => "Printed",
            ThreeBodyForm::Calogero => "Calogero",
            ThreeBodyForm::Wolfes => "Wolfes",
            ThreeBodyForm::N5 => "N5",
            ThreeBodyForm::N8 => "N8",
        }
    }
}

fn harmonic(params: &ModelParams, p: ThreeBodyPoint) -> f64 {
    0.5 * params.omega().powi(2) * p.norm_sq()
}

/// Sum over the three pairs of `c / (x_k - x_j)²`.
fn pair_sum(c: f64, p: ThreeBodyPoint) -> Result<f64> {
    Ok(inverse_square(c, p.x2 - p.x1)?
        + inverse_square(c, p.x3 - p.x1)?
        + inverse_square(c, p.x3 - p.x2)?)
}

/// Sum over `n` of `c / (x_l + x_m - 2 x_n)²`.
fn triple_sum(c: f64, p: ThreeBodyPoint) -> Result<f64> {
    Ok(inverse_square(c, p.x1 + p.x2 - 2.0 * p.x3)?
        + inverse_square(c, p.x1 + p.x3 - 2.0 * p.x2)?
        + inverse_square(c, p.x2 + p.x3 - 2.0 * p.x1)?)
}

/// Cosine-family term with direction `(c, s)`, written in particle coordinates.
fn cos_family_form(c: f64, s: f64, p: ThreeBodyPoint) -> f64 {
    (c + s / SQRT3) * p.x1 + (-c + s / SQRT3) * p.x2 - 2.0 * s / SQRT3 * p.x3
}

/// Sine-family term with direction `(c, s)`, written in particle coordinates.
fn sin_family_form(c: f64, s: f64, p: ThreeBodyPoint) -> f64 {
    (-s + c / SQRT3) * p.x1 + (s + c / SQRT3) * p.x2 - 2.0 * c / SQRT3 * p.x3
}

fn printed_singular(params: &ModelParams, p: ThreeBodyPoint) -> Result<f64> {
    let n = params.n();
    let cp = params.couplings();
    let mut v = 0.0;
    for k in 0..params.n_order() {
        let (s, c) = (TAU * f64::from(k) / n).sin_cos();
        v += inverse_square(2.0 * cp.strength2(), cos_family_form(c, s, p))?;
        v += inverse_square(2.0 * cp.strength1(), sin_family_form(c, s, p))?;
    }
    Ok(v)
}

fn n5_singular(params: &ModelParams, p: ThreeBodyPoint) -> Result<f64> {
    let cp = params.couplings();
    let (a1, a2) = (2.0 * cp.strength1(), 2.0 * cp.strength2());
    let mut v = 0.0;
    for k in 1..=2 {
        let (s, c) = (PI * f64::from(k) / 5.0).sin_cos();
        for eps in [1.0, -1.0] {
            v += inverse_square(a2, cos_family_form(c, eps * s, p))?;
            v += inverse_square(a1, sin_family_form(c, eps * s, p))?;
        }
    }
    v += inverse_square(a2, p.x2 - p.x1)?;
    v += inverse_square(3.0 * a1, p.x1 + p.x2 - 2.0 * p.x3)?;
    Ok(v)
}

/// Merged-coupling `N = 8` form; the diagonal lines carry `sqrt3/6` on `x1, x2`.
pub(super) fn n8_singular(
    params: &ModelParams,
    p: ThreeBodyPoint,
    diagonal_weight: f64,
) -> Result<f64> {
    let cp = params.couplings();
    let g = cp.strength1() + cp.strength2();
    let mut v =
        inverse_square(4.0 * g, p.x1 - p.x2)? + inverse_square(12.0 * g, p.x1 + p.x2 - 2.0 * p.x3)?;
    for eps in [0.5, -0.5] {
        let form = (eps + diagonal_weight) * p.x1 + (-eps + diagonal_weight) * p.x2 - p.x3 / SQRT3;
        v += inverse_square(2.0 * g, form)?;
    }
    Ok(v)
}

pub(super) const N8_DIAGONAL_WEIGHT: f64 = SQRT3 / 6.0;
pub(super) const N8_PRINTED_DIAGONAL_WEIGHT: f64 = SQRT3 / 3.0;

/// Singular part of a form (everything except the harmonic confinement).
pub(super) fn singular_part(
    params: &ModelParams,
    p: ThreeBodyPoint,
    form: ThreeBodyForm,
) -> Result<f64> {
    let n = params.n_order();
    let cp = params.couplings();
    let require = |needed: u32, extra: Option<(bool, &str)>| -> Result<()> {
        if n != needed {
            return Err(Error::FormMismatch {
                form: form.name(),
                reason: format!("N = {n} (needs N = {needed})"),
            });
        }
        if let Some((false, why)) = extra {
            return Err(Error::FormMismatch {
                form: form.name(),
                reason: why.to_string(),
            });
        }
        Ok(())
    };
    match form {
        ThreeBodyForm::Pullback => {
            let (y1, y2, _) = cms_transform(p);
            planar_singular_part(params, PlanarPoint::new(y1, y2))
        }
        ThreeBodyForm::Printed => printed_singular(params, p),
        ThreeBodyForm::Calogero => {
            require(
                3,
                Some((
                    cp.g1() == 1.0,
                    "g1 != 1 (the three-body family must be absent)",
                )),
            )?;
            pair_sum(2.0 * cp.strength2(), p)
        }
        ThreeBodyForm::Wolfes => {
            require(3, None)?;
            Ok(pair_sum(2.0 * cp.strength2(), p)? + triple_sum(6.0 * cp.strength1(), p)?)
        }
        ThreeBodyForm::N5 => {
            require(5, None)?;
            n5_singular(params, p)
        }
        ThreeBodyForm::N8 => {
            require(8, None)?;
            n8_singular(params, p, N8_DIAGONAL_WEIGHT)
        }
    }
}

/// Full three-body potential: `(omega²/2)(x1² + x2² + x3²)` plus the singular part of `form`.
///
/// `Pullback` adds the confinement as `(omega²/2)(y1² + y2² + Y²)` in Jacobi coordinates; the
/// other forms use particle coordinates. The two agree because the Jacobi map is orthogonal.
pub fn threebody_potential(
    params: &ModelParams,
    p: ThreeBodyPoint,
    form: ThreeBodyForm,
) -> Result<f64> {
    let singular = singular_part(params, p, form)?;
    let confinement = match form {
        ThreeBodyForm::Pullback => {
            let (y1, y2, y) = cms_transform(p);
            0.5 * params.omega().powi(2) * (y1 * y1 + y2 * y2 + y * y)
        }
        _ => harmonic(params, p),
    };
    Ok(singular + confinement)
}

/// The pair-plus-three-body forms exactly as commonly printed, with unit coefficients and
/// the `g1` coupling on the pairs. Kept for discrepancy reporting only.
pub(super) fn calogero_printed_singular(params: &ModelParams, p: ThreeBodyPoint) -> Result<f64> {
    pair_sum(params.couplings().strength1(), p)
}

pub(super) fn wolfes_printed_singular(params: &ModelParams, p: ThreeBodyPoint) -> Result<f64> {
    let cp = params.couplings();
    Ok(pair_sum(cp.strength1(), p)? + triple_sum(cp.strength2(), p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, g1: f64, g2: f64, omega: f64) -> ModelParams {
        ModelParams::from_values(n, g1, g2, omega).unwrap()
    }

    #[test]
    fn matrix_properties() {
        let m = CmsMatrix::standard();
        assert!(m.orthonormality_defect() < 1e-15);
        assert!((m.0[2][0] - 1.0 / 3f64.sqrt()).abs() < 1e-16);
        // the printed second row is neither unit length nor orthogonal to the center of mass
        assert!(CmsMatrix::printed().orthonormality_defect() > 0.4);
    }

    #[test]
    fn transform_examples() {
        let (y1, y2, y) = cms_transform(ThreeBodyPoint::new(1.0, 1.0, 1.0));
        assert!(y1.abs() < 1e-16 && y2.abs() < 1e-15 && (y - 3f64.sqrt()).abs() < 1e-15);
        let (y1, y2, y) = cms_transform(ThreeBodyPoint::new(1.0, 0.0, 0.0));
        assert!((y1 + 2f64.sqrt() / 2.0).abs() < 1e-16);
        assert!((y2 - 6f64.sqrt() / 6.0).abs() < 1e-15);
        assert!((y - 3f64.sqrt() / 3.0).abs() < 1e-15);
    }

    #[test]
    fn calogero_pair_sum() {
        // pair lines carry g2; with G2 = 2 and the 2G numerators: 4/0.36 + 4/1.44 + 4/0.36 = 25
        let p = params(3, 1.0, 2.0, 1e-300);
        let x = ThreeBodyPoint::new(0.3, 0.9, 1.5);
        let pull = threebody_potential(&p, x, ThreeBodyForm::Pullback).unwrap();
        let cal = threebody_potential(&p, x, ThreeBodyForm::Calogero).unwrap();
        assert!((pull - 25.0).abs() < 1e-12, "{pull}");
        assert!((cal - 25.0).abs() < 1e-12, "{cal}");
    }

    #[test]
    fn g1_family_is_three_body() {
        // N = 3, g2 = 1: only the (x_l + x_m - 2 x_n) lines survive, and (0.3, 0.9, 1.5) sits on one
        let p = params(3, 2.0, 1.0, 1.0);
        let err = threebody_potential(
            &p,
            ThreeBodyPoint::new(0.3, 0.9, 1.5),
            ThreeBodyForm::Pullback,
        );
        assert!(matches!(err, Err(Error::NearSingularLine { .. })));
    }

    #[test]
    fn translation_invariance() {
        let x = ThreeBodyPoint::new(0.31, -0.7, 1.9);
        for (form, p) in [
            (ThreeBodyForm::Calogero, params(3, 1.0, 2.5, 1.0)),
            (ThreeBodyForm::Wolfes, params(3, 1.7, 2.5, 1.0)),
        ] {
            let a = singular_part(&p, x, form).unwrap();
            let b = singular_part(&p, x.translated(0.7), form).unwrap();
            assert!(((a - b) / a).abs() < 1e-12);
        }
    }

    #[test]
    fn form_requirements() {
        let x = ThreeBodyPoint::new(0.1, 0.5, -0.8);
        assert!(
            threebody_potential(&params(3, 2.0, 2.0, 1.0), x, ThreeBodyForm::Calogero).is_err()
        );
        assert!(
            threebody_potential(&params(4, 1.0, 2.0, 1.0), x, ThreeBodyForm::Calogero).is_err()
        );
        assert!(threebody_potential(&params(4, 1.5, 2.0, 1.0), x, ThreeBodyForm::N5).is_err());
        assert!(threebody_potential(&params(5, 1.5, 2.0, 1.0), x, ThreeBodyForm::N8).is_err());
        assert!(threebody_potential(&params(7, 1.5, 2.0, 1.0), x, ThreeBodyForm::Printed).is_ok());
    }

    #[test]
    fn harmonic_terms_agree() {
        let p = params(4, 1.5, 2.0, 1.3);
        let x = ThreeBodyPoint::new(0.37, -1.1, 0.52);
        let a = threebody_potential(&p, x, ThreeBodyForm::Pullback).unwrap()
            - singular_part(&p, x, ThreeBodyForm::Pullback).unwrap();
        assert!((a - 0.5 * 1.69 * x.norm_sq()).abs() < 1e-13);
    }

    #[test]
    fn n8_merge() {
        let x = ThreeBodyPoint::new(0.2, -0.9, 1.3);
        let a = threebody_potential(&params(8, 2.0, 3.0, 1.0), x, ThreeBodyForm::Printed).unwrap();
        let b = threebody_potential(&params(8, 3.0, 2.0, 1.0), x, ThreeBodyForm::Printed).unwrap();
        assert!(((a - b) / a).abs() < 1e-13);
    }
}
