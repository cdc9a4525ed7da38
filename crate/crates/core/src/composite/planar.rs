use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::inverse_square;
use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Cartesian point of the relative-motion plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanarPoint {
    pub y1: f64,
    pub y2: f64,
}

impl PlanarPoint {
    pub fn new(y1: f64, y2: f64) -> Self {
        Self { y1, y2 }
    }

    pub fn from_polar(r: f64, phi: f64) -> Self {
        Self {
            y1: r * phi.cos(),
            y2: r * phi.sin(),
        }
    }

    pub fn radius(&self) -> f64 {
        self.y1.hypot(self.y2)
    }

    pub fn angle(&self) -> f64 {
        self.y2.atan2(self.y1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanarForm {
    /// Harmonic term plus the two `N`-term barrier sums.
    General,
    /// The BC2 potential, defined for `N = 2`.
    Bc2,
    /// The planar Smorodinsky-Winternitz potential, defined for `N = 1`.
    Sw,
}

impl PlanarForm {
    fn name(&self) -> &'static str {
        match self {
            PlanarForm::General => "General",
            PlanarForm::Bc2 => "BC2",
            PlanarForm::Sw => "SW",
        }
    }
}

/// Barrier part of the general planar potential,
/// `sum_k G2/(y1 c_k + y2 s_k)² + sum_l G1/(y1 s_l - y2 c_l)²` with `(c_k, s_k)` at angle `2k pi/N`.
pub fn planar_singular_part(params: &ModelParams, p: PlanarPoint) -> Result<f64> {
    let n = params.n();
    let c = params.couplings();
    let (g1s, g2s) = (c.strength1(), c.strength2());
    let mut v = 0.0;
    for k in 0..params.n_order() {
        let (s_k, c_k) = (TAU * f64::from(k) / n).sin_cos();
        v += inverse_square(g2s, p.y1 * c_k + p.y2 * s_k)?;
        v += inverse_square(g1s, p.y1 * s_k - p.y2 * c_k)?;
    }
    Ok(v)
}

pub fn planar_potential(params: &ModelParams, p: PlanarPoint, form: PlanarForm) -> Result<f64> {
    let w2 = params.omega().powi(2);
    let harmonic = 0.5 * w2 * (p.y1 * p.y1 + p.y2 * p.y2);
    let c = params.couplings();
    let (g1s, g2s) = (c.strength1(), c.strength2());
    let require = |n: u32| {
        if params.n_order() == n {
            Ok(())
        } else {
            Err(Error::FormMismatch {
                form: form.name(),
                reason: format!("N = {} (needs N = {n})", params.n_order()),
            })
        }
    };
    match form {
        PlanarForm::General => Ok(harmonic + planar_singular_part(params, p)?),
        PlanarForm::Sw => {
            require(1)?;
            // g1 is the barrier at y2 = 0, matching the polar convention y1 = r cos phi
            Ok(harmonic + inverse_square(g1s, p.y2)? + inverse_square(g2s, p.y1)?)
        }
        PlanarForm::Bc2 => {
            require(2)?;
            Ok(harmonic
                + inverse_square(g1s, p.y1)?
                + inverse_square(g1s, p.y2)?
                + inverse_square(g2s, p.y2 - p.y1)?
                + inverse_square(g2s, p.y2 + p.y1)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angular::{angular_potential, PotentialForm};

    #[test]
    fn sw_point() {
        let p = ModelParams::from_values(1, 2.0, 2.0, 1.0).unwrap();
        let v = planar_potential(&p, PlanarPoint::new(1.0, 1.0), PlanarForm::General).unwrap();
        assert!((v - 5.0).abs() < 1e-14);
        let s = planar_potential(&p, PlanarPoint::new(1.0, 1.0), PlanarForm::Sw).unwrap();
        assert!((s - 5.0).abs() < 1e-14);
    }

    #[test]
    fn n2_general_is_axis_only() {
        // N = 2 doubles each axis barrier: 2 G2 / y1² + 2 G1 / y2²
        let p = ModelParams::from_values(2, 2.0, 2.0, 1e-300).unwrap();
        let q = PlanarPoint::new(1.0, 2.0);
        let v = planar_potential(&p, q, PlanarForm::General).unwrap();
        assert!((v - 5.0).abs() < 1e-13, "{v}");
        let bc2 = planar_potential(&p, q, PlanarForm::Bc2).unwrap();
        assert!((bc2 - (2.0 + 0.5 + 2.0 + 2.0 / 9.0)).abs() < 1e-13, "{bc2}");
    }

    #[test]
    fn form_mismatch() {
        let p = ModelParams::from_values(3, 2.0, 2.0, 1.0).unwrap();
        let q = PlanarPoint::new(1.0, 0.3);
        assert!(matches!(
            planar_potential(&p, q, PlanarForm::Bc2),
            Err(Error::FormMismatch { .. })
        ));
        assert!(matches!(
            planar_potential(&p, q, PlanarForm::Sw),
            Err(Error::FormMismatch { .. })
        ));
    }

    #[test]
    fn singular_line_guard() {
        let p = ModelParams::from_values(1, 2.0, 2.0, 1.0).unwrap();
        let err =
            planar_potential(&p, PlanarPoint::new(1.0, 1e-12), PlanarForm::General).unwrap_err();
        assert!(matches!(err, Error::NearSingularLine { .. }));
        // a family with g = 1 has no barrier
        let free = ModelParams::from_values(1, 1.0, 2.0, 1.0).unwrap();
        assert!(planar_potential(&free, PlanarPoint::new(1.0, 0.0), PlanarForm::General).is_ok());
    }

    #[test]
    fn matches_polar_form() {
        let p = ModelParams::from_values(5, 1.5, 2.5, 0.8).unwrap();
        for i in 0..200 {
            let r = 0.3 + 0.01 * i as f64;
            let phi = 0.0137 + 0.0311 * i as f64;
            let q = PlanarPoint::from_polar(r, phi);
            let cart = planar_potential(&p, q, PlanarForm::General).unwrap();
            let polar = angular_potential(&p, phi, PotentialForm::DirectSum).unwrap() / (r * r)
                + 0.32 * r * r;
            assert!(((cart - polar) / polar).abs() < 1e-12, "{cart} vs {polar}");
        }
    }
}
