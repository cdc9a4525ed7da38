//! Sums of inverse squared sines and cosines over `N` equally spaced shifts, their closed
//! forms, and the product-of-sines formula behind them.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{classify, lattice_distance, lattice_nearest, NClass, SINGULAR_GUARD};

/// Rejection attempts allowed per sample before giving up.
const MAX_REJECTIONS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityKind {
    /// `sum_k 1/sin^2(phi - 2k pi/N)`
    SinSum,
    /// `sum_k 1/cos^2(phi - 2k pi/N)`
    CosSum,
    /// `1/sin^2 phi + 1/cos^2 phi = 4/sin^2 2phi`
    CombinedPair,
    /// Four quarter-turn shifts of `1/sin^2`, equal to `8/sin^2 2phi`
    FourTerm,
    /// `prod_k sin(phi - 2k pi/N)`
    SineProduct,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::SinSum,
        IdentityKind::CosSum,
        IdentityKind::CombinedPair,
        IdentityKind::FourTerm,
        IdentityKind::SineProduct,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityKind::SinSum => "sin",
            IdentityKind::CosSum => "cos",
            IdentityKind::CombinedPair => "pair",
            IdentityKind::FourTerm => "four",
            IdentityKind::SineProduct => "product",
        }
    }

    /// Singular lattice `offset + period * Z`, if any.
    fn singular_lattice(&self, n_order: u32) -> Option<(f64, f64)> {
        let n = f64::from(n_order);
        match self {
            // 2k pi/N + j pi; for odd N this is the pi/N lattice, for even N the 2pi/N one
            IdentityKind::SinSum => Some((0.0, if n_order % 2 == 1 { PI / n } else { TAU / n })),
            IdentityKind::CosSum => {
                Some((FRAC_PI_2, if n_order % 2 == 1 { PI / n } else { TAU / n }))
            }
            IdentityKind::CombinedPair | IdentityKind::FourTerm => Some((0.0, FRAC_PI_2)),
            IdentityKind::SineProduct => None,
        }
    }

    /// Distance from `phi` to the nearest singularity and that singularity.
    pub fn nearest_singularity(&self, n_order: u32, phi: f64) -> Option<(f64, f64)> {
        self.singular_lattice(n_order).map(|(offset, period)| {
            (
                lattice_distance(phi, offset, period),
                lattice_nearest(phi, offset, period),
            )
        })
    }
}

impl std::str::FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity kind '{s}'")))
    }
}

/// Acceptable relative residual: the product closes in a handful of roundings, the
/// sums accumulate `N` terms of size up to `1/min_dist²`.
pub fn identity_tolerance(kind: IdentityKind) -> f64 {
    match kind {
        IdentityKind::SineProduct => 1e-12,
        _ => 1e-9,
    }
}

/// Largest residual found for one `(kind, N)` pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub n_order: u32,
    pub samples: usize,
    pub min_singularity_distance: f64,
    pub max_relative_residual: f64,
    pub worst_point: f64,
}

fn shift(k: u32, n: f64) -> f64 {
    TAU * f64::from(k) / n
}

/// Literal left side and closed-form right side of one identity at `phi`.
pub fn identity_eval(kind: IdentityKind, n_order: u32, phi: f64) -> Result<(f64, f64)> {
    let class = classify(n_order)?;
    if let Some((distance, singularity)) = kind.nearest_singularity(n_order, phi) {
        if distance < SINGULAR_GUARD {
            return Err(Error::NearSingularity {
                phi,
                singularity,
                distance,
            });
        }
    }
    let n = f64::from(n_order);
    let pair = match kind {
        IdentityKind::SinSum => {
            let lhs = (0..n_order)
                .map(|k| (phi - shift(k, n)).sin().powi(-2))
                .sum();
            let rhs = match class {
                NClass::Odd => n * n / (n * phi).sin().powi(2),
                _ => n * n / (2.0 * (0.5 * n * phi).sin().powi(2)),
            };
            (lhs, rhs)
        }
        IdentityKind::CosSum => {
            let lhs = (0..n_order)
                .map(|k| (phi - shift(k, n)).cos().powi(-2))
                .sum();
            let rhs = match class {
                NClass::Odd => n * n / (n * phi).cos().powi(2),
                NClass::TwoMod4 => n * n / (2.0 * (0.5 * n * phi).cos().powi(2)),
                NClass::ZeroMod4 => n * n / (2.0 * (0.5 * n * phi).sin().powi(2)),
            };
            (lhs, rhs)
        }
        IdentityKind::CombinedPair => {
            let lhs = phi.sin().powi(-2) + phi.cos().powi(-2);
            (lhs, 4.0 / (2.0 * phi).sin().powi(2))
        }
        IdentityKind::FourTerm => {
            let lhs = (0..4)
                .map(|j| (phi - f64::from(j) * FRAC_PI_2).sin().powi(-2))
                .sum();
            (lhs, 8.0 / (2.0 * phi).sin().powi(2))
        }
        IdentityKind::SineProduct => sine_product(n_order, phi)?,
    };
    Ok(pair)
}

/// Direct product `prod_{k<N} sin(phi - 2k pi/N)` and its closed form.
pub fn sine_product(n_order: u32, phi: f64) -> Result<(f64, f64)> {
    let class = classify(n_order)?;
    let n = f64::from(n_order);
    let direct = (0..n_order).map(|k| (phi - shift(k, n)).sin()).product();
    let scale = 2f64.powi(1 - n_order as i32);
    let closed = match class {
        NClass::Odd => {
            // (-1)^((1-N)/2)
            let sign = if ((n_order - 1) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            sign * scale * (n * phi).sin()
        }
        _ => {
            // (-1)^(-N/2)
            let sign = if (n_order / 2) % 2 == 0 { 1.0 } else { -1.0 };
            sign * scale * (1.0 - (n * phi).cos())
        }
    };
    Ok((direct, closed))
}

/// `|lhs - rhs| / max(|rhs|, 1)`
pub fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    (lhs - rhs).abs() / rhs.abs().max(1.0)
}

/// Worst relative residual per `N <= n_max` over seeded rejection-sampled points.
///
/// The stream for order `N` is seeded with `seed + N`, so reports for different `n_max`
/// agree on their common prefix.
pub fn identity_report(
    kind: IdentityKind,
    n_max: u32,
    samples_per_n: usize,
    min_dist: f64,
    seed: u64,
) -> Result<Vec<IdentityReport>> {
    if n_max == 0 || samples_per_n == 0 {
        return Err(Error::InvalidParameter(
            "n_max and samples must be >= 1".into(),
        ));
    }
    if !(min_dist >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "min_dist = {min_dist} must be >= 0"
        )));
    }
    let guard = min_dist.max(SINGULAR_GUARD);
    (1..=n_max)
        .map(|n_order| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(u64::from(n_order)));
            let mut worst = (0.0f64, f64::NAN);
            for _ in 0..samples_per_n {
                let phi = draw_admissible(&mut rng, kind, n_order, guard)
                    .ok_or(Error::SamplingExhausted { n_order, min_dist })?;
                let (lhs, rhs) = identity_eval(kind, n_order, phi)?;
                let r = relative_residual(lhs, rhs);
                if r > worst.0 || worst.1.is_nan() {
                    worst = (r, phi);
                }
            }
            Ok(IdentityReport {
                kind,
                n_order,
                samples: samples_per_n,
                min_singularity_distance: min_dist,
                max_relative_residual: worst.0,
                worst_point: worst.1,
            })
        })
        .collect()
}

fn draw_admissible(
    rng: &mut ChaCha8Rng,
    kind: IdentityKind,
    n_order: u32,
    guard: f64,
) -> Option<f64> {
    (0..MAX_REJECTIONS).find_map(|_| {
        let phi = rng.gen_range(0.0..TAU);
        match kind.nearest_singularity(n_order, phi) {
            Some((d, _)) if d < guard => None,
            _ => Some(phi),
        }
    })
}
