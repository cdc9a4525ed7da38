//! Model parameters, the N-class trichotomy and the angular singularity lattice.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum distance (rad, or length units for linear forms) at which a potential is evaluated.
pub const SINGULAR_GUARD: f64 = 1e-10;

/// Coincident singularities closer than this are merged.
pub const DEDUP_TOLERANCE: f64 = 1e-12;

/// Coupling pair `(g1, g2)`. Each `g >= 1`, so the barrier strength `g(g-1)` is non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Couplings {
    g1: f64,
    g2: f64,
}

impl Couplings {
    pub fn new(g1: f64, g2: f64) -> Result<Self> {
        for (name, g) in [("g1", g1), ("g2", g2)] {
            if !g.is_finite() || g < 1.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} = {g} must be a finite value >= 1"
                )));
            }
        }
        Ok(Self { g1, g2 })
    }

    pub fn g1(&self) -> f64 {
        self.g1
    }

    pub fn g2(&self) -> f64 {
        self.g2
    }

    /// Strength `g1(g1-1)` of the sine-family barriers.
    pub fn strength1(&self) -> f64 {
        self.g1 * (self.g1 - 1.0)
    }

    /// Strength `g2(g2-1)` of the cosine-family barriers.
    pub fn strength2(&self) -> f64 {
        self.g2 * (self.g2 - 1.0)
    }

    pub fn swapped(&self) -> Self {
        Self {
            g1: self.g2,
            g2: self.g1,
        }
    }
}

/// Residue class of the order `N` that selects the reduced potential and eigenvalue branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NClass {
    Odd,
    TwoMod4,
    ZeroMod4,
}

impl NClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            NClass::Odd => "odd",
            NClass::TwoMod4 => "2mod4",
            NClass::ZeroMod4 => "0mod4",
        }
    }
}

pub fn classify(n_order: u32) -> Result<NClass> {
    match n_order {
        0 => Err(Error::InvalidParameter("N must be >= 1".into())),
        n if n % 2 == 1 => Ok(NClass::Odd),
        n if n % 4 == 2 => Ok(NClass::TwoMod4),
        _ => Ok(NClass::ZeroMod4),
    }
}

/// Identifies one member of the model family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    n_order: u32,
    couplings: Couplings,
    omega: f64,
}

impl ModelParams {
    pub fn new(n_order: u32, couplings: Couplings, omega: f64) -> Result<Self> {
        if n_order == 0 {
            return Err(Error::InvalidParameter("N must be >= 1".into()));
        }
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "omega = {omega} must be > 0"
            )));
        }
        Ok(Self {
            n_order,
            couplings,
            omega,
        })
    }

    /// Shorthand for tests and examples: validates everything in one call.
    pub fn from_values(n_order: u32, g1: f64, g2: f64, omega: f64) -> Result<Self> {
        Self::new(n_order, Couplings::new(g1, g2)?, omega)
    }

    pub fn n_order(&self) -> u32 {
        self.n_order
    }

    pub fn n(&self) -> f64 {
        f64::from(self.n_order)
    }

    pub fn couplings(&self) -> Couplings {
        self.couplings
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn n_class(&self) -> NClass {
        // n_order >= 1 is enforced by the constructor
        classify(self.n_order).expect("validated order")
    }

    pub fn with_couplings(&self, couplings: Couplings) -> Self {
        Self { couplings, ..*self }
    }

    pub fn with_omega(&self, omega: f64) -> Result<Self> {
        Self::new(self.n_order, self.couplings, omega)
    }
}

/// One fundamental angular interval, adjacent to `0+`, together with the map `theta = scale * phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DomainCell {
    pub phi_lo: f64,
    pub phi_hi: f64,
    pub scale: f64,
    pub theta_hi: f64,
    pub n_class: NClass,
}

impl DomainCell {
    pub fn length(&self) -> f64 {
        self.phi_hi - self.phi_lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.phi_lo + self.phi_hi)
    }

    /// Strict containment in the open cell.
    pub fn contains(&self, phi: f64) -> bool {
        phi > self.phi_lo && phi < self.phi_hi
    }

    pub fn theta(&self, phi: f64) -> f64 {
        self.scale * (phi - self.phi_lo)
    }

    pub fn distance_to_edge(&self, phi: f64) -> f64 {
        (phi - self.phi_lo).min(self.phi_hi - phi)
    }
}

pub fn domain_cell(params: &ModelParams) -> DomainCell {
    let n = params.n();
    let n_class = params.n_class();
    let (phi_hi, scale, theta_hi) = match n_class {
        NClass::Odd => (PI / (2.0 * n), n, FRAC_PI_2),
        NClass::TwoMod4 => (PI / n, 0.5 * n, FRAC_PI_2),
        NClass::ZeroMod4 => (TAU / n, 0.5 * n, PI),
    };
    DomainCell {
        phi_lo: 0.0,
        phi_hi,
        scale,
        theta_hi,
        n_class,
    }
}

/// Distance from `x` to the nearest point of the lattice `offset + period * Z`.
pub fn lattice_distance(x: f64, offset: f64, period: f64) -> f64 {
    let r = (x - offset).rem_euclid(period);
    r.min(period - r)
}

/// Nearest point of `offset + period * Z` to `x`.
pub fn lattice_nearest(x: f64, offset: f64, period: f64) -> f64 {
    offset + ((x - offset) / period).round() * period
}

/// Angles in `[0, 2pi)` where a term of the angular double sum diverges.
///
/// The sine family `1/sin^2(phi - 2k pi/N)` vanishes at `2k pi/N + j pi`, the cosine family
/// at `2k pi/N + pi/2 + j pi`. A family with `g = 1` has zero strength and contributes nothing.
pub fn singularities(params: &ModelParams) -> Vec<f64> {
    let n = params.n_order;
    let c = params.couplings;
    let mut offsets = Vec::new();
    if c.g1 > 1.0 {
        offsets.push(0.0);
    }
    if c.g2 > 1.0 {
        offsets.push(FRAC_PI_2);
    }
    let mut points = Vec::with_capacity(4 * n as usize);
    for offset in offsets {
        for k in 0..n {
            for j in 0..2 {
                let raw = offset + TAU * f64::from(k) / f64::from(n) + PI * f64::from(j);
                let mut p = raw.rem_euclid(TAU);
                if TAU - p < DEDUP_TOLERANCE {
                    p = 0.0;
                }
                points.push(p);
            }
        }
    }
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() < DEDUP_TOLERANCE);
    points
}
