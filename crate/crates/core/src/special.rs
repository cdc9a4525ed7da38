//! Jacobi and Gegenbauer polynomials by ascending three-term recurrence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degree and weight exponents of `P_n^(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JacobiParams {
    degree: u32,
    alpha: f64,
    beta: f64,
}

impl JacobiParams {
    pub fn new(degree: u32, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "Jacobi exponents must exceed -1, got alpha = {alpha}, beta = {beta}"
            )));
        }
        Ok(Self {
            degree,
            alpha,
            beta,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

pub fn jacobi_p(p: JacobiParams, x: f64) -> f64 {
    jacobi_raw(p.degree, p.alpha, p.beta, x)
}

fn jacobi_raw(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        let c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        let p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `d/dx P_n^(a,b) = (n + a + b + 1)/2 * P_{n-1}^(a+1,b+1)`.
pub fn jacobi_p_derivative(p: JacobiParams, x: f64) -> f64 {
    if p.degree == 0 {
        return 0.0;
    }
    let n = f64::from(p.degree);
    0.5 * (n + p.alpha + p.beta + 1.0) * jacobi_raw(p.degree - 1, p.alpha + 1.0, p.beta + 1.0, x)
}

/// Gegenbauer polynomial `C_n^lambda(x)`; `lambda > -1/2`, `lambda != 0`.
pub fn gegenbauer_c(n: u32, lambda: f64, x: f64) -> Result<f64> {
    if !(lambda > -0.5) || lambda == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "Gegenbauer parameter must satisfy lambda > -1/2 and lambda != 0, got {lambda}"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut c0 = 1.0;
    let mut c1 = 2.0 * lambda * x;
    for k in 2..=n {
        let k = f64::from(k);
        let c2 = (2.0 * x * (k + lambda - 1.0) * c1 - (k + 2.0 * lambda - 2.0) * c0) / k;
        c0 = c1;
        c1 = c2;
    }
    Ok(c1)
}
