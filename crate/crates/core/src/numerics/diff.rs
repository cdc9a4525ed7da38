/// Sixth-order central difference for `f''(x)` on the seven points `x + j h, |j| <= 3`.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    const C0: f64 = -49.0 / 18.0;
    const C1: f64 = 3.0 / 2.0;
    const C2: f64 = -3.0 / 20.0;
    const C3: f64 = 1.0 / 90.0;
    let s1 = f(x + h) + f(x - h);
    let s2 = f(x + 2.0 * h) + f(x - 2.0 * h);
    let s3 = f(x + 3.0 * h) + f(x - 3.0 * h);
    (C0 * f(x) + C1 * s1 + C2 * s2 + C3 * s3) / (h * h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_is_exact() {
        for x in [-2.0, 0.0, 0.3, 5.0] {
            assert!((second_derivative(|t| t * t, x, 1e-2) - 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn sine() {
        let d2 = second_derivative(f64::sin, 0.4, 1e-2);
        assert!((d2 + 0.4f64.sin()).abs() < 1e-10);
    }

    #[test]
    fn inverse_sine_squared() {
        // d²/dx² sin^-2 x = (4 cos²x + 2) / sin^4 x
        let x = 1.0f64;
        let exact = (4.0 * x.cos().powi(2) + 2.0) / x.sin().powi(4);
        let d2 = second_derivative(|t| 1.0 / t.sin().powi(2), x, 1e-3);
        assert!(((d2 - exact) / exact).abs() < 1e-8, "{d2} vs {exact}");
    }
}
