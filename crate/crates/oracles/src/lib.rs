//! Independent reference computations for tests. Nothing here calls into `angspec-core`.

/// Generalized binomial coefficient `C(z, k)` for real `z`.
pub fn binomial(z: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (z - f64::from(i)) / f64::from(i + 1))
}

/// Rising factorial `(z)_k`.
pub fn pochhammer(z: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (z + f64::from(i)))
}

/// Jacobi polynomial from its explicit finite sum
/// `sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`.
pub fn jacobi_series(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let lo = 0.5 * (x - 1.0);
    let hi = 0.5 * (x + 1.0);
    (0..=n)
        .map(|s| {
            binomial(nf + a, n - s)
                * binomial(nf + b, s)
                * lo.powi(s as i32)
                * hi.powi((n - s) as i32)
        })
        .sum()
}

/// `C_n^lambda = (2 lambda)_n / (lambda + 1/2)_n * P_n^(lambda-1/2, lambda-1/2)`.
pub fn gegenbauer_from_jacobi_ratio(n: u32, lambda: f64) -> f64 {
    pochhammer(2.0 * lambda, n) / pochhammer(lambda + 0.5, n)
}

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations, ascending.
pub fn dense_symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>().max(1e-300);
        if off <= 1e-30 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Dense matrix of a symmetric tridiagonal one.
pub fn dense_from_tridiagonal(diag: &[f64], offdiag: &[f64]) -> Vec<Vec<f64>> {
    let n = diag.len();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        a[i][i] = diag[i];
        if i + 1 < n {
            a[i][i + 1] = offdiag[i];
            a[i + 1][i] = offdiag[i];
        }
    }
    a
}

/// Sign of `det(A - lambda I)` by dense LU with partial pivoting (the characteristic polynomial).
pub fn char_poly_sign(a: &[Vec<f64>], lambda: f64) -> f64 {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let mut sign = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            sign = -sign;
        }
        sign *= m[col][col].signum();
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    sign
}

/// Composite Simpson rule on `intervals` (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n)
        .map(|i| f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 })
        .sum();
    (f(a) + f(b) + inner) * h / 3.0
}

/// Least-squares slope of `log y` against `log x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_series() {
        let x: f64 = 0.9;
        let p5 = (63.0 * x.powi(5) - 70.0 * x.powi(3) + 15.0 * x) / 8.0;
        assert!((jacobi_series(5, 0.0, 0.0, x) - p5).abs() < 1e-14);
    }

    #[test]
    fn jacobi_rotation_eigenvalues() {
        let a = dense_from_tridiagonal(&[2.0; 3], &[-1.0; 2]);
        let ev = dense_symmetric_eigenvalues(a);
        let s = 2f64.sqrt();
        for (x, y) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((x - y).abs() < 1e-13);
        }
    }

    #[test]
    fn char_poly_changes_sign_at_root() {
        let a = dense_from_tridiagonal(&[2.0; 3], &[-1.0; 2]);
        assert_eq!(char_poly_sign(&a, 1.9) * char_poly_sign(&a, 2.1), -1.0);
    }
}
