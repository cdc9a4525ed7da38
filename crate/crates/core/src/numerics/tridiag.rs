//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.

use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 400;

/// Symmetric tridiagonal matrix stored as its diagonal and off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidParameter(
                "tridiagonal matrix must have n >= 1".into(),
            ));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 {
                self.offdiag[i - 1].abs()
            } else {
                0.0
            };
            let right = if i + 1 < n {
                self.offdiag[i].abs()
            } else {
                0.0
            };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    fn pivot_floor(&self) -> f64 {
        let emax = self.offdiag.iter().fold(1.0f64, |m, e| m.max(e * e));
        f64::MIN_POSITIVE * emax
    }
}

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count(t: &Tridiagonal, x: f64) -> usize {
    sturm_count_with_floor(t, x, t.pivot_floor())
}

fn sturm_count_with_floor(t: &Tridiagonal, x: f64, floor: f64) -> usize {
    let mut count = 0;
    let mut q = t.diag[0] - x;
    for i in 0..t.diag.len() {
        if i > 0 {
            let e = t.offdiag[i - 1];
            q = t.diag[i] - x - e * e / q;
        }
        if q.abs() < floor {
            q = -floor;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues in ascending order.
///
/// Each eigenvalue is bisected on the Sturm count until its bracket is narrower than
/// `max(1e-12, 1e-12 |lambda|)` or cannot be split further in floating point.
pub fn tridiag_eigen(t: &Tridiagonal, k: usize) -> Result<Vec<f64>> {
    let n = t.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "requested {k} eigenvalues of a {n}x{n} matrix"
        )));
    }
    let floor = t.pivot_floor();
    let (glo, ghi) = t.gershgorin();
    let pad = 1e-12 * glo.abs().max(ghi.abs()).max(1.0);
    let (glo, ghi) = (glo - pad, ghi + pad);

    let mut out = Vec::with_capacity(k);
    let mut lo_start = glo;
    for index in 0..k {
        let mut lo = lo_start;
        let mut hi = ghi;
        let mut iterations = 0;
        loop {
            let width = hi - lo;
            let mid = 0.5 * (lo + hi);
            if width <= 1e-12f64.max(1e-12 * mid.abs()) || mid <= lo || mid >= hi {
                break;
            }
            if iterations == MAX_BISECTIONS {
                return Err(Error::NoConvergence {
                    index,
                    lo,
                    hi,
                    iterations,
                });
            }
            if sturm_count_with_floor(t, mid, floor) > index {
                hi = mid;
            } else {
                lo = mid;
            }
            iterations += 1;
        }
        let value = 0.5 * (lo + hi);
        lo_start = lo;
        out.push(value);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_stencil() {
        let t = Tridiagonal::new(vec![2.0; 3], vec![-1.0; 2]).unwrap();
        let ev = tridiag_eigen(&t, 3).unwrap();
        let s = 2f64.sqrt();
        for (a, b) in ev.iter().zip([2.0 - s, 2.0, 2.0 + s]) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn one_by_one() {
        let t = Tridiagonal::new(vec![5.0], vec![]).unwrap();
        assert_eq!(tridiag_eigen(&t, 1).unwrap().len(), 1);
        assert!((tridiag_eigen(&t, 1).unwrap()[0] - 5.0).abs() < 1e-11);
    }

    #[test]
    fn rejects_bad_shapes_and_counts() {
        assert!(Tridiagonal::new(vec![], vec![]).is_err());
        assert!(Tridiagonal::new(vec![1.0, 2.0], vec![]).is_err());
        let t = Tridiagonal::new(vec![1.0, 2.0], vec![0.5]).unwrap();
        assert!(tridiag_eigen(&t, 0).is_err());
        assert!(tridiag_eigen(&t, 3).is_err());
    }

    #[test]
    fn zero_offdiagonal_gives_sorted_diagonal() {
        let t = Tridiagonal::new(vec![3.0, -1.0, 7.0, 0.5], vec![0.0; 3]).unwrap();
        let ev = tridiag_eigen(&t, 4).unwrap();
        for (a, b) in ev.iter().zip([-1.0, 0.5, 3.0, 7.0]) {
            assert!((a - b).abs() < 1e-11);
        }
    }

    #[test]
    fn large_diagonal_entries() {
        // Dirichlet Laplacian on (0, pi) plus a huge spike at one node.
        let n = 999;
        let h = std::f64::consts::PI / (n + 1) as f64;
        let mut d = vec![2.0 / (h * h); n];
        d[0] += 1e12;
        let t = Tridiagonal::new(d, vec![-1.0 / (h * h); n - 1]).unwrap();
        let ev = tridiag_eigen(&t, 3).unwrap();
        assert!(ev.windows(2).all(|w| w[0] <= w[1]));
        assert!(ev[0] > 0.9 && ev[0] < 1.1, "{}", ev[0]);
    }
}
