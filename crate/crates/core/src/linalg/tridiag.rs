//! Eigenvalues-only path for large Hermitian matrices: Householder reduction
//! to real symmetric tridiagonal form followed by implicit QL with Wilkinson
//! shifts. Matrices with an exactly zero imaginary part take a real-arithmetic
//! route that is about four times cheaper.

use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};

use num_complex::Complex64;

use super::matrix::HermitianMatrix;
use crate::error::{Error, Result};

const QL_MAX_ITER: usize = 60;

trait Scalar: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + AddAssign + SubAssign {
    fn conj(self) -> Self;
    fn abs2(self) -> f64;
    fn re(self) -> f64;
    fn real(x: f64) -> Self;
    fn scale(self, x: f64) -> Self;
    /// `z / |z|`, or 1 for zero.
    fn unit(self) -> Self;
}

impl Scalar for f64 {
    #[inline]
    fn conj(self) -> Self {
        self
    }
    #[inline]
    fn abs2(self) -> f64 {
        self * self
    }
    #[inline]
    fn re(self) -> f64 {
        self
    }
    #[inline]
    fn real(x: f64) -> Self {
        x
    }
    #[inline]
    fn scale(self, x: f64) -> Self {
        self * x
    }
    #[inline]
    fn unit(self) -> Self {
        if self < 0.0 {
            -1.0
        } else {
            1.0
        }
    }
}

impl Scalar for Complex64 {
    #[inline]
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    #[inline]
    fn abs2(self) -> f64 {
        self.norm_sqr()
    }
    #[inline]
    fn re(self) -> f64 {
        self.re
    }
    #[inline]
    fn real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    #[inline]
    fn scale(self, x: f64) -> Self {
        self * x
    }
    #[inline]
    fn unit(self) -> Self {
        let r = self.norm();
        if r == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            self / r
        }
    }
}

/// Reduces the full Hermitian matrix `a` (row-major, overwritten) to a real
/// tridiagonal matrix with diagonal `d` and sub-diagonal `e` (`e[n-1] = 0`).
fn householder_tridiagonalize<S: Scalar>(a: &mut [S], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut v = vec![S::real(0.0); n];
    let mut p = vec![S::real(0.0); n];

    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let norm2: f64 = (lo..n).map(|i| a[i * n + k].abs2()).sum();
        if norm2 == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let norm = norm2.sqrt();
        let x0 = a[lo * n + k];
        let alpha = x0.unit().scale(-norm);
        for i in lo..n {
            v[i] = a[i * n + k];
        }
        v[lo] -= alpha;
        let vnorm2 = 2.0 * norm * (norm + x0.abs2().sqrt());
        let tau = 2.0 / vnorm2;
        e[k] = norm;

        // p = tau · A22 v, accumulated row by row (A22 is Hermitian, so
        // column j of A22 is the conjugate of row j).
        for pi in p[lo..n].iter_mut() {
            *pi = S::real(0.0);
        }
        for j in lo..n {
            let vj = v[j].scale(tau);
            let row = &a[j * n + lo..j * n + n];
            for (pi, &aji) in p[lo..n].iter_mut().zip(row) {
                *pi += aji.conj() * vj;
            }
        }
        let vp: f64 = (lo..n).map(|i| (v[i].conj() * p[i]).re()).sum();
        let kk = 0.5 * tau * vp;
        for i in lo..n {
            p[i] -= v[i].scale(kk);
        }
        // A22 ← A22 − v p† − p v†
        for i in lo..n {
            let vi = v[i];
            let pi = p[i];
            let row = &mut a[i * n + lo..i * n + n];
            for ((aij, &vj), &pj) in row.iter_mut().zip(&v[lo..n]).zip(&p[lo..n]) {
                *aij -= vi * pj.conj() + pi * vj.conj();
            }
        }
    }
    for (i, di) in d.iter_mut().enumerate() {
        *di = a[i * n + i].re();
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + (n - 2)].abs2().sqrt();
    }
    (d, e)
}

/// Implicit QL on a symmetric tridiagonal matrix; eigenvalues are left in `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    // Off-diagonals below ε‖T‖ are rounding noise from the reduction; without
    // this floor, blocks of near-zero eigenvalues may never deflate.
    let floor = (0..n).fold(0.0f64, |m, i| m.max(d[i].abs() + e[i].abs()));
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = (d[m].abs() + d[m + 1].abs()).max(floor);
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_ITER {
                return Err(Error::NonConvergence {
                    sweeps: iter,
                    residual: e[l].abs(),
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + if g >= 0.0 { r } else { -r });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a Hermitian matrix in descending order, without eigenvectors.
pub fn eigenvalues_hermitian(h: &HermitianMatrix) -> Result<Vec<f64>> {
    let n = h.dim();
    let m = h.as_matrix();
    let (mut d, mut e) = if m.is_real() {
        let mut a: Vec<f64> = m.as_slice().iter().map(|z| z.re).collect();
        householder_tridiagonalize(&mut a, n)
    } else {
        let mut a = m.as_slice().to_vec();
        householder_tridiagonalize(&mut a, n)
    };
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(|a, b| b.total_cmp(a));
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::jacobi::eig_hermitian;
    use crate::linalg::matrix::ComplexMatrix;

    fn lcg_matrix(n: usize, seed: u64, complex: bool) -> HermitianMatrix {
        let mut state = seed;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let data = (0..n * n)
            .map(|_| Complex64::new(next(), if complex { next() } else { 0.0 }))
            .collect();
        HermitianMatrix::new(ComplexMatrix::new(n, n, data).unwrap()).unwrap()
    }

    #[test]
    fn matches_jacobi_on_random_matrices() {
        for (n, complex) in [(1, false), (2, true), (5, false), (9, true), (24, true), (31, false)] {
            let h = lcg_matrix(n, n as u64 + 7, complex);
            let fast = eigenvalues_hermitian(&h).unwrap();
            let slow = eig_hermitian(&h).unwrap().eigenvalues;
            for (a, b) in fast.iter().zip(&slow) {
                assert!((a - b).abs() < 1e-12, "n={n}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn diagonal_and_zero() {
        let h = HermitianMatrix::from_real_diagonal(&[2.0, -3.0, 0.5]);
        assert_eq!(eigenvalues_hermitian(&h).unwrap(), vec![2.0, 0.5, -3.0]);
        assert_eq!(eigenvalues_hermitian(&HermitianMatrix::zeros(4)).unwrap(), vec![0.0; 4]);
    }
}
