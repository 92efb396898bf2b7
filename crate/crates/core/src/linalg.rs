//! Small complex-vector helpers shared by the model and estimator modules.
//!
//! Matrices are stored column-major as flat `Vec<Complex64>` (columns are
//! model vectors, so column access dominates).

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

/// Inner product `a^H b` (conjugate-linear in the first argument).
pub fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Squared Euclidean norm.
pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

/// Euclidean norm.
pub fn norm(v: &[Complex64]) -> f64 {
    libm::sqrt(norm_sq(v))
}

/// `y <- y + alpha * x`.
pub fn axpy(alpha: Complex64, x: &[Complex64], y: &mut [Complex64]) {
    debug_assert_eq!(x.len(), y.len());
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Column `j` of a column-major `rows x cols` matrix.
pub fn column(data: &[Complex64], rows: usize, j: usize) -> &[Complex64] {
    &data[j * rows..(j + 1) * rows]
}

/// `out = A x` for column-major `A` (`rows x cols`), skipping zero entries of
/// `x` (sparse iterates keep this cheap inside the solvers).
pub fn matvec(data: &[Complex64], rows: usize, x: &[Complex64], out: &mut [Complex64]) {
    out.fill(Complex64::ZERO);
    for (j, &xj) in x.iter().enumerate() {
        if xj != Complex64::ZERO {
            axpy(xj, column(data, rows, j), out);
        }
    }
}

/// `out = A^H v` for column-major `A`.
pub fn matvec_adjoint(data: &[Complex64], rows: usize, v: &[Complex64], out: &mut [Complex64]) {
    for (j, o) in out.iter_mut().enumerate() {
        *o = cdot(column(data, rows, j), v);
    }
}

/// Solve the Hermitian positive-definite system `G x = b` in place via
/// unpivoted Cholesky. Returns `false` (leaving `x` unspecified) when a pivot
/// falls below `tol`, which the callers treat as a rank-deficient active set.
pub fn solve_hermitian(g: &mut [Complex64], n: usize, b: &mut [Complex64], tol: f64) -> bool {
    debug_assert_eq!(g.len(), n * n);
    debug_assert_eq!(b.len(), n);
    // Factor G = L L^H, column-major, lower triangle.
    for j in 0..n {
        let mut diag = g[j * n + j].re;
        for k in 0..j {
            diag -= g[k * n + j].norm_sqr();
        }
        if diag <= tol {
            return false;
        }
        let ljj = libm::sqrt(diag);
        g[j * n + j] = Complex64::new(ljj, 0.0);
        for i in (j + 1)..n {
            let mut s = g[j * n + i];
            for k in 0..j {
                s -= g[k * n + i] * g[k * n + j].conj();
            }
            g[j * n + i] = s / ljj;
        }
    }
    // Forward substitution L y = b.
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= g[k * n + i] * b[k];
        }
        b[i] = s / g[i * n + i].re;
    }
    // Back substitution L^H x = y.
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in (i + 1)..n {
            s -= g[i * n + k].conj() * b[k];
        }
        b[i] = s / g[i * n + i].re;
    }
    true
}

/// Largest eigenvalue of `A^H A` (squared spectral norm of column-major `A`)
/// by power iteration on the Gram operator.
pub fn gram_spectral_bound(
    data: &[Complex64],
    rows: usize,
    cols: usize,
    max_iter: usize,
    tol: f64,
) -> f64 {
    if cols == 0 || rows == 0 {
        return 0.0;
    }
    // Deterministic start with energy in every column direction.
    let mut w: Vec<Complex64> = (0..cols)
        .map(|j| Complex64::new(1.0, (j as f64 + 1.0) / cols as f64))
        .collect();
    let mut av = vec![Complex64::ZERO; rows];
    let mut lambda = 0.0_f64;
    for _ in 0..max_iter {
        matvec(data, rows, &w, &mut av);
        matvec_adjoint(data, rows, &av, &mut w);
        let new_lambda = norm(&w);
        if new_lambda == 0.0 {
            return 0.0;
        }
        for z in w.iter_mut() {
            *z /= new_lambda;
        }
        if (new_lambda - lambda).abs() <= tol * new_lambda {
            return new_lambda;
        }
        lambda = new_lambda;
    }
    lambda
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cholesky_solves_small_system() {
        // G = A^H A for A = [[1, 1], [0, 2], [1, 0]] with a complex twist.
        let a = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 0.0),
        ];
        let rows = 3;
        let mut g = vec![Complex64::ZERO; 4];
        for j in 0..2 {
            for i in 0..2 {
                g[j * 2 + i] = cdot(column(&a, rows, i), column(&a, rows, j));
            }
        }
        let x_true = [Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.25)];
        let mut b = [Complex64::ZERO; 2];
        for i in 0..2 {
            b[i] = g[i] * x_true[0] + g[2 + i] * x_true[1];
        }
        assert!(solve_hermitian(&mut g, 2, &mut b, 1e-12));
        for i in 0..2 {
            assert_relative_eq!(b[i].re, x_true[i].re, epsilon = 1e-10);
            assert_relative_eq!(b[i].im, x_true[i].im, epsilon = 1e-10);
        }
    }

    #[test]
    fn cholesky_rejects_singular() {
        // Two identical columns => singular Gram.
        let mut g = vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ];
        let mut b = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        assert!(!solve_hermitian(&mut g, 2, &mut b, 1e-12));
    }

    #[test]
    fn power_iteration_matches_diagonal() {
        // Diagonal matrix: spectral bound of A^H A is the largest |d|^2.
        let rows = 3;
        let mut a = vec![Complex64::ZERO; 9];
        a[0] = Complex64::new(0.5, 0.0);
        a[rows + 1] = Complex64::new(0.0, 3.0);
        a[2 * rows + 2] = Complex64::new(-1.5, 0.0);
        let l = gram_spectral_bound(&a, rows, 3, 200, 1e-12);
        assert_relative_eq!(l, 9.0, epsilon = 1e-9);
    }
}
