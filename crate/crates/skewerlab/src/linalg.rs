//! Thin wrappers around nalgebra decompositions used by the residual
//! predicates: smallest singular values of small complex/real matrices and
//! one-dimensional nullspace extraction.

use nalgebra::{DMatrix, Matrix3};
use num_complex::Complex64;

pub type C = Complex64;

fn min_sv<I: Iterator<Item = f64>>(values: I) -> f64 {
    values.fold(f64::INFINITY, f64::min)
}

/// Smallest singular value of the 3×3 complex matrix with the given rows.
pub fn smallest_singular_value_c3(r1: [C; 3], r2: [C; 3], r3: [C; 3]) -> f64 {
    let m = Matrix3::new(r1[0], r1[1], r1[2], r2[0], r2[1], r2[2], r3[0], r3[1], r3[2]);
    match m.try_svd(false, false, f64::EPSILON, 1000) {
        Some(svd) => min_sv(svd.singular_values.iter().copied()),
        None => gram_smallest_sv(&DMatrix::from_fn(3, 3, |i, j| m[(i, j)])),
    }
}

/// Smallest singular value of a rectangular complex matrix (rows ≥ cols
/// gives the column-rank deficiency measure).
pub fn smallest_singular_value_cdyn(m: &DMatrix<C>) -> f64 {
    match m.clone().try_svd(false, false, f64::EPSILON, 1000) {
        Some(svd) => min_sv(svd.singular_values.iter().copied()),
        None => gram_smallest_sv(m),
    }
}

/// Smallest singular value of a rectangular real matrix.
pub fn smallest_singular_value_rdyn(m: &DMatrix<f64>) -> f64 {
    match m.clone().try_svd(false, false, f64::EPSILON, 1000) {
        Some(svd) => min_sv(svd.singular_values.iter().copied()),
        None => f64::NAN,
    }
}

/// All singular values of a real matrix, sorted descending.
pub fn singular_values_rdyn(m: &DMatrix<f64>) -> Vec<f64> {
    let svd = m
        .clone()
        .try_svd(false, false, f64::EPSILON, 1000)
        .expect("SVD of a finite real matrix");
    let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Right singular vector for the smallest singular value of a real matrix,
/// together with the two smallest singular values (for conditioning gates).
pub fn real_nullspace_vector(m: &DMatrix<f64>) -> (Vec<f64>, f64, f64) {
    let svd = m
        .clone()
        .try_svd(false, true, f64::EPSILON, 1000)
        .expect("SVD of a finite real matrix");
    let sv = &svd.singular_values;
    let mut idx: Vec<usize> = (0..sv.len()).collect();
    idx.sort_by(|&i, &j| sv[i].partial_cmp(&sv[j]).unwrap());
    let v_t = svd.v_t.expect("requested V");
    let null: Vec<f64> = v_t.row(idx[0]).iter().copied().collect();
    (null, sv[idx[0]], sv[idx[1]])
}

// Fallback via the Hermitian Gram matrix; loses half the digits but never
// fails to converge.
fn gram_smallest_sv(m: &DMatrix<C>) -> f64 {
    let gram = m.adjoint() * m;
    let eig = gram.symmetric_eigenvalues();
    min_sv(eig.iter().map(|l| l.re.max(0.0))).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_svd_resolves_tiny_singular_values() {
        // Rows: e1, e2, e1 + 1e-12·e3 — smallest singular value ≈ 1e-12,
        // far below what the Gram-matrix route could resolve.
        let z = C::new(0.0, 0.0);
        let one = C::new(1.0, 0.0);
        let eps = C::new(1e-12, 0.0);
        let sv = smallest_singular_value_c3([one, z, z], [z, one, z], [one, z, eps]);
        assert!((sv - 1e-12).abs() < 1e-14, "sv = {sv:e}");
    }

    #[test]
    fn nullspace_of_rank_deficient_real_matrix() {
        // Rows span the plane x + y + z = const direction (1,1,1)ᵀ kernel.
        let m = DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, 0.0, 1.0, -1.0, 1.0, 0.0, -1.0]);
        let (null, s_min, s_next) = real_nullspace_vector(&m);
        assert!(s_min < 1e-14);
        assert!(s_next > 0.5);
        let n = (null[0] * null[0] + null[1] * null[1] + null[2] * null[2]).sqrt();
        for k in 0..3 {
            assert!((null[k].abs() / n - 1.0 / 3.0f64.sqrt()).abs() < 1e-12);
        }
    }
}
