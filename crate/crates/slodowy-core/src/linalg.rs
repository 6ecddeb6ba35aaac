//! Shared dense complex linear algebra on top of `nalgebra`.

use crate::{C64, CMat, CVec, Error, Result};
use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

/// Frobenius inner product `tr(a^H b)`.
pub fn frob_inner(a: &CMat, b: &CMat) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

/// Frobenius norm.
pub fn frob_norm(a: &CMat) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// `n x n` zero matrix.
pub fn zeros(n: usize) -> CMat {
    CMat::zeros(n, n)
}

/// Identity matrix scaled by a complex factor.
pub fn eye(n: usize, scale: C64) -> CMat {
    CMat::identity(n, n) * scale
}

/// Eigenvalues of a general complex matrix.
pub fn eigenvalues(a: &CMat) -> Result<Vec<C64>> {
    if let Some(ev) = a.clone().eigenvalues() {
        return Ok(ev.iter().copied().collect());
    }
    // Schur with a generous iteration budget as fallback.
    if let Some(schur) = a.clone().try_schur(1e-13, 100_000) {
        let (_, t) = schur.unpack();
        return Ok((0..a.nrows()).map(|i| t[(i, i)]).collect());
    }
    Err(Error::LinearSolveFailed(format!(
        "eigenvalue iteration failed for a {0}x{0} matrix",
        a.nrows()
    )))
}

/// Spectral radius (largest eigenvalue magnitude).
pub fn spectral_radius(a: &CMat) -> Result<f64> {
    Ok(eigenvalues(a)?
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max))
}

/// Monic characteristic-polynomial coefficients by the Faddeev-LeVerrier
/// recurrence: returns `c` with `det(lambda I - a) = lambda^n + c[0]
/// lambda^(n-1) + ... + c[n-1]`.
///
/// The coefficients are polynomial in the entries, so central differences
/// through this function are smooth; eigenvalue-based routes are not.
pub fn charpoly_monic(a: &CMat) -> Vec<C64> {
    let n = a.nrows();
    let mut coeffs = Vec::with_capacity(n);
    let mut m = CMat::identity(n, n);
    for k in 1..=n {
        m = a * m;
        let ck = -m.trace() / C64::new(k as f64, 0.0);
        coeffs.push(ck);
        for i in 0..n {
            m[(i, i)] += ck;
        }
    }
    coeffs
}

/// Rank with an absolute singular-value threshold.
pub fn rank_with_tol(a: &CMat, tol: f64) -> usize {
    let sv = a.clone().singular_values();
    sv.iter().filter(|&&s| s > tol).count()
}

/// Orthonormal basis of the nullspace, using singular vectors whose
/// singular values fall below `tol` (absolute).
pub fn nullspace(a: &CMat, tol: f64) -> Vec<CVec> {
    let n = a.ncols();
    let svd = a.clone().svd(false, true);
    let vt = svd.v_t.expect("SVD with v_t requested");
    let mut basis = Vec::new();
    for i in 0..vt.nrows() {
        if svd.singular_values[i] <= tol {
            basis.push(vt.row(i).adjoint());
        }
    }
    // A wide input (fewer rows than columns) has additional exact kernel
    // directions beyond the thin SVD; square inputs are all we use.
    debug_assert!(a.nrows() >= n || !basis.is_empty() || rank_with_tol(a, tol) == n);
    basis
}

/// Minimum-norm least-squares solution of `a x = b`.
pub fn lstsq_min_norm(a: &CMat, b: &CVec, rel_tol: f64) -> Result<CVec> {
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    svd.solve(b, rel_tol * smax.max(f64::MIN_POSITIVE))
        .map_err(|e| Error::LinearSolveFailed(e.to_string()))
}

/// Matrix of `ad_x` acting on column-major vectorized matrices:
/// `vec([x, m]) = ad_matrix(x) * vec(m)`.
pub fn ad_matrix(x: &CMat) -> CMat {
    let n = x.nrows();
    let id = CMat::identity(n, n);
    id.kronecker(x) - x.transpose().kronecker(&id)
}

/// Column-major vectorization.
pub fn vectorize(m: &CMat) -> CVec {
    CVec::from_iterator(m.nrows() * m.ncols(), m.iter().copied())
}

/// Inverse of [`vectorize`] for square matrices.
pub fn unvectorize(v: &CVec, n: usize) -> CMat {
    CMat::from_iterator(n, n, v.iter().copied())
}

/// Standard complex Gaussian matrix.
pub fn random_matrix<R: Rng>(n: usize, rng: &mut R) -> CMat {
    DMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Random invertible matrix with condition number at most `max_cond`,
/// built as `Q1 D Q2^H` with log-spaced singular values.
pub fn random_conditioned<R: Rng>(n: usize, max_cond: f64, rng: &mut R) -> CMat {
    let q1 = unitary_factor(&random_matrix(n, rng));
    let q2 = unitary_factor(&random_matrix(n, rng));
    let half = max_cond.sqrt();
    let d = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            let t = rng.gen::<f64>();
            // singular values in [1/half, half]
            C64::new(half.powf(2.0 * t - 1.0), 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    q1 * d * q2.adjoint()
}

/// Unitary factor of a QR decomposition.
fn unitary_factor(a: &CMat) -> CMat {
    a.clone().qr().q()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn charpoly_matches_hand_expansion() {
        let a = CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
        let coeffs = charpoly_monic(&a);
        // lambda^2 - 1
        assert_relative_eq!(coeffs[0].norm(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(coeffs[1].re, -1.0, epsilon = 1e-14);
    }

    #[test]
    fn charpoly_agrees_with_eigenvalue_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=5 {
            let a = random_matrix(n, &mut rng);
            let coeffs = charpoly_monic(&a);
            let evs = eigenvalues(&a).unwrap();
            // expand prod (lambda - ev_i) and compare
            let mut poly = vec![c(1.0, 0.0)];
            for ev in evs {
                let mut next = vec![c(0.0, 0.0); poly.len() + 1];
                for (i, &p) in poly.iter().enumerate() {
                    next[i] += p;
                    next[i + 1] -= p * ev;
                }
                poly = next;
            }
            for (i, &co) in coeffs.iter().enumerate() {
                assert_relative_eq!((poly[i + 1] - co).norm(), 0.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let ns = nullspace(&a, 1e-12);
        assert_eq!(ns.len(), 1);
        assert_relative_eq!(ns[0][1].norm(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn conditioned_matrices_respect_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let g = random_conditioned(4, 100.0, &mut rng);
            let sv = g.clone().singular_values();
            let cond = sv.max() / sv.min();
            assert!(cond <= 100.0 * (1.0 + 1e-9), "cond = {cond}");
        }
    }

    #[test]
    fn ad_matrix_reproduces_commutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_matrix(3, &mut rng);
        let m = random_matrix(3, &mut rng);
        let lhs = unvectorize(&(ad_matrix(&x) * vectorize(&m)), 3);
        let rhs = commutator(&x, &m);
        assert!(frob_norm(&(lhs - rhs)) < 1e-12);
    }
}
