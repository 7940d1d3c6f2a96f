use std::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::SeifertMatrix;
use crate::{Error, Result};

const UNIT_TOLERANCE: f64 = 1e-12;
const ZERO_TOLERANCE: f64 = 1e-9;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix (row-major, `n x n`) by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n, "matrix must be n x n");
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    // entries below this are dropped; that moves each eigenvalue by at most about EPSILON * norm
    let negligible = f64::EPSILON * norm / n.max(1) as f64;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i * n + j].powi(2)).sum();
        if off.sqrt() <= f64::EPSILON * norm {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= negligible {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Inertia of a real symmetric matrix with the relative zero tolerance.
fn inertia(m: Vec<f64>, n: usize) -> (usize, usize) {
    let norm = (0..n).map(|i| m[i * n..(i + 1) * n].iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    if norm == 0.0 {
        return (0, 0);
    }
    let tol = ZERO_TOLERANCE * norm;
    let eig = symmetric_eigenvalues(m, n);
    (eig.iter().filter(|&&l| l > tol).count(), eig.iter().filter(|&&l| l < -tol).count())
}

/// Signature of `(1 - ω) S + (1 - ω̄) S^T`.
///
/// The Hermitian form `A + iB` is diagonalized through the real symmetric
/// matrix `[[A, -B], [B, A]]`, whose spectrum is that of `A + iB` with every
/// eigenvalue doubled. Null directions count as zero, so jump points of the
/// signature function are not excluded.
pub fn levine_tristram_signature(s: &SeifertMatrix, omega: Complex64) -> Result<i64> {
    if !omega.re.is_finite() || !omega.im.is_finite() || (omega.norm() - 1.0).abs() > UNIT_TOLERANCE {
        return Err(Error::NotUnitModulus(omega.to_string()));
    }
    let n = s.size();
    if n == 0 {
        return Ok(0);
    }
    let entry = |i: usize, j: usize| {
        s.get(i, j)
            .to_f64()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::InvalidParameter(format!("Seifert entry {} too large for floating point", s.get(i, j))))
    };
    let (re, im) = (1.0 - omega.re, omega.im);
    let m = 2 * n;
    let mut h = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            let (sij, sji) = (entry(i, j)?, entry(j, i)?);
            let a = re * (sij + sji);
            let b = im * (sji - sij);
            h[i * m + j] = a;
            h[(i + n) * m + j + n] = a;
            h[i * m + j + n] = -b;
            h[(i + n) * m + j] = b;
        }
    }
    let (pos, neg) = inertia(h, m);
    if pos % 2 != 0 || neg % 2 != 0 {
        return Err(Error::Invariant(format!("doubled spectrum has unpaired eigenvalues ({pos} positive, {neg} negative)")));
    }
    let (pos, neg) = ((pos / 2) as i64, (neg / 2) as i64);
    let sigma = pos - neg;
    let rank = pos + neg;
    if sigma.unsigned_abs() as usize > n || (sigma - rank) % 2 != 0 {
        return Err(Error::Invariant(format!("signature {sigma} inconsistent with size {n} and rank {rank}")));
    }
    Ok(sigma)
}

/// `σ(K, p)`: the Levine–Tristram signatures summed over all `p`-th roots of unity.
pub fn total_p_signature(s: &SeifertMatrix, p: u64) -> Result<i64> {
    if p == 0 {
        return Err(Error::InvalidParameter("total p-signature needs p >= 1".into()));
    }
    (1..p)
        .map(|k| levine_tristram_signature(s, Complex64::from_polar(1.0, TAU * k as f64 / p as f64)))
        .sum()
}
