//! Floating-point eigen machinery: a cyclic Jacobi solver for symmetric
//! matrices, shifted power iteration for Perron–Frobenius vectors, and
//! recovery of Lie algebra exponents from eigenvalues of `2I - C`.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::exact_poly::rational_to_f64;
use crate::root_systems::RootSystem;

/// Largest off-diagonal magnitude accepted as converged.
pub const JACOBI_OFF_DIAGONAL_TOL: f64 = 1e-13;
/// Input symmetry tolerance for [`jacobi_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Max-norm change between normalized power iterates at convergence.
pub const POWER_ITERATION_TOL: f64 = 1e-14;
/// Allowed `|x - 2cos(a pi / h)|` when recovering exponents.
pub const EXPONENT_TOL: f64 = 1e-9;

const MAX_SWEEPS: usize = 100;
const MAX_POWER_ITERATIONS: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric: |m[{i}][{j}] - m[{j}][{i}]| = {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("Jacobi iteration did not converge in {0} sweeps")]
    JacobiNoConvergence(usize),
    #[error("matrix has a negative entry at ({i}, {j})")]
    NegativeEntry { i: usize, j: usize },
    #[error("matrix support graph is reducible")]
    Reducible,
    #[error("power iteration did not converge in {0} iterations")]
    PowerNoConvergence(usize),
    #[error("Perron vector component {index} is not positive ({value:e})")]
    NonPositiveComponent { index: usize, value: f64 },
    #[error("first-component normalization needs eigenvalue in (-2, 2), got {0}")]
    NormalizationUndefined(f64),
    #[error("eigenvalue {0} lies outside (-2, 2)")]
    EigenvalueOutOfRange(f64),
    #[error(
        "eigenvalue {eigenvalue} is not 2cos(a pi/{h}) for an integer a (residual {residual:e})"
    )]
    ExponentMismatch {
        eigenvalue: f64,
        h: usize,
        residual: f64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenDecomposition {
    /// Descending; near-equal values keep the order of their diagonal slots.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[k]` belongs to `eigenvalues[k]`, unit length.
    pub eigenvectors: Vec<Vec<f64>>,
}

fn check_square(m: &[Vec<f64>]) -> Result<usize, SpectralError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(SpectralError::NotSquare);
    }
    Ok(n)
}

/// Eigen decomposition of a real symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigen(m: &[Vec<f64>]) -> Result<EigenDecomposition, SpectralError> {
    let n = check_square(m)?;
    for i in 0..n {
        for j in 0..i {
            let diff = (m[i][j] - m[j][i]).abs();
            if diff > SYMMETRY_TOL {
                return Err(SpectralError::NotSymmetric { i, j, diff });
            }
        }
    }
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (m[i][j] + m[j][i])).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let max_off = |a: &[Vec<f64>]| {
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q].abs())
            .fold(0.0, f64::max)
    };

    let mut sweeps = 0;
    while max_off(&a) >= JACOBI_OFF_DIAGONAL_TOL {
        if sweeps == MAX_SWEEPS {
            return Err(SpectralError::JacobiNoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let diag: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    let order = descending_with_stable_ties(&diag);
    Ok(EigenDecomposition {
        eigenvalues: order.iter().map(|&k| diag[k]).collect(),
        eigenvectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
    })
}

/// Indices sorting `values` descending; runs of values within `1e-12`
/// (relative to the largest magnitude) are ordered by index.
fn descending_with_stable_ties(values: &[f64]) -> Vec<usize> {
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-12 * scale;
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut start = 0;
    while start < idx.len() {
        let mut end = start + 1;
        while end < idx.len() && values[idx[start]] - values[idx[end]] <= tol {
            end += 1;
        }
        idx[start..end].sort_unstable();
        start = end;
    }
    idx
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PerronNormalization {
    /// `u_1 = 2 sin(theta)` where the eigenvalue is `2 cos(theta)`.
    FirstComponent,
    /// Largest component equal to one.
    MaxComponent,
    /// Euclidean norm one.
    UnitNorm,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerronVector {
    pub components: Vec<f64>,
    pub eigenvalue: f64,
}

impl PerronVector {
    pub fn renormalized(&self, normalization: PerronNormalization) -> Result<Self, SpectralError> {
        let factor = match normalization {
            PerronNormalization::MaxComponent => {
                1.0 / self.components.iter().cloned().fold(0.0, f64::max)
            }
            PerronNormalization::UnitNorm => {
                1.0 / self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
            }
            PerronNormalization::FirstComponent => {
                let lambda = self.eigenvalue;
                if !(lambda > -2.0 && lambda < 2.0) {
                    return Err(SpectralError::NormalizationUndefined(lambda));
                }
                let theta = (lambda / 2.0).acos();
                2.0 * theta.sin() / self.components[0]
            }
        };
        Ok(Self {
            components: self.components.iter().map(|c| c * factor).collect(),
            eigenvalue: self.eigenvalue,
        })
    }
}

fn is_irreducible(a: &[Vec<f64>]) -> bool {
    let n = a.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let w = if forward { a[i][j] } else { a[j][i] };
                if w > 0.0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    n > 0 && reach(true) && reach(false)
}

/// Left Perron–Frobenius vector `u a = lambda u` of a nonnegative
/// irreducible matrix, by power iteration on `a + 2I` from the all-ones row
/// vector.
pub fn perron_vector(
    a: &[Vec<f64>],
    normalization: PerronNormalization,
) -> Result<PerronVector, SpectralError> {
    let n = check_square(a)?;
    for (i, row) in a.iter().enumerate() {
        if let Some(j) = row.iter().position(|&v| v < 0.0) {
            return Err(SpectralError::NegativeEntry { i, j });
        }
    }
    if !is_irreducible(a) {
        return Err(SpectralError::Reducible);
    }

    let left_apply = |u: &[f64]| -> Vec<f64> {
        (0..n)
            .map(|j| (0..n).map(|i| u[i] * a[i][j]).sum::<f64>())
            .collect()
    };

    let mut u = vec![1.0; n];
    let mut converged = false;
    for _ in 0..MAX_POWER_ITERATIONS {
        let ua = left_apply(&u);
        let mut next: Vec<f64> = ua.iter().zip(&u).map(|(x, y)| x + 2.0 * y).collect();
        let max = next.iter().cloned().fold(0.0, f64::max);
        if !(max > 0.0) {
            return Err(SpectralError::Reducible);
        }
        next.iter_mut().for_each(|v| *v /= max);
        let delta = next
            .iter()
            .zip(&u)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        u = next;
        if delta < POWER_ITERATION_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpectralError::PowerNoConvergence(MAX_POWER_ITERATIONS));
    }
    if let Some((index, &value)) = u.iter().enumerate().find(|(_, &v)| v <= 0.0) {
        return Err(SpectralError::NonPositiveComponent { index, value });
    }
    let ua = left_apply(&u);
    let eigenvalue = ua.iter().sum::<f64>() / u.iter().sum::<f64>();
    PerronVector {
        components: u,
        eigenvalue,
    }
    .renormalized(normalization)
}

/// Exponents `a_j` with `x_j = 2 cos(a_j pi / h)`, ascending.
pub fn recover_exponents(eigenvalues: &[f64], h: usize) -> Result<Vec<u32>, SpectralError> {
    let mut out = Vec::with_capacity(eigenvalues.len());
    for &x in eigenvalues {
        if !(x > -2.0 && x < 2.0) {
            return Err(SpectralError::EigenvalueOutOfRange(x));
        }
        let a = (h as f64 * (x / 2.0).acos() / PI).round();
        let residual = (x - 2.0 * (a * PI / h as f64).cos()).abs();
        if residual >= EXPONENT_TOL {
            return Err(SpectralError::ExponentMismatch {
                eigenvalue: x,
                h,
                residual,
            });
        }
        out.push(a as u32);
    }
    out.sort_unstable();
    Ok(out)
}

/// `S = D^{-1/2} (2I - C) D^{1/2}` with `D = diag(d)`; symmetric and similar
/// to `2I - C`.
pub fn symmetrized_adjacency(rs: &RootSystem) -> Vec<Vec<f64>> {
    let n = rs.rank();
    let d: Vec<f64> = rs.symmetrizers().iter().map(rational_to_f64).collect();
    let adj = rs.cartan().adjacency();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| adj[i][j] as f64 * (d[j] / d[i]).sqrt())
                .collect()
        })
        .collect()
}

/// Eigenvalues of `2I - C`, descending, via Jacobi on the symmetrized form.
pub fn adjacency_eigenvalues(rs: &RootSystem) -> Result<Vec<f64>, SpectralError> {
    Ok(jacobi_eigen(&symmetrized_adjacency(rs))?.eigenvalues)
}

/// Eigenvalues of `2I - C`, descending, as the real roots of its exact
/// characteristic polynomial.
pub fn adjacency_eigenvalues_via_charpoly(rs: &RootSystem) -> Vec<f64> {
    let p = rs.cartan().adjacency_exact().char_poly();
    let mut roots = p
        .real_roots(-2.0, 2.0)
        .expect("nonzero characteristic polynomial");
    roots.reverse();
    roots
}

/// Exponents of the algebra from the spectrum of `2I - C`.
pub fn exponents(rs: &RootSystem) -> Result<Vec<u32>, SpectralError> {
    recover_exponents(&adjacency_eigenvalues(rs)?, rs.coxeter_number())
}
