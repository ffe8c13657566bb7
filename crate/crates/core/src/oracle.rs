//! Plain dense linear algebra used to check the structured results.
//!
//! Nothing here knows about the Hankel structure: products are triple loops,
//! factorizations use partial pivoting and eigenpairs come from cyclic
//! Jacobi rotations.

use thiserror::Error;

use crate::matrix::DenseMatrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero pivot in column {0}")]
    SingularPivot(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge in {0} sweeps")]
    NoConvergence(usize),
}

const MAX_SWEEPS: usize = 100;

pub fn dense_multiply(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix, OracleError> {
    if a.cols() != b.rows() {
        return Err(OracleError::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let mut out = DenseMatrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = 0.0;
            for k in 0..a.cols() {
                s += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = s;
        }
    }
    Ok(out)
}

/// `P·A = L·U` with unit lower `L` stored below the diagonal of `lu`.
#[derive(Debug, Clone, PartialEq)]
pub struct LUFactorization {
    lu: DenseMatrix,
    /// Row `i` of `P·A` is row `pivots[i]` of `A`.
    pivots: Vec<usize>,
    sign: f64,
}

impl LUFactorization {
    pub fn lu(&self) -> &DenseMatrix {
        &self.lu
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sign(&self) -> f64 {
        self.sign
    }

    pub fn lower(&self) -> DenseMatrix {
        let n = self.lu.rows();
        DenseMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => self.lu[(i, j)],
            std::cmp::Ordering::Equal => 1.0,
            std::cmp::Ordering::Less => 0.0,
        })
    }

    pub fn upper(&self) -> DenseMatrix {
        let n = self.lu.rows();
        DenseMatrix::from_fn(n, n, |i, j| if i <= j { self.lu[(i, j)] } else { 0.0 })
    }

    pub fn det(&self) -> f64 {
        (0..self.lu.rows()).fold(self.sign, |d, i| d * self.lu[(i, i)])
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>, OracleError> {
        let n = self.lu.rows();
        if b.len() != n {
            return Err(OracleError::DimensionMismatch(format!(
                "rhs of length {}",
                b.len()
            )));
        }
        let mut x: Vec<f64> = self.pivots.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for k in 0..i {
                x[i] -= self.lu[(i, k)] * x[k];
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                x[i] -= self.lu[(i, k)] * x[k];
            }
            let piv = self.lu[(i, i)];
            if piv == 0.0 {
                return Err(OracleError::SingularPivot(i));
            }
            x[i] /= piv;
        }
        Ok(x)
    }
}

pub fn lu_factor(a: &DenseMatrix) -> Result<LUFactorization, OracleError> {
    if !a.is_square() {
        return Err(OracleError::DimensionMismatch(
            "LU needs a square matrix".into(),
        ));
    }
    let n = a.rows();
    let mut lu = a.clone();
    let mut pivots: Vec<usize> = (0..n).collect();
    let mut sign = 1.0;
    for col in 0..n {
        let mut best = col;
        for r in col + 1..n {
            if lu[(r, col)].abs() > lu[(best, col)].abs() {
                best = r;
            }
        }
        if best != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(best, j)];
                lu[(best, j)] = tmp;
            }
            pivots.swap(col, best);
            sign = -sign;
        }
        let piv = lu[(col, col)];
        if piv == 0.0 {
            continue;
        }
        for r in col + 1..n {
            let factor = lu[(r, col)] / piv;
            lu[(r, col)] = factor;
            if factor != 0.0 {
                for j in col + 1..n {
                    lu[(r, j)] -= factor * lu[(col, j)];
                }
            }
        }
    }
    Ok(LUFactorization { lu, pivots, sign })
}

pub fn lu_det(a: &DenseMatrix) -> Result<f64, OracleError> {
    Ok(lu_factor(a)?.det())
}

pub fn lu_inverse(a: &DenseMatrix) -> Result<DenseMatrix, OracleError> {
    let f = lu_factor(a)?;
    let n = a.rows();
    let mut inv = DenseMatrix::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e.iter_mut().for_each(|v| *v = 0.0);
        e[j] = 1.0;
        inv.set_column(j, &f.solve(&e)?);
    }
    Ok(inv)
}

/// `‖A‖₁·‖A⁻¹‖₁` with the inverse from [`lu_inverse`]; infinite when singular.
pub fn condition_estimate(a: &DenseMatrix) -> f64 {
    let norm1 = |m: &DenseMatrix| {
        (0..m.cols())
            .map(|j| (0..m.rows()).map(|i| m[(i, j)].abs()).sum::<f64>())
            .fold(0.0_f64, f64::max)
    };
    match lu_inverse(a) {
        Ok(inv) if inv.is_finite() => norm1(a) * norm1(&inv),
        _ => f64::INFINITY,
    }
}

/// Eigenvalues ascending with orthonormal eigenvectors as columns.
pub fn jacobi_eigen_symmetric(a: &DenseMatrix) -> Result<(Vec<f64>, DenseMatrix), OracleError> {
    if !a.is_square() {
        return Err(OracleError::DimensionMismatch(
            "eigenproblem needs a square matrix".into(),
        ));
    }
    let n = a.rows();
    let scale = a.max_abs().max(1.0);
    for i in 0..n {
        for j in 0..i {
            if (a[(i, j)] - a[(j, i)]).abs() > 1e-12 * scale {
                return Err(OracleError::NotSymmetric);
            }
        }
    }
    let mut m = a.clone();
    let mut v = DenseMatrix::identity(n);
    let fro = a.frobenius_norm();
    let target = 1e-14 * fro;

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)] * m[(i, j)])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (m[(k, p)], m[(k, q)]);
                    m[(k, p)] = c * kp - s * kq;
                    m[(k, q)] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (m[(p, k)], m[(q, k)]);
                    m[(p, k)] = c * pk - s * qk;
                    m[(q, k)] = s * pk + c * qk;
                }
                m[(p, q)] = 0.0;
                m[(q, p)] = 0.0;
                for k in 0..n {
                    let (kp, kq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * kp - s * kq;
                    v[(k, q)] = s * kp + c * kq;
                }
            }
        }
    }
    if !converged {
        return Err(OracleError::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = DenseMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exchange(n: usize) -> DenseMatrix {
        DenseMatrix::from_fn(n, n, |i, j| if i + j == n - 1 { 1.0 } else { 0.0 })
    }

    fn lcg_matrix(n: usize, mut state: u64) -> DenseMatrix {
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let mut a = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let x = next();
                a[(i, j)] = x;
                a[(j, i)] = x;
            }
        }
        a
    }

    #[test]
    fn multiply_basics() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0]]);
        assert_eq!(dense_multiply(&DenseMatrix::identity(2), &a).unwrap(), a);
        let j = exchange(5);
        assert_eq!(dense_multiply(&j, &j).unwrap(), DenseMatrix::identity(5));
        assert!(matches!(
            dense_multiply(&a, &a),
            Err(OracleError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(lu_det(&DenseMatrix::identity(4)).unwrap(), 1.0);
        for n in 1..10 {
            let want = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(lu_det(&exchange(n)).unwrap(), want, "n = {n}");
        }
        // det(0·I − [[2,1],[1,2]]) = 3
        let m = DenseMatrix::from_rows(&[[-2.0, -1.0], [-1.0, -2.0]]);
        assert!((lu_det(&m).unwrap() - 3.0).abs() < 1e-15);
        let singular = DenseMatrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert_eq!(lu_det(&singular).unwrap(), 0.0);
        assert!(lu_inverse(&singular).is_err());
    }

    #[test]
    fn lu_reconstructs() {
        let a = lcg_matrix(12, 3);
        let f = lu_factor(&a).unwrap();
        let pa = DenseMatrix::from_fn(12, 12, |i, j| a[(f.pivots()[i], j)]);
        let lu = dense_multiply(&f.lower(), &f.upper()).unwrap();
        assert!(pa.max_abs_diff(&lu) <= 1e-12 * a.max_abs());
    }

    #[test]
    fn inverse_self_consistent() {
        for n in [1, 2, 7, 20] {
            let a = lcg_matrix(n, n as u64 + 11);
            if condition_estimate(&a) > 1e6 {
                continue;
            }
            let inv = lu_inverse(&a).unwrap();
            let prod = dense_multiply(&a, &inv).unwrap();
            assert!(prod.max_abs_diff(&DenseMatrix::identity(n)) <= 1e-9);
        }
    }

    #[test]
    fn jacobi_small() {
        let d = DenseMatrix::diagonal(&[3.0, -1.0, 2.0]);
        let (vals, vecs) = jacobi_eigen_symmetric(&d).unwrap();
        assert_eq!(vals, vec![-1.0, 2.0, 3.0]);
        assert_eq!(vecs.column(0), vec![0.0, 1.0, 0.0]);
        let (vals, _) =
            jacobi_eigen_symmetric(&DenseMatrix::from_rows(&[[2.0, 1.0], [1.0, 2.0]])).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-15 && (vals[1] - 3.0).abs() < 1e-15);
        let bad = DenseMatrix::from_rows(&[[1.0, 2.0], [0.0, 1.0]]);
        assert_eq!(jacobi_eigen_symmetric(&bad), Err(OracleError::NotSymmetric));
    }

    #[test]
    fn jacobi_reconstructs_and_is_orthogonal() {
        for n in [20, 64] {
            let a = lcg_matrix(n, 99);
            let (vals, q) = jacobi_eigen_symmetric(&a).unwrap();
            let qd = DenseMatrix::from_fn(n, n, |i, j| q[(i, j)] * vals[j]);
            let rebuilt = dense_multiply(&qd, &q.transpose()).unwrap();
            assert!(rebuilt.max_abs_diff(&a) <= 1e-10);
            let qtq = dense_multiply(&q.transpose(), &q).unwrap();
            assert!(qtq.max_abs_diff(&DenseMatrix::identity(n)) <= 1e-11);
        }
    }
}
