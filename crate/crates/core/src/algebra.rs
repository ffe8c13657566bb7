//! The matrix algebra generated by `Ω` (ones on the first super- and
//! sub-diagonal), i.e. the polynomials in `Ω`.
//!
//! A member is determined by its first row. The map from the coefficients
//! `ω` of `Σ ω_{k+1} Ω^k` to that first row is an upper unit-triangular
//! integer system, [`TriangularTable`].

use crate::decomposition::build_sine_matrix;
use crate::matrix::DenseMatrix;
use crate::params::HeptaParams;
use crate::symbols::{spectral_symbols, SpectralSymbols};

pub fn build_omega_matrix(m: usize) -> DenseMatrix {
    DenseMatrix::from_fn(m, m, |i, j| if i.abs_diff(j) == 1 { 1.0 } else { 0.0 })
}

/// Cross-sum test `M[k−1,ℓ] + M[k+1,ℓ] = M[k,ℓ−1] + M[k,ℓ+1]` with zero
/// padding, to `1e−10·‖M‖_max`.
pub fn is_in_algebra(m: &DenseMatrix) -> bool {
    assert!(m.is_square(), "algebra membership needs a square matrix");
    let size = m.rows();
    let at = |i: isize, j: isize| {
        if i < 0 || j < 0 || i >= size as isize || j >= size as isize {
            0.0
        } else {
            m[(i as usize, j as usize)]
        }
    };
    let tol = 1e-10 * m.max_abs();
    (0..size as isize).all(|k| {
        (0..size as isize).all(|l| {
            let vertical = at(k - 1, l) + at(k + 1, l);
            let horizontal = at(k, l - 1) + at(k, l + 1);
            (vertical - horizontal).abs() <= tol
        })
    })
}

/// `T[k,ℓ] = [Ω^{ℓ−1}]_{1,k}` for `1 ≤ k ≤ ℓ ≤ m`, in exact integers.
///
/// Entries are lattice-path counts bounded by `2^{m−1}`, so `m ≤ 128`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularTable {
    m: usize,
    /// Column `ℓ−1` holds `T[1..=ℓ, ℓ]`.
    columns: Vec<Vec<u128>>,
}

impl TriangularTable {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "table order must be positive");
        assert!(m <= 128, "table entries overflow 128 bits beyond m = 128");
        let mut columns: Vec<Vec<u128>> = Vec::with_capacity(m);
        columns.push(vec![1]);
        for l in 1..m {
            let prev = &columns[l - 1];
            let col: Vec<u128> = (0..=l)
                .map(|k| {
                    let below = if k >= 1 {
                        prev.get(k - 1).copied().unwrap_or(0)
                    } else {
                        0
                    };
                    let above = prev.get(k + 1).copied().unwrap_or(0);
                    below + above
                })
                .collect();
            columns.push(col);
        }
        Self { m, columns }
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// `T[k,ℓ]`, 1-based; zero below the diagonal.
    pub fn get(&self, k: usize, l: usize) -> u128 {
        assert!((1..=self.m).contains(&k) && (1..=self.m).contains(&l));
        if k > l {
            0
        } else {
            self.columns[l - 1][k - 1]
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OmegaCoefficients {
    pub omega: Vec<f64>,
}

impl OmegaCoefficients {
    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

/// Coefficients of the algebra member whose first row is `first_row`.
pub fn solve_omega(first_row: &[f64]) -> OmegaCoefficients {
    let m = first_row.len();
    assert!(m >= 1, "first row must be nonempty");
    let table = TriangularTable::new(m);
    let mut omega = vec![0.0; m];
    for k in (1..=m).rev() {
        let tail: f64 = (k + 1..=m)
            .map(|j| table.get(k, j) as f64 * omega[j - 1])
            .sum();
        omega[k - 1] = first_row[k - 1] - tail;
    }
    OmegaCoefficients { omega }
}

/// `Σ ω_{k+1} Ω^k` by Horner's rule, each `Ω·A` being two row shifts.
pub fn reconstruct(coeffs: &OmegaCoefficients) -> DenseMatrix {
    let m = coeffs.len();
    assert!(m >= 1);
    let mut acc = DenseMatrix::zeros(m, m);
    for &w in coeffs.omega.iter().rev() {
        let mut next = DenseMatrix::zeros(m, m);
        for i in 0..m {
            let row = next.row_mut(i);
            if i >= 1 {
                row.copy_from_slice(acc.row(i - 1));
            }
            if i + 1 < m {
                for (r, &a) in row.iter_mut().zip(acc.row(i + 1)) {
                    *r += a;
                }
            }
            row[i] += w;
        }
        acc = next;
    }
    acc
}

/// The eigenvalues of `Ĥ` in sine-transform order.
pub fn diagonalize_hat(params: &HeptaParams) -> SpectralSymbols {
    spectral_symbols(params)
}

/// `S·diag(λ)·S`, the extension rebuilt from its symbols.
pub fn synthesize_hat(symbols: &SpectralSymbols) -> DenseMatrix {
    let s = build_sine_matrix(symbols.n() + 2);
    let scaled = DenseMatrix::from_fn(s.rows(), s.cols(), |i, j| s[(i, j)] * symbols.values()[j]);
    scaled.matmul(&s)
}
