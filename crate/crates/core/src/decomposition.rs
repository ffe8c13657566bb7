//! The bordering decomposition of `H`.
//!
//! Deleting the border of `Ĥ = S·diag(λ)·S` expresses `H` through the interior
//! block `R` of the sine matrix, a parity permutation `P` and two
//! diagonal-plus-rank-one blocks:
//!
//! ```text
//! even n:  H = R Pᵀ [Σ ⊕ Γ] P R        Σ = diag(λ₃, λ₅, …, λ_{n+1}) + λ₁ u uᵀ
//!                                      Γ = diag(λ₂, λ₄, …, λ_n)     + λ_{n+2} v vᵀ
//! odd n:   H = R P [Σ ⊕ Γ] Pᵀ Rᵀ       Σ = diag(λ₃, …, λ_n, λ_{n+2}) + λ₁ u uᵀ
//!                                      Γ = diag(λ₂, …, λ_{n−1})      + λ_{n+1} v vᵀ
//! ```
//!
//! Both parities share one shape, `R·scatter·[B₁ ⊕ B₂]·gather·Rᵀ` (R is
//! symmetric for even n), where `gather` pulls the interior coordinates into
//! block order and `scatter` is its inverse. Every structured path in the
//! crate is routed through [`ParityDecomposition::assemble`] and the vector
//! forms [`ParityDecomposition::gather`] / [`ParityDecomposition::scatter`].

use crate::matrix::DenseMatrix;
use crate::params::HeptaParams;
use crate::symbols::SpectralSymbols;
use crate::trig::sin_pi_ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `S[k,ℓ] = √(2/(m+1))·sin(kℓπ/(m+1))`, symmetric, orthogonal and involutory.
pub fn build_sine_matrix(m: usize) -> DenseMatrix {
    let scale = (2.0 / (m + 1) as f64).sqrt();
    let period = (m + 1) as i64;
    DenseMatrix::from_fn(m, m, |i, j| {
        scale * sin_pi_ratio((i as i64 + 1) * (j as i64 + 1), period)
    })
}

/// Symbol labels, anchors and border vectors of the two blocks, without `R`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct BlockLayout {
    pub order: Vec<usize>,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub first_labels: Vec<usize>,
    pub second_labels: Vec<usize>,
    pub first_anchor: usize,
    pub second_anchor: usize,
}

impl BlockLayout {
    pub fn new(n: usize) -> Self {
        let parity = Parity::of(n);
        let ni = n as i64;
        let period = ni + 3;
        let half_first = match parity {
            Parity::Even => n / 2,
            Parity::Odd => n.div_ceil(2),
        };
        let half_second = n - half_first;

        // Labels are also the sine frequencies: u_j = sin(label·π/(n+3)) / sin(π/(n+3)),
        // which is exactly 1 for the odd-n label n+2.
        let first_labels: Vec<usize> = (1..=half_first).map(|j| 2 * j + 1).collect();
        let second_labels: Vec<usize> = (1..=half_second).map(|j| 2 * j).collect();
        let s1 = sin_pi_ratio(1, period);
        let v_denominator = match parity {
            Parity::Even => s1,
            Parity::Odd => sin_pi_ratio(ni + 1, period),
        };
        let u = first_labels
            .iter()
            .map(|&l| sin_pi_ratio(l as i64, period) / s1)
            .collect();
        let v = second_labels
            .iter()
            .map(|&l| sin_pi_ratio(l as i64, period) / v_denominator)
            .collect();

        // Interior coordinate i (0-based) carries λ_{i+2}, except that for odd
        // n the last interior coordinate carries λ_{n+2}.
        let order = first_labels
            .iter()
            .chain(&second_labels)
            .map(|&label| if label == n + 2 { n - 1 } else { label - 2 })
            .collect();

        let (first_anchor, second_anchor) = match parity {
            Parity::Even => (1, n + 2),
            Parity::Odd => (1, n + 1),
        };
        Self {
            order,
            u,
            v,
            first_labels,
            second_labels,
            first_anchor,
            second_anchor,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParityDecomposition {
    n: usize,
    parity: Parity,
    r: DenseMatrix,
    /// `P[k, perm[k]] = 1` (0-based).
    perm: Vec<usize>,
    /// Block position → interior coordinate.
    order: Vec<usize>,
    u: Vec<f64>,
    v: Vec<f64>,
    first_labels: Vec<usize>,
    second_labels: Vec<usize>,
    first_anchor: usize,
    second_anchor: usize,
}

impl ParityDecomposition {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let parity = Parity::of(n);
        let ni = n as i64;
        let period = ni + 3;
        let scale = (2.0 / period as f64).sqrt();

        let r = match parity {
            Parity::Even => DenseMatrix::from_fn(n, n, |i, j| {
                scale * sin_pi_ratio((i as i64 + 2) * (j as i64 + 2), period)
            }),
            Parity::Odd => DenseMatrix::from_fn(n, n, |i, j| {
                let freq = if j + 1 < n { j as i64 + 2 } else { ni + 2 };
                scale * sin_pi_ratio((i as i64 + 2) * freq, period)
            }),
        };

        let layout = BlockLayout::new(n);
        let mut perm = vec![0; n];
        match parity {
            // gather = P
            Parity::Even => perm.copy_from_slice(&layout.order),
            // gather = Pᵀ
            Parity::Odd => {
                for (pos, &i) in layout.order.iter().enumerate() {
                    perm[i] = pos;
                }
            }
        }
        let BlockLayout {
            order,
            u,
            v,
            first_labels,
            second_labels,
            first_anchor,
            second_anchor,
        } = layout;

        Self {
            n,
            parity,
            r,
            perm,
            order,
            u,
            v,
            first_labels,
            second_labels,
            first_anchor,
            second_anchor,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn r(&self) -> &DenseMatrix {
        &self.r
    }

    pub fn u(&self) -> &[f64] {
        &self.u
    }

    pub fn v(&self) -> &[f64] {
        &self.v
    }

    /// 0-based column of the single 1 in each row of `P`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Symbol indices (1-based) on the diagonal of the first block.
    pub fn first_labels(&self) -> &[usize] {
        &self.first_labels
    }

    pub fn second_labels(&self) -> &[usize] {
        &self.second_labels
    }

    /// Symbol index multiplying `u uᵀ` (always 1).
    pub fn first_anchor(&self) -> usize {
        self.first_anchor
    }

    /// Symbol index multiplying `v vᵀ`: n+2 for even n, n+1 for odd n.
    pub fn second_anchor(&self) -> usize {
        self.second_anchor
    }

    /// Dense permutation matrix, for checks and display only.
    pub fn permutation_matrix(&self) -> DenseMatrix {
        let mut p = DenseMatrix::zeros(self.n, self.n);
        for (k, &l) in self.perm.iter().enumerate() {
            p[(k, l)] = 1.0;
        }
        p
    }

    /// Interior coordinates → (first block, second block).
    pub fn gather(&self, x: &[f64]) -> (Vec<f64>, Vec<f64>) {
        assert_eq!(x.len(), self.n);
        let mut out: Vec<f64> = self.order.iter().map(|&i| x[i]).collect();
        let second = out.split_off(self.u.len());
        (out, second)
    }

    pub fn scatter(&self, first: &[f64], second: &[f64]) -> Vec<f64> {
        assert_eq!(first.len(), self.u.len());
        assert_eq!(second.len(), self.v.len());
        let mut out = vec![0.0; self.n];
        for (&i, &val) in self.order.iter().zip(first.iter().chain(second)) {
            out[i] = val;
        }
        out
    }

    /// `(I + u uᵀ) s` on the first block.
    pub fn first_weight(&self, s: &[f64]) -> Vec<f64> {
        rank_one_update(&self.u, s)
    }

    /// `(I + v vᵀ) s` on the second block.
    pub fn second_weight(&self, s: &[f64]) -> Vec<f64> {
        rank_one_update(&self.v, s)
    }

    /// `R · scatter(first, second)`: lifts block coordinates to ℝⁿ.
    pub fn lift(&self, first: &[f64], second: &[f64]) -> Vec<f64> {
        self.r.matvec(&self.scatter(first, second))
    }

    /// Maps a block-coordinate vector of an eigenvector expansion to ℝⁿ:
    /// `R·scatter((I+uuᵀ)s₁, (I+vvᵀ)s₂)`, which equals `R⁻¹·scatter(s₁, s₂)`
    /// for even n and `R⁻ᵀ·scatter(s₁, s₂)` for odd n.
    pub fn eigen_lift(&self, first: &[f64], second: &[f64]) -> Vec<f64> {
        self.lift(&self.first_weight(first), &self.second_weight(second))
    }

    /// Dense `R·scatter·[first ⊕ second]·gather·Rᵀ`.
    pub fn assemble(&self, first: &DenseMatrix, second: &DenseMatrix) -> DenseMatrix {
        let n = self.n;
        let h1 = self.u.len();
        assert_eq!((first.rows(), first.cols()), (h1, h1));
        assert_eq!((second.rows(), second.cols()), (n - h1, n - h1));

        // gather·Rᵀ: row `pos` is column `order[pos]` of R.
        let gathered = DenseMatrix::from_fn(n, n, |pos, j| self.r[(j, self.order[pos])]);
        let top = first.matmul(&gathered.block(0, h1, 0, n));
        let bottom = second.matmul(&gathered.block(h1, n, 0, n));

        let mut scattered = DenseMatrix::zeros(n, n);
        for pos in 0..n {
            let src = if pos < h1 {
                top.row(pos)
            } else {
                bottom.row(pos - h1)
            };
            scattered.row_mut(self.order[pos]).copy_from_slice(src);
        }
        self.r.matmul(&scattered)
    }

    /// The two diagonal-plus-rank-one middle blocks `Σ` and `Γ`.
    pub fn middle_blocks(&self, symbols: &SpectralSymbols) -> (DenseMatrix, DenseMatrix) {
        let build = |labels: &[usize], w: &[f64], anchor: usize| {
            let l = symbols.lambda(anchor);
            DenseMatrix::from_fn(labels.len(), labels.len(), |i, j| {
                let diag = if i == j {
                    symbols.lambda(labels[i])
                } else {
                    0.0
                };
                diag + l * w[i] * w[j]
            })
        };
        (
            build(&self.first_labels, &self.u, self.first_anchor),
            build(&self.second_labels, &self.v, self.second_anchor),
        )
    }

    /// Dense `H` rebuilt from the decomposition and the symbols.
    pub fn reconstruct(&self, symbols: &SpectralSymbols) -> DenseMatrix {
        let (sigma, gamma) = self.middle_blocks(symbols);
        self.assemble(&sigma, &gamma)
    }
}

pub fn parity_decomposition(params: &HeptaParams) -> ParityDecomposition {
    ParityDecomposition::new(params.n())
}

pub(crate) fn rank_one_update(w: &[f64], s: &[f64]) -> Vec<f64> {
    let proj: f64 = w.iter().zip(s).map(|(a, b)| a * b).sum();
    s.iter().zip(w).map(|(si, wi)| si + wi * proj).collect()
}

/// Border of the sine matrix around `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct BorderVectors {
    pub theta: f64,
    /// Odd n only.
    pub eta: Option<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    /// Odd n only.
    pub z: Option<Vec<f64>>,
    /// Odd n only.
    pub w: Option<Vec<f64>>,
}

pub fn border_vectors(params: &HeptaParams) -> BorderVectors {
    let n = params.n() as i64;
    let period = n + 3;
    let scale = (2.0 / period as f64).sqrt();
    let s = |k: i64| scale * sin_pi_ratio(k, period);
    let alt = |k: i64| if k % 2 == 0 { 1.0 } else { -1.0 };

    let theta = s(1);
    let x: Vec<f64> = (1..=n).map(|k| s(k + 1)).collect();
    if n % 2 == 0 {
        let y = (1..=n).map(|k| alt(k) * s(k + 1)).collect();
        BorderVectors {
            theta,
            eta: None,
            x,
            y,
            z: None,
            w: None,
        }
    } else {
        let y = (1..=n).map(|k| alt(k) * s(2 * (k + 1))).collect();
        let mut z: Vec<f64> = (1..n).map(|k| s(k + 1)).collect();
        z.push(s(n + 2));
        let mut w: Vec<f64> = (1..n).map(|k| alt(k) * s(k + 1)).collect();
        w.push(s(n + 2));
        BorderVectors {
            theta,
            eta: Some(s(n + 1)),
            x,
            y,
            z: Some(z),
            w: Some(w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::spectral_symbols;

    fn params(n: usize) -> HeptaParams {
        HeptaParams::new(n, 0.7, -0.4, 1.3, -0.9).unwrap()
    }

    fn outer_sub(m: &DenseMatrix, p: &[f64], q: &[f64]) -> DenseMatrix {
        DenseMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            m[(i, j)] - p[i] * p[j] - q[i] * q[j]
        })
    }

    #[test]
    fn sine_matrix_small() {
        assert_eq!(build_sine_matrix(1), DenseMatrix::from_rows(&[[1.0]]));
        let s2 = build_sine_matrix(2);
        let c = (2.0f64 / 3.0).sqrt();
        let third = std::f64::consts::FRAC_PI_3;
        assert!((s2[(0, 0)] - c * third.sin()).abs() < 1e-15);
        assert!((s2[(0, 1)] - c * (2.0 * third).sin()).abs() < 1e-15);
        assert!((s2[(1, 1)] - c * (4.0 * third).sin()).abs() < 1e-15);
    }

    #[test]
    fn sine_matrix_is_involution() {
        for m in 1..=64 {
            let s = build_sine_matrix(m);
            assert_eq!(s, s.transpose());
            let err = s.matmul(&s).max_abs_diff(&DenseMatrix::identity(m));
            assert!(err <= 1e-12, "m = {m}: {err}");
        }
    }

    #[test]
    fn n4_permutation() {
        let d = ParityDecomposition::new(4);
        let one_based: Vec<usize> = d.permutation().iter().map(|c| c + 1).collect();
        assert_eq!(one_based, vec![2, 4, 1, 3]);
    }

    #[test]
    fn odd_permutation_matches_definition() {
        // P[k,ℓ] = 1 iff k = 2ℓ or k = 2ℓ−n−2, plus (n, (n+1)/2)
        for n in (1..=15).step_by(2) {
            let p = ParityDecomposition::new(n).permutation_matrix();
            for k in 1..=n {
                for l in 1..=n {
                    let one = k == 2 * l || k + n + 2 == 2 * l || (k == n && 2 * l == n + 1);
                    assert_eq!(
                        p[(k - 1, l - 1)],
                        if one { 1.0 } else { 0.0 },
                        "n={n} ({k},{l})"
                    );
                }
            }
        }
    }

    #[test]
    fn even_permutation_matches_definition() {
        for n in (2..=16).step_by(2) {
            let p = ParityDecomposition::new(n).permutation_matrix();
            for k in 1..=n {
                for l in 1..=n {
                    let one = l == 2 * k || l + n + 1 == 2 * k;
                    assert_eq!(
                        p[(k - 1, l - 1)],
                        if one { 1.0 } else { 0.0 },
                        "n={n} ({k},{l})"
                    );
                }
            }
        }
    }

    #[test]
    fn permutation_is_bijection() {
        for n in 1..=33 {
            let d = ParityDecomposition::new(n);
            let mut seen = vec![false; n];
            for &c in d.permutation() {
                assert!(!seen[c]);
                seen[c] = true;
            }
            assert_eq!(d.u().len() + d.v().len(), n);
        }
    }

    #[test]
    fn n2_vectors() {
        let d = ParityDecomposition::new(2);
        assert_eq!(d.u().len(), 1);
        assert!((d.u()[0] - 1.618_033_988_749_895).abs() < 1e-14);
        assert!((d.v()[0] - 1.618_033_988_749_895).abs() < 1e-14);
    }

    #[test]
    fn n3_vector_shapes() {
        let d = ParityDecomposition::new(3);
        assert_eq!(d.u().len(), 2);
        assert_eq!(d.u()[1], 1.0);
        assert_eq!(d.v().len(), 1);
    }

    #[test]
    fn r_is_interior_of_sine_matrix() {
        for n in 1..=20 {
            let d = ParityDecomposition::new(n);
            let s = build_sine_matrix(n + 2);
            for i in 0..n {
                for j in 0..n {
                    // odd n swaps the last two columns of S
                    let col = if d.parity() == Parity::Odd && j == n - 1 {
                        n + 1
                    } else {
                        j + 1
                    };
                    assert!((d.r()[(i, j)] - s[(i + 1, col)]).abs() < 1e-15);
                }
            }
            if d.parity() == Parity::Even {
                assert_eq!(d.r(), &d.r().transpose());
            }
        }
    }

    #[test]
    fn gather_scatter_inverse() {
        let d = ParityDecomposition::new(7);
        let x: Vec<f64> = (0..7).map(|i| i as f64).collect();
        let (a, b) = d.gather(&x);
        assert_eq!(d.scatter(&a, &b), x);
        // gather = Pᵀ for odd n
        let pt = d.permutation_matrix().transpose();
        let mut joined = a.clone();
        joined.extend(&b);
        assert_eq!(pt.matvec(&x), joined);
    }

    #[test]
    fn border_n2() {
        let b = border_vectors(&params(2));
        let c = (2.0f64 / 5.0).sqrt();
        let x = [
            c * (2.0 * std::f64::consts::PI / 5.0).sin(),
            c * (3.0 * std::f64::consts::PI / 5.0).sin(),
        ];
        assert!((b.x[0] - x[0]).abs() < 1e-15 && (b.x[1] - x[1]).abs() < 1e-15);
        assert_eq!(b.y, vec![-b.x[0], b.x[1]]);
    }

    #[test]
    fn border_n3_eta() {
        let b = border_vectors(&params(3));
        let want = (2.0f64 / 6.0).sqrt() * (4.0 * std::f64::consts::PI / 6.0).sin();
        assert!((b.eta.unwrap() - want).abs() < 1e-15);
        let theta = (2.0f64 / 6.0).sqrt() * (std::f64::consts::PI / 6.0).sin();
        assert!((b.theta - theta).abs() < 1e-15 && b.theta > 0.0);
    }

    #[test]
    fn border_identities() {
        for n in 1..=64 {
            let d = ParityDecomposition::new(n);
            let b = border_vectors(&params(n));
            let r = d.r();
            let id = DenseMatrix::identity(n);
            match d.parity() {
                Parity::Even => {
                    let err = r.matmul(r).max_abs_diff(&outer_sub(&id, &b.x, &b.y));
                    assert!(err <= 1e-12, "n={n}: {err}");
                    let rx: Vec<f64> =
                        b.x.iter()
                            .zip(&b.y)
                            .map(|(x, y)| -(x + y) / (2.0 * b.theta))
                            .collect();
                    let ry: Vec<f64> =
                        b.x.iter()
                            .zip(&b.y)
                            .map(|(x, y)| -(x - y) / (2.0 * b.theta))
                            .collect();
                    let back_x = r.matvec(&rx);
                    let back_y = r.matvec(&ry);
                    for i in 0..n {
                        assert!((back_x[i] - b.x[i]).abs() < 1e-12);
                        assert!((back_y[i] - b.y[i]).abs() < 1e-12);
                    }
                }
                Parity::Odd => {
                    let (z, w) = (b.z.as_ref().unwrap(), b.w.as_ref().unwrap());
                    let eta = b.eta.unwrap();
                    let err = r.transpose().matmul(r).max_abs_diff(&outer_sub(&id, z, w));
                    assert!(err <= 1e-12, "n={n}: {err}");
                    let rx: Vec<f64> = z
                        .iter()
                        .zip(w)
                        .map(|(z, w)| -(z + w) / (2.0 * b.theta))
                        .collect();
                    let ry: Vec<f64> = z
                        .iter()
                        .zip(w)
                        .map(|(z, w)| -(z - w) / (2.0 * eta))
                        .collect();
                    let back_x = r.matvec(&rx);
                    let back_y = r.matvec(&ry);
                    for i in 0..n {
                        assert!((back_x[i] - b.x[i]).abs() < 1e-12, "n={n}");
                        assert!((back_y[i] - b.y[i]).abs() < 1e-12, "n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn reconstruction_matches_dense() {
        for n in 1..=64 {
            let p = params(n);
            let h = p.build_dense();
            let rebuilt = ParityDecomposition::new(n).reconstruct(&spectral_symbols(&p));
            let err = rebuilt.max_abs_diff(&h);
            assert!(err <= 1e-10 * h.max_abs().max(1.0), "n={n}: {err}");
        }
    }

    #[test]
    fn eigen_lift_inverts_r() {
        // R·scatter(C s) = R⁻¹ scatter(s) (even), R⁻ᵀ scatter(s) (odd)
        for n in 1..=20 {
            let d = ParityDecomposition::new(n);
            let s: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin() + 0.1).collect();
            let (s1, s2) = s.split_at(d.u().len());
            let q = d.eigen_lift(s1, s2);
            let back = match d.parity() {
                Parity::Even => d.r().matvec(&q),
                Parity::Odd => d.r().transpose_matvec(&q),
            };
            let expected = d.scatter(s1, s2);
            for i in 0..n {
                assert!((back[i] - expected[i]).abs() < 1e-10, "n={n}");
            }
        }
    }
}
