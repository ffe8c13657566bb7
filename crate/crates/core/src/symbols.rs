use crate::params::HeptaParams;
use crate::trig::cos_pi_ratio;

/// The n+2 eigenvalues `λ₁ … λ_{n+2}` of the bordered extension `Ĥ`,
/// in sine-transform order.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSymbols {
    n: usize,
    values: Vec<f64>,
}

impl SpectralSymbols {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `λ_k` with the 1-based index used throughout the formulas.
    pub fn lambda(&self, k: usize) -> f64 {
        assert!(
            (1..=self.n + 2).contains(&k),
            "symbol index {k} out of range"
        );
        self.values[k - 1]
    }

    /// Largest `|λ_k|`, zero for the zero matrix.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }
}

/// `λ_k = −2a·cos(nkπ/(n+3)) − 2b·cos((n+1)kπ/(n+3)) − 2c·cos((n+2)kπ/(n+3)) − d·cos(kπ)`.
pub fn spectral_symbols(params: &HeptaParams) -> SpectralSymbols {
    let n = params.n() as i64;
    let m = n + 3;
    let values = (1..=n + 2)
        .map(|k| {
            -2.0 * params.a() * cos_pi_ratio(n * k, m)
                - 2.0 * params.b() * cos_pi_ratio((n + 1) * k, m)
                - 2.0 * params.c() * cos_pi_ratio((n + 2) * k, m)
                - params.d() * cos_pi_ratio(k, 1)
        })
        .collect();
    SpectralSymbols {
        n: params.n(),
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_only_alternates_exactly() {
        for n in 1..20 {
            let s = spectral_symbols(&HeptaParams::new(n, 0.0, 0.0, 0.0, 1.0).unwrap());
            assert_eq!(s.values().len(), n + 2);
            for k in 1..=n + 2 {
                let expected = if k % 2 == 1 { 1.0 } else { -1.0 };
                assert_eq!(s.lambda(k), expected);
            }
        }
        let s = spectral_symbols(&HeptaParams::new(1, 0.0, 0.0, 0.0, 5.0).unwrap());
        assert_eq!(s.values(), &[5.0, -5.0, 5.0]);
    }

    #[test]
    fn n2_closed_form() {
        // λ_k = −4cos(4kπ/5) + (−1)^{k+1}: (2+√5, −√5, 2−√5, √5)
        let s = spectral_symbols(&HeptaParams::new(2, 0.0, 0.0, 2.0, 1.0).unwrap());
        let r5 = 5f64.sqrt();
        let expected = [2.0 + r5, -r5, 2.0 - r5, r5];
        for (got, want) in s.values().iter().zip(expected) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }

    #[test]
    fn matches_first_quadrant_form() {
        // λ_k = (−1)^{k+1}(d + 2c·cos θ + 2b·cos 2θ + 2a·cos 3θ), θ = kπ/(n+3)
        let (a, b, c, d) = (0.4, -1.3, 0.9, 1.7);
        for n in 1..30usize {
            let s = spectral_symbols(&HeptaParams::new(n, a, b, c, d).unwrap());
            for k in 1..=n + 2 {
                let t = std::f64::consts::PI * k as f64 / (n + 3) as f64;
                let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                let want = sign
                    * (d + 2.0 * c * t.cos()
                        + 2.0 * b * (2.0 * t).cos()
                        + 2.0 * a * (3.0 * t).cos());
                assert!((s.lambda(k) - want).abs() < 1e-13);
            }
        }
    }
}
