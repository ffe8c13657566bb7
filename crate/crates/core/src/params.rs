use crate::error::{HeptaError, Result};
use crate::matrix::DenseMatrix;

/// An n×n anti-heptadiagonal persymmetric Hankel matrix, described by its
/// order and the four band symbols.
///
/// Entry `(k, ℓ)` (1-based) is `d` on the main anti-diagonal `k+ℓ = n+1`,
/// `c` one anti-diagonal away, `b` two away and `a` three away; every other
/// entry is zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeptaParams {
    n: usize,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl HeptaParams {
    pub fn new(n: usize, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if n == 0 {
            return Err(HeptaError::InvalidParams(
                "order n must be at least 1".into(),
            ));
        }
        for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            if !v.is_finite() {
                return Err(HeptaError::InvalidParams(format!(
                    "{name} = {v} is not finite"
                )));
            }
        }
        Ok(Self { n, a, b, c, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    /// Band symbol at anti-diagonal distance `s`: `d, c, b, a, 0, 0, …`.
    fn band(&self, s: usize) -> f64 {
        match s {
            0 => self.d,
            1 => self.c,
            2 => self.b,
            3 => self.a,
            _ => 0.0,
        }
    }

    /// Dense n×n materialization of the matrix.
    pub fn build_dense(&self) -> DenseMatrix {
        let n = self.n;
        // 1-based: H[k,ℓ] = band(|k+ℓ-(n+1)|); 0-based i+j+2 = k+ℓ.
        DenseMatrix::from_fn(n, n, |i, j| self.band((i + j + 2).abs_diff(n + 1)))
    }

    /// The (n+2)×(n+2) bordered extension whose interior is `build_dense()`
    /// and which is simultaneously diagonalized by the sine transform.
    ///
    /// It equals `p(Ω)·J` with `p(x) = (d−2b) + (c−3a)x + bx² + ax³`, i.e. a
    /// Hankel matrix whose two outer corners carry `c−a` and `d−b`.
    pub fn build_hat(&self) -> DenseMatrix {
        let m = self.n + 2;
        DenseMatrix::from_fn(m, m, |i, j| {
            let (k, l) = (i + 1, j + 1);
            self.band((k + l).abs_diff(m + 1)) - self.band(m + 1 + k - l) - self.band(m + 1 + l - k)
        })
    }
}

pub fn build_dense(params: &HeptaParams) -> DenseMatrix {
    params.build_dense()
}

pub fn build_hat(params: &HeptaParams) -> DenseMatrix {
    params.build_hat()
}
