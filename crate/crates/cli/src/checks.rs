//! Per-instance verification against the dense oracle. Each check reports
//! its worst error divided by its tolerance, so a ratio ≤ 1 passes.

use hepta::oracle::{
    condition_estimate, dense_multiply, jacobi_eigen_symmetric, lu_det, lu_inverse,
};
use hepta::{
    eigen_decomposition, eigenvalues, inverse, nonsingularity_certificate, parity_decomposition,
    power_structured, spectral_symbols, spectrum, synthesize_hat, CertificateStatus, DenseMatrix,
    HeptaError, HeptaParams,
};

pub const EIGENVALUE_TOL: f64 = 1e-8;
pub const RESIDUAL_TOL: f64 = 1e-8;
pub const RECONSTRUCTION_TOL: f64 = 1e-10;
pub const INVERSE_IDENTITY_TOL: f64 = 1e-7;
pub const INVERSE_ORACLE_TOL: f64 = 1e-6;
pub const INVERSE_MAX_CONDITION: f64 = 1e6;
pub const POWER_TOL: f64 = 1e-8;
pub const POWER_INVERSE_TOL: f64 = 1e-12;
pub const POWER_MAX_N: usize = 24;
pub const PREFACTOR_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Eigenvalues,
    Residuals,
    Reconstruction,
    Inverse,
    Powers,
    Prefactor,
    Interlacing,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Eigenvalues,
        Check::Residuals,
        Check::Reconstruction,
        Check::Inverse,
        Check::Powers,
        Check::Prefactor,
        Check::Interlacing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Eigenvalues => "eigenvalues",
            Check::Residuals => "residuals",
            Check::Reconstruction => "reconstruction",
            Check::Inverse => "inverse",
            Check::Powers => "powers",
            Check::Prefactor => "prefactor",
            Check::Interlacing => "interlacing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Outcome {
    /// Worst error over tolerance.
    Pass(f64),
    Fail(f64),
    Skipped,
}

impl Outcome {
    pub fn from_ratio(ratio: f64) -> Self {
        if ratio <= 1.0 {
            Outcome::Pass(ratio)
        } else {
            Outcome::Fail(ratio)
        }
    }

    pub fn is_fail(self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    pub fn ratio(self) -> Option<f64> {
        match self {
            Outcome::Pass(r) | Outcome::Fail(r) => Some(r),
            Outcome::Skipped => None,
        }
    }
}

fn engine_failure(_: HeptaError) -> Outcome {
    Outcome::Fail(f64::INFINITY)
}

fn vector_residual(h: &DenseMatrix, mu: f64, q: &[f64]) -> f64 {
    h.matvec(q)
        .iter()
        .zip(q)
        .map(|(a, b)| (a - mu * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

pub fn check_eigenvalues(params: &HeptaParams) -> Outcome {
    let h = params.build_dense();
    let ours = match eigenvalues(params) {
        Ok(v) => v,
        Err(e) => return engine_failure(e),
    };
    let Ok((oracle, _)) = jacobi_eigen_symmetric(&h) else {
        return Outcome::Fail(f64::INFINITY);
    };
    if ours.len() != oracle.len() {
        return Outcome::Fail(f64::INFINITY);
    }
    let tol = EIGENVALUE_TOL * h.frobenius_norm().max(1.0);
    let worst = ours
        .iter()
        .zip(&oracle)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Outcome::from_ratio(worst / tol)
}

pub fn check_residuals(params: &HeptaParams) -> Outcome {
    let h = params.build_dense();
    let eig = match eigen_decomposition(params) {
        Ok(e) => e,
        Err(e) => return engine_failure(e),
    };
    let tol = RESIDUAL_TOL * h.frobenius_norm();
    let worst = (0..params.n())
        .map(|k| vector_residual(&h, eig.values()[k], &eig.vectors().column(k)))
        .fold(0.0, f64::max);
    if tol == 0.0 {
        return Outcome::from_ratio(if worst == 0.0 { 0.0 } else { f64::INFINITY });
    }
    Outcome::from_ratio(worst / tol)
}

/// Block assembly against `build_dense`, and the sine synthesis of `Ĥ`.
pub fn check_reconstruction(params: &HeptaParams) -> Outcome {
    let symbols = spectral_symbols(params);
    let h = params.build_dense();
    let hat = params.build_hat();
    let assembly = parity_decomposition(params)
        .reconstruct(&symbols)
        .max_abs_diff(&h)
        / (RECONSTRUCTION_TOL * h.max_abs().max(1.0));
    let synthesis =
        synthesize_hat(&symbols).max_abs_diff(&hat) / (RECONSTRUCTION_TOL * hat.max_abs().max(1.0));
    Outcome::from_ratio(assembly.max(synthesis))
}

/// Skipped unless the oracle condition estimate is ≤ 1e6 and the
/// certificate is nonsingular.
pub fn check_inverse(params: &HeptaParams) -> Outcome {
    let h = params.build_dense();
    if condition_estimate(&h) > INVERSE_MAX_CONDITION
        || nonsingularity_certificate(params).status != CertificateStatus::Nonsingular
    {
        return Outcome::Skipped;
    }
    let inv = match inverse(params) {
        Ok(m) => m,
        Err(e) => return engine_failure(e),
    };
    let Ok(oracle) = lu_inverse(&h) else {
        return Outcome::Fail(f64::INFINITY);
    };
    let identity = h
        .matmul(&inv)
        .max_abs_diff(&DenseMatrix::identity(params.n()))
        / INVERSE_IDENTITY_TOL;
    let entrywise = inv.max_abs_diff(&oracle) / (INVERSE_ORACLE_TOL * oracle.max_abs());
    Outcome::from_ratio(identity.max(entrywise))
}

/// Structured powers for `m ∈ −3..=6` against repeated oracle products;
/// `m = −1` also against [`inverse`]. Skipped above `n = 24` and when the
/// distinctness hypotheses fail.
pub fn check_powers(params: &HeptaParams) -> Outcome {
    if params.n() > POWER_MAX_N {
        return Outcome::Skipped;
    }
    let h = params.build_dense();
    let invertible = condition_estimate(&h) <= INVERSE_MAX_CONDITION;
    let oracle_inv = if invertible {
        lu_inverse(&h).ok()
    } else {
        None
    };
    let mut worst: f64 = 0.0;
    let mut tested = false;
    for m in -3i32..=6 {
        let base = if m < 0 {
            match &oracle_inv {
                Some(inv) => inv,
                None => continue,
            }
        } else {
            &h
        };
        let ours = match power_structured(params, m) {
            Ok(p) => p,
            Err(HeptaError::DistinctnessViolated { .. }) => return Outcome::Skipped,
            Err(e) => return engine_failure(e),
        };
        let mut want = DenseMatrix::identity(params.n());
        for _ in 0..m.unsigned_abs() {
            want = dense_multiply(&want, base).expect("square factors");
        }
        worst = worst.max(ours.max_abs_diff(&want) / (POWER_TOL * want.max_abs()));
        if m == -1 && nonsingularity_certificate(params).status == CertificateStatus::Nonsingular {
            if let Ok(inv) = inverse(params) {
                worst = worst
                    .max(ours.max_abs_diff(&inv) / (POWER_INVERSE_TOL * inv.max_abs().max(1.0)));
            }
        }
        tested = true;
    }
    if tested {
        Outcome::from_ratio(worst)
    } else {
        Outcome::Skipped
    }
}

/// `det(tI − H)` by oracle LU against the prefactored family product.
pub fn check_prefactor(params: &HeptaParams, t: f64) -> Outcome {
    let h = params.build_dense();
    let n = params.n();
    let shifted =
        DenseMatrix::from_fn(n, n, |i, j| if i == j { t - h[(i, j)] } else { -h[(i, j)] });
    let Ok(oracle) = lu_det(&shifted) else {
        return Outcome::Fail(f64::INFINITY);
    };
    let ours = hepta::characteristic_polynomial(params, t);
    if oracle == 0.0 {
        return Outcome::from_ratio(if ours == 0.0 { 0.0 } else { f64::INFINITY });
    }
    Outcome::from_ratio((oracle - ours).abs() / (PREFACTOR_TOL * oracle.abs()))
}

/// For each family whose nodes and anchor are pairwise distinct: every root
/// strictly inside its bracket and a sign change across the bracket.
pub fn check_interlacing(params: &HeptaParams) -> Outcome {
    let sp = match spectrum(params) {
        Ok(s) => s,
        Err(e) => return engine_failure(e),
    };
    let mut tested = false;
    for (family, roots) in [(&sp.f, &sp.f_roots), (&sp.g, &sp.g_roots)] {
        if family.first_coincidence().is_some() {
            continue;
        }
        tested = true;
        for (k, &r) in roots.roots().iter().enumerate() {
            let (lo, hi) = roots.brackets()[k];
            let inside = lo < r && r < hi;
            let sign_change = family.eval(lo) * family.eval(hi) <= 0.0;
            if !(inside && sign_change) {
                return Outcome::Fail(f64::INFINITY);
            }
        }
    }
    if tested {
        Outcome::Pass(0.0)
    } else {
        Outcome::Skipped
    }
}

pub fn run_check(check: Check, params: &HeptaParams, t: f64) -> Outcome {
    match check {
        Check::Eigenvalues => check_eigenvalues(params),
        Check::Residuals => check_residuals(params),
        Check::Reconstruction => check_reconstruction(params),
        Check::Inverse => check_inverse(params),
        Check::Powers => check_powers(params),
        Check::Prefactor => check_prefactor(params, t),
        Check::Interlacing => check_interlacing(params),
    }
}

pub fn run_all(params: &HeptaParams, t: f64) -> Vec<(Check, Outcome)> {
    Check::ALL
        .iter()
        .map(|&c| (c, run_check(c, params, t)))
        .collect()
}

/// Aggregate of one check over many instances.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub worst: f64,
}

impl Tally {
    pub fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass(_) => self.passed += 1,
            Outcome::Fail(_) => self.failed += 1,
            Outcome::Skipped => self.skipped += 1,
        }
        if let Some(r) = outcome.ratio() {
            self.worst = self.worst.max(r);
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}
