//! Structured spectral computations for symmetric heptadiagonal Toeplitz
//! matrices with a Hankel correction.
//!
//! `H[k,ℓ] = t(|k+ℓ−(n+1)|)` with `t = [d, c, b, a]` is the interior of a
//! matrix `Ĥ` of order `n+2` that the sine transform diagonalizes. Deleting
//! the border splits `H` into two diagonal-plus-rank-one blocks, and
//! everything here (eigenvalues, eigenvectors, the inverse, powers) is
//! computed from those blocks in closed form or by secular root finding.
//!
//! ```
//! use hepta::{eigenvalues, HeptaParams};
//!
//! let h = HeptaParams::new(2, 0.0, 0.0, 2.0, 1.0).unwrap();
//! let values = eigenvalues(&h).unwrap();
//! assert!((values[0] - 1.0).abs() < 1e-14 && (values[1] - 3.0).abs() < 1e-14);
//! ```
//!
//! [`oracle`] holds dense reference algorithms used to check the structured
//! paths.

pub mod algebra;
pub mod decomposition;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod params;
pub mod scaled;
pub mod secular;
pub mod spectral;
pub mod symbols;
pub mod trig;

pub use algebra::{
    build_omega_matrix, diagonalize_hat, is_in_algebra, reconstruct, solve_omega, synthesize_hat,
    OmegaCoefficients, TriangularTable,
};
pub use decomposition::{
    border_vectors, build_sine_matrix, parity_decomposition, BorderVectors, Parity,
    ParityDecomposition,
};
pub use error::{HeptaError, Result};
pub use matrix::DenseMatrix;
pub use params::{build_dense, build_hat, HeptaParams};
pub use secular::{
    family_f, family_g, solve_roots, FamilyTag, RootKind, RootSet, SecularFamily, TieCluster,
    Variant,
};
pub use spectral::{
    alternant_pair, characteristic_polynomial, diagonalize, eigen_decomposition, eigenvalues,
    eigenvector, inverse, nonsingularity_certificate, power, power_structured, power_with_path,
    spectrum, AlternantPair, CertificateStatus, Diagonalization, EigenDecomposition,
    NonsingularityCertificate, PowerPath, Spectrum,
};
pub use symbols::{spectral_symbols, SpectralSymbols};
