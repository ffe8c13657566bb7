//! Eigenpairs, inverse, alternant diagonalization and integer powers.
//!
//! Everything is expressed in block coordinates and lifted back through
//! [`ParityDecomposition`]. An eigenvector of the first block is
//! `q = R·scatter((I+uuᵀ)s, 0)` with `s_j = u_j/(μ − λ_j)`, and the inner
//! product of two lifted vectors is `sᵀ(I+uuᵀ)s'`, so tied roots are
//! orthonormalized in that inner product.

use crate::decomposition::ParityDecomposition;
use crate::error::{HeptaError, Result};
use crate::matrix::{dot, norm2, DenseMatrix};
use crate::params::HeptaParams;
use crate::scaled::Scaled;
pub use crate::secular::FamilyTag;
use crate::secular::{
    alternant_family_f, alternant_family_g, eval_family, family_f, family_g, solve_roots, RootKind,
    RootSet, SecularFamily, TieCluster,
};
use crate::symbols::{spectral_symbols, SpectralSymbols};
use crate::trig::sin_pi_ratio;

const SYMBOL_ZERO_TOL: f64 = 1e-13;
const CERTIFICATE_TOL: f64 = 1e-12;
const SIGN_TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: DenseMatrix,
    family_tags: Vec<FamilyTag>,
}

impl EigenDecomposition {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Column `k` is the unit eigenvector of `values()[k]`.
    pub fn vectors(&self) -> &DenseMatrix {
        &self.vectors
    }

    pub fn family_tags(&self) -> &[FamilyTag] {
        &self.family_tags
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Both shifted families with their roots.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub symbols: SpectralSymbols,
    pub f: SecularFamily,
    pub g: SecularFamily,
    pub f_roots: RootSet,
    pub g_roots: RootSet,
}

impl Spectrum {
    pub fn family(&self, tag: FamilyTag) -> (&SecularFamily, &RootSet) {
        match tag {
            FamilyTag::F => (&self.f, &self.f_roots),
            FamilyTag::G => (&self.g, &self.g_roots),
        }
    }

    /// `(value, bracket, tag)` for every eigenvalue, sorted by value.
    pub fn tagged(&self) -> Vec<(f64, (f64, f64), FamilyTag)> {
        let mut out: Vec<_> = self
            .f_roots
            .roots()
            .iter()
            .zip(self.f_roots.brackets())
            .map(|(&r, &b)| (r, b, FamilyTag::F))
            .chain(
                self.g_roots
                    .roots()
                    .iter()
                    .zip(self.g_roots.brackets())
                    .map(|(&r, &b)| (r, b, FamilyTag::G)),
            )
            .collect();
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }
}

pub fn spectrum(params: &HeptaParams) -> Result<Spectrum> {
    let symbols = spectral_symbols(params);
    let f = family_f(&symbols);
    let g = family_g(&symbols);
    let f_roots = solve_roots(&f)?;
    let g_roots = solve_roots(&g)?;
    Ok(Spectrum {
        symbols,
        f,
        g,
        f_roots,
        g_roots,
    })
}

/// Sorted eigenvalues: the merged roots of `f` and `g`.
pub fn eigenvalues(params: &HeptaParams) -> Result<Vec<f64>> {
    let sp = spectrum(params)?;
    Ok(sp.tagged().into_iter().map(|t| t.0).collect())
}

fn border(dec: &ParityDecomposition, tag: FamilyTag) -> &[f64] {
    match tag {
        FamilyTag::F => dec.u(),
        FamilyTag::G => dec.v(),
    }
}

fn lift_block(dec: &ParityDecomposition, tag: FamilyTag, s: &[f64]) -> Vec<f64> {
    match tag {
        FamilyTag::F => dec.eigen_lift(s, &vec![0.0; dec.v().len()]),
        FamilyTag::G => dec.eigen_lift(&vec![0.0; dec.u().len()], s),
    }
}

/// Unit norm, and the first entry of largest magnitude made positive.
fn normalize(mut q: Vec<f64>) -> Vec<f64> {
    let norm = norm2(&q);
    if norm > 0.0 {
        q.iter_mut().for_each(|x| *x /= norm);
    }
    let max = q.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if let Some(lead) = q.iter().find(|x| x.abs() >= max * (1.0 - SIGN_TIE_TOL)) {
        if *lead < 0.0 {
            q.iter_mut().for_each(|x| *x = -*x);
        }
    }
    q
}

fn secular_coordinates(family: &SecularFamily, roots: &RootSet, k: usize, w: &[f64]) -> Vec<f64> {
    family
        .nodes()
        .iter()
        .zip(w)
        .map(|(&x, &wj)| wj / roots.gap(k, x))
        .collect()
}

/// Basis of the tie kernel in block coordinates, orthonormal for
/// `⟨s, s'⟩ = sᵀs' + (wᵀs)(wᵀs')`.
fn tie_basis(cluster: &TieCluster, w: &[f64]) -> Vec<Vec<f64>> {
    let h = w.len();
    let unit = |j: usize| {
        let mut e = vec![0.0; h];
        e[j] = 1.0;
        e
    };
    let raw: Vec<Vec<f64>> = if cluster.with_anchor || cluster.nodes.len() == 1 {
        cluster.nodes.iter().map(|&j| unit(j)).collect()
    } else {
        let &pivot = cluster
            .nodes
            .iter()
            .max_by(|&&a, &&b| w[a].abs().total_cmp(&w[b].abs()))
            .unwrap();
        cluster
            .nodes
            .iter()
            .filter(|&&j| j != pivot)
            .map(|&j| {
                let mut s = vec![0.0; h];
                s[j] = w[pivot];
                s[pivot] = -w[j];
                s
            })
            .collect()
    };
    let inner = |a: &[f64], b: &[f64]| dot(a, b) + dot(w, a) * dot(w, b);
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(raw.len());
    for mut s in raw {
        for b in &basis {
            let c = inner(&s, b);
            s.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
        }
        let nrm = inner(&s, &s).sqrt();
        s.iter_mut().for_each(|x| *x /= nrm);
        basis.push(s);
    }
    basis
}

fn root_tolerance(symbols: &SpectralSymbols) -> f64 {
    1e-9 * symbols.max_abs().max(1.0)
}

/// Unit eigenvector for `root` of the given family.
///
/// Pairwise ties use the explicit kernel vector. A root at three or more
/// tied points has no distinguished eigenvector and is refused.
pub fn eigenvector(params: &HeptaParams, root: f64, family_tag: FamilyTag) -> Result<Vec<f64>> {
    let sp = spectrum(params)?;
    let (family, roots) = sp.family(family_tag);
    let k = roots
        .find(root, root_tolerance(&sp.symbols))
        .ok_or(HeptaError::RootNotInSpectrum {
            root,
            family: family_tag,
        })?;
    let dec = ParityDecomposition::new(params.n());
    let w = border(&dec, family_tag);
    let s = match roots.kinds()[k] {
        RootKind::Secular { .. } => secular_coordinates(family, roots, k, w),
        RootKind::Tied { cluster } => {
            let c = &roots.clusters()[cluster];
            if c.multiplicity() >= 3 {
                return Err(HeptaError::AmbiguousTie {
                    root,
                    family: family_tag,
                    multiplicity: c.multiplicity(),
                });
            }
            tie_basis(c, w).swap_remove(0)
        }
    };
    Ok(normalize(lift_block(&dec, family_tag, &s)))
}

/// All eigenpairs. Tie clusters of any size are expanded into an orthonormal
/// basis of their eigenspace.
pub fn eigen_decomposition(params: &HeptaParams) -> Result<EigenDecomposition> {
    let sp = spectrum(params)?;
    let dec = ParityDecomposition::new(params.n());
    let mut pairs: Vec<(f64, Vec<f64>, FamilyTag)> = Vec::with_capacity(params.n());
    for tag in [FamilyTag::F, FamilyTag::G] {
        let (family, roots) = sp.family(tag);
        let w = border(&dec, tag);
        let mut bases: Vec<std::vec::IntoIter<Vec<f64>>> = roots
            .clusters()
            .iter()
            .map(|c| tie_basis(c, w).into_iter())
            .collect();
        for (k, &value) in roots.roots().iter().enumerate() {
            let s = match roots.kinds()[k] {
                RootKind::Secular { .. } => secular_coordinates(family, roots, k, w),
                RootKind::Tied { cluster } => bases[cluster]
                    .next()
                    .expect("one kernel vector per tied root"),
            };
            pairs.push((value, normalize(lift_block(&dec, tag, &s)), tag));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = params.n();
    let mut vectors = DenseMatrix::zeros(n, n);
    for (j, p) in pairs.iter().enumerate() {
        vectors.set_column(j, &p.1);
    }
    Ok(EigenDecomposition {
        values: pairs.iter().map(|p| p.0).collect(),
        vectors,
        family_tags: pairs.iter().map(|p| p.2).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateStatus {
    Nonsingular,
    Singular,
    SymbolZero { index: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct NonsingularityCertificate {
    pub status: CertificateStatus,
    /// `λ₁·uᵀΥ⁻¹u`; `H` is singular when it equals −1.
    pub first_sum: f64,
    /// The same sum for the second block and its anchor.
    pub second_sum: f64,
    /// Whether `sign f(0)·g(0)` agrees with the sums.
    pub agrees_with_families: bool,
}

fn block_sum(symbols: &SpectralSymbols, labels: &[usize], w: &[f64], anchor: usize) -> (f64, f64) {
    let l = symbols.lambda(anchor);
    let terms: Vec<f64> = labels
        .iter()
        .zip(w)
        .map(|(&k, &wj)| l * wj * wj / symbols.lambda(k))
        .collect();
    (terms.iter().sum(), terms.iter().map(|t| t.abs()).sum())
}

pub fn nonsingularity_certificate(params: &HeptaParams) -> NonsingularityCertificate {
    let symbols = spectral_symbols(params);
    let scale = symbols.max_abs();
    let zero = symbols
        .values()
        .iter()
        .position(|l| l.abs() <= SYMBOL_ZERO_TOL * scale);
    if let Some(i) = zero {
        return NonsingularityCertificate {
            status: CertificateStatus::SymbolZero { index: i + 1 },
            first_sum: f64::NAN,
            second_sum: f64::NAN,
            agrees_with_families: true,
        };
    }
    let dec = ParityDecomposition::new(params.n());
    let (s1, m1) = block_sum(&symbols, dec.first_labels(), dec.u(), dec.first_anchor());
    let (s2, m2) = block_sum(&symbols, dec.second_labels(), dec.v(), dec.second_anchor());
    let off = |s: f64, m: f64| (1.0 + s).abs() > CERTIFICATE_TOL * m.max(1.0);
    let nonsingular = off(s1, m1) && off(s2, m2);

    // f(0) = Π(−λ_j)·(1 + first_sum), and likewise for g.
    let prod_sign = |labels: &[usize]| {
        labels.iter().fold(
            1.0,
            |acc, &k| if symbols.lambda(k) > 0.0 { -acc } else { acc },
        )
    };
    let expected = prod_sign(dec.first_labels())
        * (1.0 + s1).signum()
        * prod_sign(dec.second_labels())
        * (1.0 + s2).signum();
    let f0 = eval_family(&family_f(&symbols), 0.0);
    let g0 = eval_family(&family_g(&symbols), 0.0);
    let agrees = if nonsingular {
        (f0 * g0).signum() == expected
    } else {
        true
    };
    NonsingularityCertificate {
        status: if nonsingular {
            CertificateStatus::Nonsingular
        } else {
            CertificateStatus::Singular
        },
        first_sum: s1,
        second_sum: s2,
        agrees_with_families: agrees,
    }
}

/// `C·[Υ⁻¹ − γ·Υ⁻¹wwᵀΥ⁻¹]·C` with `C = I + wwᵀ` and `γ = λ/(1 + λ·wᵀΥ⁻¹w)`.
///
/// With `γ = 1/σ`, `σ = 1/λ + Σ w_j²/λ_j`, the diagonal is evaluated as
/// `σ₋ᵢ/(λ_i σ)` where `σ₋ᵢ` omits term `i`, so a tiny `λ_i` does not cancel.
fn smw_block(symbols: &SpectralSymbols, labels: &[usize], w: &[f64], anchor: usize) -> DenseMatrix {
    let h = labels.len();
    let lambdas: Vec<f64> = labels.iter().map(|&k| symbols.lambda(k)).collect();
    let y: Vec<f64> = w.iter().zip(&lambdas).map(|(wj, l)| wj / l).collect();
    let terms: Vec<f64> = w.iter().zip(&y).map(|(wj, yj)| wj * yj).collect();
    let base = 1.0 / symbols.lambda(anchor);
    let mut prefix = vec![0.0; h + 1];
    for j in 0..h {
        prefix[j + 1] = prefix[j] + terms[j];
    }
    let mut suffix = vec![0.0; h + 1];
    for j in (0..h).rev() {
        suffix[j] = suffix[j + 1] + terms[j];
    }
    let sigma = base + prefix[h];
    let m = DenseMatrix::from_fn(h, h, |i, j| {
        if i == j {
            (base + prefix[i] + suffix[i + 1]) / (lambdas[i] * sigma)
        } else {
            -y[i] * y[j] / sigma
        }
    });
    sandwich(&m, w)
}

/// `(I + wwᵀ)·M·(I + wwᵀ)` in O(h²).
fn sandwich(m: &DenseMatrix, w: &[f64]) -> DenseMatrix {
    let h = w.len();
    let wt_m = m.transpose_matvec(w);
    let left = DenseMatrix::from_fn(h, h, |i, j| m[(i, j)] + w[i] * wt_m[j]);
    right_weight(&left, w)
}

/// `M·(I + wwᵀ)`.
fn right_weight(m: &DenseMatrix, w: &[f64]) -> DenseMatrix {
    let mw = m.matvec(w);
    DenseMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)] + mw[i] * w[j])
}

/// Explicit inverse through the two Sherman–Morrison–Woodbury blocks.
pub fn inverse(params: &HeptaParams) -> Result<DenseMatrix> {
    let cert = nonsingularity_certificate(params);
    match cert.status {
        CertificateStatus::SymbolZero { index } => return Err(HeptaError::SymbolZero { index }),
        CertificateStatus::Singular => return Err(HeptaError::SingularMatrix),
        CertificateStatus::Nonsingular => {}
    }
    let symbols = spectral_symbols(params);
    let dec = ParityDecomposition::new(params.n());
    let u_block = smw_block(&symbols, dec.first_labels(), dec.u(), dec.first_anchor());
    let v_block = smw_block(&symbols, dec.second_labels(), dec.v(), dec.second_anchor());
    Ok(dec.assemble(&u_block, &v_block))
}

/// The alternant eigenvector matrices of the two weighted blocks and their
/// closed-form inverses.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternantPair {
    f: DenseMatrix,
    g: DenseMatrix,
    f_inv: DenseMatrix,
    g_inv: DenseMatrix,
    phi: Vec<f64>,
    psi: Vec<f64>,
}

impl AlternantPair {
    pub fn f(&self) -> &DenseMatrix {
        &self.f
    }

    pub fn g(&self) -> &DenseMatrix {
        &self.g
    }

    pub fn f_inv(&self) -> &DenseMatrix {
        &self.f_inv
    }

    pub fn g_inv(&self) -> &DenseMatrix {
        &self.g_inv
    }

    /// Roots of `F`.
    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    /// Roots of `G`.
    pub fn psi(&self) -> &[f64] {
        &self.psi
    }
}

fn check_distinct(family: &SecularFamily) -> Result<()> {
    match family.first_coincidence() {
        Some((first, second)) => Err(HeptaError::DistinctnessViolated {
            family: family.tag(),
            first,
            second,
        }),
        None => Ok(()),
    }
}

/// `X[k,ℓ] = ξ_k/(x_k − φ_ℓ)` and its inverse `Q⁻¹Ξ⁻¹`, where
/// `Q⁻¹[k,ℓ] = (−1)^N·A_k·E_ℓ / ((φ_k − x_ℓ)·B_k·D_ℓ)` with
/// `A_k = Π_j(φ_k − x_j)`, `E_ℓ = Π_j(φ_j − x_ℓ)`, `B_k = Π_{j≠k}(φ_k − φ_j)`
/// and `D_ℓ = Π_{j≠ℓ}(x_ℓ − x_j)`.
fn alternant_block(
    family: &SecularFamily,
    roots: &RootSet,
    n: usize,
) -> (DenseMatrix, DenseMatrix) {
    let x = family.nodes();
    let phi = roots.roots();
    let h = x.len();
    let period = n as i64 + 3;
    let xi: Vec<f64> = family
        .labels()
        .iter()
        .zip(x)
        .map(|(&k, &xk)| (xk - family.anchor()) * sin_pi_ratio(k as i64, period))
        .collect();
    // gap[k][j] = φ_k − x_j
    let gap: Vec<Vec<f64>> = (0..h)
        .map(|k| x.iter().map(|&xj| roots.gap(k, xj)).collect())
        .collect();

    let forward = DenseMatrix::from_fn(h, h, |k, l| xi[k] / -gap[l][k]);

    let a: Vec<Scaled> = (0..h)
        .map(|k| Scaled::product(gap[k].iter().copied()))
        .collect();
    let e: Vec<Scaled> = (0..h)
        .map(|l| Scaled::product((0..h).map(|j| gap[j][l])))
        .collect();
    let b: Vec<Scaled> = (0..h)
        .map(|k| Scaled::product((0..h).filter(|&j| j != k).map(|j| phi[k] - phi[j])))
        .collect();
    let d: Vec<Scaled> = (0..h)
        .map(|l| Scaled::product((0..h).filter(|&j| j != l).map(|j| x[l] - x[j])))
        .collect();
    let sign = if h.is_multiple_of(2) { 1.0 } else { -1.0 };
    let inverse = DenseMatrix::from_fn(h, h, |k, l| {
        let num = a[k] * e[l];
        let den = b[k] * d[l] * gap[k][l] * xi[l];
        sign * (num / den).to_f64()
    });
    (forward, inverse)
}

pub fn alternant_pair(params: &HeptaParams) -> Result<AlternantPair> {
    let symbols = spectral_symbols(params);
    let fam_f = alternant_family_f(&symbols);
    let fam_g = alternant_family_g(&symbols);
    check_distinct(&fam_f)?;
    check_distinct(&fam_g)?;
    let rf = solve_roots(&fam_f)?;
    let rg = solve_roots(&fam_g)?;
    let (f, f_inv) = alternant_block(&fam_f, &rf, params.n());
    let (g, g_inv) = alternant_block(&fam_g, &rg, params.n());
    Ok(AlternantPair {
        f,
        g,
        f_inv,
        g_inv,
        phi: rf.roots().to_vec(),
        psi: rg.roots().to_vec(),
    })
}

/// The eigenvalue-free factorization: `R`, `P`, the alternant pair and the
/// weights `(I+uuᵀ)⊕(I+vvᵀ)` linking it back to `H`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub decomposition: ParityDecomposition,
    pub alternants: AlternantPair,
}

impl Diagonalization {
    /// `F·diag(φᵐ)·F⁻¹·(I+uuᵀ)` and the matching second block.
    fn power_blocks(&self, m: i32) -> (DenseMatrix, DenseMatrix) {
        let alt = &self.alternants;
        let block = |x: &DenseMatrix, x_inv: &DenseMatrix, roots: &[f64], w: &[f64]| {
            let scaled =
                DenseMatrix::from_fn(x.rows(), x.cols(), |i, j| x[(i, j)] * roots[j].powi(m));
            right_weight(&scaled.matmul(x_inv), w)
        };
        (
            block(&alt.f, &alt.f_inv, &alt.phi, self.decomposition.u()),
            block(&alt.g, &alt.g_inv, &alt.psi, self.decomposition.v()),
        )
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        self.power(1)
    }

    pub fn power(&self, m: i32) -> DenseMatrix {
        let (first, second) = self.power_blocks(m);
        self.decomposition.assemble(&first, &second)
    }
}

pub fn diagonalize(params: &HeptaParams) -> Result<Diagonalization> {
    Ok(Diagonalization {
        decomposition: ParityDecomposition::new(params.n()),
        alternants: alternant_pair(params)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerPath {
    Identity,
    Alternant,
    /// The alternant hypotheses failed; powered through the eigendecomposition.
    EigenFallback,
}

/// `Hᵐ`, falling back to `Q·diag(μᵐ)·Qᵀ` when the alternant factorization
/// is unavailable.
pub fn power(params: &HeptaParams, m: i32) -> Result<DenseMatrix> {
    power_with_path(params, m).map(|p| p.0)
}

/// `Hᵐ` through the alternant factorization only.
pub fn power_structured(params: &HeptaParams, m: i32) -> Result<DenseMatrix> {
    if m == 0 {
        return Ok(DenseMatrix::identity(params.n()));
    }
    let diag = diagonalize(params)?;
    if m < 0 {
        let alt = &diag.alternants;
        if alt.phi.iter().chain(&alt.psi).any(|&r| r == 0.0)
            || nonsingularity_certificate(params).status == CertificateStatus::Singular
        {
            return Err(HeptaError::SingularMatrix);
        }
    }
    Ok(diag.power(m))
}

pub fn power_with_path(params: &HeptaParams, m: i32) -> Result<(DenseMatrix, PowerPath)> {
    if m == 0 {
        return Ok((DenseMatrix::identity(params.n()), PowerPath::Identity));
    }
    match power_structured(params, m) {
        Ok(p) => Ok((p, PowerPath::Alternant)),
        Err(HeptaError::DistinctnessViolated { .. }) => {
            let eig = eigen_decomposition(params)?;
            if m < 0 {
                let scale = eig.values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
                if eig
                    .values
                    .iter()
                    .any(|v| v.abs() <= SYMBOL_ZERO_TOL * scale.max(f64::MIN_POSITIVE))
                {
                    return Err(HeptaError::SingularMatrix);
                }
            }
            let q = &eig.vectors;
            let n = params.n();
            let qd = DenseMatrix::from_fn(n, n, |i, j| q[(i, j)] * eig.values[j].powi(m));
            Ok((qd.matmul(&q.transpose()), PowerPath::EigenFallback))
        }
        Err(e) => Err(e),
    }
}

/// `det(tI − H)` from the two families: a constant times `f(t)·g(t)`.
pub fn characteristic_polynomial(params: &HeptaParams, t: f64) -> f64 {
    let symbols = spectral_symbols(params);
    let n = params.n() as i64;
    let period = n + 3;
    let s1 = sin_pi_ratio(1, period);
    let other = if params.is_even() {
        s1
    } else {
        sin_pi_ratio(n + 1, period)
    };
    let kappa = 16.0 * s1 * s1 * other * other / (period * period) as f64;
    kappa * eval_family(&family_f(&symbols), t) * eval_family(&family_g(&symbols), t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, a: f64, b: f64, c: f64, d: f64) -> HeptaParams {
        HeptaParams::new(n, a, b, c, d).unwrap()
    }

    fn residual(params: &HeptaParams, value: f64, q: &[f64]) -> f64 {
        let h = params.build_dense();
        let hq = h.matvec(q);
        hq.iter()
            .zip(q)
            .map(|(a, b)| (a - value * b).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn h2_eigenpairs() {
        let h2 = p(2, 0.0, 0.0, 2.0, 1.0);
        let vals = eigenvalues(&h2).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let q3 = eigenvector(&h2, 3.0, FamilyTag::F).unwrap();
        assert!((q3[0] - r).abs() < 1e-14 && (q3[1] - r).abs() < 1e-14);
        let q1 = eigenvector(&h2, 1.0, FamilyTag::G).unwrap();
        assert!((q1[0].abs() - r).abs() < 1e-14 && (q1[0] + q1[1]).abs() < 1e-14);
        assert!(q1[0] > 0.0);
        assert!(matches!(
            eigenvector(&h2, 2.0, FamilyTag::F),
            Err(HeptaError::RootNotInSpectrum { .. })
        ));
    }

    #[test]
    fn h4_and_h5_spectra() {
        let vals = eigenvalues(&p(4, 1.0, 0.0, 1.0, 0.0)).unwrap();
        for (v, w) in vals.iter().zip([0.0, 0.0, 2.0, 2.0]) {
            assert!((v - w).abs() < 1e-12, "{vals:?}");
        }
        let vals = eigenvalues(&p(5, 1.0, 0.0, 0.0, 0.0)).unwrap();
        for (v, w) in vals.iter().zip([-1.0, -1.0, 0.0, 1.0, 1.0]) {
            assert!((v - w).abs() < 1e-12, "{vals:?}");
        }
    }

    #[test]
    fn h4_h5_eigenvectors() {
        for params in [p(4, 1.0, 0.0, 1.0, 0.0), p(5, 1.0, 0.0, 0.0, 0.0)] {
            let eig = eigen_decomposition(&params).unwrap();
            let fro = params.build_dense().frobenius_norm();
            for k in 0..params.n() {
                let q = eig.vectors().column(k);
                assert!((norm2(&q) - 1.0).abs() < 1e-12);
                assert!(residual(&params, eig.values()[k], &q) <= 1e-10 * fro);
            }
            for (k, &v) in eig.values().iter().enumerate() {
                let q = eigenvector(&params, v, eig.family_tags()[k]).unwrap();
                assert!(residual(&params, v, &q) <= 1e-10);
            }
        }
    }

    #[test]
    fn exchange_matrix_has_balanced_signs() {
        for n in 1..=15 {
            let j = p(n, 0.0, 0.0, 0.0, 1.0);
            let eig = eigen_decomposition(&j).unwrap();
            let ones = eig
                .values()
                .iter()
                .filter(|&&v| (v - 1.0).abs() < 1e-12)
                .count();
            let minus = eig
                .values()
                .iter()
                .filter(|&&v| (v + 1.0).abs() < 1e-12)
                .count();
            assert_eq!((ones, minus), (n.div_ceil(2), n / 2), "n={n}");
            let q = eig.vectors();
            let qtq = q.transpose().matmul(q);
            assert!(qtq.max_abs_diff(&DenseMatrix::identity(n)) < 1e-12, "n={n}");
            for k in 0..n {
                assert!(residual(&j, eig.values()[k], &q.column(k)) < 1e-12);
            }
        }
        // three tied points in f for n = 4
        let err = eigenvector(&p(4, 0.0, 0.0, 0.0, 1.0), 1.0, FamilyTag::F).unwrap_err();
        assert!(matches!(
            err,
            HeptaError::AmbiguousTie {
                multiplicity: 3,
                ..
            }
        ));
    }

    #[test]
    fn n1_pair() {
        let eig = eigen_decomposition(&p(1, 0.0, 0.0, 0.0, -3.0)).unwrap();
        assert_eq!(eig.values(), &[-3.0]);
        assert_eq!(eig.vectors().as_slice(), &[1.0]);
    }

    #[test]
    fn inverse_examples() {
        let inv = inverse(&p(2, 0.0, 0.0, 2.0, 1.0)).unwrap();
        let want = DenseMatrix::from_rows(&[[2.0 / 3.0, -1.0 / 3.0], [-1.0 / 3.0, 2.0 / 3.0]]);
        assert!(inv.max_abs_diff(&want) <= 1e-14);
        for n in 1..=9 {
            let j = p(n, 0.0, 0.0, 0.0, 1.0);
            assert!(inverse(&j).unwrap().max_abs_diff(&j.build_dense()) < 1e-13);
        }
        assert_eq!(
            inverse(&p(4, 1.0, 0.0, 1.0, 0.0)),
            Err(HeptaError::SingularMatrix)
        );
        assert!(matches!(
            inverse(&p(5, 1.0, 0.0, 0.0, 0.0)),
            Err(HeptaError::SymbolZero { .. })
        ));
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(
            nonsingularity_certificate(&p(4, 1.0, 0.0, 1.0, 0.0)).status,
            CertificateStatus::Singular
        );
        assert_eq!(
            nonsingularity_certificate(&p(6, 0.0, 0.0, 0.0, 1.0)).status,
            CertificateStatus::Nonsingular
        );
        let c = nonsingularity_certificate(&p(2, 0.0, 0.0, 2.0, 1.0));
        assert_eq!(c.status, CertificateStatus::Nonsingular);
        assert!((c.first_sum + 1.0).abs() > 0.1 && (c.second_sum + 1.0).abs() > 0.1);
        assert!(c.agrees_with_families);
    }

    #[test]
    fn alternant_examples() {
        let alt = alternant_pair(&p(2, 0.0, 0.0, 2.0, 1.0)).unwrap();
        assert_eq!(alt.f().rows(), 1);
        assert!((alt.f()[(0, 0)] * alt.f_inv()[(0, 0)] - 1.0).abs() < 1e-14);
        assert!(matches!(
            alternant_pair(&p(6, 0.0, 0.0, 0.0, 1.0)),
            Err(HeptaError::DistinctnessViolated { .. })
        ));
        let d = diagonalize(&p(2, 0.0, 0.0, 2.0, 1.0)).unwrap();
        assert!(
            d.reconstruct()
                .max_abs_diff(&p(2, 0.0, 0.0, 2.0, 1.0).build_dense())
                <= 1e-12
        );
    }

    #[test]
    fn alternant_roots_match_shifted_roots() {
        let params = p(11, 0.3, -0.7, 1.2, 0.45);
        let sp = spectrum(&params).unwrap();
        let alt = alternant_pair(&params).unwrap();
        for (a, b) in alt.phi().iter().zip(sp.f_roots.roots()) {
            assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in alt.psi().iter().zip(sp.g_roots.roots()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn power_examples() {
        let j = p(6, 0.0, 0.0, 0.0, 1.0);
        let (sq, path) = power_with_path(&j, 2).unwrap();
        assert_eq!(path, PowerPath::EigenFallback);
        assert!(sq.max_abs_diff(&DenseMatrix::identity(6)) <= 1e-14);
        assert!(matches!(
            power_structured(&j, 2),
            Err(HeptaError::DistinctnessViolated { .. })
        ));
        let h2 = p(2, 0.0, 0.0, 2.0, 1.0);
        let inv = power(&h2, -1).unwrap();
        assert!(inv.max_abs_diff(&inverse(&h2).unwrap()) <= 1e-12);
        assert_eq!(power(&h2, 0).unwrap(), DenseMatrix::identity(2));
    }
}
