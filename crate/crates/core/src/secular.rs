//! The secular polynomials whose zeros are the eigenvalues of the two blocks.
//!
//! A family holds nodes `x_j`, weights `w_j` and an anchor `α`:
//!
//! ```text
//! shifted:   p(t) = Π(t − x_j) + (t − α)·Σ_j w_j Π_{m≠j}(t − x_m)
//! weighted:  p(t) = Π(t − x_j) +          Σ_j w_j Π_{m≠j}(t − x_m)
//! ```
//!
//! With the families built from the symbols, sorting `{α} ∪ {x_j}` gives one
//! closed bracket per root. Tied sorted points are deflated first; each tie
//! contributes an exact root at the tied value.

use std::fmt;

use crate::decomposition::BlockLayout;
use crate::error::{HeptaError, Result};
use crate::scaled::Scaled;
use crate::symbols::SpectralSymbols;
use crate::trig::sin_pi_ratio;

const TIE_TOL: f64 = 1e-13;
const BISECTION_STEPS: usize = 40;
const NEWTON_STEPS: usize = 8;

/// Which block (and which pair of polynomials) a quantity belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// Odd-labelled symbols, anchor `λ₁`.
    F,
    /// Even-labelled symbols, anchor `λ_{n+2}` (even n) or `λ_{n+1}` (odd n).
    G,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::F => f.write_str("f"),
            FamilyTag::G => f.write_str("g"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Shifted,
    Weighted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecularFamily {
    variant: Variant,
    tag: FamilyTag,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    anchor: f64,
    labels: Vec<usize>,
    anchor_label: usize,
}

impl SecularFamily {
    /// A free-standing family. Symbol labels are left at zero.
    pub fn new(
        variant: Variant,
        tag: FamilyTag,
        nodes: Vec<f64>,
        weights: Vec<f64>,
        anchor: f64,
    ) -> Self {
        assert_eq!(nodes.len(), weights.len(), "one weight per node");
        let labels = vec![0; nodes.len()];
        Self {
            variant,
            tag,
            nodes,
            weights,
            anchor,
            labels,
            anchor_label: 0,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    /// Symbol index `k` of `λ_k` for each node (0 when built by hand).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn anchor_label(&self) -> usize {
        self.anchor_label
    }

    pub fn degree(&self) -> usize {
        self.nodes.len()
    }

    pub fn eval(&self, t: f64) -> f64 {
        eval_family(self, t)
    }

    /// First pair of symbol labels among `{anchor} ∪ nodes` whose values are
    /// tied, if any.
    pub fn first_coincidence(&self) -> Option<(usize, usize)> {
        let mut pts: Vec<(f64, usize)> = self
            .nodes
            .iter()
            .zip(&self.labels)
            .map(|(&x, &l)| (x, l))
            .collect();
        pts.push((self.anchor, self.anchor_label));
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        // the two smallest labels of the lowest tie chain
        let start = (0..pts.len().saturating_sub(1)).find(|&i| tied(pts[i].0, pts[i + 1].0))?;
        let mut end = start + 1;
        while end + 1 < pts.len() && tied(pts[end].0, pts[end + 1].0) {
            end += 1;
        }
        let mut labels: Vec<usize> = pts[start..=end].iter().map(|p| p.1).collect();
        labels.sort_unstable();
        Some((labels[0], labels[1]))
    }

    fn all_finite(&self) -> bool {
        self.anchor.is_finite()
            && self.nodes.iter().all(|x| x.is_finite())
            && self.weights.iter().all(|w| w.is_finite())
    }
}

pub(crate) fn tied(a: f64, b: f64) -> bool {
    (b - a).abs() <= TIE_TOL * 1f64.max(a.abs()).max(b.abs())
}

fn from_layout(symbols: &SpectralSymbols, tag: FamilyTag, variant: Variant) -> SecularFamily {
    let n = symbols.n();
    let layout = BlockLayout::new(n);
    let (labels, border, anchor_label) = match tag {
        FamilyTag::F => (layout.first_labels, layout.u, layout.first_anchor),
        FamilyTag::G => (layout.second_labels, layout.v, layout.second_anchor),
    };
    let anchor = symbols.lambda(anchor_label);
    let nodes: Vec<f64> = labels.iter().map(|&l| symbols.lambda(l)).collect();
    let period = n as i64 + 3;
    let weights = match variant {
        Variant::Shifted => border.iter().map(|u| u * u).collect(),
        Variant::Weighted => labels
            .iter()
            .zip(&nodes)
            .map(|(&l, &x)| {
                let s = sin_pi_ratio(l as i64, period);
                4.0 / period as f64 * s * s * (x - anchor)
            })
            .collect(),
    };
    SecularFamily {
        variant,
        tag,
        nodes,
        weights,
        anchor,
        labels,
        anchor_label,
    }
}

/// `f`: odd-labelled nodes, anchor `λ₁`, weights `sin²(kπ/(n+3))/sin²(π/(n+3))`.
pub fn family_f(symbols: &SpectralSymbols) -> SecularFamily {
    from_layout(symbols, FamilyTag::F, Variant::Shifted)
}

/// `g`: even-labelled nodes with the parity-dependent anchor.
pub fn family_g(symbols: &SpectralSymbols) -> SecularFamily {
    from_layout(symbols, FamilyTag::G, Variant::Shifted)
}

/// `F`: the nodes of `f` with weights `(4/(n+3))·sin²(kπ/(n+3))·(λ_k − λ₁)`.
pub fn alternant_family_f(symbols: &SpectralSymbols) -> SecularFamily {
    from_layout(symbols, FamilyTag::F, Variant::Weighted)
}

/// `G`: the nodes of `g` with weights `(4/(n+3))·sin²(kπ/(n+3))·(λ_k − anchor)`.
pub fn alternant_family_g(symbols: &SpectralSymbols) -> SecularFamily {
    from_layout(symbols, FamilyTag::G, Variant::Weighted)
}

/// Product-sum value of the family at `t`, with exponents tracked separately.
pub fn eval_family(family: &SecularFamily, t: f64) -> f64 {
    eval_scaled(family, t).to_f64()
}

pub(crate) fn eval_scaled(family: &SecularFamily, t: f64) -> Scaled {
    let diffs: Vec<f64> = family.nodes.iter().map(|x| t - x).collect();
    let k = diffs.len();
    if k == 0 {
        return Scaled::ONE;
    }
    let mut suffix = vec![Scaled::ONE; k + 1];
    for j in (0..k).rev() {
        suffix[j] = suffix[j + 1] * diffs[j];
    }
    let mut prefix = Scaled::ONE;
    let mut terms = Vec::with_capacity(k);
    for j in 0..k {
        terms.push(prefix * suffix[j + 1] * family.weights[j]);
        prefix = prefix * diffs[j];
    }
    let shift = match family.variant {
        Variant::Shifted => t - family.anchor,
        Variant::Weighted => 1.0,
    };
    Scaled::sum([prefix, Scaled::sum(terms) * shift])
}

/// How a root was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootKind {
    /// Found by bracketing. The root is `origin + offset`, where `origin` is
    /// the nearer bracket endpoint; gaps to nodes are formed from `offset`.
    Secular { origin: f64, offset: f64 },
    /// Exact root of a tie, index into [`RootSet::clusters`].
    Tied { cluster: usize },
}

/// A set of tied points of `{anchor} ∪ nodes`, or a single node of weight zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TieCluster {
    pub value: f64,
    /// Node indices (0-based) in the cluster.
    pub nodes: Vec<usize>,
    pub with_anchor: bool,
}

impl TieCluster {
    /// Number of coinciding sorted points.
    pub fn multiplicity(&self) -> usize {
        self.nodes.len() + usize::from(self.with_anchor)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    roots: Vec<f64>,
    brackets: Vec<(f64, f64)>,
    exact_flags: Vec<bool>,
    kinds: Vec<RootKind>,
    clusters: Vec<TieCluster>,
}

impl RootSet {
    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn brackets(&self) -> &[(f64, f64)] {
        &self.brackets
    }

    pub fn exact_flags(&self) -> &[bool] {
        &self.exact_flags
    }

    pub fn kinds(&self) -> &[RootKind] {
        &self.kinds
    }

    pub fn clusters(&self) -> &[TieCluster] {
        &self.clusters
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `root_k − x`, formed from the stored offset so that tiny gaps keep
    /// their relative accuracy.
    pub fn gap(&self, k: usize, x: f64) -> f64 {
        match self.kinds[k] {
            RootKind::Secular { origin, offset } => offset - (x - origin),
            RootKind::Tied { .. } => self.roots[k] - x,
        }
    }

    /// Index of the root closest to `value`, if within `tol`.
    pub fn find(&self, value: f64, tol: f64) -> Option<usize> {
        self.roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, (r - value).abs()))
            .filter(|&(_, d)| d <= tol)
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .map(|(i, _)| i)
    }
}

/// Family after deflation: distinct points, one secular root per bracket.
struct Reduced {
    variant: Variant,
    c0: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    anchor: f64,
}

impl Reduced {
    /// Sign of `p(origin + δ)`, with each gap formed as `δ − d_j`.
    fn sign(&self, gaps_to_origin: &[f64], anchor_gap: f64, delta: f64) -> f64 {
        let mut negative = false;
        let mut zero = None;
        let mut zeros = 0;
        let mut sum = 0.0;
        for (j, (&d, &w)) in gaps_to_origin.iter().zip(&self.weights).enumerate() {
            let e = delta - d;
            if e == 0.0 {
                zeros += 1;
                zero = Some(j);
                continue;
            }
            if e < 0.0 {
                negative = !negative;
            }
            sum += w / e;
        }
        let shift = self.shift(anchor_gap, delta);
        let body = match (zeros, zero) {
            (0, _) => self.c0 + shift * sum,
            (1, Some(j)) => shift * self.weights[j],
            _ => 0.0,
        };
        let s = if body > 0.0 {
            1.0
        } else if body < 0.0 {
            -1.0
        } else {
            0.0
        };
        if negative {
            -s
        } else {
            s
        }
    }

    fn shift(&self, anchor_gap: f64, delta: f64) -> f64 {
        match self.variant {
            Variant::Shifted => delta - anchor_gap,
            Variant::Weighted => 1.0,
        }
    }

    /// Newton function and derivative. When the origin is a node the pole is
    /// cancelled by multiplying through by `δ`.
    fn newton_terms(
        &self,
        gaps: &[f64],
        anchor_gap: f64,
        pole: Option<usize>,
        delta: f64,
    ) -> (f64, f64) {
        let mut s = 0.0;
        let mut ds = 0.0;
        for (j, (&d, &w)) in gaps.iter().zip(&self.weights).enumerate() {
            if Some(j) == pole {
                continue;
            }
            let e = delta - d;
            s += w / e;
            ds -= w / (e * e);
        }
        let shift = self.shift(anchor_gap, delta);
        let dshift = match self.variant {
            Variant::Shifted => 1.0,
            Variant::Weighted => 0.0,
        };
        match pole {
            None => (self.c0 + shift * s, dshift * s + shift * ds),
            Some(o) => {
                let wo = self.weights[o];
                let inner = wo + delta * s;
                let psi = self.c0 * delta + shift * inner;
                let dpsi = self.c0 + dshift * inner + shift * (s + delta * ds);
                (psi, dpsi)
            }
        }
    }

    /// Root in the bracket between reduced points `lo < hi`.
    fn solve_bracket(
        &self,
        lo: f64,
        hi: f64,
        lo_pole: Option<usize>,
        hi_pole: Option<usize>,
    ) -> (f64, f64) {
        let gaps_lo: Vec<f64> = self.nodes.iter().map(|x| x - lo).collect();
        let s_lo = self.sign(&gaps_lo, self.anchor - lo, 0.0);
        if s_lo == 0.0 {
            return (lo, 0.0);
        }
        let half = 0.5 * (hi - lo);
        let s_mid = self.sign(&gaps_lo, self.anchor - lo, half);
        if s_mid == 0.0 {
            return (lo, half);
        }
        let (origin, pole, mut a, mut b) = if s_mid != s_lo {
            (lo, lo_pole, 0.0, half)
        } else {
            (hi, hi_pole, (lo + half) - hi, 0.0)
        };
        let gaps: Vec<f64> = self.nodes.iter().map(|x| x - origin).collect();
        let anchor_gap = self.anchor - origin;
        // a root at the midpoint can leave the half bracket without a sign
        // change once re-expressed about the new origin
        let mut s_a = self.sign(&gaps, anchor_gap, a);
        if s_a == 0.0 {
            return (origin, a);
        }
        let s_b = self.sign(&gaps, anchor_gap, b);
        if s_b == 0.0 {
            return (origin, b);
        }
        if s_a == s_b {
            if origin == lo {
                b = hi - lo;
            } else {
                a = lo - hi;
                s_a = self.sign(&gaps, anchor_gap, a);
            }
        }

        for _ in 0..BISECTION_STEPS {
            let m = 0.5 * (a + b);
            if m == a || m == b {
                break;
            }
            let s = self.sign(&gaps, anchor_gap, m);
            if s == 0.0 {
                return (origin, m);
            }
            if s == s_a {
                a = m;
            } else {
                b = m;
            }
        }

        let mut delta = 0.5 * (a + b);
        for _ in 0..NEWTON_STEPS {
            let (psi, dpsi) = self.newton_terms(&gaps, anchor_gap, pole, delta);
            if psi == 0.0 {
                return (origin, delta);
            }
            let next = delta - psi / dpsi;
            let newton = next.is_finite() && next > a && next < b;
            let candidate = if newton { next } else { 0.5 * (a + b) };
            if candidate == delta {
                if newton {
                    break;
                }
                // bisection stalled on the current iterate
                if a == delta || b == delta {
                    break;
                }
            }
            let s = self.sign(&gaps, anchor_gap, candidate);
            if s == 0.0 {
                return (origin, candidate);
            }
            if s == s_a {
                a = candidate;
            } else {
                b = candidate;
            }
            let converged =
                newton && (candidate - delta).abs() <= 4.0 * f64::EPSILON * candidate.abs();
            delta = candidate;
            if converged {
                break;
            }
        }
        // the root can sit on a bracket end to rounding
        let residual = |x: f64| self.newton_terms(&gaps, anchor_gap, pole, x).0.abs();
        let best = [a, b].into_iter().fold(delta, |best, x| {
            if residual(x) < residual(best) {
                x
            } else {
                best
            }
        });
        (origin, best)
    }
}

/// One group of consecutive tied sorted points. Points are node indices, with
/// `None` for the anchor.
struct Group {
    points: Vec<Option<usize>>,
    values: Vec<f64>,
}

/// All roots of the family, sorted ascending, each with its closed bracket.
pub fn solve_roots(family: &SecularFamily) -> Result<RootSet> {
    if !family.all_finite() {
        return Err(HeptaError::NonRealNodes);
    }
    let degree = family.degree();
    if degree == 0 {
        return Ok(RootSet::default());
    }

    let mut clusters = Vec::new();
    // (value, kind) before sorting
    let mut found: Vec<(f64, RootKind)> = Vec::with_capacity(degree);

    // Nodes of weight zero divide p exactly.
    let mut points: Vec<(f64, Option<usize>)> = vec![(family.anchor, None)];
    for (j, (&x, &w)) in family.nodes.iter().zip(&family.weights).enumerate() {
        if w == 0.0 {
            found.push((
                x,
                RootKind::Tied {
                    cluster: clusters.len(),
                },
            ));
            clusters.push(TieCluster {
                value: x,
                nodes: vec![j],
                with_anchor: false,
            });
        } else {
            points.push((x, Some(j)));
        }
    }
    points.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.is_some().cmp(&b.1.is_some())));

    let mut groups: Vec<Group> = Vec::new();
    for (x, p) in points {
        match groups.last_mut() {
            Some(g) if tied(*g.values.last().unwrap(), x) => {
                g.points.push(p);
                g.values.push(x);
            }
            _ => groups.push(Group {
                points: vec![p],
                values: vec![x],
            }),
        }
    }

    let mut reduced = Reduced {
        variant: family.variant,
        c0: 1.0,
        nodes: Vec::new(),
        weights: Vec::new(),
        anchor: family.anchor,
    };
    // Reduced point of each group: its value and its reduced node index.
    let mut reps: Vec<(f64, Option<usize>)> = Vec::with_capacity(groups.len());
    for g in &groups {
        let with_anchor = g.points.contains(&None);
        let members: Vec<usize> = g.points.iter().flatten().copied().collect();
        if g.points.len() > 1 {
            let cluster = clusters.len();
            for &v in &g.values[..g.values.len() - 1] {
                found.push((v, RootKind::Tied { cluster }));
            }
            clusters.push(TieCluster {
                value: if with_anchor {
                    family.anchor
                } else {
                    g.values[0]
                },
                nodes: members.clone(),
                with_anchor,
            });
        }
        if with_anchor {
            if family.variant == Variant::Shifted {
                reduced.c0 += members.iter().map(|&j| family.weights[j]).sum::<f64>();
            }
            reps.push((family.anchor, None));
        } else {
            let value = *g.values.last().unwrap();
            reps.push((value, Some(reduced.nodes.len())));
            reduced.nodes.push(value);
            reduced
                .weights
                .push(members.iter().map(|&j| family.weights[j]).sum());
        }
    }

    for (gi, pair) in reps.windows(2).enumerate() {
        let ((lo, lo_pole), (hi, hi_pole)) = (pair[0], pair[1]);
        let (origin, offset) = reduced.solve_bracket(lo, hi, lo_pole, hi_pole);
        let mut root = origin + offset;
        let left = *groups[gi].values.last().unwrap();
        let right = groups[gi + 1].values[0];
        let kind = if root < left || root > right {
            root = root.clamp(left, right);
            RootKind::Secular {
                origin: root,
                offset: 0.0,
            }
        } else {
            RootKind::Secular { origin, offset }
        };
        found.push((root, kind));
    }

    debug_assert_eq!(found.len(), degree);
    found.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut sorted_points: Vec<f64> = family.nodes.clone();
    sorted_points.push(family.anchor);
    sorted_points.sort_by(f64::total_cmp);
    let brackets = sorted_points.windows(2).map(|w| (w[0], w[1])).collect();

    Ok(RootSet {
        roots: found.iter().map(|r| r.0).collect(),
        exact_flags: found
            .iter()
            .map(|r| matches!(r.1, RootKind::Tied { .. }))
            .collect(),
        kinds: found.into_iter().map(|r| r.1).collect(),
        brackets,
        clusters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::HeptaParams;
    use crate::symbols::spectral_symbols;

    fn symbols(n: usize, a: f64, b: f64, c: f64, d: f64) -> SpectralSymbols {
        spectral_symbols(&HeptaParams::new(n, a, b, c, d).unwrap())
    }

    #[test]
    fn n1_families() {
        let s = symbols(1, 0.0, 0.0, 0.0, 2.5);
        let f = family_f(&s);
        assert_eq!(f.nodes(), &[2.5]);
        assert_eq!(f.weights(), &[1.0]);
        assert_eq!(f.anchor(), 2.5);
        assert_eq!(f.eval(4.0), 2.0 * (4.0 - 2.5));
        let roots = solve_roots(&f).unwrap();
        assert_eq!(roots.roots(), &[2.5]);
        let g = family_g(&s);
        assert_eq!(g.degree(), 0);
        assert_eq!(g.eval(1.7), 1.0);
        assert!(solve_roots(&g).unwrap().is_empty());
    }

    #[test]
    fn n2_families() {
        let s = symbols(2, 0.0, 0.0, 2.0, 1.0);
        let f = family_f(&s);
        let g = family_g(&s);
        assert!((f.weights()[0] - 2.618_033_988_749_895).abs() < 1e-14);
        assert!((g.weights()[0] - 2.618_033_988_749_895).abs() < 1e-14);
        assert!(f.eval(3.0).abs() < 1e-12);
        let rf = solve_roots(&f).unwrap();
        let rg = solve_roots(&g).unwrap();
        assert!((rf.roots()[0] - 3.0).abs() < 1e-14);
        assert!((rg.roots()[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn n2_weighted_single_factor() {
        let s = symbols(2, 0.0, 0.0, 2.0, 1.0);
        let big_f = alternant_family_f(&s);
        let s3 = sin_pi_ratio(3, 5);
        let want = s.lambda(3) - 0.8 * s3 * s3 * (s.lambda(3) - s.lambda(1));
        let r = solve_roots(&big_f).unwrap();
        assert!((r.roots()[0] - want).abs() < 1e-13);
        // F is a scalar multiple of f, so the roots agree
        assert!((r.roots()[0] - 3.0).abs() < 1e-13);
    }

    #[test]
    fn n4_and_n3_weights() {
        let s = symbols(4, 0.3, 0.1, 0.2, 0.4);
        let f = family_f(&s);
        let d = sin_pi_ratio(1, 7).powi(2);
        assert!((f.weights()[0] - sin_pi_ratio(3, 7).powi(2) / d).abs() < 1e-13);
        assert!((f.weights()[1] - sin_pi_ratio(5, 7).powi(2) / d).abs() < 1e-13);
        let g3 = family_g(&symbols(3, 0.3, 0.1, 0.2, 0.4));
        assert_eq!(g3.degree(), 1);
        assert!((g3.weights()[0] - 1.0).abs() < 1e-15);
        let f3 = family_f(&symbols(3, 0.3, 0.1, 0.2, 0.4));
        assert_eq!(f3.weights()[1], 1.0);
        assert_eq!(f3.labels(), &[3, 5]);
        assert_eq!(g3.anchor_label(), 4);
    }

    #[test]
    fn eval_special_points() {
        let fam = SecularFamily::new(
            Variant::Shifted,
            FamilyTag::F,
            vec![1.0, 3.0, 4.0],
            vec![0.5, 2.0, 1.5],
            -2.0,
        );
        assert_eq!(fam.eval(-2.0), (-3.0) * (-5.0) * (-6.0));
        // only the j = 1 term survives at t = 3
        assert_eq!(fam.eval(3.0), 5.0 * 2.0 * (3.0 - 1.0) * (3.0 - 4.0));
        let w = SecularFamily::new(
            Variant::Weighted,
            FamilyTag::G,
            vec![1.0, 3.0],
            vec![0.5, -0.25],
            0.0,
        );
        assert_eq!(w.eval(1.0), 0.5 * (1.0 - 3.0));
    }

    #[test]
    fn zero_weights_give_nodes() {
        let fam = SecularFamily::new(
            Variant::Weighted,
            FamilyTag::F,
            vec![2.0, -1.0, 0.5],
            vec![0.0; 3],
            7.0,
        );
        let r = solve_roots(&fam).unwrap();
        assert_eq!(r.roots(), &[-1.0, 0.5, 2.0]);
        assert!(r.exact_flags().iter().all(|&e| e));
    }

    #[test]
    fn d_only_all_weighted_weights_vanish() {
        let s = symbols(7, 0.0, 0.0, 0.0, 1.0);
        let big_f = alternant_family_f(&s);
        assert!(big_f.weights().iter().all(|&w| w == 0.0));
        let r = solve_roots(&big_f).unwrap();
        assert_eq!(r.roots(), big_f.nodes());
    }

    #[test]
    fn non_finite_rejected() {
        let fam = SecularFamily::new(
            Variant::Shifted,
            FamilyTag::F,
            vec![f64::NAN],
            vec![1.0],
            0.0,
        );
        assert_eq!(solve_roots(&fam), Err(HeptaError::NonRealNodes));
    }

    #[test]
    fn j_matrix_ties() {
        // λ alternates ±1: f has anchor and nodes all at 1
        for n in 1..=12 {
            let s = symbols(n, 0.0, 0.0, 0.0, 1.0);
            let rf = solve_roots(&family_f(&s)).unwrap();
            let rg = solve_roots(&family_g(&s)).unwrap();
            assert_eq!(rf.len() + rg.len(), n);
            assert!(rf.exact_flags().iter().chain(rg.exact_flags()).all(|&e| e));
            let mut all: Vec<f64> = rf.roots().iter().chain(rg.roots()).copied().collect();
            all.sort_by(f64::total_cmp);
            let ones = all.iter().filter(|&&x| (x - 1.0).abs() < 1e-12).count();
            assert_eq!(ones, n.div_ceil(2), "n={n}: {all:?}");
        }
    }

    #[test]
    fn tie_helper() {
        assert!(tied(1.0, 1.0 + 5e-14));
        assert!(!tied(1.0, 1.0 + 1e-12));
        assert!(tied(0.0, 5e-14));
        assert!(tied(1e6, 1e6 * (1.0 + 5e-14)));
    }

    #[test]
    fn root_at_bracket_midpoint() {
        // weight equal to half the bracket puts the root on the midpoint
        let (x, anchor) = (3.6666896691690485, -4.306824493225532);
        let w = 0.5 * (x - anchor);
        let fam = SecularFamily::new(Variant::Weighted, FamilyTag::G, vec![x], vec![w], anchor);
        let r = solve_roots(&fam).unwrap();
        assert!((r.roots()[0] - (x - w)).abs() <= 4.0 * f64::EPSILON * x);
        for k in 1..=40 {
            let shift = k as f64 * 0.173;
            let fam = SecularFamily::new(
                Variant::Weighted,
                FamilyTag::F,
                vec![shift],
                vec![0.5 * (shift + 2.0)],
                -2.0,
            );
            let r = solve_roots(&fam).unwrap();
            assert!(
                (r.roots()[0] - (shift - 0.5 * (shift + 2.0))).abs()
                    <= 4.0 * f64::EPSILON * shift.max(2.0)
            );
        }
    }

    #[test]
    fn tridiagonal_root_on_midpoint() {
        // each has the eigenvalue `e` exactly at a bracket midpoint
        let cases = [
            (
                5,
                1.928747820225694,
                -0.28062420654079556,
                -0.28062420654079556,
            ),
            (
                5,
                -1.7471050597277697,
                -0.19506013779719655,
                -0.19506013779719655,
            ),
            (
                7,
                -1.1961096357628178,
                -0.13278522253257208,
                0.13278522253257208,
            ),
        ];
        for (n, c, d, e) in cases {
            let s = symbols(n, 0.0, 0.0, c, d);
            let mut roots = solve_roots(&family_f(&s)).unwrap().roots().to_vec();
            roots.extend_from_slice(solve_roots(&family_g(&s)).unwrap().roots());
            let closest = roots
                .iter()
                .map(|r| (r - e).abs())
                .fold(f64::INFINITY, f64::min);
            assert!(closest <= 8.0 * f64::EPSILON * 4.0, "n={n}: {closest:e}");
        }
    }

    #[test]
    fn coincidence_reported_with_labels() {
        let s = symbols(6, 0.0, 0.0, 0.0, 1.0);
        assert_eq!(family_f(&s).first_coincidence(), Some((1, 3)));
        let s = symbols(6, 0.37, -0.81, 1.13, 0.29);
        assert_eq!(family_f(&s).first_coincidence(), None);
    }
}
