//! Restriction to vertex links, local minimisation, and the counting machinery for 1-cochains on
//! 2-dimensional complexes (triangle profiles, thin/thick vertices, edge-exit inequalities).

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::caps::Caps;
use crate::cochain::{coboundary, coboundary_matrix, coset_minimum, Cochain};
use crate::complex::{LinkMap, SimplicialComplex};
use crate::error::{Error, Result};
use crate::f2;
use crate::rational::{int, to_f64, Rational};
use crate::report::Value;
use crate::spectral::{self, GraphView, TOL};

/// A vertex link together with the face correspondence back into the parent.
#[derive(Debug, Clone)]
pub struct VertexLink {
    pub vertex: usize,
    pub complex: SimplicialComplex,
    pub map: LinkMap,
}

impl VertexLink {
    pub fn new(x: &SimplicialComplex, v: usize) -> Result<Self> {
        if v >= x.num_vertices() {
            return Err(Error::VertexNotPresent(v.to_string()));
        }
        let (complex, map) = x.link_of(&[v])?;
        Ok(Self { vertex: v, complex, map })
    }

    /// `α_v(σ ∖ {v}) = α(σ)`, an `(i−1)`-cochain on the link.
    pub fn restrict(&self, alpha: &Cochain) -> Cochain {
        let j = alpha.dim() - 1;
        let n = self.complex.count(j);
        let support = BitVec::from_indices(n, (0..n).filter(|&k| alpha.support().get(self.map.lift(j, k))));
        Cochain::from_support(&self.complex, j, support).expect("link dimension in range")
    }

    /// The `(i−1)`-cochain of the parent supported on `ρ ∪ {v}` for `ρ` in `gamma`.
    pub fn lift(&self, x: &SimplicialComplex, gamma: &Cochain) -> Cochain {
        let j = gamma.dim();
        Cochain::from_indices(x, j + 1, gamma.faces().map(|k| self.map.lift(j, k))).expect("lift in range")
    }
}

fn vertex_by_label(x: &SimplicialComplex, v: &str) -> Result<usize> {
    x.vertex_index(v).ok_or_else(|| Error::VertexNotPresent(v.to_string()))
}

/// `α_v` on the link of `v`; returns the link too.
pub fn restrict_to_link(x: &SimplicialComplex, alpha: &Cochain, v: &str) -> Result<(SimplicialComplex, Cochain)> {
    if alpha.dim() < 0 {
        return Err(Error::DimensionOutOfRange { dim: alpha.dim(), lo: 0, hi: x.dim() });
    }
    let link = VertexLink::new(x, vertex_by_label(x, v)?)?;
    let r = link.restrict(alpha);
    Ok((link.complex, r))
}

/// A strictly better representative of `α_v + B^{i−1}(X_v)`, as `γ_v` with `δγ_v` the correction.
fn improve_in_link(link: &VertexLink, alpha_v: &Cochain, caps: &Caps) -> Result<Option<Cochain>> {
    if alpha_v.is_zero() {
        return Ok(None);
    }
    let y = &link.complex;
    let j = alpha_v.dim();
    let red = f2::reduce(&coboundary_matrix(y, j - 1)?);
    let (_, argmin, coeffs) = coset_minimum(y, alpha_v, &red.image_basis, caps)?;
    if argmin.weight_numerator(y) >= alpha_v.weight_numerator(y) {
        return Ok(None);
    }
    let gamma = Cochain::from_indices(y, j - 1, coeffs.iter_ones().map(|c| red.pivot_columns[c]))?;
    debug_assert_eq!(alpha_v.add(&coboundary(y, &gamma)?), argmin);
    Ok(Some(gamma))
}

fn check_local_dim(x: &SimplicialComplex, alpha: &Cochain) -> Result<()> {
    if alpha.dim() < 0 || alpha.dim() > x.dim() {
        return Err(Error::DimensionOutOfRange { dim: alpha.dim(), lo: 0, hi: x.dim() });
    }
    Ok(())
}

/// `None` when every restriction `α_v` is minimal in its link, otherwise the first vertex (by
/// index) where it is not. Every 0-cochain is locally minimal.
pub fn first_non_minimal_vertex(x: &SimplicialComplex, alpha: &Cochain, caps: &Caps) -> Result<Option<usize>> {
    check_local_dim(x, alpha)?;
    if alpha.dim() == 0 {
        return Ok(None);
    }
    for v in touched_vertices(x, alpha) {
        let link = VertexLink::new(x, v)?;
        if improve_in_link(&link, &link.restrict(alpha), caps)?.is_some() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn is_locally_minimal(x: &SimplicialComplex, alpha: &Cochain, caps: &Caps) -> Result<bool> {
    Ok(first_non_minimal_vertex(x, alpha, caps)?.is_none())
}

/// Vertices lying in some face of the support, ascending.
fn touched_vertices(x: &SimplicialComplex, alpha: &Cochain) -> Vec<usize> {
    let mut seen = vec![false; x.num_vertices()];
    for f in alpha.faces() {
        for &v in &x.faces(alpha.dim())[f] {
            seen[v] = true;
        }
    }
    (0..seen.len()).filter(|&v| seen[v]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalMinimization {
    /// Locally minimal, `α̃ = α + δγ`, `‖α̃‖ ≤ ‖α‖`.
    pub alpha: Cochain,
    pub gamma: Cochain,
    /// Number of vertex corrections applied.
    pub steps: usize,
    /// Vertex corrected at each step.
    pub corrected: Vec<usize>,
}

/// Repeatedly replaces `α` by `α + δγ̃` where `γ̃` lifts a norm-decreasing correction in the link
/// of the first non-minimal vertex, restarting the scan from vertex 0 after every correction.
///
/// Each correction changes `α` only on faces through that vertex and strictly decreases the
/// integer norm numerator, so at most `Σ_{σ∈α} c(σ)` steps are taken.
pub fn locally_minimize(x: &SimplicialComplex, alpha: &Cochain, caps: &Caps) -> Result<LocalMinimization> {
    check_local_dim(x, alpha)?;
    let i = alpha.dim();
    let mut cur = alpha.clone();
    let mut gamma = Cochain::zero(x, i - 1);
    let mut corrected = Vec::new();
    if i == 0 {
        return Ok(LocalMinimization { alpha: cur, gamma, steps: 0, corrected });
    }
    let links: Vec<VertexLink> = (0..x.num_vertices()).map(|v| VertexLink::new(x, v)).collect::<Result<_>>()?;
    'scan: loop {
        for link in &links {
            let alpha_v = link.restrict(&cur);
            if let Some(g) = improve_in_link(link, &alpha_v, caps)? {
                let lifted = link.lift(x, &g);
                let next = cur.add(&coboundary(x, &lifted)?);
                assert!(next.weight_numerator(x) < cur.weight_numerator(x), "local correction must decrease the norm");
                cur = next;
                gamma = gamma.add(&lifted);
                corrected.push(link.vertex);
                continue 'scan;
            }
        }
        break;
    }
    Ok(LocalMinimization { alpha: cur, gamma, steps: corrected.len(), corrected })
}

fn check_dim2(x: &SimplicialComplex, alpha: &Cochain) -> Result<()> {
    if x.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: x.dim() });
    }
    if alpha.dim() != 1 {
        return Err(Error::DimensionOutOfRange { dim: alpha.dim(), lo: 1, hi: 1 });
    }
    Ok(())
}

/// `t_k` = number of triangles containing exactly `k` edges of `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct TriangleProfile {
    pub t0: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

impl TriangleProfile {
    pub fn total(&self) -> usize {
        self.t0 + self.t1 + self.t2 + self.t3
    }
}

/// The profile together with the three quantities it is tied to by exact identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleCounts {
    pub profile: TriangleProfile,
    /// `|δ₁α|`, computed from the coboundary map.
    pub coboundary_size: usize,
    /// `Σ_v |E_{X_v}(α_v, ᾱ_v)|`, computed on the vertex links.
    pub link_cut_sum: usize,
    /// `Σ_{e∈α} c(e)`.
    pub degree_sum: u64,
}

impl TriangleCounts {
    /// `|δ₁α| = t₁ + t₃`.
    pub fn coboundary_identity(&self) -> bool {
        self.coboundary_size == self.profile.t1 + self.profile.t3
    }

    /// `Σ_v |E_{X_v}(α_v, ᾱ_v)| = 2t₁ + 2t₂`.
    pub fn link_cut_identity(&self) -> bool {
        self.link_cut_sum == 2 * self.profile.t1 + 2 * self.profile.t2
    }

    /// `t₁ + 2t₂ + 3t₃ = Σ_{e∈α} c(e)`.
    pub fn degree_identity(&self) -> bool {
        let p = self.profile;
        (p.t1 + 2 * p.t2 + 3 * p.t3) as u64 == self.degree_sum
    }
}

/// Direct scan of the triangles.
pub fn triangle_profile(x: &SimplicialComplex, alpha: &Cochain) -> Result<TriangleProfile> {
    check_dim2(x, alpha)?;
    let mut p = TriangleProfile::default();
    for t in 0..x.count(2) {
        match x.boundary(2, t).iter().filter(|&&e| alpha.support().get(e)).count() {
            0 => p.t0 += 1,
            1 => p.t1 += 1,
            2 => p.t2 += 1,
            _ => p.t3 += 1,
        }
    }
    Ok(p)
}

/// `|E_{X_v}(α_v, ᾱ_v)|`: link edges with exactly one endpoint in `α_v`.
fn link_cut(link: &VertexLink, alpha_v: &Cochain) -> usize {
    let s = alpha_v.support();
    link.complex.faces(1).iter().filter(|e| s.get(e[0]) != s.get(e[1])).count()
}

pub fn triangle_counts(x: &SimplicialComplex, alpha: &Cochain) -> Result<TriangleCounts> {
    let profile = triangle_profile(x, alpha)?;
    let coboundary_size = coboundary(x, alpha)?.support_size();
    let mut link_cut_sum = 0;
    for v in 0..x.num_vertices() {
        let link = VertexLink::new(x, v)?;
        link_cut_sum += link_cut(&link, &link.restrict(alpha));
    }
    Ok(TriangleCounts { profile, coboundary_size, link_cut_sum, degree_sum: alpha.weight_numerator(x) })
}

/// Per-vertex data of the thin/thick split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexLoad {
    pub vertex: usize,
    /// `|α_v|`, the number of edges of `α` at `v`.
    pub alpha_v: usize,
    /// `Q_v = |X_v(0)|`.
    pub q_v: usize,
    pub thin: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThinThickDecomposition {
    pub epsilon: Rational,
    /// Vertices touched by `α`, ascending; `W = R ∪ S`.
    pub w: Vec<usize>,
    pub thin: Vec<usize>,
    pub thick: Vec<usize>,
    /// `Σ_{v∈R} |α_v|`.
    pub r: usize,
    /// `Σ_{v∈S} |α_v|`.
    pub s: usize,
    pub loads: Vec<VertexLoad>,
}

/// Splits the vertices touched by `α` into thin (`|α_v| < (1−ε) Q_v / 2`) and thick.
pub fn thin_thick(x: &SimplicialComplex, alpha: &Cochain, epsilon: &Rational) -> Result<ThinThickDecomposition> {
    check_dim2(x, alpha)?;
    if !epsilon.is_positive() || epsilon >= &Rational::one() {
        return Err(Error::BadParams("thinness parameter must lie strictly between 0 and 1".into()));
    }
    let mut count = vec![0usize; x.num_vertices()];
    for e in alpha.faces() {
        for &v in &x.faces(1)[e] {
            count[v] += 1;
        }
    }
    let one_minus = Rational::one() - epsilon;
    let mut d = ThinThickDecomposition {
        epsilon: epsilon.clone(),
        w: Vec::new(),
        thin: Vec::new(),
        thick: Vec::new(),
        r: 0,
        s: 0,
        loads: Vec::new(),
    };
    for (v, &a) in count.iter().enumerate() {
        if a == 0 {
            continue;
        }
        // every edge of a pure 2-complex lies in a triangle, so the link vertices are the neighbours
        let q_v = x.neighbors(v).len();
        let thin = int(2 * a as i64) < &one_minus * int(q_v as i64);
        d.w.push(v);
        if thin {
            d.thin.push(v);
            d.r += a;
        } else {
            d.thick.push(v);
            d.s += a;
        }
        d.loads.push(VertexLoad { vertex: v, alpha_v: a, q_v, thin });
    }
    Ok(d)
}

/// Parameters of the dimension-2 isoperimetric argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoperimetryParams {
    /// Thinness parameter `ε`.
    #[serde(with = "crate::rational::serde_str")]
    pub epsilon: Rational,
    /// Norm budget `‖α‖ ≤ 1/(4(1+ε′))`.
    #[serde(with = "crate::rational::serde_str")]
    pub epsilon_prime: Rational,
    /// Required share `ξ` of edges with a thin endpoint.
    #[serde(with = "crate::rational::serde_str")]
    pub xi: Rational,
    /// Field order for the literal evaluation; used only when the complex is verified to have
    /// the matching link structure.
    pub q: Option<u32>,
}

impl Default for IsoperimetryParams {
    fn default() -> Self {
        Self {
            epsilon: Rational::new(BigInt::from(1), BigInt::from(10)),
            epsilon_prime: Rational::new(BigInt::from(1), BigInt::from(10)),
            xi: Rational::new(BigInt::from(1), BigInt::from(10)),
            q: None,
        }
    }
}

impl IsoperimetryParams {
    /// `η₁ = 1/(4(1+ε′))`.
    pub fn eta1(&self) -> Rational {
        Rational::one() / (int(4) * (Rational::one() + &self.epsilon_prime))
    }

    fn validate(&self) -> Result<()> {
        let one = Rational::one();
        if !self.epsilon.is_positive() || self.epsilon >= one {
            return Err(Error::BadParams("ε must lie strictly between 0 and 1".into()));
        }
        if !self.epsilon_prime.is_positive() || !self.xi.is_positive() || self.xi >= one {
            return Err(Error::BadParams("ε′ must be positive and ξ must lie in (0, 1)".into()));
        }
        Ok(())
    }
}

/// One evaluated lemma: `lhs ≥ rhs`, `lhs ≤ rhs` or `lhs = rhs` according to `relation`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaRecord {
    pub name: String,
    pub lhs: Value,
    pub rhs: Value,
    /// `"="`, `">="` or `"<="`.
    pub relation: &'static str,
    /// `"generalized"` or `"literal"`.
    pub mode: &'static str,
    pub pass: bool,
    /// Whether the hypotheses under which the inequality is a theorem hold for this input.
    pub hypotheses_met: bool,
}

fn exact_eq(name: impl Into<String>, lhs: u64, rhs: u64, mode: &'static str) -> LemmaRecord {
    LemmaRecord {
        name: name.into(),
        lhs: Value::int(lhs as i64),
        rhs: Value::int(rhs as i64),
        relation: "=",
        mode,
        pass: lhs == rhs,
        hypotheses_met: true,
    }
}

fn slack(rhs: f64) -> f64 {
    TOL * rhs.abs().max(1.0)
}

fn float_ge(name: impl Into<String>, lhs: f64, rhs: f64, mode: &'static str, hyp: bool) -> LemmaRecord {
    LemmaRecord {
        name: name.into(),
        lhs: Value::float(lhs),
        rhs: Value::float(rhs),
        relation: ">=",
        mode,
        pass: lhs >= rhs - slack(rhs),
        hypotheses_met: hyp,
    }
}

fn float_le(name: impl Into<String>, lhs: f64, rhs: f64, mode: &'static str, hyp: bool) -> LemmaRecord {
    LemmaRecord {
        name: name.into(),
        lhs: Value::float(lhs),
        rhs: Value::float(rhs),
        relation: "<=",
        mode,
        pass: lhs <= rhs + slack(rhs),
        hypotheses_met: hyp,
    }
}

/// Output of [`dim2_lemma_suite`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaSuiteReport {
    /// `|α|`.
    pub alpha_size: usize,
    /// `‖α‖`.
    pub alpha_norm: Value,
    pub profile: TriangleProfile,
    pub r: usize,
    pub s: usize,
    /// Labels of vertices whose link is disconnected; per-vertex lemmas are skipped there and
    /// their link gap counts as 0 in the aggregate bounds.
    pub disconnected_links: Vec<String>,
    /// Why the literal evaluation was not run, when a field order was supplied.
    pub literal_skipped: Option<String>,
    pub records: Vec<LemmaRecord>,
}

impl LemmaSuiteReport {
    /// All records whose hypotheses hold pass.
    pub fn pass(&self) -> bool {
        self.records.iter().all(|r| r.pass || !r.hypotheses_met)
    }
}

/// Checks that every link has `2(q²+q+1)` vertices and gap `q+1−√q`, and every edge lies in `q+1`
/// triangles.
fn literal_structure(x: &SimplicialComplex, q: u32, gaps: &[Option<f64>]) -> std::result::Result<(), String> {
    let qf = q as f64;
    let big_q = 2 * (q as usize * q as usize + q as usize + 1);
    if let Some(e) = (0..x.count(1)).find(|&e| x.facet_degree(1, e) != q as u64 + 1) {
        return Err(format!("edge {:?} lies in {} triangles, not q+1", x.face_labels(&x.faces(1)[e]), x.facet_degree(1, e)));
    }
    for v in 0..x.num_vertices() {
        if x.neighbors(v).len() != big_q {
            return Err(format!("link of {} has {} vertices, not 2(q²+q+1)", x.label(v), x.neighbors(v).len()));
        }
        match gaps[v] {
            Some(g) if (g - (qf + 1.0 - qf.sqrt())).abs() <= 1e-7 => {}
            _ => return Err(format!("link of {} does not have Laplacian gap q+1−√q", x.label(v))),
        }
    }
    Ok(())
}

/// Evaluates the edge-exit, triangle-count and thick-edge inequalities for a 1-cochain.
///
/// The generalized mode uses the complex's own parameters: the algebraic connectivity `λ_v` of
/// each vertex link in place of `q+1−√q`, edge triangle degrees `c(e)` in place of `q+1`, the
/// 1-skeleton's algebraic connectivity and degrees in place of `Q` and `Q−6q`. The literal mode
/// is run only when `params.q` is given and the link structure is verified.
pub fn dim2_lemma_suite(
    x: &SimplicialComplex,
    alpha: &Cochain,
    params: &IsoperimetryParams,
    caps: &Caps,
) -> Result<LemmaSuiteReport> {
    check_dim2(x, alpha)?;
    params.validate()?;
    const GEN: &str = "generalized";
    let n = x.num_vertices();
    let counts = triangle_counts(x, alpha)?;
    let p = counts.profile;
    let tt = thin_thick(x, alpha, &params.epsilon)?;
    let size = alpha.support_size();
    let eps = to_f64(&params.epsilon);
    let eps_p = to_f64(&params.epsilon_prime);
    let xi = to_f64(&params.xi);

    let mut records = vec![
        exact_eq("triangle_degree_identity", (p.t1 + 2 * p.t2 + 3 * p.t3) as u64, counts.degree_sum, GEN),
        exact_eq("coboundary_identity", counts.coboundary_size as u64, (p.t1 + p.t3) as u64, GEN),
        exact_eq("link_cut_identity", counts.link_cut_sum as u64, (2 * p.t1 + 2 * p.t2) as u64, GEN),
        exact_eq("r_plus_s", (tt.r + tt.s) as u64, 2 * size as u64, GEN),
    ];

    // link gaps and cuts at every vertex
    let mut gaps: Vec<Option<f64>> = vec![None; n];
    let mut cuts = vec![0usize; n];
    let mut disconnected = Vec::new();
    for v in 0..n {
        let link = VertexLink::new(x, v)?;
        let g = GraphView::from_complex(&link.complex);
        cuts[v] = link_cut(&link, &link.restrict(alpha));
        if g.is_connected() {
            gaps[v] = Some(spectral::algebraic_connectivity(&g, caps)?);
        } else {
            disconnected.push(x.label(v).to_string());
        }
    }

    let mut sum_bound = 0.0;
    let mut thick_ok = true;
    for load in &tt.loads {
        let v = load.vertex;
        let lam = gaps[v].unwrap_or(0.0);
        let a = load.alpha_v as f64;
        let q_v = load.q_v as f64;
        let half_ok = 2 * load.alpha_v <= load.q_v;
        let factor = if load.thin { (1.0 + eps) / 2.0 } else { 0.5 };
        sum_bound += factor * lam * a;
        if !load.thin && !half_ok {
            thick_ok = false;
        }
        if gaps[v].is_none() {
            continue;
        }
        let label = x.label(v);
        records.push(float_ge(format!("link_cut_bound[{label}]"), cuts[v] as f64, (q_v - a) / q_v * lam * a, GEN, true));
        records.push(float_ge(
            format!("link_cut_share_bound[{label}]"),
            cuts[v] as f64,
            factor * lam * a,
            GEN,
            load.thin || half_ok,
        ));
    }
    let two_t = (2 * p.t1 + 2 * p.t2) as f64;
    records.push(float_ge("two_t1_plus_two_t2_bound", two_t, sum_bound, GEN, thick_ok));
    records.push(float_ge(
        "t1_minus_3t3_bound",
        p.t1 as f64 - 3.0 * p.t3 as f64,
        sum_bound - counts.degree_sum as f64,
        GEN,
        thick_ok,
    ));

    // global structure: the 1-skeleton
    let skel = GraphView::from_complex(x);
    let lam_skel = spectral::algebraic_connectivity(&skel, caps)?;
    let mut in_s = vec![false; n];
    for &v in &tt.thick {
        in_s[v] = true;
    }
    let e_s = skel.internal_edges(&in_s);
    let s_len = tt.thick.len() as f64;
    let sbar = (n - tt.thick.len()) as f64;
    let deg_s: usize = tt.thick.iter().map(|&v| skel.degree(v)).sum();
    records.push(float_le("thick_edge_cut_bound", e_s as f64, 0.5 * (deg_s as f64 - s_len * sbar / n as f64 * lam_skel), GEN, true));

    let mut in_w = vec![false; n];
    for &v in &tt.w {
        in_w[v] = true;
    }
    let (w_len, wbar) = (tt.w.len() as f64, (n - tt.w.len()) as f64);
    records.push(float_ge("skeleton_cut_bound", skel.cut_size(&in_w) as f64, w_len * wbar / n as f64 * lam_skel, GEN, true));

    // thick-edge bound in terms of |α|, and the resulting share of thin endpoints
    let q_min = tt.loads.iter().map(|l| l.q_v).min().unwrap_or(0).max(1) as f64;
    let (alpha_hyp, coeff) = match skel.regular_degree() {
        Some(k) => {
            let k = k as f64;
            let theta = (k - lam_skel).max(0.0);
            let coeff = k * k / ((1.0 - eps).powi(2) * (1.0 + eps_p) * q_min * q_min) + 2.0 * theta / ((1.0 - eps) * q_min);
            (size as f64 <= k * n as f64 / (8.0 * (1.0 + eps_p)) + TOL, Some(coeff))
        }
        None => (false, None),
    };
    if let Some(c) = coeff {
        records.push(float_le("thick_edge_alpha_bound", e_s as f64, c * size as f64, GEN, alpha_hyp));
        records.push(float_ge("thin_share", tt.r as f64, xi * size as f64, GEN, alpha_hyp && c < 1.0 - xi));
    }

    let mut literal_skipped = None;
    if let Some(q) = params.q {
        match literal_structure(x, q, &gaps) {
            Ok(()) => records.extend(literal_records(x, alpha, params, &counts, &tt, &cuts, &skel, caps)?),
            Err(why) => literal_skipped = Some(why),
        }
    }

    Ok(LemmaSuiteReport {
        alpha_size: size,
        alpha_norm: Value::exact(&alpha.norm(x)),
        profile: p,
        r: tt.r,
        s: tt.s,
        disconnected_links: disconnected,
        literal_skipped,
        records,
    })
}

#[allow(clippy::too_many_arguments)]
fn literal_records(
    x: &SimplicialComplex,
    alpha: &Cochain,
    params: &IsoperimetryParams,
    counts: &TriangleCounts,
    tt: &ThinThickDecomposition,
    cuts: &[usize],
    skel: &GraphView,
    caps: &Caps,
) -> Result<Vec<LemmaRecord>> {
    const LIT: &str = "literal";
    let q = params.q.expect("literal mode needs q");
    let qf = q as f64;
    let big_q = 2.0 * (qf * qf + qf + 1.0);
    let gap = qf + 1.0 - qf.sqrt();
    let eps = to_f64(&params.epsilon);
    let eps_p = to_f64(&params.epsilon_prime);
    let size = alpha.support_size();
    let a = size as f64;
    let p = counts.profile;
    let mut out = vec![exact_eq("triangle_degree_identity_q", (p.t1 + 2 * p.t2 + 3 * p.t3) as u64, (q as u64 + 1) * size as u64, LIT)];
    let mut half_ok = true;
    for load in &tt.loads {
        let label = x.label(load.vertex);
        let av = load.alpha_v as f64;
        let ok = 2 * load.alpha_v <= load.q_v;
        half_ok &= ok;
        out.push(float_ge(format!("link_cut_bound_q[{label}]"), cuts[load.vertex] as f64, 0.5 * gap * av, LIT, ok));
        if load.thin {
            out.push(float_ge(format!("thin_link_cut_bound_q[{label}]"), cuts[load.vertex] as f64, (1.0 + eps) / 2.0 * gap * av, LIT, true));
        }
    }
    let r = tt.r as f64;
    out.push(float_ge("two_t1_plus_two_t2_bound_q", (2 * p.t1 + 2 * p.t2) as f64, gap * a + eps / 2.0 * gap * r, LIT, half_ok));
    out.push(float_ge("t1_minus_3t3_bound_q", p.t1 as f64 - 3.0 * p.t3 as f64, eps / 2.0 * gap * r - qf.sqrt() * a, LIT, half_ok));

    // the 1-skeleton must be Q-regular with all nontrivial eigenvalues at most 6q in absolute value
    let skel_ok = skel.regular_degree() == Some(big_q as usize) && {
        let spec = spectral::spectrum(skel, caps)?;
        spec.iter().skip(1).all(|l| l.abs() <= 6.0 * qf + TOL)
    };
    let norm_ok = alpha.norm(x) <= params.eta1();
    let mut in_s = vec![false; skel.n()];
    for &v in &tt.thick {
        in_s[v] = true;
    }
    let e_s = skel.internal_edges(&in_s) as f64;
    let coeff = 1.0 / ((1.0 - eps).powi(2) * (1.0 + eps_p)) + 12.0 * qf / ((1.0 - eps) * big_q);
    out.push(float_le("thick_edge_alpha_bound_q", e_s, a * coeff, LIT, skel_ok && norm_ok));
    Ok(out)
}
