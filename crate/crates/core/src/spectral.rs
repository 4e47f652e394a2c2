//! Graph spectra, exact Cheeger constants and the Alon–Milman inequalities.
//!
//! Eigenvalues are floating point (dense symmetric solver); cut sizes, edge counts and Cheeger
//! constants are exact. Every comparison that mixes the two uses [`TOL`].

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use serde::Serialize;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// Tolerance for every inequality that involves an eigenvalue.
pub const TOL: f64 = 1e-9;

/// Laplacian eigenvalues below this are treated as zero.
const ZERO_EIGEN: f64 = 1e-7;

/// Largest graph accepted by [`cheeger_exact`].
pub const CHEEGER_MAX_VERTICES: usize = 26;

/// A simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphView {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl GraphView {
    /// Builds a graph from an edge list; loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::BadParams(format!("bad edge ({a}, {b}) on {n} vertices")));
            }
            if adj[a].contains(&b) {
                return Err(Error::BadParams(format!("duplicate edge ({a}, {b})")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(Self { n, adj })
    }

    /// The 1-skeleton of a complex.
    pub fn from_complex(x: &SimplicialComplex) -> Self {
        let adj = (0..x.num_vertices()).map(|v| x.neighbors(v)).collect();
        Self { n: x.num_vertices(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|a| self.adj[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b))).collect()
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for (v, l) in self.adj.iter().enumerate() {
            for &u in l {
                a[(v, u)] = 1.0;
            }
        }
        a
    }

    /// `Δ = D − A`.
    pub fn laplacian_matrix(&self) -> DMatrix<f64> {
        let mut l = -self.adjacency_matrix();
        for v in 0..self.n {
            l[(v, v)] = self.degree(v) as f64;
        }
        l
    }

    /// `|E(W, W̄)|`.
    pub fn cut_size(&self, in_w: &[bool]) -> usize {
        self.edges().iter().filter(|(a, b)| in_w[*a] != in_w[*b]).count()
    }

    /// Number of edges with both ends in `W`.
    pub fn internal_edges(&self, in_w: &[bool]) -> usize {
        self.edges().iter().filter(|(a, b)| in_w[*a] && in_w[*b]).count()
    }
}

fn check_size(g: &GraphView, caps: &Caps) -> Result<()> {
    if g.n > caps.spectrum_vertices {
        return Err(Error::TooLarge { n: g.n, limit: caps.spectrum_vertices });
    }
    Ok(())
}

/// Eigenvalues (descending) and unit eigenvectors (matching columns) of a symmetric matrix.
pub fn eigen_decomposition(m: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    if m.nrows() == 0 {
        return (Vec::new(), m);
    }
    let eig = SymmetricEigen::new(m);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(eig.eigenvectors.nrows(), order.len(), |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// All adjacency eigenvalues, largest first.
pub fn spectrum(g: &GraphView, caps: &Caps) -> Result<Vec<f64>> {
    check_size(g, caps)?;
    Ok(eigen_decomposition(g.adjacency_matrix()).0)
}

/// All Laplacian eigenvalues, smallest first.
pub fn laplacian_spectrum(g: &GraphView, caps: &Caps) -> Result<Vec<f64>> {
    check_size(g, caps)?;
    let mut v = eigen_decomposition(g.laplacian_matrix()).0;
    v.reverse();
    Ok(v)
}

/// `λ₁`, the smallest positive Laplacian eigenvalue; `None` for a graph without edges.
pub fn laplacian_gap(g: &GraphView, caps: &Caps) -> Result<Option<f64>> {
    Ok(laplacian_spectrum(g, caps)?.into_iter().find(|&l| l > ZERO_EIGEN))
}

/// Second smallest Laplacian eigenvalue (zero for disconnected graphs).
pub fn algebraic_connectivity(g: &GraphView, caps: &Caps) -> Result<f64> {
    let s = laplacian_spectrum(g, caps)?;
    Ok(s.get(1).copied().unwrap_or(0.0).max(0.0))
}

/// Number of Laplacian eigenvalues within the zero threshold.
pub fn laplacian_zero_multiplicity(g: &GraphView, caps: &Caps) -> Result<usize> {
    Ok(laplacian_spectrum(g, caps)?.into_iter().filter(|l| l.abs() <= ZERO_EIGEN).count())
}

/// Exact Cheeger constant with a witness side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cheeger {
    /// `min_W |E(W, W̄)| / min(|W|, |W̄|)`.
    pub h: Rational,
    /// The smaller side of a minimising cut (the side holding vertex 0 on equal sizes),
    /// lexicographically least among minimisers.
    pub witness: Vec<usize>,
    pub cut: usize,
}

/// Exact Cheeger constant by scanning all `2^(n-1) - 1` cuts in Gray-code order.
pub fn cheeger_exact(g: &GraphView) -> Result<Cheeger> {
    let n = g.n;
    if n > CHEEGER_MAX_VERTICES {
        return Err(Error::TooLarge { n, limit: CHEEGER_MAX_VERTICES });
    }
    if n < 2 {
        return Err(Error::BadParams("Cheeger constant needs at least two vertices".into()));
    }
    let masks: Vec<u32> = g.adj.iter().map(|l| l.iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let side = |w: u32| -> u32 {
        let size = w.count_ones() as usize;
        if 2 * size < n || (2 * size == n && w & 1 == 1) { w } else { full & !w }
    };
    let as_list = |m: u32| -> Vec<usize> { (0..n).filter(|&v| m >> v & 1 == 1).collect() };

    let mut best: Option<(usize, usize, Vec<usize>)> = None; // (cut, smaller size, witness)
    let mut w: u32 = 0;
    let mut cut: usize = 0;
    for g_idx in 1u64..(1u64 << (n - 1)) {
        let v = g_idx.trailing_zeros() as usize;
        let rest = w & !(1u32 << v);
        let inside = (masks[v] & rest).count_ones() as usize;
        let deg = masks[v].count_ones() as usize;
        if w >> v & 1 == 1 {
            cut = cut + 2 * inside - deg;
        } else {
            cut = cut + deg - 2 * inside;
        }
        w ^= 1 << v;
        let size = (w.count_ones() as usize).min(n - w.count_ones() as usize);
        let ord = match &best {
            None => std::cmp::Ordering::Less,
            Some((bc, bs, _)) => (cut * bs).cmp(&(bc * size)),
        };
        match ord {
            std::cmp::Ordering::Less => best = Some((cut, size, as_list(side(w)))),
            std::cmp::Ordering::Equal => {
                let cand = as_list(side(w));
                let b = best.as_mut().expect("set");
                if cand < b.2 {
                    *b = (cut, size, cand);
                }
            }
            std::cmp::Ordering::Greater => {}
        }
    }
    let (cut, size, witness) = best.expect("n >= 2");
    Ok(Cheeger { h: Rational::new(BigInt::from(cut), BigInt::from(size)), witness, cut })
}

/// The three Alon–Milman statements evaluated for one subset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlonMilmanReport {
    pub w_size: usize,
    pub cut: usize,
    pub lambda1: f64,
    /// `|W||W̄| λ₁ / |V|`.
    pub cut_bound: f64,
    pub cut_bound_ok: bool,
    pub cheeger: Option<f64>,
    /// `h ≥ λ₁ / 2` (absent when the graph is too large for the exact Cheeger scan).
    pub cheeger_bound_ok: Option<bool>,
    pub internal_edges: usize,
    /// `2 E(W) = k|W| − |E(W, W̄)|` for `k`-regular graphs.
    pub internal_edge_identity_ok: Option<bool>,
    /// `E(W) ≤ ½ (k − |W̄| λ₁ / |V|) |W|` for `k`-regular graphs.
    pub internal_edge_bound_ok: Option<bool>,
}

/// Precomputed spectral and Cheeger data for checking many subsets of one graph.
///
/// `λ₁` is the algebraic connectivity: the smallest positive Laplacian eigenvalue when the graph is
/// connected and `0` otherwise.
#[derive(Debug, Clone)]
pub struct AlonMilman<'g> {
    g: &'g GraphView,
    lambda1: f64,
    h: Option<Rational>,
    k: Option<usize>,
}

impl<'g> AlonMilman<'g> {
    pub fn new(g: &'g GraphView, caps: &Caps) -> Result<Self> {
        let lambda1 = algebraic_connectivity(g, caps)?;
        let h = if g.n <= CHEEGER_MAX_VERTICES && g.n >= 2 { Some(cheeger_exact(g)?.h) } else { None };
        Ok(Self { g, lambda1, h, k: g.regular_degree() })
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn check(&self, w: &[usize]) -> Result<AlonMilmanReport> {
        let n = self.g.n;
        let mut in_w = vec![false; n];
        for &v in w {
            if v >= n || in_w[v] {
                return Err(Error::InvalidSubset);
            }
            in_w[v] = true;
        }
        if w.is_empty() || w.len() == n {
            return Err(Error::InvalidSubset);
        }
        let ws = w.len() as f64;
        let wbar = (n - w.len()) as f64;
        let cut = self.g.cut_size(&in_w);
        let cut_bound = ws * wbar / n as f64 * self.lambda1;
        let cheeger = self.h.as_ref().map(to_f64);
        let internal = self.g.internal_edges(&in_w);
        let (identity, bound) = match self.k {
            Some(k) => (
                Some(2 * internal + cut == k * w.len()),
                Some(internal as f64 <= 0.5 * (k as f64 - wbar / n as f64 * self.lambda1) * ws + TOL),
            ),
            None => (None, None),
        };
        Ok(AlonMilmanReport {
            w_size: w.len(),
            cut,
            lambda1: self.lambda1,
            cut_bound,
            cut_bound_ok: cut as f64 >= cut_bound - TOL,
            cheeger,
            cheeger_bound_ok: cheeger.map(|h| h >= self.lambda1 / 2.0 - TOL),
            internal_edges: internal,
            internal_edge_identity_ok: identity,
            internal_edge_bound_ok: bound,
        })
    }
}

pub fn alon_milman_report(g: &GraphView, w: &[usize], caps: &Caps) -> Result<AlonMilmanReport> {
    AlonMilman::new(g, caps)?.check(w)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RamanujanCheck {
    pub k: usize,
    pub is_ramanujan: bool,
    /// `2√(k−1)`.
    pub bound: f64,
    /// Largest `|λ|` among eigenvalues with `|λ| ≠ k`.
    pub max_nontrivial: f64,
    /// Largest eigenvalue violating the bound, if any.
    pub max_offending: Option<f64>,
}

/// Every eigenvalue satisfies `|λ| = k` or `|λ| ≤ 2√(k−1)`.
pub fn is_ramanujan_graph(g: &GraphView, caps: &Caps) -> Result<RamanujanCheck> {
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let bound = 2.0 * ((k as f64) - 1.0).max(0.0).sqrt();
    let spec = spectrum(g, caps)?;
    let nontrivial: Vec<f64> = spec.into_iter().filter(|l| (l.abs() - k as f64).abs() > TOL).collect();
    let max_nontrivial = nontrivial.iter().map(|l| l.abs()).fold(0.0, f64::max);
    let max_offending = nontrivial
        .iter()
        .copied()
        .filter(|l| l.abs() > bound + TOL)
        .max_by(|a, b| a.abs().total_cmp(&b.abs()));
    Ok(RamanujanCheck { k, is_ramanujan: max_offending.is_none(), bound, max_nontrivial, max_offending })
}

/// Spectral data of a 1-skeleton carried in expansion reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub vertices: usize,
    pub edges: usize,
    pub regular_degree: Option<usize>,
    pub components: usize,
    pub adjacency_spectrum: Vec<f64>,
    pub laplacian_gap: Option<f64>,
    pub ramanujan: Option<bool>,
}

impl SpectralSummary {
    pub fn of_graph(g: &GraphView, caps: &Caps) -> Result<Self> {
        let ramanujan = if g.regular_degree().is_some() && g.is_connected() {
            Some(is_ramanujan_graph(g, caps)?.is_ramanujan)
        } else {
            None
        };
        Ok(Self {
            vertices: g.n,
            edges: g.edge_count(),
            regular_degree: g.regular_degree(),
            components: g.components(),
            adjacency_spectrum: spectrum(g, caps)?,
            laplacian_gap: laplacian_gap(g, caps)?,
            ramanujan,
        })
    }

    pub fn of_complex(x: &SimplicialComplex, caps: &Caps) -> Result<Self> {
        Self::of_graph(&GraphView::from_complex(x), caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn cycle(n: usize) -> GraphView {
        GraphView::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> GraphView {
        let e: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        GraphView::from_edges(n, &e).unwrap()
    }

    fn petersen() -> GraphView {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        GraphView::from_edges(10, &e).unwrap()
    }

    /// det(A − λI) by exact-ish Gaussian elimination with partial pivoting.
    fn char_poly_at(a: &DMatrix<f64>, lambda: f64) -> f64 {
        let n = a.nrows();
        let mut m = a.clone() - DMatrix::identity(n, n) * lambda;
        let mut det = 1.0;
        for c in 0..n {
            let p = (c..n).max_by(|&x, &y| m[(x, c)].abs().total_cmp(&m[(y, c)].abs())).unwrap();
            if m[(p, c)].abs() < 1e-14 {
                return 0.0;
            }
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= m[(c, c)];
            for r in c + 1..n {
                let f = m[(r, c)] / m[(c, c)];
                for k in c..n {
                    m[(r, k)] -= f * m[(c, k)];
                }
            }
        }
        det
    }

    fn assert_spectrum(got: &[f64], want: &[f64]) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn cycle4_spectrum() {
        let g = cycle(4);
        let s = spectrum(&g, &Caps::default()).unwrap();
        assert_spectrum(&s, &[2.0, 0.0, 0.0, -2.0]);
        for l in [2.0, 0.0, -2.0] {
            assert!(char_poly_at(&g.adjacency_matrix(), l).abs() < 1e-9);
        }
    }

    #[test]
    fn k4_spectrum_and_residuals() {
        let g = complete(4);
        let (vals, vecs) = eigen_decomposition(g.adjacency_matrix());
        assert_spectrum(&vals, &[3.0, -1.0, -1.0, -1.0]);
        let a = g.adjacency_matrix();
        for (c, l) in vals.iter().enumerate() {
            let v = vecs.column(c);
            assert!((&a * v - v * *l).norm() <= 1e-8 * v.norm());
        }
        // constants and differences are eigenvectors
        let ones = DMatrix::from_element(4, 1, 1.0);
        assert!((&a * &ones - &ones * 3.0).norm() < 1e-12);
        let diff = DMatrix::from_column_slice(4, 1, &[1.0, -1.0, 0.0, 0.0]);
        assert!((&a * &diff + &diff).norm() < 1e-12);
    }

    #[test]
    fn cheeger_examples() {
        let c4 = cheeger_exact(&cycle(4)).unwrap();
        assert_eq!(c4.h, ratio(1, 1));
        assert_eq!(c4.witness, vec![0, 1]);
        assert_eq!(cheeger_exact(&complete(4)).unwrap().h, ratio(2, 1));
        for g in [cycle(4), cycle(7), complete(5), petersen()] {
            let h = to_f64(&cheeger_exact(&g).unwrap().h);
            let l1 = laplacian_gap(&g, &Caps::default()).unwrap().unwrap();
            assert!(h >= l1 / 2.0 - TOL);
        }
    }

    #[test]
    fn cheeger_rejects_large_graphs() {
        assert!(matches!(cheeger_exact(&cycle(27)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn alon_milman_examples() {
        let caps = Caps::default();
        let k4 = complete(4);
        let r = alon_milman_report(&k4, &[0], &caps).unwrap();
        assert_eq!(r.cut, 3);
        assert!((r.cut_bound - 3.0).abs() < 1e-9);
        assert!(r.cut_bound_ok);
        let r = alon_milman_report(&k4, &[0, 1], &caps).unwrap();
        assert_eq!(r.internal_edges, 1);
        assert_eq!(r.internal_edge_identity_ok, Some(true));
        let r = alon_milman_report(&cycle(4), &[0, 1], &caps).unwrap();
        assert_eq!(r.cut, 2);
        assert!((r.cut_bound - 2.0).abs() < 1e-9);
        assert!(r.cut_bound_ok && r.cheeger_bound_ok == Some(true));
        assert_eq!(alon_milman_report(&k4, &[], &caps).unwrap_err(), Error::InvalidSubset);
        assert_eq!(alon_milman_report(&k4, &[0, 1, 2, 3], &caps).unwrap_err(), Error::InvalidSubset);
        assert_eq!(alon_milman_report(&k4, &[0, 0], &caps).unwrap_err(), Error::InvalidSubset);
    }

    #[test]
    fn ramanujan_examples() {
        let caps = Caps::default();
        assert!(is_ramanujan_graph(&complete(4), &caps).unwrap().is_ramanujan);
        let p = is_ramanujan_graph(&petersen(), &caps).unwrap();
        assert!(p.is_ramanujan);
        assert!((p.max_nontrivial - 2.0).abs() < 1e-9);
        assert!(is_ramanujan_graph(&cycle(4), &caps).unwrap().is_ramanujan);
        let path = GraphView::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_ramanujan_graph(&path, &caps).unwrap_err(), Error::NotRegular);
        let two = GraphView::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(is_ramanujan_graph(&two, &caps).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn trace_and_square_sum() {
        let caps = Caps::default();
        for g in [cycle(5), complete(6), petersen()] {
            let s = spectrum(&g, &caps).unwrap();
            assert!(s.iter().sum::<f64>().abs() < g.n() as f64 * 1e-9);
            assert!((s.iter().map(|l| l * l).sum::<f64>() - 2.0 * g.edge_count() as f64).abs() < 1e-8);
        }
    }

    #[test]
    fn zero_multiplicity_counts_components() {
        let caps = Caps::default();
        let two = GraphView::from_edges(7, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        assert_eq!(two.components(), 3);
        assert_eq!(laplacian_zero_multiplicity(&two, &caps).unwrap(), 3);
    }

    #[test]
    fn size_cap() {
        let caps = Caps { spectrum_vertices: 3, ..Caps::default() };
        assert!(matches!(spectrum(&cycle(4), &caps), Err(Error::TooLarge { .. })));
    }
}
