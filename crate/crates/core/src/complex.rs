//! Finite pure simplicial complexes.
//!
//! A [`SimplicialComplex`] stores every face, including the empty face `X(-1) = {∅}`, sorted
//! lexicographically per dimension. Vertices carry external string labels; everything inside the
//! crate addresses faces by dense indices so cochains can be bit vectors.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::rational::{ratio, Rational};

/// A face as a strictly increasing list of vertex indices.
pub type Face = Vec<usize>;

#[derive(Debug, Clone)]
struct Level {
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
    facet_degree: Vec<u64>,
    /// Indices of the faces one dimension up that contain this face.
    cofaces: Vec<Vec<usize>>,
    /// Indices of the codimension-one faces of this face.
    boundary: Vec<Vec<usize>>,
}

/// A finite pure simplicial complex of dimension `d >= -1`.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    /// `levels[k]` holds the faces of dimension `k - 1`.
    levels: Vec<Level>,
}

/// Correspondence between the faces of a link `X_τ` and the faces of `X` containing `τ`.
#[derive(Debug, Clone)]
pub struct LinkMap {
    /// The face `τ` (vertex indices of the parent complex).
    pub tau: Face,
    /// Link vertex `j` is parent vertex `vertex_map[j]`.
    pub vertex_map: Vec<usize>,
    /// `to_parent[k][j]`: index in `X(k - 1 + |τ|)` of `ρ ∪ τ` for the `j`-th face `ρ` of `X_τ(k - 1)`.
    to_parent: Vec<Vec<usize>>,
}

impl LinkMap {
    /// Index in the parent of `ρ ∪ τ`, where `ρ` is the `idx`-th face of dimension `i` in the link.
    pub fn lift(&self, i: isize, idx: usize) -> usize {
        self.to_parent[(i + 1) as usize][idx]
    }

    /// Dimension in the parent complex of the lift of an `i`-face of the link.
    pub fn lifted_dim(&self, i: isize) -> isize {
        i + self.tau.len() as isize
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}

impl SimplicialComplex {
    /// Downward closure of a list of equal-size facets given by vertex label.
    ///
    /// Vertices are indexed in order of first appearance.
    pub fn build_from_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let size = facets[0].len();
        let mut labels: Vec<String> = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        let mut idx_facets = Vec::with_capacity(facets.len());
        for facet in facets {
            if facet.len() != size {
                return Err(Error::MixedFacetSizes { first: size, other: facet.len() });
            }
            if facet.is_empty() {
                return Err(Error::InvalidFacet("facets must contain at least one vertex".into()));
            }
            let mut f = Vec::with_capacity(size);
            for l in facet {
                let l = l.as_ref();
                if l.is_empty() {
                    return Err(Error::InvalidFacet("empty vertex label".into()));
                }
                let next = labels.len();
                let i = *seen.entry(l.to_string()).or_insert_with(|| {
                    labels.push(l.to_string());
                    next
                });
                f.push(i);
            }
            idx_facets.push(f);
        }
        Self::from_index_facets(labels, idx_facets)
    }

    /// Downward closure of facets given by index into `labels`.
    ///
    /// Every label must be used by some facet. A single empty facet with no labels yields the
    /// `(-1)`-dimensional complex `{∅}`.
    pub fn from_index_facets(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyInput);
        }
        let size = facets[0].len();
        let mut facet_set: BTreeSet<Face> = BTreeSet::new();
        let mut used = vec![false; labels.len()];
        for f in &facets {
            if f.len() != size {
                return Err(Error::MixedFacetSizes { first: size, other: f.len() });
            }
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() {
                return Err(Error::InvalidFacet(format!("repeated vertex in facet {f:?}")));
            }
            for &v in &s {
                if v >= labels.len() {
                    return Err(Error::InvalidFacet(format!("vertex index {v} out of range")));
                }
                used[v] = true;
            }
            facet_set.insert(s);
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::InvalidFacet(format!("vertex {:?} lies in no facet", labels[v])));
        }
        let mut label_index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if label_index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidFacet(format!("duplicate vertex label {l:?}")));
            }
        }

        // facet degree of every face, by size
        let mut degree: Vec<HashMap<Face, u64>> = vec![HashMap::new(); size + 1];
        for f in &facet_set {
            for mask in 0u64..(1u64 << size) {
                let sub: Face = (0..size).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                *degree[sub.len()].entry(sub).or_insert(0) += 1;
            }
        }
        let mut levels: Vec<Level> = degree
            .into_iter()
            .map(|m| {
                let mut faces: Vec<(Face, u64)> = m.into_iter().collect();
                faces.sort();
                let index = faces.iter().enumerate().map(|(i, (f, _))| (f.clone(), i)).collect();
                let facet_degree = faces.iter().map(|(_, c)| *c).collect();
                let n = faces.len();
                Level {
                    faces: faces.into_iter().map(|(f, _)| f).collect(),
                    index,
                    facet_degree,
                    cofaces: vec![Vec::new(); n],
                    boundary: vec![Vec::new(); n],
                }
            })
            .collect();
        for k in 1..levels.len() {
            let (lower, upper) = levels.split_at_mut(k);
            let lower = &mut lower[k - 1];
            let upper = &mut upper[0];
            for (j, face) in upper.faces.iter().enumerate() {
                for skip in 0..face.len() {
                    let sub: Face = face.iter().enumerate().filter(|(p, _)| *p != skip).map(|(_, v)| *v).collect();
                    let s = lower.index[&sub];
                    upper.boundary[j].push(s);
                    lower.cofaces[s].push(j);
                }
                upper.boundary[j].sort_unstable();
            }
        }
        Ok(Self { labels, label_index, levels })
    }

    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 2
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    fn level(&self, i: isize) -> Option<&Level> {
        if i < -1 {
            return None;
        }
        self.levels.get((i + 1) as usize)
    }

    pub(crate) fn check_dim(&self, i: isize) -> Result<()> {
        if i < -1 || i > self.dim() {
            return Err(Error::DimensionOutOfRange { dim: i, lo: -1, hi: self.dim() });
        }
        Ok(())
    }

    /// The `i`-faces in sorted order; empty when `i` is outside `-1..=d`.
    pub fn faces(&self, i: isize) -> &[Face] {
        self.level(i).map(|l| l.faces.as_slice()).unwrap_or(&[])
    }

    /// `|X(i)|`, zero outside `-1..=d`.
    pub fn count(&self, i: isize) -> usize {
        self.faces(i).len()
    }

    pub fn facets(&self) -> &[Face] {
        self.faces(self.dim())
    }

    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|i| self.count(i)).collect()
    }

    /// Index of `face` (sorted or not) in `X(|face| - 1)`.
    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.levels.get(f.len())?.index.get(&f).copied()
    }

    /// Resolves a face given by vertex labels to sorted vertex indices.
    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face> {
        let mut f = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            f.push(self.vertex_index(l).ok_or_else(|| Error::VertexNotPresent(l.to_string()))?);
        }
        f.sort_unstable();
        if self.face_index(&f).is_none() {
            return Err(Error::FaceNotPresent(labels.iter().map(|l| l.as_ref().to_string()).collect()));
        }
        Ok(f)
    }

    pub fn face_labels(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// `c(σ)` for the `idx`-th `i`-face: the number of facets containing it.
    pub fn facet_degree(&self, i: isize, idx: usize) -> u64 {
        self.level(i).expect("dimension in range").facet_degree[idx]
    }

    pub fn facet_degrees(&self, i: isize) -> &[u64] {
        self.level(i).map(|l| l.facet_degree.as_slice()).unwrap_or(&[])
    }

    /// `C(d+1, i+1) · |X(d)|`, the common denominator of all `i`-face weights.
    pub fn weight_denominator(&self, i: isize) -> u64 {
        let d = self.dim();
        binomial((d + 1) as u64, (i + 1) as u64) * self.count(d) as u64
    }

    /// `wt(σ) = c(σ) / (C(d+1, i+1) |X(d)|)`.
    pub fn weight(&self, i: isize, idx: usize) -> Rational {
        ratio(self.facet_degree(i, idx), self.weight_denominator(i))
    }

    /// `(σ, c(σ), wt(σ))` for every `i`-face.
    pub fn weight_profile(&self, i: isize) -> Result<Vec<(Face, u64, Rational)>> {
        self.check_dim(i)?;
        Ok(self
            .faces(i)
            .iter()
            .enumerate()
            .map(|(j, f)| (f.clone(), self.facet_degree(i, j), self.weight(i, j)))
            .collect())
    }

    /// Indices in `X(i+1)` of the faces containing the `idx`-th `i`-face.
    pub fn cofaces(&self, i: isize, idx: usize) -> &[usize] {
        &self.level(i).expect("dimension in range").cofaces[idx]
    }

    /// Indices in `X(i-1)` of the codimension-one faces of the `idx`-th `i`-face.
    pub fn boundary(&self, i: isize, idx: usize) -> &[usize] {
        &self.level(i).expect("dimension in range").boundary[idx]
    }

    /// Vertex neighbours in the 1-skeleton.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let Some(vi) = self.face_index(&[v]) else { return Vec::new() };
        if self.dim() < 1 {
            return Vec::new();
        }
        let mut out: Vec<usize> = self
            .cofaces(0, vi)
            .iter()
            .map(|&e| {
                let f = &self.faces(1)[e];
                if f[0] == v { f[1] } else { f[0] }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The link `X_τ = {σ ∖ τ : τ ⊆ σ ∈ X}` with its face correspondence.
    pub fn link_of(&self, tau: &[usize]) -> Result<(SimplicialComplex, LinkMap)> {
        let mut tau = tau.to_vec();
        tau.sort_unstable();
        if self.face_index(&tau).is_none() {
            return Err(Error::FaceNotPresent(tau.iter().map(|&v| self.labels.get(v).cloned().unwrap_or_default()).collect()));
        }
        let rest = |f: &Face| -> Face { f.iter().copied().filter(|v| tau.binary_search(v).is_err()).collect() };
        let containing: Vec<Face> =
            self.facets().iter().filter(|f| tau.iter().all(|v| f.binary_search(v).is_ok())).map(rest).collect();
        let mut verts: Vec<usize> = containing.iter().flatten().copied().collect();
        verts.sort_unstable();
        verts.dedup();
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(j, &v)| (v, j)).collect();
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let facets = containing.iter().map(|f| f.iter().map(|v| local[v]).collect()).collect();
        let link = SimplicialComplex::from_index_facets(labels, facets)?;
        let to_parent = link
            .levels
            .iter()
            .map(|level| {
                level
                    .faces
                    .iter()
                    .map(|rho| {
                        let mut f: Face = rho.iter().map(|&j| verts[j]).chain(tau.iter().copied()).collect();
                        f.sort_unstable();
                        self.face_index(&f).expect("lift of a link face is a face")
                    })
                    .collect()
            })
            .collect();
        Ok((link, LinkMap { tau, vertex_map: verts, to_parent }))
    }

    /// [`link_of`](Self::link_of) with `τ` given by vertex labels.
    pub fn link<S: AsRef<str>>(&self, tau: &[S]) -> Result<(SimplicialComplex, LinkMap)> {
        let face = self.face_from_labels(tau)?;
        self.link_of(&face)
    }

    /// Facets as label lists, labels sorted within each facet and facets sorted.
    pub fn canonical_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets()
            .iter()
            .map(|f| {
                let mut l = self.face_labels(f);
                l.sort();
                l
            })
            .collect();
        out.sort();
        out
    }

    /// True when every vertex has the same number of neighbours.
    pub fn is_graph_regular(&self) -> bool {
        let degs: Vec<usize> = (0..self.num_vertices()).map(|v| self.neighbors(v).len()).collect();
        degs.windows(2).all(|w| w[0] == w[1])
    }
}
