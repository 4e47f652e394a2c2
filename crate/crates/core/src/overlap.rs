//! Geometric overlap: the largest number of affine facet images sharing a point.
//!
//! Simplices are closed (boundary points count as covered). The planar computation is exact; in
//! higher dimension a seeded sample of candidate points gives a lower bound.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// Vertex label to coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointConfig {
    pub points: BTreeMap<String, Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct PointFile {
    points: BTreeMap<String, Vec<String>>,
}

impl PointConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        let f: PointFile = serde_json::from_str(s)?;
        let mut points = BTreeMap::new();
        for (k, v) in f.points {
            points.insert(k, v.iter().map(|c| rational::parse(c)).collect::<Result<Vec<_>>>()?);
        }
        Ok(Self { points })
    }

    pub fn to_json(&self) -> String {
        let f = PointFile {
            points: self.points.iter().map(|(k, v)| (k.clone(), v.iter().map(|c| c.to_string()).collect())).collect(),
        };
        serde_json::to_string_pretty(&f).expect("serialisable")
    }

    /// Coordinates indexed by the vertices of `x`; every vertex needs a point of dimension `d`.
    pub fn bind(&self, x: &SimplicialComplex, d: usize) -> Result<Vec<Vec<Rational>>> {
        (0..x.num_vertices())
            .map(|v| {
                let p = self.points.get(x.label(v)).ok_or_else(|| Error::VertexNotPresent(x.label(v).to_string()))?;
                if p.len() != d {
                    return Err(Error::LengthMismatch { expected: d, got: p.len() });
                }
                Ok(p.clone())
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapResult {
    pub max_depth: usize,
    /// `max_depth / |X(d)|`.
    pub fraction: Rational,
    pub witness_point: Vec<Rational>,
    /// Indices into `X(d)` of the facets whose image contains the witness.
    pub covering_facets: Vec<usize>,
    pub candidates: usize,
}

type P2 = [Rational; 2];

fn orient(a: &P2, b: &P2, c: &P2) -> Rational {
    (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
}

fn on_segment(p: &P2, q: &P2, z: &P2) -> bool {
    orient(p, q, z).is_zero()
        && (0..2).all(|k| {
            let (lo, hi) = if p[k] <= q[k] { (&p[k], &q[k]) } else { (&q[k], &p[k]) };
            lo <= &z[k] && &z[k] <= hi
        })
}

/// Closed triangle (possibly degenerate) containment.
fn triangle_contains(t: &[P2; 3], z: &P2) -> bool {
    let [a, b, c] = t;
    if orient(a, b, c).is_zero() {
        // collinear: the hull is the segment between the two extreme points
        let mut pts = [a, b, c];
        pts.sort();
        return on_segment(pts[0], pts[2], z);
    }
    let o = [orient(a, b, z), orient(b, c, z), orient(c, a, z)];
    o.iter().all(|x| !x.is_negative()) || o.iter().all(|x| !x.is_positive())
}

/// Intersection points of two closed segments: none, one, or the overlap endpoints.
fn segment_intersections(p: &P2, q: &P2, r: &P2, s: &P2) -> Vec<P2> {
    let d1 = [&q[0] - &p[0], &q[1] - &p[1]];
    let d2 = [&s[0] - &r[0], &s[1] - &r[1]];
    let den = &d1[0] * &d2[1] - &d1[1] * &d2[0];
    if den.is_zero() {
        // parallel; collinear overlaps contribute only endpoints, which are already candidates
        return [p, q, r, s]
            .into_iter()
            .filter(|z| on_segment(p, q, z) && on_segment(r, s, z))
            .cloned()
            .collect();
    }
    let w = [&r[0] - &p[0], &r[1] - &p[1]];
    let t = (&w[0] * &d2[1] - &w[1] * &d2[0]) / &den;
    let u = (&w[0] * &d1[1] - &w[1] * &d1[0]) / &den;
    let zero = Rational::zero();
    let one = int(1);
    if t < zero || t > one || u < zero || u > one {
        return Vec::new();
    }
    vec![[&p[0] + &t * &d1[0], &p[1] + &t * &d1[1]]]
}

/// Best `(depth, witness, covering)` over candidates; ties go to the first candidate.
fn best_over<T: Sync, F>(candidates: &[T], depth_of: F) -> (usize, usize, Vec<usize>)
where
    F: Fn(&T) -> Vec<usize> + Sync,
{
    candidates
        .par_iter()
        .enumerate()
        .map(|(i, z)| {
            let cover = depth_of(z);
            (cover.len(), i, cover)
        })
        .reduce(|| (0, usize::MAX, Vec::new()), |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a })
}

/// Exact maximum depth of the closed affine triangle images of a 2-complex in the plane.
///
/// The depth function is constant on the faces of the arrangement of triangle edges, and a
/// nonempty intersection of closed triangles has an extreme point, which is a vertex image or a
/// crossing of two edge images. Depth is therefore evaluated only at those points.
pub fn geometric_overlap_2d(x: &SimplicialComplex, points: &PointConfig) -> Result<OverlapResult> {
    if x.dim() != 2 {
        return Err(Error::WrongDimension { expected: 2, got: x.dim() });
    }
    let coords = points.bind(x, 2)?;
    let pt = |v: usize| -> P2 { [coords[v][0].clone(), coords[v][1].clone()] };
    let tris: Vec<[P2; 3]> = x.facets().iter().map(|f| [pt(f[0]), pt(f[1]), pt(f[2])]).collect();
    let segs: Vec<(P2, P2)> = x.faces(1).iter().map(|e| (pt(e[0]), pt(e[1]))).collect();

    let mut cand: Vec<P2> = (0..x.num_vertices()).map(pt).collect();
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            cand.extend(segment_intersections(&segs[i].0, &segs[i].1, &segs[j].0, &segs[j].1));
        }
    }
    cand.sort();
    cand.dedup();
    let (depth, w, covering) =
        best_over(&cand, |z| (0..tris.len()).filter(|&t| triangle_contains(&tris[t], z)).collect());
    Ok(OverlapResult {
        max_depth: depth,
        fraction: Rational::new(depth.into(), tris.len().into()),
        witness_point: cand[w].to_vec(),
        covering_facets: covering,
        candidates: cand.len(),
    })
}

/// Whether `z` lies in the convex hull of `pts`, exactly.
///
/// Solves for affine coordinates when the points are affinely independent; otherwise some
/// affinely independent subset carries `z` (Carathéodory) and the points are dropped one at a
/// time.
pub fn in_convex_hull(pts: &[&[Rational]], z: &[Rational]) -> bool {
    let k = pts.len();
    if k == 0 {
        return false;
    }
    if k == 1 {
        return pts[0] == z;
    }
    let d = z.len();
    // augmented system [p_1 - p_0 | … | p_{k-1} - p_0 | z - p_0], d rows, k-1 unknowns
    let mut m: Vec<Vec<Rational>> = (0..d)
        .map(|r| {
            let mut row: Vec<Rational> = (1..k).map(|c| &pts[c][r] - &pts[0][r]).collect();
            row.push(&z[r] - &pts[0][r]);
            row
        })
        .collect();
    let cols = k - 1;
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..d).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(row, p);
        let inv = int(1) / &m[row][c];
        for e in m[row].iter_mut() {
            *e = &*e * &inv;
        }
        for r in 0..d {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for cc in c..=cols {
                    let delta = &f * &m[row][cc];
                    m[r][cc] -= delta;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    if pivots.len() < cols {
        return (0..k).any(|skip| {
            let rest: Vec<&[Rational]> = pts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, p)| *p).collect();
            in_convex_hull(&rest, z)
        });
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return false;
    }
    let lambda: Vec<&Rational> = (0..cols).map(|r| &m[r][cols]).collect();
    let sum: Rational = lambda.iter().copied().sum();
    lambda.iter().all(|l| !l.is_negative()) && sum <= int(1)
}

/// Seeded lower bound on the maximum depth of the closed affine facet images in `R^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapEstimate {
    /// Best point found; `max_depth` is a lower bound for the true maximum.
    pub best: OverlapResult,
    pub samples: usize,
    pub seed: u64,
    /// Mean of `depth / |X(d)|` over the random sample points.
    pub mean_fraction: f64,
    /// 95% normal-approximation interval for that mean, clipped to `[0, 1]`.
    pub mean_ci95: (f64, f64),
}

/// Evaluates depth at every vertex image and at `samples` random convex combinations of facet
/// vertex images (uniform facet, integer weights in `1..=1000`).
pub fn geometric_overlap_mc(x: &SimplicialComplex, points: &PointConfig, samples: usize, seed: u64) -> Result<OverlapEstimate> {
    let d = x.dim();
    if d < 2 {
        return Err(Error::WrongDimension { expected: 2, got: d });
    }
    if samples == 0 {
        return Err(Error::BadParams("samples must be at least 1".into()));
    }
    let d = d as usize;
    let coords = points.bind(x, d)?;
    let facets = x.facets();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cand: Vec<Vec<Rational>> = coords.clone();
    for _ in 0..samples {
        let f = &facets[rng.gen_range(0..facets.len())];
        let w: Vec<u64> = (0..f.len()).map(|_| rng.gen_range(1..=1000u64)).collect();
        let total: u64 = w.iter().sum();
        let z = (0..d)
            .map(|k| f.iter().zip(&w).map(|(&v, &wi)| &coords[v][k] * int(wi as i64)).sum::<Rational>() / int(total as i64))
            .collect();
        cand.push(z);
    }
    let cover = |z: &Vec<Rational>| -> Vec<usize> {
        (0..facets.len())
            .filter(|&j| {
                let pts: Vec<&[Rational]> = facets[j].iter().map(|&v| coords[v].as_slice()).collect();
                in_convex_hull(&pts, z)
            })
            .collect()
    };
    let depths: Vec<usize> = cand[coords.len()..].par_iter().map(|z| cover(z).len()).collect();
    let (depth, w, covering) = best_over(&cand, cover);
    let nf = facets.len() as f64;
    let fr: Vec<f64> = depths.iter().map(|&k| k as f64 / nf).collect();
    let mean = fr.iter().sum::<f64>() / fr.len() as f64;
    let var = if fr.len() > 1 { fr.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (fr.len() - 1) as f64 } else { 0.0 };
    let half = 1.96 * (var / fr.len() as f64).sqrt();
    Ok(OverlapEstimate {
        best: OverlapResult {
            max_depth: depth,
            fraction: Rational::new(depth.into(), facets.len().into()),
            witness_point: cand[w].clone(),
            covering_facets: covering,
            candidates: cand.len(),
        },
        samples,
        seed,
        mean_fraction: mean,
        mean_ci95: ((mean - half).max(0.0), (mean + half).min(1.0)),
    })
}
