//! Named small complexes.

use std::ops::{Add, Mul, Neg, Sub};

use super::{complete_complex, flag_complex};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Fixtures exercised by the verification suite.
pub const DEFAULT_FIXTURES: &[&str] = &[
    "complete_4_2",
    "complete_5_2",
    "rp2_6",
    "flag_2_3",
    "fano_incidence",
    "petersen",
    "octahedron_boundary",
    "cycle_3",
    "cycle_4",
    "cycle_5",
    "cycle_6",
    "cycle_7",
    "cycle_8",
    "k4",
    "k33",
    "two_triangles",
];

/// Builds a named fixture.
///
/// Names: `rp2_6`, `petersen`, `fano_incidence`, `octahedron_boundary`, `k33`, `two_triangles`,
/// `two_edges`, `cycle_<k>` (`k ≥ 3`), `k<n>` (complete graph), `complete_<n>_<d>`,
/// `flag_<q>_<m>`.
pub fn fixture(name: &str) -> Result<SimplicialComplex> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let nums = |prefix: &str| -> Option<Vec<usize>> {
        let rest = name.strip_prefix(prefix)?;
        rest.split('_').map(|p| p.parse().ok()).collect()
    };
    match name {
        "rp2_6" => return icosahedron_antipodal_quotient(),
        "petersen" => return petersen(),
        "fano_incidence" => return fano_incidence(),
        "octahedron_boundary" => return octahedron_boundary(),
        "k33" => return graph(&(0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect::<Vec<_>>(), 6),
        "two_triangles" => return graph(&[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6),
        "two_edges" => return graph(&[(0, 1), (2, 3)], 4),
        _ => {}
    }
    if let Some(v) = nums("cycle_") {
        return match v[..] {
            [k] if k >= 3 => graph(&(0..k).map(|i| (i, (i + 1) % k)).collect::<Vec<_>>(), k),
            _ => Err(unknown()),
        };
    }
    if let Some(v) = nums("complete_") {
        return match v[..] {
            [n, d] => complete_complex(n, d),
            _ => Err(unknown()),
        };
    }
    if let Some(v) = nums("flag_") {
        return match v[..] {
            [q, m] => flag_complex(q as u32, m),
            _ => Err(unknown()),
        };
    }
    if let Some(v) = nums("k") {
        return match v[..] {
            [n] if n >= 2 => complete_complex(n, 1),
            _ => Err(unknown()),
        };
    }
    Err(unknown())
}

fn graph(edges: &[(usize, usize)], n: usize) -> Result<SimplicialComplex> {
    let labels = (0..n).map(|v| v.to_string()).collect();
    SimplicialComplex::from_index_facets(labels, edges.iter().map(|&(a, b)| vec![a, b]).collect())
}

/// The Kneser graph `K(5, 2)`: 2-subsets of `{0,…,4}`, adjacent when disjoint.
fn petersen() -> Result<SimplicialComplex> {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| ((a + 1)..5).map(move |b| (a, b))).collect();
    let labels = pairs.iter().map(|(a, b)| format!("{a}{b}")).collect();
    let mut edges = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for (j, r) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 != r.0 && p.0 != r.1 && p.1 != r.0 && p.1 != r.1 {
                edges.push(vec![i, j]);
            }
        }
    }
    SimplicialComplex::from_index_facets(labels, edges)
}

/// Point–line incidence graph of the Fano plane: points and lines are the nonzero vectors of
/// `F₂³`, and point `p` lies on line `l` when `p · l = 0`.
fn fano_incidence() -> Result<SimplicialComplex> {
    let mut labels: Vec<String> = (1..8u8).map(|p| format!("p{p:03b}")).collect();
    labels.extend((1..8u8).map(|l| format!("l{l:03b}")));
    let mut edges = Vec::new();
    for p in 1..8u8 {
        for l in 1..8u8 {
            if (p & l).count_ones() % 2 == 0 {
                edges.push(vec![(p - 1) as usize, (l + 6) as usize]);
            }
        }
    }
    SimplicialComplex::from_index_facets(labels, edges)
}

/// Boundary of the cross-polytope in `R³`: one vertex from each pair `±e_i` spans a triangle.
fn octahedron_boundary() -> Result<SimplicialComplex> {
    let labels = ["x+", "x-", "y+", "y-", "z+", "z-"].iter().map(|s| s.to_string()).collect();
    let mut facets = Vec::new();
    for sx in 0..2 {
        for sy in 0..2 {
            for sz in 0..2 {
                facets.push(vec![sx, 2 + sy, 4 + sz]);
            }
        }
    }
    SimplicialComplex::from_index_facets(labels, facets)
}

/// `a + bφ` with `φ² = φ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Golden(i64, i64);

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden(-self.0, -self.1)
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        Golden(self.0 * o.0 + self.1 * o.1, self.0 * o.1 + self.1 * o.0 + self.1 * o.1)
    }
}

type Point3 = [Golden; 3];

/// The icosahedron `(0, ±1, ±φ)` and cyclic shifts, with its 20 triangles found as triples of
/// pairwise adjacent vertices (edge length 2).
fn icosahedron() -> (Vec<Point3>, Vec<[usize; 3]>) {
    let zero = Golden(0, 0);
    let one = Golden(1, 0);
    let phi = Golden(0, 1);
    let mut pts = Vec::new();
    for s1 in [one, -one] {
        for s2 in [phi, -phi] {
            let base = [zero, s1, s2];
            for shift in 0..3 {
                pts.push([base[(3 - shift) % 3], base[(4 - shift) % 3], base[(5 - shift) % 3]]);
            }
        }
    }
    let dist2 = |a: &Point3, b: &Point3| (0..3).fold(zero, |acc, k| acc + (a[k] - b[k]) * (a[k] - b[k]));
    let adjacent = |i: usize, j: usize| dist2(&pts[i], &pts[j]) == Golden(4, 0);
    let mut tris = Vec::new();
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                if adjacent(a, b) && adjacent(a, c) && adjacent(b, c) {
                    tris.push([a, b, c]);
                }
            }
        }
    }
    (pts, tris)
}

/// The 6-vertex real projective plane: the icosahedron modulo `v ↦ −v`.
///
/// Vertex `k` is the antipodal pair whose first member (in icosahedron order) is the `k`-th such
/// representative.
pub fn icosahedron_antipodal_quotient() -> Result<SimplicialComplex> {
    let (pts, tris) = icosahedron();
    let mut class = vec![usize::MAX; pts.len()];
    let mut next = 0;
    for i in 0..pts.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let neg = [-pts[i][0], -pts[i][1], -pts[i][2]];
        let j = pts.iter().position(|p| *p == neg).expect("icosahedron is centrally symmetric");
        class[i] = next;
        class[j] = next;
        next += 1;
    }
    let mut facets: Vec<Vec<usize>> = tris
        .iter()
        .map(|t| {
            let mut f: Vec<usize> = t.iter().map(|&v| class[v]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    facets.sort();
    facets.dedup();
    if facets.iter().any(|f| f[0] == f[1] || f[1] == f[2]) {
        return Err(Error::InvalidFacet("antipodal quotient collapsed a triangle".into()));
    }
    SimplicialComplex::from_index_facets((0..next).map(|k| k.to_string()).collect(), facets)
}
