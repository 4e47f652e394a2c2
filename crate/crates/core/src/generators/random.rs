//! Seeded random instances for property checks.

use rand::seq::index::sample;
use rand::Rng;

use crate::bits::BitVec;
use crate::cochain::Cochain;
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::spectral::GraphView;

/// A pure complex of dimension `1..=max_dim` on at most `max_vertices` vertices with up to
/// `max_facets` random facets. Vertices that end up in no facet are dropped.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize, max_dim: usize, max_facets: usize) -> Result<SimplicialComplex> {
    let d = rng.gen_range(1..=max_dim);
    let n = rng.gen_range(d + 1..=max_vertices.max(d + 1));
    let m = rng.gen_range(1..=max_facets.max(1));
    let facets: Vec<Vec<String>> = (0..m)
        .map(|_| {
            let mut f = sample(rng, n, d + 1).into_vec();
            f.sort_unstable();
            f.iter().map(|v| v.to_string()).collect()
        })
        .collect();
    SimplicialComplex::build_from_facets(&facets)
}

/// Each `i`-face is included independently with probability `p`.
pub fn random_cochain<R: Rng>(rng: &mut R, x: &SimplicialComplex, i: isize, p: f64) -> Result<Cochain> {
    let n = x.count(i);
    let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(p)).collect();
    Cochain::from_support(x, i, BitVec::from_bools(&bits))
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<GraphView> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    GraphView::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_instances_repeat() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = random_complex(&mut a, 9, 3, 10).unwrap();
            let y = random_complex(&mut b, 9, 3, 10).unwrap();
            assert_eq!(x.canonical_facets(), y.canonical_facets());
            assert!(x.num_vertices() <= 9 && x.dim() <= 3);
        }
        let g = random_graph(&mut a, 8, 0.4).unwrap();
        assert_eq!(g.n(), 8);
    }
}
