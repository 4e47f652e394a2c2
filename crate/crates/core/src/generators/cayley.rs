//! Clique complexes of Cayley graphs of permutation groups.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A permutation of `{0, …, m−1}` as its image list: `p[x]` is the image of `x`.
pub type Permutation = Vec<usize>;

fn check_permutation(p: &[usize], m: usize) -> Result<()> {
    let mut seen = vec![false; m];
    if p.len() != m {
        return Err(Error::BadParams(format!("generator {p:?} is not a permutation of 0..{m}")));
    }
    for &x in p {
        if x >= m || seen[x] {
            return Err(Error::BadParams(format!("generator {p:?} is not a permutation of 0..{m}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// `(g ∘ h)(x) = g(h(x))`.
fn compose(g: &[usize], h: &[usize]) -> Permutation {
    h.iter().map(|&x| g[x]).collect()
}

fn inverse(g: &[usize]) -> Permutation {
    let mut out = vec![0; g.len()];
    for (x, &y) in g.iter().enumerate() {
        out[y] = x;
    }
    out
}

/// The clique complex together with what was discarded to make it pure.
#[derive(Debug, Clone)]
pub struct CayleyComplex {
    pub complex: SimplicialComplex,
    /// Group elements in breadth-first order from the identity; vertex `j` is `elements[j]`.
    pub elements: Vec<Permutation>,
    /// Number of cliques of each size `1..=D+1` in the Cayley graph.
    pub clique_counts: Vec<usize>,
    /// Cliques not contained in any maximum clique, dropped to keep the complex pure.
    pub dropped_faces: usize,
}

/// Clique complex of `Cay(G, S)` truncated at dimension `max_dim`, where `G` is generated by `S`.
///
/// `{g₀, …, g_i}` is a face when `g_t^{-1} g_s ∈ S` for all `t ≠ s`. Faces of the largest
/// occurring dimension become the facets; lower cliques outside them are counted in
/// [`CayleyComplex::dropped_faces`].
pub fn cayley_clique_complex(generators: &[Permutation], max_dim: usize, caps: &Caps) -> Result<CayleyComplex> {
    let m = generators.first().map(Vec::len).ok_or_else(|| Error::BadParams("no generators".into()))?;
    if max_dim < 1 {
        return Err(Error::BadParams("max_dim must be at least 1".into()));
    }
    for g in generators {
        check_permutation(g, m)?;
    }
    let identity: Permutation = (0..m).collect();
    if generators.contains(&identity) {
        return Err(Error::BadParams("the identity is not allowed as a generator".into()));
    }
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();
    if gens.iter().any(|g| gens.binary_search(&inverse(g)).is_err()) {
        return Err(Error::NonSymmetricGenerators);
    }

    // breadth-first closure; neighbours of g are g·s
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        let mut nb = Vec::with_capacity(gens.len());
        for s in &gens {
            let h = compose(&elements[j], s);
            let k = match index.get(&h) {
                Some(&k) => k,
                None => {
                    if elements.len() >= caps.group_size {
                        return Err(Error::GroupTooLarge(caps.group_size));
                    }
                    let k = elements.len();
                    index.insert(h.clone(), k);
                    elements.push(h);
                    queue.push_back(k);
                    k
                }
            };
            nb.push(k);
        }
        nb.sort_unstable();
        nb.dedup();
        if adj.len() <= j {
            adj.resize(j + 1, Vec::new());
        }
        adj[j] = nb;
    }
    let n = elements.len();

    // cliques by size, each sorted, generated in increasing order
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..n).map(|v| vec![v]).collect()];
    while levels.len() < max_dim + 1 {
        let mut next = Vec::new();
        for c in levels.last().expect("nonempty") {
            let last = *c.last().expect("nonempty clique");
            for &v in adj[last].iter().filter(|&&v| v > last) {
                if c.iter().all(|u| adj[v].binary_search(u).is_ok()) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    let clique_counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    let facets = levels.last().expect("nonempty").clone();
    let labels = elements.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    let complex = SimplicialComplex::from_index_facets(labels, facets)?;
    let kept: usize = complex.f_vector().iter().sum();
    let dropped_faces = clique_counts.iter().sum::<usize>() - kept;
    Ok(CayleyComplex { complex, elements, clique_counts, dropped_faces })
}
