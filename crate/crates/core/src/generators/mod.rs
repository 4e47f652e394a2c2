//! Constructors for the complex families used throughout the crate.

mod cayley;
mod field;
mod fixtures;
mod iso;
mod random;

pub use cayley::{cayley_clique_complex, CayleyComplex, Permutation};
pub use field::{gaussian_binomial, Field, Subspace, SubspaceTable, SUPPORTED_FIELDS};
pub use fixtures::{fixture, icosahedron_antipodal_quotient, DEFAULT_FIXTURES};
pub use iso::{are_isomorphic, find_isomorphism, links_pairwise_isomorphic};
pub use random::{random_cochain, random_complex, random_graph};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// `Δ_n^{(d)}`: all `(d+1)`-subsets of `{0, …, n−1}` as facets, vertices labelled `"0"…`.
pub fn complete_complex(n: usize, d: usize) -> Result<SimplicialComplex> {
    if d < 1 || d >= n {
        return Err(Error::BadParams(format!("complete complex needs 1 <= d < n, got n={n}, d={d}")));
    }
    if n > 64 {
        return Err(Error::BadParams(format!("complete complex on {n} vertices is too large")));
    }
    let labels = (0..n).map(|v| v.to_string()).collect();
    let mut facets = Vec::new();
    let mut cur = Vec::with_capacity(d + 1);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, d + 1, &mut cur, &mut facets);
    SimplicialComplex::from_index_facets(labels, facets)
}

/// The flag complex of `F_q^m`: vertices are the proper nonzero subspaces, faces are chains.
///
/// Vertices are ordered by subspace dimension, then canonically within a dimension; each is
/// labelled `"<dim>:<rref rows>"`, e.g. `"1:011"` or `"2:100|011"`.
pub fn flag_complex(q: u32, m: usize) -> Result<SimplicialComplex> {
    let table = SubspaceTable::new(q, m)?;
    if !(3..=4).contains(&m) {
        return Err(Error::BadParams(format!("flag complex needs 3 <= m <= 4, got {m}")));
    }
    flag_complex_from_table(&table)
}

pub fn flag_complex_from_table(table: &SubspaceTable) -> Result<SimplicialComplex> {
    let m = table.m;
    let f = &table.field;
    let mut labels = Vec::new();
    // offset[k] = index of the first k-dimensional subspace
    let mut offset = vec![0usize; m + 1];
    for k in 1..m {
        offset[k] = labels.len();
        labels.extend(table.by_dim[k].iter().map(|s| format!("{k}:{}", s.label())));
    }
    // containment between consecutive dimensions
    let up: Vec<Vec<Vec<usize>>> = (1..m - 1)
        .map(|k| {
            table.by_dim[k]
                .iter()
                .map(|s| (0..table.count(k + 1)).filter(|&j| s.is_subspace_of(f, &table.by_dim[k + 1][j])).collect())
                .collect()
        })
        .collect();
    let mut facets = Vec::new();
    let mut chain = Vec::with_capacity(m - 1);
    fn extend(k: usize, m: usize, j: usize, up: &[Vec<Vec<usize>>], offset: &[usize], chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        chain.push(offset[k] + j);
        if k == m - 1 {
            out.push(chain.clone());
        } else {
            for &next in &up[k - 1][j] {
                extend(k + 1, m, next, up, offset, chain, out);
            }
        }
        chain.pop();
    }
    for j in 0..table.count(1) {
        extend(1, m, j, &up, &offset, &mut chain, &mut facets);
    }
    SimplicialComplex::from_index_facets(labels, facets)
}
