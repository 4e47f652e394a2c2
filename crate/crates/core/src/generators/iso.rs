//! Isomorphism of small complexes by backtracking over vertex bijections.

use std::collections::HashSet;

use crate::complex::{Face, SimplicialComplex};
use crate::error::Result;

struct Side<'a> {
    x: &'a SimplicialComplex,
    adj: Vec<Vec<bool>>,
    /// Per-vertex invariant: (facets through v, degree, sorted neighbour degrees).
    inv: Vec<(u64, usize, Vec<usize>)>,
    facets_of: Vec<Vec<usize>>,
}

impl<'a> Side<'a> {
    fn new(x: &'a SimplicialComplex) -> Self {
        let n = x.num_vertices();
        let nb: Vec<Vec<usize>> = (0..n).map(|v| x.neighbors(v)).collect();
        let mut adj = vec![vec![false; n]; n];
        for (v, l) in nb.iter().enumerate() {
            for &u in l {
                adj[v][u] = true;
            }
        }
        let inv = (0..n)
            .map(|v| {
                let mut nd: Vec<usize> = nb[v].iter().map(|&u| nb[u].len()).collect();
                nd.sort_unstable();
                (x.facet_degree(0, v), nb[v].len(), nd)
            })
            .collect();
        let mut facets_of = vec![Vec::new(); n];
        for (j, f) in x.facets().iter().enumerate() {
            for &v in f {
                facets_of[v].push(j);
            }
        }
        Self { x, adj, inv, facets_of }
    }
}

/// A vertex bijection `φ` from `x` to `y` mapping facets onto facets, if one exists.
pub fn find_isomorphism(x: &SimplicialComplex, y: &SimplicialComplex) -> Option<Vec<usize>> {
    if x.f_vector() != y.f_vector() {
        return None;
    }
    let n = x.num_vertices();
    if n == 0 {
        return Some(Vec::new());
    }
    let a = Side::new(x);
    let b = Side::new(y);
    let mut ia: Vec<_> = a.inv.clone();
    let mut ib: Vec<_> = b.inv.clone();
    ia.sort();
    ib.sort();
    if ia != ib {
        return None;
    }
    let target: HashSet<Face> = y.facets().iter().cloned().collect();

    // visit vertices of x in breadth-first order so that most constraints bind early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut k = order.len() - 1;
        while k < order.len() {
            let v = order[k];
            for u in x.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
            k += 1;
        }
    }

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        order: &[usize],
        a: &Side,
        b: &Side,
        target: &HashSet<Face>,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for v in 0..phi.len() {
            if used[v] || a.inv[u] != b.inv[v] {
                continue;
            }
            let consistent = order[..k].iter().all(|&w| a.adj[u][w] == b.adj[v][phi[w]]);
            if !consistent {
                continue;
            }
            phi[u] = v;
            used[v] = true;
            let facets_ok = a.facets_of[u].iter().all(|&j| {
                let f = &a.x.facets()[j];
                if f.iter().any(|&w| phi[w] == usize::MAX) {
                    return true;
                }
                let mut img: Face = f.iter().map(|&w| phi[w]).collect();
                img.sort_unstable();
                target.contains(&img)
            });
            if facets_ok && rec(k + 1, order, a, b, target, phi, used) {
                return true;
            }
            phi[u] = usize::MAX;
            used[v] = false;
        }
        false
    }
    rec(0, &order, &a, &b, &target, &mut phi, &mut used).then_some(phi)
}

pub fn are_isomorphic(x: &SimplicialComplex, y: &SimplicialComplex) -> bool {
    find_isomorphism(x, y).is_some()
}

/// Whether all vertex links are isomorphic to the link of vertex 0 (a necessary condition for
/// vertex transitivity).
pub fn links_pairwise_isomorphic(x: &SimplicialComplex) -> Result<bool> {
    if x.num_vertices() == 0 {
        return Ok(true);
    }
    let (first, _) = x.link_of(&[0])?;
    for v in 1..x.num_vertices() {
        if !are_isomorphic(&first, &x.link_of(&[v])?.0) {
            return Ok(false);
        }
    }
    Ok(true)
}
