//! Acceptance criteria, one printed line each.
//!
//! Every criterion is checked against a brute-force oracle written here, independently of the
//! library routines it exercises.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hdx_core::bits::BitVec;
use hdx_core::cochain::{
    coboundary, coboundary_matrix, cohomology_dim, expansion_constants, certify_gromov, systole, Cochain,
};
use hdx_core::f2::{min_weight_exhaustive, min_weight_mitm, SubspaceBasis};
use hdx_core::generators::{complete_complex, fixture, flag_complex, gaussian_binomial, SubspaceTable, DEFAULT_FIXTURES};
use hdx_core::local::{locally_minimize, thin_thick, triangle_counts};
use hdx_core::overlap::{geometric_overlap_2d, geometric_overlap_mc, PointConfig};
use hdx_core::spectral::{cheeger_exact, laplacian_spectrum, laplacian_zero_multiplicity, spectrum, AlonMilman, GraphView};
use hdx_core::{Caps, Rational, SimplicialComplex};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Faces of one dimension as vertex bitmasks, with facet degrees counted by containment.
struct Masks {
    faces: Vec<u32>,
    c: Vec<u64>,
    /// `C(d+1, i+1) |X(d)|`.
    den: u64,
}

fn masks(x: &SimplicialComplex, i: isize) -> Masks {
    let to_mask = |f: &[usize]| f.iter().fold(0u32, |m, &v| m | 1 << v);
    let faces: Vec<u32> = x.faces(i).iter().map(|f| to_mask(f)).collect();
    let facets: Vec<u32> = x.facets().iter().map(|f| to_mask(f)).collect();
    let c = faces.iter().map(|&f| facets.iter().filter(|&&g| f & !g == 0).count() as u64).collect();
    let d = x.dim() as u64;
    Masks { faces, c, den: binom(d + 1, (i + 1) as u64) * facets.len() as u64 }
}

/// `cof[j]` = bitmask of the `(i+1)`-faces containing the `j`-th `i`-face.
fn coface_masks(lo: &Masks, hi: &Masks) -> Vec<u64> {
    lo.faces
        .iter()
        .map(|&f| hi.faces.iter().enumerate().filter(|(_, &g)| f & !g == 0).fold(0u64, |m, (k, _)| m | 1 << k))
        .collect()
}

fn num(m: u64, c: &[u64]) -> u64 {
    (0..c.len()).filter(|&k| m >> k & 1 == 1).map(|k| c[k]).sum()
}

/// Gray-code walk over every subset of `n` items, calling `f(mask, δ-mask)`.
fn walk(n: usize, cof: &[u64], mut f: impl FnMut(u64, u64)) {
    let (mut a, mut d) = (0u64, 0u64);
    f(0, 0);
    for g in 1u64..1 << n {
        let j = g.trailing_zeros() as usize;
        a ^= 1 << j;
        d ^= cof[j];
        f(a, d);
    }
}

/// `(ε̃_i, μ_i)` from one pass over all of `C^i`: `‖[α]_Z‖` is the least norm with the same
/// coboundary.
fn brute_tilde_mu(x: &SimplicialComplex, i: isize) -> (Option<Rational>, Option<Rational>) {
    let lo = masks(x, i);
    let hi = masks(x, i + 1);
    let cof = coface_masks(&lo, &hi);
    let mut best: HashMap<u64, u64> = HashMap::new();
    walk(lo.faces.len(), &cof, |a, d| {
        let n = num(a, &lo.c);
        best.entry(d).and_modify(|b| *b = (*b).min(n)).or_insert(n);
    });
    let mut tilde: Option<Rational> = None;
    let mut mu: Option<Rational> = None;
    for (&d, &a) in &best {
        if d == 0 {
            continue;
        }
        let r = q((num(d, &hi.c) * lo.den) as i64, (a * hi.den) as i64);
        if tilde.as_ref().is_none_or(|t| &r < t) {
            tilde = Some(r.clone());
        }
        let inv = Rational::one() / r;
        if mu.as_ref().is_none_or(|m| &inv > m) {
            mu = Some(inv);
        }
    }
    (tilde, mu)
}

/// `dim H^i` by counting cocycles and coboundaries.
fn brute_cohomology(x: &SimplicialComplex, i: isize) -> usize {
    let lo = masks(x, i);
    let z = if i < x.dim() {
        let cof = coface_masks(&lo, &masks(x, i + 1));
        let mut count = 0u64;
        walk(lo.faces.len(), &cof, |_, d| count += (d == 0) as u64);
        count
    } else {
        1 << lo.faces.len()
    };
    let below = masks(x, i - 1);
    let cof = coface_masks(&below, &lo);
    let mut b = HashSet::new();
    walk(below.faces.len(), &cof, |_, d| {
        b.insert(d);
    });
    (z.trailing_zeros() - (b.len() as u64).trailing_zeros()) as usize
}

fn cochain(x: &SimplicialComplex, i: isize, mask: u64) -> Cochain {
    Cochain::from_support(x, i, BitVec::from_mask(x.count(i), mask)).unwrap()
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// 1 ------------------------------------------------------------------------------------------

fn random_pure_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let d = rng.gen_range(1..=3usize);
    let n = rng.gen_range(d + 1..=12usize);
    let m = rng.gen_range(1..=15);
    let facets: Vec<Vec<String>> = (0..m)
        .map(|_| {
            let mut f: Vec<usize> = rand::seq::index::sample(rng, n, d + 1).into_vec();
            f.sort_unstable();
            f.iter().map(|v| format!("v{v}")).collect()
        })
        .collect();
    SimplicialComplex::build_from_facets(&facets).unwrap()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut products = 0;
    for k in 0..200 {
        let x = random_pure_complex(&mut rng);
        for i in -1..x.dim() {
            let m = coboundary_matrix(&x, i).unwrap();
            // the matrix agrees with face containment
            let (lo, hi) = (masks(&x, i), masks(&x, i + 1));
            for (r, &g) in hi.faces.iter().enumerate() {
                for (c, &f) in lo.faces.iter().enumerate() {
                    ensure(m.get(r, c) == (f & !g == 0), || format!("complex {k}: δ_{i} entry ({r},{c})"))?;
                }
            }
            if i + 1 < x.dim() {
                let m2 = coboundary_matrix(&x, i + 1).unwrap();
                for r in 0..m2.nrows() {
                    for c in 0..m.ncols() {
                        let s = (0..m.nrows()).filter(|&t| m2.get(r, t) && m.get(t, c)).count();
                        ensure(s % 2 == 0, || format!("complex {k}: δ_{}δ_{i} ≠ 0", i + 1))?;
                    }
                }
                products += 1;
            }
        }
    }
    Ok(format!("200 random complexes, {products} products δ_(i+1)δ_i checked entrywise"))
}

// 2 ------------------------------------------------------------------------------------------

fn criterion_2() -> Outcome {
    let caps = Caps::default();
    let mut names: Vec<String> = ["complete_4_2", "complete_5_2", "rp2_6", "flag_2_3"].iter().map(|s| s.to_string()).collect();
    names.extend((3..=8).map(|k| format!("cycle_{k}")));
    let mut n = 0;
    for name in &names {
        let x = fixture(name).unwrap();
        for i in 0..x.dim() {
            let c = expansion_constants(&x, i, &caps).unwrap();
            let (tilde, mu) = brute_tilde_mu(&x, i);
            ensure(c.epsilon_tilde == tilde && c.mu == mu, || format!("{name} i={i}: library differs from enumeration"))?;
            match (&c.mu, &c.epsilon_tilde) {
                (Some(m), Some(t)) => ensure(m * t == Rational::one(), || format!("{name} i={i}: μ = {m}, ε̃ = {t}"))?,
                (None, None) => {}
                _ => return Err(format!("{name} i={i}: only one of μ, ε̃ defined")),
            }
            n += 1;
        }
    }
    Ok(format!("μ_i·ε̃_i = 1 exactly in {n} (complex, i) cases, both matching enumeration"))
}

// 3 ------------------------------------------------------------------------------------------

fn brute_cheeger(x: &SimplicialComplex) -> Rational {
    let n = x.num_vertices();
    let edges = masks(x, 1).faces;
    let mut h: Option<Rational> = None;
    for s in 1u32..(1 << n) - 1 {
        let size = s.count_ones() as i64;
        if 2 * size > n as i64 {
            continue;
        }
        let cut = edges.iter().filter(|&&e| (e & s).count_ones() == 1).count() as i64;
        let r = q(cut, size);
        if h.as_ref().is_none_or(|b| &r < b) {
            h = Some(r);
        }
    }
    h.unwrap()
}

fn criterion_3() -> Outcome {
    let caps = Caps::default();
    let mut seen = Vec::new();
    for name in DEFAULT_FIXTURES {
        let x = fixture(name).unwrap();
        if x.dim() != 1 || !x.is_graph_regular() || x.num_vertices() > 10 {
            continue;
        }
        let h = cheeger_exact(&GraphView::from_complex(&x)).unwrap().h;
        ensure(h == brute_cheeger(&x), || format!("{name}: cheeger_exact disagrees with subset enumeration"))?;
        let want = &h * q(x.num_vertices() as i64, x.count(1) as i64);
        let eps = expansion_constants(&x, 0, &caps).unwrap().epsilon.unwrap();
        ensure(eps == want, || format!("{name}: ε₀ = {eps}, h·|X(0)|/|X(1)| = {want}"))?;
        if *name == "k4" {
            ensure(eps == q(4, 3), || format!("ε₀(K₄) = {eps}"))?;
        }
        seen.push(*name);
    }
    ensure(seen.len() >= 8, || format!("only {} regular graph fixtures", seen.len()))?;
    Ok(format!("ε₀ = h·|X(0)|/|X(1)| on {} regular graphs ({}), ε₀(K₄) = 4/3", seen.len(), seen.join(", ")))
}

// 4 ------------------------------------------------------------------------------------------

fn criterion_4() -> Outcome {
    let caps = Caps::default();
    let mut n = 0;
    for name in DEFAULT_FIXTURES {
        let x = fixture(name).unwrap();
        for i in 0..x.dim() {
            let c = expansion_constants(&x, i, &caps).unwrap();
            let h = brute_cohomology(&x, i);
            ensure(cohomology_dim(&x, i).unwrap() == h && c.dim_h == h, || format!("{name} i={i}: dim H differs from counting"))?;
            let positive = c.epsilon.as_ref().is_some_and(|e| e.is_positive());
            ensure(positive == (h == 0), || format!("{name} i={i}: ε = {:?}, dim H = {h}", c.epsilon))?;
            n += 1;
        }
    }
    let rp = fixture("rp2_6").unwrap();
    let c = expansion_constants(&rp, 1, &caps).unwrap();
    ensure(c.epsilon == Some(Rational::zero()), || "ε₁(rp2_6) ≠ 0".into())?;
    ensure(c.epsilon_tilde.as_ref().is_some_and(|t| t.is_positive()), || "ε̃₁(rp2_6) not positive".into())?;
    Ok(format!("{n} (fixture, i) pairs; rp2_6: ε₁ = 0, ε̃₁ = {}", c.epsilon_tilde.unwrap()))
}

// 5 ------------------------------------------------------------------------------------------

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let eps = q(1, 10);
    for n in [5usize, 6] {
        let x = complete_complex(n, 2).unwrap();
        let (e, t) = (masks(&x, 1), masks(&x, 2));
        for trial in 0..1000 {
            let p = rng.gen_range(0.05..0.95);
            let amask = (0..e.faces.len()).filter(|_| rng.gen_bool(p)).fold(0u64, |m, k| m | 1 << k);
            let alpha = cochain(&x, 1, amask);
            let edges_in: Vec<u32> = (0..e.faces.len()).filter(|&k| amask >> k & 1 == 1).map(|k| e.faces[k]).collect();
            let mut tk = [0usize; 4];
            for &tri in &t.faces {
                tk[edges_in.iter().filter(|&&f| f & !tri == 0).count()] += 1;
            }
            let mut link_cut = 0;
            for v in 0..n as u32 {
                let av: u32 = edges_in.iter().filter(|&&f| f >> v & 1 == 1).fold(0, |m, &f| m | (f & !(1 << v)));
                link_cut += t.faces.iter().filter(|&&tri| tri >> v & 1 == 1 && ((tri & !(1 << v)) & av).count_ones() == 1).count();
            }
            let deg_sum: u64 = num(amask, &e.c);
            let cb = coboundary(&x, &alpha).unwrap().support_size();
            let tc = triangle_counts(&x, &alpha).unwrap();
            let tt = thin_thick(&x, &alpha, &eps).unwrap();
            let p = tc.profile;
            let ctx = || format!("Δ_{n} trial {trial}");
            ensure([p.t0, p.t1, p.t2, p.t3] == tk, || format!("{}: profile", ctx()))?;
            ensure(cb == tk[1] + tk[3] && tc.coboundary_size == cb, || format!("{}: |δα| = t1 + t3", ctx()))?;
            ensure(link_cut == 2 * tk[1] + 2 * tk[2] && tc.link_cut_sum == link_cut, || format!("{}: link cuts", ctx()))?;
            ensure((tk[1] + 2 * tk[2] + 3 * tk[3]) as u64 == deg_sum && tc.degree_sum == deg_sum, || format!("{}: degree sum", ctx()))?;
            ensure(tt.r + tt.s == 2 * edges_in.len(), || format!("{}: r + s", ctx()))?;
        }
    }
    Ok("four identities exact on 1000 cochains each on Δ_5 and Δ_6 (2-skeleta)".into())
}

// 6 ------------------------------------------------------------------------------------------

/// No correction supported on the star of a vertex lowers the weight there.
fn brute_locally_minimal(x: &SimplicialComplex, i: isize, amask: u64) -> bool {
    let top = masks(x, i);
    let low = masks(x, i - 1);
    for v in 0..x.num_vertices() as u32 {
        let star: Vec<usize> = (0..top.faces.len()).filter(|&k| top.faces[k] >> v & 1 == 1).collect();
        let below: Vec<u32> = low.faces.iter().copied().filter(|f| f >> v & 1 == 1).collect();
        let here: u64 = star.iter().filter(|&&k| amask >> k & 1 == 1).map(|&k| top.c[k]).sum();
        for g in 1u64..1 << below.len() {
            let after: u64 = star
                .iter()
                .filter(|&&k| {
                    let flips = (0..below.len()).filter(|&b| g >> b & 1 == 1 && below[b] & !top.faces[k] == 0).count();
                    (amask >> k & 1 == 1) != (flips % 2 == 1)
                })
                .map(|&k| top.c[k])
                .sum();
            if after < here {
                return false;
            }
        }
    }
    true
}

fn criterion_6() -> Outcome {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut total_steps = 0;
    for name in ["complete_5_2", "complete_4_2", "rp2_6"] {
        let x = fixture(name).unwrap();
        for i in [1isize, 2] {
            let lo = masks(&x, i - 1);
            let top = masks(&x, i);
            let cof = coface_masks(&lo, &top);
            let mut b = HashSet::new();
            walk(lo.faces.len(), &cof, |_, d| {
                b.insert(d);
            });
            for trial in 0..500 {
                let amask = (0..top.faces.len()).filter(|_| rng.gen_bool(0.5)).fold(0u64, |m, k| m | 1 << k);
                let alpha = cochain(&x, i, amask);
                let r = locally_minimize(&x, &alpha, &caps).unwrap();
                let out = r.alpha.support().low_mask();
                let ctx = || format!("{name} i={i} trial {trial}");
                ensure(brute_locally_minimal(&x, i, out), || format!("{}: not locally minimal", ctx()))?;
                ensure(num(out, &top.c) <= num(amask, &top.c), || format!("{}: norm increased", ctx()))?;
                ensure(b.contains(&(out ^ amask)), || format!("{}: α̃ − α ∉ B^i", ctx()))?;
                ensure(r.steps as u64 <= num(amask, &top.c), || format!("{}: {} steps", ctx(), r.steps))?;
                total_steps += r.steps;
            }
        }
    }
    Ok(format!("3000 cochains minimized ({total_steps} link corrections), all postconditions hold"))
}

// 7 ------------------------------------------------------------------------------------------

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, v: usize) -> usize {
        let mut r = v;
        while p[r] != r {
            r = p[r];
        }
        p[v] = r;
        r
    }
    let mut comps = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps
}

fn criterion_7() -> Outcome {
    let caps = Caps::default();
    let x = flag_complex(2, 3).unwrap();
    let s = spectrum(&GraphView::from_complex(&x), &caps).unwrap();
    let r2 = 2f64.sqrt();
    let want: Vec<f64> = [3.0].into_iter().chain([r2; 6]).chain([-r2; 6]).chain([-3.0]).collect();
    ensure(s.len() == 14, || format!("{} eigenvalues", s.len()))?;
    let dev = s.iter().zip(&want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(dev <= 1e-9, || format!("max deviation {dev:e}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..50 {
        let n = rng.gen_range(2..=16);
        let p = rng.gen_range(0.02..0.4);
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
        let g = GraphView::from_edges(n, &edges).unwrap();
        let z = laplacian_zero_multiplicity(&g, &caps).unwrap();
        ensure(z == components(n, &edges), || format!("graph {trial}: {z} zero eigenvalues, {} components", components(n, &edges)))?;
    }
    Ok(format!("flag_complex(2,3) spectrum within {dev:.1e}; Laplacian kernel = components on 50 graphs"))
}

// 8 ------------------------------------------------------------------------------------------

fn criterion_8() -> Outcome {
    let caps = Caps::default();
    let tol = 1e-9;
    let mut subsets = 0u64;
    let mut graphs = Vec::new();
    for name in DEFAULT_FIXTURES {
        let x = fixture(name).unwrap();
        if x.dim() != 1 || x.num_vertices() > 12 {
            continue;
        }
        let g = GraphView::from_complex(&x);
        let n = g.n();
        let edges = masks(&x, 1).faces;
        let lap = laplacian_spectrum(&g, &caps).unwrap();
        let connected = components(n, &g.edges()) == 1;
        let l1 = if connected { lap[1] } else { 0.0 };
        let h = brute_cheeger(&x);
        let hf = h.numer().to_string().parse::<f64>().unwrap() / h.denom().to_string().parse::<f64>().unwrap();
        ensure(hf >= l1 / 2.0 - tol, || format!("{name}: h = {hf} < λ₁/2 = {}", l1 / 2.0))?;
        let am = AlonMilman::new(&g, &caps).unwrap();
        ensure((am.lambda1() - l1).abs() <= tol, || format!("{name}: λ₁ mismatch"))?;
        let k = (0..n).map(|v| g.degree(v)).collect::<Vec<_>>();
        let regular = k.iter().all(|&d| d == k[0]);
        for w in 1u32..(1 << n) - 1 {
            let size = w.count_ones() as f64;
            let cut = edges.iter().filter(|&&e| (e & w).count_ones() == 1).count();
            let inside = edges.iter().filter(|&&e| e & !w == 0).count();
            ensure(cut as f64 >= size * (n as f64 - size) * l1 / n as f64 - tol, || format!("{name} W={w:b}: cut bound"))?;
            if regular {
                ensure(2 * inside == k[0] * w.count_ones() as usize - cut, || format!("{name} W={w:b}: 2E(W) identity"))?;
                ensure(inside as f64 <= 0.5 * (k[0] as f64 - (n as f64 - size) * l1 / n as f64) * size + tol, || format!("{name} W={w:b}: E(W) bound"))?;
            }
            let verts: Vec<usize> = (0..n).filter(|&v| w >> v & 1 == 1).collect();
            let r = am.check(&verts).unwrap();
            ensure(r.cut == cut && r.internal_edges == inside, || format!("{name} W={w:b}: library counts differ"))?;
            let lib_ok = r.cut_bound_ok && r.cheeger_bound_ok != Some(false) && r.internal_edge_identity_ok != Some(false) && r.internal_edge_bound_ok != Some(false);
            ensure(lib_ok, || format!("{name} W={w:b}: library reports a violation"))?;
            subsets += 1;
        }
        graphs.push(*name);
    }
    Ok(format!("{subsets} subsets over {} graph fixtures ({})", graphs.len(), graphs.join(", ")))
}

// 9 ------------------------------------------------------------------------------------------

/// Number of `k`-dimensional subspaces of `F_p^m`, by collecting spans of `k`-tuples.
fn brute_subspaces(p: u32, m: u32, k: u32) -> usize {
    let size = p.pow(m);
    let add = |a: u32, b: u32| -> u32 {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..m {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    };
    let scale = |a: u32, s: u32| (0..s).fold(0, |acc, _| add(acc, a));
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut tuple = vec![0u32; k as usize];
    loop {
        let mut span: Vec<u32> = vec![0];
        for &g in &tuple {
            let mut next = Vec::new();
            for &s in &span {
                for c in 0..p {
                    next.push(add(s, scale(g, c)));
                }
            }
            next.sort_unstable();
            next.dedup();
            span = next;
        }
        if span.len() == p.pow(k) as usize {
            seen.insert(span);
        }
        let mut j = 0;
        while j < tuple.len() {
            tuple[j] += 1;
            if tuple[j] < size {
                break;
            }
            tuple[j] = 0;
            j += 1;
        }
        if j == tuple.len() {
            break;
        }
    }
    seen.len()
}

fn criterion_9() -> Outcome {
    let x = flag_complex(2, 4).unwrap();
    ensure(x.num_vertices() == 65, || format!("{} vertices", x.num_vertices()))?;
    let mut profile: BTreeMap<(u32, usize), usize> = BTreeMap::new();
    for v in 0..65 {
        let dim: u32 = x.label(v)[..1].parse().unwrap();
        *profile.entry((dim, x.neighbors(v).len())).or_default() += 1;
    }
    let want: BTreeMap<(u32, usize), usize> = [((1, 14), 15), ((2, 6), 35), ((3, 14), 15)].into_iter().collect();
    ensure(profile == want, || format!("degree profile {profile:?}"))?;
    for (p, m) in [(2u32, 3u32), (3, 3), (2, 4)] {
        let t = SubspaceTable::new(p, m as usize).unwrap();
        ensure(t.counts_match_gaussian_binomials(), || format!("({p},{m}): table check"))?;
        for k in 1..m {
            let num: u64 = (0..k).map(|j| (p as u64).pow(m - j) - 1).product();
            let den: u64 = (0..k).map(|j| (p as u64).pow(k - j) - 1).product();
            let formula = num / den;
            let brute = brute_subspaces(p, m, k) as u64;
            ensure(t.count(k as usize) as u64 == formula && brute == formula && gaussian_binomial(m, k, p as u64) == formula, || {
                format!("({p},{m}) k={k}: table {}, enumeration {brute}, formula {formula}", t.count(k as usize))
            })?;
        }
    }
    Ok("flag_complex(2,4): 35 plane-vertices of degree 6, 15+15 of degree 14; subspace counts match".into())
}

// 10 -----------------------------------------------------------------------------------------

fn criterion_10() -> Outcome {
    let caps = Caps::default();
    let x = fixture("rp2_6").unwrap();
    ensure(cohomology_dim(&x, 1).unwrap() == 1, || "dim H¹ ≠ 1".into())?;
    let (v, e, t) = (masks(&x, 0), masks(&x, 1), masks(&x, 2));
    ensure(e.faces.len() == 15, || "15 edges expected".into())?;
    let mut b = HashSet::new();
    walk(v.faces.len(), &coface_masks(&v, &e), |_, d| {
        b.insert(d);
    });
    let mut best: Option<u64> = None;
    walk(15, &coface_masks(&e, &t), |a, d| {
        if d == 0 && !b.contains(&a) {
            let n = num(a, &e.c);
            best = Some(best.map_or(n, |m| m.min(n)));
        }
    });
    let oracle = q(best.unwrap() as i64, e.den as i64);
    let s = systole(&x, 1, &caps).unwrap().unwrap();
    ensure(s.norm == oracle, || format!("systole {} vs enumeration {oracle}", s.norm))?;
    let mu = Rational::from_integer(1000.into());
    for k in -10i64..=10 {
        let eta = &oracle + q(k, 1000);
        if !eta.is_positive() {
            continue;
        }
        let c = certify_gromov(&x, &mu, &eta, &caps).unwrap();
        ensure(c.condition2() == (eta <= oracle), || format!("η = {eta}: condition (2) = {}", c.condition2()))?;
    }
    Ok(format!("systole₁(rp2_6) = {oracle} (support {}), = enumeration over 2^15; condition (2) flips at η = systole", s.support_size))
}

// 11 -----------------------------------------------------------------------------------------

fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a >> d.trailing_zeros() & 1 == 0
}

fn criterion_11() -> Outcome {
    let caps = Caps::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut n_inst = 0;
    while n_inst < 100 {
        let n = rng.gen_range(20..=60usize);
        let k = rng.gen_range(1..=20usize);
        let vecs: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & ((1u64 << n) - 1)).collect();
        let bv: Vec<BitVec> = vecs.iter().map(|&m| BitVec::from_mask(n, m)).collect();
        let Ok(basis) = SubspaceBasis::new(n, bv) else { continue };
        let target: u64 = rng.gen::<u64>() & ((1u64 << n) - 1);
        let w: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        let (mut best, mut arg) = (u64::MAX, 0u64);
        for s in 0u64..1 << k {
            let v = (0..k).filter(|&j| s >> j & 1 == 1).fold(target, |acc, j| acc ^ vecs[j]);
            let nv = num(v, &w);
            if nv < best || (nv == best && lex_less(v, arg)) {
                best = nv;
                arg = v;
            }
        }
        let t = BitVec::from_mask(n, target);
        let m = min_weight_mitm(&t, &basis, &w, &caps).unwrap();
        let g = min_weight_exhaustive(&t, &basis, &w, caps.exhaustive_log2).unwrap();
        ensure(m.norm == best && m.argmin.low_mask() == arg, || format!("instance {n_inst}: split search {} vs {best}", m.norm))?;
        ensure(g.norm == best && g.argmin.low_mask() == arg, || format!("instance {n_inst}: Gray search {} vs {best}", g.norm))?;
        n_inst += 1;
    }
    Ok("100 cosets with dim B ≤ 20: split search = plain enumeration (norm and minimizer)".into())
}

// 12 -----------------------------------------------------------------------------------------

type Pt = (Rational, Rational);

fn orient(a: &Pt, b: &Pt, c: &Pt) -> Rational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

/// Closed triangle containment by sign agreement, with collinear triples handled as segments.
fn contains(t: [&Pt; 3], z: &Pt) -> bool {
    let on_seg = |p: &Pt, r: &Pt| {
        orient(p, r, z).is_zero()
            && z.0 >= p.0.clone().min(r.0.clone())
            && z.0 <= p.0.clone().max(r.0.clone())
            && z.1 >= p.1.clone().min(r.1.clone())
            && z.1 <= p.1.clone().max(r.1.clone())
    };
    if orient(t[0], t[1], t[2]).is_zero() {
        return on_seg(t[0], t[1]) || on_seg(t[1], t[2]) || on_seg(t[0], t[2]);
    }
    let s = [orient(t[0], t[1], z), orient(t[1], t[2], z), orient(t[2], t[0], z)];
    s.iter().all(|v| !v.is_negative()) || s.iter().all(|v| !v.is_positive())
}

/// Integer orientation on a grid scaled by `scale`.
fn contains_int(t: [(i64, i64); 3], z: (i64, i64)) -> bool {
    let o = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    if o(t[0], t[1], t[2]) == 0 {
        let seg = |p: (i64, i64), r: (i64, i64)| {
            o(p, r, z) == 0 && z.0 >= p.0.min(r.0) && z.0 <= p.0.max(r.0) && z.1 >= p.1.min(r.1) && z.1 <= p.1.max(r.1)
        };
        return seg(t[0], t[1]) || seg(t[1], t[2]) || seg(t[0], t[2]);
    }
    let s = [o(t[0], t[1], z), o(t[1], t[2], z), o(t[2], t[0], z)];
    s.iter().all(|&v| v >= 0) || s.iter().all(|&v| v <= 0)
}

fn oracle_depth(pts: &[(i64, i64)], tris: &[[usize; 3]]) -> usize {
    let rp: Vec<Pt> = pts.iter().map(|&(a, b)| (q(a, 1), q(b, 1))).collect();
    let mut cand: Vec<Pt> = rp.clone();
    let mut segs: Vec<(usize, usize)> = tris.iter().flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]).collect();
    segs.sort_unstable();
    segs.dedup();
    for (j, &(a, b)) in segs.iter().enumerate() {
        for &(c, d) in &segs[j + 1..] {
            let (p, r, s, u) = (&rp[a], &rp[b], &rp[c], &rp[d]);
            let den = (&r.0 - &p.0) * (&u.1 - &s.1) - (&r.1 - &p.1) * (&u.0 - &s.0);
            if den.is_zero() {
                continue;
            }
            let tn = (&s.0 - &p.0) * (&u.1 - &s.1) - (&s.1 - &p.1) * (&u.0 - &s.0);
            let t = tn / &den;
            if t.is_negative() || t > Rational::one() {
                continue;
            }
            cand.push((&p.0 + &t * (&r.0 - &p.0), &p.1 + &t * (&r.1 - &p.1)));
        }
    }
    let mut best = cand.iter().map(|z| tris.iter().filter(|t| contains([&rp[t[0]], &rp[t[1]], &rp[t[2]]], z)).count()).max().unwrap();
    // 400 × 400 cells over [0, 8]²
    let scale = 50i64;
    let sp: Vec<(i64, i64)> = pts.iter().map(|&(a, b)| (a * scale, b * scale)).collect();
    for gx in 0..=8 * scale {
        for gy in 0..=8 * scale {
            let d = tris.iter().filter(|t| contains_int([sp[t[0]], sp[t[1]], sp[t[2]]], (gx, gy))).count();
            best = best.max(d);
        }
    }
    best
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for inst in 0..50 {
        let n = rng.gen_range(5..=7usize);
        let pts: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(0..=8), rng.gen_range(0..=8))).collect();
        let all = complete_complex(n, 2).unwrap();
        let mut tris: Vec<[usize; 3]> = all.facets().iter().filter(|_| rng.gen_bool(0.6)).map(|f| [f[0], f[1], f[2]]).collect();
        if tris.is_empty() {
            tris.push([0, 1, 2]);
        }
        let facets: Vec<Vec<String>> = tris.iter().map(|t| t.iter().map(|v| v.to_string()).collect()).collect();
        let x = SimplicialComplex::build_from_facets(&facets).unwrap();
        let mut cfg = PointConfig::default();
        for (v, &(a, b)) in pts.iter().enumerate() {
            cfg.points.insert(v.to_string(), vec![q(a, 1), q(b, 1)]);
        }
        // the complex relabels vertices, so the oracle works from the complex's own facets
        let idx: Vec<(i64, i64)> = (0..x.num_vertices()).map(|v| pts[x.label(v).parse::<usize>().unwrap()]).collect();
        let ftris: Vec<[usize; 3]> = x.facets().iter().map(|f| [f[0], f[1], f[2]]).collect();
        let exact = geometric_overlap_2d(&x, &cfg).unwrap();
        let oracle = oracle_depth(&idx, &ftris);
        ensure(exact.max_depth == oracle, || format!("instance {inst}: exact {} vs oracle {oracle}", exact.max_depth))?;
        let mc = geometric_overlap_mc(&x, &cfg, 100, inst).unwrap();
        ensure(mc.best.max_depth <= exact.max_depth, || format!("instance {inst}: sampled {} > exact", mc.best.max_depth))?;
    }
    let quad = complete_complex(4, 2).unwrap();
    let mut cfg = PointConfig::default();
    for (v, (a, b)) in [(0, 0), (1, 0), (1, 1), (0, 1)].into_iter().enumerate() {
        cfg.points.insert(v.to_string(), vec![q(a, 1), q(b, 1)]);
    }
    let r = geometric_overlap_2d(&quad, &cfg).unwrap();
    ensure(r.fraction == Rational::one(), || format!("quadrilateral fraction {}", r.fraction))?;
    Ok("50 planar instances equal the grid+candidate oracle; sampled ≤ exact; unit-square Δ_4 fraction 1".into())
}

// 13 -----------------------------------------------------------------------------------------

fn criterion_13() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_hdx")).args(["verify", "--seed", "7"]).output().expect("run hdx");
        (out.status.code(), out.stdout)
    };
    let (c1, a) = run();
    let (c2, b) = run();
    ensure(c1 == Some(0) && c2 == Some(0), || format!("exit codes {c1:?}, {c2:?}"))?;
    ensure(a == b, || "reports differ".into())?;
    ensure(!a.is_empty(), || "empty report".into())?;
    Ok(format!("two `hdx verify --seed 7` runs: exit 0, identical {} byte reports", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("coboundary squares to zero", criterion_1),
        ("μ_i = 1/ε̃_i", criterion_2),
        ("ε₀ = normalized Cheeger constant", criterion_3),
        ("ε_i > 0 ⟺ H^i = 0", criterion_4),
        ("triangle identities and r + s = 2|α|", criterion_5),
        ("local minimization", criterion_6),
        ("spectra", criterion_7),
        ("Alon–Milman", criterion_8),
        ("flag complex structure", criterion_9),
        ("systole and certificate", criterion_10),
        ("coset search oracle", criterion_11),
        ("geometric overlap", criterion_12),
        ("verify determinism", criterion_13),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name} ({secs:.2}s): {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2}s): {msg}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
