//! Cochains over F₂: coboundary maps, cohomology, norms, expansion constants and systoles.
//!
//! An `i`-cochain is a subset of `X(i)`; its norm is the sum of the face weights `wt(σ)`. All
//! weights of one dimension share the denominator `C(d+1, i+1) |X(d)|`, so the searches below run
//! on the integer numerators `c(σ)` and convert to [`Rational`] only at the end.

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::bits::BitVec;
use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::f2::{self, F2Matrix, SubspaceBasis};
use crate::rational::{ratio, Rational};
use crate::spectral::SpectralSummary;

/// An element of `C^i(X, F₂)`, stored as the indicator of its support in `X(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    dim: isize,
    support: BitVec,
}

impl Cochain {
    pub fn zero(x: &SimplicialComplex, i: isize) -> Self {
        Self { dim: i, support: BitVec::zeros(x.count(i)) }
    }

    pub fn from_support(x: &SimplicialComplex, i: isize, support: BitVec) -> Result<Self> {
        x.check_dim(i)?;
        if support.len() != x.count(i) {
            return Err(Error::LengthMismatch { expected: x.count(i), got: support.len() });
        }
        Ok(Self { dim: i, support })
    }

    /// Cochain supported on the given face indices of `X(i)`.
    pub fn from_indices(x: &SimplicialComplex, i: isize, faces: impl IntoIterator<Item = usize>) -> Result<Self> {
        x.check_dim(i)?;
        let n = x.count(i);
        let mut support = BitVec::zeros(n);
        for f in faces {
            if f >= n {
                return Err(Error::LengthMismatch { expected: n, got: f + 1 });
            }
            support.set(f, true);
        }
        Ok(Self { dim: i, support })
    }

    /// Cochain supported on faces given by vertex labels; all faces must have `i + 1` vertices.
    pub fn from_labels<S: AsRef<str>>(x: &SimplicialComplex, i: isize, faces: &[Vec<S>]) -> Result<Self> {
        let mut idx = Vec::with_capacity(faces.len());
        for f in faces {
            if f.len() as isize != i + 1 {
                return Err(Error::InvalidFacet(format!("face with {} vertices in a {i}-cochain", f.len())));
            }
            let face = x.face_from_labels(f)?;
            idx.push(x.face_index(&face).expect("resolved face"));
        }
        Self::from_indices(x, i, idx)
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn support(&self) -> &BitVec {
        &self.support
    }

    pub fn support_size(&self) -> usize {
        self.support.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_zero()
    }

    pub fn faces(&self) -> impl Iterator<Item = usize> + '_ {
        self.support.iter_ones()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.dim, other.dim, "adding cochains of different dimension");
        Cochain { dim: self.dim, support: self.support.xor(&other.support) }
    }

    /// `Σ_{σ ∈ α} c(σ)`, the numerator of `‖α‖` over [`SimplicialComplex::weight_denominator`].
    pub fn weight_numerator(&self, x: &SimplicialComplex) -> u64 {
        self.support.weighted_count(x.facet_degrees(self.dim))
    }

    /// `‖α‖ = Σ_{σ ∈ α} wt(σ)`.
    pub fn norm(&self, x: &SimplicialComplex) -> Rational {
        ratio(self.weight_numerator(x), x.weight_denominator(self.dim))
    }

    /// Supporting faces as label lists.
    pub fn face_labels(&self, x: &SimplicialComplex) -> Vec<Vec<String>> {
        self.faces().map(|j| x.face_labels(&x.faces(self.dim)[j])).collect()
    }
}

fn check_coboundary_dim(x: &SimplicialComplex, i: isize) -> Result<()> {
    if i < -1 || i > x.dim() - 1 {
        return Err(Error::DimensionOutOfRange { dim: i, lo: -1, hi: x.dim() - 1 });
    }
    Ok(())
}

/// The matrix of `δ_i : C^i → C^{i+1}`; rows indexed by `X(i+1)`, columns by `X(i)`.
pub fn coboundary_matrix(x: &SimplicialComplex, i: isize) -> Result<F2Matrix> {
    check_coboundary_dim(x, i)?;
    let ncols = x.count(i);
    let rows = (0..x.count(i + 1)).map(|t| BitVec::from_indices(ncols, x.boundary(i + 1, t).iter().copied())).collect();
    F2Matrix::from_rows(ncols, rows)
}

/// `δ(α)(F) = Σ_{G ⊂ F, |G| = |F| - 1} α(G)`.
pub fn coboundary(x: &SimplicialComplex, alpha: &Cochain) -> Result<Cochain> {
    let i = alpha.dim;
    check_coboundary_dim(x, i)?;
    let mut out = BitVec::zeros(x.count(i + 1));
    for s in alpha.faces() {
        for &t in x.cofaces(i, s) {
            out.toggle(t);
        }
    }
    Ok(Cochain { dim: i + 1, support: out })
}

/// `B^i = Im δ_{i-1}` (zero for `i = -1`).
pub fn coboundary_space(x: &SimplicialComplex, i: isize) -> Result<SubspaceBasis> {
    x.check_dim(i)?;
    if i == -1 {
        return Ok(SubspaceBasis::empty(1));
    }
    Ok(f2::reduce(&coboundary_matrix(x, i - 1)?).image_basis)
}

/// `Z^i = Ker δ_i` (all of `C^d` for `i = d`).
pub fn cocycle_space(x: &SimplicialComplex, i: isize) -> Result<SubspaceBasis> {
    x.check_dim(i)?;
    let n = x.count(i);
    if i == x.dim() {
        return SubspaceBasis::new(n, (0..n).map(|j| BitVec::from_indices(n, [j])).collect());
    }
    Ok(f2::reduce(&coboundary_matrix(x, i)?).kernel_basis)
}

/// `dim H^i = dim Z^i − dim B^i`.
pub fn cohomology_dim(x: &SimplicialComplex, i: isize) -> Result<usize> {
    Ok(cocycle_space(x, i)?.dim() - coboundary_space(x, i)?.dim())
}

/// The norms attached to a cochain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Norms {
    /// `|α|`
    pub support_size: usize,
    /// `‖α‖`
    pub norm: Rational,
    /// `‖[α]‖`, minimum over `α + B^i`.
    pub class_norm: Rational,
    /// `‖{α}‖`, minimum over `α + Z^i`.
    pub cocycle_coset_norm: Rational,
}

/// Minimum of `‖·‖` over `α + span(basis)`, with the minimiser.
pub fn coset_minimum(x: &SimplicialComplex, alpha: &Cochain, basis: &SubspaceBasis, caps: &Caps) -> Result<(Rational, Cochain, BitVec)> {
    let i = alpha.dim;
    let m = f2::min_weight_in_coset_int(&alpha.support, basis, x.facet_degrees(i), caps)?;
    Ok((ratio(m.norm, x.weight_denominator(i)), Cochain { dim: i, support: m.argmin }, m.coefficients))
}

pub fn norms(x: &SimplicialComplex, alpha: &Cochain, caps: &Caps) -> Result<Norms> {
    let i = alpha.dim;
    let b = coboundary_space(x, i)?;
    let z = cocycle_space(x, i)?;
    Ok(Norms {
        support_size: alpha.support_size(),
        norm: alpha.norm(x),
        class_norm: coset_minimum(x, alpha, &b, caps)?.0,
        cocycle_coset_norm: coset_minimum(x, alpha, &z, caps)?.0,
    })
}

/// True when `α` has minimal norm in its class modulo `B^i`.
pub fn is_minimal(x: &SimplicialComplex, alpha: &Cochain, caps: &Caps) -> Result<bool> {
    let b = coboundary_space(x, alpha.dim)?;
    let m = f2::min_weight_in_coset_int(&alpha.support, &b, x.facet_degrees(alpha.dim), caps)?;
    Ok(m.norm == alpha.weight_numerator(x))
}

/// The coboundary/cocycle expansion constants and cofilling constant in one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionConstants {
    pub i: isize,
    /// `ε_i`; `None` when `C^i = B^i`. Zero whenever `H^i ≠ 0`.
    pub epsilon: Option<Rational>,
    /// `ε̃_i`; `None` when `C^i = Z^i`.
    pub epsilon_tilde: Option<Rational>,
    /// `μ_i`; `None` when `B^{i+1} = 0`.
    pub mu: Option<Rational>,
    pub dim_h: usize,
}

impl ExpansionConstants {
    /// `ε_i` is zero because `H^i ≠ 0`, not because of a small ratio on a non-cocycle.
    pub fn epsilon_zero_by_convention(&self) -> bool {
        self.dim_h > 0
    }
}

fn check_enumeration(n: usize, caps: &Caps) -> Result<()> {
    if n as u32 > caps.enumeration_log2 || n >= 63 {
        return Err(Error::SearchSpaceTooLarge { log2: n as u32, cap: caps.enumeration_log2 });
    }
    Ok(())
}

/// Smallest `a/b` over pairs with `b > 0`; ties keep the first.
fn min_ratio(pairs: impl Iterator<Item = (u64, u64)>) -> Option<(u64, u64)> {
    pairs.fold(None, |best, (a, b)| match best {
        Some((ba, bb)) if (a as u128) * (bb as u128) >= (ba as u128) * (b as u128) => Some((ba, bb)),
        _ => Some((a, b)),
    })
}

/// Computes `ε_i`, `ε̃_i` and `μ_i` exactly.
///
/// `ε_i` and `ε̃_i` come from a single Gray-code pass over all `2^|X(i)|` cochains that records,
/// per class modulo `B^i` and modulo `Z^i`, the smallest norm and the (class-invariant) norm of the
/// coboundary. `μ_i` is computed separately by enumerating `β ∈ B^{i+1}` and searching the coset
/// of solutions of `δα = β`.
pub fn expansion_constants(x: &SimplicialComplex, i: isize, caps: &Caps) -> Result<ExpansionConstants> {
    if i < 0 || i > x.dim() - 1 {
        return Err(Error::DimensionOutOfRange { dim: i, lo: 0, hi: x.dim() - 1 });
    }
    let n = x.count(i);
    check_enumeration(n, caps)?;
    let b = coboundary_space(x, i)?;
    let z = cocycle_space(x, i)?;
    let dim_h = z.dim() - b.dim();
    let qb = b.quotient_map().column_masks().expect("codimension below 64");
    let qz = z.quotient_map().column_masks().expect("codimension below 64");
    let w = x.facet_degrees(i);
    let wu = x.facet_degrees(i + 1);

    let mut min_b = vec![u64::MAX; 1usize << (n - b.dim())];
    let mut delta_b = vec![0u64; min_b.len()];
    let mut min_z = vec![u64::MAX; 1usize << (n - z.dim())];
    let mut delta_z = vec![0u64; min_z.len()];

    let mut delta = BitVec::zeros(x.count(i + 1));
    let (mut norm, mut dnorm, mut sb, mut sz) = (0u64, 0u64, 0u64, 0u64);
    let mut record = |norm: u64, dnorm: u64, sb: u64, sz: u64| {
        let (sb, sz) = (sb as usize, sz as usize);
        if norm < min_b[sb] {
            min_b[sb] = norm;
        }
        delta_b[sb] = dnorm;
        if norm < min_z[sz] {
            min_z[sz] = norm;
        }
        delta_z[sz] = dnorm;
    };
    record(0, 0, 0, 0);
    for g in 1u64..(1u64 << n) {
        let j = g.trailing_zeros() as usize;
        // g's Gray code flips coordinate j; the new value of that bit is bit j of gray(g)
        let on = ((g ^ (g >> 1)) >> j) & 1 == 1;
        if on {
            norm += w[j];
        } else {
            norm -= w[j];
        }
        for &t in x.cofaces(i, j) {
            if delta.get(t) {
                dnorm -= wu[t];
            } else {
                dnorm += wu[t];
            }
            delta.toggle(t);
        }
        sb ^= qb[j];
        sz ^= qz[j];
        record(norm, dnorm, sb, sz);
    }

    let di = x.weight_denominator(i) as u128;
    let du = x.weight_denominator(i + 1) as u128;
    // ‖δα‖ / ‖[α]‖ = (a / du) / (m / di)
    let to_rational = |(a, m): (u64, u64)| {
        Rational::new(BigInt::from(a as u128 * di), BigInt::from(m as u128 * du))
    };
    let epsilon = min_ratio((1..min_b.len()).map(|c| (delta_b[c], min_b[c]))).map(to_rational);
    let epsilon_tilde = min_ratio((1..min_z.len()).map(|c| (delta_z[c], min_z[c]))).map(to_rational);
    let mu = cofilling_constant(x, i, &z, caps)?;
    Ok(ExpansionConstants { i, epsilon, epsilon_tilde, mu, dim_h })
}

/// `μ_i = max_{0 ≠ β ∈ B^{i+1}} min{‖α‖ : δα = β} / ‖β‖`.
fn cofilling_constant(x: &SimplicialComplex, i: isize, z: &SubspaceBasis, caps: &Caps) -> Result<Option<Rational>> {
    let red = f2::reduce(&coboundary_matrix(x, i)?);
    let r = red.rank;
    if r == 0 {
        return Ok(None);
    }
    check_enumeration(r, caps)?;
    let n = x.count(i);
    let w = x.facet_degrees(i);
    let wu = x.facet_degrees(i + 1);
    // best = (min ‖α‖ numerator, ‖β‖ numerator) maximising the ratio
    let mut best: Option<(u64, u64)> = None;
    let mut alpha = BitVec::zeros(n);
    let mut beta = BitVec::zeros(x.count(i + 1));
    for g in 1u64..(1u64 << r) {
        let j = g.trailing_zeros() as usize;
        alpha.toggle(red.pivot_columns[j]);
        beta.xor_assign(&red.image_basis.vectors()[j]);
        let filling = f2::min_weight_exhaustive(&alpha, z, w, caps.exhaustive_log2)?.norm;
        let bn = beta.weighted_count(wu);
        best = match best {
            Some((fa, fb)) if (filling as u128) * (fb as u128) <= (fa as u128) * (bn as u128) => Some((fa, fb)),
            _ => Some((filling, bn)),
        };
    }
    let (fa, fb) = best.expect("r > 0");
    let di = x.weight_denominator(i) as u128;
    let du = x.weight_denominator(i + 1) as u128;
    Ok(Some(Rational::new(BigInt::from(fa as u128 * du), BigInt::from(fb as u128 * di))))
}

/// Minimum-norm nontrivial cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Systole {
    pub norm: Rational,
    pub support_size: usize,
    pub witness: Cochain,
}

/// `min { ‖α‖ : α ∈ Z^i ∖ B^i }` with the lexicographically smallest minimiser; `None` when
/// `H^i = 0`.
pub fn systole(x: &SimplicialComplex, i: isize, caps: &Caps) -> Result<Option<Systole>> {
    if i < 0 || i > x.dim() - 1 {
        return Err(Error::DimensionOutOfRange { dim: i, lo: 0, hi: x.dim() - 1 });
    }
    let b = coboundary_space(x, i)?;
    let z = cocycle_space(x, i)?;
    if z.dim() == b.dim() {
        return Ok(None);
    }
    check_enumeration(z.dim(), caps)?;
    let q = b.quotient_map();
    let syn: Vec<BitVec> = z.vectors().iter().map(|v| q.syndrome(v)).collect();
    let w = x.facet_degrees(i);
    let mut cur = BitVec::zeros(x.count(i));
    let mut s = BitVec::zeros(q.codim());
    let mut norm = 0u64;
    let mut best: Option<(u64, BitVec)> = None;
    for g in 1u64..(1u64 << z.dim()) {
        let j = g.trailing_zeros() as usize;
        for k in z.vectors()[j].iter_ones() {
            if cur.get(k) {
                norm -= w[k];
            } else {
                norm += w[k];
            }
        }
        cur.xor_assign(&z.vectors()[j]);
        s.xor_assign(&syn[j]);
        if s.is_zero() {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bn, bv)) => norm < *bn || (norm == *bn && cur.lex_cmp(bv) == Ordering::Less),
        };
        if better {
            best = Some((norm, cur.clone()));
        }
    }
    let (n, v) = best.expect("H^i ≠ 0 has a nontrivial class");
    Ok(Some(Systole {
        norm: ratio(n, x.weight_denominator(i)),
        support_size: v.count_ones(),
        witness: Cochain { dim: i, support: v },
    }))
}

/// Verdict on the two hypotheses of the systolic overlap theorem in one dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimCertificate {
    pub i: isize,
    pub mu_i: Option<Rational>,
    /// `μ_i ≤ μ` (vacuous when `B^{i+1} = 0`).
    pub condition1: bool,
    pub systole: Option<Systole>,
    /// Every nontrivial cocycle has norm `≥ η` (vacuous when `H^i = 0`).
    pub condition2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GromovCertificate {
    pub mu: Rational,
    pub eta: Rational,
    pub dims: Vec<DimCertificate>,
}

impl GromovCertificate {
    pub fn condition1(&self) -> bool {
        self.dims.iter().all(|d| d.condition1)
    }

    pub fn condition2(&self) -> bool {
        self.dims.iter().all(|d| d.condition2)
    }

    pub fn passes(&self) -> bool {
        self.condition1() && self.condition2()
    }
}

/// Checks `μ_i(X) ≤ μ` and `‖α‖ ≥ η` for all nontrivial cocycles, for every `0 ≤ i ≤ d-1`.
pub fn certify_gromov(x: &SimplicialComplex, mu: &Rational, eta: &Rational, caps: &Caps) -> Result<GromovCertificate> {
    use num_traits::Signed;
    if !mu.is_positive() || !eta.is_positive() {
        return Err(Error::BadParams("μ and η must be positive".into()));
    }
    let mut dims = Vec::new();
    for i in 0..x.dim() {
        let c = expansion_constants(x, i, caps)?;
        let sys = systole(x, i, caps)?;
        dims.push(DimCertificate {
            i,
            condition1: c.mu.as_ref().is_none_or(|m| m <= mu),
            condition2: sys.as_ref().is_none_or(|s| &s.norm >= eta),
            mu_i: c.mu,
            systole: sys,
        });
    }
    Ok(GromovCertificate { mu: mu.clone(), eta: eta.clone(), dims })
}

/// Everything computed for one complex.
#[derive(Debug, Clone)]
pub struct ExpansionReport {
    pub dim: isize,
    pub f_vector: Vec<usize>,
    pub constants: Vec<ExpansionConstants>,
    pub systoles: Vec<Option<Systole>>,
    /// `dim H^i` for `0 ≤ i ≤ d`.
    pub cohomology: Vec<usize>,
    pub spectral: Option<SpectralSummary>,
}

/// Expansion report for the requested dimensions (all of `0..d` when `dims` is `None`).
pub fn expansion_report(x: &SimplicialComplex, dims: Option<&[isize]>, caps: &Caps) -> Result<ExpansionReport> {
    let all: Vec<isize> = (0..x.dim()).collect();
    let dims = dims.unwrap_or(&all);
    let mut constants = Vec::new();
    let mut systoles = Vec::new();
    for &i in dims {
        constants.push(expansion_constants(x, i, caps)?);
        systoles.push(systole(x, i, caps)?);
    }
    let cohomology = (0..=x.dim()).map(|i| cohomology_dim(x, i)).collect::<Result<_>>()?;
    let spectral = if x.dim() >= 1 && x.num_vertices() <= caps.spectrum_vertices {
        Some(SpectralSummary::of_complex(x, caps)?)
    } else {
        None
    };
    Ok(ExpansionReport { dim: x.dim(), f_vector: x.f_vector(), constants, systoles, cohomology, spectral })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn cx(facets: &[&[&str]]) -> SimplicialComplex {
        let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::build_from_facets(&f).unwrap()
    }

    fn k3() -> SimplicialComplex {
        cx(&[&["a", "b"], &["a", "c"], &["b", "c"]])
    }

    fn k4() -> SimplicialComplex {
        cx(&[&["a", "b"], &["a", "c"], &["a", "d"], &["b", "c"], &["b", "d"], &["c", "d"]])
    }

    fn delta4() -> SimplicialComplex {
        cx(&[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]])
    }

    #[test]
    fn coboundary_examples() {
        let x = k3();
        let a = Cochain::from_labels(&x, 0, &[vec!["a"]]).unwrap();
        let d = coboundary(&x, &a).unwrap();
        assert_eq!(d.face_labels(&x), vec![vec!["a", "b"], vec!["a", "c"]]);

        let y = delta4();
        let ab = Cochain::from_labels(&y, 1, &[vec!["a", "b"]]).unwrap();
        assert_eq!(coboundary(&y, &ab).unwrap().face_labels(&y), vec![vec!["a", "b", "c"], vec!["a", "b", "d"]]);
        assert!(coboundary(&y, &Cochain::zero(&y, 2)).is_err());
    }

    #[test]
    fn matrix_and_apply_agree_and_square_to_zero() {
        let y = delta4();
        for i in -1..=0 {
            let d0 = coboundary_matrix(&y, i).unwrap();
            let d1 = coboundary_matrix(&y, i + 1).unwrap();
            assert!(d1.mul(&d0).unwrap().is_zero());
        }
        let a = Cochain::from_labels(&y, 1, &[vec!["a", "b"], vec!["b", "d"]]).unwrap();
        let m = coboundary_matrix(&y, 1).unwrap();
        assert_eq!(&m.mul_vec(a.support()).unwrap(), coboundary(&y, &a).unwrap().support());
    }

    #[test]
    fn norm_examples() {
        let caps = Caps::default();
        let y = delta4();
        let ab = Cochain::from_labels(&y, 1, &[vec!["a", "b"]]).unwrap();
        let n = norms(&y, &ab, &caps).unwrap();
        assert_eq!(n.support_size, 1);
        assert_eq!(n.norm, ratio(1, 6));

        let x = k4();
        let abc = Cochain::from_labels(&x, 0, &[vec!["a"], vec!["b"], vec!["c"]]).unwrap();
        let n = norms(&x, &abc, &caps).unwrap();
        assert_eq!(n.norm, ratio(3, 4));
        assert_eq!(n.class_norm, ratio(1, 4));

        let t = k3();
        let e = Cochain::from_labels(&t, 1, &[vec!["a", "b"]]).unwrap();
        assert_eq!(norms(&t, &e, &caps).unwrap().cocycle_coset_norm, int(0));
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(cohomology_dim(&k4(), 0).unwrap(), 0);
        let two = cx(&[&["a", "b"], &["c", "d"]]);
        assert_eq!(cohomology_dim(&two, 0).unwrap(), 1);
        assert_eq!(cohomology_dim(&delta4(), 1).unwrap(), 0);
        assert_eq!(cohomology_dim(&delta4(), 2).unwrap(), 1);
    }

    #[test]
    fn k4_epsilon_zero() {
        let c = expansion_constants(&k4(), 0, &Caps::default()).unwrap();
        assert_eq!(c.epsilon, Some(ratio(4, 3)));
        assert_eq!(c.epsilon_tilde, Some(ratio(4, 3)));
        assert_eq!(c.mu, Some(ratio(3, 4)));
        assert_eq!(c.dim_h, 0);
    }

    #[test]
    fn disjoint_triangles_have_zero_epsilon() {
        let x = cx(&[&["a", "b"], &["b", "c"], &["a", "c"], &["d", "e"], &["e", "f"], &["d", "f"]]);
        let c = expansion_constants(&x, 0, &Caps::default()).unwrap();
        assert_eq!(c.epsilon, Some(int(0)));
        assert_eq!(c.dim_h, 1);
        assert!(c.epsilon_zero_by_convention());
        assert!(c.epsilon_tilde.unwrap() > int(0));
    }

    #[test]
    fn systole_absent_when_cohomology_vanishes() {
        assert!(systole(&delta4(), 1, &Caps::default()).unwrap().is_none());
        let c5 = cx(&[&["0", "1"], &["1", "2"], &["2", "3"], &["3", "4"], &["4", "0"]]);
        assert!(systole(&c5, 0, &Caps::default()).unwrap().is_none());
    }

    #[test]
    fn certificate_on_delta4() {
        let caps = Caps::default();
        let y = delta4();
        let mu = (0..2).filter_map(|i| expansion_constants(&y, i, &caps).unwrap().mu).max().unwrap();
        let cert = certify_gromov(&y, &mu, &ratio(1000, 1), &caps).unwrap();
        assert!(cert.passes());
        let tight = certify_gromov(&y, &(mu - ratio(1, 1000)), &ratio(1, 1), &caps).unwrap();
        assert!(!tight.condition1());
        assert!(tight.condition2());
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let caps = Caps { enumeration_log2: 5, ..Caps::default() };
        assert!(matches!(expansion_constants(&delta4(), 1, &caps), Err(Error::SearchSpaceTooLarge { .. })));
    }
}
