//! Linear algebra over F₂ and minimum-weight coset search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bits::BitVec;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense matrix over F₂ stored as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BitVec>,
}

impl F2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, rows: vec![BitVec::zeros(ncols); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch { expected: ncols, got: r.len() });
        }
        Ok(Self { nrows: rows.len(), ncols, rows })
    }

    /// Builds a matrix from 0/1 entries, row by row.
    pub fn from_dense(entries: &[Vec<u8>]) -> Result<Self> {
        let ncols = entries.first().map_or(0, Vec::len);
        let rows = entries
            .iter()
            .map(|r| BitVec::from_indices(r.len(), r.iter().enumerate().filter(|(_, x)| **x & 1 == 1).map(|(j, _)| j)))
            .collect();
        Self::from_rows(ncols, rows)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v)
    }

    pub fn column(&self, c: usize) -> BitVec {
        BitVec::from_indices(self.nrows, (0..self.nrows).filter(|&r| self.rows[r].get(c)))
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.ncols, self.nrows);
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.iter_ones() {
                t.rows[c].set(r, true);
            }
        }
        t
    }

    /// `A · x` for `x` of length `ncols`.
    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.ncols {
            return Err(Error::LengthMismatch { expected: self.ncols, got: x.len() });
        }
        Ok(BitVec::from_indices(self.nrows, (0..self.nrows).filter(|&r| self.rows[r].dot(x))))
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &F2Matrix) -> Result<F2Matrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::LengthMismatch { expected: self.ncols, got: rhs.nrows });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitVec::zeros(rhs.ncols);
                for k in row.iter_ones() {
                    acc.xor_assign(&rhs.rows[k]);
                }
                acc
            })
            .collect();
        Ok(F2Matrix { nrows: self.nrows, ncols: rhs.ncols, rows })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn rank(&self) -> usize {
        echelonize(&self.rows, self.ncols).rows.len()
    }
}

/// Reduced row echelon form of a list of vectors, with the combination of inputs behind each row.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<BitVec>,
    /// `pivots[r]` is the leading (lowest) index of `rows[r]`; strictly increasing.
    pub pivots: Vec<usize>,
    /// `combos[r]` selects the input vectors summing to `rows[r]`.
    pub combos: Vec<BitVec>,
}

/// Gauss–Jordan elimination with the lowest available column as pivot.
pub fn echelonize(vectors: &[BitVec], len: usize) -> Echelon {
    let k = vectors.len();
    let mut rows: Vec<BitVec> = vectors.to_vec();
    let mut combos: Vec<BitVec> = (0..k).map(|i| BitVec::from_indices(k, [i])).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..len {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else { continue };
        rows.swap(r, p);
        combos.swap(r, p);
        let (pr, pc) = (rows[r].clone(), combos[r].clone());
        for i in 0..rows.len() {
            if i != r && rows[i].get(c) {
                rows[i].xor_assign(&pr);
                combos[i].xor_assign(&pc);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    combos.truncate(r);
    Echelon { rows, pivots, combos }
}

impl Echelon {
    /// Reduces `v` so it vanishes on every pivot; returns the reduced vector and the combination
    /// of input vectors that was added.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let k = self.combos.first().map_or(0, BitVec::len);
        let mut out = v.clone();
        let mut combo = BitVec::zeros(k);
        for (r, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                out.xor_assign(&self.rows[r]);
                combo.xor_assign(&self.combos[r]);
            }
        }
        (out, combo)
    }
}

/// A linearly independent list of vectors spanning a subspace of F₂^ambient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<BitVec>,
}

impl SubspaceBasis {
    pub fn new(ambient: usize, vectors: Vec<BitVec>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::LengthMismatch { expected: ambient, got: v.len() });
        }
        if echelonize(&vectors, ambient).rows.len() != vectors.len() {
            return Err(Error::DependentVectors);
        }
        Ok(Self { ambient, vectors })
    }

    pub fn empty(ambient: usize) -> Self {
        Self { ambient, vectors: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[BitVec] {
        &self.vectors
    }

    pub fn echelon(&self) -> Echelon {
        echelonize(&self.vectors, self.ambient)
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.echelon().reduce(v).0.is_zero()
    }

    /// Sum of the basis vectors selected by `coefficients`.
    pub fn combine(&self, coefficients: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.ambient);
        for j in coefficients.iter_ones() {
            out.xor_assign(&self.vectors[j]);
        }
        out
    }

    /// A linear map whose kernel is exactly this subspace.
    pub fn quotient_map(&self) -> QuotientMap {
        QuotientMap::new(self)
    }
}

/// Syndrome map `F₂^ambient → F₂^(ambient - dim)` with kernel equal to a given subspace.
///
/// Built from the reduced echelon form: for every non-pivot coordinate `j` the syndrome bit is
/// `v_j + Σ_{r : row_r[j] = 1} v_{pivot_r}`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    /// Column `j` of the check matrix: the syndrome change caused by flipping coordinate `j`.
    columns: Vec<BitVec>,
    codim: usize,
}

impl QuotientMap {
    fn new(basis: &SubspaceBasis) -> Self {
        let e = basis.echelon();
        let n = basis.ambient;
        let mut is_pivot = vec![None; n];
        for (r, &p) in e.pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let free: Vec<usize> = (0..n).filter(|&j| is_pivot[j].is_none()).collect();
        let codim = free.len();
        let mut slot = vec![usize::MAX; n];
        for (s, &j) in free.iter().enumerate() {
            slot[j] = s;
        }
        let columns = (0..n)
            .map(|j| match is_pivot[j] {
                None => BitVec::from_indices(codim, [slot[j]]),
                Some(r) => BitVec::from_indices(codim, e.rows[r].iter_ones().filter(|&c| c != j).map(|c| slot[c])),
            })
            .collect();
        Self { columns, codim }
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn syndrome(&self, v: &BitVec) -> BitVec {
        let mut s = BitVec::zeros(self.codim);
        for j in v.iter_ones() {
            s.xor_assign(&self.columns[j]);
        }
        s
    }

    /// Columns packed into integers; `None` when the codimension exceeds 64.
    pub fn column_masks(&self) -> Option<Vec<u64>> {
        (self.codim <= 64).then(|| self.columns.iter().map(BitVec::low_mask).collect())
    }
}

/// Rank, kernel and image of a matrix.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub rank: usize,
    /// One vector per free column (length `ncols`).
    pub kernel_basis: SubspaceBasis,
    /// The pivot columns of the original matrix (length `nrows`).
    pub image_basis: SubspaceBasis,
    pub pivot_columns: Vec<usize>,
}

pub fn reduce(a: &F2Matrix) -> Reduction {
    let e = echelonize(&a.rows, a.ncols);
    let rank = e.rows.len();
    let mut pivot_row = vec![None; a.ncols];
    for (r, &p) in e.pivots.iter().enumerate() {
        pivot_row[p] = Some(r);
    }
    let kernel = (0..a.ncols)
        .filter(|&f| pivot_row[f].is_none())
        .map(|f| {
            let mut x = BitVec::zeros(a.ncols);
            x.set(f, true);
            for (r, &p) in e.pivots.iter().enumerate() {
                if e.rows[r].get(f) {
                    x.set(p, true);
                }
            }
            x
        })
        .collect();
    let image = e.pivots.iter().map(|&c| a.column(c)).collect();
    Reduction {
        rank,
        kernel_basis: SubspaceBasis { ambient: a.ncols, vectors: kernel },
        image_basis: SubspaceBasis { ambient: a.nrows, vectors: image },
        pivot_columns: e.pivots,
    }
}

/// Minimum of an integer-weighted coset search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMin {
    /// `Σ_{j : argmin_j = 1} w_j`.
    pub norm: u64,
    /// Lexicographically smallest minimiser.
    pub argmin: BitVec,
    /// `argmin = target + Σ_{j : coefficients_j = 1} basis_j`.
    pub coefficients: BitVec,
}

impl CosetMin {
    fn better_than(&self, other: &CosetMin) -> bool {
        self.norm.cmp(&other.norm).then_with(|| self.argmin.lex_cmp(&other.argmin)).is_lt()
    }
}

fn check_inputs(target: &BitVec, basis: &SubspaceBasis, weights: &[u64]) -> Result<()> {
    if target.len() != basis.ambient {
        return Err(Error::LengthMismatch { expected: basis.ambient, got: target.len() });
    }
    if weights.len() != basis.ambient {
        return Err(Error::LengthMismatch { expected: basis.ambient, got: weights.len() });
    }
    if weights.iter().any(|w| *w == 0) {
        return Err(Error::NonPositiveWeight);
    }
    Ok(())
}

#[inline]
fn flip_norm(cur: &BitVec, delta: &BitVec, weights: &[u64], norm: u64) -> u64 {
    let mut n = norm;
    for j in delta.iter_ones() {
        if cur.get(j) {
            n -= weights[j];
        } else {
            n += weights[j];
        }
    }
    n
}

/// Gray-code walk over `start + span(vectors)`; returns the best element and its Gray index.
fn gray_walk(start: BitVec, vectors: &[BitVec], weights: &[u64]) -> (u64, BitVec, u64) {
    let mut cur = start;
    let mut norm = cur.weighted_count(weights);
    let mut best = (norm, cur.clone(), 0u64);
    let total = 1u64 << vectors.len();
    for g in 1..total {
        let bit = g.trailing_zeros() as usize;
        norm = flip_norm(&cur, &vectors[bit], weights, norm);
        cur.xor_assign(&vectors[bit]);
        if norm < best.0 || (norm == best.0 && cur.lex_cmp(&best.1) == std::cmp::Ordering::Less) {
            best = (norm, cur.clone(), g ^ (g >> 1));
        }
    }
    best
}

/// Exact minimum over `target + span(basis)` by Gray-code enumeration of all `2^dim` elements.
///
/// The enumeration is split across threads by fixing the high-order coefficients.
pub fn min_weight_exhaustive(target: &BitVec, basis: &SubspaceBasis, weights: &[u64], cap_log2: u32) -> Result<CosetMin> {
    check_inputs(target, basis, weights)?;
    let k = basis.dim();
    if k as u32 > cap_log2 {
        return Err(Error::SearchSpaceTooLarge { log2: k as u32, cap: cap_log2 });
    }
    let high = if k > 16 { (k - 12).min(8) } else { 0 };
    let low = k - high;
    let (low_vecs, high_vecs) = basis.vectors.split_at(low);
    let results: Vec<CosetMin> = (0..1u64 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut start = target.clone();
            let mut coeffs = BitVec::zeros(k);
            for (b, v) in high_vecs.iter().enumerate() {
                if chunk >> b & 1 == 1 {
                    start.xor_assign(v);
                    coeffs.set(low + b, true);
                }
            }
            let (norm, argmin, gray) = gray_walk(start, low_vecs, weights);
            for b in 0..low {
                if gray >> b & 1 == 1 {
                    coeffs.set(b, true);
                }
            }
            CosetMin { norm, argmin, coefficients: coeffs }
        })
        .collect();
    Ok(results.into_iter().reduce(|a, b| if b.better_than(&a) { b } else { a }).expect("at least one chunk"))
}

/// Exact minimum over `target + span(basis)` by splitting the basis in two halves.
///
/// The basis is brought to reduced echelon form so that every coset element is determined by its
/// values on the pivot coordinates, and the pivot weights of each half give a lower bound on the
/// full weight. All half-sums of the second half are tabulated and sorted by that bound; for every
/// element of the first half the table is scanned until the bound exceeds the best norm found.
pub fn min_weight_mitm(target: &BitVec, basis: &SubspaceBasis, weights: &[u64], caps: &Caps) -> Result<CosetMin> {
    check_inputs(target, basis, weights)?;
    let k = basis.dim();
    if k as u32 > caps.mitm_log2 {
        return Err(Error::SearchSpaceTooLarge { log2: k as u32, cap: caps.mitm_log2 });
    }
    let e = basis.echelon();
    let (t0, t_combo) = e.reduce(target);
    let split = k / 2;
    let (a_rows, b_rows) = e.rows.split_at(split);
    let (a_piv, b_piv) = e.pivots.split_at(split);
    let kb = b_rows.len();

    // table of second-half sums: (pivot lower bound, vector, subset mask)
    let mut table: Vec<(u64, BitVec, u64)> = Vec::with_capacity(1 << kb);
    {
        let mut cur = BitVec::zeros(basis.ambient);
        let mut lb = 0u64;
        table.push((0, cur.clone(), 0));
        for g in 1u64..(1u64 << kb) {
            let bit = g.trailing_zeros() as usize;
            let p = b_piv[bit];
            if cur.get(p) {
                lb -= weights[p];
            } else {
                lb += weights[p];
            }
            cur.xor_assign(&b_rows[bit]);
            table.push((lb, cur.clone(), g ^ (g >> 1)));
        }
    }
    table.sort_by(|x, y| x.0.cmp(&y.0).then(x.2.cmp(&y.2)));

    let mut best: Option<(u64, BitVec, u64, u64)> = None; // (norm, vector, a mask, b mask)
    let mut u = t0.clone();
    let mut lb_a = 0u64;
    for g in 0u64..(1u64 << split) {
        if g > 0 {
            let bit = g.trailing_zeros() as usize;
            let p = a_piv[bit];
            if u.get(p) {
                lb_a -= weights[p];
            } else {
                lb_a += weights[p];
            }
            u.xor_assign(&a_rows[bit]);
        }
        let a_mask = g ^ (g >> 1);
        for (lb_b, s, b_mask) in &table {
            if let Some((bn, ..)) = &best {
                if lb_a + lb_b > *bn {
                    break;
                }
            }
            let v = u.xor(s);
            let n = v.weighted_count(weights);
            let improve = match &best {
                None => true,
                Some((bn, bv, ..)) => n < *bn || (n == *bn && v.lex_cmp(bv) == std::cmp::Ordering::Less),
            };
            if improve {
                best = Some((n, v, a_mask, *b_mask));
            }
        }
    }
    let (norm, argmin, a_mask, b_mask) = best.expect("coset is nonempty");
    let mut coefficients = t_combo;
    for r in 0..split {
        if a_mask >> r & 1 == 1 {
            coefficients.xor_assign(&e.combos[r]);
        }
    }
    for r in 0..kb {
        if b_mask >> r & 1 == 1 {
            coefficients.xor_assign(&e.combos[split + r]);
        }
    }
    Ok(CosetMin { norm, argmin, coefficients })
}

/// Exhaustive search up to the exhaustive cap, split-basis search above it, error beyond the
/// split-basis cap.
pub fn min_weight_in_coset_int(target: &BitVec, basis: &SubspaceBasis, weights: &[u64], caps: &Caps) -> Result<CosetMin> {
    if basis.dim() as u32 <= caps.exhaustive_log2 {
        min_weight_exhaustive(target, basis, weights, caps.exhaustive_log2)
    } else {
        min_weight_mitm(target, basis, weights, caps)
    }
}

/// Coset minimum with exact rational weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCosetMin {
    pub norm: Rational,
    pub argmin: BitVec,
    pub coefficients: BitVec,
}

/// `min { Σ_{j : v_j = 1} w_j : v ∈ target + span(B) }` with the lexicographically smallest
/// minimiser.
pub fn min_weight_in_coset(
    target: &BitVec,
    basis: &SubspaceBasis,
    weights: &[Rational],
    caps: &Caps,
) -> Result<RationalCosetMin> {
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::NonPositiveWeight);
    }
    let den = weights.iter().fold(BigInt::from(1), |acc, w| acc.lcm(w.denom()));
    let ints: Vec<BigInt> = weights.iter().map(|w| w.numer() * (&den / w.denom())).collect();
    let total: BigInt = ints.iter().sum();
    if total.to_u64().is_none() {
        return Err(Error::BadParams("weights too fine-grained for 64-bit exact search".into()));
    }
    let ints: Vec<u64> = ints.iter().map(|x| x.to_u64().expect("bounded by total")).collect();
    let m = min_weight_in_coset_int(target, basis, &ints, caps)?;
    let norm = Rational::new(BigInt::from(m.norm), den);
    debug_assert!(!norm.is_negative() || norm.is_zero());
    Ok(RationalCosetMin { norm, argmin: m.argmin, coefficients: m.coefficients })
}
