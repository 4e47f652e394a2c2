//! The finite fields GF(q) for q ∈ {2, 3, 4, 5, 7} and their subspace lattices.

use crate::error::{Error, Result};

pub const SUPPORTED_FIELDS: [u32; 5] = [2, 3, 4, 5, 7];

/// Elements are `0..q`. Prime fields use residues; in GF(4) the element `2` is a root `ω` of
/// `x² + x + 1` and `3 = ω + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    q: u8,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
}

const GF4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if !SUPPORTED_FIELDS.contains(&q) {
            return Err(Error::UnsupportedField(q));
        }
        let n = q as u8;
        let table = |f: &dyn Fn(u8, u8) -> u8| (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        let (add, mul) = if q == 4 {
            (table(&|a, b| a ^ b), table(&|a, b| GF4_MUL[a as usize][b as usize]))
        } else {
            (table(&|a, b| (a + b) % n), table(&|a, b| ((a as u32 * b as u32) % q) as u8))
        };
        Ok(Self { q: n, add, mul })
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no inverse");
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("multiplicative inverse")
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }
}

/// `[m choose k]_q`, the number of `k`-dimensional subspaces of `F_q^m`.
pub fn gaussian_binomial(m: u32, k: u32, q: u64) -> u64 {
    if k > m {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 0..k {
        num *= q.pow(m - j) - 1;
        den *= q.pow(j + 1) - 1;
    }
    num / den
}

/// A subspace of `F_q^m` given by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pub rows: Vec<Vec<u8>>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.iter().position(|&x| x != 0).expect("nonzero row")).collect()
    }

    /// Whether `v` lies in the span (uses the reduced echelon form).
    pub fn contains_vector(&self, f: &Field, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        for (row, p) in self.rows.iter().zip(self.pivots()) {
            let c = w[p];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, f: &Field, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains_vector(f, r))
    }

    /// Rows written as digit strings separated by `|`, e.g. `"100|012"`.
    pub fn label(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|d| char::from(b'0' + d)).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// All subspaces of `F_q^m`, grouped by dimension `0..=m`, each list in canonical order
/// (pivot columns, then entries, lexicographically).
#[derive(Debug, Clone)]
pub struct SubspaceTable {
    pub field: Field,
    pub m: usize,
    pub by_dim: Vec<Vec<Subspace>>,
}

impl SubspaceTable {
    pub fn new(q: u32, m: usize) -> Result<Self> {
        let field = Field::new(q)?;
        if !(1..=4).contains(&m) {
            return Err(Error::BadParams(format!("ambient dimension {m} outside 1..=4")));
        }
        let by_dim = (0..=m).map(|k| enumerate_rref(&field, m, k)).collect();
        Ok(Self { field, m, by_dim })
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn count(&self, k: usize) -> usize {
        self.by_dim[k].len()
    }

    /// Whether every count matches the Gaussian binomial.
    pub fn counts_match_gaussian_binomials(&self) -> bool {
        (0..=self.m).all(|k| self.count(k) as u64 == gaussian_binomial(self.m as u32, k as u32, self.q() as u64))
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            rec(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Every `k × m` matrix in reduced row echelon form with `k` nonzero rows.
fn enumerate_rref(f: &Field, m: usize, k: usize) -> Vec<Subspace> {
    let q = f.order() as u8;
    let mut out = Vec::new();
    for pivots in combinations(m, k) {
        // free positions: (row, col) with col > pivot of row and col not a pivot column
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((pivots[r] + 1)..m).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0u8; m]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            // most significant digit first so that codes run in lexicographic order
            for &(r, col) in free.iter().rev() {
                rows[r][col] = (c % q as u64) as u8;
                c /= q as u64;
            }
            out.push(Subspace { rows });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in SUPPORTED_FIELDS {
            let f = Field::new(q).unwrap();
            let n = q as u8;
            for a in 0..n {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
        assert_eq!(Field::new(6).unwrap_err(), Error::UnsupportedField(6));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(gaussian_binomial(4, 0, 5), 1);
    }

    #[test]
    fn subspace_counts() {
        for (q, m) in [(2, 3), (3, 3), (2, 4), (4, 3), (5, 3), (7, 3), (3, 4)] {
            let t = SubspaceTable::new(q, m).unwrap();
            assert!(t.counts_match_gaussian_binomials(), "q={q} m={m}");
            let mut all = t.by_dim[1].clone();
            all.dedup();
            assert_eq!(all.len(), t.count(1));
        }
    }

    #[test]
    fn containment() {
        let t = SubspaceTable::new(2, 3).unwrap();
        let f = &t.field;
        // every line (2-dim) contains q+1 = 3 points and every point lies on 3 lines
        for l in &t.by_dim[2] {
            assert_eq!(t.by_dim[1].iter().filter(|p| p.is_subspace_of(f, l)).count(), 3);
        }
        for p in &t.by_dim[1] {
            assert_eq!(t.by_dim[2].iter().filter(|l| p.is_subspace_of(f, l)).count(), 3);
        }
    }
}
