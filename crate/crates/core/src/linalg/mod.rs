//! Exact linear algebra over `Z` (with `Q` and `F_p` rank variants):
//! sparse integer matrices, Smith normal form, and homology of integer
//! chain complexes.

mod homology;
mod smith;

pub use homology::{homology, homology_at, homology_at_with_basis, HomologyBasis};
pub use smith::{smith, SmithForm, Track};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::Error;

/// Coefficient ring tag. All storage is integral; the tag selects how ranks
/// and torsion are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Coeff {
    Z,
    Q,
    Fp(u64),
}

impl std::fmt::Display for Coeff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coeff::Z => write!(f, "Z"),
            Coeff::Q => write!(f, "Q"),
            Coeff::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

impl Coeff {
    pub fn parse(s: &str) -> crate::Result<Coeff> {
        match s {
            "z" | "Z" => Ok(Coeff::Z),
            "q" | "Q" => Ok(Coeff::Q),
            _ => {
                if let Some(rest) = s.strip_prefix("fp:") {
                    let p: u64 = rest
                        .parse()
                        .map_err(|_| Error::OutOfRange(format!("bad coefficient tag {s}")))?;
                    if p < 2 || !is_prime(p) {
                        return Err(Error::OutOfRange(format!("{p} is not prime")));
                    }
                    Ok(Coeff::Fp(p))
                } else {
                    Err(Error::OutOfRange(format!("bad coefficient tag {s}")))
                }
            }
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// invariant torsion factors `d_1 | d_2 | ...`, each `> 1`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }
}

impl std::fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sparse integer matrix, column-major. Entries are arbitrary-precision.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    col_data: Vec<BTreeMap<u32, BigInt>>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows.min(12) {
            write!(f, "  ")?;
            for c in 0..self.cols.min(12) {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            col_data: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.col_data[i].insert(i as u32, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.col_data[j].insert(i as u32, BigInt::from(v));
                }
            }
        }
        m
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zero(rows, cols);
        for &(r, c, v) in triplets {
            if v != 0 {
                m.add_to(r, c, &BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.col_data.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.col_data[c]
            .get(&(r as u32))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.col_data[c].remove(&(r as u32));
        } else {
            self.col_data[c].insert(r as u32, v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &BigInt) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        if v.is_zero() {
            return;
        }
        let slot = self.col_data[c].entry(r as u32).or_insert_with(BigInt::zero);
        *slot += v;
        if slot.is_zero() {
            self.col_data[c].remove(&(r as u32));
        }
    }

    pub fn col(&self, c: usize) -> &BTreeMap<u32, BigInt> {
        &self.col_data[c]
    }

    pub fn set_col(&mut self, c: usize, data: BTreeMap<u32, BigInt>) {
        self.col_data[c] = data;
    }

    pub fn is_zero(&self) -> bool {
        self.col_data.iter().all(|c| c.is_empty())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for (c, col) in self.col_data.iter().enumerate() {
            for (&r, v) in col {
                t.col_data[r as usize].insert(c as u32, v.clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for c in 0..other.cols {
            let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
            for (&k, v) in &other.col_data[c] {
                for (&r, w) in &self.col_data[k as usize] {
                    let slot = acc.entry(r).or_insert_with(BigInt::zero);
                    *slot += v * w;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.col_data[c] = acc;
        }
        out
    }

    pub fn apply(&self, vec: &BTreeMap<u32, BigInt>) -> BTreeMap<u32, BigInt> {
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (&k, v) in vec {
            for (&r, w) in &self.col_data[k as usize] {
                let slot = acc.entry(r).or_insert_with(BigInt::zero);
                *slot += v * w;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for col in &mut out.col_data {
            for v in col.values_mut() {
                *v = -v.clone();
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for c in 0..self.cols {
            for (&r, v) in &other.col_data[c] {
                out.add_to(r as usize, c, v);
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zero(self.rows, self.cols + other.cols);
        out.col_data[..self.cols].clone_from_slice(&self.col_data);
        out.col_data[self.cols..].clone_from_slice(&other.col_data);
        out
    }

    /// Keep the given columns, in order.
    pub fn select_cols(&self, cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zero(self.rows, cols.len());
        for (i, &c) in cols.iter().enumerate() {
            out.col_data[i] = self.col_data[c].clone();
        }
        out
    }

    /// Keep the given rows, renumbered in order.
    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        let mut index = vec![u32::MAX; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            index[r] = i as u32;
        }
        let mut out = IntMatrix::zero(rows.len(), self.cols);
        for c in 0..self.cols {
            for (&r, v) in &self.col_data[c] {
                let new_r = index[r as usize];
                if new_r != u32::MAX {
                    out.col_data[c].insert(new_r, v.clone());
                }
            }
        }
        out
    }

    pub fn to_dense_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut dense = vec![vec![0i64; self.cols]; self.rows];
        for c in 0..self.cols {
            for (&r, v) in &self.col_data[c] {
                dense[r as usize][c] = i64::try_from(v).ok()?;
            }
        }
        Some(dense)
    }

    /// Rank of the reduction mod `p`, by Gaussian elimination over `F_p`.
    pub fn rank_mod_p(&self, p: u64) -> usize {
        let pb = BigInt::from(p);
        let mut cols: Vec<BTreeMap<u32, u64>> = self
            .col_data
            .iter()
            .map(|col| {
                col.iter()
                    .filter_map(|(&r, v)| {
                        let m = ((v % &pb) + &pb) % &pb;
                        let m: u64 = m.try_into().unwrap();
                        if m == 0 {
                            None
                        } else {
                            Some((r, m))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut pivot_of_row: BTreeMap<u32, usize> = BTreeMap::new();
        let mut rank = 0;
        for c in 0..cols.len() {
            loop {
                let Some((&r, &v)) = cols[c].iter().next() else {
                    break;
                };
                if let Some(&pc) = pivot_of_row.get(&r) {
                    // eliminate using the recorded pivot column
                    let pv = cols[pc][&r];
                    let factor = mulmod(v, modinv(pv, p), p);
                    let pivot_col = cols[pc].clone();
                    for (&rr, &w) in &pivot_col {
                        let sub = mulmod(factor, w, p);
                        let e = cols[c].entry(rr).or_insert(0);
                        *e = (*e + p - sub) % p;
                        if *e == 0 {
                            cols[c].remove(&rr);
                        }
                    }
                } else {
                    pivot_of_row.insert(r, c);
                    rank += 1;
                    break;
                }
            }
        }
        rank
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn modinv(a: u64, p: u64) -> u64 {
    // p prime; Fermat
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// A bounded chain complex of finitely generated free modules: one boundary
/// matrix per degree, `d_k : C_k -> C_{k-1}`. `d . d = 0` is checked at
/// construction.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub coeff: Coeff,
    min_degree: i64,
    ranks: Vec<usize>,
    /// boundaries[i] maps degree `min_degree + i` to `min_degree + i - 1`;
    /// boundaries[0] has zero rows.
    boundaries: Vec<IntMatrix>,
    pub augmented: bool,
}

impl ChainComplex {
    /// Build a complex from per-degree boundary matrices and verify `dd = 0`.
    pub fn new(
        coeff: Coeff,
        min_degree: i64,
        ranks: Vec<usize>,
        boundaries: Vec<IntMatrix>,
    ) -> crate::Result<Self> {
        assert_eq!(ranks.len(), boundaries.len());
        for (i, b) in boundaries.iter().enumerate() {
            let expected_rows = if i == 0 { 0 } else { ranks[i - 1] };
            if b.rows() != expected_rows || b.cols() != ranks[i] {
                return Err(Error::Dimension(format!(
                    "boundary in degree {} is {}x{}, expected {}x{}",
                    min_degree + i as i64,
                    b.rows(),
                    b.cols(),
                    expected_rows,
                    ranks[i]
                )));
            }
        }
        for i in 1..boundaries.len() {
            if !boundaries[i - 1].mul(&boundaries[i]).is_zero() {
                return Err(Error::NotAComplex {
                    degree: min_degree + i as i64 - 1,
                });
            }
        }
        Ok(ChainComplex {
            coeff,
            min_degree,
            ranks,
            boundaries,
            augmented: false,
        })
    }

    pub fn empty(coeff: Coeff) -> Self {
        ChainComplex {
            coeff,
            min_degree: 0,
            ranks: Vec::new(),
            boundaries: Vec::new(),
            augmented: false,
        }
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.min_degree..=self.max_degree()
    }

    pub fn rank(&self, degree: i64) -> usize {
        let i = degree - self.min_degree;
        if i < 0 || i >= self.ranks.len() as i64 {
            0
        } else {
            self.ranks[i as usize]
        }
    }

    /// The boundary map out of `degree`; zero-sized if outside the range.
    pub fn boundary(&self, degree: i64) -> IntMatrix {
        let i = degree - self.min_degree;
        if i < 0 || i >= self.ranks.len() as i64 {
            return IntMatrix::zero(self.rank(degree - 1), self.rank(degree));
        }
        let i = i as usize;
        if i == 0 {
            // stored with zero rows; the true target rank is 0 anyway
            return self.boundaries[0].clone();
        }
        self.boundaries[i].clone()
    }

    /// Tensor product of complexes with the usual sign rule. Basis of degree
    /// `n` is ordered by ascending left degree, then left index, then right
    /// index; the order is part of the contract.
    pub fn tensor(&self, other: &ChainComplex) -> crate::Result<ChainComplex> {
        if self.coeff != other.coeff {
            return Err(Error::Dimension(
                "tensor factors have different coefficient rings".into(),
            ));
        }
        let min = self.min_degree + other.min_degree;
        let max = self.max_degree() + other.max_degree();
        if self.ranks.is_empty() || other.ranks.is_empty() {
            return Ok(ChainComplex::empty(self.coeff));
        }
        // index layout per total degree
        let offsets = |n: i64| -> Vec<(i64, usize, usize, usize)> {
            // (p, rank_left, rank_right, offset) for p + q = n
            let mut out = Vec::new();
            let mut off = 0;
            for p in self.degrees() {
                let q = n - p;
                let rl = self.rank(p);
                let rr = other.rank(q);
                if rl > 0 && rr > 0 {
                    out.push((p, rl, rr, off));
                    off += rl * rr;
                }
            }
            out
        };
        let mut ranks = Vec::new();
        let mut boundaries = Vec::new();
        for n in min..=max {
            let layout = offsets(n);
            let total: usize = layout.iter().map(|&(_, rl, rr, _)| rl * rr).sum();
            ranks.push(total);
            let prev_layout = offsets(n - 1);
            let prev_total: usize = prev_layout.iter().map(|&(_, rl, rr, _)| rl * rr).sum();
            let rows = if n == min { 0 } else { prev_total };
            let mut d = IntMatrix::zero(rows, total);
            if n > min {
                let prev_off: std::collections::HashMap<i64, (usize, usize)> = prev_layout
                    .iter()
                    .map(|&(p, _, rr, off)| (p, (off, rr)))
                    .collect();
                for &(p, _rl, rr, off) in &layout {
                    let q = n - p;
                    let dl = self.boundary(p);
                    let dr = other.boundary(q);
                    // d(a ox b) = da ox b + (-1)^p a ox db
                    for i in 0..self.rank(p) {
                        for j in 0..rr {
                            let src = off + i * rr + j;
                            if let Some(&(t_off, t_rr)) = prev_off.get(&(p - 1)) {
                                for (&r, v) in dl.col(i) {
                                    d.add_to(t_off + (r as usize) * t_rr + j, src, v);
                                }
                            }
                            if let Some(&(t_off, t_rr)) = prev_off.get(&p) {
                                let sign = if p % 2 == 0 { 1 } else { -1 };
                                for (&r, v) in dr.col(j) {
                                    d.add_to(
                                        t_off + i * t_rr + r as usize,
                                        src,
                                        &(v * BigInt::from(sign)),
                                    );
                                }
                            }
                        }
                    }
                }
            }
            boundaries.push(d);
        }
        ChainComplex::new(self.coeff, min, ranks, boundaries)
    }

    /// Quotient by the span of a boundary-closed set of basis elements.
    /// `sub[i]` lists the selected positions in degree `min_degree + i`.
    pub fn quotient(&self, sub: &[Vec<usize>]) -> crate::Result<ChainComplex> {
        assert_eq!(sub.len(), self.ranks.len());
        let mut keep: Vec<Vec<usize>> = Vec::new();
        let mut in_sub: Vec<Vec<bool>> = Vec::new();
        for (i, s) in sub.iter().enumerate() {
            let mut flags = vec![false; self.ranks[i]];
            for &j in s {
                flags[j] = true;
            }
            keep.push((0..self.ranks[i]).filter(|&j| !flags[j]).collect());
            in_sub.push(flags);
        }
        // boundary-closedness: d(sub) must have support inside sub
        for i in 1..self.ranks.len() {
            for j in 0..self.ranks[i] {
                if !in_sub[i][j] {
                    continue;
                }
                for (&r, _) in self.boundaries[i].col(j) {
                    if !in_sub[i - 1][r as usize] {
                        return Err(Error::NotBoundaryClosed(format!(
                            "degree {} basis element {} has boundary outside the subset",
                            self.min_degree + i as i64,
                            j
                        )));
                    }
                }
            }
        }
        let mut ranks = Vec::new();
        let mut boundaries = Vec::new();
        for i in 0..self.ranks.len() {
            ranks.push(keep[i].len());
            let b = self.boundaries[i].select_cols(&keep[i]);
            let b = if i == 0 {
                IntMatrix::zero(0, keep[0].len())
            } else {
                b.select_rows(&keep[i - 1])
            };
            boundaries.push(b);
        }
        let mut c = ChainComplex::new(self.coeff, self.min_degree, ranks, boundaries)?;
        c.augmented = self.augmented;
        Ok(c)
    }

    /// Plain-text export: one `degree row col value` line per nonzero entry,
    /// preceded by `rank degree n` lines.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for d in self.degrees() {
            out.push_str(&format!("rank {} {}\n", d, self.rank(d)));
        }
        for d in self.degrees() {
            let i = (d - self.min_degree) as usize;
            for (c, col) in self.boundaries[i].clone().col_data.iter().enumerate() {
                for (&r, v) in col {
                    out.push_str(&format!("d {} {} {} {}\n", d, r, c, v));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_mul_identity() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let id = IntMatrix::identity(2);
        assert_eq!(m.mul(&id), m);
        assert_eq!(id.mul(&m), m);
    }

    #[test]
    fn rank_mod_p() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        assert_eq!(m.rank_mod_p(2), 0);
        assert_eq!(m.rank_mod_p(3), 2);
        assert_eq!(m.rank_mod_p(5), 2);
    }

    #[test]
    fn complex_rejects_bad_boundaries() {
        // d1 . d2 != 0
        let d1 = IntMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]);
        let d2 = IntMatrix::from_rows(vec![vec![1], vec![1]]);
        let err = ChainComplex::new(
            Coeff::Z,
            0,
            vec![2, 2, 1],
            vec![IntMatrix::zero(0, 2), d1, d2],
        );
        assert!(err.is_err());
    }

    #[test]
    fn tensor_signs_square() {
        // interval x interval: H_0 = Z, rest 0
        let interval = ChainComplex::new(
            Coeff::Z,
            0,
            vec![2, 1],
            vec![
                IntMatrix::zero(0, 2),
                IntMatrix::from_rows(vec![vec![-1], vec![1]]),
            ],
        )
        .unwrap();
        let square = interval.tensor(&interval).unwrap();
        let h = homology(&square);
        assert_eq!(h[&0], AbelianGroupInvariants::free(1));
        assert_eq!(h[&1], AbelianGroupInvariants::zero());
        assert_eq!(h[&2], AbelianGroupInvariants::zero());
    }
}
