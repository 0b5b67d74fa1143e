//! Smith normal form of sparse integer matrices.
//!
//! Two-phase pivoting: greedy unit (+-1) pivots ordered by a Markowitz fill
//! heuristic clear the bulk of a typical boundary matrix without growing
//! entries; the residue is finished by classical minimal-pivot reduction
//! with gcd steps. Arbitrary precision throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use super::IntMatrix;

/// Which transformation matrices to accumulate alongside the diagonal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Track {
    pub u: bool,
    pub v: bool,
    pub u_inv: bool,
    pub v_inv: bool,
}

impl Track {
    pub fn none() -> Self {
        Track::default()
    }
    pub fn all() -> Self {
        Track {
            u: true,
            v: true,
            u_inv: true,
            v_inv: true,
        }
    }
    pub fn v_and_vinv() -> Self {
        Track {
            v: true,
            v_inv: true,
            ..Track::default()
        }
    }
    pub fn u_and_uinv() -> Self {
        Track {
            u: true,
            u_inv: true,
            ..Track::default()
        }
    }
}

/// Result of Smith reduction: `u * m * v = d` with `u`, `v` unimodular and
/// `d` diagonal, nonzero entries `diag[0] | diag[1] | ...` leading.
pub struct SmithForm {
    pub rank: usize,
    pub diag: Vec<BigInt>,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
    rows: usize,
    cols: usize,
}

impl SmithForm {
    /// Invariant factors `> 1`.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| d.abs() > BigInt::one())
            .map(|d| d.abs())
            .collect()
    }

    /// The diagonal matrix `d`.
    pub fn d_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zero(self.rows, self.cols);
        for (i, v) in self.diag.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

/// Transforms are held transposed when that turns their updates into column
/// operations; `u_t` is `U` transposed and `vi_t` is `V^{-1}` transposed.
struct Reducer {
    rows: usize,
    cols: usize,
    cols_data: Vec<BTreeMap<u32, BigInt>>,
    row_cols: Vec<BTreeSet<u32>>,
    active_rows: BTreeSet<u32>,
    active_cols: BTreeSet<u32>,
    pivots: Vec<(u32, u32)>,
    u_t: Option<IntMatrix>,
    v: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
    vi_t: Option<IntMatrix>,
}

impl Reducer {
    fn new(m: &IntMatrix, track: Track) -> Self {
        let rows = m.rows();
        let cols = m.cols();
        let mut row_cols = vec![BTreeSet::new(); rows];
        let mut cols_data = Vec::with_capacity(cols);
        for c in 0..cols {
            let col = m.col(c).clone();
            for &r in col.keys() {
                row_cols[r as usize].insert(c as u32);
            }
            cols_data.push(col);
        }
        Reducer {
            rows,
            cols,
            cols_data,
            row_cols,
            active_rows: (0..rows as u32).collect(),
            active_cols: (0..cols as u32).collect(),
            pivots: Vec::new(),
            u_t: track.u.then(|| IntMatrix::identity(rows)),
            v: track.v.then(|| IntMatrix::identity(cols)),
            u_inv: track.u_inv.then(|| IntMatrix::identity(rows)),
            vi_t: track.v_inv.then(|| IntMatrix::identity(cols)),
        }
    }

    fn entry(&self, r: u32, c: u32) -> Option<&BigInt> {
        self.cols_data[c as usize].get(&r)
    }

    fn set_entry(&mut self, r: u32, c: u32, v: BigInt) {
        if v.is_zero() {
            if self.cols_data[c as usize].remove(&r).is_some() {
                self.row_cols[r as usize].remove(&c);
            }
        } else if self.cols_data[c as usize].insert(r, v).is_none() {
            self.row_cols[r as usize].insert(c);
        }
    }

    fn col_axpy_matrix(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
        let src_col: Vec<(u32, BigInt)> = m.col(src).iter().map(|(&r, w)| (r, w.clone())).collect();
        for (r, w) in src_col {
            m.add_to(r as usize, dst, &(f * &w));
        }
    }

    /// col[dst] += f * col[src] on the working matrix and transforms.
    fn col_axpy(&mut self, dst: u32, src: u32, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        let src_col: Vec<(u32, BigInt)> = self.cols_data[src as usize]
            .iter()
            .map(|(&r, v)| (r, v.clone()))
            .collect();
        for (r, v) in src_col {
            let cur = self.entry(r, dst).cloned().unwrap_or_else(BigInt::zero);
            self.set_entry(r, dst, cur + f * &v);
        }
        if let Some(v) = &mut self.v {
            // M := M * E with E = I + f E_{src,dst}; same column op on V
            Self::col_axpy_matrix(v, dst as usize, src as usize, f);
        }
        if let Some(vi_t) = &mut self.vi_t {
            // V^{-1} := E^{-1} V^{-1}: row[src] -= f * row[dst]; transposed:
            // col[src] -= f * col[dst]
            Self::col_axpy_matrix(vi_t, src as usize, dst as usize, &-f.clone());
        }
    }

    /// row[dst] += f * row[src] on the working matrix and transforms.
    fn row_axpy(&mut self, dst: u32, src: u32, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        let cols_of_src: Vec<u32> = self.row_cols[src as usize].iter().copied().collect();
        for c in cols_of_src {
            let v = self.entry(src, c).cloned().unwrap();
            let cur = self.entry(dst, c).cloned().unwrap_or_else(BigInt::zero);
            self.set_entry(dst, c, cur + f * &v);
        }
        if let Some(u_t) = &mut self.u_t {
            // U := E U: row[dst] += f * row[src]; transposed: col op
            Self::col_axpy_matrix(u_t, dst as usize, src as usize, f);
        }
        if let Some(ui) = &mut self.u_inv {
            // U^{-1} := U^{-1} E^{-1}: col[src] -= f * col[dst]
            Self::col_axpy_matrix(ui, src as usize, dst as usize, &-f.clone());
        }
    }

    fn negate_row(&mut self, r: u32) {
        let cols_of_r: Vec<u32> = self.row_cols[r as usize].iter().copied().collect();
        for c in cols_of_r {
            let v = self.entry(r, c).cloned().unwrap();
            self.set_entry(r, c, -v);
        }
        if let Some(u_t) = &mut self.u_t {
            let col: Vec<(u32, BigInt)> = u_t
                .col(r as usize)
                .iter()
                .map(|(&rr, w)| (rr, w.clone()))
                .collect();
            for (rr, w) in col {
                u_t.set(rr as usize, r as usize, -w);
            }
        }
        if let Some(ui) = &mut self.u_inv {
            let col: Vec<(u32, BigInt)> = ui
                .col(r as usize)
                .iter()
                .map(|(&rr, w)| (rr, w.clone()))
                .collect();
            for (rr, w) in col {
                ui.set(rr as usize, r as usize, -w);
            }
        }
    }

    fn markowitz(&self, r: u32, c: u32) -> usize {
        (self.row_cols[r as usize].len() - 1) * (self.cols_data[c as usize].len() - 1)
    }

    /// Greedy unit-pivot phase driven by a lazy priority queue.
    fn unit_phase(&mut self) {
        let mut heap: BinaryHeap<Reverse<(usize, u32, u32)>> = BinaryHeap::new();
        for &c in &self.active_cols {
            for (&r, v) in &self.cols_data[c as usize] {
                if v.abs().is_one() {
                    heap.push(Reverse((self.markowitz(r, c), r, c)));
                }
            }
        }
        while let Some(Reverse((cost, r, c))) = heap.pop() {
            if !self.active_rows.contains(&r) || !self.active_cols.contains(&c) {
                continue;
            }
            let Some(v) = self.entry(r, c) else { continue };
            if !v.abs().is_one() {
                continue;
            }
            let fresh = self.markowitz(r, c);
            if fresh > cost {
                heap.push(Reverse((fresh, r, c)));
                continue;
            }
            let touched = self.eliminate_unit(r, c);
            for cc in touched {
                if !self.active_cols.contains(&cc) {
                    continue;
                }
                for (&rr, vv) in &self.cols_data[cc as usize] {
                    if vv.abs().is_one() {
                        heap.push(Reverse((self.markowitz(rr, cc), rr, cc)));
                    }
                }
            }
        }
    }

    /// Eliminate at a unit pivot; returns the columns whose support changed.
    fn eliminate_unit(&mut self, r: u32, c: u32) -> Vec<u32> {
        let pivot = self.entry(r, c).cloned().unwrap();
        debug_assert!(pivot.abs().is_one());
        if pivot.is_negative() {
            self.negate_row(r);
        }
        let touched: Vec<u32> = self.row_cols[r as usize]
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        for &cc in &touched {
            let a = self.entry(r, cc).cloned().unwrap();
            self.col_axpy(cc, c, &-a);
        }
        // row r now holds only the pivot, so clearing the column stays local
        let below: Vec<u32> = self.cols_data[c as usize]
            .keys()
            .copied()
            .filter(|&rr| rr != r)
            .collect();
        for rr in below {
            let a = self.entry(rr, c).cloned().unwrap();
            self.row_axpy(rr, r, &-a);
        }
        self.active_rows.remove(&r);
        self.active_cols.remove(&c);
        self.pivots.push((r, c));
        touched
    }

    /// Classical phase on whatever the unit phase left behind.
    fn general_phase(&mut self) {
        loop {
            let mut best: Option<(u32, u32, BigInt)> = None;
            for &c in &self.active_cols {
                for (&r, v) in &self.cols_data[c as usize] {
                    let a = v.abs();
                    if best.as_ref().map_or(true, |(_, _, b)| &a < b) {
                        best = Some((r, c, a));
                    }
                }
            }
            let Some((mut r, mut c, _)) = best else {
                return;
            };

            loop {
                let pivot = self.entry(r, c).cloned().unwrap();
                let col_other = self.cols_data[c as usize].keys().copied().find(|&rr| rr != r);
                if let Some(rr) = col_other {
                    let a = self.entry(rr, c).cloned().unwrap();
                    let q = rounded_div(&a, &pivot);
                    if q.is_zero() {
                        r = rr; // strictly smaller remainder becomes the pivot
                    } else {
                        self.row_axpy(rr, r, &-q);
                    }
                    continue;
                }
                let row_other = self.row_cols[r as usize].iter().copied().find(|&cc| cc != c);
                if let Some(cc) = row_other {
                    let a = self.entry(r, cc).cloned().unwrap();
                    let q = rounded_div(&a, &pivot);
                    if q.is_zero() {
                        c = cc;
                    } else {
                        self.col_axpy(cc, c, &-q);
                    }
                    continue;
                }
                break;
            }
            let pivot = self.entry(r, c).cloned().unwrap();
            if pivot.is_negative() {
                self.negate_row(r);
            }
            self.active_rows.remove(&r);
            self.active_cols.remove(&c);
            self.pivots.push((r, c));
        }
    }

    /// Enforce the divisibility chain across recorded pivot values.
    fn fix_divisibility(&mut self) {
        loop {
            let mut clean = true;
            for i in 0..self.pivots.len().saturating_sub(1) {
                let (r1, c1) = self.pivots[i];
                let (r2, c2) = self.pivots[i + 1];
                let d1 = self.entry(r1, c1).cloned().unwrap();
                let d2 = self.entry(r2, c2).cloned().unwrap();
                if (&d2 % &d1).is_zero() {
                    continue;
                }
                clean = false;
                // fold row r2 into r1 and re-diagonalize the 2x2 block
                self.row_axpy(r1, r2, &BigInt::one());
                loop {
                    let a = self.entry(r1, c1).cloned().unwrap_or_else(BigInt::zero);
                    let b = self.entry(r1, c2).cloned().unwrap_or_else(BigInt::zero);
                    if b.is_zero() {
                        break;
                    }
                    if a.is_zero() {
                        self.swap_cols(c1, c2);
                        continue;
                    }
                    let q = rounded_div(&b, &a);
                    if q.is_zero() {
                        self.swap_cols(c1, c2);
                    } else {
                        self.col_axpy(c2, c1, &-q);
                    }
                }
                let extra: Vec<u32> = self.cols_data[c1 as usize]
                    .keys()
                    .copied()
                    .filter(|&rr| rr != r1)
                    .collect();
                for rr in extra {
                    let a = self.entry(rr, c1).cloned().unwrap();
                    let d = self.entry(r1, c1).cloned().unwrap();
                    let q = &a / &d; // exact: the gcd divides everything here
                    self.row_axpy(rr, r1, &-q);
                }
                for &(rr, cc) in &[(r1, c1), (r2, c2)] {
                    if self
                        .entry(rr, cc)
                        .map_or(false, |v| v.is_negative())
                    {
                        self.negate_row(rr);
                    }
                }
            }
            if clean {
                return;
            }
        }
    }

    fn swap_cols(&mut self, a: u32, b: u32) {
        if a == b {
            return;
        }
        let ca = std::mem::take(&mut self.cols_data[a as usize]);
        let cb = std::mem::take(&mut self.cols_data[b as usize]);
        for &r in ca.keys() {
            self.row_cols[r as usize].remove(&a);
        }
        for &r in cb.keys() {
            self.row_cols[r as usize].remove(&b);
        }
        for &r in cb.keys() {
            self.row_cols[r as usize].insert(a);
        }
        for &r in ca.keys() {
            self.row_cols[r as usize].insert(b);
        }
        self.cols_data[a as usize] = cb;
        self.cols_data[b as usize] = ca;
        if let Some(v) = &mut self.v {
            let ca = v.col(a as usize).clone();
            let cb = v.col(b as usize).clone();
            v.set_col(a as usize, cb);
            v.set_col(b as usize, ca);
        }
        if let Some(vi_t) = &mut self.vi_t {
            let ca = vi_t.col(a as usize).clone();
            let cb = vi_t.col(b as usize).clone();
            vi_t.set_col(a as usize, cb);
            vi_t.set_col(b as usize, ca);
        }
    }

    fn finish(mut self) -> SmithForm {
        self.fix_divisibility();
        let mut diag = Vec::with_capacity(self.pivots.len());
        for &(r, c) in &self.pivots {
            diag.push(self.entry(r, c).cloned().unwrap());
        }
        // permutations carrying pivot i to position i
        let mut row_perm: Vec<usize> = Vec::new();
        let mut col_perm: Vec<usize> = Vec::new();
        let mut used_r = vec![false; self.rows];
        let mut used_c = vec![false; self.cols];
        for &(r, c) in &self.pivots {
            row_perm.push(r as usize);
            col_perm.push(c as usize);
            used_r[r as usize] = true;
            used_c[c as usize] = true;
        }
        for r in 0..self.rows {
            if !used_r[r] {
                row_perm.push(r);
            }
        }
        for c in 0..self.cols {
            if !used_c[c] {
                col_perm.push(c);
            }
        }
        let u = self.u_t.map(|ut| ut.transpose().select_rows(&row_perm));
        let u_inv = self.u_inv.map(|ui| ui.select_cols(&row_perm));
        let v = self.v.map(|v| v.select_cols(&col_perm));
        let v_inv = self.vi_t.map(|vit| vit.transpose().select_rows(&col_perm));
        SmithForm {
            rank: diag.len(),
            diag,
            u,
            v,
            u_inv,
            v_inv,
            rows: self.rows,
            cols: self.cols,
        }
    }
}

/// Division with remainder minimized in absolute value.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2u8 > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Smith normal form with optional transform tracking.
pub fn smith(m: &IntMatrix, track: Track) -> SmithForm {
    let mut red = Reducer::new(m, track);
    red.unit_phase();
    red.general_phase();
    red.finish()
}

/// Rank over `Z` (= over `Q`) and invariant factors `> 1`.
pub fn rank_and_torsion(m: &IntMatrix) -> (usize, Vec<BigInt>) {
    let s = smith(m, Track::none());
    (s.rank, s.torsion())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_umv(m: &IntMatrix) {
        let s = smith(m, Track::all());
        let u = s.u.clone().unwrap();
        let v = s.v.clone().unwrap();
        let d = s.d_matrix();
        assert_eq!(u.mul(m).mul(&v), d, "UMV != D");
        assert_eq!(
            u.mul(&s.u_inv.clone().unwrap()),
            IntMatrix::identity(m.rows())
        );
        assert_eq!(
            s.v_inv.clone().unwrap().mul(&v),
            IntMatrix::identity(m.cols())
        );
        for i in 1..s.diag.len() {
            assert!((&s.diag[i] % &s.diag[i - 1]).is_zero(), "divisibility");
        }
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zero(3, 2);
        let s = smith(&m, Track::all());
        assert_eq!(s.rank, 0);
        assert_eq!(s.u.unwrap(), IntMatrix::identity(3));
        assert_eq!(s.v.unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn identity_matrix() {
        let m = IntMatrix::identity(4);
        let s = smith(&m, Track::none());
        assert_eq!(s.rank, 4);
        assert!(s.diag.iter().all(|d| d == &BigInt::one()));
    }

    #[test]
    fn invariant_factors_2_4() {
        let m = IntMatrix::from_rows(vec![vec![2, 4], vec![6, 8]]);
        let s = smith(&m, Track::none());
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(4)]);
        check_umv(&m);
    }

    #[test]
    fn textbook_4x4() {
        let m = IntMatrix::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let s = smith(&m, Track::none());
        assert_eq!(
            s.diag,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
        check_umv(&m);
    }

    #[test]
    fn random_small_umv() {
        let mut state = 0x12345678u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let rows = 1 + (next() % 6) as usize;
            let cols = 1 + (next() % 6) as usize;
            let mut m = IntMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    let v = (next() % 13) as i64 - 6;
                    m.set(r, c, BigInt::from(v));
                }
            }
            check_umv(&m);
        }
    }

    #[test]
    fn det_product_matches_invariant_factors() {
        let m = IntMatrix::from_rows(vec![vec![4, 2, 1], vec![2, 8, 2], vec![1, 2, 12]]);
        let s = smith(&m, Track::none());
        let prod: BigInt = s.diag.iter().product();
        let det = BigInt::from(4 * 92 - 2 * 22 + (4 - 8));
        assert_eq!(prod, det.abs());
    }
}
