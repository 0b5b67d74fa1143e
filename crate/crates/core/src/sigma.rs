//! Integral representations of symmetric groups given by generator matrices
//! for the adjacent transpositions, with construction-time verification of
//! the Coxeter relations; the boundary-homology representation extracted
//! from the partition complex; characters, restriction and induction; and
//! Tor/Ext over the group ring via bar resolutions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{
    homology_at, homology_at_with_basis, AbelianGroupInvariants, IntMatrix,
};
use crate::operad::partition_complex;
use crate::perm::{class_representative, enumerate, partitions_of, Permutation};
use crate::Error;

/// Module side: left modules satisfy `rho(gh) = rho(g) rho(h)`, right
/// modules the reverse. Generator matrices are involutions either way; the
/// side only controls how composite group elements are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A representation of the symmetric group on `n` letters by integer
/// matrices for the adjacent transpositions.
#[derive(Clone, Debug)]
pub struct SigmaRep {
    pub n: usize,
    pub rank: usize,
    pub side: Side,
    gens: Vec<IntMatrix>,
}

impl SigmaRep {
    pub fn new(n: usize, rank: usize, side: Side, gens: Vec<IntMatrix>) -> crate::Result<Self> {
        if gens.len() + 1 != n.max(1) {
            return Err(Error::BadRepresentation(format!(
                "expected {} generator matrices for degree {n}, got {}",
                n.max(1) - 1,
                gens.len()
            )));
        }
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != rank || g.cols() != rank {
                return Err(Error::BadRepresentation(format!(
                    "generator {i} is {}x{}, expected {rank}x{rank}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        let id = IntMatrix::identity(rank);
        for (i, g) in gens.iter().enumerate() {
            if g.mul(g) != id {
                return Err(Error::BadRepresentation(format!(
                    "generator {i} is not an involution"
                )));
            }
        }
        for i in 0..gens.len().saturating_sub(1) {
            let a = &gens[i];
            let b = &gens[i + 1];
            if a.mul(b).mul(a) != b.mul(a).mul(b) {
                return Err(Error::BadRepresentation(format!(
                    "braid relation fails at ({}, {})",
                    i,
                    i + 1
                )));
            }
        }
        for i in 0..gens.len() {
            for j in i + 2..gens.len() {
                if gens[i].mul(&gens[j]) != gens[j].mul(&gens[i]) {
                    return Err(Error::BadRepresentation(format!(
                        "distant generators ({i}, {j}) do not commute"
                    )));
                }
            }
        }
        Ok(SigmaRep {
            n,
            rank,
            side,
            gens,
        })
    }

    pub fn generator(&self, i: usize) -> &IntMatrix {
        &self.gens[i]
    }

    /// Rank-`r` module with every generator acting as the identity.
    pub fn trivial(n: usize, r: usize) -> Self {
        SigmaRep {
            n,
            rank: r,
            side: Side::Left,
            gens: vec![IntMatrix::identity(r); n.max(1) - 1],
        }
    }

    /// Rank-one module where each transposition acts by `-1`.
    pub fn sign(n: usize) -> Self {
        let mut m = IntMatrix::zero(1, 1);
        m.set(0, 0, BigInt::from(-1));
        SigmaRep {
            n,
            rank: 1,
            side: Side::Left,
            gens: vec![m; n.max(1) - 1],
        }
    }

    /// The left regular representation on the group basis in enumeration
    /// order: `g . e_h = e_{gh}`.
    pub fn regular(n: usize) -> Self {
        let perms = enumerate(n);
        let index: BTreeMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut gens = Vec::new();
        for i in 0..n.max(1) - 1 {
            let s = Permutation::adjacent(n, i);
            let mut m = IntMatrix::zero(perms.len(), perms.len());
            for (j, h) in perms.iter().enumerate() {
                m.set(index[&s.compose(h)], j, 1.into());
            }
            gens.push(m);
        }
        SigmaRep {
            n,
            rank: perms.len(),
            side: Side::Left,
            gens,
        }
    }

    /// Same matrices read with the opposite variance. Since generators are
    /// involutions this is the standard left/right conversion `x.g = g^-1 x`.
    pub fn flip_side(&self) -> SigmaRep {
        SigmaRep {
            n: self.n,
            rank: self.rank,
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            gens: self.gens.clone(),
        }
    }

    /// Matrix of an arbitrary permutation, composed per the module side.
    pub fn matrix(&self, p: &Permutation) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.rank);
        let word = p.adjacent_word();
        match self.side {
            Side::Left => {
                for i in word {
                    acc = acc.mul(&self.gens[i]);
                }
            }
            Side::Right => {
                for i in word.into_iter().rev() {
                    acc = acc.mul(&self.gens[i]);
                }
            }
        }
        acc
    }

    /// Traces on the conjugacy classes, in `perm::partitions_of(n)` order.
    pub fn character(&self) -> Vec<BigInt> {
        partitions_of(self.n)
            .iter()
            .map(|ct| {
                let m = self.matrix(&class_representative(ct));
                (0..self.rank).map(|i| m.get(i, i)).sum()
            })
            .collect()
    }

    /// Restriction along the inclusion fixing the last letter: drop the top
    /// generator.
    pub fn restrict(&self) -> crate::Result<SigmaRep> {
        if self.n < 2 {
            return Err(Error::OutOfRange("cannot restrict below degree 1".into()));
        }
        Ok(SigmaRep {
            n: self.n - 1,
            rank: self.rank,
            side: self.side,
            gens: self.gens[..self.n - 2].to_vec(),
        })
    }
}

/// Induction from the subgroup fixing the letters `m+1..n` pointwise, on the
/// coset basis `(coset representative, module basis)`.
pub fn induce(rep: &SigmaRep, n: usize) -> crate::Result<SigmaRep> {
    let m = rep.n;
    if m > n {
        return Err(Error::OutOfRange(format!("cannot induce from {m} to {n}")));
    }
    if rep.side != Side::Left {
        return Err(Error::BadRepresentation(
            "induction implemented for left modules".into(),
        ));
    }
    let perms = enumerate(n);
    // left cosets g . Sigma_m: g, g' in the same coset iff they agree on the
    // letters m..n-1 and map {0..m-1} to the same set in the same ... no:
    // g^{-1} g' fixes m..n-1 pointwise iff g(x) = g'(x) for x >= m.
    let coset_key = |g: &Permutation| -> Vec<usize> { g.images()[m..].to_vec() };
    let mut reps: Vec<Permutation> = Vec::new();
    let mut key_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for g in &perms {
        let key = coset_key(g);
        if !key_index.contains_key(&key) {
            key_index.insert(key, reps.len());
            reps.push(g.clone());
        }
    }
    let index_of_rank = perms.len() / (1..=m).product::<usize>().max(1);
    debug_assert_eq!(reps.len(), index_of_rank);
    let rank = reps.len() * rep.rank;
    let mut gens = Vec::new();
    for i in 0..n.max(1) - 1 {
        let s = Permutation::adjacent(n, i);
        let mut mat = IntMatrix::zero(rank, rank);
        for (ci, c) in reps.iter().enumerate() {
            let sc = s.compose(c);
            let ti = key_index[&coset_key(&sc)];
            // h = reps[ti]^{-1} . s . c lies in the subgroup
            let h_full = reps[ti].inverse().compose(&sc);
            debug_assert!(h_full.images()[m..].iter().enumerate().all(|(k, &v)| v == m + k));
            let h = Permutation::from_images(h_full.images()[..m].to_vec()).unwrap();
            let rho = rep.matrix(&h);
            for a in 0..rep.rank {
                for b in 0..rep.rank {
                    let v = rho.get(a, b);
                    if !v.is_zero() {
                        mat.add_to(ti * rep.rank + a, ci * rep.rank + b, &v);
                    }
                }
            }
        }
        gens.push(mat);
    }
    SigmaRep::new(n, rank, Side::Left, gens)
}

/// The boundary-homology representation of the partition space: the left
/// action of the symmetric group on the reduced homology of the boundary
/// nerve in its top degree `n - 3`. Rank `(n-1)!`; for `n = 1, 2` the
/// convention is the rank-one trivial module.
pub fn superlie(n: usize) -> crate::Result<SigmaRep> {
    if n <= 2 {
        return Ok(SigmaRep::trivial(n, 1));
    }
    let pc = partition_complex(n)?;
    let c = pc.boundary.augmented_chain_complex(crate::linalg::Coeff::Z)?;
    let degree = n as i64 - 3;
    let basis = homology_at_with_basis(&c.boundary(degree + 1), &c.boundary(degree))?;
    if !basis.invariants.torsion.is_empty() {
        return Err(Error::Internal("boundary homology has torsion".into()));
    }
    let rank = basis.invariants.free_rank;
    let deg = degree as usize;
    let mut gens = Vec::new();
    for gi in 0..n - 1 {
        let s = Permutation::adjacent(n, gi);
        let act = pc.boundary_action.matrix(&s, deg);
        let mut m = IntMatrix::zero(rank, rank);
        for col in 0..rank {
            let moved = act.apply(&basis.free_gens.col(col).clone());
            let (coords, tors) = basis.project(&moved);
            debug_assert!(tors.iter().all(|t| t.is_zero()));
            for (row, v) in coords.iter().enumerate() {
                if !v.is_zero() {
                    m.add_to(row, col, v);
                }
            }
        }
        gens.push(m);
    }
    SigmaRep::new(n, rank, Side::Left, gens)
}

/// Two-sided bar complex `A (x) (Z G)^{(x) q} (x) B` for a right module `A`
/// and left module `B` over the same symmetric group, through tensor degree
/// `q_max + 1`; its homology is `Tor_q`.
pub fn tor_sigma(
    a: &SigmaRep,
    b: &SigmaRep,
    q_max: usize,
    normalized: bool,
) -> crate::Result<Vec<AbelianGroupInvariants>> {
    if a.n != b.n {
        return Err(Error::Dimension("Tor factors over different groups".into()));
    }
    if a.side != Side::Right || b.side != Side::Left {
        return Err(Error::BadRepresentation(
            "tor_sigma expects (right, left) module sides".into(),
        ));
    }
    let complex = bar_complex(a, b, q_max + 1, normalized)?;
    let mut out = Vec::new();
    for q in 0..=q_max {
        out.push(homology_at(
            &complex.boundary(q as i64 + 1),
            &complex.boundary(q as i64),
        )?);
    }
    Ok(out)
}

/// The underlying chain complex of the two-sided bar construction.
pub fn bar_complex(
    a: &SigmaRep,
    b: &SigmaRep,
    deg_max: usize,
    normalized: bool,
) -> crate::Result<crate::linalg::ChainComplex> {
    let n = a.n;
    let group = enumerate(n);
    let letters: Vec<Permutation> = if normalized {
        group.iter().filter(|g| !g.is_identity()).cloned().collect()
    } else {
        group.clone()
    };
    let letter_index: BTreeMap<&Permutation, usize> =
        letters.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let nl = letters.len();
    // tuples in degree q: nl^q, indexed mixed-radix
    let tuple_count = |q: usize| nl.checked_pow(q as u32).unwrap();
    let rank_of = |q: usize| a.rank * tuple_count(q) * b.rank;
    let decode = |mut t: usize, q: usize| -> Vec<usize> {
        let mut out = vec![0; q];
        for slot in (0..q).rev() {
            out[slot] = t % nl;
            t /= nl;
        }
        out
    };
    let encode = |digits: &[usize]| -> usize {
        digits.iter().fold(0, |acc, &d| acc * nl + d)
    };
    let mut ranks = Vec::new();
    let mut boundaries = Vec::new();
    for q in 0..=deg_max {
        let rank = rank_of(q);
        ranks.push(rank);
        if q == 0 {
            boundaries.push(IntMatrix::zero(0, rank));
            continue;
        }
        let prev = rank_of(q - 1);
        let mut d = IntMatrix::zero(prev, rank);
        for t in 0..tuple_count(q) {
            let digits = decode(t, q);
            // face 0: act on a by g_1
            let rho_a = a.matrix(&letters[digits[0]]);
            let rest = encode(&digits[1..]);
            for ai in 0..a.rank {
                for bi in 0..b.rank {
                    let col = (ai * tuple_count(q) + t) * b.rank + bi;
                    for aj in 0..a.rank {
                        let v = rho_a.get(aj, ai);
                        if !v.is_zero() {
                            d.add_to((aj * tuple_count(q - 1) + rest) * b.rank + bi, col, &v);
                        }
                    }
                }
            }
            // middle faces: merge adjacent letters
            for i in 1..q {
                let merged = letters[digits[i - 1]].compose(&letters[digits[i]]);
                let sign = if i % 2 == 0 { 1i64 } else { -1 };
                let keep: Option<usize> = if normalized {
                    if merged.is_identity() {
                        None
                    } else {
                        Some(letter_index[&merged])
                    }
                } else {
                    Some(letter_index[&merged])
                };
                if let Some(mi) = keep {
                    let mut nd: Vec<usize> = Vec::with_capacity(q - 1);
                    nd.extend_from_slice(&digits[..i - 1]);
                    nd.push(mi);
                    nd.extend_from_slice(&digits[i + 1..]);
                    let rest = encode(&nd);
                    for ai in 0..a.rank {
                        for bi in 0..b.rank {
                            let col = (ai * tuple_count(q) + t) * b.rank + bi;
                            d.add_to(
                                (ai * tuple_count(q - 1) + rest) * b.rank + bi,
                                col,
                                &BigInt::from(sign),
                            );
                        }
                    }
                }
            }
            // last face: act on b by g_q
            let rho_b = b.matrix(&letters[digits[q - 1]]);
            let sign = if q % 2 == 0 { 1i64 } else { -1 };
            let rest = encode(&digits[..q - 1]);
            for ai in 0..a.rank {
                for bi in 0..b.rank {
                    let col = (ai * tuple_count(q) + t) * b.rank + bi;
                    for bj in 0..b.rank {
                        let v = rho_b.get(bj, bi);
                        if !v.is_zero() {
                            d.add_to(
                                (ai * tuple_count(q - 1) + rest) * b.rank + bj,
                                col,
                                &(v * BigInt::from(sign)),
                            );
                        }
                    }
                }
            }
        }
        boundaries.push(d);
    }
    crate::linalg::ChainComplex::new(crate::linalg::Coeff::Z, 0, ranks, boundaries)
}

/// `Ext^q` over the group ring from the free resolution dual: cochains are
/// `Hom(reduced-tuples (x) A, B)` for left modules `A`, `B`.
pub fn ext_sigma(
    a: &SigmaRep,
    b: &SigmaRep,
    q_max: usize,
) -> crate::Result<Vec<AbelianGroupInvariants>> {
    if a.n != b.n {
        return Err(Error::Dimension("Ext factors over different groups".into()));
    }
    if a.side != Side::Left || b.side != Side::Left {
        return Err(Error::BadRepresentation(
            "ext_sigma expects left modules".into(),
        ));
    }
    let n = a.n;
    let letters: Vec<Permutation> = enumerate(n)
        .into_iter()
        .filter(|g| !g.is_identity())
        .collect();
    let nl = letters.len();
    let tuple_count = |q: usize| nl.checked_pow(q as u32).unwrap();
    let rank_of = |q: usize| tuple_count(q) * a.rank * b.rank;
    let decode = |mut t: usize, q: usize| -> Vec<usize> {
        let mut out = vec![0; q];
        for slot in (0..q).rev() {
            out[slot] = t % nl;
            t /= nl;
        }
        out
    };
    let letter_index: BTreeMap<&Permutation, usize> =
        letters.iter().enumerate().map(|(i, g)| (g, i)).collect();
    // cochain differential: (delta phi)([g_1|..|g_q] (x) x) =
    //   g_1 . phi([g_2|..] (x) x)
    //   + sum (-1)^i phi([..|g_i g_{i+1}|..] (x) x)
    //   + (-1)^q phi([g_1|..|g_{q-1}] (x) g_q . x)
    let mut deltas: Vec<IntMatrix> = Vec::new();
    for q in 1..=q_max + 1 {
        let rows = rank_of(q);
        let cols = rank_of(q - 1);
        let mut m = IntMatrix::zero(rows, cols);
        for t in 0..tuple_count(q) {
            let digits = decode(t, q);
            let rho_b = b.matrix(&letters[digits[0]]);
            let rest: usize = digits[1..].iter().fold(0, |acc, &d| acc * nl + d);
            for ai in 0..a.rank {
                for bi in 0..b.rank {
                    let row_base = (t * a.rank + ai) * b.rank;
                    for bj in 0..b.rank {
                        let v = rho_b.get(bi, bj);
                        if !v.is_zero() {
                            m.add_to(row_base + bi, (rest * a.rank + ai) * b.rank + bj, &v);
                        }
                    }
                }
            }
            for i in 1..q {
                let merged = letters[digits[i - 1]].compose(&letters[digits[i]]);
                if merged.is_identity() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1i64 } else { -1 };
                let mi = letter_index[&merged];
                let mut nd: Vec<usize> = Vec::with_capacity(q - 1);
                nd.extend_from_slice(&digits[..i - 1]);
                nd.push(mi);
                nd.extend_from_slice(&digits[i + 1..]);
                let rest: usize = nd.iter().fold(0, |acc, &d| acc * nl + d);
                for ai in 0..a.rank {
                    for bi in 0..b.rank {
                        m.add_to(
                            (t * a.rank + ai) * b.rank + bi,
                            (rest * a.rank + ai) * b.rank + bi,
                            &BigInt::from(sign),
                        );
                    }
                }
            }
            let rho_a = a.matrix(&letters[digits[q - 1]]);
            let sign = if q % 2 == 0 { 1i64 } else { -1 };
            let rest: usize = digits[..q - 1].iter().fold(0, |acc, &d| acc * nl + d);
            for ai in 0..a.rank {
                for aj in 0..a.rank {
                    // phi evaluated on g_q . e_ai picks up rho_a[aj, ai]
                    let v = rho_a.get(aj, ai);
                    if v.is_zero() {
                        continue;
                    }
                    for bi in 0..b.rank {
                        m.add_to(
                            (t * a.rank + ai) * b.rank + bi,
                            (rest * a.rank + aj) * b.rank + bi,
                            &(&v * BigInt::from(sign)),
                        );
                    }
                }
            }
        }
        deltas.push(m);
    }
    // assemble as a negated-degree chain complex and read cohomology
    let mut ranks = Vec::new();
    let mut bds = Vec::new();
    for q in (0..=q_max + 1).rev() {
        ranks.push(rank_of(q));
        if q == q_max + 1 {
            bds.push(IntMatrix::zero(0, rank_of(q)));
        } else {
            bds.push(deltas[q].clone());
        }
    }
    let cc = crate::linalg::ChainComplex::new(
        crate::linalg::Coeff::Z,
        -(q_max as i64 + 1),
        ranks,
        bds,
    )?;
    let h = crate::linalg::homology(&cc);
    Ok((0..=q_max).map(|q| h[&-(q as i64)].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_sign_characters() {
        let t = SigmaRep::trivial(3, 1);
        assert_eq!(t.character(), vec![1.into(), 1.into(), 1.into()]);
        let s = SigmaRep::sign(3);
        // classes in partitions_of(3) order: [3], [2,1], [1,1,1]
        assert_eq!(s.character(), vec![1.into(), (-1).into(), 1.into()]);
    }

    #[test]
    fn regular_character() {
        let r = SigmaRep::regular(3);
        assert_eq!(r.character(), vec![0.into(), 0.into(), 6.into()]);
    }

    #[test]
    fn bad_generators_rejected() {
        let m = IntMatrix::from_rows(vec![vec![1, 1], vec![0, 1]]);
        assert!(SigmaRep::new(2, 2, Side::Left, vec![m]).is_err());
    }

    #[test]
    fn superlie_small_ranks() {
        assert_eq!(superlie(1).unwrap().rank, 1);
        assert_eq!(superlie(2).unwrap().rank, 1);
        assert_eq!(superlie(3).unwrap().rank, 2);
        assert_eq!(superlie(4).unwrap().rank, 6);
    }

    #[test]
    fn superlie_3_character() {
        // sign-twisted two-dimensional module: character (2, 0, -1)
        let s = superlie(3).unwrap();
        let chi = s.character();
        assert_eq!(chi[2], 2.into()); // identity class [1,1,1]
        assert_eq!(chi[1], 0.into()); // transpositions [2,1]
        assert_eq!(chi[0], (-1).into()); // 3-cycles [3]
    }

    #[test]
    fn superlie_restriction_is_regular() {
        for n in 2..=4 {
            let s = superlie(n).unwrap();
            let r = s.restrict().unwrap();
            let chi = r.character();
            let classes = partitions_of(n - 1);
            for (ct, val) in classes.iter().zip(&chi) {
                let expected: BigInt = if ct.iter().all(|&c| c == 1) {
                    factorial_big(n - 1)
                } else {
                    0.into()
                };
                assert_eq!(*val, expected, "class {ct:?} of degree {}", n - 1);
            }
        }
    }

    fn factorial_big(n: usize) -> BigInt {
        (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
    }

    #[test]
    fn induce_trivial_is_regular() {
        let ind = induce(&SigmaRep::trivial(1, 1), 3).unwrap();
        assert_eq!(ind.rank, 6);
        assert_eq!(ind.character(), SigmaRep::regular(3).character());
    }

    #[test]
    fn restrict_regular_gives_coset_copies() {
        let r = SigmaRep::regular(3).restrict().unwrap();
        // three copies of the regular representation of degree 2
        assert_eq!(r.character(), vec![0.into(), 6.into()]);
    }

    #[test]
    fn frobenius_spot_check() {
        // induced character: chi_ind(g) = sum over cosets fixed by g
        let m = SigmaRep::sign(2);
        let ind = induce(&m, 4).unwrap();
        assert_eq!(ind.rank, 12);
        let chi = ind.character();
        // degree-4 classes: [4], [3,1], [2,2], [2,1,1], [1^4]
        let classes = partitions_of(4);
        for (ct, v) in classes.iter().zip(&chi) {
            // direct Frobenius formula over all group elements
            let sub: Vec<Permutation> = enumerate(2).into_iter().collect();
            let big: Vec<Permutation> = enumerate(4).into_iter().collect();
            let g = class_representative(ct);
            let mut total = BigInt::from(0);
            for x in &big {
                let conj = x.inverse().compose(&g).compose(x);
                // in subgroup iff fixes letters 2,3
                if conj.apply(2) == 2 && conj.apply(3) == 3 {
                    let h = Permutation::from_images(conj.images()[..2].to_vec()).unwrap();
                    let chi_h = if h.is_identity() {
                        BigInt::from(1)
                    } else {
                        BigInt::from(-1)
                    };
                    total += chi_h;
                }
                let _ = sub.len();
            }
            assert_eq!(v.clone() * BigInt::from(2), total, "class {ct:?}");
        }
    }

    #[test]
    fn tor_of_order_two_group() {
        // group homology of the two-element group: Z, Z/2, 0, Z/2
        let a = SigmaRep::trivial(2, 1).flip_side();
        let b = SigmaRep::trivial(2, 1);
        let tor = tor_sigma(&a, &b, 3, true).unwrap();
        assert_eq!(tor[0], AbelianGroupInvariants::free(1));
        assert_eq!(tor[1].torsion, vec![BigInt::from(2)]);
        assert_eq!(tor[1].free_rank, 0);
        assert!(tor[2].is_zero());
        assert_eq!(tor[3].torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn tor_normalized_equals_unnormalized() {
        let a = SigmaRep::sign(2).flip_side();
        let b = SigmaRep::trivial(2, 1);
        let t1 = tor_sigma(&a, &b, 2, true).unwrap();
        let t2 = tor_sigma(&a, &b, 2, false).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn tor_with_free_module_concentrated_in_zero() {
        let a = SigmaRep::regular(3).flip_side();
        let b = SigmaRep::trivial(3, 1);
        let tor = tor_sigma(&a, &b, 2, true).unwrap();
        assert_eq!(tor[0], AbelianGroupInvariants::free(1));
        assert!(tor[1].is_zero());
        assert!(tor[2].is_zero());
    }

    #[test]
    fn ext_into_regular_concentrated_in_zero() {
        let s = superlie(3).unwrap();
        let reg = SigmaRep::regular(3);
        let ext = ext_sigma(&s, &reg, 2).unwrap();
        assert_eq!(ext[0], AbelianGroupInvariants::free(2));
        assert!(ext[1].is_zero());
        assert!(ext[2].is_zero());
    }

    #[test]
    fn shapiro_for_induced_modules() {
        // Tor over the big group with an induced module matches Tor over
        // the subgroup with the original module
        let m = SigmaRep::trivial(2, 1);
        let ind = induce(&m, 3).unwrap();
        let s3 = superlie(3).unwrap().flip_side();
        let tor_big = tor_sigma(&s3, &ind, 2, true).unwrap();
        let s3_res = superlie(3).unwrap().restrict().unwrap().flip_side();
        let tor_small = tor_sigma(&s3_res, &m, 2, true).unwrap();
        assert_eq!(tor_big, tor_small);
    }
}
