//! Homology of integer chain complexes: isomorphism invariants and, where
//! needed, explicit cycle bases with projection maps.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

use super::smith::{rank_and_torsion, smith, Track};
use super::{AbelianGroupInvariants, ChainComplex, Coeff, IntMatrix};
use crate::Error;

/// `ker(d_out) / im(d_in)` as an abstract group. Requires `d_out . d_in = 0`.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> crate::Result<AbelianGroupInvariants> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Dimension(format!(
            "homology_at: d_out is {}x{}, d_in is {}x{}",
            d_out.rows(),
            d_out.cols(),
            d_in.rows(),
            d_in.cols()
        )));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotAComplex { degree: 0 });
    }
    let (r_out, _) = rank_and_torsion(d_out);
    let (r_in, torsion) = rank_and_torsion(d_in);
    let ambient = d_out.cols();
    Ok(AbelianGroupInvariants {
        free_rank: ambient - r_out - r_in,
        torsion,
    })
}

/// Explicit presentation of a homology group: cycle representatives for the
/// free and torsion generators, plus an integral projection sending a cycle
/// to its coordinates in those generators.
pub struct HomologyBasis {
    pub invariants: AbelianGroupInvariants,
    /// columns = free generators (ambient coordinates)
    pub free_gens: IntMatrix,
    /// columns = torsion generators, paired with their orders
    pub torsion_gens: Vec<(BigInt, BTreeMap<u32, BigInt>)>,
    /// rows = free coordinates of a cycle
    proj_free: IntMatrix,
    /// rows = torsion coordinates (read mod the paired order)
    proj_torsion: IntMatrix,
}

impl HomologyBasis {
    /// Coordinates of a cycle: free part exact, torsion part reduced mod the
    /// generator orders. Errors if the vector is not a cycle of this degree.
    pub fn project(&self, cycle: &BTreeMap<u32, BigInt>) -> (Vec<BigInt>, Vec<BigInt>) {
        let free = apply_rows(&self.proj_free, cycle);
        let mut tors = apply_rows(&self.proj_torsion, cycle);
        for (t, (d, _)) in tors.iter_mut().zip(&self.torsion_gens) {
            *t = ((&*t % d) + d) % d;
        }
        (free, tors)
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.free_rank
    }
}

fn apply_rows(m: &IntMatrix, vec: &BTreeMap<u32, BigInt>) -> Vec<BigInt> {
    // m.apply computes m * vec; here vec is a column vector
    let result = m.apply(vec);
    let mut out = vec![BigInt::zero(); m.rows()];
    for (r, v) in result {
        out[r as usize] = v;
    }
    out
}

/// `ker(d_out)/im(d_in)` with explicit generators and projection.
pub fn homology_at_with_basis(
    d_in: &IntMatrix,
    d_out: &IntMatrix,
) -> crate::Result<HomologyBasis> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::Dimension("homology_at_with_basis".into()));
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(Error::NotAComplex { degree: 0 });
    }
    let ambient = d_out.cols();
    let s_out = smith(d_out, Track::v_and_vinv());
    let v = s_out.v.unwrap();
    let v_inv = s_out.v_inv.unwrap();
    let kernel_cols: Vec<usize> = (s_out.rank..ambient).collect();
    let kernel_basis = v.select_cols(&kernel_cols); // ambient x k
    let kernel_proj = v_inv.select_rows(&kernel_cols); // k x ambient
    let k = kernel_cols.len();

    // coordinates of the image inside the kernel lattice
    let coords = kernel_proj.mul(d_in); // k x m
    {
        // sanity: the non-kernel coordinates of im(d_in) must vanish
        let top = v_inv
            .select_rows(&(0..s_out.rank).collect::<Vec<_>>())
            .mul(d_in);
        if !top.is_zero() {
            return Err(Error::Internal(
                "image does not lie in the kernel lattice".into(),
            ));
        }
    }
    let s_b = smith(&coords, Track::u_and_uinv());
    let u_b = s_b.u.unwrap();
    let u_b_inv = s_b.u_inv.unwrap();
    // adapted kernel basis: image lattice = span(d_i * e_i)
    let adapted = kernel_basis.mul(&u_b_inv); // ambient x k
    let coords_adapted = u_b.mul(&kernel_proj); // k x ambient

    let mut free_cols = Vec::new();
    let mut torsion = Vec::new();
    let mut free_rows = Vec::new();
    let mut torsion_rows = Vec::new();
    for i in 0..k {
        if i < s_b.rank {
            let d = s_b.diag[i].abs();
            if d > BigInt::from(1) {
                torsion.push((d, adapted.col(i).clone()));
                torsion_rows.push(i);
            }
        } else {
            free_cols.push(i);
            free_rows.push(i);
        }
    }
    let invariants = AbelianGroupInvariants {
        free_rank: free_cols.len(),
        torsion: torsion.iter().map(|(d, _)| d.clone()).collect(),
    };
    Ok(HomologyBasis {
        invariants,
        free_gens: adapted.select_cols(&free_cols),
        torsion_gens: torsion,
        proj_free: coords_adapted.select_rows(&free_rows),
        proj_torsion: coords_adapted.select_rows(&torsion_rows),
    })
}

/// Homology of a complex in every degree, honoring the coefficient tag.
/// Over `Q` and `F_p` the result is the dimension (torsion-free by nature).
pub fn homology(c: &ChainComplex) -> BTreeMap<i64, AbelianGroupInvariants> {
    let mut out = BTreeMap::new();
    if c.min_degree() > c.max_degree() {
        return out;
    }
    match c.coeff {
        Coeff::Z | Coeff::Q => {
            let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
            let mut torsions: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
            for d in c.degrees() {
                let (r, t) = rank_and_torsion(&c.boundary(d));
                ranks.insert(d, r);
                torsions.insert(d, t);
            }
            for d in c.degrees() {
                let r_out = *ranks.get(&d).unwrap_or(&0);
                let r_in = *ranks.get(&(d + 1)).unwrap_or(&0);
                let torsion = if c.coeff == Coeff::Z {
                    torsions.get(&(d + 1)).cloned().unwrap_or_default()
                } else {
                    Vec::new()
                };
                out.insert(
                    d,
                    AbelianGroupInvariants {
                        free_rank: c.rank(d) - r_out - r_in,
                        torsion,
                    },
                );
            }
        }
        Coeff::Fp(p) => {
            let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
            for d in c.degrees() {
                ranks.insert(d, c.boundary(d).rank_mod_p(p));
            }
            for d in c.degrees() {
                let r_out = *ranks.get(&d).unwrap_or(&0);
                let r_in = *ranks.get(&(d + 1)).unwrap_or(&0);
                out.insert(
                    d,
                    AbelianGroupInvariants::free(c.rank(d) - r_out - r_in),
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_rank_of_zero_maps() {
        let d_in = IntMatrix::zero(5, 0);
        let d_out = IntMatrix::zero(0, 5);
        let h = homology_at(&d_in, &d_out).unwrap();
        assert_eq!(h, AbelianGroupInvariants::free(5));
    }

    #[test]
    fn z_mod_2() {
        // 0 -> Z -2-> Z -> 0: homology at target = Z/2
        let d_in = IntMatrix::from_rows(vec![vec![2]]);
        let d_out = IntMatrix::zero(0, 1);
        let h = homology_at(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, 0);
        assert_eq!(h.torsion, vec![BigInt::from(2)]);
    }

    #[test]
    fn circle_complex() {
        // two vertices a,b; two edges x,y with dx = dy = b - a
        let d1 = IntMatrix::from_rows(vec![vec![-1, -1], vec![1, 1]]);
        let c = ChainComplex::new(
            Coeff::Z,
            0,
            vec![2, 2],
            vec![IntMatrix::zero(0, 2), d1],
        )
        .unwrap();
        let h = homology(&c);
        assert_eq!(h[&0], AbelianGroupInvariants::free(1));
        assert_eq!(h[&1], AbelianGroupInvariants::free(1));
    }

    #[test]
    fn basis_projection_roundtrip() {
        // RP^2-like: d2 = [[2],[0]] into rank-2 degree-1 with d1 = 0
        let d2 = IntMatrix::from_rows(vec![vec![2], vec![0]]);
        let d1 = IntMatrix::zero(0, 2);
        let basis = homology_at_with_basis(&d2, &d1).unwrap();
        assert_eq!(basis.invariants.free_rank, 1);
        assert_eq!(basis.invariants.torsion, vec![BigInt::from(2)]);
        // the torsion generator projects to coordinate 1 of itself
        let (_, gen) = &basis.torsion_gens[0];
        let (f, t) = basis.project(gen);
        assert!(f.iter().all(|x| x.is_zero()));
        assert_eq!(t, vec![BigInt::from(1)]);
        // free generator
        let g = basis.free_gens.col(0).clone();
        let (f, t) = basis.project(&g);
        assert_eq!(f, vec![BigInt::from(1)]);
        assert!(t.iter().all(|x| x.is_zero()));
    }
}
