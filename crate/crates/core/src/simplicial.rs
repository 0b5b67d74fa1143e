//! Finite semi-simplicial sets built from nondegenerate simplices: nerves of
//! finite posets and of indiscrete groupoids, chain complexes (plain,
//! augmented, equivariant), products and quotients.
//!
//! Only nondegenerate simplices are stored. A face of a nondegenerate
//! simplex may be degenerate; such faces are recorded as `None` and
//! contribute zero to the normalized boundary.
//!
//! Cochain complexes are represented as chain complexes on negated degrees:
//! degree `-q` holds the `q`-cochains, so the boundary map runs
//! `-q -> -q-1` and `cohomology` reads homology back with flipped keys.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{homology, AbelianGroupInvariants, ChainComplex, Coeff, IntMatrix};
use crate::perm::Permutation;
use crate::Error;

/// A finite semi-simplicial set. `labels[k]` lists the nondegenerate
/// `k`-simplices; `faces[k][s][i]` is the `i`-th face of simplex `s`
/// (`None` when that face is degenerate).
#[derive(Clone, Debug)]
pub struct SemiSimplicialSet {
    pub labels: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<Option<usize>>>>,
}

impl SemiSimplicialSet {
    pub fn empty() -> Self {
        SemiSimplicialSet {
            labels: vec![],
            faces: vec![],
        }
    }

    pub fn dim(&self) -> i64 {
        self.labels.len() as i64 - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.labels.get(k).map_or(0, |v| v.len())
    }

    pub fn total_simplices(&self) -> usize {
        self.labels.iter().map(|v| v.len()).sum()
    }

    /// Verify the face identities `d_i d_j = d_{j-1} d_i` (i < j) wherever
    /// both composites pass through nondegenerate simplices.
    pub fn check_face_identities(&self) -> crate::Result<()> {
        for k in 2..self.labels.len() {
            for s in 0..self.labels[k].len() {
                for j in 1..=k {
                    for i in 0..j {
                        let left = self.faces[k][s][j].and_then(|t| self.faces[k - 1][t][i]);
                        let right = self.faces[k][s][i].and_then(|t| self.faces[k - 1][t][j - 1]);
                        if let (Some(a), Some(b)) = (left, right) {
                            if a != b {
                                return Err(Error::Internal(format!(
                                    "face identity fails on {k}-simplex {s} at (i,j)=({i},{j})"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Normalized chain complex; degenerate faces contribute zero.
    pub fn chain_complex(&self, coeff: Coeff) -> crate::Result<ChainComplex> {
        self.chain_complex_inner(coeff, false)
    }

    /// Augmented chain complex: a rank-one group in degree `-1` receives
    /// every vertex, so homology is reduced. The empty set yields the
    /// complex whose degree `-1` homology is the ground ring.
    pub fn augmented_chain_complex(&self, coeff: Coeff) -> crate::Result<ChainComplex> {
        self.chain_complex_inner(coeff, true)
    }

    fn chain_complex_inner(&self, coeff: Coeff, augmented: bool) -> crate::Result<ChainComplex> {
        self.check_face_identities()?;
        let (min_degree, mut ranks, mut boundaries) = if augmented {
            (-1i64, vec![1usize], vec![IntMatrix::zero(0, 1)])
        } else {
            (0i64, Vec::new(), Vec::new())
        };
        for k in 0..self.labels.len() {
            let n = self.count(k);
            if k == 0 {
                if augmented {
                    let mut d = IntMatrix::zero(1, n);
                    for s in 0..n {
                        d.set(0, s, 1.into());
                    }
                    ranks.push(n);
                    boundaries.push(d);
                } else {
                    ranks.push(n);
                    boundaries.push(IntMatrix::zero(0, n));
                }
                continue;
            }
            let prev = self.count(k - 1);
            let mut d = IntMatrix::zero(prev, n);
            for s in 0..n {
                for (i, face) in self.faces[k][s].iter().enumerate() {
                    if let Some(t) = face {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        d.add_to(*t, s, &sign.into());
                    }
                }
            }
            ranks.push(n);
            boundaries.push(d);
        }
        let mut c = ChainComplex::new(coeff, min_degree, ranks, boundaries)?;
        c.augmented = augmented;
        Ok(c)
    }
}

/// A group action on the basis of a complex: for each adjacent-transposition
/// generator, a signed basis permutation per degree.
#[derive(Clone, Debug)]
pub struct SignedAction {
    pub degree_of_group: usize,
    /// `generators[g][k][b] = (image, sign)` in degree `k`
    pub generators: Vec<Vec<Vec<(usize, i64)>>>,
}

impl SignedAction {
    /// Action of an arbitrary permutation on the degree-`k` basis. All
    /// actions in this crate are left actions presented on involution
    /// generators, so the word is applied innermost-first.
    pub fn permutation_action(&self, p: &Permutation, k: usize) -> Vec<(usize, i64)> {
        let n = if self.generators.is_empty() {
            // trivial group; identity action
            return Vec::new();
        } else {
            self.generators[0][k].len()
        };
        let mut current: Vec<(usize, i64)> = (0..n).map(|i| (i, 1)).collect();
        for gi in p.adjacent_word().into_iter().rev() {
            let gen = &self.generators[gi][k];
            for entry in current.iter_mut() {
                let (img, s) = gen[entry.0];
                *entry = (img, entry.1 * s);
            }
        }
        current
    }

    /// The matrix of `p` acting in degree `k` (columns map to signed rows).
    pub fn matrix(&self, p: &Permutation, k: usize) -> IntMatrix {
        let img = self.permutation_action(p, k);
        let n = img.len();
        let mut m = IntMatrix::zero(n, n);
        for (src, &(dst, sign)) in img.iter().enumerate() {
            m.set(dst, src, sign.into());
        }
        m
    }

    /// Check the action commutes with the boundary (degrees `0..ranks`).
    pub fn check_equivariance(&self, c: &ChainComplex) -> crate::Result<()> {
        let n = self.degree_of_group;
        for gi in 0..n.saturating_sub(1) {
            let p = Permutation::adjacent(n, gi);
            for k in 1..self.generators[gi].len() {
                let deg = k as i64;
                let d = c.boundary(deg);
                let a_k = self.matrix(&p, k);
                let a_km1 = self.matrix(&p, k - 1);
                if a_km1.mul(&d) != d.mul(&a_k) {
                    return Err(Error::Internal(format!(
                        "action does not commute with the boundary in degree {deg}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Nerve of a finite strict poset, truncated at `max_dim`: `k`-simplices are
/// strictly increasing chains of `k+1` elements. The relation is given as
/// pairs `(i, j)` meaning `elements[i] < elements[j]`; its transitive
/// closure must be irreflexive.
pub fn nerve_of_poset(
    elements: &[String],
    relation: &[(usize, usize)],
    max_dim: usize,
) -> crate::Result<SemiSimplicialSet> {
    let chains = poset_chains(elements.len(), relation, max_dim)?;
    build_from_chains(elements, &chains)
}

fn poset_chains(
    n: usize,
    relation: &[(usize, usize)],
    max_dim: usize,
) -> crate::Result<Vec<Vec<Vec<usize>>>> {
    let mut less = vec![vec![false; n]; n];
    for &(a, b) in relation {
        if a >= n || b >= n {
            return Err(Error::OutOfRange("relation index out of range".into()));
        }
        less[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if less[i][k] {
                for j in 0..n {
                    if less[k][j] {
                        less[i][j] = true;
                    }
                }
            }
        }
    }
    for (i, row) in less.iter().enumerate() {
        if row[i] {
            return Err(Error::CyclicRelation);
        }
    }
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    if n == 0 {
        return Ok(chains);
    }
    chains.push((0..n).map(|i| vec![i]).collect());
    for k in 1..=max_dim {
        let mut next = Vec::new();
        for chain in &chains[k - 1] {
            let last = *chain.last().unwrap();
            for j in 0..n {
                if less[last][j] {
                    let mut c = chain.clone();
                    c.push(j);
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        chains.push(next);
    }
    Ok(chains)
}

fn build_from_chains(
    elements: &[String],
    chains: &[Vec<Vec<usize>>],
) -> crate::Result<SemiSimplicialSet> {
    let mut index: Vec<HashMap<&[usize], usize>> = Vec::new();
    for level in chains {
        let mut m = HashMap::new();
        for (i, c) in level.iter().enumerate() {
            m.insert(c.as_slice(), i);
        }
        index.push(m);
    }
    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for (k, level) in chains.iter().enumerate() {
        let mut lab = Vec::new();
        let mut fc = Vec::new();
        for chain in level {
            lab.push(
                chain
                    .iter()
                    .map(|&i| elements[i].clone())
                    .collect::<Vec<_>>()
                    .join("<"),
            );
            if k == 0 {
                fc.push(Vec::new());
            } else {
                let mut f = Vec::with_capacity(k + 1);
                for i in 0..=k {
                    let mut sub = chain.clone();
                    sub.remove(i);
                    f.push(Some(index[k - 1][sub.as_slice()]));
                }
                fc.push(f);
            }
        }
        labels.push(lab);
        faces.push(fc);
    }
    let s = SemiSimplicialSet { labels, faces };
    s.check_face_identities()?;
    Ok(s)
}

/// Nerve of a poset together with a symmetric-group action induced by
/// automorphisms of the element set: `element_action[g][e]` is the image of
/// element `e` under the `g`-th adjacent transposition.
pub fn nerve_of_poset_with_action(
    elements: &[String],
    relation: &[(usize, usize)],
    max_dim: usize,
    group_degree: usize,
    element_action: &[Vec<usize>],
) -> crate::Result<(SemiSimplicialSet, SignedAction)> {
    let chains = poset_chains(elements.len(), relation, max_dim)?;
    let nerve = build_from_chains(elements, &chains)?;
    let mut index: Vec<HashMap<&[usize], usize>> = Vec::new();
    for level in &chains {
        let mut m = HashMap::new();
        for (i, c) in level.iter().enumerate() {
            m.insert(c.as_slice(), i);
        }
        index.push(m);
    }
    let mut generators = Vec::new();
    for g in element_action.iter().take(group_degree.saturating_sub(1)) {
        let mut per_degree = Vec::new();
        for (k, level) in chains.iter().enumerate() {
            let mut images = Vec::with_capacity(level.len());
            for chain in level {
                // poset automorphisms preserve the order, so chains map to
                // chains with no reordering: sign +1
                let image: Vec<usize> = chain.iter().map(|&e| g[e]).collect();
                let target = *index[k].get(image.as_slice()).ok_or_else(|| {
                    Error::Internal("group action does not preserve the nerve".into())
                })?;
                images.push((target, 1i64));
            }
            per_degree.push(images);
        }
        generators.push(per_degree);
    }
    Ok((
        nerve,
        SignedAction {
            degree_of_group: group_degree,
            generators,
        },
    ))
}

/// Classifying-space model with free symmetric group action: the nerve of
/// the indiscrete groupoid on the `k!` orderings, truncated at dimension
/// `p`. Nondegenerate `q`-simplices are `(q+1)`-tuples of orderings with
/// distinct consecutive entries; the group acts freely by composition.
pub fn nerve_of_groupoid_skeleton(
    k: usize,
    p: usize,
) -> crate::Result<(SemiSimplicialSet, SignedAction)> {
    let perms = crate::perm::enumerate(k);
    let nperm = perms.len();
    let perm_index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let mut tuples: Vec<Vec<Vec<usize>>> = Vec::new();
    tuples.push((0..nperm).map(|i| vec![i]).collect());
    for q in 1..=p {
        let mut next = Vec::new();
        for t in &tuples[q - 1] {
            let last = *t.last().unwrap();
            for i in 0..nperm {
                if i != last {
                    let mut t2 = t.clone();
                    t2.push(i);
                    next.push(t2);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        tuples.push(next);
    }
    let mut index: Vec<HashMap<&[usize], usize>> = Vec::new();
    for level in &tuples {
        let mut m = HashMap::new();
        for (i, t) in level.iter().enumerate() {
            m.insert(t.as_slice(), i);
        }
        index.push(m);
    }
    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for (q, level) in tuples.iter().enumerate() {
        let mut lab = Vec::new();
        let mut fc = Vec::new();
        for t in level {
            lab.push(
                t.iter()
                    .map(|&i| {
                        perms[i]
                            .images()
                            .iter()
                            .map(|x| (x + 1).to_string())
                            .collect::<String>()
                    })
                    .collect::<Vec<_>>()
                    .join("|"),
            );
            if q == 0 {
                fc.push(Vec::new());
            } else {
                let mut f = Vec::with_capacity(q + 1);
                for i in 0..=q {
                    let mut sub = t.clone();
                    sub.remove(i);
                    let degenerate = sub.windows(2).any(|w| w[0] == w[1]);
                    f.push(if degenerate {
                        None
                    } else {
                        Some(index[q - 1][sub.as_slice()])
                    });
                }
                fc.push(f);
            }
        }
        labels.push(lab);
        faces.push(fc);
    }
    let mut generators = Vec::new();
    for gi in 0..k.saturating_sub(1) {
        let s = Permutation::adjacent(k, gi);
        let mut per_degree = Vec::new();
        for (q, level) in tuples.iter().enumerate() {
            let mut images = Vec::with_capacity(level.len());
            for t in level {
                let image: Vec<usize> = t
                    .iter()
                    .map(|&i| perm_index[&perms[i].compose(&s)])
                    .collect();
                images.push((index[q][image.as_slice()], 1i64));
            }
            per_degree.push(images);
        }
        generators.push(per_degree);
    }
    let nerve = SemiSimplicialSet { labels, faces };
    nerve.check_face_identities()?;
    Ok((
        nerve,
        SignedAction {
            degree_of_group: k,
            generators,
        },
    ))
}

/// Orbit data of a free action: per degree, each orbit lists
/// `(basis, group element, sign)` meaning `basis = sign * g . representative`.
pub struct OrbitData {
    pub degree_of_group: usize,
    pub orbits: Vec<Vec<Vec<(usize, Permutation, i64)>>>,
}

pub fn orbit_decomposition(action: &SignedAction, ranks: &[usize]) -> crate::Result<OrbitData> {
    let k = action.degree_of_group;
    let group = crate::perm::enumerate(k);
    let order = group.len();
    let mut orbits_per_degree = Vec::new();
    for (deg, &rank) in ranks.iter().enumerate() {
        let mut seen = vec![false; rank];
        let mut orbits = Vec::new();
        for rep in 0..rank {
            if seen[rep] {
                continue;
            }
            let mut orbit = Vec::new();
            for g in &group {
                let img = action.permutation_action(g, deg);
                let (dst, sign) = if img.is_empty() { (rep, 1) } else { img[rep] };
                orbit.push((dst, g.clone(), sign));
            }
            let mut members: Vec<usize> = orbit.iter().map(|&(b, _, _)| b).collect();
            members.sort_unstable();
            members.dedup();
            if members.len() != order {
                return Err(Error::NonFreeAction(format!(
                    "orbit of basis element {rep} in degree {deg} has size {} < {order}",
                    members.len()
                )));
            }
            for &m in &members {
                seen[m] = true;
            }
            orbits.push(orbit);
        }
        orbits_per_degree.push(orbits);
    }
    Ok(OrbitData {
        degree_of_group: k,
        orbits: orbits_per_degree,
    })
}

/// Prism product of chain complexes: the tensor product with Koszul signs;
/// cells of the product are pairs of cells.
pub fn prism_product(a: &ChainComplex, b: &ChainComplex) -> crate::Result<ChainComplex> {
    a.tensor(b)
}

/// Quotient of a complex by the span of a boundary-closed basis subset.
pub fn quotient_complex(c: &ChainComplex, sub: &[Vec<usize>]) -> crate::Result<ChainComplex> {
    c.quotient(sub)
}

/// Equivariant cochains into a representation, one block of `rank(rep)`
/// generators per free orbit. Returned on negated degrees (see module docs);
/// use [`cohomology`] to read it.
pub fn equivariant_cochains(
    c: &ChainComplex,
    action: &SignedAction,
    rep: &crate::sigma::SigmaRep,
) -> crate::Result<ChainComplex> {
    if c.min_degree() < 0 {
        return Err(Error::OutOfRange(
            "equivariant cochains expect a complex in non-negative degrees".into(),
        ));
    }
    let ranks: Vec<usize> = c.degrees().map(|d| c.rank(d)).collect();
    let orbit_data = orbit_decomposition(action, &ranks)?;
    let m_rank = rep.rank;
    let degs: Vec<i64> = c.degrees().collect();
    let nd = degs.len();
    // basis -> (orbit, g, sign) with basis = sign * g . rep_orbit
    let mut locate: Vec<HashMap<usize, (usize, Permutation, i64)>> = Vec::new();
    for orbits in &orbit_data.orbits {
        let mut map = HashMap::new();
        for (oi, orbit) in orbits.iter().enumerate() {
            for (b, g, s) in orbit {
                map.insert(*b, (oi, g.clone(), *s));
            }
        }
        locate.push(map);
    }
    let ranks_out: Vec<usize> = orbit_data
        .orbits
        .iter()
        .map(|o| o.len() * m_rank)
        .collect();
    // deltas[q]: cochains in degree q-1 -> degree q, for q = 1..nd-1
    let mut deltas: Vec<IntMatrix> = Vec::with_capacity(nd);
    deltas.push(IntMatrix::zero(0, 0)); // unused slot 0
    for qi in 1..nd {
        let d = c.boundary(degs[qi]);
        let n_orb = orbit_data.orbits[qi].len();
        let mut delta = IntMatrix::zero(n_orb * m_rank, ranks_out[qi - 1]);
        for (oi, orbit) in orbit_data.orbits[qi].iter().enumerate() {
            let rep_idx = orbit
                .iter()
                .find(|(_, g, _)| g.is_identity())
                .map(|&(b, _, _)| b)
                .expect("identity in orbit");
            // (delta phi)(rep) = phi(d rep); each boundary basis element r
            // equals sign * g . rep', so phi(r) = sign * rho(g) phi(rep')
            for (&r, coeff) in d.col(rep_idx) {
                let (target_orbit, g, sign) = &locate[qi - 1][&(r as usize)];
                let rho = rep.matrix(g);
                for a in 0..m_rank {
                    for b in 0..m_rank {
                        let v = rho.get(a, b);
                        if !v.is_zero() {
                            delta.add_to(
                                oi * m_rank + a,
                                target_orbit * m_rank + b,
                                &(coeff * v * BigInt::from(*sign)),
                            );
                        }
                    }
                }
            }
        }
        deltas.push(delta);
    }
    // negated-degree chain complex: degree -q holds cochains in degree q
    let min = -(degs[nd - 1]);
    let mut ranks_neg = Vec::with_capacity(nd);
    let mut bd_neg = Vec::with_capacity(nd);
    for i in (0..nd).rev() {
        // chain degree -degs[i]
        ranks_neg.push(ranks_out[i]);
        if i == nd - 1 {
            bd_neg.push(IntMatrix::zero(0, ranks_out[i]));
        } else {
            // boundary from degree -degs[i] to -degs[i]-1 = -degs[i+1]
            bd_neg.push(deltas[i + 1].clone());
        }
    }
    let _ = min;
    ChainComplex::new(c.coeff, -(degs[nd - 1]), ranks_neg, bd_neg)
}

/// Read a cochain complex stored on negated degrees: cohomology in degree
/// `q` is homology in degree `-q`.
pub fn cohomology(cochain: &ChainComplex) -> BTreeMap<i64, AbelianGroupInvariants> {
    homology(cochain).into_iter().map(|(d, h)| (-d, h)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::AbelianGroupInvariants;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn chain_poset_nerve_is_a_simplex() {
        let nerve = nerve_of_poset(&names(3), &[(0, 1), (1, 2)], 2).unwrap();
        assert_eq!(nerve.count(0), 3);
        assert_eq!(nerve.count(1), 3);
        assert_eq!(nerve.count(2), 1);
        let h = homology(&nerve.augmented_chain_complex(Coeff::Z).unwrap());
        assert!(h.values().all(|g| g.is_zero()));
    }

    #[test]
    fn antichain_nerve_is_discrete() {
        let nerve = nerve_of_poset(&names(3), &[], 2).unwrap();
        assert_eq!(nerve.count(0), 3);
        assert_eq!(nerve.count(1), 0);
        let h = homology(&nerve.augmented_chain_complex(Coeff::Z).unwrap());
        assert_eq!(h[&0], AbelianGroupInvariants::free(2));
    }

    #[test]
    fn cyclic_relation_rejected() {
        let r = nerve_of_poset(&names(3), &[(0, 1), (1, 2), (2, 0)], 2);
        assert!(matches!(r, Err(Error::CyclicRelation)));
    }

    #[test]
    fn empty_augmented_complex() {
        let c = SemiSimplicialSet::empty()
            .augmented_chain_complex(Coeff::Z)
            .unwrap();
        let h = homology(&c);
        assert_eq!(h[&-1], AbelianGroupInvariants::free(1));
    }

    #[test]
    fn groupoid_nerve_counts() {
        let (q2, _) = nerve_of_groupoid_skeleton(2, 0).unwrap();
        assert_eq!(q2.count(0), 2);
        let (q2, a2) = nerve_of_groupoid_skeleton(2, 1).unwrap();
        assert_eq!(q2.count(1), 2);
        assert_eq!(a2.degree_of_group, 2);
        let (q3, _) = nerve_of_groupoid_skeleton(3, 1).unwrap();
        assert_eq!(q3.count(1), 30);
    }

    #[test]
    fn groupoid_nerve_is_acyclic_below_truncation() {
        let (q, _) = nerve_of_groupoid_skeleton(2, 3).unwrap();
        let h = homology(&q.augmented_chain_complex(Coeff::Z).unwrap());
        assert!(h[&0].is_zero());
        assert!(h[&1].is_zero());
        assert!(h[&2].is_zero());
    }

    #[test]
    fn groupoid_action_is_free_with_expected_orbits() {
        let (q, a) = nerve_of_groupoid_skeleton(3, 1).unwrap();
        let ranks = vec![q.count(0), q.count(1)];
        let orbits = orbit_decomposition(&a, &ranks).unwrap();
        assert_eq!(orbits.orbits[0].len(), 1);
        assert_eq!(orbits.orbits[1].len(), 5);
        a.check_equivariance(&q.chain_complex(Coeff::Z).unwrap())
            .unwrap();
    }

    #[test]
    fn prism_point_is_identity() {
        let point = nerve_of_poset(&names(1), &[], 0)
            .unwrap()
            .chain_complex(Coeff::Z)
            .unwrap();
        let (q, _) = nerve_of_groupoid_skeleton(2, 2).unwrap();
        let b = q.chain_complex(Coeff::Z).unwrap();
        let prod = prism_product(&point, &b).unwrap();
        assert_eq!(homology(&prod), homology(&b));
    }

    #[test]
    fn quotient_by_everything_and_nothing() {
        let nerve = nerve_of_poset(&names(3), &[(0, 1), (1, 2)], 2).unwrap();
        let c = nerve.chain_complex(Coeff::Z).unwrap();
        let all: Vec<Vec<usize>> = c.degrees().map(|d| (0..c.rank(d)).collect()).collect();
        let q = quotient_complex(&c, &all).unwrap();
        assert!(q.degrees().all(|d| q.rank(d) == 0));
        let none: Vec<Vec<usize>> = c.degrees().map(|_| Vec::new()).collect();
        let q = quotient_complex(&c, &none).unwrap();
        assert_eq!(homology(&q), homology(&c));
    }

    #[test]
    fn quotient_rejects_open_subsets() {
        let nerve = nerve_of_poset(&names(3), &[(0, 1), (1, 2)], 2).unwrap();
        let c = nerve.chain_complex(Coeff::Z).unwrap();
        let sub: Vec<Vec<usize>> = vec![vec![], vec![], vec![0]];
        assert!(quotient_complex(&c, &sub).is_err());
    }
}
