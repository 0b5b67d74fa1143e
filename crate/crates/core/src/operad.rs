//! The concrete operad spaces as finite complexes: partition-poset nerves
//! with their boundary subcomplexes and face decomposition, skeleta of the
//! free classifying-space operad, and the tree-operad filtration quotients.
//!
//! Partitions are ordered by reversed refinement: the discrete partition is
//! initial, the indiscrete partition final. The nerve of the non-discrete
//! partitions models the operad space; the nerve of the non-trivial
//! partitions models its boundary.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::linalg::{
    homology, homology_at_with_basis, AbelianGroupInvariants, ChainComplex, Coeff, IntMatrix,
};
use crate::perm::Permutation;
use crate::simplicial::{
    nerve_of_groupoid_skeleton, nerve_of_poset_with_action, prism_product, SemiSimplicialSet,
    SignedAction,
};
use crate::Error;

/// A partition of `{1..n}` into disjoint nonempty blocks. Blocks are sorted
/// internally and by minimum, making the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> crate::Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidMap("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidMap(format!("bad or repeated element {x}")));
                }
                seen[x] = true;
            }
        }
        if !seen[1..=n].iter().all(|&s| s) {
            return Err(Error::InvalidMap("blocks do not cover the set".into()));
        }
        blocks.sort();
        Ok(SetPartition { n, blocks })
    }

    pub fn discrete(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        SetPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.block_count() == self.n
    }

    pub fn is_indiscrete(&self) -> bool {
        self.block_count() == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.is_discrete() || self.is_indiscrete()
    }

    /// Block index of an element (1-based elements).
    fn block_of(&self, x: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).unwrap()
    }

    /// `self` refines `other`: every block of `self` lies in a block of
    /// `other`. This is `self <= other` in the reversed-refinement order.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks[other.block_of(b[0])].iter().filter(|x| b.contains(x)).count() == b.len())
    }

    /// Common refinement (the meet in the reversed-refinement order).
    pub fn meet(&self, other: &SetPartition) -> SetPartition {
        let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for x in 1..=self.n {
            blocks
                .entry((self.block_of(x), other.block_of(x)))
                .or_default()
                .push(x);
        }
        SetPartition::new(self.n, blocks.into_values().collect()).unwrap()
    }

    /// Relabel elements by a permutation of `{1..n}` (0-based table).
    pub fn relabel(&self, p: &Permutation) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| p.apply(x - 1) + 1).collect())
            .collect();
        SetPartition::new(self.n, blocks).unwrap()
    }

    pub fn label(&self) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// All partitions of `{1..n}` via restricted-growth strings, canonical order.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    if n == 0 {
        return vec![SetPartition { n: 0, blocks: vec![] }];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().unwrap() + 1;
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        out.push(SetPartition::new(n, blocks).unwrap());
        // next restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// The partition-operad space for arity `n` as a pair of nerves with the
/// symmetric-group action: the full space (non-discrete partitions) and its
/// boundary (non-trivial partitions).
pub struct PartitionComplex {
    pub n: usize,
    pub space: SemiSimplicialSet,
    pub space_action: SignedAction,
    pub boundary: SemiSimplicialSet,
    pub boundary_action: SignedAction,
    /// partitions indexing the boundary vertices, canonical order
    pub boundary_vertices: Vec<SetPartition>,
    /// for each simplex of `space`, whether it lies in the boundary
    pub in_boundary: Vec<Vec<bool>>,
}

/// Build the nerve pair for arity `n >= 2`.
pub fn partition_complex(n: usize) -> crate::Result<PartitionComplex> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "partition complex empty by convention for arity {n} < 2"
        )));
    }
    let nontrivial: Vec<SetPartition> = all_partitions(n)
        .into_iter()
        .filter(|p| !p.is_trivial())
        .collect();
    let mut nondiscrete = nontrivial.clone();
    nondiscrete.push(SetPartition::indiscrete(n));

    let build = |elems: &[SetPartition], max_dim: usize| {
        let labels: Vec<String> = elems.iter().map(|p| p.label()).collect();
        let mut relation = Vec::new();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                if i != j && a.refines(b) {
                    relation.push((i, j));
                }
            }
        }
        let index: BTreeMap<&SetPartition, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut element_action = Vec::new();
        for g in 0..n.saturating_sub(1) {
            let s = Permutation::adjacent(n, g);
            element_action.push(
                elems
                    .iter()
                    .map(|p| index[&p.relabel(&s)])
                    .collect::<Vec<usize>>(),
            );
        }
        nerve_of_poset_with_action(&labels, &relation, max_dim, n, &element_action)
    };

    let (space, space_action) = build(&nondiscrete, n.saturating_sub(2))?;
    let (boundary, boundary_action) = if nontrivial.is_empty() {
        (
            SemiSimplicialSet::empty(),
            SignedAction {
                degree_of_group: n,
                generators: vec![Vec::new(); n.saturating_sub(1)],
            },
        )
    } else {
        build(&nontrivial, n.saturating_sub(3))?
    };

    // membership of space simplices in the boundary: the chain avoids the
    // indiscrete partition, whose label sorts last among vertices
    let indiscrete_label = SetPartition::indiscrete(n).label();
    let in_boundary: Vec<Vec<bool>> = space
        .labels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|lab| !lab.split('<').any(|v| v == indiscrete_label))
                .collect()
        })
        .collect();
    Ok(PartitionComplex {
        n,
        space,
        space_action,
        boundary,
        boundary_action,
        boundary_vertices: nontrivial,
        in_boundary,
    })
}

/// Reduced homology of the boundary of the partition space. For `n = 2` the
/// boundary is empty and the answer is the ground ring in degree `-1`.
pub fn partition_boundary_homology(
    n: usize,
    coeff: Coeff,
) -> crate::Result<BTreeMap<i64, AbelianGroupInvariants>> {
    let pc = partition_complex(n)?;
    let c = pc.boundary.augmented_chain_complex(coeff)?;
    Ok(homology(&c))
}

/// Reduced homology of the quotient space/boundary pair: relative homology
/// of the non-discrete nerve modulo the non-trivial nerve.
pub fn partition_quotient_homology(
    n: usize,
    coeff: Coeff,
) -> crate::Result<BTreeMap<i64, AbelianGroupInvariants>> {
    let pc = partition_complex(n)?;
    let c = pc.space.chain_complex(coeff)?;
    let sub: Vec<Vec<usize>> = pc
        .in_boundary
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .filter_map(|(i, &inb)| inb.then_some(i))
                .collect()
        })
        .collect();
    Ok(homology(&c.quotient(&sub)?))
}

/// One face of the boundary, indexed by an unordered two-block split.
pub struct Face {
    /// the block of the split containing more structure (|m| >= 2)
    pub m_block: Vec<usize>,
    pub n_block: Vec<usize>,
    /// simplex indices of the boundary nerve, per dimension
    pub simplices: Vec<Vec<usize>>,
}

/// Decompose the boundary nerve into faces, one per two-block partition:
/// the face of a split holds every chain refining it. Verifies that faces
/// cover the boundary and that pairwise intersections are the faces of the
/// common refinements (as literal simplex-set identities).
pub fn face_decomposition(n: usize) -> crate::Result<Vec<Face>> {
    if n < 3 {
        return Err(Error::OutOfRange(
            "face decomposition needs arity >= 3".into(),
        ));
    }
    let pc = partition_complex(n)?;
    let two_blocks: Vec<SetPartition> = all_partitions(n)
        .into_iter()
        .filter(|p| p.block_count() == 2)
        .collect();
    // parse each boundary simplex into its chain of partitions
    let by_label: BTreeMap<String, SetPartition> = pc
        .boundary_vertices
        .iter()
        .map(|p| (p.label(), p.clone()))
        .collect();
    let chains: Vec<Vec<Vec<&SetPartition>>> = pc
        .boundary
        .labels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|lab| lab.split('<').map(|v| &by_label[v]).collect())
                .collect()
        })
        .collect();

    let face_of = |pi: &SetPartition| -> Vec<Vec<usize>> {
        chains
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .filter_map(|(i, chain)| {
                        chain.iter().all(|p| p.refines(pi)).then_some(i)
                    })
                    .collect()
            })
            .collect()
    };

    let faces: Vec<Face> = two_blocks
        .iter()
        .map(|pi| {
            let (m_block, n_block) = if pi.blocks[0].len() >= 2 {
                (pi.blocks[0].clone(), pi.blocks[1].clone())
            } else {
                (pi.blocks[1].clone(), pi.blocks[0].clone())
            };
            Face {
                m_block,
                n_block,
                simplices: face_of(pi),
            }
        })
        .collect();

    // coverage
    for (k, level) in chains.iter().enumerate() {
        for i in 0..level.len() {
            if !faces.iter().any(|f| f.simplices[k].contains(&i)) {
                return Err(Error::Internal(format!(
                    "boundary simplex {i} in dimension {k} lies in no face"
                )));
            }
        }
    }
    // pairwise intersections are faces of meets
    for (a, pa) in two_blocks.iter().enumerate() {
        for (b, pb) in two_blocks.iter().enumerate() {
            if a >= b {
                continue;
            }
            let meet = pa.meet(pb);
            let expected = face_of(&meet);
            for k in 0..chains.len() {
                let mut inter: Vec<usize> = faces[a].simplices[k]
                    .iter()
                    .filter(|i| faces[b].simplices[k].contains(i))
                    .copied()
                    .collect();
                inter.sort_unstable();
                let mut exp = expected[k].clone();
                exp.sort_unstable();
                if inter != exp {
                    return Err(Error::Internal(format!(
                        "face intersection is not the face of the meet at dim {k}"
                    )));
                }
            }
        }
    }
    Ok(faces)
}

/// The tree-operad filtration quotient: the prism product of the partition
/// space with a skeleton of the free operad factor, reduced modulo the
/// boundary layer and the previous skeleton.
pub struct TreeFiltrationQuotient {
    pub k: usize,
    pub p: usize,
    pub complex: ChainComplex,
    pub action: SignedAction,
    /// provenance: (partition-space simplex label, ordering-tuple label)
    pub labels: Vec<Vec<(String, String)>>,
}

pub fn tree_filtration_quotient(k: usize, p: usize) -> crate::Result<TreeFiltrationQuotient> {
    if k < 2 {
        return Err(Error::OutOfRange("tree layers need arity >= 2".into()));
    }
    let pc = partition_complex(k)?;
    let (q_nerve, q_action) = nerve_of_groupoid_skeleton(k, p)?;
    let cp = pc.space.chain_complex(Coeff::Z)?;
    let cq = q_nerve.chain_complex(Coeff::Z)?;
    let product = prism_product(&cp, &cq)?;

    // kill (P-simplex in boundary) x anything and anything x (Q-dim < p)
    let mut sub: Vec<Vec<usize>> = Vec::new();
    let mut kept_labels: Vec<Vec<(String, String)>> = Vec::new();
    let mut kept_index: Vec<Vec<(usize, usize, usize)>> = Vec::new(); // (a, i, j)
    for deg in 0..=(product.max_degree() as usize) {
        let mut kill = Vec::new();
        let mut labels = Vec::new();
        let mut index = Vec::new();
        let mut offset = 0;
        for a in 0..=deg.min(cp.max_degree() as usize) {
            let b = deg - a;
            let (ra, rb) = (cp.rank(a as i64), cq.rank(b as i64));
            if ra == 0 || rb == 0 {
                continue;
            }
            for i in 0..ra {
                for j in 0..rb {
                    let pos = offset + i * rb + j;
                    if pc.in_boundary[a][i] || b < p {
                        kill.push(pos);
                    } else {
                        labels.push((
                            pc.space.labels[a][i].clone(),
                            q_nerve.labels[b][j].clone(),
                        ));
                        index.push((a, i, j));
                    }
                }
            }
            offset += ra * rb;
        }
        sub.push(kill);
        labels_push(&mut kept_labels, labels);
        kept_index.push(index);
    }
    let complex = product.quotient(&sub)?;

    // diagonal action on the kept basis
    let mut generators = Vec::new();
    for g in 0..k - 1 {
        let mut per_degree = Vec::new();
        for (deg, index) in kept_index.iter().enumerate() {
            let lookup: BTreeMap<(usize, usize, usize), usize> = index
                .iter()
                .enumerate()
                .map(|(pos, &t)| (t, pos))
                .collect();
            let mut images = Vec::with_capacity(index.len());
            for &(a, i, j) in index {
                let b = deg - a;
                let (pi, ps) = pc.space_action.generators[g][a][i];
                let (qj, qs) = q_action.generators[g][b][j];
                let target = *lookup.get(&(a, pi, qj)).ok_or_else(|| {
                    Error::Internal("action leaves the quotient basis".into())
                })?;
                images.push((target, ps * qs));
            }
            per_degree.push(images);
        }
        generators.push(per_degree);
    }
    let action = SignedAction {
        degree_of_group: k,
        generators,
    };
    action.check_equivariance(&complex)?;
    Ok(TreeFiltrationQuotient {
        k,
        p,
        complex,
        action,
        labels: kept_labels,
    })
}

fn labels_push(acc: &mut Vec<Vec<(String, String)>>, labels: Vec<(String, String)>) {
    acc.push(labels);
}

impl TreeFiltrationQuotient {
    /// Homology of the layer; expected free, concentrated in `p + k - 2`.
    pub fn homology(&self) -> BTreeMap<i64, AbelianGroupInvariants> {
        homology(&self.complex)
    }

    /// Character of the induced action on the homology in the given degree:
    /// traces per conjugacy class of the symmetric group, classes listed by
    /// `perm::partitions_of(k)` order.
    pub fn homology_character(&self, degree: i64) -> crate::Result<Vec<BigInt>> {
        let basis = homology_at_with_basis(
            &self.complex.boundary(degree + 1),
            &self.complex.boundary(degree),
        )?;
        if !basis.invariants.torsion.is_empty() {
            return Err(Error::Internal("layer homology has torsion".into()));
        }
        let deg = degree as usize;
        let mut traces = Vec::new();
        for ct in crate::perm::partitions_of(self.k) {
            let g = crate::perm::class_representative(&ct);
            let action = self.action.matrix(&g, deg);
            // trace of the action on homology = sum over generators of the
            // coefficient of the generator inside the image of itself
            let mut trace = BigInt::from(0);
            for col in 0..basis.invariants.free_rank {
                let gen = basis.free_gens.col(col).clone();
                let moved = action.apply(&gen);
                let (coords, _) = basis.project(&moved);
                trace += &coords[col];
            }
            traces.push(trace);
        }
        Ok(traces)
    }
}

/// Report of the boundary-layer wedge decomposition check at a fixed bar
/// level: the assembled relative product complexes against the products of
/// independently computed factor ranks.
pub struct DeldelReport {
    pub n: usize,
    pub bar_level: usize,
    /// per face: (m_block, n_block, factor ranks, layer cell count, product)
    pub faces: Vec<(Vec<usize>, Vec<usize>, usize, usize, usize, usize)>,
    /// homology ranks of the assembled complex, by degree
    pub assembled: BTreeMap<i64, usize>,
    pub rhs_total: usize,
    pub expected_degree: i64,
    pub matches: bool,
}

/// Verify that the boundary layer splits as a wedge over two-block
/// decompositions: the direct sum of the relative face complexes has the
/// homology predicted by multiplying the independently computed ranks of
/// each smash factor. `drop_faces` omits faces to serve as a negative
/// control.
pub fn deldel_wedge_check(n: usize, bar_level: usize, drop_faces: usize) -> crate::Result<DeldelReport> {
    if n < 3 {
        return Err(Error::OutOfRange("wedge check needs arity >= 3".into()));
    }
    let two_blocks: Vec<SetPartition> = all_partitions(n)
        .into_iter()
        .filter(|p| p.block_count() == 2)
        .collect();
    let relative = |arity: usize| -> crate::Result<ChainComplex> {
        let pc = partition_complex(arity)?;
        let c = pc.space.chain_complex(Coeff::Z)?;
        let sub: Vec<Vec<usize>> = pc
            .in_boundary
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &inb)| inb.then_some(i))
                    .collect()
            })
            .collect();
        c.quotient(&sub)
    };
    let mut summands = Vec::new();
    let mut faces = Vec::new();
    let mut rhs_total = 0usize;
    let kept = two_blocks.len().saturating_sub(drop_faces);
    for pi in two_blocks.iter().take(kept) {
        let (m_block, n_block) = if pi.blocks[0].len() >= 2 {
            (pi.blocks[0].clone(), pi.blocks[1].clone())
        } else {
            (pi.blocks[1].clone(), pi.blocks[0].clone())
        };
        let m = m_block.len();
        let nn = n_block.len() + 1;
        let rel_m = relative(m)?;
        let rel_n = relative(nn)?;
        // independent factor ranks by their own reductions
        let rank_of = |c: &ChainComplex| -> usize {
            homology(c).values().map(|h| h.free_rank).sum()
        };
        let rm = rank_of(&rel_m);
        let rn = rank_of(&rel_n);
        // free-operad layer at this level: adjacent-distinct tuples over the
        // product group
        let g = factorial(m) * factorial(nn);
        let layer = g * (g - 1).pow(bar_level as u32);
        let mut layer_complex = ChainComplex::new(
            Coeff::Z,
            bar_level as i64,
            vec![layer],
            vec![IntMatrix::zero(0, layer)],
        )?;
        layer_complex.augmented = false;
        let block = rel_m.tensor(&rel_n)?.tensor(&layer_complex)?;
        rhs_total += rm * rn * layer;
        faces.push((m_block, n_block, rm, rn, layer, rm * rn * layer));
        summands.push(block);
    }
    let assembled_complex = direct_sum(&summands)?;
    let h = homology(&assembled_complex);
    let assembled: BTreeMap<i64, usize> = h
        .iter()
        .filter(|(_, g)| !g.is_zero())
        .map(|(d, g)| (*d, g.free_rank))
        .collect();
    let expected_degree = n as i64 - 3 + bar_level as i64;
    let lhs_at = assembled.get(&expected_degree).copied().unwrap_or(0);
    let concentrated = assembled.keys().all(|&d| d == expected_degree);
    let torsion_free = h.values().all(|g| g.torsion.is_empty());
    Ok(DeldelReport {
        n,
        bar_level,
        faces,
        assembled,
        rhs_total,
        expected_degree,
        matches: concentrated && torsion_free && lhs_at == rhs_total && drop_faces == 0,
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Direct sum of chain complexes over a common coefficient ring.
pub fn direct_sum(summands: &[ChainComplex]) -> crate::Result<ChainComplex> {
    if summands.is_empty() {
        return Ok(ChainComplex::empty(Coeff::Z));
    }
    let coeff = summands[0].coeff;
    let min = summands.iter().map(|c| c.min_degree()).min().unwrap();
    let max = summands.iter().map(|c| c.max_degree()).max().unwrap();
    if min > max {
        return Ok(ChainComplex::empty(coeff));
    }
    let mut ranks = Vec::new();
    let mut boundaries = Vec::new();
    for d in min..=max {
        let total: usize = summands.iter().map(|c| c.rank(d)).sum();
        ranks.push(total);
        if d == min {
            boundaries.push(IntMatrix::zero(0, total));
            continue;
        }
        let prev: usize = summands.iter().map(|c| c.rank(d - 1)).sum();
        let mut m = IntMatrix::zero(prev, total);
        let mut row_off = 0;
        let mut col_off = 0;
        for c in summands {
            let b = c.boundary(d);
            for col in 0..c.rank(d) {
                for (&r, v) in b.col(col) {
                    m.add_to(row_off + r as usize, col_off + col, v);
                }
            }
            row_off += c.rank(d - 1);
            col_off += c.rank(d);
        }
        boundaries.push(m);
    }
    ChainComplex::new(coeff, min, ranks, boundaries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_enumeration_bell_numbers() {
        assert_eq!(all_partitions(3).len(), 5);
        assert_eq!(all_partitions(4).len(), 15);
        assert_eq!(all_partitions(5).len(), 52);
    }

    #[test]
    fn arity_two_is_a_point_with_empty_boundary() {
        let pc = partition_complex(2).unwrap();
        assert_eq!(pc.space.count(0), 1);
        assert_eq!(pc.boundary.total_simplices(), 0);
        let h = partition_boundary_homology(2, Coeff::Z).unwrap();
        assert_eq!(h[&-1], AbelianGroupInvariants::free(1));
    }

    #[test]
    fn arity_below_two_rejected() {
        assert!(partition_complex(1).is_err());
    }

    #[test]
    fn arity_three_boundary_is_three_points() {
        let pc = partition_complex(3).unwrap();
        assert_eq!(pc.boundary.count(0), 3);
        let h = partition_boundary_homology(3, Coeff::Z).unwrap();
        assert_eq!(h[&0], AbelianGroupInvariants::free(2));
    }

    #[test]
    fn arity_four_boundary_homology() {
        let pc = partition_complex(4).unwrap();
        assert_eq!(pc.boundary.count(0), 13);
        let h = partition_boundary_homology(4, Coeff::Z).unwrap();
        assert_eq!(h[&1], AbelianGroupInvariants::free(6));
        assert!(h[&0].is_zero());
    }

    #[test]
    fn space_is_contractible() {
        for n in 2..=5 {
            let pc = partition_complex(n).unwrap();
            let h = homology(&pc.space.augmented_chain_complex(Coeff::Z).unwrap());
            assert!(h.values().all(|g| g.is_zero()), "space not contractible at {n}");
        }
    }

    #[test]
    fn quotient_homology_matches_wedge() {
        // space/boundary is a wedge of (n-1)! spheres of dimension n-2
        let h = partition_quotient_homology(3, Coeff::Z).unwrap();
        assert_eq!(h[&1], AbelianGroupInvariants::free(2));
        let h = partition_quotient_homology(4, Coeff::Z).unwrap();
        assert_eq!(h[&2], AbelianGroupInvariants::free(6));
    }

    #[test]
    fn face_counts() {
        let f3 = face_decomposition(3).unwrap();
        assert_eq!(f3.len(), 3);
        // pairwise disjoint for arity 3
        for a in 0..3 {
            for b in (a + 1)..3 {
                for k in 0..f3[a].simplices.len() {
                    assert!(f3[a].simplices[k]
                        .iter()
                        .all(|i| !f3[b].simplices[k].contains(i)));
                }
            }
        }
        let f4 = face_decomposition(4).unwrap();
        assert_eq!(f4.len(), 7);
        let two_two = f4.iter().filter(|f| f.m_block.len() == 2).count();
        let three_one = f4.iter().filter(|f| f.m_block.len() == 3).count();
        assert_eq!(two_two, 3);
        assert_eq!(three_one, 4);
    }

    #[test]
    fn tree_layer_small_cases() {
        let t = tree_filtration_quotient(2, 0).unwrap();
        let h = t.homology();
        // one free orbit: rank k! = 2 concentrated in degree 0
        assert_eq!(h[&0], AbelianGroupInvariants::free(2));
        let t = tree_filtration_quotient(3, 0).unwrap();
        let h = t.homology();
        assert_eq!(h[&1], AbelianGroupInvariants::free(12));
        assert!(h.iter().all(|(&d, g)| d == 1 || g.is_zero()));
    }

    #[test]
    fn deldel_small() {
        let r = deldel_wedge_check(3, 0, 0).unwrap();
        assert!(r.matches, "report: {:?} vs {}", r.assembled, r.rhs_total);
        assert_eq!(r.rhs_total, 12);
        let bad = deldel_wedge_check(3, 0, 1).unwrap();
        assert!(!bad.matches);
    }
}
