//! The spine categories of finite sets: objects of the surjection category
//! are `{1,..,n}`, objects of the based category are `{0,1,..,n}` with `0`
//! the basepoint. Morphisms are stored as image tables; composition and the
//! canonical three-part factorization of based maps live here.

use crate::perm::Permutation;
use crate::Error;

/// A surjection `{1..n} -> {1..m}` in the surjection category.
/// `images[i-1]` is the image of `i`, valued in `1..=m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaMap {
    pub source: usize,
    pub target: usize,
    images: Vec<usize>,
}

impl std::fmt::Debug for OmegaMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}->{}{:?}", self.source, self.target, self.images)
    }
}

impl OmegaMap {
    pub fn new(source: usize, target: usize, images: Vec<usize>) -> crate::Result<Self> {
        if images.len() != source {
            return Err(Error::InvalidMap(format!(
                "expected {source} images, got {}",
                images.len()
            )));
        }
        let mut hit = vec![false; target];
        for &v in &images {
            if v == 0 || v > target {
                return Err(Error::InvalidMap(format!(
                    "image value {v} outside 1..={target}"
                )));
            }
            hit[v - 1] = true;
        }
        if !hit.iter().all(|&h| h) {
            return Err(Error::InvalidMap(format!(
                "map {images:?} onto {target} is not surjective"
            )));
        }
        Ok(OmegaMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(n: usize) -> Self {
        OmegaMap {
            source: n,
            target: n,
            images: (1..=n).collect(),
        }
    }

    /// The canonical merge `{1..n+1} -> {1..n}` sending `n+1` to `n`.
    pub fn canonical_merge(n: usize) -> Self {
        assert!(n >= 1);
        let mut images: Vec<usize> = (1..=n).collect();
        images.push(n);
        OmegaMap {
            source: n + 1,
            target: n,
            images,
        }
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        OmegaMap {
            source: p.degree(),
            target: p.degree(),
            images: p.images().iter().map(|&i| i + 1).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_iso(&self) -> bool {
        self.source == self.target
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        if !self.is_iso() {
            return None;
        }
        Permutation::from_images(self.images.iter().map(|&v| v - 1).collect()).ok()
    }

    /// `self . g` (apply `g` first). Errors when objects do not match.
    pub fn compose(&self, g: &OmegaMap) -> crate::Result<OmegaMap> {
        if g.target != self.source {
            return Err(Error::NonComposable {
                inner_target: g.target,
                outer_source: self.source,
            });
        }
        Ok(OmegaMap {
            source: g.source,
            target: self.target,
            images: g.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    /// Decompose into canonical merges and adjacent transpositions, outermost
    /// first: `self = w_0 . w_1 . ... . w_last` under functional composition.
    pub fn generator_word(&self) -> Vec<OmegaGenerator> {
        let mut blocks: Vec<Vec<OmegaGenerator>> = Vec::new();
        let mut current = self.clone();
        while current.source > current.target {
            // the two largest elements with equal images get merged
            let n = current.source;
            let (u, v) = {
                let mut found = None;
                'outer: for v in (2..=n).rev() {
                    for u in (1..v).rev() {
                        if current.apply(u) == current.apply(v) {
                            found = Some((u, v));
                            break 'outer;
                        }
                    }
                }
                found.expect("non-bijective surjection merges something")
            };
            // permutation sending u -> n-1, v -> n, order-preserving elsewhere
            let mut rest: Vec<usize> = (1..=n).filter(|&x| x != u && x != v).collect();
            rest.push(u);
            rest.push(v);
            let mut sigma_images = vec![0usize; n];
            for (k, &x) in rest.iter().enumerate() {
                sigma_images[x - 1] = k + 1;
            }
            let sigma = OmegaMap {
                source: n,
                target: n,
                images: sigma_images,
            };
            let merge = OmegaMap::canonical_merge(n - 1);
            // current = next . merge . sigma
            let mut next_images = vec![0usize; n - 1];
            for x in 1..=n {
                let pos = merge.apply(sigma.apply(x));
                next_images[pos - 1] = current.apply(x);
            }
            let next = OmegaMap {
                source: n - 1,
                target: current.target,
                images: next_images,
            };
            let mut block = vec![OmegaGenerator::Merge(n - 1)];
            for i in sigma.as_permutation().unwrap().adjacent_word() {
                block.push(OmegaGenerator::Transposition(n, i));
            }
            blocks.push(block);
            current = next;
        }
        // current is now bijective: f = current . blocks[last] . ... . blocks[0]
        let mut word = Vec::new();
        if let Some(p) = current.as_permutation() {
            for i in p.adjacent_word() {
                word.push(OmegaGenerator::Transposition(current.source, i));
            }
        }
        for block in blocks.into_iter().rev() {
            word.extend(block);
        }
        word
    }
}

/// Generators of the surjection category acting at a given arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaGenerator {
    /// canonical merge `{1..n+1} -> {1..n}`
    Merge(usize),
    /// adjacent transposition `(i+1, i+2)` on `{1..n}` (0-based slot `i`)
    Transposition(usize, usize),
}

impl OmegaGenerator {
    pub fn to_map(&self) -> OmegaMap {
        match *self {
            OmegaGenerator::Merge(n) => OmegaMap::canonical_merge(n),
            OmegaGenerator::Transposition(n, i) => {
                OmegaMap::from_permutation(&Permutation::adjacent(n, i))
            }
        }
    }
}

/// Generators of the based category acting at a given arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaGenerator {
    /// order-preserving inclusion `[n] -> [n+1]`
    Lambda(usize),
    /// merge `[n+1] -> [n]` sending `n+1` to `n`
    OmegaMerge(usize),
    /// collapse `[n+1] -> [n]` sending `n+1` to `0`
    Tau(usize),
    /// adjacent transposition on the nonzero part of `[n]` (0-based slot)
    Transposition(usize, usize),
}

impl GammaGenerator {
    pub fn to_map(&self) -> GammaMap {
        match *self {
            GammaGenerator::Lambda(n) => GammaMap::canonical_lambda(n),
            GammaGenerator::OmegaMerge(n) => GammaMap::canonical_omega(n),
            GammaGenerator::Tau(n) => GammaMap::canonical_tau(n),
            GammaGenerator::Transposition(n, i) => {
                GammaMap::from_permutation(&Permutation::adjacent(n, i))
            }
        }
    }
}

/// Decompose a based map into canonical generators, outermost first.
pub fn gamma_generator_word(map: &GammaMap) -> Vec<GammaGenerator> {
    let f = factorize_gamma(map);
    let n = map.source;
    let m = map.target;
    let k = f.tau_part.target;
    let r = f.omega_part.target;
    let mut word = Vec::new();
    // lambda part: sigma_b . (prefix inclusion [r] -> [m])
    if r < m || !f.lambda_part.is_identity() {
        let values: Vec<usize> = (1..=r).map(|i| f.lambda_part.apply(i)).collect();
        let mut sigma_b: Vec<usize> = values.iter().map(|&v| v - 1).collect();
        let mut rest: Vec<usize> = (0..m).filter(|i| !sigma_b.contains(i)).collect();
        sigma_b.append(&mut rest);
        let sigma_b = Permutation::from_images(sigma_b)
            .expect("lambda image defines a partial permutation");
        for i in sigma_b.adjacent_word() {
            word.push(GammaGenerator::Transposition(m, i));
        }
        for j in (r..m).rev() {
            word.push(GammaGenerator::Lambda(j));
        }
    }
    // omega part, lifted to based maps
    for g in f.omega_part.generator_word() {
        match g {
            OmegaGenerator::Merge(j) => word.push(GammaGenerator::OmegaMerge(j)),
            OmegaGenerator::Transposition(j, i) => {
                word.push(GammaGenerator::Transposition(j, i))
            }
        }
    }
    // tau part: canonical collapses after a sorting permutation
    if k < n {
        for j in k..n {
            word.push(GammaGenerator::Tau(j));
        }
        let kept: Vec<usize> = (1..=n).filter(|&i| map.apply(i) != 0).collect();
        let mut images = vec![0usize; n];
        for (idx, &i) in kept.iter().enumerate() {
            images[i - 1] = idx;
        }
        let mut next = k;
        for i in 1..=n {
            if map.apply(i) == 0 {
                images[i - 1] = next;
                next += 1;
            }
        }
        let sigma = Permutation::from_images(images).expect("tau sorting permutation");
        for i in sigma.adjacent_word() {
            word.push(GammaGenerator::Transposition(n, i));
        }
    }
    word
}

/// A based map `{0..n} -> {0..m}` with `images[i]` the image of `i` and
/// `images[0] = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaMap {
    pub source: usize,
    pub target: usize,
    images: Vec<usize>,
}

impl std::fmt::Debug for GammaMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]->[{}]{:?}", self.source, self.target, self.images)
    }
}

impl GammaMap {
    pub fn new(source: usize, target: usize, images: Vec<usize>) -> crate::Result<Self> {
        if images.len() != source + 1 {
            return Err(Error::InvalidMap(format!(
                "expected {} images, got {}",
                source + 1,
                images.len()
            )));
        }
        if images[0] != 0 {
            return Err(Error::InvalidMap("based map must send 0 to 0".into()));
        }
        for &v in &images {
            if v > target {
                return Err(Error::InvalidMap(format!(
                    "image value {v} outside 0..={target}"
                )));
            }
        }
        Ok(GammaMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(n: usize) -> Self {
        GammaMap {
            source: n,
            target: n,
            images: (0..=n).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(i, &v)| v == i)
    }

    /// `self . g` (apply `g` first).
    pub fn compose(&self, g: &GammaMap) -> crate::Result<GammaMap> {
        if g.target != self.source {
            return Err(Error::NonComposable {
                inner_target: g.target,
                outer_source: self.source,
            });
        }
        Ok(GammaMap {
            source: g.source,
            target: self.target,
            images: g.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    /// Basepoint extension of a surjection.
    pub fn from_omega(f: &OmegaMap) -> GammaMap {
        let mut images = vec![0usize];
        images.extend_from_slice(f.images());
        GammaMap {
            source: f.source,
            target: f.target,
            images,
        }
    }

    pub fn from_permutation(p: &Permutation) -> GammaMap {
        let mut images = vec![0usize];
        images.extend(p.images().iter().map(|&i| i + 1));
        GammaMap {
            source: p.degree(),
            target: p.degree(),
            images,
        }
    }

    /// Canonical inclusion `[n] -> [n+1]`, identity on `0..n`.
    pub fn canonical_lambda(n: usize) -> GammaMap {
        GammaMap {
            source: n,
            target: n + 1,
            images: (0..=n).collect(),
        }
    }

    /// Canonical merge `[n+1] -> [n]`: `n+1 -> n`, identity elsewhere.
    pub fn canonical_omega(n: usize) -> GammaMap {
        assert!(n >= 1);
        let mut images: Vec<usize> = (0..=n).collect();
        images.push(n);
        GammaMap {
            source: n + 1,
            target: n,
            images,
        }
    }

    /// Canonical basepoint collapse `[n+1] -> [n]`: `n+1 -> 0`.
    pub fn canonical_tau(n: usize) -> GammaMap {
        let mut images: Vec<usize> = (0..=n).collect();
        images.push(0);
        GammaMap {
            source: n + 1,
            target: n,
            images,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        for &v in &self.images {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Surjective onto `0..=target`.
    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target + 1];
        for &v in &self.images {
            hit[v] = true;
        }
        hit.iter().all(|&h| h)
    }
}

/// Canonical factorization of a based map into a collapse, a merge and an
/// injection, possibly with permutations on either side:
/// `map = post_iso . lambda . omega+ . tau . pre_iso`.
#[derive(Clone, Debug)]
pub struct GammaFactorization {
    pub pre_iso: Permutation,
    pub post_iso: Permutation,
    /// kills exactly the preimage of the basepoint, order-preserving
    pub tau_part: GammaMap,
    /// basepoint extension of this surjection is the merging middle part
    pub omega_part: OmegaMap,
    /// order-preserving injection
    pub lambda_part: GammaMap,
}

impl GammaFactorization {
    /// Recompose the factorization into a single map.
    pub fn recompose(&self) -> crate::Result<GammaMap> {
        let pre = GammaMap::from_permutation(&self.pre_iso);
        let post = GammaMap::from_permutation(&self.post_iso);
        let mid = GammaMap::from_omega(&self.omega_part);
        post.compose(&self.lambda_part)?
            .compose(&mid)?
            .compose(&self.tau_part)?
            .compose(&pre)
    }
}

/// Factor a based map as injection . merge . collapse. The canonical choice
/// keeps every part order-preserving and the flanking isomorphisms trivial.
pub fn factorize_gamma(map: &GammaMap) -> GammaFactorization {
    let n = map.source;
    let m = map.target;
    // kept = points with nonzero image, in increasing order
    let kept: Vec<usize> = (1..=n).filter(|&i| map.apply(i) != 0).collect();
    let k = kept.len();
    let mut tau_images = vec![0usize; n + 1];
    for (idx, &i) in kept.iter().enumerate() {
        tau_images[i] = idx + 1;
    }
    let tau_part = GammaMap::new(n, k, tau_images).expect("tau construction");
    // image values in increasing order
    let mut values: Vec<usize> = kept.iter().map(|&i| map.apply(i)).collect();
    values.sort_unstable();
    values.dedup();
    let r = values.len();
    let omega_images: Vec<usize> = kept
        .iter()
        .map(|&i| values.binary_search(&map.apply(i)).unwrap() + 1)
        .collect();
    let omega_part = OmegaMap::new(k, r, omega_images).expect("omega construction");
    let mut lambda_images = vec![0usize];
    lambda_images.extend(values.iter().copied());
    let lambda_part = GammaMap::new(r, m, lambda_images).expect("lambda construction");
    GammaFactorization {
        pre_iso: Permutation::identity(n),
        post_iso: Permutation::identity(m),
        tau_part,
        omega_part,
        lambda_part,
    }
}

/// A morphism in either spine category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinMap {
    Omega(OmegaMap),
    Gamma(GammaMap),
}

impl FinMap {
    /// Pointwise composite `self . g`; errors when the categories or objects
    /// do not match.
    pub fn compose(&self, g: &FinMap) -> crate::Result<FinMap> {
        match (self, g) {
            (FinMap::Omega(f), FinMap::Omega(g)) => Ok(FinMap::Omega(f.compose(g)?)),
            (FinMap::Gamma(f), FinMap::Gamma(g)) => Ok(FinMap::Gamma(f.compose(g)?)),
            _ => Err(Error::InvalidMap(
                "cannot compose maps from different categories".into(),
            )),
        }
    }
}

/// All surjections `{1..n} -> {1..m}` in lexicographic order of image
/// tables. Empty when `m > n` or exactly one of the arities is zero.
pub fn enumerate_surjections(n: usize, m: usize) -> Vec<OmegaMap> {
    if m > n || (m == 0) != (n == 0) {
        return Vec::new();
    }
    if n == 0 {
        return vec![OmegaMap {
            source: 0,
            target: 0,
            images: vec![],
        }];
    }
    let mut out = Vec::new();
    let mut images = vec![1usize; n];
    loop {
        let mut hit = vec![false; m];
        for &v in &images {
            hit[v - 1] = true;
        }
        if hit.iter().all(|&h| h) {
            out.push(OmegaMap {
                source: n,
                target: m,
                images: images.clone(),
            });
        }
        // next tuple in lexicographic order
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            if images[i - 1] < m {
                images[i - 1] += 1;
                for v in images[i..].iter_mut() {
                    *v = 1;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// All based maps `[n] -> [m]` in lexicographic order of image tables.
pub fn enumerate_gamma_maps(n: usize, m: usize) -> Vec<GammaMap> {
    let mut out = Vec::new();
    let mut images = vec![0usize; n + 1];
    loop {
        out.push(GammaMap {
            source: n,
            target: m,
            images: images.clone(),
        });
        let mut i = n + 1;
        loop {
            if i <= 1 {
                return out;
            }
            if images[i - 1] < m {
                images[i - 1] += 1;
                for v in images[i..].iter_mut() {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Inclusion-exclusion count of surjections, used as an independent oracle.
pub fn surjection_count(n: u32, m: u32) -> i128 {
    let mut total: i128 = 0;
    for j in 0..=m {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * binomial(m, j) * ((m - j) as i128).pow(n);
    }
    total
}

fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_enumeration_counts() {
        assert_eq!(enumerate_surjections(3, 2).len(), 6);
        assert_eq!(enumerate_surjections(2, 2).len(), 2);
        assert_eq!(enumerate_surjections(4, 2).len(), 14);
        for n in 0..=5u32 {
            for m in 0..=5u32 {
                let listed = enumerate_surjections(n as usize, m as usize).len() as i128;
                let counted = if m > n || (m == 0) != (n == 0) {
                    if n == 0 && m == 0 {
                        1
                    } else {
                        0
                    }
                } else {
                    surjection_count(n, m)
                };
                assert_eq!(listed, counted.max(0), "count mismatch at ({n},{m})");
            }
        }
    }

    #[test]
    fn surjections_sorted_lexicographically() {
        let maps = enumerate_surjections(4, 3);
        let mut sorted = maps.clone();
        sorted.sort_by(|a, b| a.images().cmp(b.images()));
        assert_eq!(maps, sorted);
    }

    #[test]
    fn composition_laws_exhaustive() {
        // associativity and identity on all surjection triples with n <= 4
        for a in 1..=4usize {
            for b in 1..=a {
                for c in 1..=b {
                    for f in enumerate_surjections(b, c) {
                        for g in enumerate_surjections(a, b) {
                            let fg = f.compose(&g).unwrap();
                            assert_eq!(fg.source, a);
                            assert_eq!(fg.target, c);
                            let id_a = OmegaMap::identity(a);
                            assert_eq!(g.compose(&id_a).unwrap(), g);
                            let id_b = OmegaMap::identity(b);
                            assert_eq!(id_b.compose(&g).unwrap(), g);
                            for h in enumerate_surjections(c, 1) {
                                let left = h.compose(&fg).unwrap();
                                let right = h.compose(&f).unwrap().compose(&g).unwrap();
                                assert_eq!(left, right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn non_composable_is_an_error() {
        let f = OmegaMap::identity(2);
        let g = OmegaMap::identity(3);
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn factorization_identity() {
        let id = GammaMap::identity(3);
        let f = factorize_gamma(&id);
        assert!(f.tau_part.is_identity());
        assert!(f.omega_part.is_identity());
        assert!(f.lambda_part.is_identity());
        assert_eq!(f.recompose().unwrap(), id);
    }

    #[test]
    fn factorization_of_canonical_inclusion_is_itself() {
        let lambda = GammaMap::canonical_lambda(2);
        let f = factorize_gamma(&lambda);
        assert!(f.tau_part.is_identity());
        assert!(f.omega_part.is_identity());
        assert_eq!(f.lambda_part, lambda);
        assert_eq!(f.recompose().unwrap(), lambda);
    }

    #[test]
    fn factorization_recomposes_exhaustively() {
        for n in 0..=4usize {
            for m in 0..=3usize {
                for map in enumerate_gamma_maps(n, m) {
                    let f = factorize_gamma(&map);
                    assert!(f.lambda_part.is_injective());
                    assert!(f.omega_part.source >= f.omega_part.target);
                    assert_eq!(f.recompose().unwrap(), map, "recomposition failed");
                }
            }
        }
    }

    #[test]
    fn omega_generator_words_reconstruct() {
        for n in 1..=4usize {
            for m in 1..=n {
                for f in enumerate_surjections(n, m) {
                    let mut acc = OmegaMap::identity(m);
                    for g in f.generator_word() {
                        acc = acc.compose(&g.to_map()).unwrap();
                    }
                    assert_eq!(acc, f, "word reconstruction failed for {f:?}");
                }
            }
        }
    }

    #[test]
    fn gamma_generator_words_reconstruct() {
        for n in 0..=4usize {
            for m in 0..=3usize {
                for map in enumerate_gamma_maps(n, m) {
                    let mut acc = GammaMap::identity(m);
                    for g in gamma_generator_word(&map) {
                        acc = acc.compose(&g.to_map()).unwrap();
                    }
                    assert_eq!(acc, map, "word reconstruction failed for {map:?}");
                }
            }
        }
    }

    #[test]
    fn factorization_parts_have_stated_shapes() {
        for map in enumerate_gamma_maps(4, 3) {
            let f = factorize_gamma(&map);
            // tau: surjective, bijective away from the kill set
            assert!(f.tau_part.is_surjective());
            let kept: Vec<usize> = (1..=4).filter(|&i| f.tau_part.apply(i) != 0).collect();
            let mut images: Vec<usize> = kept.iter().map(|&i| f.tau_part.apply(i)).collect();
            images.sort_unstable();
            assert_eq!(images, (1..=kept.len()).collect::<Vec<_>>());
        }
    }
}
