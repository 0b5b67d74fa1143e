//! Permutations of `{0, .., n-1}` with word decompositions into adjacent
//! transpositions, used wherever symmetric groups act on bases.

use crate::Error;

/// A permutation of `{0, 1, .., n-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "perm{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> crate::Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidMap(format!(
                    "image table {images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Adjacent transposition `(i, i+1)` in the symmetric group on `n` letters.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i + 1 < n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Functional composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.degree()];
        let mut sign = 1i64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Word in adjacent transpositions whose product (left to right, applied
    /// right to left) equals `self`. Bubble-sort decomposition; deterministic.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut img = self.images.clone();
        // Sort img back to the identity; recording swaps of the inverse gives
        // a word for self when replayed in reverse.
        let n = img.len();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if img[i] > img[i + 1] {
                    img.swap(i, i + 1);
                    word.push(i);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        word.reverse();
        word
    }

    /// Cycle type as a weakly decreasing partition of `n`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }
}

/// All permutations of `{0..n-1}` in lexicographic order of image tables.
pub fn enumerate(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let mut i = n.wrapping_sub(1);
        loop {
            if i == 0 || i > n {
                return out;
            }
            if current[i - 1] < current[i] {
                break;
            }
            i -= 1;
        }
        let pivot = i - 1;
        let mut j = n - 1;
        while current[j] < current[pivot] {
            j -= 1;
        }
        current.swap(pivot, j);
        current[pivot + 1..].reverse();
    }
}

/// Weakly decreasing partitions of `n`, lexicographically largest first;
/// these index the conjugacy classes of the symmetric group.
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A representative permutation with the given cycle type.
pub fn class_representative(cycle_type: &[usize]) -> Permutation {
    let n: usize = cycle_type.iter().sum();
    let mut images: Vec<usize> = (0..n).collect();
    let mut base = 0;
    for &len in cycle_type {
        for k in 0..len {
            images[base + k] = base + (k + 1) % len;
        }
        base += len;
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        for p in enumerate(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
    }

    #[test]
    fn adjacent_word_reconstructs() {
        for p in enumerate(5) {
            let mut q = Permutation::identity(5);
            for &i in &p.adjacent_word() {
                q = q.compose(&Permutation::adjacent(5, i));
            }
            assert_eq!(p, q);
        }
    }

    #[test]
    fn sign_is_multiplicative() {
        let perms = enumerate(4);
        for p in &perms {
            for q in &perms {
                assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
            }
        }
    }

    #[test]
    fn enumeration_count_and_order() {
        let p4 = enumerate(4);
        assert_eq!(p4.len(), 24);
        let mut sorted = p4.clone();
        sorted.sort();
        assert_eq!(p4, sorted);
    }

    #[test]
    fn class_representatives_have_right_type() {
        for ct in partitions_of(6) {
            assert_eq!(class_representative(&ct).cycle_type(), ct);
        }
    }
}
