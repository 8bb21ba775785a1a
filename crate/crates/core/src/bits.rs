//! Small fixed-width bitset used for element subsets, ideals and submodules.

/// Set of indices below a fixed bound.
///
/// Ordering is by (bound, words), which gives a deterministic sort key for
/// collections of subsets of the same carrier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    nbits: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(nbits: usize) -> Self {
        BitSet {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, it: I) -> Self {
        let mut s = BitSet::new(nbits);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    /// Inserts `i`; returns true when it was not already present.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.nbits, other.nbits);
        BitSet {
            nbits: self.nbits,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Additive span of the given elements, built by coset expansion: adding a
/// fresh generator `g` appends the translates `S + j·g` until `j·g` falls
/// back into the span.  Linear in the result size per generator.
pub fn additive_span_by<I, F>(total: usize, zero: usize, gens: I, add: F) -> BitSet
where
    I: IntoIterator<Item = usize>,
    F: Fn(usize, usize) -> usize,
{
    let mut bits = BitSet::new(total);
    bits.insert(zero);
    let mut members = vec![zero];
    for g in gens {
        if bits.contains(g) {
            continue;
        }
        let base = members.clone();
        let mut shift = g;
        while !bits.contains(shift) {
            for &m in &base {
                let v = add(m, shift);
                if bits.insert(v) {
                    members.push(v);
                }
            }
            shift = add(shift, g);
        }
    }
    bits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let s = BitSet::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(s.contains(64) && !s.contains(1));
    }

    #[test]
    fn subset_and_meet() {
        let a = BitSet::from_indices(10, [1, 2, 3]);
        let b = BitSet::from_indices(10, [2, 3, 5]);
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b).to_vec(), vec![2, 3]);
        let mut c = a.clone();
        c.union_with(&b);
        assert_eq!(c.to_vec(), vec![1, 2, 3, 5]);
        assert!(a.intersection(&b).is_subset(&a));
    }
}
