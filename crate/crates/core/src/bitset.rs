//! Plain `Vec<u64>` bitset. All set manipulation in the enumeration kernels
//! goes through this; ordering of sets (for deterministic tie-breaks) is the
//! bit-string order defined by `lex_cmp`.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    width: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            width,
            words: vec![0u64; width.div_ceil(64)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut s = BitSet::new(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.width);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.width);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.width);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    pub fn union_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersect_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest index present in both sets.
    pub fn first_common(&self, other: &BitSet) -> Option<usize> {
        for (w, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let x = a & b;
            if x != 0 {
                return Some(w * 64 + x.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Bit-string order: compare membership indicators from index 0 upward;
    /// at the first differing index the set *without* that index is smaller.
    /// Total order on sets of equal width; the empty set is least.
    pub fn lex_cmp(&self, other: &BitSet) -> Ordering {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter().zip(&other.words) {
            let x = a ^ b;
            if x != 0 {
                let i = x.trailing_zeros();
                return if a >> i & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = BitSet::new(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.count(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        s.remove(64);
        assert_eq!(s.count(), 2);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn set_algebra() {
        let a = BitSet::from_indices(100, [1, 5, 70]);
        let b = BitSet::from_indices(100, [5, 70, 99]);
        assert_eq!(a.intersection_count(&b), 2);
        assert_eq!(a.first_common(&b), Some(5));
        let mut u = a.clone();
        u.union_assign(&b);
        assert_eq!(u.count(), 4);
        let mut d = u.clone();
        d.difference_assign(&a);
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![99]);
    }

    #[test]
    fn lex_order_first_differing_bit() {
        let a = BitSet::from_indices(10, [1, 2]);
        let b = BitSet::from_indices(10, [0, 5]);
        // index 0: a lacks it, b has it => a < b
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        let empty = BitSet::new(10);
        assert_eq!(empty.lex_cmp(&a), Ordering::Less);
        assert_eq!(a.lex_cmp(&a.clone()), Ordering::Equal);
    }
}
