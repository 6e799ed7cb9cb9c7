//! Fixed-universe vertex sets backed by 64-bit words.
//!
//! A [`VertexSet`] is a subset of `0..n` where `n` is the universe size fixed
//! at construction. One word covers 64 vertices; graphs small enough for the
//! enumeration engine always fit in the first word, which the solver exploits.

use std::fmt;

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of the vertices `0..n`, stored as a bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a universe of size `n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    /// The full universe `0..n`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; words_for(n)];
        let rem = n % WORD_BITS;
        if rem != 0 {
            *words.last_mut().unwrap() = (1u64 << rem) - 1;
        }
        VertexSet { n, words }
    }

    /// Builds a set from explicit members. Panics if an index is out of range.
    pub fn from_indices(n: usize, indices: &[usize]) -> Self {
        let mut s = VertexSet::empty(n);
        for &v in indices {
            s.insert(v);
        }
        s
    }

    /// Builds a set over a universe of at most 64 vertices from a raw mask.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "mask constructor limited to 64 vertices");
        assert!(n == WORD_BITS || mask < (1u64 << n), "mask has bits outside 0..{n}");
        let words = if n == 0 { vec![] } else { vec![mask] };
        VertexSet { n, words }
    }

    /// Universe size this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    /// The first word of the mask. Valid as the whole set when `n <= 64`.
    pub(crate) fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for universe {}", self.n);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for universe {}", self.n);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && (self.words[v / WORD_BITS] >> (v % WORD_BITS)) & 1 == 1
    }

    /// Cardinality (popcount over all words).
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// True when the two sets share at least one member.
    pub fn intersects(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.n, other.n, "universe mismatch");
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * WORD_BITS + bit)
                }
            })
        })
    }

    /// Members joined by single spaces, e.g. `"0 2 5"`. Used in CSV output.
    pub fn to_index_string(&self) -> String {
        self.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_full() {
        let e = VertexSet::empty(10);
        assert_eq!(e.len(), 0);
        assert!(e.is_empty());
        let f = VertexSet::full(10);
        assert_eq!(f.len(), 10);
        assert!((0..10).all(|v| f.contains(v)));
        assert!(!f.contains(10));
    }

    #[test]
    fn full_crosses_word_boundary() {
        let f = VertexSet::full(70);
        assert_eq!(f.len(), 70);
        assert!(f.contains(69));
        let mut g = f.clone();
        g.remove(64);
        assert_eq!(g.len(), 69);
        assert!(!g.contains(64));
        assert!(g.contains(63));
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(8, &[0, 2, 4]);
        let b = VertexSet::from_indices(8, &[2, 3]);
        assert_eq!(a.union(&b), VertexSet::from_indices(8, &[0, 2, 3, 4]));
        assert_eq!(a.intersection(&b), VertexSet::from_indices(8, &[2]));
        assert_eq!(a.difference(&b), VertexSet::from_indices(8, &[0, 4]));
        assert!(a.intersects(&b));
        assert!(!a.intersects(&VertexSet::from_indices(8, &[1, 5])));
        assert!(VertexSet::from_indices(8, &[2]).is_subset_of(&b));
    }

    #[test]
    fn iteration_order_ascending() {
        let s = VertexSet::from_indices(70, &[65, 3, 0, 69]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 65, 69]);
        assert_eq!(s.to_index_string(), "0 3 65 69");
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::from_mask(6, 0b101001);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(s.low_word(), 0b101001);
    }
}
