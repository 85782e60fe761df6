//! Fixed-width bitsets over the vertex ids of one graph.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A set of vertices `0..n` of a specific graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Builds a set from vertex ids; panics on ids `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(n));
        VertexSet { n, words }
    }

    /// Size of the universe `0..n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    /// Lexicographic comparison of the sorted vertex lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over set bits of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        Ones { words, idx: 0, cur }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], v: usize) {
    words[v / WORD] |= 1 << (v % WORD);
}

#[inline]
pub(crate) fn clear_bit(words: &mut [u64], v: usize) {
    words[v / WORD] &= !(1 << (v % WORD));
}

#[inline]
pub(crate) fn test_bit(words: &[u64], v: usize) -> bool {
    words[v / WORD] >> (v % WORD) & 1 == 1
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

#[inline]
pub(crate) fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
}

#[inline]
pub(crate) fn is_zero(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}
