//! Word-parallel vertex sets over `0..n`.

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn count(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn union_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x | y).count_ones() as usize).sum()
}

#[inline]
pub fn union3_count(a: &[u64], b: &[u64], c: &[u64]) -> usize {
    a.iter().zip(b).zip(c).map(|((x, y), z)| (x | y | z).count_ones() as usize).sum()
}

/// `|a \ b|`
#[inline]
pub fn difference_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & !y).count_ones() as usize).sum()
}

#[inline]
pub fn contains(a: &[u64], v: usize) -> bool {
    a[v / 64] >> (v % 64) & 1 == 1
}

#[inline]
pub fn insert(a: &mut [u64], v: usize) {
    a[v / 64] |= 1 << (v % 64);
}

/// Ascending iterator over the members of a bit slice.
pub fn members(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}

/// An owned vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { words: vec![0; words_for(n)] }
    }

    pub fn from_words(words: &[u64]) -> Self {
        VertexSet { words: words.to_vec() }
    }

    pub fn insert(&mut self, v: usize) {
        insert(&mut self.words, v);
    }

    pub fn contains(&self, v: usize) -> bool {
        contains(&self.words, v)
    }

    pub fn union_with(&mut self, other: &[u64]) {
        for (x, y) in self.words.iter_mut().zip(other) {
            *x |= y;
        }
    }

    pub fn len(&self) -> usize {
        count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        members(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_members_across_word_boundaries() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        let mut t = VertexSet::new(130);
        t.insert(64);
        t.insert(5);
        assert_eq!(union_count(s.words(), t.words()), 5);
        assert_eq!(difference_count(t.words(), s.words()), 1);
        assert_eq!(union3_count(s.words(), t.words(), VertexSet::new(130).words()), 5);
        assert!(s.contains(129) && !s.contains(128));
    }
}
