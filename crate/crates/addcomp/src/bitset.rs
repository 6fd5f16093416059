type Block = u64;
const BITS: usize = 64;

/// Fixed-size bitset used for residue coverage checks and the sumset sieve.
#[derive(Clone, Debug)]
pub struct BitSet {
    len: usize,
    blocks: Vec<Block>,
    ones: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            blocks: vec![0; (len + BITS - 1) / BITS],
            ones: 0,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.ones
    }

    #[inline]
    pub fn all_set(&self) -> bool {
        self.ones == self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] & (1 << (i % BITS)) != 0
    }

    /// Sets bit `i`, returning true if it was previously unset.
    #[inline]
    pub fn set(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let mask = 1 << (i % BITS);
        let b = &mut self.blocks[i / BITS];
        if *b & mask == 0 {
            *b |= mask;
            self.ones += 1;
            true
        } else {
            false
        }
    }

    /// Clears bit `i`, returning true if it was previously set.
    #[inline]
    pub fn clear(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let mask = 1 << (i % BITS);
        let b = &mut self.blocks[i / BITS];
        if *b & mask != 0 {
            *b &= !mask;
            self.ones -= 1;
            true
        } else {
            false
        }
    }

    /// Index of the first unset bit, if any.
    pub fn first_unset(&self) -> Option<usize> {
        for (bi, &b) in self.blocks.iter().enumerate() {
            if b != Block::MAX {
                let i = bi * BITS + (!b).trailing_zeros() as usize;
                if i < self.len {
                    return Some(i);
                }
            }
        }
        None
    }

    pub fn iter_unset(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| !self.get(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut bs = BitSet::new(130);
        assert!(bs.set(0));
        assert!(!bs.set(0));
        assert!(bs.set(129));
        assert_eq!(bs.count_ones(), 2);
        assert_eq!(bs.first_unset(), Some(1));
        assert!(bs.clear(0));
        assert_eq!(bs.first_unset(), Some(0));
    }

    #[test]
    fn full() {
        let mut bs = BitSet::new(65);
        for i in 0..65 {
            bs.set(i);
        }
        assert!(bs.all_set());
        assert_eq!(bs.first_unset(), None);
        assert_eq!(bs.iter_unset().count(), 0);
    }
}
