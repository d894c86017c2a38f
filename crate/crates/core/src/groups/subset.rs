use smallvec::SmallVec;

/// A subset of `0..universe`, stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    universe: u64,
    len: u64,
    words: SmallVec<[u64; 2]>,
}

impl IndexSet {
    pub fn new(universe: u64) -> Self {
        let words = universe.div_ceil(64) as usize;
        IndexSet {
            universe,
            len: 0,
            words: smallvec::smallvec![0; words],
        }
    }

    /// The initial segment `{0, 1, .., count - 1}`.
    pub fn prefix(universe: u64, count: u64) -> Self {
        let mut set = IndexSet::new(universe);
        let count = count.min(universe);
        let full = (count / 64) as usize;
        for w in &mut set.words[..full] {
            *w = u64::MAX;
        }
        if !count.is_multiple_of(64) {
            set.words[full] = (1u64 << (count % 64)) - 1;
        }
        set.len = count;
        set
    }

    /// Builds a set from indices; returns the first out-of-range index on
    /// failure. Duplicates are ignored.
    pub fn from_indices<I: IntoIterator<Item = u64>>(universe: u64, items: I) -> Result<Self, u64> {
        let mut set = IndexSet::new(universe);
        for i in items {
            if i >= universe {
                return Err(i);
            }
            set.insert(i);
        }
        Ok(set)
    }

    /// Builds a set from the low `universe` bits of `mask`. Requires
    /// `universe <= 64`.
    pub fn from_mask(universe: u64, mask: u64) -> Self {
        assert!(universe <= 64);
        let mask = if universe == 64 {
            mask
        } else {
            mask & ((1u64 << universe) - 1)
        };
        let mut words = SmallVec::new();
        if universe > 0 {
            words.push(mask);
        }
        IndexSet {
            universe,
            len: mask.count_ones() as u64,
            words,
        }
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, i: u64) -> bool {
        i < self.universe && self.words[(i / 64) as usize] & (1 << (i % 64)) != 0
    }

    /// Returns true if `i` was not already present.
    #[inline]
    pub fn insert(&mut self, i: u64) -> bool {
        debug_assert!(i < self.universe);
        let w = &mut self.words[(i / 64) as usize];
        let bit = 1u64 << (i % 64);
        if *w & bit == 0 {
            *w |= bit;
            self.len += 1;
            true
        } else {
            false
        }
    }

    /// Least index of the universe that is not in the set.
    pub fn first_absent(&self) -> Option<u64> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let i = k as u64 * 64 + (!w).trailing_zeros() as u64;
                return (i < self.universe).then_some(i);
            }
        }
        None
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| BitIter {
            base: k as u64 * 64,
            word: w,
        })
    }

    /// Non-members in increasing order.
    pub fn iter_absent(&self) -> impl Iterator<Item = u64> + '_ {
        let universe = self.universe;
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| BitIter {
                base: k as u64 * 64,
                word: !w,
            })
            .take_while(move |&i| i < universe)
    }

    /// The set as a bit mask, for universes of at most 64 elements.
    pub fn as_mask(&self) -> Option<u64> {
        match self.universe {
            0 => Some(0),
            1..=64 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }
}

struct BitIter {
    base: u64,
    word: u64,
}

impl Iterator for BitIter {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.word == 0 {
            return None;
        }
        let t = self.word.trailing_zeros() as u64;
        self.word &= self.word - 1;
        Some(self.base + t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_and_first_absent() {
        let s = IndexSet::prefix(70, 65);
        assert_eq!(s.len(), 65);
        assert!(s.contains(64));
        assert!(!s.contains(65));
        assert_eq!(s.first_absent(), Some(65));
        assert_eq!(IndexSet::prefix(64, 64).first_absent(), None);
        assert_eq!(IndexSet::prefix(3, 3).first_absent(), None);
    }

    #[test]
    fn absent_iteration_stops_at_universe() {
        let s = IndexSet::from_indices(5, [1, 3]).unwrap();
        assert_eq!(s.iter_absent().collect::<Vec<_>>(), vec![0, 2, 4]);
        assert_eq!(s.to_vec(), vec![1, 3]);
    }

    #[test]
    fn out_of_range_index_is_reported() {
        assert_eq!(IndexSet::from_indices(4, [0, 4]), Err(4));
    }

    #[test]
    fn mask_round_trip() {
        assert_eq!(IndexSet::from_mask(5, 0b10110).as_mask(), Some(0b10110));
        assert_eq!(IndexSet::new(65).as_mask(), None);
        let s = IndexSet::from_mask(6, 0b110101);
        assert_eq!(s.to_vec(), vec![0, 2, 4, 5]);
        assert_eq!(s.len(), 4);
    }
}
