//! Fixed-width bitsets used for element masks and lattice-index masks.
//!
//! A `Bitset` with `len` bits behaves like an integer with bit `i` set for
//! each member `i`; comparison order is the numeric order of that integer,
//! which gives every family of masks a stable, reproducible sort.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    len: usize,
    words: Vec<u64>,
}

impl Bitset {
    /// Empty set over a universe of `len` bits.
    pub fn new(len: usize) -> Self {
        Bitset {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Full set over a universe of `len` bits.
    pub fn full(len: usize) -> Self {
        let mut s = Bitset::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    /// Set containing exactly the given members.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, idx: I) -> Self {
        let mut s = Bitset::new(len);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Bitset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Bitset) -> Bitset {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn is_subset(&self, other: &Bitset) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Bitset) -> bool {
        other.is_subset(self)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Lowercase hex rendering, most significant word first, for witnesses
    /// and labels. Leading zero words are trimmed.
    pub fn hex(&self) -> String {
        let mut out = String::new();
        let mut seen = false;
        for &w in self.words.iter().rev() {
            if seen {
                out.push_str(&format!("{w:016x}"));
            } else if w != 0 || std::ptr::eq(&w, &self.words[0]) {
                out.push_str(&format!("{w:x}"));
                seen = true;
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Ord for Bitset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Bitset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitset{{{}}}", self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_algebra() {
        let a = Bitset::from_indices(10, [0, 2, 4]);
        let b = Bitset::from_indices(10, [0, 3]);
        assert_eq!(a.count(), 3);
        assert!(a.contains(2) && !a.contains(3));
        assert_eq!(a.union(&b).count(), 4);
        assert_eq!(a.intersection(&b).count(), 1);
        assert!(Bitset::from_indices(10, [0, 2]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn order_matches_integer_value() {
        // {0,3} = 9 is smaller than {0,2,4} = 21.
        let a = Bitset::from_indices(6, [0, 3]);
        let b = Bitset::from_indices(6, [0, 2, 4]);
        assert!(a < b);
        // Across word boundaries the high bit dominates.
        let hi = Bitset::from_indices(70, [69]);
        let lo = Bitset::full(64);
        let lo = Bitset::from_indices(70, lo.iter());
        assert!(lo < hi);
    }

    #[test]
    fn hex_is_stable() {
        let a = Bitset::from_indices(8, [0, 2, 4]);
        assert_eq!(a.hex(), "15");
        assert_eq!(Bitset::new(8).hex(), "0");
    }
}
