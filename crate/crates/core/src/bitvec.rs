//! Fixed-capacity bit vectors.
//!
//! Bit `ℓ` lives in limb `ℓ / 64` at position `ℓ % 64`, so an index-increasing
//! shift is a limb-wise left shift of the machine words. To keep the direction
//! unambiguous the shifts are named after what they do to indices:
//! [`BitVec::shift_up`] sends bit `ℓ` to `ℓ + x` and [`BitVec::shift_down`]
//! sends bit `ℓ` to `ℓ - x`.
//!
//! The limb count is a const parameter. The default of two limbs gives 128
//! addressable bits, which covers every genus that can be counted on a desk.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign};

pub type Limb = u64;
pub const LIMB_BITS: usize = Limb::BITS as usize;
pub const DEFAULT_LIMBS: usize = 2;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitVec<const N: usize = DEFAULT_LIMBS> {
    limbs: [Limb; N],
    capacity: u32,
}

impl<const N: usize> BitVec<N> {
    pub const MAX_CAPACITY: usize = N * LIMB_BITS;

    /// An all-zero vector addressing indices `0..capacity`.
    pub fn zeros(capacity: usize) -> Self {
        assert!(
            capacity > 0 && capacity <= Self::MAX_CAPACITY,
            "capacity {capacity} outside 1..={}",
            Self::MAX_CAPACITY
        );
        BitVec {
            limbs: [0; N],
            capacity: capacity as u32,
        }
    }

    /// Bits `lo..hi` set. `lo` may be negative; it is clamped to 0.
    pub fn ones(lo: i64, hi: usize, capacity: usize) -> Self {
        let mut v = Self::zeros(capacity);
        assert!(hi <= capacity, "ones({lo}, {hi}) exceeds capacity {capacity}");
        let lo = lo.max(0) as usize;
        if lo >= hi {
            return v;
        }
        for (i, limb) in v.limbs.iter_mut().enumerate() {
            *limb = range_mask(i, lo, hi);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, leftmost character = index 0.
    pub fn from_bit_str(bits: &str, capacity: usize) -> Option<Self> {
        if bits.len() > capacity {
            return None;
        }
        let mut v = Self::zeros(capacity);
        for (i, ch) in bits.chars().enumerate() {
            match ch {
                '1' => v.set(i),
                '0' => {}
                _ => return None,
            }
        }
        Some(v)
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity as usize
    }

    #[inline]
    pub fn test(&self, idx: usize) -> bool {
        assert!(idx < self.capacity(), "bit {idx} outside capacity {}", self.capacity);
        (self.limbs[idx / LIMB_BITS] >> (idx % LIMB_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, idx: usize) {
        assert!(idx < self.capacity(), "bit {idx} outside capacity {}", self.capacity);
        self.limbs[idx / LIMB_BITS] |= 1 << (idx % LIMB_BITS);
    }

    #[inline]
    pub fn clear(&mut self, idx: usize) {
        assert!(idx < self.capacity(), "bit {idx} outside capacity {}", self.capacity);
        self.limbs[idx / LIMB_BITS] &= !(1 << (idx % LIMB_BITS));
    }

    #[must_use]
    pub fn with_bit(mut self, idx: usize) -> Self {
        self.set(idx);
        self
    }

    #[inline]
    pub fn popcount(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    /// Number of set bits with index below `end`.
    #[inline]
    pub fn popcount_below(&self, end: usize) -> u32 {
        let end = end.min(self.capacity());
        let mut total = 0;
        for (i, limb) in self.limbs.iter().enumerate() {
            total += (limb & range_mask(i, 0, end)).count_ones();
        }
        total
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Index of the highest set bit, if any.
    pub fn highest_set(&self) -> Option<usize> {
        self.limbs
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &l)| l != 0)
            .map(|(i, l)| i * LIMB_BITS + (LIMB_BITS - 1 - l.leading_zeros() as usize))
    }

    /// Bit `ℓ` of the result is bit `ℓ - x` of `self`; bits pushed past the
    /// capacity are dropped.
    #[inline]
    #[must_use]
    pub fn shift_up(&self, x: usize) -> Self {
        let mut out = Self::zeros(self.capacity());
        if x >= self.capacity() {
            return out;
        }
        let (whole, part) = (x / LIMB_BITS, x % LIMB_BITS);
        for i in (whole..N).rev() {
            let src = i - whole;
            let mut v = self.limbs[src] << part;
            if part > 0 && src > 0 {
                v |= self.limbs[src - 1] >> (LIMB_BITS - part);
            }
            out.limbs[i] = v;
        }
        out.mask_to_capacity();
        out
    }

    /// Bit `ℓ` of the result is bit `ℓ + x` of `self`.
    #[inline]
    #[must_use]
    pub fn shift_down(&self, x: usize) -> Self {
        let mut out = Self::zeros(self.capacity());
        if x >= self.capacity() {
            return out;
        }
        let (whole, part) = (x / LIMB_BITS, x % LIMB_BITS);
        for i in 0..N - whole {
            let src = i + whole;
            let mut v = self.limbs[src] >> part;
            if part > 0 && src + 1 < N {
                v |= self.limbs[src + 1] << (LIMB_BITS - part);
            }
            out.limbs[i] = v;
        }
        out
    }

    /// Same bits under a different capacity. Returns `None` if a set bit
    /// would fall outside the new capacity.
    pub fn resized(&self, capacity: usize) -> Option<Self> {
        if capacity == 0 || capacity > Self::MAX_CAPACITY {
            return None;
        }
        if self.highest_set().is_some_and(|h| h >= capacity) {
            return None;
        }
        Some(BitVec {
            limbs: self.limbs,
            capacity: capacity as u32,
        })
    }

    /// The first `len` bits as `0`/`1` characters, index 0 first.
    pub fn render(&self, len: usize) -> String {
        (0..len)
            .map(|i| if i < self.capacity() && self.test(i) { '1' } else { '0' })
            .collect()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity()).filter(move |&i| self.test(i))
    }

    #[inline]
    fn mask_to_capacity(&mut self) {
        let cap = self.capacity();
        for (i, limb) in self.limbs.iter_mut().enumerate() {
            *limb &= range_mask(i, 0, cap);
        }
    }
}

/// Bits of limb `i` whose global index lies in `lo..hi`.
#[inline]
fn range_mask(i: usize, lo: usize, hi: usize) -> Limb {
    let start = i * LIMB_BITS;
    let end = start + LIMB_BITS;
    if hi <= start || lo >= end {
        return 0;
    }
    let a = lo.saturating_sub(start);
    let b = hi.min(end) - start;
    let upper = if b == LIMB_BITS { Limb::MAX } else { (1 << b) - 1 };
    upper & !((1 << a) - 1)
}

impl<const N: usize> BitAnd for BitVec<N> {
    type Output = Self;

    #[inline]
    fn bitand(mut self, rhs: Self) -> Self {
        self &= rhs;
        self
    }
}

impl<const N: usize> BitAndAssign for BitVec<N> {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.capacity, rhs.capacity);
        for (a, b) in self.limbs.iter_mut().zip(rhs.limbs) {
            *a &= b;
        }
    }
}

impl<const N: usize> BitOr for BitVec<N> {
    type Output = Self;

    #[inline]
    fn bitor(mut self, rhs: Self) -> Self {
        self |= rhs;
        self
    }
}

impl<const N: usize> BitOrAssign for BitVec<N> {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.capacity, rhs.capacity);
        for (a, b) in self.limbs.iter_mut().zip(rhs.limbs) {
            *a |= b;
        }
    }
}

impl<const N: usize> fmt::Display for BitVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.capacity()))
    }
}

impl<const N: usize> fmt::Debug for BitVec<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str, cap: usize) -> BitVec {
        BitVec::from_bit_str(s, cap).unwrap()
    }

    #[test]
    fn shift_up_relabels_indices() {
        assert_eq!(bv("10110", 8).shift_up(1).render(6), "010110");
        assert_eq!(bv("11110110", 8).shift_up(1).render(8), "01111011");
        let g = bv("11110110", 16);
        assert_eq!(g.shift_up(0), g);
        // The top bit falls off a tight capacity.
        assert_eq!(bv("11110111", 8).shift_up(1).render(8), "01111011");
    }

    #[test]
    fn shift_down_relabels_indices() {
        assert_eq!(bv("0101", 4).shift_down(2).render(4), "0100");
        assert_eq!(bv("00011000", 8).shift_down(4).render(8), "10000000");
        let v = bv("00011000", 8);
        assert_eq!(v.shift_down(0), v);
        assert!(v.shift_down(8).is_zero());
    }

    #[test]
    fn shifts_cross_limb_boundaries() {
        let mut v = BitVec::<2>::zeros(128);
        v.set(62);
        v.set(63);
        let up = v.shift_up(3);
        assert_eq!(up.iter_ones().collect::<Vec<_>>(), vec![65, 66]);
        assert_eq!(up.shift_down(3), v);
        assert_eq!(v.shift_up(64).iter_ones().collect::<Vec<_>>(), vec![126, 127]);
        assert!(v.shift_up(66).is_zero());
        let mut w = BitVec::<2>::zeros(100);
        w.set(99);
        assert_eq!(w.shift_down(70).iter_ones().collect::<Vec<_>>(), vec![29]);
    }

    #[test]
    fn bitwise_ops() {
        assert_eq!((bv("1101", 4) & bv("0111", 4)).render(4), "0101");
        assert_eq!((bv("1100", 4) | bv("0011", 4)).render(4), "1111");
        assert_eq!(BitVec::<2>::ones(7, 10, 12).render(12), "000000011100");
        assert_eq!(BitVec::<2>::ones(-1, 2, 2).render(2), "11");
        assert!(BitVec::<2>::ones(5, 5, 8).is_zero());
        assert_eq!(BitVec::<2>::ones(60, 70, 128).popcount(), 10);
        assert_eq!(bv("11111110100110", 14).popcount(), 10);
        assert_eq!(bv("11111110100110", 14).popcount_below(8), 7);
    }

    #[test]
    fn set_then_test() {
        let mut v = BitVec::<1>::zeros(10);
        v.set(9);
        assert!(v.test(9));
        v.clear(9);
        assert!(!v.test(9));
        assert!(v.with_bit(3).test(3));
    }

    #[test]
    #[should_panic]
    fn test_out_of_capacity_panics() {
        BitVec::<2>::zeros(8).test(8);
    }

    #[test]
    fn resize_keeps_live_bits() {
        let v = bv("1011", 4);
        let w = v.resized(20).unwrap();
        assert_eq!(w.render(20), "10110000000000000000");
        assert!(w.resized(3).is_none());
        assert_eq!(w.resized(4), Some(v));
        assert_eq!(format!("{v}"), "1011");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(BitVec::<2>::from_bit_str("10x", 8).is_none());
        assert!(BitVec::<2>::from_bit_str("101", 2).is_none());
    }
}
