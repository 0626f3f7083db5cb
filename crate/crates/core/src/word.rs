//! Fixed-length bit vectors over GF(2).
//!
//! Coordinate 0 is the leftmost character of the printed form. Bits are
//! packed most-significant-first into `u64` blocks, so comparing the block
//! vectors of two equal-length words is the same as comparing their bit
//! strings lexicographically. Storage past `len` is always zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const BITS: usize = u64::BITS as usize;

#[inline]
fn blocks_for(len: usize) -> usize {
    len.div_ceil(BITS)
}

#[inline]
fn mask(i: usize) -> u64 {
    1u64 << (BITS - 1 - i % BITS)
}

/// A codeword: `len` bits, packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: usize,
    blocks: Vec<u64>,
}

impl Word {
    /// The all-zero word of length `len`.
    pub fn zeros(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Self {
            len,
            blocks: vec![0; blocks_for(len)],
        })
    }

    /// The all-one word of length `len`.
    pub fn ones(len: usize) -> Result<Self> {
        Self::from_fn(len, |_| true)
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        for i in 0..len {
            if f(i) {
                w.blocks[i / BITS] |= mask(i);
            }
        }
        Ok(w)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        Self::from_fn(bits.len(), |i| bits[i])
    }

    /// The word whose bit string is the `len`-digit binary expansion of
    /// `index`; coordinate 0 carries the most significant digit, so numeric
    /// order on indices is lexicographic order on words.
    ///
    /// Bits of `index` at or above `len` are ignored.
    pub fn from_index(len: usize, index: u64) -> Result<Self> {
        Self::from_fn(len, |i| {
            let shift = len - 1 - i;
            shift < 64 && (index >> shift) & 1 == 1
        })
    }

    /// Inverse of [`Word::from_index`] for words of at most 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        if self.len > BITS {
            return None;
        }
        Some(self.blocks[0] >> (BITS - self.len))
    }

    /// Builds a word from raw MSB-first blocks, clearing padding bits.
    pub(crate) fn from_blocks(len: usize, mut blocks: Vec<u64>) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptyWord);
        }
        blocks.resize(blocks_for(len), 0);
        let tail = len % BITS;
        if tail != 0 {
            if let Some(last) = blocks.last_mut() {
                *last &= !(u64::MAX >> tail);
            }
        }
        Ok(Self { len, blocks })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; words have at least one coordinate.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range for length {}",
            self.len
        );
        self.blocks[i / BITS] & mask(i) != 0
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Index of the leftmost 1, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, &b)| b != 0)
            .map(|(k, b)| k * BITS + b.leading_zeros() as usize)
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            })
        }
    }

    /// Coordinatewise sum over GF(2).
    pub fn xor(&self, other: &Word) -> Result<Word> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_in_place(other);
        Ok(out)
    }

    /// `self ^= other`; lengths must already agree.
    #[inline]
    pub(crate) fn xor_in_place(&mut self, other: &Word) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    /// Number of coordinates in which the two words differ.
    pub fn distance(&self, other: &Word) -> Result<usize> {
        self.check_len(other)?;
        Ok(self.distance_unchecked(other))
    }

    #[inline]
    pub(crate) fn distance_unchecked(&self, other: &Word) -> usize {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// `(self | other)`: `self` occupies coordinates `0..self.len()`.
    pub fn concat(&self, other: &Word) -> Word {
        let len = self.len + other.len;
        let mut blocks = self.blocks.clone();
        blocks.resize(blocks_for(len), 0);
        let offset = self.len;
        for (j, &b) in other.blocks.iter().enumerate() {
            let pos = offset + j * BITS;
            let (k, shift) = (pos / BITS, pos % BITS);
            blocks[k] |= b >> shift;
            if shift != 0 && k + 1 < blocks.len() {
                blocks[k + 1] |= b << (BITS - shift);
            }
        }
        Word { len, blocks }
    }

    /// Splits into `(self[..mid], self[mid..])`. Both halves must be nonempty.
    pub fn split_at(&self, mid: usize) -> Result<(Word, Word)> {
        if mid == 0 || mid >= self.len {
            return Err(Error::EmptyWord);
        }
        let left = Word::from_blocks(mid, self.blocks[..blocks_for(mid)].to_vec())?;
        let right = Word::from_fn(self.len - mid, |i| self.get(mid + i))?;
        Ok((left, right))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits().map(|b| if b { '1' } else { '0' }).collect();
        f.pad(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (column, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::InvalidBit {
                        ch,
                        column: column + 1,
                    })
                }
            }
        }
        Word::from_bits(&bits)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn xor_examples() {
        assert_eq!(w("0101").xor(&w("0011")).unwrap(), w("0110"));
        let x = w("1101001");
        assert!(x.xor(&x).unwrap().is_zero());
        assert_eq!(x.xor(&Word::zeros(7).unwrap()).unwrap(), x);
        assert_eq!(
            w("01").xor(&w("011")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn distance_examples() {
        assert_eq!(w("0101").distance(&w("0011")).unwrap(), 2);
        assert_eq!(w("0101").distance(&w("0101")).unwrap(), 0);
        for n in [1, 5, 64, 65, 130] {
            let d = Word::zeros(n).unwrap().distance(&Word::ones(n).unwrap());
            assert_eq!(d.unwrap(), n);
        }
        assert!(w("0").distance(&w("00")).is_err());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("01").concat(&w("11")), w("0111"));
        let z = Word::zeros(3).unwrap();
        assert_eq!(z.concat(&z), Word::zeros(6).unwrap());
        let (u, v) = (w("10"), w("11"));
        assert_eq!(u.concat(&u.xor(&v).unwrap()), w("1001"));
    }

    #[test]
    fn zero_length_rejected() {
        assert_eq!(Word::zeros(0), Err(Error::EmptyWord));
        assert_eq!("".parse::<Word>(), Err(Error::EmptyWord));
        assert_eq!(
            "01x".parse::<Word>(),
            Err(Error::InvalidBit { ch: 'x', column: 3 })
        );
    }

    #[test]
    fn index_round_trip_and_order() {
        assert_eq!(Word::from_index(4, 0b0110).unwrap(), w("0110"));
        assert_eq!(w("1011").to_index(), Some(11));
        assert!(Word::from_index(3, 2).unwrap() < Word::from_index(3, 5).unwrap());
    }

    #[test]
    fn first_one_across_blocks() {
        assert_eq!(Word::zeros(100).unwrap().first_one(), None);
        let x = Word::from_fn(100, |i| i == 70).unwrap();
        assert_eq!(x.first_one(), Some(70));
    }

    #[test]
    fn padding_stays_clear() {
        let x = Word::from_blocks(3, vec![u64::MAX]).unwrap();
        assert_eq!(x, w("111"));
        assert_eq!(x.weight(), 3);
    }

    fn arb_bits(max: usize) -> impl Strategy<Value = Vec<bool>> {
        prop::collection::vec(any::<bool>(), 1..max)
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(bits in arb_bits(200)) {
            let x = Word::from_bits(&bits).unwrap();
            prop_assert_eq!(x.to_string().parse::<Word>().unwrap(), x);
        }

        #[test]
        fn concat_matches_bitwise_and_splits_back(a in arb_bits(150), b in arb_bits(150)) {
            let (x, y) = (Word::from_bits(&a).unwrap(), Word::from_bits(&b).unwrap());
            let joined = x.concat(&y);
            prop_assert_eq!(joined.len(), x.len() + y.len());
            let expected: Vec<bool> = a.iter().chain(&b).copied().collect();
            prop_assert_eq!(joined.bits().collect::<Vec<_>>(), expected);
            prop_assert_eq!(joined.split_at(x.len()).unwrap(), (x, y));
        }

        #[test]
        fn triangle_inequality(triple in (1usize..150).prop_flat_map(|n| {
            let v = || prop::collection::vec(any::<bool>(), n);
            (v(), v(), v())
        })) {
            let a = Word::from_bits(&triple.0).unwrap();
            let b = Word::from_bits(&triple.1).unwrap();
            let c = Word::from_bits(&triple.2).unwrap();
            let ab = a.distance(&b).unwrap();
            let bc = b.distance(&c).unwrap();
            let ac = a.distance(&c).unwrap();
            prop_assert!(ac <= ab + bc);
            prop_assert_eq!(ab, b.distance(&a).unwrap());
            prop_assert_eq!(ab, a.xor(&b).unwrap().weight());
            prop_assert_eq!(ab == 0, a == b);
        }

        #[test]
        fn order_is_lexicographic(pair in (1usize..140).prop_flat_map(|n| {
            (prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n))
        })) {
            let a = Word::from_bits(&pair.0).unwrap();
            let b = Word::from_bits(&pair.1).unwrap();
            prop_assert_eq!(a.cmp(&b), a.to_string().cmp(&b.to_string()));
        }
    }
}
