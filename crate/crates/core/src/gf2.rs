//! Row reduction over GF(2).
//!
//! Bases are kept in reduced row echelon form with pivots scanned left to
//! right, which makes them canonical: two bases of the same subspace are
//! equal as values.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::Word;

/// A canonical (RREF) basis of a subspace of `F^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gf2Basis {
    n: usize,
    rows: Vec<Word>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    /// Basis of the zero subspace of `F^n`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces `words` to the canonical basis of their span.
    pub fn from_words<'a, I>(n: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut basis = Self::empty(n);
        for w in words {
            basis.insert(w)?;
        }
        Ok(basis)
    }

    /// Canonical basis of `⟨C⟩`.
    pub fn of_code(code: &Code) -> Self {
        let mut basis = Self::empty(code.n());
        for w in code {
            basis.insert_unchecked(w);
        }
        basis
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    /// Pivot column of each row, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, w: &Word) -> Result<()> {
        if w.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.n,
                right: w.len(),
            })
        }
    }

    /// Adds `w` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, w: &Word) -> Result<bool> {
        self.check_len(w)?;
        Ok(self.insert_unchecked(w))
    }

    fn insert_unchecked(&mut self, w: &Word) -> bool {
        let r = self.reduce_unchecked(w);
        let Some(pivot) = r.first_one() else {
            return false;
        };
        // r is zero on every existing pivot, so clearing column `pivot`
        // from the other rows keeps them reduced.
        for row in &mut self.rows {
            if row.get(pivot) {
                row.xor_in_place(&r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, r);
        true
    }

    fn reduce_unchecked(&self, w: &Word) -> Word {
        let mut r = w.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_in_place(row);
            }
        }
        r
    }

    /// Remainder of `w` after clearing every pivot column.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        self.check_len(w)?;
        Ok(self.reduce_unchecked(w))
    }

    pub fn in_span(&self, w: &Word) -> Result<bool> {
        Ok(self.reduce(w)?.is_zero())
    }

    /// Lists all `2^dim` vectors of the subspace.
    ///
    /// Fails when `dim > max_dim`.
    pub fn enumerate(&self, max_dim: usize) -> Result<Code> {
        let dim = self.dim();
        if dim > max_dim || dim >= usize::BITS as usize {
            return Err(Error::EnumerationCap { dim, cap: max_dim });
        }
        let mut current = Word::zeros(self.n)?;
        let mut out = Vec::with_capacity(1 << dim);
        out.push(current.clone());
        // Gray-code walk: step i flips the generator at trailing_zeros(i).
        for i in 1usize..(1 << dim) {
            current.xor_in_place(&self.rows[i.trailing_zeros() as usize]);
            out.push(current.clone());
        }
        Code::from_words(out)
    }
}

/// Canonical basis of the span of `words`; all words must have length `n`.
pub fn rref<'a, I>(n: usize, words: I) -> Result<Gf2Basis>
where
    I: IntoIterator<Item = &'a Word>,
{
    Gf2Basis::from_words(n, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn basis(ws: &[&str]) -> Gf2Basis {
        let words: Vec<Word> = ws.iter().map(|s| w(s)).collect();
        rref(words[0].len(), &words).unwrap()
    }

    #[test]
    fn rref_examples() {
        let b = basis(&["11", "01"]);
        assert_eq!(b.rows(), &[w("10"), w("01")]);
        assert_eq!(b.dim(), 2);
        assert_eq!(basis(&["000"]).dim(), 0);
        let b = basis(&["101", "101"]);
        assert_eq!(b.rows(), &[w("101")]);
        assert!(rref(2, &[w("01"), w("011")]).is_err());
    }

    #[test]
    fn rref_is_reduced() {
        let b = basis(&["1101", "0111", "1010", "0001"]);
        for (i, (row, &p)) in b.rows().iter().zip(b.pivots()).enumerate() {
            assert_eq!(row.first_one(), Some(p));
            for (j, other) in b.rows().iter().enumerate() {
                assert_eq!(other.get(p), i == j);
            }
        }
    }

    #[test]
    fn in_span_examples() {
        assert!(basis(&["10", "01"]).in_span(&w("11")).unwrap());
        assert!(Gf2Basis::empty(3).in_span(&w("000")).unwrap());
        assert!(!basis(&["11"]).in_span(&w("01")).unwrap());
        assert!(basis(&["11"]).in_span(&w("011")).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            Gf2Basis::empty(3).enumerate(20).unwrap(),
            Code::parse(&["000"]).unwrap()
        );
        assert_eq!(
            basis(&["11"]).enumerate(20).unwrap(),
            Code::parse(&["00", "11"]).unwrap()
        );
        assert_eq!(
            basis(&["11", "01"]).enumerate(20).unwrap(),
            Code::parse(&["00", "01", "10", "11"]).unwrap()
        );
        assert_eq!(
            basis(&["100", "010", "001"]).enumerate(2),
            Err(Error::EnumerationCap { dim: 3, cap: 2 })
        );
    }

    fn arb_words() -> impl Strategy<Value = (usize, Vec<Word>)> {
        (1usize..14).prop_flat_map(|n| {
            let word = any::<u64>().prop_map(move |i| Word::from_index(n, i).unwrap());
            (Just(n), prop::collection::vec(word, 0..16))
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_order_free((n, ws) in arb_words(), seed in any::<u64>()) {
            let b = rref(n, &ws).unwrap();
            prop_assert_eq!(&rref(n, b.rows()).unwrap(), &b);
            let mut shuffled = ws.clone();
            // deterministic shuffle keyed by seed
            shuffled.sort_by_key(|x| x.to_index().unwrap() ^ seed);
            prop_assert_eq!(&rref(n, &shuffled).unwrap(), &b);
            for x in &ws {
                prop_assert!(b.in_span(x).unwrap());
            }
        }

        #[test]
        fn enumeration_is_a_closed_subspace((n, ws) in arb_words()) {
            let b = rref(n, &ws).unwrap();
            prop_assume!(b.dim() <= 10);
            let span = b.enumerate(20).unwrap();
            prop_assert_eq!(span.len(), 1usize << b.dim());
            prop_assert!(span.contains_zero());
            for x in &span {
                prop_assert!(b.in_span(x).unwrap());
                for y in &span {
                    prop_assert!(span.contains(&x.xor(y).unwrap()));
                }
            }
        }
    }
}
