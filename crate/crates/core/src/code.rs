use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::word::Word;

/// A binary block code: a nonempty set of distinct words of common length `n`.
///
/// Iteration order is lexicographic by bit string.
#[derive(Clone)]
pub struct Code {
    n: usize,
    words: IndexSet<Word>,
}

impl Code {
    /// Collects `words` into a code, dropping duplicates.
    pub fn from_words<I>(words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        Self::from_words_with(words, &Limits::default())
    }

    pub fn from_words_with<I>(words: I, limits: &Limits) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut iter = words.into_iter();
        let first = iter.next().ok_or(Error::EmptyCode)?;
        let n = first.len();
        if n > limits.max_len {
            return Err(Error::WordTooLong {
                len: n,
                max: limits.max_len,
            });
        }
        let mut set = IndexSet::new();
        set.insert(first);
        for w in iter {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
            set.insert(w);
        }
        set.sort_unstable();
        Ok(Self { n, words: set })
    }

    /// Parses each string as a word; convenient for tests and fixtures.
    pub fn parse<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let words = words
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<Word>>>()?;
        Self::from_words(words)
    }

    /// The code `{0}` of length `n`.
    pub fn zero(n: usize) -> Result<Self> {
        Self::from_words([Word::zeros(n)?])
    }

    /// Word length.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of codewords, `|C|`.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false: codes have at least one word.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn contains_zero(&self) -> bool {
        self.words.first().is_some_and(Word::is_zero)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Word> + '_ {
        self.words.iter()
    }

    pub fn words(&self) -> Vec<Word> {
        self.words.iter().cloned().collect()
    }

    /// Smallest word in lexicographic order.
    pub fn first(&self) -> &Word {
        self.words.first().expect("codes are nonempty")
    }

    pub fn is_subset(&self, other: &Code) -> bool {
        self.n == other.n && self.words.iter().all(|w| other.contains(w))
    }

    fn check_len(&self, x: &Word) -> Result<()> {
        if x.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.n,
                right: x.len(),
            })
        }
    }

    /// The coset `C + x`.
    pub fn translate(&self, x: &Word) -> Result<Code> {
        self.check_len(x)?;
        let mut set: IndexSet<Word> = self
            .words
            .iter()
            .map(|c| {
                let mut t = c.clone();
                t.xor_in_place(x);
                t
            })
            .collect();
        set.sort_unstable();
        Ok(Code {
            n: self.n,
            words: set,
        })
    }

    /// Whether `C + x = C`, answered by membership queries with early exit.
    ///
    /// Since translation is injective, `C + x ⊆ C` already forces equality.
    pub fn is_invariant_under(&self, x: &Word) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.invariant_unchecked(x))
    }

    pub(crate) fn invariant_unchecked(&self, x: &Word) -> bool {
        let mut probe = x.clone();
        self.words.iter().all(|c| {
            probe.xor_in_place(c);
            let hit = self.words.contains(&probe);
            probe.xor_in_place(c);
            hit
        })
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        // both sides are sorted
        self.n == other.n && self.words.iter().eq(other.words.iter())
    }
}

impl Eq for Code {}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a Code {
    type Item = &'a Word;
    type IntoIter = indexmap::set::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(ws: &[&str]) -> Code {
        Code::parse(ws).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn dedupes_and_sorts() {
        let c = code(&["11", "00", "11"]);
        assert_eq!(c.n(), 2);
        assert_eq!(c.len(), 2);
        assert_eq!(c.words(), vec![w("00"), w("11")]);
        assert_eq!(code(&["0000"]).len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Code::from_words(Vec::new()), Err(Error::EmptyCode));
        assert_eq!(
            Code::parse(&["00", "111"]),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
        let tight = Limits {
            max_len: 4,
            ..Limits::default()
        };
        assert_eq!(
            Code::from_words_with([w("00000")], &tight),
            Err(Error::WordTooLong { len: 5, max: 4 })
        );
    }

    #[test]
    fn translate_examples() {
        let c = code(&["00", "01", "10"]);
        assert_eq!(c.translate(&w("00")).unwrap(), c);
        assert_eq!(c.translate(&w("01")).unwrap(), code(&["01", "00", "11"]));
        let rep = code(&["00", "11"]);
        assert_eq!(rep.translate(&w("11")).unwrap(), rep);
        assert!(rep.is_invariant_under(&w("11")).unwrap());
        assert!(!c.is_invariant_under(&w("01")).unwrap());
        assert!(c.translate(&w("0")).is_err());
    }

    #[test]
    fn zero_membership() {
        assert!(code(&["00", "11"]).contains_zero());
        assert!(!code(&["01", "11"]).contains_zero());
    }

    fn arb_code_and_shift() -> impl Strategy<Value = (Code, Word)> {
        (1usize..12).prop_flat_map(|n| {
            let word = move || any::<u64>().prop_map(move |i| Word::from_index(n, i).unwrap());
            (prop::collection::vec(word(), 1..40), word())
                .prop_map(|(ws, x)| (Code::from_words(ws).unwrap(), x))
        })
    }

    proptest! {
        #[test]
        fn translation_is_an_involution((c, x) in arb_code_and_shift()) {
            let t = c.translate(&x).unwrap();
            prop_assert_eq!(t.len(), c.len());
            prop_assert_eq!(t.translate(&x).unwrap(), c.clone());
            prop_assert_eq!(c.is_invariant_under(&x).unwrap(), t == c);
        }
    }
}
