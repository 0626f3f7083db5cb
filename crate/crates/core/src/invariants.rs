//! Minimum distance, rank, kernel and linearity of a code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::gf2::Gf2Basis;

/// `Ker(C)` both as a set and as a canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub words: Code,
    pub basis: Gf2Basis,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// Minimum distance over unordered pairs of distinct codewords.
///
/// Linear codes take the minimum-nonzero-weight route instead; both routes
/// are public so they can be checked against each other.
pub fn min_distance(code: &Code) -> Result<usize> {
    if is_linear(code) {
        min_nonzero_weight(code)
    } else {
        min_distance_pairwise(code)
    }
}

/// `min d(a, b)` over all pairs `a ≠ b`, by exhaustive comparison.
pub fn min_distance_pairwise(code: &Code) -> Result<usize> {
    if code.len() < 2 {
        return Err(Error::DistanceUndefined);
    }
    let words = code.words();
    let mut best = usize::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            best = best.min(a.distance_unchecked(b));
        }
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

/// Smallest weight of a nonzero codeword. Equals the minimum distance only
/// when the code is linear.
pub fn min_nonzero_weight(code: &Code) -> Result<usize> {
    if code.len() < 2 {
        return Err(Error::DistanceUndefined);
    }
    code.iter()
        .map(|w| w.weight())
        .filter(|&wt| wt > 0)
        .min()
        .ok_or(Error::DistanceUndefined)
}

/// Canonical basis of the linear span `⟨C⟩`.
pub fn span_basis(code: &Code) -> Gf2Basis {
    Gf2Basis::of_code(code)
}

/// `dim ⟨C⟩`.
pub fn rank(code: &Code) -> usize {
    span_basis(code).dim()
}

/// `Ker(C) = {x : C + x = C}`.
///
/// Any kernel vector `x` maps a fixed `c0 ∈ C` to `c0 + x ∈ C`, so only the
/// `|C|` vectors `c + c0` need testing. Candidates already in the span of
/// kernel vectors found so far are skipped; the kernel is a subspace.
pub fn kernel(code: &Code) -> Kernel {
    let c0 = code.first();
    let mut basis = Gf2Basis::empty(code.n());
    for c in code {
        let x = c.xor(c0).expect("codewords share a length");
        if basis.reduce(&x).expect("same length").is_zero() {
            continue;
        }
        if code.invariant_unchecked(&x) {
            basis.insert(&x).expect("same length");
        }
    }
    // |Ker(C)| <= |C|, so enumeration is bounded by the code itself.
    let words = basis
        .enumerate(usize::BITS as usize - 1)
        .expect("kernel is no larger than the code");
    Kernel { words, basis }
}

/// Whether `C` is a subspace: `|C| = 2^rank(C)`, since `C ⊆ ⟨C⟩`.
pub fn is_linear(code: &Code) -> bool {
    linear_given_rank(code, rank(code))
}

fn linear_given_rank(code: &Code, rank: usize) -> bool {
    1usize
        .checked_shl(rank as u32)
        .is_some_and(|size| size == code.len())
}

/// The standard parameters of a code in one record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    /// Cardinality `|C|`.
    pub size: usize,
    /// Minimum distance; `None` for a single-word code.
    pub distance: Option<usize>,
    pub rank: usize,
    pub ker_dim: usize,
    pub is_linear: bool,
    /// The kernel is only a subcode when this holds.
    pub contains_zero: bool,
}

pub fn summarize(code: &Code) -> CodeSummary {
    let rank = rank(code);
    let linear = linear_given_rank(code, rank);
    let distance = if code.len() < 2 {
        None
    } else if linear {
        min_nonzero_weight(code).ok()
    } else {
        min_distance_pairwise(code).ok()
    };
    CodeSummary {
        n: code.n(),
        size: code.len(),
        distance,
        rank,
        ker_dim: kernel(code).dim(),
        is_linear: linear,
        contains_zero: code.contains_zero(),
    }
}

impl CodeSummary {
    /// `[n, k, d]` for linear codes, `(n, M, d)` otherwise.
    pub fn params(&self) -> String {
        let d = self
            .distance
            .map_or_else(|| "-".to_owned(), |d| d.to_string());
        if self.is_linear {
            format!("[{}, {}, {}]", self.n, self.rank, d)
        } else {
            format!("({}, {}, {})", self.n, self.size, d)
        }
    }
}

impl fmt::Display for CodeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} rank={} ker={} {}",
            self.params(),
            self.rank,
            self.ker_dim,
            if self.is_linear {
                "linear"
            } else {
                "nonlinear"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::kernel_bruteforce;
    use crate::word::Word;
    use proptest::prelude::*;

    fn code(ws: &[&str]) -> Code {
        Code::parse(ws).unwrap()
    }

    fn parity4() -> Code {
        let ws = (0..16u64)
            .filter(|i| i.count_ones() % 2 == 0)
            .map(|i| Word::from_index(4, i).unwrap());
        Code::from_words(ws).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(min_distance(&code(&["00", "11"])).unwrap(), 2);
        assert_eq!(min_distance(&code(&["00", "01", "10"])).unwrap(), 1);
        assert_eq!(min_distance(&parity4()).unwrap(), 2);
        assert_eq!(min_distance(&code(&["010"])), Err(Error::DistanceUndefined));
    }

    #[test]
    fn weight_route_is_wrong_for_nonlinear_codes() {
        // distance 1 between 011 and 111, but the lightest nonzero word has weight 2
        let c = code(&["000", "011", "111"]);
        assert_eq!(min_distance_pairwise(&c).unwrap(), 1);
        assert_eq!(min_nonzero_weight(&c).unwrap(), 2);
        assert_eq!(min_distance(&c).unwrap(), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Code::zero(5).unwrap()), 0);
        assert_eq!(rank(&code(&["00", "01", "10"])), 2);
        assert_eq!(rank(&parity4()), 3);
    }

    #[test]
    fn kernel_examples() {
        let p = parity4();
        assert_eq!(kernel(&p).words, p);
        assert_eq!(kernel(&code(&["00", "01", "10"])).words, code(&["00"]));
        let k = kernel(&code(&["0000", "0011", "0101", "0110", "1010", "1001"]));
        assert_eq!(k.words, code(&["0000", "0011"]));
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn linearity_examples() {
        assert!(is_linear(&code(&["00", "11"])));
        assert!(!is_linear(&code(&["00", "01", "10"])));
        assert!(is_linear(&Code::zero(4).unwrap()));
        // right size, but a coset rather than a subspace
        assert!(!is_linear(&code(&["01", "10"])));
    }

    #[test]
    fn summary_examples() {
        let s = summarize(&code(&["00", "11"]));
        assert_eq!(
            (s.n, s.size, s.distance, s.rank, s.ker_dim, s.is_linear),
            (2, 2, Some(2), 1, 1, true)
        );
        let s = summarize(&code(&["00", "01", "10"]));
        assert_eq!(
            (s.n, s.size, s.distance, s.rank, s.ker_dim, s.is_linear),
            (2, 3, Some(1), 2, 0, false)
        );
        assert_eq!(s.to_string(), "(2, 3, 1) rank=2 ker=0 nonlinear");
        let s = summarize(&Code::zero(3).unwrap());
        assert_eq!(
            (s.n, s.size, s.distance, s.rank, s.ker_dim, s.is_linear),
            (3, 1, None, 0, 0, true)
        );
        assert_eq!(s.to_string(), "[3, 0, -] rank=0 ker=0 linear");
    }

    fn arb_code() -> impl Strategy<Value = Code> {
        (1usize..=8).prop_flat_map(|n| {
            let word = any::<u64>().prop_map(move |i| Word::from_index(n, i).unwrap());
            prop::collection::vec(word, 1..48).prop_map(|ws| Code::from_words(ws).unwrap())
        })
    }

    proptest! {
        #[test]
        fn kernel_matches_bruteforce(c in arb_code()) {
            let k = kernel(&c);
            prop_assert_eq!(&k.words, &kernel_bruteforce(&c).unwrap());
            prop_assert!(k.words.contains_zero());
            for x in &k.words {
                for y in &k.words {
                    prop_assert!(k.words.contains(&x.xor(y).unwrap()));
                }
            }
            if c.contains_zero() {
                prop_assert!(k.words.is_subset(&c));
            }
        }

        #[test]
        fn summary_is_consistent(c in arb_code()) {
            let s = summarize(&c);
            prop_assert!(s.ker_dim <= s.rank && s.rank <= s.n);
            prop_assert!(s.size <= 1usize << s.rank);
            prop_assert_eq!(s.is_linear, s.size == 1usize << s.rank);
            prop_assert_eq!(s.is_linear, s.rank == s.ker_dim && s.contains_zero);
            if s.size >= 2 {
                let pairwise = min_distance_pairwise(&c).unwrap();
                prop_assert_eq!(s.distance, Some(pairwise));
                if s.is_linear {
                    prop_assert_eq!(min_nonzero_weight(&c).unwrap(), pairwise);
                }
            }
        }
    }
}
