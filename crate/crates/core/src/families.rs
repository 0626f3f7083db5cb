//! Known code families and seeded random codes.
//!
//! Random codes come from ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! so a given `(n, M, seed, include_zero)` always yields the same code for a
//! given build of this crate.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::gf2::Gf2Basis;
use crate::limits::Limits;
use crate::plotkin::plotkin_construct;
use crate::word::Word;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(invalid("length must be at least 1"))
    } else {
        Ok(())
    }
}

fn check_enum(dim: usize, limits: &Limits) -> Result<()> {
    if dim > limits.max_enum_dim {
        Err(Error::EnumerationCap {
            dim,
            cap: limits.max_enum_dim,
        })
    } else {
        Ok(())
    }
}

/// `{0ⁿ, 1ⁿ}`, an `[n, 1, n]` code.
pub fn repetition(n: usize) -> Result<Code> {
    check_n(n)?;
    Code::from_words([Word::zeros(n)?, Word::ones(n)?])
}

/// All of `F^n`, an `[n, n, 1]` code.
pub fn universe(n: usize) -> Result<Code> {
    universe_with(n, &Limits::default())
}

fn universe_with(n: usize, limits: &Limits) -> Result<Code> {
    check_n(n)?;
    check_enum(n, limits)?;
    let words = (0..1u64 << n).map(|i| Word::from_index(n, i));
    Code::from_words(words.collect::<Result<Vec<_>>>()?)
}

/// Even-weight words, an `[n, n-1, 2]` code; `{0}` when `n = 1`.
pub fn parity(n: usize) -> Result<Code> {
    parity_with(n, &Limits::default())
}

fn parity_with(n: usize, limits: &Limits) -> Result<Code> {
    check_n(n)?;
    check_enum(n - 1, limits)?;
    let rows: Vec<Word> = (1..n)
        .map(|i| Word::from_fn(n, |j| j == 0 || j == i))
        .collect::<Result<_>>()?;
    Gf2Basis::from_words(n, &rows)?.enumerate(limits.max_enum_dim)
}

/// `RM(r, m)` through the recursion
/// `RM(r, m) = (RM(r, m-1) | RM(r, m-1) + RM(r-1, m-1))`,
/// bottoming out at `RM(0, m)` = repetition and `RM(m, m)` = universe.
pub fn reed_muller(r: usize, m: usize) -> Result<Code> {
    reed_muller_with(r, m, &Limits::default())
}

fn reed_muller_with(r: usize, m: usize, limits: &Limits) -> Result<Code> {
    if m == 0 || r > m {
        return Err(invalid(format!(
            "reed-muller needs 0 <= r <= m, m >= 1; got r={r}, m={m}"
        )));
    }
    if m >= usize::BITS as usize - 1 {
        return Err(invalid(format!("reed-muller order m={m} is too large")));
    }
    let dim: usize = (0..=r).map(|i| binomial(m, i)).sum();
    check_enum(dim, limits)?;
    rm_rec(r, m, limits)
}

fn rm_rec(r: usize, m: usize, limits: &Limits) -> Result<Code> {
    if r == 0 {
        repetition(1 << m)
    } else if r == m {
        universe_with(1 << m, limits)
    } else {
        plotkin_construct(&rm_rec(r, m - 1, limits)?, &rm_rec(r - 1, m - 1, limits)?)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Row space of a generator matrix.
pub fn from_generator(rows: &[Word]) -> Result<Code> {
    from_generator_with(rows, &Limits::default())
}

pub(crate) fn from_generator_with(rows: &[Word], limits: &Limits) -> Result<Code> {
    let n = rows.first().ok_or(Error::EmptyCode)?.len();
    Gf2Basis::from_words(n, rows)?.enumerate(limits.max_enum_dim)
}

/// `size` distinct words of length `n`, drawn without replacement.
///
/// With `include_zero` the zero word is always a member and the remaining
/// `size - 1` words are drawn from the nonzero ones; without it the zero word
/// may still be drawn.
pub fn random_code(n: usize, size: usize, seed: u64, include_zero: bool) -> Result<Code> {
    check_n(n)?;
    let space = 1u128 << n.min(127);
    if size == 0 || (n < 127 && size as u128 > space) {
        return Err(invalid(format!(
            "size must satisfy 1 <= M <= 2^{n}, got {size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words = Vec::with_capacity(size);
    if include_zero {
        words.push(Word::zeros(n)?);
    }
    let wanted = size - words.len();
    if n <= 32 {
        let offset = u64::from(include_zero);
        let pool = (1u64 << n) - offset;
        for i in index::sample(&mut rng, pool as usize, wanted) {
            words.push(Word::from_index(n, i as u64 + offset)?);
        }
    } else {
        let mut seen: HashSet<Word> = words.iter().cloned().collect();
        while seen.len() < size {
            let w = random_word(&mut rng, n)?;
            if seen.insert(w.clone()) {
                words.push(w);
            }
        }
    }
    Code::from_words(words)
}

fn random_word(rng: &mut impl Rng, n: usize) -> Result<Word> {
    let blocks: Vec<u64> = (0..n.div_ceil(64)).map(|_| rng.gen()).collect();
    Word::from_blocks(n, blocks)
}

/// Row space of `k` uniformly random rows; the dimension can come out below `k`.
pub fn random_linear_code(n: usize, k: usize, seed: u64) -> Result<Code> {
    check_n(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows: Vec<Word> = (0..k)
        .map(|_| random_word(&mut rng, n))
        .collect::<Result<_>>()?;
    let basis = Gf2Basis::from_words(n, &rows)?;
    basis.enumerate(Limits::default().max_enum_dim)
}

/// Shape of a seeded corpus of code pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusSpec {
    pub pairs: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    /// Upper bound on `|C1|` and `|C2|` (also capped by `2^n`).
    pub max_size: usize,
    pub include_zero: bool,
}

impl CorpusSpec {
    pub fn new(pairs: usize, seed: u64, max_n: usize) -> Self {
        Self {
            pairs,
            seed,
            min_n: 2.min(max_n),
            max_n,
            max_size: 64,
            include_zero: true,
        }
    }
}

/// Deterministic list of random equal-length pairs `(C1, C2)`.
pub fn random_pairs(spec: &CorpusSpec) -> Result<Vec<(Code, Code)>> {
    if spec.min_n == 0 || spec.min_n > spec.max_n || spec.max_n > 32 {
        return Err(invalid(format!(
            "corpus lengths must satisfy 1 <= min_n <= max_n <= 32, got {}..={}",
            spec.min_n, spec.max_n
        )));
    }
    if spec.max_size == 0 {
        return Err(invalid("corpus code size bound must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.pairs)
        .map(|_| {
            let n = rng.gen_range(spec.min_n..=spec.max_n);
            let cap = spec.max_size.min(1 << n);
            let (m1, m2) = (rng.gen_range(1..=cap), rng.gen_range(1..=cap));
            let c1 = random_code(n, m1, rng.gen(), spec.include_zero)?;
            let c2 = random_code(n, m2, rng.gen(), spec.include_zero)?;
            Ok((c1, c2))
        })
        .collect()
}

/// A family member named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Repetition {
        n: usize,
    },
    Universe {
        n: usize,
    },
    Parity {
        n: usize,
    },
    ReedMuller {
        r: usize,
        m: usize,
    },
    FromGenerator {
        rows: Vec<Word>,
    },
    Random {
        n: usize,
        size: usize,
        seed: u64,
        include_zero: bool,
    },
}

impl FamilySpec {
    /// Parses `kind` plus its integer parameters, e.g. `reed-muller 1 3`.
    /// `from-generator` is not representable this way; its rows come from a file.
    pub fn parse(kind: &str, params: &[&str]) -> Result<Self> {
        let ints = params
            .iter()
            .map(|p| {
                p.parse::<u64>()
                    .map_err(|_| invalid(format!("not a number: {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let arity = |k: usize| {
            if ints.len() == k {
                Ok(())
            } else {
                Err(invalid(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    ints.len()
                )))
            }
        };
        let u = |i: usize| ints[i] as usize;
        match kind.to_ascii_lowercase().replace('_', "-").as_str() {
            "repetition" | "rep" => arity(1).map(|_| Self::Repetition { n: u(0) }),
            "universe" | "full" => arity(1).map(|_| Self::Universe { n: u(0) }),
            "parity" | "even-weight" => arity(1).map(|_| Self::Parity { n: u(0) }),
            "reed-muller" | "rm" => arity(2).map(|_| Self::ReedMuller { r: u(0), m: u(1) }),
            "random" => {
                if !(3..=4).contains(&ints.len()) {
                    return Err(invalid("random takes n M seed [include_zero 0|1]"));
                }
                Ok(Self::Random {
                    n: u(0),
                    size: u(1),
                    seed: ints[2],
                    include_zero: ints.get(3).is_some_and(|&z| z != 0),
                })
            }
            other => Err(invalid(format!("unknown family {other:?}"))),
        }
    }

    pub fn build(&self, limits: &Limits) -> Result<Code> {
        match self {
            Self::Repetition { n } => repetition(*n),
            Self::Universe { n } => universe_with(*n, limits),
            Self::Parity { n } => parity_with(*n, limits),
            Self::ReedMuller { r, m } => reed_muller_with(*r, *m, limits),
            Self::FromGenerator { rows } => from_generator_with(rows, limits),
            Self::Random {
                n,
                size,
                seed,
                include_zero,
            } => random_code(*n, *size, *seed, *include_zero),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Repetition { n } => write!(f, "repetition({n})"),
            Self::Universe { n } => write!(f, "universe({n})"),
            Self::Parity { n } => write!(f, "parity({n})"),
            Self::ReedMuller { r, m } => write!(f, "reed-muller({r}, {m})"),
            Self::FromGenerator { rows } => write!(f, "generator({} rows)", rows.len()),
            Self::Random {
                n,
                size,
                seed,
                include_zero,
            } => write!(
                f,
                "random(n={n}, M={size}, seed={seed}, zero={include_zero})"
            ),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Whitespace-separated `kind params...`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let kind = parts
            .next()
            .ok_or_else(|| invalid("empty family description"))?;
        Self::parse(kind, &parts.collect::<Vec<_>>())
    }
}
