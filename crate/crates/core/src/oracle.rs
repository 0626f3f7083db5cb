//! Deliberately naive reference implementations.
//!
//! Nothing here goes through [`Gf2Basis`](crate::Gf2Basis) or the fast
//! kernel search; the point is to have a second route to the same sets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::plotkin::{plotkin_construct, PlotkinReport};
use crate::word::Word;

/// Largest `n` accepted by [`kernel_bruteforce`].
pub const KERNEL_BRUTEFORCE_MAX_N: usize = 16;

/// `{x ∈ F^n : C + x = C}` by scanning every `x ∈ F^n`.
pub fn kernel_bruteforce(code: &Code) -> Result<Code> {
    let n = code.n();
    if n > KERNEL_BRUTEFORCE_MAX_N {
        return Err(Error::OracleCap {
            n,
            max: KERNEL_BRUTEFORCE_MAX_N,
        });
    }
    let members: BTreeSet<u64> = code.iter().map(index_of).collect();
    let kernel: Vec<Word> = (0..1u64 << n)
        .filter(|&x| members.iter().all(|&c| members.contains(&(c ^ x))))
        .map(|x| Word::from_index(n, x))
        .collect::<Result<_>>()?;
    Code::from_words(kernel)
}

/// `⟨C⟩` as a closure under sums: each codeword not yet reached doubles
/// the set by adding itself to everything reached so far.
///
/// Fails once the closure would exceed `max_words`.
pub fn span_bruteforce(code: &Code, max_words: usize) -> Result<Code> {
    let mut reached: BTreeSet<Word> = BTreeSet::new();
    reached.insert(Word::zeros(code.n())?);
    for c in code {
        if reached.contains(c) {
            continue;
        }
        if reached.len() * 2 > max_words {
            return Err(Error::EnumerationCap {
                dim: reached.len().ilog2() as usize + 1,
                cap: max_words.max(1).ilog2() as usize,
            });
        }
        let sums: Vec<Word> = reached.iter().map(|s| s.xor(c)).collect::<Result<_>>()?;
        reached.extend(sums);
    }
    Code::from_words(reached)
}

/// The kernel and span identities of a [`PlotkinReport`], recomputed with
/// the brute-force routines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    /// Brute-force `Ker(C)` equals the kernel in the report.
    pub kernel_matches: bool,
    /// `Ker(C) = {(x|x+y)}` with every kernel found by scanning `F^n`.
    pub theorem_i_holds: bool,
    /// `⟨C⟩ = {(x|x+y)}` with every span found by closure.
    pub theorem_ii_holds: bool,
}

impl OracleCheck {
    /// Whether the oracle route reached the same verdicts as the report.
    pub fn agrees_with(&self, report: &PlotkinReport) -> bool {
        self.kernel_matches
            && self.theorem_i_holds == report.theorem_i_holds
            && self.theorem_ii_holds == report.theorem_ii_holds
    }
}

/// Recomputes the identities behind `report` for the pair `(c1, c2)`.
///
/// Fails with a cap error when the constructed code is too long for
/// [`kernel_bruteforce`] or a span exceeds the enumeration limit.
pub fn cross_check(
    c1: &Code,
    c2: &Code,
    report: &PlotkinReport,
    limits: &Limits,
) -> Result<OracleCheck> {
    let c = plotkin_construct(c1, c2)?;
    let max_words = 1usize
        .checked_shl(limits.max_enum_dim as u32)
        .unwrap_or(usize::MAX);

    let kernel = kernel_bruteforce(&c)?;
    let kernel_matches = kernel.iter().eq(report.kernel.iter());
    let direct_kernel = plotkin_construct(&kernel_bruteforce(c1)?, &kernel_bruteforce(c2)?)?;

    let span = span_bruteforce(&c, max_words)?;
    let direct_span = plotkin_construct(
        &span_bruteforce(c1, max_words)?,
        &span_bruteforce(c2, max_words)?,
    )?;

    Ok(OracleCheck {
        kernel_matches,
        theorem_i_holds: kernel == direct_kernel,
        theorem_ii_holds: span == direct_span,
    })
}

fn index_of(w: &Word) -> u64 {
    w.to_index().expect("oracle inputs fit in 64 bits")
}
