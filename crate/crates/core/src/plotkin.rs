//! The `(u | u+v)` construction and checks of its structural identities.
//!
//! For codes `C1`, `C2` of length `n`, `C = {(u | u+v) : u ∈ C1, v ∈ C2}` has
//! length `2n` and `|C1|·|C2|` words. When both inputs contain the zero word,
//! `Ker(C)` and `⟨C⟩` are the images of `Ker(C1) × Ker(C2)` and
//! `⟨C1⟩ × ⟨C2⟩` under the same map, so kernel dimension and rank add up.
//! [`verify_plotkin`] measures all of this on concrete codes.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::{Error, Result};
use crate::gf2::Gf2Basis;
use crate::invariants::{self, CodeSummary};
use crate::word::Word;

fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}

/// `(u | u+v)`.
pub fn plotkin_word(u: &Word, v: &Word) -> Result<Word> {
    Ok(u.concat(&u.xor(v)?))
}

/// `{(u | u+v) : u ∈ C1, v ∈ C2}`.
pub fn plotkin_construct(c1: &Code, c2: &Code) -> Result<Code> {
    check_same_n(c1.n(), c2.n())?;
    let mut words = Vec::with_capacity(c1.len() * c2.len());
    for u in c1 {
        for v in c2 {
            words.push(plotkin_word(u, v)?);
        }
    }
    Code::from_words(words)
}

/// `{(x | x+y) : x ∈ K1, y ∈ K2}`: the kernel of the constructed code,
/// predicted from the kernels of the inputs.
pub fn kernel_direct(k1: &Code, k2: &Code) -> Result<Code> {
    plotkin_construct(k1, k2)
}

/// Canonical basis of `{(x | x+y) : x ∈ ⟨B1⟩, y ∈ ⟨B2⟩}`, generated by
/// `(b | b)` for rows of `B1` and `(0 | b)` for rows of `B2`.
pub fn span_direct(b1: &Gf2Basis, b2: &Gf2Basis) -> Result<Gf2Basis> {
    check_same_n(b1.n(), b2.n())?;
    let n = b1.n();
    let zero = Word::zeros(n)?;
    let generators: Vec<Word> = b1
        .rows()
        .iter()
        .map(|b| b.concat(b))
        .chain(b2.rows().iter().map(|b| zero.concat(b)))
        .collect();
    Gf2Basis::from_words(2 * n, &generators)
}

/// Length, size, distance, rank and kernel dimension of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotkinParams {
    pub length: usize,
    pub size: usize,
    pub distance: Option<usize>,
    pub rank: usize,
    pub ker_dim: usize,
}

impl From<&CodeSummary> for PlotkinParams {
    fn from(s: &CodeSummary) -> Self {
        Self {
            length: s.n,
            size: s.size,
            distance: s.distance,
            rank: s.rank,
            ker_dim: s.ker_dim,
        }
    }
}

/// Expected parameters of the constructed code: `(2n, M1·M2, min{2d1, d2})`
/// with rank and kernel dimension summed. The distance is `None` when either
/// input has a single word.
pub fn predict_params(s1: &CodeSummary, s2: &CodeSummary) -> Result<PlotkinParams> {
    check_same_n(s1.n, s2.n)?;
    let distance = match (s1.distance, s2.distance) {
        (Some(d1), Some(d2)) => Some((2 * d1).min(d2)),
        _ => None,
    };
    Ok(PlotkinParams {
        length: 2 * s1.n,
        size: s1.size * s2.size,
        distance,
        rank: s1.rank + s2.rank,
        ker_dim: s1.ker_dim + s2.ker_dim,
    })
}

/// Outcome of [`verify_plotkin`].
///
/// When `hypothesis_ok` is false (an input lacks the zero word) the flags are
/// still computed but are informational only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotkinReport {
    pub n_in: usize,
    pub input_a: CodeSummary,
    pub input_b: CodeSummary,
    pub predicted: PlotkinParams,
    pub observed: PlotkinParams,
    pub observed_linear: bool,
    /// `Ker(C)` of the constructed code, measured directly.
    pub kernel: Vec<Word>,
    /// Every `(x | x+y)` with `x ∈ Ker(C1)`, `y ∈ Ker(C2)` fixes `C`.
    pub kernel_contains_direct: bool,
    /// Every element of `Ker(C)` splits as such an `(x | x+y)`.
    pub kernel_splits: bool,
    pub theorem_i_holds: bool,
    pub theorem_ii_holds: bool,
    pub corollary_i_holds: bool,
    pub corollary_ii_holds: bool,
    pub params_hold: bool,
    /// Zero word present in both inputs.
    pub hypothesis_ok: bool,
}

impl PlotkinReport {
    /// Name of the first check that failed, in reporting order.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.theorem_i_holds, "kernel identity Ker(C) = {(x|x+y)}"),
            (self.theorem_ii_holds, "span identity <C> = {(x|x+y)}"),
            (self.corollary_i_holds, "kernel dimension additivity"),
            (self.corollary_ii_holds, "rank additivity"),
            (self.params_hold, "parameters (2n, M1*M2, min{2d1,d2})"),
        ]
        .into_iter()
        .find_map(|(ok, name)| (!ok).then_some(name))
    }

    pub fn all_hold(&self) -> bool {
        self.first_failure().is_none()
    }

    /// False only for a genuine counterexample: hypotheses met, a check failed.
    pub fn passes(&self) -> bool {
        !self.hypothesis_ok || self.all_hold()
    }
}

/// Builds `C` from `c1`, `c2` and checks every structural identity against
/// independently measured invariants of `C`.
pub fn verify_plotkin(c1: &Code, c2: &Code) -> Result<PlotkinReport> {
    check_same_n(c1.n(), c2.n())?;
    let n = c1.n();
    let c = plotkin_construct(c1, c2)?;

    let s1 = invariants::summarize(c1);
    let s2 = invariants::summarize(c2);
    let predicted = predict_params(&s1, &s2)?;

    let k1 = invariants::kernel(c1);
    let k2 = invariants::kernel(c2);
    let k = invariants::kernel(&c);
    let direct = kernel_direct(&k1.words, &k2.words)?;

    let kernel_contains_direct = direct.iter().all(|x| c.invariant_unchecked(x));
    let kernel_splits = k.words.iter().all(|z| {
        let (x, right) = z.split_at(n).expect("constructed words have length 2n");
        let y = x.xor(&right).expect("halves share a length");
        k1.words.contains(&x) && k2.words.contains(&y)
    });
    let theorem_i_holds = kernel_contains_direct && kernel_splits && k.words == direct;

    let span = invariants::span_basis(&c);
    let theorem_ii_holds =
        span == span_direct(&invariants::span_basis(c1), &invariants::span_basis(c2))?;

    let observed_linear = span.dim() < usize::BITS as usize && c.len() == 1 << span.dim();
    let distance = if c.len() < 2 {
        None
    } else if observed_linear {
        invariants::min_nonzero_weight(&c).ok()
    } else {
        invariants::min_distance_pairwise(&c).ok()
    };
    let observed = PlotkinParams {
        length: c.n(),
        size: c.len(),
        distance,
        rank: span.dim(),
        ker_dim: k.dim(),
    };

    let corollary_i_holds =
        observed.ker_dim == predicted.ker_dim && k.words.len() == k1.words.len() * k2.words.len();
    let corollary_ii_holds = observed.rank == predicted.rank;
    let distance_ok = match predicted.distance {
        Some(d) => observed.distance == Some(d),
        None => true,
    };
    let linearity_ok = !(s1.is_linear && s2.is_linear) || observed_linear;
    let params_hold = observed.length == predicted.length
        && observed.size == predicted.size
        && distance_ok
        && linearity_ok;

    Ok(PlotkinReport {
        n_in: n,
        input_a: s1,
        input_b: s2,
        predicted,
        observed,
        observed_linear,
        kernel: k.words.words(),
        kernel_contains_direct,
        kernel_splits,
        theorem_i_holds,
        theorem_ii_holds,
        corollary_i_holds,
        corollary_ii_holds,
        params_hold,
        hypothesis_ok: c1.contains_zero() && c2.contains_zero(),
    })
}
