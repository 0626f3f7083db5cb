/// Environment variable that overrides the enumeration cap (a word count).
pub const MAX_ENUM_ENV: &str = "PLOTKIN_MAX_ENUM";

pub const DEFAULT_MAX_LEN: usize = 4096;
pub const DEFAULT_MAX_ENUM_DIM: usize = 20;

/// Size guards applied when building codes and materializing spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Longest word a [`Code`](crate::Code) may hold.
    pub max_len: usize,
    /// Largest subspace dimension that may be enumerated word by word.
    pub max_enum_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_len: DEFAULT_MAX_LEN,
            max_enum_dim: DEFAULT_MAX_ENUM_DIM,
        }
    }
}

impl Limits {
    /// Defaults, with the enumeration cap taken from `PLOTKIN_MAX_ENUM` when set.
    ///
    /// The variable holds a word count; the dimension cap becomes its floor log2.
    /// Unparseable or zero values are ignored.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(words) = std::env::var(MAX_ENUM_ENV)
            .ok()
            .and_then(|v| parse_word_count(&v))
        {
            limits.max_enum_dim = words.ilog2() as usize;
        }
        limits
    }

    pub fn with_max_enum_dim(mut self, dim: usize) -> Self {
        self.max_enum_dim = dim;
        self
    }
}

/// Accepts a plain integer or `2^k`.
fn parse_word_count(s: &str) -> Option<u64> {
    let s = s.trim();
    let n = match s.strip_prefix("2^") {
        Some(exp) => 1u64.checked_shl(exp.parse().ok()?)?,
        None => s.parse().ok()?,
    };
    (n > 0).then_some(n)
}
