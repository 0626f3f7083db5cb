//! Binary block codes and the `(u | u+v)` construction.
//!
//! The crate measures the standard linearity invariants of a binary code
//! (rank of its span, dimension of its kernel, minimum distance) and checks
//! how they transform when two codes are combined as
//! `C = {(u | u+v) : u ∈ C1, v ∈ C2}`.
//!
//! ```
//! use plotkin_core::{verify_plotkin, Code};
//!
//! let c1 = Code::parse(&["00", "01", "10"]).unwrap();
//! let c2 = Code::parse(&["00", "11"]).unwrap();
//! let report = verify_plotkin(&c1, &c2).unwrap();
//! assert!(report.hypothesis_ok && report.all_hold());
//! assert_eq!(report.observed.rank, 3);
//! assert_eq!(report.observed.ker_dim, 1);
//! ```

pub mod code;
pub mod error;
pub mod families;
pub mod format;
pub mod gf2;
pub mod invariants;
pub mod limits;
pub mod oracle;
pub mod plotkin;
pub mod word;

pub use code::Code;
pub use error::{Error, Result};
pub use families::{CorpusSpec, FamilySpec};
pub use gf2::{rref, Gf2Basis};
pub use invariants::{is_linear, kernel, min_distance, rank, summarize, CodeSummary, Kernel};
pub use limits::Limits;
pub use plotkin::{
    kernel_direct, plotkin_construct, predict_params, span_direct, verify_plotkin, PlotkinParams,
    PlotkinReport,
};
pub use word::Word;
