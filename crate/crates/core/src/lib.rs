//! Exact computation of the HH-versus-HT coin game.
//!
//! Flip a fair coin `n` times. Bob scores a point for every `HT` and Alice
//! for every `HH` (overlaps count). Bob wins strictly more often than Alice
//! for every `n >= 3`, and the gap `Δn = P(Bob) - P(Alice)` behaves like
//! `1 / (2 sqrt(nπ))`.
//!
//! The crate computes `Δn` several independent ways and checks that they
//! agree exactly:
//!
//! * [`exactdp`]: brute-force enumeration and the conditional score DP;
//! * [`series`]: truncated power series over the rationals, expanding the
//!   closed-form generating function and the positivity identities;
//! * [`recurrence`]: the four-term integer recurrence, `O(n)` arithmetic
//!   operations for the whole prefix;
//! * [`lattice`]: colored lattice paths whose diagonal counts are
//!   `2^(n+1) Δn + 1`;
//! * [`analysis`]: asymptotics and a numerical contour integral.
//!
//! [`verify`] bundles every cross-check into suites with structured
//! reports, and [`export`] writes the CSV/JSON tables used by the CLI.
//!
//! ```
//! use hhht::{exactdp, recurrence, series, rational::ratio};
//!
//! let dp = exactdp::outcome(5)?.delta;
//! let rec = recurrence::delta_exact(5)?;
//! let gf = series::delta_from_closed_form(5)[5].clone();
//! assert_eq!(dp, ratio(3, 32));
//! assert_eq!(rec, dp);
//! assert_eq!(gf, dp);
//! # Ok::<(), hhht::Error>(())
//! ```

pub mod analysis;
mod error;
pub mod exactdp;
pub mod export;
pub mod lattice;
pub mod rational;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;

// The guide under `book/` is compiled into doctests so its snippets cannot
// drift from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/game.md")]
    mod game {}
    #[doc = include_str!("../../../book/src/generating-function.md")]
    mod generating_function {}
    #[doc = include_str!("../../../book/src/positivity.md")]
    mod positivity {}
    #[doc = include_str!("../../../book/src/lattice-paths.md")]
    mod lattice_paths {}
    #[doc = include_str!("../../../book/src/recurrence.md")]
    mod recurrence {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    mod analysis {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
