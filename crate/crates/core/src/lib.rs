//! Construction of the lexicographically greatest `(n,k)`-perfect necklace.
//!
//! A circular word over `{0, .., s-1}` is `(n,k)`-perfect when every word of
//! length `n` occurs exactly `k` times, at start positions that are pairwise
//! distinct modulo `k`. For `k = 1` these are de Bruijn necklaces.
//!
//! When `k | n` or `n | k`, the greatest such necklace is the concatenation of
//! the Lyndon pairs of all maximal pairs of `Σⁿ × ℤ_k`, listed in decreasing
//! order. The maximal pairs are visited by iterating the operator
//! [`theta`](theta::theta) from `⟨(s-1)ⁿ, 0⟩` down to `⟨0ⁿ, 0⟩`.
//!
//! ```
//! use perfect_necklace::{build_necklace, check_perfect, Params};
//!
//! let p = Params::new(2, 2, 2)?;
//! let x: Vec<u32> = build_necklace(&p)?.collect();
//! assert_eq!(x, [1, 1, 1, 0, 0, 1, 0, 0]);
//! assert!(check_perfect(&x, &p)?.is_perfect);
//! # Ok::<(), perfect_necklace::Error>(())
//! ```
//!
//! The [`oracle`] module holds independent brute-force checks, and [`cli`]
//! backs the `perfect-necklace` binary.

pub mod cli;
pub mod error;
pub mod format;
pub mod generator;
pub mod oracle;
pub mod pair;
pub mod params;
pub mod theta;
pub mod word;

pub use error::{Error, Result};
pub use format::OutputFormat;
pub use generator::{
    build_necklace, build_necklace_with_guard, chain_iter, lyndon_list, maximal_list,
    necklace_length, necklace_word, ChainCursor, NecklaceStream, DEFAULT_GUARD,
};
pub use oracle::{
    brute_force_greatest, check_perfect, filter_all_greatest, fkm_reference, PerfectnessReport,
    SearchBudget,
};
pub use pair::{
    cmp_succ, expand, is_maximal, reduce, rotate_left, rotate_right, rotation_class, LyndonPair,
    Pair,
};
pub use params::{Mode, Params};
pub use theta::{theta, theta_preimage};
pub use word::{Symbol, Word};
