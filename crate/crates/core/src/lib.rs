//! Minimum rank of square GF(2) matrices whose main diagonal may be rewritten.
//!
//! For a matrix `M` over Z₂, `R(M)` is the least rank reachable by changing
//! diagonal entries. This crate provides:
//!
//! - [`gf2`]: bit-packed matrices with rank, determinant and corner minors;
//! - [`completion`]: a diagonal making any matrix non-degenerate, `O(n⁴)`;
//! - [`rank_min`]: the exact `O(n^(k+4))` test for `R(M) <= k`, the `O(n⁴)`
//!   factor-2 bracket, an exhaustive oracle, and the `n - 1` upper bound;
//! - [`hieroglyph`]: overlap matrices of double-occurrence words and the
//!   corresponding non-orientable genus questions;
//! - [`generate`], [`bench`], [`cli`]: instance generation, timing, and the
//!   `diagrank` binary.
//!
//! ```
//! use diagrank::{min_rank_decide, Gf2Matrix};
//!
//! let m: Gf2Matrix = "01\n10\n".parse().unwrap();
//! assert!(!min_rank_decide(&m, 0).is_yes());
//! let yes = min_rank_decide(&m, 1);
//! assert_eq!(yes.witness.unwrap().to_string(), "11");
//! ```

pub mod bench;
pub mod cli;
pub mod completion;
pub mod error;
pub mod generate;
pub mod gf2;
pub mod hieroglyph;
pub mod rank_min;

pub use completion::{complete_nondegenerate, Completion};
pub use error::{Error, HieroglyphError, MatrixParseError, Result};
pub use generate::{gen_random, Density};
pub use gf2::{DiagonalAssignment, Gf2Matrix};
pub use hieroglyph::{
    canonical_form, genus_approx, genus_decide, overlap_matrix, parse_hieroglyph, Hieroglyph,
    OverlapMatrix,
};
pub use rank_min::{
    min_rank_approx, min_rank_decide, min_rank_exact, min_rank_oracle, upper_bound_even_rows,
    Approximation, DecisionOutcome, MinRank, RankBounds, ORACLE_MAX_N,
};
