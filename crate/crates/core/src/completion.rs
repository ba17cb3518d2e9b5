//! Non-degenerate completion of the main diagonal.
//!
//! Diagonal values are fixed one at a time from the top-left corner. For
//! position `i`, the corner minor of the leading `(i+1)`×`(i+1)` block is
//! evaluated with a zero at `(i, i)` and the already-chosen values above it;
//! the diagonal entry becomes `1 + Δ`. Expanding the next corner minor along
//! its last row shows it then equals 1, so every corner minor of the result
//! is 1 and in particular the whole matrix is invertible.
//!
//! Each step is a fresh determinant, `O(i³)` bit operations, for `O(n⁴)` in
//! total (divided by the word width thanks to packing).

use crate::gf2::{DiagonalAssignment, Gf2Matrix};

/// A completed matrix together with the diagonal that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub matrix: Gf2Matrix,
    pub diagonal: DiagonalAssignment,
}

/// Chooses diagonal values that make `m` non-degenerate.
///
/// The output agrees with `m` off the diagonal and all of its corner minors
/// equal 1. Deterministic.
pub fn complete_nondegenerate(m: &Gf2Matrix) -> Completion {
    let n = m.n();
    let mut work = m.clone();
    let mut diagonal = DiagonalAssignment::zeros(n);
    for i in 0..n {
        work.set(i, i, false);
        let delta = work.leading_minor(i + 1);
        let a = !delta;
        work.set(i, i, a);
        diagonal.set(i, a);
    }
    debug_assert!(work.determinant());
    Completion {
        matrix: work,
        diagonal,
    }
}
