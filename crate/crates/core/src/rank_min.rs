//! Minimum rank over all rewrites of the main diagonal, `R(M)`.
//!
//! Every rewrite of the diagonal of `M` can be written uniquely as `M' + D`,
//! where `M'` is the non-degenerate completion and `D` is diagonal. Since
//! `rk(M' + D) >= n - rk D`, only diagonals `D` with at most `k` zeros can
//! reach rank `k`. [`min_rank_decide`] enumerates exactly those, giving
//! `O(n^(k+4))` for fixed `k`. Taking `D = I` gives the factor-2 bound of
//! [`min_rank_approx`].

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::completion::complete_nondegenerate;
use crate::error::{Error, Result};
use crate::gf2::{DiagonalAssignment, Gf2Matrix};

/// Largest dimension accepted by [`min_rank_oracle`].
pub const ORACLE_MAX_N: usize = 24;

/// Candidates are handed to the thread pool in batches of this size; the
/// batch order is the canonical order, so the first hit is deterministic.
const BATCH: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankBounds {
    pub lower: usize,
    pub upper: usize,
}

impl RankBounds {
    pub fn new(lower: usize, upper: usize) -> Self {
        assert!(lower <= upper, "rank bounds inverted: {lower} > {upper}");
        Self { lower, upper }
    }

    pub fn exact(r: usize) -> Self {
        Self { lower: r, upper: r }
    }

    pub fn contains(&self, r: usize) -> bool {
        self.lower <= r && r <= self.upper
    }
}

/// Answer to "is `R(M) <= k`?". A witness is present iff the answer is yes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub k: usize,
    pub witness: Option<DiagonalAssignment>,
    /// Rank of `M` with the witness diagonal, when there is one.
    pub achieved_rank: Option<usize>,
}

impl DecisionOutcome {
    pub fn is_yes(&self) -> bool {
        self.witness.is_some()
    }

    fn no(k: usize) -> Self {
        Self {
            k,
            witness: None,
            achieved_rank: None,
        }
    }
}

/// Output of the factor-2 approximation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation {
    pub bounds: RankBounds,
    /// Realises `bounds.upper` exactly.
    pub witness: DiagonalAssignment,
}

/// Exact minimum with a minimizing diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinRank {
    pub rank: usize,
    pub witness: DiagonalAssignment,
}

/// Decides whether `R(M) <= k`, returning a `k`-good diagonal if so.
///
/// Candidates are the diagonals of `M' + D` where `D` has zeros exactly on a
/// set `S`, `|S| <= k`. Sets are tried by ascending size and lexicographically
/// within a size; the first one reaching rank `<= k` is returned.
pub fn min_rank_decide(m: &Gf2Matrix, k: usize) -> DecisionOutcome {
    let n = m.n();
    if k >= n {
        return DecisionOutcome {
            k,
            witness: Some(m.diagonal()),
            achieved_rank: Some(m.rank()),
        };
    }
    let base = complete_nondegenerate(m).matrix;
    decide_from_completion(&base, k)
}

fn decide_from_completion(base: &Gf2Matrix, k: usize) -> DecisionOutcome {
    let n = base.n();
    // D with zeros on S adds I to M' except on S, so the candidate diagonal
    // is the complement of diag(M') with the S entries flipped back.
    let flipped = base.diagonal().complement();
    let try_zero_set = |zeros: &[usize]| -> Option<(DiagonalAssignment, usize)> {
        let mut diag = flipped.clone();
        for &i in zeros {
            diag.set(i, !diag.get(i));
        }
        let candidate = base.with_diagonal(&diag).expect("dimension fixed");
        let r = candidate.rank();
        (r <= k).then_some((diag, r))
    };

    for size in 0..=k.min(n) {
        for batch in &(0..n).combinations(size).chunks(BATCH) {
            let batch: Vec<Vec<usize>> = batch.collect();
            let hit = if batch.len() > 1 {
                batch.par_iter().find_map_first(|s| try_zero_set(s))
            } else {
                batch.iter().find_map(|s| try_zero_set(s))
            };
            if let Some((diag, r)) = hit {
                return DecisionOutcome {
                    k,
                    witness: Some(diag),
                    achieved_rank: Some(r),
                };
            }
        }
    }
    DecisionOutcome::no(k)
}

/// Brackets `R(M)` within a factor of two in `O(n⁴)`.
///
/// The upper bound is `rk(M' + I)`, attained by the complement of the
/// completion diagonal; the lower bound is its half rounded up.
pub fn min_rank_approx(m: &Gf2Matrix) -> Approximation {
    let completion = complete_nondegenerate(m);
    let witness = completion.diagonal.complement();
    let upper = m.with_diagonal(&witness).expect("dimension fixed").rank();
    Approximation {
        bounds: RankBounds::new(upper.div_ceil(2), upper),
        witness,
    }
}

/// Runs the decision procedure for `k = 0, 1, …, k_max` and returns the
/// first success, which is `R(M)`. `None` means `R(M) > k_max`.
pub fn min_rank_exact(m: &Gf2Matrix, k_max: usize) -> Option<MinRank> {
    let n = m.n();
    let base = complete_nondegenerate(m).matrix;
    (0..=k_max).find_map(|k| {
        let outcome = if k >= n {
            min_rank_decide(m, k)
        } else {
            decide_from_completion(&base, k)
        };
        outcome.witness.map(|witness| MinRank { rank: k, witness })
    })
}

/// Exhaustive minimum over all `2ⁿ` diagonals, `n <= 24`.
///
/// Ties go to the lexicographically least diagonal string.
pub fn min_rank_oracle(m: &Gf2Matrix) -> Result<MinRank> {
    let n = m.n();
    if n > ORACLE_MAX_N {
        return Err(Error::OracleGuard {
            n,
            max: ORACLE_MAX_N,
        });
    }
    if n == 0 {
        return Ok(MinRank {
            rank: 0,
            witness: DiagonalAssignment::zeros(0),
        });
    }
    // Bit j of a row word is column j; diagonal cleared.
    let rows: Vec<u64> = (0..n).map(|i| (m.row_words(i)[0]) & !(1u64 << i)).collect();
    // Mask bit (n-1-i) holds d_i, so increasing masks are lexicographic.
    let diag_of = |mask: u64, i: usize| (mask >> (n - 1 - i)) & 1;
    let rank_of = |mask: u64| -> usize {
        let mut buf = [0u64; ORACLE_MAX_N];
        for i in 0..n {
            buf[i] = rows[i] | (diag_of(mask, i) << i);
        }
        small_rank(&mut buf[..n])
    };

    let total: u64 = 1 << n;
    let chunk: u64 = 1 << n.saturating_sub(8).min(14);
    let chunks = total.div_ceil(chunk);
    let zero_found_at = AtomicU64::new(u64::MAX);
    let (rank, mask) = (0..chunks)
        .into_par_iter()
        .filter_map(|c| {
            if zero_found_at.load(Ordering::Relaxed) < c {
                return None;
            }
            let mut best = (usize::MAX, 0u64);
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let r = rank_of(mask);
                if r < best.0 {
                    best = (r, mask);
                    if r == 0 {
                        zero_found_at.fetch_min(c, Ordering::Relaxed);
                        break;
                    }
                }
            }
            Some(best)
        })
        .min()
        .expect("at least one chunk");
    let witness = DiagonalAssignment::from_bits((0..n).map(|i| diag_of(mask, i) == 1).collect());
    Ok(MinRank { rank, witness })
}

/// Rank of up to 64 single-word rows, destroying the buffer.
fn small_rank(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for r in 0..rows.len() {
        let pivot = rows[r];
        if pivot == 0 {
            continue;
        }
        rank += 1;
        let low = pivot & pivot.wrapping_neg();
        for row in &mut rows[r + 1..] {
            if *row & low != 0 {
                *row ^= pivot;
            }
        }
    }
    rank
}

/// Diagonal making every row sum even; the result is singular, so `R(M) <= n - 1`.
pub fn upper_bound_even_rows(m: &Gf2Matrix) -> Result<DiagonalAssignment> {
    let n = m.n();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    Ok(DiagonalAssignment::from_bits(
        (0..n)
            .map(|i| {
                let ones: u32 = m.row_words(i).iter().map(|w| w.count_ones()).sum();
                (ones - m.get(i, i) as u32) % 2 == 1
            })
            .collect(),
    ))
}
