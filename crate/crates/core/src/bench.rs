//! Wall-clock scaling measurements.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::completion::complete_nondegenerate;
use crate::generate::{gen_random, Density};
use crate::rank_min::{min_rank_approx, min_rank_decide};

/// Each repetition runs the algorithm until at least this much time passed,
/// so very fast inputs are not dominated by timer resolution.
const MIN_SAMPLE: Duration = Duration::from_millis(10);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Rank,
    Complete,
    Decide,
    Approx,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rank" => Ok(Self::Rank),
            "complete" => Ok(Self::Complete),
            "decide" => Ok(Self::Decide),
            "approx" => Ok(Self::Approx),
            _ => Err(format!(
                "unknown algorithm {s:?} (rank, complete, decide, approx)"
            )),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Rank => "rank",
            Self::Complete => "complete",
            Self::Decide => "decide",
            Self::Approx => "approx",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub n: usize,
    pub k: usize,
    pub reps: usize,
    /// Median seconds per call.
    pub median_secs: f64,
}

/// Instance for size `n`; the seed is mixed with `n` so sizes get distinct matrices.
pub fn bench_instance(n: usize, seed: u64) -> crate::Gf2Matrix {
    gen_random(
        n,
        Density::new(1, 2).expect("valid"),
        seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
    )
}

/// Median per-call time of `algo` on one random instance per size.
pub fn bench(algo: Algorithm, sizes: &[usize], k: usize, reps: usize, seed: u64) -> Vec<BenchRow> {
    let reps = reps.max(1);
    sizes
        .iter()
        .map(|&n| {
            let m = bench_instance(n, seed);
            let call = || match algo {
                Algorithm::Rank => {
                    black_box(m.rank());
                }
                Algorithm::Complete => {
                    black_box(complete_nondegenerate(&m));
                }
                Algorithm::Decide => {
                    black_box(min_rank_decide(&m, k));
                }
                Algorithm::Approx => {
                    black_box(min_rank_approx(&m));
                }
            };
            let mut samples: Vec<f64> = (0..reps).map(|_| time_per_call(call)).collect();
            samples.sort_by(f64::total_cmp);
            BenchRow {
                algo,
                n,
                k,
                reps,
                median_secs: samples[samples.len() / 2],
            }
        })
        .collect()
}

fn time_per_call(mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    let mut calls = 0u32;
    loop {
        f();
        calls += 1;
        let elapsed = start.elapsed();
        if elapsed >= MIN_SAMPLE {
            return elapsed.as_secs_f64() / f64::from(calls);
        }
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("algo,n,k,reps,median_secs\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.9}\n",
            r.algo, r.n, r.k, r.reps, r.median_secs
        ));
    }
    out
}
