//! Median per-call timings, printed as CSV.
//!
//! cargo run --release --example scaling

use diagrank::bench::{bench, to_csv, Algorithm};

fn main() {
    let mut rows = bench(Algorithm::Decide, &[16, 32, 64], 1, 5, 1);
    rows.extend(bench(Algorithm::Decide, &[16, 32], 2, 5, 1));
    rows.extend(bench(Algorithm::Complete, &[32, 64, 128], 0, 5, 1));
    rows.extend(bench(Algorithm::Approx, &[64, 128, 256], 0, 5, 1));
    print!("{}", to_csv(&rows));
}
