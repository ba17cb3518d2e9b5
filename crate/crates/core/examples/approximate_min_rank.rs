//! Compare the factor-2 bracket with the exhaustive minimum on random matrices.
//!
//! cargo run --release --example approximate_min_rank

use diagrank::{gen_random, min_rank_approx, min_rank_oracle, Density};

fn main() {
    println!(
        "{:>3} {:>5} {:>7} {:>7} {:>6}",
        "n", "seed", "lower", "upper", "R"
    );
    for seed in 0..12u64 {
        let n = 4 + seed as usize;
        let m = gen_random(n, Density::new(1, 2).unwrap(), seed);
        let approx = min_rank_approx(&m);
        let exact = min_rank_oracle(&m).unwrap();
        assert!(approx.bounds.contains(exact.rank));
        println!(
            "{n:>3} {seed:>5} {:>7} {:>7} {:>6}",
            approx.bounds.lower, approx.bounds.upper, exact.rank
        );
    }
}
