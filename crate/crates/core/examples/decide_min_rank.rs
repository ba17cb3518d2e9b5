//! Sweep the exact decision procedure over k and print the first k-good diagonal.
//!
//! cargo run --release --example decide_min_rank -- [n] [seed]

use diagrank::{gen_random, min_rank_decide, Density};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(14, |a| a.parse().expect("n"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));
    let m = gen_random(n, Density::new(3, 10).unwrap(), seed);
    println!("n = {n}, seed = {seed}");
    for k in 0..n {
        let out = min_rank_decide(&m, k);
        match (&out.witness, out.achieved_rank) {
            (Some(w), Some(r)) => {
                println!("k = {k:2}: yes, diagonal {w} gives rank {r}");
                break;
            }
            _ => println!("k = {k:2}: no"),
        }
    }
}
