//! Reproducible random instances: the same (n, density, seed) always gives
//! the same matrix.
//!
//! cargo run --example random_instances -- [n] [density] [seed]

use diagrank::{gen_random, Density};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(6, |a| a.parse().expect("n"));
    let density: Density = args
        .next()
        .as_deref()
        .unwrap_or("1/3")
        .parse()
        .expect("density");
    let seed: u64 = args.next().map_or(2024, |a| a.parse().expect("seed"));
    let a = gen_random(n, density, seed);
    let b = gen_random(n, density, seed);
    assert_eq!(a, b);
    print!("{a}");
    eprintln!(
        "n={n} density={density} seed={seed} ones={}",
        a.count_ones()
    );
}
