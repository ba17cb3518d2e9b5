//! Exact R(M) by iterated decision, cross-checked against the exhaustive
//! oracle, next to the even-row-sum n - 1 bound.
//!
//! cargo run --release --example exact_and_upper_bound

use diagrank::{gen_random, min_rank_exact, min_rank_oracle, upper_bound_even_rows, Density};

fn main() {
    let density = Density::new(9, 10).unwrap();
    for seed in 0..6u64 {
        let m = gen_random(10, density, seed);
        let exact = min_rank_exact(&m, m.n()).expect("R <= n");
        let oracle = min_rank_oracle(&m).unwrap();
        let even = upper_bound_even_rows(&m).unwrap();
        let even_rank = m.with_diagonal(&even).unwrap().rank();
        println!(
            "seed {seed}: R = {} (witness {}), oracle {} (witness {}), even rows {} -> rank {even_rank}",
            exact.rank, exact.witness, oracle.rank, oracle.witness, even
        );
        assert_eq!(exact.rank, oracle.rank);
    }
    if min_rank_exact(&gen_random(10, density, 0), 0).is_none() {
        println!("k_max = 0 exhausted, as expected for a dense instance");
    }
}
