//! Rewrite the diagonal so that every corner minor becomes 1.
//!
//! cargo run --example nondegenerate_completion

use diagrank::{complete_nondegenerate, gen_random, Density};

fn main() {
    let m = gen_random(8, Density::new(1, 2).unwrap(), 7);
    println!("input (rank {}):\n{m}", m.rank());
    let c = complete_nondegenerate(&m);
    println!("diagonal chosen: {}", c.diagonal);
    println!("completed (rank {}):\n{}", c.matrix.rank(), c.matrix);
    for i in 1..=c.matrix.n() {
        assert!(c.matrix.corner_minor(i).unwrap());
    }
    println!("all {} corner minors equal 1", c.matrix.n());
}
