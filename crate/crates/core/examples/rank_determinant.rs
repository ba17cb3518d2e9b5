//! Parse a matrix in the text format and inspect rank, determinant and corner minors.
//!
//! cargo run --example rank_determinant

use diagrank::Gf2Matrix;

fn main() {
    let m: Gf2Matrix = "0110\n1011\n1101\n0110\n".parse().expect("well-formed");
    print!("{m}");
    println!("rank        {}", m.rank());
    println!("determinant {}", m.determinant() as u8);
    let minors: String = (1..=m.n())
        .map(|i| if m.corner_minor(i).unwrap() { '1' } else { '0' })
        .collect();
    println!("corner minors (1..=n) {minors}");

    let sum = m.add(&Gf2Matrix::identity(m.n())).unwrap();
    println!("rank(M + I) {}", sum.rank());

    match Gf2Matrix::parse("01\n1") {
        Ok(_) => unreachable!(),
        Err(e) => println!("malformed input rejected: {e}"),
    }
}
