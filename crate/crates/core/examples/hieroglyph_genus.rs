//! Overlap matrices and non-orientable genus bounds for hieroglyphs.
//!
//! cargo run --example hieroglyph_genus -- [word]

use diagrank::{
    canonical_form, genus_approx, genus_decide, min_rank_exact, overlap_matrix, parse_hieroglyph,
};

fn main() {
    let words: Vec<String> = match std::env::args().nth(1) {
        Some(w) => vec![w],
        None => [
            "aabbcc",
            "abab",
            "aabcbc",
            "abcabc",
            "abcdabcd",
            "a1 b2 a1 c3 b2 c3",
        ]
        .map(String::from)
        .to_vec(),
    };
    for word in &words {
        let h = match parse_hieroglyph(word) {
            Ok(h) => h,
            Err(e) => {
                eprintln!("{word}: {e}");
                continue;
            }
        };
        let m = overlap_matrix(&h);
        let bounds = genus_approx(&h);
        let r = min_rank_exact(m.matrix(), h.n()).expect("R <= n").rank;
        let twist = genus_decide(&h, r).witness.expect("R-good twisting");
        println!("{h}  (canonical {})", canonical_form(&h));
        print!("{}", m.matrix());
        println!(
            "  genus bounds [{}, {}], exact {r}, ribbon twists {twist}\n",
            bounds.lower, bounds.upper
        );
    }
}
