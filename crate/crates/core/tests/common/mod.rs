//! Test-only reference implementations, deliberately naive and independent
//! of the packed kernel.
#![allow(dead_code)]

use diagrank::{gen_random, Density, Gf2Matrix, Hieroglyph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const DENSITIES: [&str; 4] = ["0.1", "0.3", "0.5", "0.9"];

pub fn to_dense(m: &Gf2Matrix) -> Vec<Vec<u8>> {
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| m.get(i, j) as u8).collect())
        .collect()
}

/// Textbook Gaussian elimination on byte rows.
pub fn naive_rank(mut rows: Vec<Vec<u8>>) -> usize {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..n).find(|&r| rows[r][c] == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `R(M)` by trying every diagonal with the naive rank.
pub fn naive_min_rank(m: &Gf2Matrix) -> usize {
    let n = m.n();
    let base = to_dense(m);
    (0u32..1 << n)
        .map(|mask| {
            let mut rows = base.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                row[i] = (mask >> i & 1) as u8;
            }
            naive_rank(rows)
        })
        .min()
        .unwrap_or(0)
}

pub fn random_matrix(n: usize, density: &str, seed: u64) -> Gf2Matrix {
    gen_random(n, density.parse::<Density>().unwrap(), seed)
}

/// Random matrix including a random diagonal.
pub fn random_full(rng: &mut StdRng, n: usize) -> Gf2Matrix {
    let p: f64 = rng.random_range(0.05..0.95);
    Gf2Matrix::from_fn(n, |_, _| rng.random_bool(p))
}

pub fn random_hieroglyph(rng: &mut StdRng, n: usize) -> Hieroglyph {
    let mut ids: Vec<usize> = (0..n).flat_map(|i| [i, i]).collect();
    ids.shuffle(rng);
    Hieroglyph::from_letters(&ids).unwrap()
}

/// Random rotation, optional reversal and random renaming.
pub fn random_image(rng: &mut StdRng, h: &Hieroglyph) -> Hieroglyph {
    let mut img = h.rotated(rng.random_range(0..2 * h.n()));
    if rng.random_bool(0.5) {
        img = img.reversed();
    }
    let mut names: Vec<String> = (0..img.n()).map(|i| format!("t{i}")).collect();
    names.shuffle(rng);
    img.renamed(&names)
}

/// Overlap by checking the alternation pattern of every pair directly.
pub fn naive_overlap(h: &Hieroglyph) -> Gf2Matrix {
    let n = h.n();
    let pos: Vec<Vec<usize>> = (0..n)
        .map(|l| {
            h.letters()
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == l)
                .map(|(p, _)| p)
                .collect()
        })
        .collect();
    Gf2Matrix::from_fn(n, |i, j| {
        let (a1, a2) = (pos[i][0], pos[i][1]);
        let (b1, b2) = (pos[j][0], pos[j][1]);
        i != j && ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2))
    })
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
