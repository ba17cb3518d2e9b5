//! Hieroglyphs (double-occurrence cyclic words) and their overlap matrices.
//!
//! The least non-orientable genus on which a hieroglyph is weakly realizable
//! equals `R` of its overlap matrix, so the genus questions reduce to the
//! matrix routines in [`crate::rank_min`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::HieroglyphError;
use crate::gf2::Gf2Matrix;
use crate::rank_min::{min_rank_approx, min_rank_decide, DecisionOutcome, RankBounds};

/// A cyclic, unoriented word of length `2n` in which each of `n` letters
/// occurs exactly twice.
///
/// Letters are numbered `0..n` by first occurrence in the stored word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hieroglyph {
    letters: Vec<usize>,
    alphabet: Vec<String>,
}

impl Hieroglyph {
    /// Validates a token sequence.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self, HieroglyphError> {
        if tokens.is_empty() {
            return Err(HieroglyphError::Empty);
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut alphabet = Vec::new();
        let mut counts = Vec::new();
        let mut letters = Vec::with_capacity(tokens.len());
        for (pos, tok) in tokens.iter().enumerate() {
            let tok = tok.as_ref();
            if tok.is_empty() {
                return Err(HieroglyphError::EmptyToken(pos));
            }
            let id = *index.entry(tok).or_insert_with(|| {
                alphabet.push(tok.to_string());
                counts.push(0usize);
                alphabet.len() - 1
            });
            counts[id] += 1;
            letters.push(id);
        }
        if let Some((id, &count)) = counts.iter().enumerate().find(|(_, &c)| c != 2) {
            return Err(HieroglyphError::Multiplicity {
                token: alphabet[id].clone(),
                count,
            });
        }
        Ok(Self { letters, alphabet })
    }

    /// Builds a hieroglyph from raw letter ids, naming letters canonically.
    pub fn from_letters(ids: &[usize]) -> Result<Self, HieroglyphError> {
        let (relabeled, n) = relabel(ids.iter().copied());
        let names: Vec<String> = (0..n).map(canonical_name).collect();
        Self::from_tokens(
            &relabeled
                .iter()
                .map(|&i| names[i].as_str())
                .collect::<Vec<_>>(),
        )
    }

    /// Number of distinct letters.
    pub fn n(&self) -> usize {
        self.alphabet.len()
    }

    /// Letter ids, one per position.
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> + '_ {
        self.letters.iter().map(|&i| self.alphabet[i].as_str())
    }

    fn from_token_iter<'a>(tokens: impl Iterator<Item = &'a str>) -> Self {
        Self::from_tokens(&tokens.collect::<Vec<_>>()).expect("symmetry image of a valid word")
    }

    /// Cyclic shift left by `r` positions.
    pub fn rotated(&self, r: usize) -> Self {
        let len = self.letters.len();
        Self::from_token_iter((0..len).map(|p| self.alphabet[self.letters[(p + r) % len]].as_str()))
    }

    pub fn reversed(&self) -> Self {
        Self::from_token_iter(
            self.letters
                .iter()
                .rev()
                .map(|&i| self.alphabet[i].as_str()),
        )
    }

    /// Renames letter `i` to `names[i]`. Names must be distinct.
    pub fn renamed(&self, names: &[String]) -> Self {
        assert_eq!(names.len(), self.n());
        Self::from_token_iter(self.letters.iter().map(|&i| names[i].as_str()))
    }

    /// Positions of the two occurrences of every letter, in ascending order.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(usize::MAX, usize::MAX); self.n()];
        for (pos, &l) in self.letters.iter().enumerate() {
            if occ[l].0 == usize::MAX {
                occ[l].0 = pos;
            } else {
                occ[l].1 = pos;
            }
        }
        occ
    }
}

/// Parses a hieroglyph.
///
/// Text containing whitespace or commas is split into multi-character tokens;
/// otherwise each character is a token.
pub fn parse_hieroglyph(text: &str) -> Result<Hieroglyph, HieroglyphError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(HieroglyphError::Empty);
    }
    if text.contains(',') {
        let pieces: Vec<&str> = text.split(',').map(str::trim).collect();
        if let Some(pos) = pieces.iter().position(|t| t.is_empty()) {
            return Err(HieroglyphError::EmptyToken(pos));
        }
        let tokens: Vec<&str> = pieces.iter().flat_map(|t| t.split_whitespace()).collect();
        Hieroglyph::from_tokens(&tokens)
    } else if text.contains(char::is_whitespace) {
        Hieroglyph::from_tokens(&text.split_whitespace().collect::<Vec<_>>())
    } else {
        let chars: Vec<String> = text.chars().map(String::from).collect();
        Hieroglyph::from_tokens(&chars)
    }
}

impl FromStr for Hieroglyph {
    type Err = HieroglyphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_hieroglyph(s)
    }
}

impl fmt::Display for Hieroglyph {
    /// Single-character alphabets print as one word, others space-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.alphabet.iter().all(|t| t.chars().count() == 1);
        let sep = if single { "" } else { " " };
        for (pos, tok) in self.tokens().enumerate() {
            if pos > 0 {
                f.write_str(sep)?;
            }
            f.write_str(tok)?;
        }
        Ok(())
    }
}

/// Symmetric zero-diagonal matrix recording which letters interlace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapMatrix(Gf2Matrix);

impl OverlapMatrix {
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.0
    }

    pub fn into_inner(self) -> Gf2Matrix {
        self.0
    }
}

/// Overlap matrix in `O(n²)`: for each letter, walk the arc strictly between
/// its two occurrences and toggle the cell of every letter met there. A letter
/// that interlaces is met once, one that does not is met zero or two times.
pub fn overlap_matrix(h: &Hieroglyph) -> OverlapMatrix {
    let n = h.n();
    let mut m = Gf2Matrix::zeros(n);
    for (i, (first, second)) in h.occurrences().into_iter().enumerate() {
        for &j in &h.letters()[first + 1..second] {
            m.toggle(i, j);
        }
    }
    debug_assert!(m.is_symmetric());
    debug_assert!(m.diagonal().count_ones() == 0);
    OverlapMatrix(m)
}

/// Is the hieroglyph weakly realizable on the disk with `k` Möbius strips?
///
/// Bit `i` of the witness is the twisting datum for the ribbon of letter `i`.
pub fn genus_decide(h: &Hieroglyph, k: usize) -> DecisionOutcome {
    min_rank_decide(overlap_matrix(h).matrix(), k)
}

/// Factor-2 bounds on the least such `k`.
pub fn genus_approx(h: &Hieroglyph) -> RankBounds {
    min_rank_approx(overlap_matrix(h).matrix()).bounds
}

/// Representative of the class under rotation, reversal and renaming.
///
/// Every image is relabeled by first occurrence and the lexicographically
/// least id sequence wins. Letters are renamed `a`, `b`, … (then `A`…`Z`,
/// then `l52`, `l53`, …).
pub fn canonical_form(h: &Hieroglyph) -> Hieroglyph {
    let len = h.letters.len();
    let forward = h.letters.as_slice();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    let best = [forward, backward.as_slice()]
        .into_iter()
        .flat_map(|word| (0..len).map(move |r| relabel((0..len).map(|p| word[(p + r) % len])).0))
        .min()
        .expect("non-empty word");
    Hieroglyph::from_letters(&best).expect("relabeling preserves validity")
}

/// Renumbers ids by first occurrence. Returns the new sequence and letter count.
fn relabel(ids: impl Iterator<Item = usize>) -> (Vec<usize>, usize) {
    let mut map: HashMap<usize, usize> = HashMap::new();
    let out = ids
        .map(|id| {
            let next = map.len();
            *map.entry(id).or_insert(next)
        })
        .collect();
    (out, map.len())
}

fn canonical_name(i: usize) -> String {
    match i {
        0..=25 => char::from(b'a' + i as u8).to_string(),
        26..=51 => char::from(b'A' + (i - 26) as u8).to_string(),
        _ => format!("l{i}"),
    }
}
