//! Bit-packed square matrices over GF(2).
//!
//! Each row is stored as `stride` consecutive `u64` words; bit `j` of a row
//! lives in word `j / 64` at position `j % 64`. Padding bits past column
//! `n - 1` are always zero, so whole-word comparisons and XORs are exact.
//!
//! Rank and determinant run forward Gaussian elimination on a private copy.
//! The pivot for each column is the lowest-index remaining row with a 1 there.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, MatrixParseError, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Square matrix over Z₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

/// Values to place on the main diagonal, entry `i` at cell `(i, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DiagonalAssignment {
    bits: Vec<bool>,
}

impl DiagonalAssignment {
    pub fn zeros(n: usize) -> Self {
        Self {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self {
            bits: vec![true; n],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Builds an assignment from an iterator of `0`/`1`-valued integers.
    pub fn from_u8s<I: IntoIterator<Item = u8>>(values: I) -> Self {
        Self {
            bits: values.into_iter().map(|v| v & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Entrywise complement, i.e. the diagonal of `D + I`.
    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|&b| !b).collect(),
        }
    }

    /// Entrywise XOR.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// The diagonal matrix carrying these values.
    pub fn to_matrix(&self) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(self.len());
        for (i, &b) in self.bits.iter().enumerate() {
            m.set(i, i, b);
        }
        m
    }
}

impl fmt::Display for DiagonalAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for DiagonalAssignment {
    type Err = MatrixParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim_end_matches(['\r', '\n']);
        s.chars()
            .enumerate()
            .map(|(column, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(MatrixParseError::IllegalChar {
                    ch,
                    line: 1,
                    column: column + 1,
                }),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Self::from_bits)
    }
}

impl Gf2Matrix {
    pub fn zeros(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            words: vec![0; n * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i == j)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from nested rows of `0`/`1` values.
    ///
    /// Rows must all have length equal to the number of rows.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.as_ref().len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.as_ref().len(),
                });
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i].as_ref()[j] & 1 == 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `u64` words per packed row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n && j < self.n,
            "cell ({i}, {j}) outside {n}x{n}",
            n = self.n
        );
        (self.words[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.n && j < self.n,
            "cell ({i}, {j}) outside {n}x{n}",
            n = self.n
        );
        let w = &mut self.words[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn toggle(&mut self, i: usize, j: usize) {
        let v = self.get(i, j);
        self.set(i, j, !v);
    }

    pub fn diagonal(&self) -> DiagonalAssignment {
        DiagonalAssignment::from_bits((0..self.n).map(|i| self.get(i, i)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Entrywise XOR.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Self {
            n: self.n,
            stride: self.stride,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Copy of `self` with the main diagonal replaced by `diag`.
    pub fn with_diagonal(&self, diag: &DiagonalAssignment) -> Result<Self> {
        if diag.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: diag.len(),
            });
        }
        let mut m = self.clone();
        for (i, &b) in diag.bits().iter().enumerate() {
            m.set(i, i, b);
        }
        Ok(m)
    }

    /// Swaps rows `a` and `b`.
    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.words.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// Adds row `src` into row `dst`.
    pub fn add_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        for w in 0..self.stride {
            let s = self.words[src * self.stride + w];
            self.words[dst * self.stride + w] ^= s;
        }
    }

    pub fn rank(&self) -> usize {
        eliminate(self.words.clone(), self.n, self.n, self.stride)
    }

    /// `true` iff the matrix is non-degenerate. The empty matrix has determinant 1.
    pub fn determinant(&self) -> bool {
        self.rank() == self.n
    }

    /// Determinant of the top-left `i`×`i` block, `1 <= i <= n`.
    pub fn corner_minor(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        Ok(self.leading_minor(i))
    }

    /// Determinant of the leading `size`×`size` block, with `size` unchecked
    /// beyond `size <= n`. `size == 0` gives 1.
    pub(crate) fn leading_minor(&self, size: usize) -> bool {
        debug_assert!(size <= self.n);
        let stride = words_for(size);
        let mut block = Vec::with_capacity(size * stride);
        let tail_bits = size % WORD;
        for r in 0..size {
            let row = self.row_words(r);
            block.extend_from_slice(&row[..stride]);
            if tail_bits != 0 {
                let last = block.len() - 1;
                block[last] &= (1u64 << tail_bits) - 1;
            }
        }
        eliminate(block, size, size, stride) == size
    }

    /// Text form: one line of `0`/`1` characters per row, LF-terminated.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.n * (self.n + 1));
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(if self.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Accepts LF or CRLF line endings and at most
    /// one trailing line terminator.
    pub fn parse(text: &str) -> std::result::Result<Self, MatrixParseError> {
        let body = text
            .strip_suffix("\r\n")
            .or_else(|| text.strip_suffix('\n'))
            .unwrap_or(text);
        if body.is_empty() {
            return Err(MatrixParseError::Empty);
        }
        let lines: Vec<&str> = body
            .split('\n')
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .collect();
        let n = lines.len();
        let mut m = Self::zeros(n);
        for (i, line) in lines.iter().enumerate() {
            let mut count = 0;
            for (j, ch) in line.chars().enumerate() {
                let bit = match ch {
                    '0' => false,
                    '1' => true,
                    _ => {
                        return Err(MatrixParseError::IllegalChar {
                            ch,
                            line: i + 1,
                            column: j + 1,
                        })
                    }
                };
                if j < n && bit {
                    m.set(i, j, true);
                }
                count += 1;
            }
            if count != n {
                return Err(MatrixParseError::Ragged {
                    line: i + 1,
                    found: count,
                    expected: n,
                });
            }
        }
        Ok(m)
    }
}

/// Forward elimination on `rows` packed rows of `stride` words covering
/// `cols` columns. Returns the rank. Consumes the buffer.
fn eliminate(mut words: Vec<u64>, rows: usize, cols: usize, stride: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let w = col / WORD;
        let mask = 1u64 << (col % WORD);
        let Some(pivot) = (rank..rows).find(|&r| words[r * stride + w] & mask != 0) else {
            continue;
        };
        if pivot != rank {
            for k in w..stride {
                words.swap(pivot * stride + k, rank * stride + k);
            }
        }
        let (head, tail) = words.split_at_mut((rank + 1) * stride);
        let pivot_row = &head[rank * stride + w..(rank + 1) * stride];
        for row in tail.chunks_exact_mut(stride) {
            if row[w] & mask != 0 {
                for (dst, src) in row[w..].iter_mut().zip(pivot_row) {
                    *dst ^= src;
                }
            }
        }
        rank += 1;
    }
    rank
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            f.write_str("\n  ")?;
            for j in 0..self.n {
                f.write_str(if self.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl FromStr for Gf2Matrix {
    type Err = MatrixParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::parse(s)
    }
}
