//! Reproducible random instances.
//!
//! The generator is ChaCha8 keyed with the 64-bit seed in little-endian order
//! followed by 24 zero bytes (stream 0, counter 0). Off-diagonal cells are
//! visited in row-major order, each consuming one `u64` draw `x` from the
//! stream; the cell is 1 iff `x · den < num · 2⁶⁴` for density `num/den`.
//! Diagonal cells consume nothing and stay 0. Any ChaCha8 implementation can
//! replay these instances exactly.

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Probability as an exact rational in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Density {
    num: u64,
    den: u64,
}

impl Density {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidDensity(format!("{num}/{den}")));
        }
        Ok(Self { num, den })
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    #[inline]
    fn accepts(&self, draw: u64) -> bool {
        (draw as u128) * (self.den as u128) < (self.num as u128) << 64
    }
}

impl FromStr for Density {
    type Err = Error;

    /// Accepts `a/b` or a plain decimal such as `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDensity(s.to_string());
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num = a.trim().parse().map_err(|_| bad())?;
            let den = b.trim().parse().map_err(|_| bad())?;
            return Self::new(num, den).map_err(|_| bad());
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty()
            || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
            || frac.len() > 18
        {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10u64.pow(frac.len() as u32);
        let frac: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int
            .checked_mul(den)
            .and_then(|v| v.checked_add(frac))
            .ok_or_else(bad)?;
        Self::new(num, den).map_err(|_| bad())
    }
}

impl fmt::Display for Density {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Density {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Random matrix with independent off-diagonal cells and a zero diagonal.
pub fn gen_random(n: usize, density: Density, seed: u64) -> Gf2Matrix {
    let mut rng = rng_for_seed(seed);
    let mut m = Gf2Matrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && density.accepts(rng.next_u64()) {
                m.set(i, j, true);
            }
        }
    }
    m
}
