//! The Z2-graded coordinate space C^(N|N) and its signed basis indexing.
//!
//! Basis vectors carry signed labels: +1..=+N are even, -1..=-N are odd.
//! Storage positions are 0..2N with the even block first, so index +a sits at
//! position a-1 and index -a at position N+a-1.

use crate::error::{Error, Result};

/// Hard cap on the half-dimension. Keeps 3-leg flat addresses inside u32.
pub const MAX_HALF_DIM: u32 = 512;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Superspace {
    n: u32,
}

impl Superspace {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySpace);
        }
        if n > MAX_HALF_DIM {
            return Err(Error::SpaceTooLarge(n, MAX_HALF_DIM));
        }
        Ok(Superspace { n })
    }

    pub fn half_dim(self) -> u32 {
        self.n
    }

    pub fn dim(self) -> u32 {
        2 * self.n
    }

    /// Signed basis labels in storage order: 1..=N then -1..=-N.
    pub fn basis(self) -> impl Iterator<Item = i32> {
        let n = self.n as i32;
        (1..=n).chain((1..=n).map(|a| -a))
    }

    /// Signed labels in the total order -N < ... < -1 < 1 < ... < N.
    pub fn ordered_basis(self) -> impl Iterator<Item = i32> {
        let n = self.n as i32;
        (-n..=-1).chain(1..=n)
    }

    pub fn parity(self, index: i32) -> Result<u8> {
        self.position(index).map(|_| u8::from(index < 0))
    }

    pub fn position(self, index: i32) -> Result<u32> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        let a = index.unsigned_abs();
        if a > self.n {
            return Err(Error::IndexOutOfRange {
                index: index as i64,
                n: self.n,
            });
        }
        Ok(if index > 0 { a - 1 } else { self.n + a - 1 })
    }

    pub fn index_at(self, position: u32) -> Result<i32> {
        if position >= self.dim() {
            return Err(Error::IndexOutOfRange {
                index: position as i64,
                n: self.n,
            });
        }
        Ok(if position < self.n {
            (position + 1) as i32
        } else {
            -((position - self.n + 1) as i32)
        })
    }

    pub(crate) fn position_parity(self, position: u32) -> u8 {
        u8::from(position >= self.n)
    }

    /// Flat address of a multi-index, leftmost leg most significant.
    pub fn flat(self, indices: &[i32]) -> Result<u32> {
        let d = self.dim() as u64;
        let mut out: u64 = 0;
        for &i in indices {
            out = out * d + self.position(i)? as u64;
        }
        u32::try_from(out).map_err(|_| Error::AddressOverflow {
            legs: indices.len() as u32,
            dim: self.dim(),
        })
    }

    pub fn unflat(self, flat: u32, legs: u32) -> Vec<i32> {
        let d = self.dim();
        let mut digits = vec![0i32; legs as usize];
        let mut f = flat;
        for slot in (0..legs as usize).rev() {
            digits[slot] = self
                .index_at(f % d)
                .expect("digit below dim is always a valid position");
            f /= d;
        }
        digits
    }

    /// Parity (mod 2) of a flat multi-index: sum of leg parities.
    pub fn flat_parity(self, flat: u32, legs: u32) -> u8 {
        let d = self.dim();
        let mut f = flat;
        let mut p = 0u8;
        for _ in 0..legs {
            p ^= self.position_parity(f % d);
            f /= d;
        }
        p
    }
}
