//! Sparse linear operators on tensor powers of C^(N|N) with Koszul sign
//! bookkeeping.
//!
//! An entry at (row, col) multi-indices (i1..im), (j1..jm) is the coefficient
//! of the matrix unit e_{i1 j1} (x) ... (x) e_{im jm}. All graded signs enter
//! through `graded_tensor` and `permute_legs`; composition and linear
//! combinations are sign-free once entries exist.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::space::Superspace;

/// Relative threshold below which product accumulation dust is dropped.
/// Only `compose` prunes: constructors and linear combinations keep every
/// computed entry, so exact constructions are never altered.
pub const PRODUCT_DUST_REL: f64 = 1e-14;

const COL_MASK: u64 = 0xffff_ffff;

#[derive(Clone, Debug)]
pub struct GradedOp {
    space: Superspace,
    legs: u32,
    // key = (row_flat << 32) | col_flat, row-major ordering
    entries: BTreeMap<u64, Complex64>,
}

fn key(row: u32, col: u32) -> u64 {
    ((row as u64) << 32) | col as u64
}

fn address_span(space: Superspace, legs: u32) -> Result<u32> {
    if legs == 0 {
        return Err(Error::LegMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut span: u64 = 1;
    for _ in 0..legs {
        span *= space.dim() as u64;
        if span > (1u64 << 31) {
            return Err(Error::AddressOverflow {
                legs,
                dim: space.dim(),
            });
        }
    }
    Ok(span as u32)
}

impl GradedOp {
    pub fn zero(space: Superspace, legs: u32) -> Result<Self> {
        address_span(space, legs)?;
        Ok(GradedOp {
            space,
            legs,
            entries: BTreeMap::new(),
        })
    }

    pub fn identity(space: Superspace, legs: u32) -> Result<Self> {
        let span = address_span(space, legs)?;
        let one = Complex64::new(1.0, 0.0);
        let entries = (0..span).map(|d| (key(d, d), one)).collect();
        Ok(GradedOp {
            space,
            legs,
            entries,
        })
    }

    /// One-leg matrix unit e_{ij} with signed basis labels.
    pub fn matrix_unit(space: Superspace, i: i32, j: i32) -> Result<Self> {
        let mut op = GradedOp::zero(space, 1)?;
        op.add_term(&[i], &[j], Complex64::new(1.0, 0.0))?;
        Ok(op)
    }

    pub fn space(&self) -> Superspace {
        self.space
    }

    pub fn legs(&self) -> u32 {
        self.legs
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check_legs(&self, indices: &[i32]) -> Result<()> {
        if indices.len() as u32 != self.legs {
            return Err(Error::LegMismatch {
                expected: self.legs,
                found: indices.len() as u32,
            });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &GradedOp) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: self.space.half_dim(),
                right: other.space.half_dim(),
            });
        }
        if self.legs != other.legs {
            return Err(Error::LegCountMismatch {
                left: self.legs,
                right: other.legs,
            });
        }
        Ok(())
    }

    pub fn get(&self, rows: &[i32], cols: &[i32]) -> Result<Complex64> {
        self.check_legs(rows)?;
        self.check_legs(cols)?;
        let k = key(self.space.flat(rows)?, self.space.flat(cols)?);
        Ok(self.entries.get(&k).copied().unwrap_or_default())
    }

    /// Accumulates `val` into the entry at the given signed multi-indices.
    pub fn add_term(&mut self, rows: &[i32], cols: &[i32], val: Complex64) -> Result<()> {
        self.check_legs(rows)?;
        self.check_legs(cols)?;
        let k = key(self.space.flat(rows)?, self.space.flat(cols)?);
        let slot = self.entries.entry(k).or_default();
        *slot += val;
        if slot.norm() == 0.0 {
            self.entries.remove(&k);
        }
        Ok(())
    }

    pub fn scale(&mut self, c: Complex64) {
        if c.norm() == 0.0 {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v *= c;
        }
    }

    pub fn scaled(mut self, c: Complex64) -> Self {
        self.scale(c);
        self
    }

    /// self += c * other
    pub fn add_scaled(&mut self, other: &GradedOp, c: Complex64) -> Result<()> {
        self.check_same_shape(other)?;
        if c.norm() == 0.0 {
            return Ok(());
        }
        for (&k, &v) in &other.entries {
            let slot = self.entries.entry(k).or_default();
            *slot += c * v;
            if slot.norm() == 0.0 {
                self.entries.remove(&k);
            }
        }
        Ok(())
    }

    /// Matrix product self * other, pruning accumulation dust below
    /// `PRODUCT_DUST_REL` relative to the largest product entry.
    pub fn compose(&self, other: &GradedOp) -> Result<GradedOp> {
        self.check_same_shape(other)?;
        let mut acc: HashMap<u64, Complex64> = HashMap::new();
        for (&ka, &va) in &self.entries {
            let row = ka >> 32;
            let mid = ka & COL_MASK;
            let range = other.entries.range((mid << 32)..((mid + 1) << 32));
            for (&kb, &vb) in range {
                let col = kb & COL_MASK;
                *acc.entry((row << 32) | col).or_default() += va * vb;
            }
        }
        let max = acc.values().fold(0.0f64, |m, v| m.max(v.norm()));
        let floor = PRODUCT_DUST_REL * max;
        let mut entries: Vec<(u64, Complex64)> = acc
            .into_iter()
            .filter(|(_, v)| v.norm() > floor || (max == 0.0 && v.norm() > 0.0))
            .collect();
        entries.sort_unstable_by_key(|&(k, _)| k);
        Ok(GradedOp {
            space: self.space,
            legs: self.legs,
            entries: entries.into_iter().collect(),
        })
    }

    /// Graded tensor product with the Koszul sign: the coefficient of
    /// (a (x) b)(v (x) w) picks up (-1)^(deg b * deg v), which per matrix
    /// entry means the sign (-1)^(deg(b-entry) * parity(a-column)).
    pub fn graded_tensor(&self, other: &GradedOp) -> Result<GradedOp> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch {
                left: self.space.half_dim(),
                right: other.space.half_dim(),
            });
        }
        let legs = self.legs + other.legs;
        address_span(self.space, legs)?;
        let span_b = address_span(self.space, other.legs)? as u64;

        struct BEntry {
            row: u64,
            col: u64,
            val: Complex64,
            odd: bool,
        }
        let b_entries: Vec<BEntry> = other
            .entries
            .iter()
            .map(|(&k, &v)| {
                let row = k >> 32;
                let col = k & COL_MASK;
                let deg = other.space.flat_parity(row as u32, other.legs)
                    ^ other.space.flat_parity(col as u32, other.legs);
                BEntry {
                    row,
                    col,
                    val: v,
                    odd: deg == 1,
                }
            })
            .collect();

        let mut entries = BTreeMap::new();
        for (&ka, &va) in &self.entries {
            let row_a = ka >> 32;
            let col_a = ka & COL_MASK;
            let col_odd = self.space.flat_parity(col_a as u32, self.legs) == 1;
            for b in &b_entries {
                let sign = if b.odd && col_odd { -1.0 } else { 1.0 };
                let k = key(
                    (row_a * span_b + b.row) as u32,
                    (col_a * span_b + b.col) as u32,
                );
                entries.insert(k, va * b.val * sign);
            }
        }
        Ok(GradedOp {
            space: self.space,
            legs,
            entries,
        })
    }

    /// Relocates leg i to slot dest[i-1] (1-based, a permutation of 1..=legs),
    /// conjugating by the corresponding product of graded flips. The sign per
    /// multi-index is the Koszul sign of reordering its graded symbols.
    pub fn permute_legs(&self, dest: &[u32]) -> Result<GradedOp> {
        let m = self.legs as usize;
        if dest.len() != m {
            return Err(Error::LegMismatch {
                expected: self.legs,
                found: dest.len() as u32,
            });
        }
        let mut seen = vec![false; m];
        for &d in dest {
            if d == 0 || d as usize > m || seen[d as usize - 1] {
                return Err(Error::BadEmbedding {
                    positions: dest.to_vec(),
                    legs: self.legs,
                    total: self.legs,
                });
            }
            seen[d as usize - 1] = true;
        }

        let dim = self.space.dim() as u64;
        let decode = |flat: u64| -> Vec<u32> {
            let mut digits = vec![0u32; m];
            let mut f = flat;
            for slot in (0..m).rev() {
                digits[slot] = (f % dim) as u32;
                f /= dim;
            }
            digits
        };
        let reorder = |digits: &[u32]| -> (u64, bool) {
            // Koszul sign: one factor (-1)^(p_i p_j) per inverted odd pair.
            let mut inv_odd = 0u32;
            for i in 0..m {
                for j in (i + 1)..m {
                    if dest[i] > dest[j] {
                        inv_odd += (self.space.position_parity(digits[i])
                            & self.space.position_parity(digits[j]))
                            as u32;
                    }
                }
            }
            let mut placed = vec![0u32; m];
            for (i, &d) in dest.iter().enumerate() {
                placed[d as usize - 1] = digits[i];
            }
            let mut flat = 0u64;
            for &dgt in &placed {
                flat = flat * dim + dgt as u64;
            }
            (flat, inv_odd % 2 == 1)
        };

        let mut entries = BTreeMap::new();
        for (&k, &v) in &self.entries {
            let (row, row_neg) = reorder(&decode(k >> 32));
            let (col, col_neg) = reorder(&decode(k & COL_MASK));
            let val = if row_neg ^ col_neg { -v } else { v };
            entries.insert(key(row as u32, col as u32), val);
        }
        Ok(GradedOp {
            space: self.space,
            legs: self.legs,
            entries,
        })
    }

    /// Two-leg convenience: X -> P X P.
    pub fn swap_legs(&self) -> Result<GradedOp> {
        if self.legs != 2 {
            return Err(Error::LegMismatch {
                expected: 2,
                found: self.legs,
            });
        }
        self.permute_legs(&[2, 1])
    }

    /// Places the operator's legs at `positions` (1-based, pairwise distinct,
    /// in any order) inside `total` legs, acting as identity elsewhere.
    pub fn embed(&self, positions: &[u32], total: u32) -> Result<GradedOp> {
        let m = self.legs as usize;
        let bad = || Error::BadEmbedding {
            positions: positions.to_vec(),
            legs: self.legs,
            total,
        };
        if positions.len() != m || total < self.legs {
            return Err(bad());
        }
        let mut seen = vec![false; total as usize];
        for &p in positions {
            if p == 0 || p > total || seen[p as usize - 1] {
                return Err(bad());
            }
            seen[p as usize - 1] = true;
        }
        let mut widened = self.clone();
        if total > self.legs {
            let id = GradedOp::identity(self.space, total - self.legs)?;
            widened = self.graded_tensor(&id)?;
        }
        let mut dest: Vec<u32> = positions.to_vec();
        for slot in 1..=total {
            if !seen[slot as usize - 1] {
                dest.push(slot);
            }
        }
        widened.permute_legs(&dest)
    }

    /// Applies the parity reflection e_{ij} -> e_{-i,-j} on one leg.
    pub fn eta_on_leg(&self, leg: u32) -> Result<GradedOp> {
        if leg == 0 || leg > self.legs {
            return Err(Error::BadLeg {
                leg,
                legs: self.legs,
            });
        }
        let dim = self.space.dim() as u64;
        let n = self.space.half_dim() as u64;
        // digit stride of the chosen leg inside a flat address
        let mut stride = 1u64;
        for _ in 0..(self.legs - leg) {
            stride *= dim;
        }
        let remap = |flat: u64| -> u64 {
            let digit = (flat / stride) % dim;
            let flipped = (digit + n) % dim;
            flat - digit * stride + flipped * stride
        };
        let mut entries = BTreeMap::new();
        for (&k, &v) in &self.entries {
            entries.insert(key(remap(k >> 32) as u32, remap(k & COL_MASK) as u32), v);
        }
        Ok(GradedOp {
            space: self.space,
            legs: self.legs,
            entries,
        })
    }

    /// Largest entry magnitude (max norm).
    pub fn max_abs(&self) -> f64 {
        self.entries.values().fold(0.0, |m, v| m.max(v.norm()))
    }

    /// Decoded entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<i32>, Vec<i32>, Complex64)> + '_ {
        self.entries.iter().map(move |(&k, &v)| {
            (
                self.space.unflat((k >> 32) as u32, self.legs),
                self.space.unflat((k & COL_MASK) as u32, self.legs),
                v,
            )
        })
    }

    /// Dense column-action helper for small cross-checks: applies the operator
    /// to a dense vector indexed by flat addresses.
    pub fn apply_dense(&self, vec: &[Complex64]) -> Result<Vec<Complex64>> {
        let span = address_span(self.space, self.legs)? as usize;
        if vec.len() != span {
            return Err(Error::LegMismatch {
                expected: span as u32,
                found: vec.len() as u32,
            });
        }
        let mut out = vec![Complex64::default(); span];
        for (&k, &v) in &self.entries {
            let row = (k >> 32) as usize;
            let col = (k & COL_MASK) as usize;
            out[row] += v * vec[col];
        }
        Ok(out)
    }
}

/// max-norm of a - b.
pub fn max_abs_diff(a: &GradedOp, b: &GradedOp) -> Result<f64> {
    let mut d = a.clone();
    d.add_scaled(b, Complex64::new(-1.0, 0.0))?;
    Ok(d.max_abs())
}

/// a*b - b*a
pub fn commutator(a: &GradedOp, b: &GradedOp) -> Result<GradedOp> {
    let mut ab = a.compose(b)?;
    let ba = b.compose(a)?;
    ab.add_scaled(&ba, Complex64::new(-1.0, 0.0))?;
    Ok(ab)
}

/// Upper bound on the product's entry count, for memory budgeting.
pub fn estimate_product_nnz(a: &GradedOp, b: &GradedOp) -> u64 {
    let mut row_counts: HashMap<u64, u64> = HashMap::new();
    for &k in b.entries.keys() {
        *row_counts.entry(k >> 32).or_default() += 1;
    }
    a.entries
        .keys()
        .map(|&k| row_counts.get(&(k & COL_MASK)).copied().unwrap_or(0))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sp(n: u32) -> Superspace {
        Superspace::new(n).unwrap()
    }

    #[test]
    fn tensor_koszul_sign_example() {
        // frozen reference value: (e_{1,2} (x) e_{-1,-2}) has coefficient +1
        // at row (1,-1), col (2,-2) because e_{-1,-2} is even.
        let s = sp(2);
        let a = GradedOp::matrix_unit(s, 1, 2).unwrap();
        let b = GradedOp::matrix_unit(s, -1, -2).unwrap();
        let t = a.graded_tensor(&b).unwrap();
        assert_eq!(t.get(&[1, -1], &[2, -2]).unwrap(), c(1.0, 0.0));
        assert_eq!(t.nnz(), 1);
    }

    #[test]
    fn tensor_koszul_sign_odd_odd() {
        // odd (x) odd with odd column on the left factor flips sign:
        // (e_{1,-2} (x) e_{-1,2}) entry = (-1)^(1*1) = -1
        let s = sp(2);
        let a = GradedOp::matrix_unit(s, 1, -2).unwrap();
        let b = GradedOp::matrix_unit(s, -1, 2).unwrap();
        let t = a.graded_tensor(&b).unwrap();
        assert_eq!(t.get(&[1, -1], &[-2, 2]).unwrap(), c(-1.0, 0.0));
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let s = sp(2);
        let id1 = GradedOp::identity(s, 1).unwrap();
        let id2 = GradedOp::identity(s, 2).unwrap();
        let t = id1.graded_tensor(&id1).unwrap();
        assert_eq!(max_abs_diff(&t, &id2).unwrap(), 0.0);
    }

    #[test]
    fn compose_matches_matrix_units() {
        let s = sp(2);
        let e12 = GradedOp::matrix_unit(s, 1, 2).unwrap();
        let e2m1 = GradedOp::matrix_unit(s, 2, -1).unwrap();
        let prod = e12.compose(&e2m1).unwrap();
        let expect = GradedOp::matrix_unit(s, 1, -1).unwrap();
        assert_eq!(max_abs_diff(&prod, &expect).unwrap(), 0.0);
        // e_{2,-1} e_{1,2} = 0
        assert!(e2m1.compose(&e12).unwrap().is_zero());
    }

    #[test]
    fn add_term_accumulates_and_cancels() {
        let s = sp(1);
        let mut op = GradedOp::zero(s, 1).unwrap();
        op.add_term(&[1], &[-1], c(2.0, 0.0)).unwrap();
        op.add_term(&[1], &[-1], c(-2.0, 0.0)).unwrap();
        assert!(op.is_zero());
    }

    #[test]
    fn shape_errors() {
        let a = GradedOp::identity(sp(2), 2).unwrap();
        let b = GradedOp::identity(sp(2), 1).unwrap();
        let d = GradedOp::identity(sp(3), 2).unwrap();
        assert!(matches!(
            a.compose(&b),
            Err(Error::LegCountMismatch { .. })
        ));
        assert!(matches!(a.compose(&d), Err(Error::SpaceMismatch { .. })));
        assert!(a.get(&[1], &[1]).is_err());
        assert!(a.embed(&[1, 1], 3).is_err());
        assert!(a.embed(&[1, 4], 3).is_err());
        assert!(a.permute_legs(&[1, 1]).is_err());
    }

    #[test]
    fn eta_moves_entries() {
        let s = sp(2);
        let a = GradedOp::matrix_unit(s, 1, 2).unwrap();
        let b = GradedOp::matrix_unit(s, -2, 1).unwrap();
        let t = a.graded_tensor(&b).unwrap();
        let t1 = t.eta_on_leg(1).unwrap();
        assert_eq!(t1.get(&[-1, -2], &[-2, 1]).unwrap(), t.get(&[1, -2], &[2, 1]).unwrap());
        let t2 = t.eta_on_leg(2).unwrap();
        assert_eq!(t2.get(&[1, 2], &[2, -1]).unwrap(), t.get(&[1, -2], &[2, 1]).unwrap());
        // involution
        assert_eq!(
            max_abs_diff(&t.eta_on_leg(1).unwrap().eta_on_leg(1).unwrap(), &t).unwrap(),
            0.0
        );
    }

    #[test]
    fn embed_at_leading_positions_is_tensor() {
        let s = sp(2);
        let a = GradedOp::matrix_unit(s, 1, -2).unwrap();
        let b = GradedOp::matrix_unit(s, -1, 2).unwrap();
        let t = a.graded_tensor(&b).unwrap();
        let id1 = GradedOp::identity(s, 1).unwrap();
        let emb = t.embed(&[1, 2], 3).unwrap();
        let direct = t.graded_tensor(&id1).unwrap();
        assert_eq!(max_abs_diff(&emb, &direct).unwrap(), 0.0);
        let emb23 = t.embed(&[2, 3], 3).unwrap();
        let direct23 = id1.graded_tensor(&t).unwrap();
        assert_eq!(max_abs_diff(&emb23, &direct23).unwrap(), 0.0);
    }

    #[test]
    fn dust_pruning_only_in_products() {
        let s = sp(1);
        let mut a = GradedOp::zero(s, 1).unwrap();
        a.add_term(&[1], &[1], c(1.0, 0.0)).unwrap();
        a.add_term(&[-1], &[-1], c(1e-20, 0.0)).unwrap();
        // linear combination keeps the tiny entry
        assert_eq!(a.nnz(), 2);
        // product against identity prunes it relative to the max entry
        let id = GradedOp::identity(s, 1).unwrap();
        assert_eq!(a.compose(&id).unwrap().nnz(), 1);
    }

    #[test]
    fn estimate_product_bound() {
        let s = sp(2);
        let id = GradedOp::identity(s, 2).unwrap();
        assert_eq!(estimate_product_nnz(&id, &id), 16);
    }
}
