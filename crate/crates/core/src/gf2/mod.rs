//! GF(2) linear algebra over edge-indexed bit vectors.

mod basis;
mod spaces;

pub use basis::{Gf2Basis, InsertOutcome};
pub use spaces::{cut_space_stars, cycle_space_basis, cycle_space_dim, is_even_subgraph, star};

use std::fmt;

use crate::error::{Error, Result};

/// A subset of a host graph's edges, as a dense bit vector of length `m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    len: usize,
    words: Vec<u64>,
}

impl EdgeVector {
    pub fn zeros(m: usize) -> Self {
        EdgeVector { len: m, words: vec![0; m.div_ceil(64)] }
    }

    pub fn ones(m: usize) -> Self {
        let mut v = Self::zeros(m);
        for w in &mut v.words {
            *w = u64::MAX;
        }
        v.clear_tail();
        v
    }

    /// Panics if an id is out of range.
    pub fn from_ids<I: IntoIterator<Item = usize>>(m: usize, ids: I) -> Self {
        let mut v = Self::zeros(m);
        for id in ids {
            v.set(id, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        Self::from_ids(bits.len(), bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    fn clear_tail(&mut self) {
        if !self.len.is_multiple_of(64) {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << (self.len % 64)) - 1;
            }
        }
    }

    /// Size of the edge universe this vector indexes.
    #[inline]
    pub fn host_m(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, id: usize) -> bool {
        debug_assert!(id < self.len);
        self.words[id >> 6] >> (id & 63) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, id: usize, value: bool) {
        assert!(id < self.len, "edge id {id} out of range for m = {}", self.len);
        if value {
            self.words[id >> 6] |= 1 << (id & 63);
        } else {
            self.words[id >> 6] &= !(1 << (id & 63));
        }
    }

    #[inline]
    pub fn flip(&mut self, id: usize) {
        assert!(id < self.len, "edge id {id} out of range for m = {}", self.len);
        self.words[id >> 6] ^= 1 << (id & 63);
    }

    /// Support size.
    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Parity of the support size.
    pub fn has_even_support(&self) -> bool {
        self.count_ones().is_multiple_of(2)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + t)
            })
        })
    }

    fn check(&self, other: &EdgeVector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch { left: self.len, right: other.len });
        }
        Ok(())
    }

    pub fn xor_assign(&mut self, other: &EdgeVector) -> Result<()> {
        self.check(other)?;
        self.xor_unchecked(other);
        Ok(())
    }

    pub fn xor(&self, other: &EdgeVector) -> Result<EdgeVector> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    #[inline]
    pub(crate) fn xor_unchecked(&mut self, other: &EdgeVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `|a ∩ b| mod 2`, the pairing under which cuts and cycles are orthogonal.
    pub fn intersection_parity(&self, other: &EdgeVector) -> Result<bool> {
        self.check(other)?;
        Ok(self.parity_unchecked(other))
    }

    #[inline]
    pub(crate) fn parity_unchecked(&self, other: &EdgeVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let ones: u32 = self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum();
        ones % 2 == 1
    }

    /// `|a ∩ b|`.
    pub fn intersection_count(&self, other: &EdgeVector) -> Result<usize> {
        self.check(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Hex encoding used in certificates.
    ///
    /// Character `k` is the nibble holding edge ids `4k..4k+4`, with edge
    /// `4k` as its least significant bit. Nibbles are written in increasing
    /// `k`, so the most significant end comes last. Length is `ceil(m / 4)`.
    pub fn to_hex(&self) -> String {
        (0..self.len.div_ceil(4))
            .map(|k| {
                let nibble = (self.words[k / 16] >> ((k % 16) * 4)) & 0xf;
                char::from_digit(nibble as u32, 16).unwrap()
            })
            .collect()
    }

    pub fn from_hex(m: usize, hex: &str) -> Result<EdgeVector> {
        if hex.len() != m.div_ceil(4) {
            return Err(Error::Hex(format!("expected {} digits for m = {m}, found {}", m.div_ceil(4), hex.len())));
        }
        let mut v = EdgeVector::zeros(m);
        for (k, c) in hex.chars().enumerate() {
            let nibble = c.to_digit(16).ok_or_else(|| Error::Hex(format!("bad digit {c:?}")))? as u64;
            for b in 0..4 {
                if nibble >> b & 1 == 1 {
                    let id = 4 * k + b;
                    if id >= m {
                        return Err(Error::Hex("bits set beyond m".into()));
                    }
                    v.set(id, true);
                }
            }
        }
        Ok(v)
    }
}

impl fmt::Debug for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeVector(m={}, ", self.len)?;
        f.debug_set().entries(self.ones_iter()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ids(g: &Graph, pairs: &[(usize, usize)]) -> EdgeVector {
        EdgeVector::from_ids(g.m(), pairs.iter().map(|&(u, v)| g.edge_id(u, v).unwrap()))
    }

    #[test]
    fn parity_examples() {
        let p = Graph::path(5);
        let a = ids(&p, &[(1, 2), (2, 3)]);
        let b = ids(&p, &[(2, 3), (3, 4)]);
        assert!(a.intersection_parity(&b).unwrap());
        assert!(!a.intersection_parity(&a).unwrap());

        let k4 = Graph::complete(4);
        let h1 = ids(&k4, &[(0, 1), (1, 2), (2, 3), (0, 3)]);
        let tri = ids(&k4, &[(0, 1), (0, 2), (1, 2)]);
        assert!(!h1.intersection_parity(&tri).unwrap());
        assert_eq!(h1.intersection_count(&tri).unwrap(), 2);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = EdgeVector::zeros(3);
        let b = EdgeVector::zeros(4);
        assert_eq!(
            a.intersection_parity(&b),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        );
        assert!(a.xor(&b).is_err());
    }

    #[test]
    fn hex_layout() {
        let v = EdgeVector::from_ids(6, [0, 5]);
        assert_eq!(v.to_hex(), "12");
        assert_eq!(EdgeVector::from_hex(6, "12").unwrap(), v);
        assert!(EdgeVector::from_hex(6, "1").is_err());
        assert!(EdgeVector::from_hex(6, "1g").is_err());
        assert!(EdgeVector::from_hex(6, "14").is_err());
        assert_eq!(EdgeVector::zeros(0).to_hex(), "");
        let big = EdgeVector::from_ids(130, [0, 63, 64, 129]);
        assert_eq!(EdgeVector::from_hex(130, &big.to_hex()).unwrap(), big);
    }

    #[test]
    fn ones_clears_tail() {
        let v = EdgeVector::ones(70);
        assert_eq!(v.count_ones(), 70);
        assert_eq!(v.lowest_one(), Some(0));
    }
}
