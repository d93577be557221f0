use std::fmt;
use std::ops::{BitXor, Index};
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// An ordered sequence of bits.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: Vec<bool>,
}

impl BitVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    /// Builds a vector from integer values, each of which must be 0 or 1.
    pub fn from_bits(values: &[u8]) -> Result<Self> {
        values
            .iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(invalid(format!("bit value {other} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from)
    }

    /// Expands bytes most-significant bit first.
    pub fn from_bytes_msb(bytes: &[u8]) -> Self {
        let bits = bytes
            .iter()
            .flat_map(|&byte| (0..8).rev().map(move |i| (byte >> i) & 1 == 1))
            .collect();
        Self { bits }
    }

    /// The low `width` bits of `value`, least significant first.
    pub fn from_u64_lsb(value: u64, width: usize) -> Self {
        assert!(width <= 64);
        Self {
            bits: (0..width).map(|i| (value >> i) & 1 == 1).collect(),
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

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn extend_from(&mut self, other: &BitVector) {
        self.bits.extend_from_slice(&other.bits);
    }

    pub fn truncate(&mut self, len: usize) {
        self.bits.truncate(len);
    }

    /// Appends zeros until the length is `len`. Never shortens.
    pub fn pad_to(&mut self, len: usize) {
        if self.bits.len() < len {
            self.bits.resize(len, false);
        }
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVector {
        Self::from(self.bits[start..end].to_vec())
    }

    /// Splits into consecutive chunks of `size` bits; the final chunk may be shorter.
    pub fn chunks(&self, size: usize) -> impl Iterator<Item = BitVector> + '_ {
        self.bits.chunks(size).map(|c| BitVector::from(c.to_vec()))
    }

    /// Bits as 0/1 bytes.
    pub fn to_u8s(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.len() != other.len() {
            return Err(invalid(format!(
                "xor of vectors with lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a ^ b)
            .collect())
    }
}

impl From<Vec<bool>> for BitVector {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl FromIterator<bool> for BitVector {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl Index<usize> for BitVector {
    type Output = bool;

    fn index(&self, i: usize) -> &bool {
        &self.bits[i]
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    /// Panics on length mismatch; use [`BitVector::xor`] for a fallible variant.
    fn bitxor(self, rhs: &BitVector) -> BitVector {
        self.xor(rhs).expect("xor of unequal-length bit vectors")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; `_` and whitespace are ignored.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(invalid(format!("unexpected character `{other}` in bit string"))),
            })
            .collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}
