//! Feed-forward convolutional encoders and the best-known generator table
//! (rate 1/2 and 1/3, constraint lengths 3 through 14).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{invalid, Result};
use crate::gf2::BitVector;

/// Octal generators, rate 1/2, indexed by `K − 3`.
pub const RATE_HALF_GENERATORS: [[&str; 2]; 12] = [
    ["5", "7"],
    ["15", "17"],
    ["23", "35"],
    ["53", "75"],
    ["133", "171"],
    ["247", "371"],
    ["561", "753"],
    ["1,167", "1,545"],
    ["2,335", "3,661"],
    ["4,335", "5,723"],
    ["10,533", "17,661"],
    ["21,675", "27,123"],
];

/// Octal generators, rate 1/3, indexed by `K − 3`.
pub const RATE_THIRD_GENERATORS: [[&str; 3]; 12] = [
    ["5", "7", "7"],
    ["13", "15", "17"],
    ["25", "33", "37"],
    ["47", "53", "75"],
    ["133", "145", "175"],
    ["225", "331", "367"],
    ["557", "663", "711"],
    ["1,117", "1,365", "1,633"],
    ["2,353", "2,671", "3,175"],
    ["4,767", "5,723", "6,265"],
    ["10,533", "10,675", "17,661"],
    ["21,645", "35,661", "37,133"],
];

pub const MIN_CONSTRAINT_LENGTH: usize = 3;
pub const MAX_CONSTRAINT_LENGTH: usize = 14;

/// Parses an octal generator, ignoring `,` digit-group separators.
pub fn parse_octal(text: &str) -> Result<u64> {
    let digits: String = text.chars().filter(|&c| c != ',').collect();
    u64::from_str_radix(digits.trim(), 8)
        .map_err(|e| invalid(format!("bad octal generator `{text}`: {e}")))
}

/// Rate `1/n_out` feed-forward encoder with `n_out` tap masks over a `K`-stage register.
///
/// Bit 0 of each mask multiplies the newest input; bit `K − 1` the oldest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionalCode {
    name: String,
    constraint_length: usize,
    taps: Vec<u64>,
}

impl ConvolutionalCode {
    pub fn new(name: impl Into<String>, constraint_length: usize, taps: Vec<u64>) -> Result<Self> {
        let name = name.into();
        if !(2..=32).contains(&constraint_length) {
            return Err(invalid(format!("{name}: constraint length {constraint_length}")));
        }
        if !(2..=3).contains(&taps.len()) {
            return Err(invalid(format!("{name}: {} generators, expected 2 or 3", taps.len())));
        }
        let limit = 1u64 << constraint_length;
        if let Some(t) = taps.iter().find(|&&t| t == 0 || t >= limit) {
            return Err(invalid(format!(
                "{name}: tap mask {t:o} does not fit {constraint_length} stages"
            )));
        }
        if taps.iter().all(|t| t >> (constraint_length - 1) == 0) {
            return Err(invalid(format!(
                "{name}: no generator reaches stage {constraint_length}"
            )));
        }
        Ok(Self {
            name,
            constraint_length,
            taps,
        })
    }

    pub fn from_octal(name: impl Into<String>, constraint_length: usize, octal: &[&str]) -> Result<Self> {
        let taps = octal.iter().map(|s| parse_octal(s)).collect::<Result<Vec<_>>>()?;
        Self::new(name, constraint_length, taps)
    }

    /// Entry of the best-known generator table for rate `1/n_out`.
    pub fn best_known(n_out: usize, constraint_length: usize) -> Result<Self> {
        if !(MIN_CONSTRAINT_LENGTH..=MAX_CONSTRAINT_LENGTH).contains(&constraint_length) {
            return Err(invalid(format!(
                "constraint length {constraint_length} outside {MIN_CONSTRAINT_LENGTH}..={MAX_CONSTRAINT_LENGTH}"
            )));
        }
        let idx = constraint_length - MIN_CONSTRAINT_LENGTH;
        let name = format!("conv:rate=1/{n_out},K={constraint_length}");
        match n_out {
            2 => Self::from_octal(name, constraint_length, &RATE_HALF_GENERATORS[idx]),
            3 => Self::from_octal(name, constraint_length, &RATE_THIRD_GENERATORS[idx]),
            _ => Err(invalid(format!("rate 1/{n_out} not tabulated"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn constraint_length(&self) -> usize {
        self.constraint_length
    }

    pub fn n_out(&self) -> usize {
        self.taps.len()
    }

    pub fn taps(&self) -> &[u64] {
        &self.taps
    }

    /// Nominal rate `1/n_out` (termination overhead not included).
    pub fn rate(&self) -> f64 {
        1.0 / self.n_out() as f64
    }

    /// Output length for a message of `len` bits, flush included.
    pub fn encoded_len(&self, len: usize) -> usize {
        (len + self.constraint_length - 1) * self.n_out()
    }

    fn outputs(&self, register: u64, out: &mut BitVector) {
        for &tap in &self.taps {
            out.push((register & tap).count_ones() & 1 == 1);
        }
    }

    /// Encodes from the all-zero state and appends `K − 1` flush zeros.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        if message.is_empty() {
            return Err(invalid(format!("{}: empty message", self.name)));
        }
        let mask = (1u64 << self.constraint_length) - 1;
        let mut register = 0u64;
        let mut out = BitVector::new();
        let flush = std::iter::repeat_n(false, self.constraint_length - 1);
        for bit in message.iter().chain(flush) {
            register = ((register << 1) | u64::from(bit)) & mask;
            self.outputs(register, &mut out);
        }
        debug_assert_eq!(out.len(), self.encoded_len(message.len()));
        Ok(out)
    }

    /// Free distance: the lightest path that leaves the zero state and returns to it.
    ///
    /// Dijkstra over the `2^(K−1)`-state trellis. Every state reaches zero after
    /// `K − 1` zero inputs, so the search always terminates with a value.
    pub fn free_distance(&self) -> u32 {
        let states = 1usize << (self.constraint_length - 1);
        let reg_mask = (1u64 << self.constraint_length) - 1;
        let state_mask = (states - 1) as u64;
        let weight = |reg: u64| -> u32 { self.taps.iter().map(|&t| (reg & t).count_ones() & 1).sum() };

        let mut dist = vec![u32::MAX; states];
        let mut heap = BinaryHeap::new();
        // The only way to leave state 0 is an input 1.
        let first = 1u64;
        let start = (first & state_mask) as usize;
        dist[start] = weight(first);
        heap.push(Reverse((dist[start], start)));
        let mut best = None::<u32>;

        while let Some(Reverse((d, s))) = heap.pop() {
            if d > dist[s] || best.is_some_and(|b| d >= b) {
                continue;
            }
            for input in 0..2u64 {
                let reg = ((s as u64) << 1 | input) & reg_mask;
                let next = (reg & state_mask) as usize;
                let nd = d + weight(reg);
                if next == 0 {
                    best = Some(best.map_or(nd, |b| b.min(nd)));
                } else if nd < dist[next] {
                    dist[next] = nd;
                    heap.push(Reverse((nd, next)));
                }
            }
        }
        best.expect("zero state is reachable from every state")
    }
}
