use crate::error::{invalid, Error, Result};
use crate::gf2::{min_distance_exhaustive, weight_distribution, BitVector, Gf2Matrix};

/// A binary linear block code described by its `k×n` generator matrix.
#[derive(Clone, Debug)]
pub struct LinearBlockCode {
    name: String,
    generator: Gf2Matrix,
    parity_check: Option<Gf2Matrix>,
    message_positions: Option<Vec<usize>>,
    packed: Vec<Vec<u64>>,
}

impl LinearBlockCode {
    /// Validates full row rank and, when a parity-check matrix is supplied, `G·Hᵀ = 0`.
    pub fn new(
        name: impl Into<String>,
        generator: Gf2Matrix,
        parity_check: Option<Gf2Matrix>,
    ) -> Result<Self> {
        let name = name.into();
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || k > n {
            return Err(invalid(format!("{name}: generator is {k}x{n}")));
        }
        if generator.rank() != k {
            return Err(Error::ConstructionInvariant(format!(
                "{name}: generator rank below {k}"
            )));
        }
        if let Some(h) = &parity_check {
            if h.cols() != n || h.rows() != n - k {
                return Err(invalid(format!(
                    "{name}: parity-check is {}x{}, expected {}x{n}",
                    h.rows(),
                    h.cols(),
                    n - k
                )));
            }
            if !generator.mul(&h.transpose())?.is_zero() {
                return Err(Error::ConstructionInvariant(format!(
                    "{name}: G·Hᵀ is not zero"
                )));
            }
        }
        let packed = generator.packed_rows();
        Ok(Self {
            name,
            generator,
            parity_check,
            message_positions: None,
            packed,
        })
    }

    /// Records the codeword positions that carry the message verbatim, in message order.
    pub(crate) fn with_message_positions(mut self, positions: Vec<usize>) -> Self {
        debug_assert_eq!(positions.len(), self.k());
        self.message_positions = Some(positions);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n() as f64
    }

    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> Option<&Gf2Matrix> {
        self.parity_check.as_ref()
    }

    /// Positions holding the message bits for systematic codes.
    pub fn message_positions(&self) -> Option<&[usize]> {
        self.message_positions.as_deref()
    }

    /// `u·G`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        if message.len() != self.k() {
            return Err(invalid(format!(
                "{}: message of {} bits, expected {}",
                self.name,
                message.len(),
                self.k()
            )));
        }
        let mut acc = vec![0u64; self.n().div_ceil(64)];
        for (bit, row) in message.iter().zip(&self.packed) {
            if bit {
                for (a, r) in acc.iter_mut().zip(row) {
                    *a ^= r;
                }
            }
        }
        Ok((0..self.n()).map(|c| (acc[c / 64] >> (c % 64)) & 1 == 1).collect())
    }

    /// Syndrome `c·Hᵀ`, if a parity-check matrix is known.
    pub fn syndrome(&self, word: &BitVector) -> Option<Result<BitVector>> {
        self.parity_check
            .as_ref()
            .map(|h| h.transpose().mat_vec_mul(word))
    }

    pub fn min_distance(&self) -> Result<usize> {
        min_distance_exhaustive(&self.generator)
    }

    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        weight_distribution(&self.generator)
    }

    /// Copy with column `col` deleted from the generator.
    pub fn punctured(&self, col: usize, name: impl Into<String>) -> Result<Self> {
        Self::new(name, self.generator.delete_column(col)?, None)
    }
}

/// For a generator `[P | I_k]` with message in the last `k` positions, the matching
/// `[I_{n-k} | Pᵀ]`.
pub(crate) fn parity_check_for_tail_systematic(generator: &Gf2Matrix) -> Gf2Matrix {
    let (k, n) = (generator.rows(), generator.cols());
    let r = n - k;
    let mut h = Gf2Matrix::zeros(r, n);
    for i in 0..r {
        h.set(i, i, true);
        for j in 0..k {
            h.set(i, r + j, generator.get(j, i));
        }
    }
    h
}

/// For a generator `[I_k | P]` with message in the first `k` positions, the matching
/// `[Pᵀ | I_{n-k}]`.
pub(crate) fn parity_check_for_head_systematic(generator: &Gf2Matrix) -> Gf2Matrix {
    let (k, n) = (generator.rows(), generator.cols());
    let r = n - k;
    let mut h = Gf2Matrix::zeros(r, n);
    for i in 0..r {
        for j in 0..k {
            h.set(i, j, generator.get(j, k + i));
        }
        h.set(i, k + i, true);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_rank_deficient_generator() {
        let rows: Vec<BitVector> = ["110", "110"].iter().map(|s| s.parse().unwrap()).collect();
        let g = Gf2Matrix::from_rows(&rows).unwrap();
        assert!(matches!(
            LinearBlockCode::new("bad", g, None),
            Err(Error::ConstructionInvariant(_))
        ));
    }

    #[test]
    fn rejects_inconsistent_parity_check() {
        let g = Gf2Matrix::from_rows(&["111".parse().unwrap()]).unwrap();
        let h = Gf2Matrix::from_rows(&["100".parse().unwrap(), "011".parse().unwrap()]).unwrap();
        assert!(LinearBlockCode::new("rep", g, Some(h)).is_err());
    }

    #[test]
    fn tail_systematic_parity_check() {
        let g = Gf2Matrix::from_rows(&["1110".parse().unwrap(), "0101".parse().unwrap()]).unwrap();
        let h = parity_check_for_tail_systematic(&g);
        assert!(g.mul(&h.transpose()).unwrap().is_zero());
    }

    #[test]
    fn head_systematic_parity_check() {
        let g = Gf2Matrix::from_rows(&["1011".parse().unwrap(), "0111".parse().unwrap()]).unwrap();
        let h = parity_check_for_head_systematic(&g);
        assert_eq!(h.row(0).to_string(), "1110");
        assert!(g.mul(&h.transpose()).unwrap().is_zero());
    }
}
