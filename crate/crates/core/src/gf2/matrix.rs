use std::fmt;

use super::BitVector;
use crate::error::{invalid, Error, Result};

/// Largest message length for which exhaustive codeword enumeration is allowed.
pub const MAX_ENUMERATION_K: usize = 20;

/// Dense binary matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<bool>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Stacks equal-length row vectors.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(invalid(format!(
                "ragged rows: expected {cols} columns, found {}",
                bad.len()
            )));
        }
        let entries = rows.iter().flat_map(|r| r.iter()).collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> BitVector {
        BitVector::from(self.entries[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<BitVector> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Gf2Matrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(invalid(format!(
                "hstack of {}-row and {}-row matrices",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(out)
    }

    /// Copy of the matrix with column `col` removed.
    pub fn delete_column(&self, col: usize) -> Result<Self> {
        if col >= self.cols {
            return Err(invalid(format!("column {col} out of range for {} columns", self.cols)));
        }
        let mut out = Self::zeros(self.rows, self.cols - 1);
        for r in 0..self.rows {
            for (dst, src) in (0..self.cols).filter(|&c| c != col).enumerate() {
                out.set(r, dst, self.get(r, src));
            }
        }
        Ok(out)
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(invalid(format!(
                "product of {}x{} and {}x{} matrices",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in (0..self.cols).filter(|&k| self.get(r, k)) {
                for c in 0..rhs.cols {
                    if rhs.get(k, c) {
                        let idx = r * out.cols + c;
                        out.entries[idx] ^= true;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row-vector product `x·M`: `result[j] = XOR_i (x[i] AND M[i][j])`.
    pub fn mat_vec_mul(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.rows {
            return Err(invalid(format!(
                "vector of length {} against a {}-row matrix",
                x.len(),
                self.rows
            )));
        }
        let mut out = vec![false; self.cols];
        for (i, bit) in x.iter().enumerate() {
            if bit {
                let row = &self.entries[i * self.cols..(i + 1) * self.cols];
                for (o, &m) in out.iter_mut().zip(row) {
                    *o ^= m;
                }
            }
        }
        Ok(BitVector::from(out))
    }

    pub fn is_zero(&self) -> bool {
        !self.entries.iter().any(|&b| b)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            for r in 0..m.rows {
                if r != rank && m.get(r, c) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.entries.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for c in 0..self.cols {
            let v = self.entries[src * self.cols + c];
            self.entries[dst * self.cols + c] ^= v;
        }
    }

    /// Rows packed into 64-bit words, bit `c % 64` of word `c / 64` holding column `c`.
    pub(crate) fn packed_rows(&self) -> Vec<Vec<u64>> {
        let words = self.cols.div_ceil(64);
        (0..self.rows)
            .map(|r| {
                let mut packed = vec![0u64; words];
                for c in (0..self.cols).filter(|&c| self.get(r, c)) {
                    packed[c / 64] |= 1 << (c % 64);
                }
                packed
            })
            .collect()
    }
}

/// Visits the weight of every codeword `u·G`, `u` ranging over all `2^k` messages
/// in Gray-code order so that each step is a single row XOR.
fn for_each_codeword_weight(generator: &Gf2Matrix, mut visit: impl FnMut(usize)) -> Result<()> {
    let k = generator.rows();
    if k > MAX_ENUMERATION_K {
        return Err(Error::Capacity {
            k,
            max: MAX_ENUMERATION_K,
        });
    }
    let rows = generator.packed_rows();
    let mut word = vec![0u64; generator.cols().div_ceil(64)];
    visit(0);
    for step in 1u64..(1u64 << k) {
        let flip = step.trailing_zeros() as usize;
        for (w, r) in word.iter_mut().zip(&rows[flip]) {
            *w ^= r;
        }
        visit(word.iter().map(|w| w.count_ones() as usize).sum());
    }
    Ok(())
}

/// Minimum Hamming weight over the nonzero codewords generated by `generator`.
///
/// For a full-rank generator this is the code's minimum distance. A
/// rank-deficient generator yields 0.
pub fn min_distance_exhaustive(generator: &Gf2Matrix) -> Result<usize> {
    if generator.rows() == 0 {
        return Err(invalid("generator has no rows"));
    }
    let mut best = usize::MAX;
    let mut first = true;
    for_each_codeword_weight(generator, |w| {
        if first {
            first = false;
        } else {
            best = best.min(w);
        }
    })?;
    Ok(best)
}

/// Number of codewords of each weight `0..=n`.
pub fn weight_distribution(generator: &Gf2Matrix) -> Result<Vec<u64>> {
    let mut dist = vec![0u64; generator.cols() + 1];
    for_each_codeword_weight(generator, |w| dist[w] += 1)?;
    Ok(dist)
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bits(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn hamming7_generator() -> Gf2Matrix {
        Gf2Matrix::from_rows(&[
            bits("0111000"),
            bits("1010100"),
            bits("1100010"),
            bits("1110001"),
        ])
        .unwrap()
    }

    #[test]
    fn identity_and_zero_products() {
        let id = Gf2Matrix::identity(5);
        let x = bits("10110");
        assert_eq!(id.mat_vec_mul(&x).unwrap(), x);
        let g = hamming7_generator();
        assert!(g.mat_vec_mul(&BitVector::zeros(4)).unwrap().is_zero());
    }

    #[test]
    fn hamming_message_product() {
        let g = hamming7_generator();
        assert_eq!(g.mat_vec_mul(&bits("1011")).unwrap(), bits("0101011"));
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(hamming7_generator().mat_vec_mul(&bits("101")).is_err());
        assert!(Gf2Matrix::from_rows(&[bits("10"), bits("1")]).is_err());
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = Gf2Matrix::from_rows(&[bits("110"), bits("011"), bits("101")]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(hamming7_generator().rank(), 4);
    }

    #[test]
    fn distances() {
        assert_eq!(min_distance_exhaustive(&hamming7_generator()).unwrap(), 3);
        let rep = Gf2Matrix::from_rows(&[bits("111")]).unwrap();
        assert_eq!(min_distance_exhaustive(&rep).unwrap(), 3);
        let dist = weight_distribution(&hamming7_generator()).unwrap();
        assert_eq!(dist, vec![1, 0, 0, 7, 7, 0, 0, 1]);
    }

    #[test]
    fn enumeration_cap() {
        let big = Gf2Matrix::identity(21);
        assert!(matches!(
            min_distance_exhaustive(&big),
            Err(Error::Capacity { k: 21, .. })
        ));
    }

    #[test]
    fn delete_column_and_hstack() {
        let a = Gf2Matrix::identity(2);
        let b = Gf2Matrix::from_rows(&[bits("11"), bits("01")]).unwrap();
        let ab = a.hstack(&b).unwrap();
        assert_eq!(ab.row(0), bits("1011"));
        assert_eq!(ab.delete_column(3).unwrap().row(1), bits("010"));
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
        proptest::collection::vec(any::<bool>(), rows * cols).prop_map(move |e| {
            let rows_v: Vec<BitVector> = e.chunks(cols).map(|c| BitVector::from(c.to_vec())).collect();
            Gf2Matrix::from_rows(&rows_v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn mat_vec_mul_is_linear(
            m in arb_matrix(6, 9),
            x in proptest::collection::vec(any::<bool>(), 6),
            y in proptest::collection::vec(any::<bool>(), 6),
        ) {
            let x = BitVector::from(x);
            let y = BitVector::from(y);
            let lhs = m.mat_vec_mul(&(&x ^ &y)).unwrap();
            let rhs = &m.mat_vec_mul(&x).unwrap() ^ &m.mat_vec_mul(&y).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn systematic_codes_respect_singleton_bound(p in arb_matrix(4, 5)) {
            let g = Gf2Matrix::identity(4).hstack(&p).unwrap();
            let d = min_distance_exhaustive(&g).unwrap();
            prop_assert!(d <= g.cols() - g.rows() + 1);
        }

        #[test]
        fn transpose_product_identity(a in arb_matrix(3, 4), b in arb_matrix(4, 2)) {
            let lhs = a.mul(&b).unwrap().transpose();
            let rhs = b.transpose().mul(&a.transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
