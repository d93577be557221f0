use super::LinearBlockCode;
use crate::error::{invalid, Result};
use crate::gf2::{BitVector, Gf2Matrix};

pub const MAX_RM_VARIABLES: usize = 5;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Evaluation of the monomial `∏ x_i` (i in `vars`) at the `2^m` points.
///
/// `ψ(x_i)` is `2^(m−1−i)` ones followed by as many zeros, repeated; the empty
/// product is the all-ones word.
pub fn psi(vars: &[usize], m: usize) -> BitVector {
    let n = 1usize << m;
    (0..n)
        .map(|j| vars.iter().all(|&i| (j >> (m - 1 - i)) & 1 == 0))
        .collect()
}

/// All `degree`-subsets of `0..m` in lexicographic order.
fn combinations(m: usize, degree: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=m - left {
            cur.push(i);
            go(i + 1, m, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, degree, &mut Vec::new(), &mut out);
    out
}

/// Monomials of degree ≤ r, by degree then lexicographically.
pub fn monomials(r: usize, m: usize) -> Vec<Vec<usize>> {
    (0..=r).flat_map(|d| combinations(m, d)).collect()
}

/// Generator rows `ψ(monomial)`; accepts `r = 0` for internal use (parity-check of `RM(m−1, m)`).
fn rm_generator(r: usize, m: usize) -> Result<Gf2Matrix> {
    let rows: Vec<BitVector> = monomials(r, m).iter().map(|v| psi(v, m)).collect();
    Gf2Matrix::from_rows(&rows)
}

/// `RM(r, m)` for `0 < r < m ≤ 5`. Its parity-check matrix is the generator of `RM(m − r − 1, m)`.
pub fn reed_muller_code(r: usize, m: usize) -> Result<LinearBlockCode> {
    if !(r > 0 && r < m && m <= MAX_RM_VARIABLES) {
        return Err(invalid(format!(
            "Reed-Muller parameters r = {r}, m = {m} outside 0 < r < m <= {MAX_RM_VARIABLES}"
        )));
    }
    let g = rm_generator(r, m)?;
    let h = rm_generator(m - r - 1, m)?;
    LinearBlockCode::new(format!("rm:r={r},m={m}"), g, Some(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rm13_rows() {
        let code = reed_muller_code(1, 3).unwrap();
        let rows: Vec<String> = code.generator().row_vectors().iter().map(|r| r.to_string()).collect();
        assert_eq!(rows, ["11111111", "11110000", "11001100", "10101010"]);
    }

    #[test]
    fn rm24_dimensions() {
        let code = reed_muller_code(2, 4).unwrap();
        assert_eq!((code.k(), code.n()), (11, 16));
        assert!((code.rate() - 0.6875).abs() < 1e-12);
    }

    #[test]
    fn degree_two_rows_are_products() {
        let code = reed_muller_code(2, 3).unwrap();
        let g = code.generator();
        // Row 4 is ψ(x0 x1).
        assert_eq!(g.row(4).to_string(), "11000000");
        assert_eq!(g.row(5).to_string(), "10100000");
        assert_eq!(g.row(6).to_string(), "10001000");
    }

    #[test]
    fn distances_match_2_pow_m_minus_r() {
        for (r, m) in [(1, 3), (1, 4), (2, 4), (1, 5), (2, 5)] {
            let d = reed_muller_code(r, m).unwrap().min_distance().unwrap();
            assert_eq!(d, 1 << (m - r), "RM({r},{m})");
        }
    }

    #[test]
    fn parameter_range() {
        assert!(reed_muller_code(0, 3).is_err());
        assert!(reed_muller_code(3, 3).is_err());
        assert!(reed_muller_code(1, 6).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(23, 3), 1771);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }
}
