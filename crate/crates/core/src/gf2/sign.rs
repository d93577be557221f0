//! Legendre symbol, Jacobsthal matrices and Paley-type Hadamard matrices.

use std::fmt;

use crate::error::{invalid, Result};

/// Square matrix with entries in {-1, 0, +1}.
#[derive(Clone, PartialEq, Eq)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Self {
        let entries = (0..order * order)
            .map(|idx| {
                let v = f(idx / order, idx % order);
                debug_assert!((-1..=1).contains(&v));
                v
            })
            .collect();
        Self { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.order + c]
    }

    pub fn row(&self, r: usize) -> &[i8] {
        &self.entries[r * self.order..(r + 1) * self.order]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |r, c| self.get(c, r))
    }

    /// `M·Mᵀ` over the integers, row-major.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.order;
        let mut out = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(&a, &b)| i64::from(a) * i64::from(b))
                    .sum();
            }
        }
        out
    }

    /// True when every entry is ±1 and `M·Mᵀ = n·I`.
    pub fn is_hadamard(&self) -> bool {
        let n = self.order;
        self.entries.iter().all(|&e| e == 1 || e == -1)
            && self
                .gram()
                .iter()
                .enumerate()
                .all(|(idx, &v)| v == if idx / n == idx % n { n as i64 } else { 0 })
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.order {
            let line: Vec<String> = self.row(r).iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix order {}", self.order)?;
        fmt::Display::fmt(self, f)
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn check_odd_prime(p: u64) -> Result<()> {
    if is_odd_prime(p) {
        Ok(())
    } else {
        Err(invalid(format!("{p} is not an odd prime")))
    }
}

fn check_paley_prime(p: u64) -> Result<()> {
    check_odd_prime(p)?;
    if p % 4 != 3 {
        return Err(invalid(format!("{p} is not congruent to 3 mod 4")));
    }
    Ok(())
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (u128::from(acc) * u128::from(base) % u128::from(modulus)) as u64;
        }
        base = (u128::from(base) * u128::from(base) % u128::from(modulus)) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol `(i / p)` by Euler's criterion.
pub fn legendre_symbol(i: i64, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    let r = i.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// `p×p` matrix with entry `(i, j) = χ(j − i)`.
pub fn jacobsthal_matrix(p: u64) -> Result<SignMatrix> {
    check_paley_prime(p)?;
    let chi: Vec<i8> = (0..p as i64)
        .map(|i| legendre_symbol(i, p))
        .collect::<Result<_>>()?;
    let n = p as usize;
    Ok(SignMatrix::from_fn(n, |i, j| chi[(j + n - i) % n]))
}

/// Normalised Paley Hadamard matrix of order `p + 1`: a border of +1 around `Q − I`.
pub fn paley_hadamard(p: u64) -> Result<SignMatrix> {
    let q = jacobsthal_matrix(p)?;
    Ok(SignMatrix::from_fn(q.order() + 1, |r, c| match (r, c) {
        (0, _) | (_, 0) => 1,
        (r, c) if r == c => q.get(r - 1, c - 1) - 1,
        (r, c) => q.get(r - 1, c - 1),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Brute-force residue test, independent of Euler's criterion.
    fn is_square_mod(a: u64, p: u64) -> bool {
        (1..p).any(|x| x * x % p == a % p)
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(0, 11).unwrap(), 0);
        assert_eq!(legendre_symbol(1, 11).unwrap(), 1);
        assert_eq!(legendre_symbol(2, 11).unwrap(), -1);
        assert_eq!(legendre_symbol(-1, 11).unwrap(), -1);
        assert_eq!(legendre_symbol(22, 11).unwrap(), 0);
    }

    #[test]
    fn legendre_rejects_non_primes() {
        for p in [0, 1, 2, 9, 15, 21] {
            assert!(legendre_symbol(1, p).is_err(), "p = {p}");
        }
    }

    #[test]
    fn legendre_matches_enumerated_squares() {
        for p in [3u64, 5, 7, 11, 13, 23] {
            for a in 1..p {
                let expected = if is_square_mod(a, p) { 1 } else { -1 };
                assert_eq!(legendre_symbol(a as i64, p).unwrap(), expected);
            }
        }
    }

    #[test]
    fn jacobsthal_p11_first_row() {
        let q = jacobsthal_matrix(11).unwrap();
        assert_eq!(q.row(0), &[0, 1, -1, 1, 1, 1, -1, -1, -1, 1, -1]);
        assert!((0..11).all(|i| q.get(i, i) == 0));
        for r in 1..11 {
            for c in 0..11 {
                assert_eq!(q.get(r, c), q.get(0, (c + 11 - r) % 11));
            }
        }
    }

    #[test]
    fn jacobsthal_p11_row_four() {
        // Regenerated from the entry rule; the zero must sit on the diagonal.
        let q = jacobsthal_matrix(11).unwrap();
        assert_eq!(q.row(4), &[-1, -1, 1, -1, 0, 1, -1, 1, 1, 1, -1]);
    }

    #[test]
    fn jacobsthal_p3() {
        // Squares mod 3 = {1}, so χ = (0, 1, −1) and q_ij = χ(j − i).
        let q = jacobsthal_matrix(3).unwrap();
        assert_eq!(q.row(0), &[0, 1, -1]);
        assert_eq!(q.row(1), &[-1, 0, 1]);
        assert_eq!(q.row(2), &[1, -1, 0]);
    }

    #[test]
    fn jacobsthal_requires_3_mod_4() {
        assert!(jacobsthal_matrix(5).is_err());
        assert!(jacobsthal_matrix(13).is_err());
        assert!(jacobsthal_matrix(9).is_err());
    }

    #[test]
    fn jacobsthal_gram_structure() {
        // Q·Qᵀ = p·I − J and Q + Qᵀ = 0 for p ≡ 3 mod 4.
        for p in [3u64, 7, 11, 19] {
            let q = jacobsthal_matrix(p).unwrap();
            let n = p as usize;
            let gram = q.gram();
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j { p as i64 - 1 } else { -1 };
                    assert_eq!(gram[i * n + j], expected);
                    assert_eq!(q.get(i, j), -q.get(j, i));
                }
            }
        }
    }

    #[test]
    fn paley_is_hadamard() {
        for p in [3u64, 7, 11, 19, 23] {
            let h = paley_hadamard(p).unwrap();
            assert_eq!(h.order() as u64, p + 1);
            assert!(h.is_hadamard(), "p = {p}");
        }
        let h12 = paley_hadamard(11).unwrap();
        assert!(h12.row(0).iter().all(|&v| v == 1));
        assert!((0..12).all(|r| h12.get(r, 0) == 1));
    }

    proptest! {
        #[test]
        fn legendre_is_multiplicative(a in 1i64..1000, b in 1i64..1000, pi in 0usize..6) {
            let p = [3u64, 7, 11, 13, 23, 31][pi];
            let (la, lb, lab) = (
                legendre_symbol(a, p).unwrap(),
                legendre_symbol(b, p).unwrap(),
                legendre_symbol(a * b, p).unwrap(),
            );
            prop_assume!(la != 0 && lb != 0);
            prop_assert_eq!(la * lb, lab);
        }
    }
}
