use super::block::parity_check_for_tail_systematic;
use super::LinearBlockCode;
use crate::error::{invalid, Error, Result};
use crate::gf2::{BitVector, Gf2Matrix, Gf2Poly};

/// Primitive polynomials of degree 3..=8, as exponent lists.
const PRIMITIVE_POLYS: [&[usize]; 6] = [
    &[3, 1, 0],
    &[4, 1, 0],
    &[5, 2, 0],
    &[6, 1, 0],
    &[7, 3, 0],
    &[8, 4, 3, 2, 0],
];

/// An `(n, k)` cyclic code with generator polynomial `g(X)` of degree `n − k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    generator: Gf2Poly,
}

impl CyclicCode {
    /// Requires `g(X)` to divide `X^n + 1`.
    pub fn new(generator: Gf2Poly, n: usize) -> Result<Self> {
        let degree = generator
            .degree()
            .ok_or_else(|| Error::InvalidGenerator("zero generator polynomial".into()))?;
        if degree == 0 || degree >= n {
            return Err(Error::InvalidGenerator(format!(
                "degree {degree} generator for length {n}"
            )));
        }
        let xn1 = Gf2Poly::from_exponents(&[n, 0]);
        if !xn1.rem(&generator)?.is_zero() {
            return Err(Error::InvalidGenerator(format!(
                "{generator} does not divide X^{n} + 1"
            )));
        }
        Ok(Self { n, generator })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.parity_bits()
    }

    pub fn parity_bits(&self) -> usize {
        self.generator.degree().unwrap_or(0)
    }

    pub fn generator(&self) -> &Gf2Poly {
        &self.generator
    }

    /// Systematic encoding: `v(X) = X^(n−k)·u(X) + (X^(n−k)·u(X) mod g(X))`.
    ///
    /// Bit `i` of the result is the coefficient of `X^i`; the parity bits occupy
    /// positions `0..n−k` and the message positions `n−k..n`.
    pub fn encode(&self, message: &BitVector) -> Result<BitVector> {
        if message.len() != self.k() {
            return Err(invalid(format!(
                "cyclic ({}, {}) message of {} bits",
                self.n,
                self.k(),
                message.len()
            )));
        }
        let shifted = Gf2Poly::from_bitvector(message).shifted(self.parity_bits());
        let remainder = shifted.rem(&self.generator)?;
        Ok((&shifted + &remainder).to_bitvector(self.n))
    }

    /// Equivalent generator-matrix form; row `i` is the encoding of the `i`-th unit message.
    pub fn to_block_code(&self, name: impl Into<String>) -> Result<LinearBlockCode> {
        let k = self.k();
        let rows = (0..k)
            .map(|i| {
                let mut e = BitVector::zeros(k);
                e.set(i, true);
                self.encode(&e)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = Gf2Matrix::from_rows(&rows)?;
        let h = parity_check_for_tail_systematic(&g);
        Ok(LinearBlockCode::new(name, g, Some(h))?
            .with_message_positions((self.parity_bits()..self.n).collect()))
    }
}

/// One-shot systematic cyclic encoding of `u` with generator `g` and length `n`.
pub fn cyclic_encode(u: &BitVector, g: &Gf2Poly, n: usize) -> Result<BitVector> {
    let code = CyclicCode::new(g.clone(), n)?;
    if u.len() >= n || g.degree() != Some(n - u.len()) {
        return Err(invalid(format!(
            "generator degree {:?} inconsistent with n = {n}, k = {}",
            g.degree(),
            u.len()
        )));
    }
    code.encode(u)
}

/// Built-in primitive generator of degree `m` and the matching length `2^m − 1`.
pub fn cyclic_default_generator(m: usize) -> Result<(Gf2Poly, usize)> {
    if !(3..=8).contains(&m) {
        return Err(invalid(format!("cyclic parameter m = {m} outside 3..=8")));
    }
    Ok((Gf2Poly::from_exponents(PRIMITIVE_POLYS[m - 3]), (1 << m) - 1))
}

/// Cyclic Hamming code built from [`cyclic_default_generator`].
pub fn cyclic_code(m: usize) -> Result<CyclicCode> {
    let (g, n) = cyclic_default_generator(m)?;
    CyclicCode::new(g, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_generators_divide_xn_plus_1() {
        for m in 3..=8 {
            let (g, n) = cyclic_default_generator(m).unwrap();
            assert_eq!(g.degree(), Some(m));
            assert_eq!(n, (1 << m) - 1);
            let xn1 = Gf2Poly::from_exponents(&[n, 0]);
            assert!(xn1.rem(&g).unwrap().is_zero());
        }
        assert!(cyclic_default_generator(2).is_err());
        assert!(cyclic_default_generator(9).is_err());
    }

    #[test]
    fn table_rates() {
        let c3 = cyclic_code(3).unwrap();
        assert!((c3.k() as f64 / c3.n() as f64 - 0.5714).abs() < 1e-4);
        let c4 = cyclic_code(4).unwrap();
        assert_eq!((c4.n(), c4.k()), (15, 11));
    }

    #[test]
    fn unit_message_is_divisible() {
        let g = Gf2Poly::from_exponents(&[3, 1, 0]);
        let v = cyclic_encode(&"1000".parse().unwrap(), &g, 7).unwrap();
        assert!(Gf2Poly::from_bitvector(&v).rem(&g).unwrap().is_zero());
        assert_eq!(v.to_string(), "1101000");
    }

    #[test]
    fn zero_message() {
        let g = Gf2Poly::from_exponents(&[3, 1, 0]);
        assert!(cyclic_encode(&BitVector::zeros(4), &g, 7).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_divisor() {
        // X^3 + X^2 + X + 1 = (X+1)^3 does not divide X^7 + 1.
        let g = Gf2Poly::from_exponents(&[3, 2, 1, 0]);
        assert!(matches!(CyclicCode::new(g, 7), Err(Error::InvalidGenerator(_))));
    }

    #[test]
    fn rejects_length_mismatch() {
        let g = Gf2Poly::from_exponents(&[3, 1, 0]);
        assert!(cyclic_encode(&"10".parse().unwrap(), &g, 7).is_err());
    }

    #[test]
    fn matrix_route_matches_polynomial_route() {
        let code = cyclic_code(4).unwrap();
        let block = code.to_block_code("cyclic:m=4").unwrap();
        let u: BitVector = "10011010111".parse().unwrap();
        assert_eq!(block.encode(&u).unwrap(), code.encode(&u).unwrap());
    }

    #[test]
    fn cyclic_shift_stays_in_code() {
        let code = cyclic_code(3).unwrap();
        let g = code.generator().clone();
        let v = code.encode(&"1101".parse().unwrap()).unwrap();
        let mut shifted = BitVector::zeros(7);
        for i in 0..7 {
            shifted.set((i + 1) % 7, v[i]);
        }
        assert!(Gf2Poly::from_bitvector(&shifted).rem(&g).unwrap().is_zero());
    }
}
