use std::fmt;
use std::ops::{Add, Mul};

use super::BitVector;
use crate::error::{Error, Result};

/// Polynomial over GF(2); `coeffs[i]` is the coefficient of `X^i`.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient list and no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    coeffs: Vec<bool>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![true] }
    }

    /// `X^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![false; n + 1];
        coeffs[n] = true;
        Self { coeffs }
    }

    /// Sum of `X^e` over the given exponents; repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let len = exponents.iter().max().map_or(0, |&m| m + 1);
        let mut coeffs = vec![false; len];
        for &e in exponents {
            coeffs[e] ^= true;
        }
        Self::normalized(coeffs)
    }

    /// Polynomial whose coefficient of `X^i` is `bits[i]`.
    pub fn from_bitvector(bits: &BitVector) -> Self {
        Self::normalized(bits.as_slice().to_vec())
    }

    fn normalized(mut coeffs: Vec<bool>) -> Self {
        while coeffs.last() == Some(&false) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.coeffs.get(i).copied().unwrap_or(false)
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c).count()
    }

    /// Coefficients `X^0..X^(len-1)` as a bit vector; higher terms must be absent.
    pub fn to_bitvector(&self, len: usize) -> BitVector {
        debug_assert!(self.coeffs.len() <= len, "polynomial does not fit in {len} bits");
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// `X^shift · self`.
    pub fn shifted(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![false; shift];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Long division: returns `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![false; top - dd + 1];
        for shift in (0..=top - dd).rev() {
            if rem[shift + dd] {
                quot[shift] = true;
                for (i, &c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] ^= c;
                }
            }
        }
        Ok((Self::normalized(quot), Self::normalized(rem)))
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Result<Gf2Poly> {
        self.divmod(divisor).map(|(_, r)| r)
    }
}

/// Free-function form of [`Gf2Poly::divmod`].
pub fn poly_divmod(dividend: &Gf2Poly, divisor: &Gf2Poly) -> Result<(Gf2Poly, Gf2Poly)> {
    dividend.divmod(divisor)
}

impl Add for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Gf2Poly::normalized((0..len).map(|i| self.coeff(i) ^ rhs.coeff(i)).collect())
    }
}

impl Mul for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || rhs.is_zero() {
            return Gf2Poly::zero();
        }
        let mut coeffs = vec![false; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, _) in self.coeffs.iter().enumerate().filter(|(_, &c)| c) {
            for (j, _) in rhs.coeffs.iter().enumerate().filter(|(_, &c)| c) {
                coeffs[i + j] ^= true;
            }
        }
        Gf2Poly::normalized(coeffs)
    }
}

impl fmt::Display for Gf2Poly {
    /// Highest power first, e.g. `X^3 + X + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = (0..self.coeffs.len())
            .rev()
            .filter(|&i| self.coeffs[i])
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}
