//! Binary Golay codes.
//!
//! The `[24,12,8]` code is built as `G = [I₁₂ | B]` from the order-12 Paley
//! construction (`p = 11`): `B` keeps the all-ones border of `H₁₂` with a zero
//! corner, and its `11×11` interior is `A₁₁ = Q₁₁ − I₁₁` passed through a
//! sign-to-bit map. The map is chosen by an exhaustive minimum-distance check.
//! The `[23,12,7]` code punctures the last coordinate. A second, independent
//! route encodes cyclically with `P₁(X)`.

use super::block::parity_check_for_head_systematic;
use super::{CyclicCode, LinearBlockCode};
use crate::error::{invalid, Error, Result};
use crate::gf2::{jacobsthal_matrix, BitVector, Gf2Matrix, Gf2Poly};

pub const GOLAY_P: u64 = 11;

/// `P₁(X) = X¹¹ + X¹⁰ + X⁶ + X⁵ + X⁴ + X² + 1`.
pub fn golay_p1() -> Gf2Poly {
    Gf2Poly::from_exponents(&[11, 10, 6, 5, 4, 2, 0])
}

/// `P₂(X) = X¹¹ + X⁹ + X⁷ + X⁶ + X⁵ + X + 1`.
pub fn golay_p2() -> Gf2Poly {
    Gf2Poly::from_exponents(&[11, 9, 7, 6, 5, 1, 0])
}

/// How ±1 entries of `A₁₁` become bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignToBit {
    /// `+1 → 1`, `−1 → 0`.
    PositiveIsOne,
    /// `+1 → 0`, `−1 → 1`.
    NegativeIsOne,
}

impl SignToBit {
    pub fn apply(self, sign: i8) -> bool {
        match self {
            Self::PositiveIsOne => sign > 0,
            Self::NegativeIsOne => sign < 0,
        }
    }

    pub fn complement(self) -> Self {
        match self {
            Self::PositiveIsOne => Self::NegativeIsOne,
            Self::NegativeIsOne => Self::PositiveIsOne,
        }
    }
}

/// The order in which sign maps are tried; the first one passing the distance check wins.
pub const SIGN_MAP_PREFERENCE: [SignToBit; 2] = [SignToBit::PositiveIsOne, SignToBit::NegativeIsOne];

/// The `12×12` right-hand block of the extended generator for a given sign map.
pub fn golay_block(map: SignToBit) -> Result<Gf2Matrix> {
    let q = jacobsthal_matrix(GOLAY_P)?;
    let n = q.order() + 1;
    let mut b = Gf2Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let bit = match (r, c) {
                (0, 0) => false,
                (0, _) | (_, 0) => true,
                (r, c) => {
                    let a = q.get(r - 1, c - 1) - i8::from(r == c);
                    map.apply(a)
                }
            };
            b.set(r, c, bit);
        }
    }
    Ok(b)
}

/// `[I₁₂ | B]` for the given sign map, without the distance self-check.
pub fn extended_golay_with(map: SignToBit) -> Result<LinearBlockCode> {
    let b = golay_block(map)?;
    let g = Gf2Matrix::identity(12).hstack(&b)?;
    let h = b.transpose().hstack(&Gf2Matrix::identity(12))?;
    Ok(LinearBlockCode::new("golay:24", g, Some(h))?.with_message_positions((0..12).collect()))
}

/// The sign map that yields minimum distance 8.
pub fn golay_sign_map() -> Result<SignToBit> {
    for map in SIGN_MAP_PREFERENCE {
        if extended_golay_with(map)?.min_distance()? == 8 {
            return Ok(map);
        }
    }
    Err(Error::ConstructionInvariant(
        "no sign-to-bit map gives an extended Golay code with d_min = 8".into(),
    ))
}

/// `[24,12,8]` when `extended`, otherwise the punctured `[23,12,7]` code.
pub fn golay_code(extended: bool) -> Result<LinearBlockCode> {
    let full = extended_golay_with(golay_sign_map()?)?;
    if extended {
        return Ok(full);
    }
    let g = full.generator().delete_column(23)?;
    let h = parity_check_for_head_systematic(&g);
    let punctured = LinearBlockCode::new("golay:23", g, Some(h))?.with_message_positions((0..12).collect());
    let d = punctured.min_distance()?;
    if d != 7 {
        return Err(Error::ConstructionInvariant(format!(
            "punctured Golay code has d_min = {d}"
        )));
    }
    Ok(punctured)
}

/// The `(23, 12)` cyclic Golay code generated by `P₁(X)`.
pub fn golay_cyclic_code() -> Result<CyclicCode> {
    CyclicCode::new(golay_p1(), 23)
}

/// Systematic cyclic encoding of 12 message bits with `P₁(X)`.
pub fn golay_polynomial_encode(u: &BitVector) -> Result<BitVector> {
    if u.len() != 12 {
        return Err(invalid(format!("Golay message of {} bits, expected 12", u.len())));
    }
    golay_cyclic_code()?.encode(u)
}
