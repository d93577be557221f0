//! Bit-level linear algebra over GF(2) and the sign-matrix constructions
//! feeding the Golay code.

mod bitvec;
mod matrix;
mod poly;
mod sign;

pub use bitvec::BitVector;
pub use matrix::{min_distance_exhaustive, weight_distribution, Gf2Matrix, MAX_ENUMERATION_K};
pub use poly::{poly_divmod, Gf2Poly};
pub use sign::{is_odd_prime, jacobsthal_matrix, legendre_symbol, paley_hadamard, SignMatrix};
