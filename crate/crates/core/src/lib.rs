//! Coded-OFDM peak-to-average power ratio laboratory.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`]: bit vectors, binary matrices and polynomials, plus the
//!   Legendre/Jacobsthal/Paley machinery used by the Golay construction.
//! * [`codes`]: Hamming, cyclic, convolutional, Golay and Reed-Muller encoders.
//! * [`ofdm`]: BPSK / Gray 16-QAM mapping, oversampled multicarrier synthesis,
//!   PAPR measurement and the aperiodic-autocorrelation view of the BPSK
//!   power envelope.
//! * [`stats`]: empirical and analytic CCDFs and PAPR readout at a CCDF level.
//! * [`harness`]: the seeded Monte-Carlo pipeline and CSV/JSON report writers.

pub mod codes;
pub mod error;
pub mod gf2;
pub mod harness;
pub mod ofdm;
pub mod stats;

pub use error::{Error, Result};
