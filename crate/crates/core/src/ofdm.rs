//! Constellation mapping, multicarrier synthesis and PAPR measurement.
//!
//! A frame of `N` subcarrier symbols `c_k` becomes the baseband waveform
//! `s(t) = N^(-1/2) Σ c_k exp(i2πkt)`, sampled at `t_j = j/(N·L)` for
//! `j = 0..N·L`. For real (BPSK) frames the instantaneous power obeys
//! `N·|s(t)|² = N + 2·Σ_{k≥1} C_k cos(2πkt)`, with `C_k` the aperiodic
//! autocorrelation, which gives a second route to the PAPR.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::gf2::BitVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Modulation {
    Bpsk,
    Qam16,
}

impl Modulation {
    pub fn bits_per_symbol(self) -> usize {
        match self {
            Self::Bpsk => 1,
            Self::Qam16 => 4,
        }
    }
}

impl fmt::Display for Modulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Bpsk => "bpsk",
            Self::Qam16 => "qam16",
        })
    }
}

impl FromStr for Modulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bpsk" => Ok(Self::Bpsk),
            "qam16" | "16qam" | "16-qam" => Ok(Self::Qam16),
            other => Err(invalid(format!("unknown modulation `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OfdmConfig {
    pub subcarriers: usize,
    pub oversample: usize,
    pub modulation: Modulation,
}

impl OfdmConfig {
    pub fn new(subcarriers: usize, oversample: usize, modulation: Modulation) -> Result<Self> {
        if subcarriers < 2 {
            return Err(invalid(format!("{subcarriers} subcarriers, need at least 2")));
        }
        if oversample < 1 {
            return Err(invalid("oversampling factor must be at least 1"));
        }
        Ok(Self {
            subcarriers,
            oversample,
            modulation,
        })
    }

    pub fn bits_per_frame(&self) -> usize {
        self.subcarriers * self.modulation.bits_per_symbol()
    }

    pub fn samples_per_frame(&self) -> usize {
        self.subcarriers * self.oversample
    }

    pub fn map(&self, bits: &BitVector) -> Result<SymbolFrame> {
        match self.modulation {
            Modulation::Bpsk => map_bpsk(bits, self.subcarriers),
            Modulation::Qam16 => map_qam16(bits, self.subcarriers),
        }
    }
}

impl Default for OfdmConfig {
    fn default() -> Self {
        Self {
            subcarriers: 64,
            oversample: 4,
            modulation: Modulation::Qam16,
        }
    }
}

/// Frequency-domain symbols, one per subcarrier.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolFrame {
    symbols: Vec<Complex64>,
}

impl SymbolFrame {
    pub fn new(symbols: Vec<Complex64>) -> Self {
        Self { symbols }
    }

    /// Real-valued frame, e.g. BPSK `±1` symbols.
    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Complex64] {
        &self.symbols
    }

    /// Real parts, if every symbol is real.
    fn real_parts(&self) -> Result<Vec<f64>> {
        if self.symbols.iter().any(|c| c.im != 0.0) {
            return Err(invalid("autocorrelation analysis needs a real-valued frame"));
        }
        Ok(self.symbols.iter().map(|c| c.re).collect())
    }

    fn bpsk_values(&self) -> Result<Vec<f64>> {
        let values = self.real_parts()?;
        if values.iter().any(|&v| v != 1.0 && v != -1.0) {
            return Err(invalid("frame symbols are not all ±1"));
        }
        Ok(values)
    }

    pub fn negated(&self) -> Self {
        Self::new(self.symbols.iter().map(|c| -c).collect())
    }
}

/// Bit 0 → +1, bit 1 → −1.
pub fn map_bpsk(bits: &BitVector, subcarriers: usize) -> Result<SymbolFrame> {
    if bits.len() != subcarriers {
        return Err(invalid(format!(
            "BPSK frame needs {subcarriers} bits, got {}",
            bits.len()
        )));
    }
    Ok(SymbolFrame::from_real(
        &bits.iter().map(|b| if b { -1.0 } else { 1.0 }).collect::<Vec<_>>(),
    ))
}

/// Gray-coded amplitude for a bit pair: 00 → −3, 01 → −1, 11 → +1, 10 → +3.
fn gray_level(hi: bool, lo: bool) -> f64 {
    match (hi, lo) {
        (false, false) => -3.0,
        (false, true) => -1.0,
        (true, true) => 1.0,
        (true, false) => 3.0,
    }
}

/// Groups of four bits `b3 b2 b1 b0` (stream order): `b3 b2` select I, `b1 b0` select Q,
/// each Gray coded onto `{−3, −1, +1, +3}/√10`.
pub fn map_qam16(bits: &BitVector, subcarriers: usize) -> Result<SymbolFrame> {
    if bits.len() != 4 * subcarriers {
        return Err(invalid(format!(
            "16-QAM frame needs {} bits, got {}",
            4 * subcarriers,
            bits.len()
        )));
    }
    let scale = 1.0 / 10f64.sqrt();
    let symbols = bits
        .as_slice()
        .chunks_exact(4)
        .map(|g| Complex64::new(gray_level(g[0], g[1]), gray_level(g[2], g[3])) * scale)
        .collect();
    Ok(SymbolFrame::new(symbols))
}

/// Time-domain samples of one frame on the grid `t_j = j/(N·L)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TimeSignal {
    samples: Vec<Complex64>,
    subcarriers: usize,
    oversample: usize,
}

impl TimeSignal {
    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn subcarriers(&self) -> usize {
        self.subcarriers
    }

    pub fn oversample(&self) -> usize {
        self.oversample
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sample time of index `j`, in symbol periods.
    pub fn time(&self, j: usize) -> f64 {
        j as f64 / self.samples.len() as f64
    }

    pub fn powers(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.norm_sqr())
    }

    pub fn mean_power(&self) -> f64 {
        self.powers().sum::<f64>() / self.samples.len() as f64
    }
}

/// Reusable synthesizer holding an inverse-FFT plan of length `N·L`.
#[derive(Clone)]
pub struct Synthesizer {
    subcarriers: usize,
    oversample: usize,
    fft: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for Synthesizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Synthesizer")
            .field("subcarriers", &self.subcarriers)
            .field("oversample", &self.oversample)
            .finish()
    }
}

impl Synthesizer {
    pub fn new(subcarriers: usize, oversample: usize) -> Result<Self> {
        if subcarriers == 0 || oversample == 0 {
            return Err(invalid("synthesizer needs N >= 1 and L >= 1"));
        }
        let fft = FftPlanner::new().plan_fft_inverse(subcarriers * oversample);
        Ok(Self {
            subcarriers,
            oversample,
            fft,
        })
    }

    /// Zero-padded inverse DFT scaled by `1/√N`.
    pub fn synthesize(&self, frame: &SymbolFrame) -> Result<TimeSignal> {
        if frame.len() != self.subcarriers {
            return Err(invalid(format!(
                "frame of {} symbols for a {}-subcarrier synthesizer",
                frame.len(),
                self.subcarriers
            )));
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); self.subcarriers * self.oversample];
        buf[..self.subcarriers].copy_from_slice(frame.symbols());
        self.fft.process(&mut buf);
        let scale = 1.0 / (self.subcarriers as f64).sqrt();
        buf.iter_mut().for_each(|s| *s *= scale);
        Ok(TimeSignal {
            samples: buf,
            subcarriers: self.subcarriers,
            oversample: self.oversample,
        })
    }
}

/// One-shot synthesis; prefer [`Synthesizer`] when processing many frames.
pub fn synthesize(frame: &SymbolFrame, oversample: usize) -> Result<TimeSignal> {
    Synthesizer::new(frame.len(), oversample)?.synthesize(frame)
}

fn ratio_db(peak: f64, mean: f64) -> f64 {
    // max ≥ mean holds exactly; rounding in the mean can put it an ulp above the peak.
    10.0 * (peak / mean).max(1.0).log10()
}

/// `10·log10(max |s_j|² / mean |s_j|²)`, mean taken over this frame's samples.
pub fn papr_db(signal: &TimeSignal) -> Result<f64> {
    if signal.is_empty() {
        return Err(Error::UndefinedPapr);
    }
    let mean = signal.mean_power();
    if mean <= 0.0 || !mean.is_finite() {
        return Err(Error::UndefinedPapr);
    }
    let peak = signal.powers().fold(0.0, f64::max);
    Ok(ratio_db(peak, mean))
}

/// Aperiodic autocorrelation lags `C_1..C_{N−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AutocorrelationVector {
    lags: Vec<f64>,
}

impl AutocorrelationVector {
    /// `C_k` for `1 ≤ k ≤ N − 1`.
    pub fn lag(&self, k: usize) -> f64 {
        assert!(k >= 1 && k <= self.lags.len(), "lag {k} out of range");
        self.lags[k - 1]
    }

    pub fn lags(&self) -> &[f64] {
        &self.lags
    }

    /// Frame length `N`.
    pub fn frame_len(&self) -> usize {
        self.lags.len() + 1
    }

    /// `P₀(t) = Σ_k C_k cos(2πkt)`.
    pub fn power_envelope_ac(&self, t: f64) -> f64 {
        self.lags
            .iter()
            .enumerate()
            .map(|(i, c)| c * (2.0 * PI * (i + 1) as f64 * t).cos())
            .sum()
    }
}

/// `C_k = Σ_{i=0}^{N−k−1} c_i c_{i+k}`; the frame must be real.
pub fn aperiodic_autocorrelation(frame: &SymbolFrame) -> Result<AutocorrelationVector> {
    let c = frame.real_parts()?;
    let n = c.len();
    let lags = (1..n)
        .map(|k| (0..n - k).map(|i| c[i] * c[i + k]).sum())
        .collect();
    Ok(AutocorrelationVector { lags })
}

/// AC component of the BPSK power envelope at time `t ∈ [0, 1]`.
pub fn power_envelope_ac(frame: &SymbolFrame, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(invalid(format!("t = {t} outside [0, 1]")));
    }
    Ok(aperiodic_autocorrelation(frame)?.power_envelope_ac(t))
}

/// PAPR of a BPSK frame from its autocorrelation:
/// `max over t ∈ [0, 1/2] of 1 + (2/N)·P₀(t)` on `grid_points` uniform points, in dB.
///
/// The time-average power of a `±1` frame is exactly one, so no normalisation is needed.
pub fn papr_via_autocorrelation(frame: &SymbolFrame, grid_points: usize) -> Result<f64> {
    if grid_points < 2 {
        return Err(invalid("need at least two grid points"));
    }
    frame.bpsk_values()?;
    let ac = aperiodic_autocorrelation(frame)?;
    let n = frame.len() as f64;
    let peak = (0..grid_points)
        .map(|i| 0.5 * i as f64 / (grid_points - 1) as f64)
        .map(|t| 1.0 + 2.0 / n * ac.power_envelope_ac(t))
        .fold(f64::MIN, f64::max);
    Ok(ratio_db(peak, 1.0))
}

/// Mean energy of the 16-QAM alphabet, computed over all 16 labels.
pub fn qam16_alphabet_energy() -> f64 {
    (0u64..16)
        .map(|v| {
            let bits: BitVector = (0..4).rev().map(|i| (v >> i) & 1 == 1).collect();
            map_qam16(&bits, 1).expect("four bits").symbols()[0].norm_sqr()
        })
        .sum::<f64>()
        / 16.0
}
