//! Encoders for the five code families and stream-level segmentation.

mod block;
mod convolutional;
mod cyclic;
mod golay;
mod hamming;
mod reed_muller;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use block::LinearBlockCode;
pub use convolutional::{
    parse_octal, ConvolutionalCode, MAX_CONSTRAINT_LENGTH, MIN_CONSTRAINT_LENGTH,
    RATE_HALF_GENERATORS, RATE_THIRD_GENERATORS,
};
pub use cyclic::{cyclic_code, cyclic_default_generator, cyclic_encode, CyclicCode};
pub use golay::{
    extended_golay_with, golay_block, golay_code, golay_cyclic_code, golay_p1, golay_p2,
    golay_polynomial_encode, golay_sign_map, SignToBit, SIGN_MAP_PREFERENCE,
};
pub use hamming::hamming_code;
pub use reed_muller::{binomial, monomials, psi, reed_muller_code, MAX_RM_VARIABLES};

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Which encoder to apply, as written on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeSpec {
    None,
    Hamming { m: usize },
    Cyclic { m: usize },
    Convolutional { n_out: usize, constraint_length: usize },
    Golay { n: usize },
    ReedMuller { r: usize, m: usize },
}

impl CodeSpec {
    pub fn is_uncoded(&self) -> bool {
        matches!(self, Self::None)
    }

    pub fn build(&self) -> Result<Encoder> {
        Ok(match *self {
            Self::None => Encoder::Identity,
            Self::Hamming { m } => Encoder::Block(hamming_code(m)?),
            Self::Cyclic { m } => Encoder::Block(cyclic_code(m)?.to_block_code(self.to_string())?),
            Self::Convolutional {
                n_out,
                constraint_length,
            } => Encoder::Convolutional(ConvolutionalCode::best_known(n_out, constraint_length)?),
            Self::Golay { n } => Encoder::Block(golay_code(n == 24)?),
            Self::ReedMuller { r, m } => Encoder::Block(reed_muller_code(r, m)?),
        })
    }

    fn validate(self, text: &str) -> Result<Self> {
        let fail = |reason: String| Error::Parse {
            spec: text.to_string(),
            reason,
        };
        match self {
            Self::Hamming { m } | Self::Cyclic { m } if !(3..=8).contains(&m) => {
                Err(fail(format!("m = {m} outside 3..=8")))
            }
            Self::Convolutional {
                n_out,
                constraint_length,
            } => {
                if !(2..=3).contains(&n_out) {
                    Err(fail(format!("rate 1/{n_out} not supported")))
                } else if !(MIN_CONSTRAINT_LENGTH..=MAX_CONSTRAINT_LENGTH).contains(&constraint_length) {
                    Err(fail(format!("K = {constraint_length} outside 3..=14")))
                } else {
                    Ok(self)
                }
            }
            Self::Golay { n } if n != 23 && n != 24 => Err(fail(format!("length {n} is not 23 or 24"))),
            Self::ReedMuller { r, m } if !(r > 0 && r < m && m <= MAX_RM_VARIABLES) => {
                Err(fail(format!("need 0 < r < m <= 5, got r = {r}, m = {m}")))
            }
            _ => Ok(self),
        }
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::None => f.write_str("none"),
            Self::Hamming { m } => write!(f, "hamming:m={m}"),
            Self::Cyclic { m } => write!(f, "cyclic:m={m}"),
            Self::Convolutional {
                n_out,
                constraint_length,
            } => write!(f, "conv:rate=1/{n_out},K={constraint_length}"),
            Self::Golay { n } => write!(f, "golay:{n}"),
            Self::ReedMuller { r, m } => write!(f, "rm:r={r},m={m}"),
        }
    }
}

impl FromStr for CodeSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            spec: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        let (family, params) = trimmed.split_once(':').unwrap_or((trimmed, ""));
        let family = family.to_ascii_lowercase();

        let pairs: HashMap<&str, &str> = params
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .filter_map(|p| p.split_once('='))
            .map(|(k, v)| (k.trim(), v.trim()))
            .collect();
        let num = |key: &str| -> Result<usize> {
            pairs
                .get(key)
                .ok_or_else(|| fail(&format!("missing `{key}`")))?
                .parse()
                .map_err(|_| fail(&format!("`{key}` is not an integer")))
        };

        let spec = match family.as_str() {
            "none" | "uncoded" if params.is_empty() => Self::None,
            "hamming" => Self::Hamming { m: num("m")? },
            "cyclic" => Self::Cyclic { m: num("m")? },
            "conv" => {
                let rate = pairs.get("rate").ok_or_else(|| fail("missing `rate`"))?;
                let n_out = rate
                    .strip_prefix("1/")
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| fail("rate must be 1/2 or 1/3"))?;
                Self::Convolutional {
                    n_out,
                    constraint_length: num("K")?,
                }
            }
            "golay" => Self::Golay {
                n: params.trim().parse().map_err(|_| fail("expected golay:23 or golay:24"))?,
            },
            "rm" => Self::ReedMuller {
                r: num("r")?,
                m: num("m")?,
            },
            _ => return Err(fail("unknown code family")),
        };
        spec.validate(text)
    }
}

/// A constructed encoder ready to process bit streams.
#[derive(Clone, Debug)]
pub enum Encoder {
    Identity,
    Block(LinearBlockCode),
    Convolutional(ConvolutionalCode),
}

impl Encoder {
    /// `k/n` for block codes, `1/n_out` for convolutional codes, 1 for the identity.
    pub fn rate(&self) -> f64 {
        match self {
            Self::Identity => 1.0,
            Self::Block(code) => code.rate(),
            Self::Convolutional(code) => code.rate(),
        }
    }

    /// Source bits needed so that the encoded stream holds at least `coded` bits.
    ///
    /// Block codes round up to whole messages; convolutional codes ignore the
    /// flush tail.
    pub fn source_bits_for(&self, coded: usize) -> usize {
        match self {
            Self::Identity => coded,
            Self::Block(code) => coded.div_ceil(code.n()) * code.k(),
            Self::Convolutional(code) => coded.div_ceil(code.n_out()).max(1),
        }
    }

    /// Identity passes bits through; block codes split into `k`-bit messages
    /// (zero-padding the last) and concatenate codewords; convolutional codes
    /// encode the whole stream with a single termination.
    pub fn encode_stream(&self, bits: &BitVector) -> Result<BitVector> {
        match self {
            Self::Identity => Ok(bits.clone()),
            Self::Block(code) => {
                let mut out = BitVector::new();
                for mut chunk in bits.chunks(code.k()) {
                    chunk.pad_to(code.k());
                    out.extend_from(&code.encode(&chunk)?);
                }
                Ok(out)
            }
            Self::Convolutional(_) if bits.is_empty() => Ok(BitVector::new()),
            Self::Convolutional(code) => code.encode(bits),
        }
    }
}

/// Builds the encoder for `spec` and applies it to `bits`.
pub fn encode_stream(spec: &CodeSpec, bits: &BitVector) -> Result<BitVector> {
    spec.build()?.encode_stream(bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_all_forms() {
        let cases = [
            ("none", CodeSpec::None),
            ("hamming:m=6", CodeSpec::Hamming { m: 6 }),
            ("cyclic:m=4", CodeSpec::Cyclic { m: 4 }),
            (
                "conv:rate=1/2,K=6",
                CodeSpec::Convolutional {
                    n_out: 2,
                    constraint_length: 6,
                },
            ),
            ("golay:23", CodeSpec::Golay { n: 23 }),
            ("golay:24", CodeSpec::Golay { n: 24 }),
            ("rm:r=1,m=4", CodeSpec::ReedMuller { r: 1, m: 4 }),
        ];
        for (text, expected) in cases {
            let parsed: CodeSpec = text.parse().unwrap();
            assert_eq!(parsed, expected);
            assert_eq!(parsed.to_string(), text);
        }
        assert_eq!(
            "conv:K=9,rate=1/3".parse::<CodeSpec>().unwrap().to_string(),
            "conv:rate=1/3,K=9"
        );
    }

    #[test]
    fn parse_rejects_bad_specs() {
        for bad in [
            "turbo", "hamming", "hamming:m=2", "cyclic:m=9", "conv:rate=2/3,K=5",
            "conv:rate=1/2,K=15", "golay:22", "rm:r=0,m=3", "rm:r=1,m=6", "hamming:m=x",
            "none:1",
        ] {
            assert!(bad.parse::<CodeSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn identity_stream() {
        let bits: BitVector = "1011001".parse().unwrap();
        assert_eq!(encode_stream(&CodeSpec::None, &bits).unwrap(), bits);
    }

    #[test]
    fn hamming_stream_lengths() {
        let spec = CodeSpec::Hamming { m: 3 };
        let eight: BitVector = "10110110".parse().unwrap();
        assert_eq!(encode_stream(&spec, &eight).unwrap().len(), 14);

        let six: BitVector = "101101".parse().unwrap();
        let out = encode_stream(&spec, &six).unwrap();
        assert_eq!(out.len(), 14);
        let code = hamming_code(3).unwrap();
        let second = code.encode(&"0100".parse().unwrap()).unwrap();
        assert_eq!(out.slice(7, 14), second);
    }

    #[test]
    fn convolutional_stream_is_terminated_once() {
        let spec = CodeSpec::Convolutional {
            n_out: 2,
            constraint_length: 3,
        };
        let out = encode_stream(&spec, &BitVector::zeros(10)).unwrap();
        assert_eq!(out.len(), (10 + 2) * 2);
    }

    #[test]
    fn rates_and_source_sizing() {
        let ham = CodeSpec::Hamming { m: 3 }.build().unwrap();
        assert!((ham.rate() - 4.0 / 7.0).abs() < 1e-12);
        assert_eq!(ham.source_bits_for(256), 37 * 4);
        let conv = CodeSpec::Convolutional {
            n_out: 3,
            constraint_length: 9,
        }
        .build()
        .unwrap();
        assert!((conv.rate() - 1.0 / 3.0).abs() < 1e-12);
        assert_eq!(conv.source_bits_for(256), 86);
        assert_eq!(Encoder::Identity.source_bits_for(256), 256);
    }
}
