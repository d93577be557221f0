//! Seeded Monte-Carlo pipeline: source bits → encoder → constellation mapper →
//! oversampled synthesis → per-frame PAPR → CCDF readout, plus report writers.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{CodeSpec, Encoder};
use crate::error::{invalid, Error, Result};
use crate::gf2::BitVector;
use crate::ofdm::{papr_db, Modulation, OfdmConfig, Synthesizer};
use crate::stats::{
    empirical_ccdf, theoretical_ccdf_db, CcdfCurve, PaprSamples, ReductionRow,
};

/// Name of the generator behind `input = random`, echoed into every report.
pub const PRNG_ALGORITHM: &str = "ChaCha12 (rand_chacha 0.9, seed_from_u64, little-endian u64 words, LSB first)";

pub const CCDF_CSV_HEADER: &str = "threshold_db,ccdf_empirical,ccdf_theoretical";

/// Path of the public-domain text shipped with the crate.
pub fn bundled_text_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/public_domain.txt")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "path")]
pub enum InputSource {
    Random,
    File(PathBuf),
}

impl FromStr for InputSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "" => Err(invalid("empty input source")),
            "random" => Ok(Self::Random),
            path => Ok(Self::File(PathBuf::from(path))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(invalid(format!("unknown report format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub subcarriers: usize,
    pub modulation: Modulation,
    pub oversample: usize,
    pub frames: usize,
    pub seed: u64,
    pub input: InputSource,
    #[serde(serialize_with = "serialize_specs")]
    pub codes: Vec<CodeSpec>,
    pub ccdf_level: f64,
}

fn serialize_specs<S: serde::Serializer>(specs: &[CodeSpec], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(specs.iter().map(ToString::to_string))
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            subcarriers: 64,
            modulation: Modulation::Qam16,
            oversample: 4,
            frames: 20_000,
            seed: 1,
            input: InputSource::Random,
            codes: vec![CodeSpec::None],
            ccdf_level: 0.01,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<OfdmConfig> {
        if self.frames == 0 {
            return Err(invalid("frame count must be at least 1"));
        }
        if !(self.ccdf_level > 0.0 && self.ccdf_level < 1.0) {
            return Err(invalid(format!("CCDF level {} outside (0, 1)", self.ccdf_level)));
        }
        if self.codes.is_empty() {
            return Err(invalid("at least one code spec is required"));
        }
        OfdmConfig::new(self.subcarriers, self.oversample, self.modulation)
    }

    /// The six comparison configurations, one per code family.
    pub fn comparison_specs() -> Vec<CodeSpec> {
        ["hamming:m=6", "cyclic:m=4", "conv:rate=1/2,K=6", "conv:rate=1/3,K=9", "golay:23", "rm:r=1,m=4"]
            .iter()
            .map(|s| s.parse().expect("built-in spec"))
            .collect()
    }
}

/// Exactly `needed` bits from `source`.
///
/// Files are expanded most-significant bit first and cycled from the start when
/// short. The random source draws `u64` words from [`PRNG_ALGORITHM`] seeded
/// with `seed` and emits each word least-significant bit first.
pub fn ingest_bits(source: &InputSource, needed: usize, seed: u64) -> Result<BitVector> {
    match source {
        InputSource::Random => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut out = BitVector::new();
            while out.len() < needed {
                let word = rng.next_u64();
                let take = (needed - out.len()).min(64);
                out.extend_from(&BitVector::from_u64_lsb(word, take));
            }
            Ok(out)
        }
        InputSource::File(path) => {
            let bytes = fs::read(path)?;
            if bytes.is_empty() && needed > 0 {
                return Err(invalid(format!("input file {} is empty", path.display())));
            }
            let file_bits = BitVector::from_bytes_msb(&bytes);
            Ok((0..needed).map(|i| file_bits[i % file_bits.len()]).collect())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMetadata {
    pub label: String,
    pub code_rate: f64,
    pub source_bits: usize,
    pub coded_bits: usize,
    pub frames: usize,
}

/// PAPR of `config.frames` consecutive frames cut from one encoded stream.
///
/// Frames are processed in parallel; the output order is the frame order, so the
/// result does not depend on the thread count.
pub fn run_pipeline(config: &ExperimentConfig, spec: &CodeSpec) -> Result<(PaprSamples, RunMetadata)> {
    let ofdm = config.validate()?;
    let encoder = spec.build()?;
    let frame_bits = ofdm.bits_per_frame();
    let needed = config.frames * frame_bits;
    let source_bits = encoder.source_bits_for(needed);

    let source = ingest_bits(&config.input, source_bits, config.seed)?;
    let mut coded = encoder.encode_stream(&source)?;
    let coded_bits = coded.len();
    coded.pad_to(needed);
    coded.truncate(needed);

    let synth = Synthesizer::new(ofdm.subcarriers, ofdm.oversample)?;
    let values = (0..config.frames)
        .into_par_iter()
        .map(|f| {
            let bits = coded.slice(f * frame_bits, (f + 1) * frame_bits);
            papr_db(&synth.synthesize(&ofdm.map(&bits)?)?)
        })
        .collect::<Result<Vec<f64>>>()?;

    let meta = RunMetadata {
        label: spec.to_string(),
        code_rate: encoder.rate(),
        source_bits,
        coded_bits,
        frames: config.frames,
    };
    Ok((PaprSamples::new(values)?, meta))
}

#[derive(Clone, Debug)]
pub struct SpecResult {
    pub spec: CodeSpec,
    pub meta: RunMetadata,
    pub samples: PaprSamples,
    pub curve: CcdfCurve,
    pub row: ReductionRow,
    pub seconds: f64,
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    /// Uncoded baseline first, then every other requested spec in request order.
    pub results: Vec<SpecResult>,
    pub theoretical: CcdfCurve,
    pub wall_time_s: f64,
}

impl ExperimentReport {
    pub fn baseline(&self) -> &SpecResult {
        &self.results[0]
    }

    pub fn rows(&self) -> impl Iterator<Item = &ReductionRow> {
        self.results.iter().map(|r| &r.row)
    }
}

/// Runs the baseline and every requested spec.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let ofdm = config.validate()?;
    let started = Instant::now();

    let mut specs = vec![CodeSpec::None];
    for spec in &config.codes {
        if !specs.contains(spec) {
            specs.push(*spec);
        }
    }

    let mut runs = Vec::with_capacity(specs.len());
    for spec in specs {
        let t0 = Instant::now();
        let (samples, meta) = run_pipeline(config, &spec)?;
        log::info!("{spec}: {} frames in {:.2?}", meta.frames, t0.elapsed());
        runs.push((spec, samples, meta, t0.elapsed().as_secs_f64()));
    }

    let uncoded_db = runs[0].1.papr_at_ccdf(config.ccdf_level)?;
    let results = runs
        .into_iter()
        .map(|(spec, samples, meta, seconds)| {
            let coded_db = if spec.is_uncoded() {
                uncoded_db
            } else {
                samples.papr_at_ccdf(config.ccdf_level)?
            };
            let row = ReductionRow::from_readouts(spec.to_string(), uncoded_db, coded_db, meta.code_rate);
            let curve = empirical_ccdf(&samples, &samples.default_grid())?;
            Ok(SpecResult {
                spec,
                meta,
                samples,
                curve,
                row,
                seconds,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let theoretical = theoretical_curve(ofdm.subcarriers, results[0].curve.points().iter().map(|p| p.threshold_db))?;
    Ok(ExperimentReport {
        config: config.clone(),
        results,
        theoretical,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

fn theoretical_curve(subcarriers: usize, thresholds: impl Iterator<Item = f64>) -> Result<CcdfCurve> {
    CcdfCurve::new(
        thresholds
            .map(|t| {
                Ok(crate::stats::CcdfPoint {
                    threshold_db: t,
                    probability: theoretical_ccdf_db(subcarriers, t)?,
                })
            })
            .collect::<Result<Vec<_>>>()?,
    )
}

/// File-name stem for a spec label: non-alphanumerics become `_`.
pub fn label_slug(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// CCDF table for one result; the theoretical column is filled only for the baseline.
pub fn ccdf_csv(result: &SpecResult, theoretical: Option<&CcdfCurve>) -> String {
    let mut out = String::new();
    writeln!(out, "{CCDF_CSV_HEADER}").unwrap();
    for (i, p) in result.curve.points().iter().enumerate() {
        let theory = theoretical
            .and_then(|t| t.points().get(i))
            .map(|tp| tp.probability.to_string())
            .unwrap_or_default();
        writeln!(out, "{},{},{}", p.threshold_db, p.probability, theory).unwrap();
    }
    out
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    label: &'a str,
    code_rate: f64,
    uncoded_papr_db: f64,
    coded_papr_db: f64,
    reduction_db: f64,
    frames: usize,
    seed: u64,
}

#[derive(Serialize)]
struct Summary<'a> {
    prng: &'static str,
    config: &'a ExperimentConfig,
    theoretical_papr_db: f64,
    rows: Vec<SummaryRow<'a>>,
}

/// Deterministic summary: identical for identical configs.
pub fn summary_json(report: &ExperimentReport) -> Result<String> {
    let summary = Summary {
        prng: PRNG_ALGORITHM,
        config: &report.config,
        theoretical_papr_db: crate::stats::theoretical_papr_db(
            report.config.subcarriers,
            report.config.ccdf_level,
        )?,
        rows: report
            .results
            .iter()
            .map(|r| SummaryRow {
                label: &r.row.label,
                code_rate: r.row.code_rate,
                uncoded_papr_db: r.row.uncoded_papr_db,
                coded_papr_db: r.row.coded_papr_db,
                reduction_db: r.row.reduction_db,
                frames: r.meta.frames,
                seed: report.config.seed,
            })
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&summary)? + "\n")
}

/// Wall-clock timings, kept apart from the deterministic outputs.
pub fn timing_json(report: &ExperimentReport) -> Result<String> {
    let per_spec: Vec<_> = report
        .results
        .iter()
        .map(|r| serde_json::json!({ "label": r.row.label, "seconds": r.seconds }))
        .collect();
    let value = serde_json::json!({ "wall_time_s": report.wall_time_s, "per_spec": per_spec });
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

/// Writes `ccdf_<label>.csv` per result and `summary.json` + `timing.json` into `out_dir`.
pub fn emit_report(report: &ExperimentReport, formats: &[ReportFormat], out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    let mut write = |name: String, body: String| -> Result<()> {
        let path = out_dir.join(name);
        fs::File::create(&path)?.write_all(body.as_bytes())?;
        written.push(path);
        Ok(())
    };
    if formats.contains(&ReportFormat::Csv) {
        for (i, r) in report.results.iter().enumerate() {
            let theory = (i == 0).then_some(&report.theoretical);
            write(format!("ccdf_{}.csv", label_slug(&r.row.label)), ccdf_csv(r, theory))?;
        }
    }
    if formats.contains(&ReportFormat::Json) {
        write("summary.json".into(), summary_json(report)?)?;
        write("timing.json".into(), timing_json(report)?)?;
    }
    Ok(written)
}

/// Human-readable description of a code: parameters, distance when enumerable, generator.
pub fn describe_code(spec: &CodeSpec) -> Result<String> {
    let mut out = String::new();
    match spec.build()? {
        Encoder::Identity => {
            writeln!(out, "{spec}: uncoded (identity), rate 1").unwrap();
        }
        Encoder::Block(code) => {
            writeln!(out, "code: {}", code.name()).unwrap();
            writeln!(out, "n: {}", code.n()).unwrap();
            writeln!(out, "k: {}", code.k()).unwrap();
            writeln!(out, "rate: {:.6}", code.rate()).unwrap();
            match code.min_distance() {
                Ok(d) => writeln!(out, "d_min: {d}").unwrap(),
                Err(Error::Capacity { .. }) => writeln!(out, "d_min: not enumerated (k > 20)").unwrap(),
                Err(e) => return Err(e),
            }
            writeln!(out, "generator:").unwrap();
            write!(out, "{}", code.generator()).unwrap();
        }
        Encoder::Convolutional(code) => {
            writeln!(out, "code: {}", code.name()).unwrap();
            writeln!(out, "K: {}", code.constraint_length()).unwrap();
            writeln!(out, "rate: 1/{}", code.n_out()).unwrap();
            let taps: Vec<String> = code.taps().iter().map(|t| format!("{t:o}")).collect();
            writeln!(out, "generators (octal): [{}]", taps.join(" ")).unwrap();
            writeln!(out, "d_free: {}", code.free_distance()).unwrap();
        }
    }
    Ok(out)
}
