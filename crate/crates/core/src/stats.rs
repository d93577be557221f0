//! CCDF estimation and PAPR readout.

use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Spacing of the default threshold grid, in dB.
pub const DEFAULT_GRID_STEP_DB: f64 = 0.05;

/// Per-frame PAPR values in dB.
#[derive(Clone, Debug, PartialEq)]
pub struct PaprSamples {
    values: Vec<f64>,
    sorted: Vec<f64>,
}

impl PaprSamples {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("no PAPR samples"));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(invalid(format!("PAPR sample {v} is not a finite non-negative dB value")));
        }
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        Ok(Self { values, sorted })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted[self.sorted.len() - 1]
    }

    /// Number of samples strictly above `threshold_db`.
    pub fn count_above(&self, threshold_db: f64) -> usize {
        self.sorted.len() - self.sorted.partition_point(|&v| v <= threshold_db)
    }

    /// Every sample shifted by `delta_db`.
    pub fn shifted(&self, delta_db: f64) -> Result<Self> {
        Self::new(self.values.iter().map(|v| v + delta_db).collect())
    }

    /// The exact empirical CCDF evaluated at every distinct sample value.
    pub fn step_curve(&self) -> CcdfCurve {
        let n = self.sorted.len() as f64;
        let mut points: Vec<CcdfPoint> = Vec::new();
        for (i, &v) in self.sorted.iter().enumerate() {
            let is_last_of_run = self.sorted.get(i + 1).is_none_or(|&next| next > v);
            if is_last_of_run {
                points.push(CcdfPoint {
                    threshold_db: v,
                    probability: (self.sorted.len() - i - 1) as f64 / n,
                });
            }
        }
        CcdfCurve { points }
    }

    /// PAPR exceeded with probability `level`, read from [`Self::step_curve`].
    pub fn papr_at_ccdf(&self, level: f64) -> Result<f64> {
        check_level(level)?;
        let recommended = (2.0 / level).ceil() as usize;
        if self.len() < recommended {
            log::warn!(
                "{} PAPR samples for CCDF level {level}; at least {recommended} recommended",
                self.len()
            );
        }
        self.step_curve().papr_at(level)
    }

    /// The 0.05 dB grid covering `[min, max]`.
    pub fn default_grid(&self) -> Vec<f64> {
        let per_db = 1.0 / DEFAULT_GRID_STEP_DB;
        let lo = (self.min() * per_db).floor() as i64;
        let hi = (self.max() * per_db).ceil() as i64;
        (lo..=hi).map(|k| k as f64 / per_db).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CcdfPoint {
    pub threshold_db: f64,
    pub probability: f64,
}

/// Thresholds strictly increasing, probabilities in `[0, 1]` and non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CcdfCurve {
    points: Vec<CcdfPoint>,
}

impl CcdfCurve {
    pub fn new(points: Vec<CcdfPoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(invalid("empty CCDF curve"));
        }
        if points.iter().any(|p| !(0.0..=1.0).contains(&p.probability)) {
            return Err(invalid("CCDF probability outside [0, 1]"));
        }
        for w in points.windows(2) {
            if w[1].threshold_db <= w[0].threshold_db {
                return Err(invalid("CCDF thresholds must be strictly increasing"));
            }
            if w[1].probability > w[0].probability {
                return Err(invalid("CCDF probabilities must be non-increasing"));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[CcdfPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Smallest threshold whose exceedance is at most `level`, refined by linear
    /// interpolation against the preceding point in `(dB, log10 p)` coordinates.
    ///
    /// No interpolation happens when the bracketing point is the first one, hits
    /// `level` exactly, or has probability zero (log undefined).
    pub fn papr_at(&self, level: f64) -> Result<f64> {
        check_level(level)?;
        let idx = self
            .points
            .iter()
            .position(|p| p.probability <= level)
            .ok_or_else(|| {
                Error::InsufficientData(format!(
                    "CCDF never falls to {level}; lowest value is {}",
                    self.points.last().map_or(1.0, |p| p.probability)
                ))
            })?;
        let hit = self.points[idx];
        if idx == 0 || hit.probability == level || hit.probability == 0.0 {
            return Ok(hit.threshold_db);
        }
        let prev = self.points[idx - 1];
        let (l0, l1) = (prev.probability.log10(), hit.probability.log10());
        let frac = (level.log10() - l0) / (l1 - l0);
        Ok(prev.threshold_db + frac * (hit.threshold_db - prev.threshold_db))
    }
}

fn check_level(level: f64) -> Result<()> {
    if level > 0.0 && level < 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("CCDF level {level} outside (0, 1)")))
    }
}

/// `Pr(PAPR > ξ) = 1 − (1 − e^(−ξ))^N` with `ξ` a linear power ratio.
pub fn theoretical_ccdf(subcarriers: usize, xi_linear: f64) -> Result<f64> {
    if subcarriers == 0 {
        return Err(invalid("N must be at least 1"));
    }
    if xi_linear.is_nan() || xi_linear < 0.0 {
        return Err(invalid(format!("threshold {xi_linear} must be non-negative")));
    }
    // −expm1(N·ln(1 − e^(−ξ))) keeps precision in the small-probability tail.
    let log_cdf = subcarriers as f64 * (-(-xi_linear).exp()).ln_1p();
    Ok(-log_cdf.exp_m1())
}

/// Same as [`theoretical_ccdf`] with the threshold given in dB.
pub fn theoretical_ccdf_db(subcarriers: usize, xi_db: f64) -> Result<f64> {
    theoretical_ccdf(subcarriers, 10f64.powf(xi_db / 10.0))
}

/// Closed-form inverse of [`theoretical_ccdf`], in dB.
pub fn theoretical_papr_db(subcarriers: usize, level: f64) -> Result<f64> {
    check_level(level)?;
    if subcarriers == 0 {
        return Err(invalid("N must be at least 1"));
    }
    let per_sample = -((1.0 - level).ln() / subcarriers as f64).exp_m1();
    Ok(10.0 * (-per_sample.ln()).log10())
}

/// Exceedance fraction at each threshold (strict `>`).
pub fn empirical_ccdf(samples: &PaprSamples, thresholds: &[f64]) -> Result<CcdfCurve> {
    let n = samples.len() as f64;
    CcdfCurve::new(
        thresholds
            .iter()
            .map(|&t| CcdfPoint {
                threshold_db: t,
                probability: samples.count_above(t) as f64 / n,
            })
            .collect(),
    )
}

/// One line of a coded-vs-uncoded comparison table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionRow {
    pub label: String,
    pub code_rate: f64,
    pub uncoded_papr_db: f64,
    pub coded_papr_db: f64,
    pub reduction_db: f64,
}

impl ReductionRow {
    pub fn from_readouts(label: impl Into<String>, uncoded_db: f64, coded_db: f64, rate: f64) -> Self {
        Self {
            label: label.into(),
            code_rate: rate,
            uncoded_papr_db: uncoded_db,
            coded_papr_db: coded_db,
            reduction_db: uncoded_db - coded_db,
        }
    }
}

pub fn reduction_row(
    label: impl Into<String>,
    uncoded: &PaprSamples,
    coded: &PaprSamples,
    level: f64,
    rate: f64,
) -> Result<ReductionRow> {
    Ok(ReductionRow::from_readouts(
        label,
        uncoded.papr_at_ccdf(level)?,
        coded.papr_at_ccdf(level)?,
        rate,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn samples(v: &[f64]) -> PaprSamples {
        PaprSamples::new(v.to_vec()).unwrap()
    }

    /// Bisection on the analytic CCDF, independent of the closed-form inverse.
    fn bisect_theory_db(n: usize, level: f64) -> f64 {
        let (mut lo, mut hi) = (0.0f64, 100.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if theoretical_ccdf(n, mid).unwrap() > level {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        10.0 * (0.5 * (lo + hi)).log10()
    }

    #[test]
    fn theory_examples() {
        assert_eq!(theoretical_ccdf(64, 0.0).unwrap(), 1.0);
        assert!(theoretical_ccdf(64, 50.0).unwrap() < 1e-15);
        let direct = 1.0 - (1.0 - (-8f64).exp()).powi(64);
        assert_abs_diff_eq!(theoretical_ccdf(64, 8.0).unwrap(), direct, epsilon = 1e-14);
        assert_abs_diff_eq!(direct, 0.02124, epsilon = 1e-5);
        assert!(theoretical_ccdf(64, -1.0).is_err());
    }

    #[test]
    fn closed_form_inverse_matches_bisection() {
        for n in [4, 16, 64, 256] {
            for level in [0.1, 0.01, 1e-3] {
                assert_abs_diff_eq!(
                    theoretical_papr_db(n, level).unwrap(),
                    bisect_theory_db(n, level),
                    epsilon = 1e-9
                );
            }
        }
        assert_abs_diff_eq!(bisect_theory_db(64, 0.01), 9.42, epsilon = 1e-2);
    }

    #[test]
    fn theory_monotonicity() {
        for w in [0.5, 1.0, 2.0, 4.0, 8.0, 12.0].windows(2) {
            assert!(theoretical_ccdf(64, w[1]).unwrap() < theoretical_ccdf(64, w[0]).unwrap());
        }
        for n in [1, 2, 8, 64] {
            assert!(theoretical_ccdf(2 * n, 3.0).unwrap() > theoretical_ccdf(n, 3.0).unwrap());
        }
    }

    #[test]
    fn empirical_counts() {
        let s = samples(&[9.0, 10.0, 11.0]);
        let curve = empirical_ccdf(&s, &[8.0, 9.5, 10.0, 12.0]).unwrap();
        let p: Vec<f64> = curve.points().iter().map(|p| p.probability).collect();
        assert_eq!(p, [1.0, 2.0 / 3.0, 1.0 / 3.0, 0.0]);
        assert!(empirical_ccdf(&s, &[1.0, 1.0]).is_err());
        assert!(PaprSamples::new(vec![]).is_err());
        assert!(PaprSamples::new(vec![-0.5]).is_err());
    }

    #[test]
    fn log_interpolated_readout() {
        let curve = CcdfCurve::new(vec![
            CcdfPoint { threshold_db: 9.0, probability: 0.02 },
            CcdfPoint { threshold_db: 9.5, probability: 0.005 },
        ])
        .unwrap();
        assert_abs_diff_eq!(curve.papr_at(0.01).unwrap(), 9.25, epsilon = 1e-12);
    }

    #[test]
    fn exact_hit_and_boundaries() {
        let curve = CcdfCurve::new(vec![
            CcdfPoint { threshold_db: 8.0, probability: 0.1 },
            CcdfPoint { threshold_db: 9.0, probability: 0.01 },
            CcdfPoint { threshold_db: 10.0, probability: 0.001 },
        ])
        .unwrap();
        assert_eq!(curve.papr_at(0.01).unwrap(), 9.0);
        assert!(curve.papr_at(1.0).is_err());
        assert!(curve.papr_at(0.0).is_err());
        assert!(matches!(curve.papr_at(1e-4), Err(Error::InsufficientData(_))));
    }

    #[test]
    fn identical_sets_have_zero_reduction() {
        let s = PaprSamples::new((0..500).map(|i| 5.0 + i as f64 * 0.01).collect()).unwrap();
        let row = reduction_row("none", &s, &s, 0.01, 1.0).unwrap();
        assert_eq!(row.reduction_db, 0.0);
    }

    #[test]
    fn reported_rows_subtract() {
        let row = ReductionRow::from_readouts("rm:r=1,m=4", 11.2742, 9.0380, 0.3125);
        assert_abs_diff_eq!(row.reduction_db, 2.2362, epsilon = 1e-9);
        let row = ReductionRow::from_readouts("conv:rate=1/3,K=3", 11.2742, 11.4355, 1.0 / 3.0);
        assert_abs_diff_eq!(row.reduction_db, -0.1613, epsilon = 1e-9);
    }

    #[test]
    fn default_grid_spans_samples() {
        let s = samples(&[9.01, 9.33]);
        let grid = s.default_grid();
        assert_eq!(grid.first().copied(), Some(9.0));
        assert_eq!(grid.last().copied(), Some(9.35));
        assert_eq!(grid.len(), 8);
    }

    proptest! {
        #[test]
        fn empirical_matches_brute_force(
            values in proptest::collection::vec(0.0f64..15.0, 1..60),
            probe in proptest::collection::vec(0.0f64..15.0, 1..20),
        ) {
            let s = PaprSamples::new(values.clone()).unwrap();
            let mut thresholds = probe;
            thresholds.sort_by(f64::total_cmp);
            thresholds.dedup();
            let curve = empirical_ccdf(&s, &thresholds).unwrap();
            for p in curve.points() {
                let brute = values.iter().filter(|&&v| v > p.threshold_db).count() as f64 / values.len() as f64;
                prop_assert_eq!(p.probability, brute);
            }
        }

        #[test]
        fn readout_shifts_with_samples(
            values in proptest::collection::vec(0.0f64..12.0, 200..400),
            delta in 0.0f64..3.0,
        ) {
            let s = PaprSamples::new(values).unwrap();
            let shifted = s.shifted(delta).unwrap();
            let a = s.papr_at_ccdf(0.05).unwrap();
            let b = shifted.papr_at_ccdf(0.05).unwrap();
            prop_assert!((b - a - delta).abs() < 1e-9);
        }
    }
}
