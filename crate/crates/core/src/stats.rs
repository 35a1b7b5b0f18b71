//! Correlation metrics, the two-sample Kolmogorov-Smirnov test, and the
//! stratified binned cross-validation split.
//!
//! Pearson is the plain product-moment coefficient in a compensated
//! two-pass form. Spearman is Pearson applied to average ranks; on
//! tie-free data it is evaluated through the closed form
//! `1 - 6*sum(d_i^2) / (n*(n^2-1))`, and the two routes agree to within
//! 1e-12 whenever both are defined.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Two aligned real-valued samples, validated once at construction.
#[derive(Debug, Clone)]
pub struct PairedSample {
    x: Vec<f64>,
    y: Vec<f64>,
}

impl PairedSample {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::alignment(format!(
                "paired sample lengths differ: {} vs {}",
                x.len(),
                y.len()
            )));
        }
        if x.len() < 2 {
            return Err(Error::validation("paired sample needs at least 2 points"));
        }
        if !x.iter().chain(y.iter()).all(|v| v.is_finite()) {
            return Err(Error::validation("paired sample contains non-finite values"));
        }
        Ok(PairedSample { x, y })
    }

    pub fn from_slices(x: &[f64], y: &[f64]) -> Result<Self> {
        Self::new(x.to_vec(), y.to_vec())
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }
}

/// Average ranks (1-based) of one sample; ties share their mean rank.
#[derive(Debug, Clone)]
pub struct RankVector {
    ranks: Vec<f64>,
}

impl RankVector {
    pub fn of(values: &[f64]) -> Self {
        RankVector {
            ranks: average_ranks(values),
        }
    }

    pub fn ranks(&self) -> &[f64] {
        &self.ranks
    }

    /// Rank differences against another rank vector of equal length.
    pub fn differences(&self, other: &RankVector) -> Vec<f64> {
        self.ranks
            .iter()
            .zip(&other.ranks)
            .map(|(a, b)| a - b)
            .collect()
    }
}

/// Result of the two-sample Kolmogorov-Smirnov test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    /// Supremum gap between the two empirical CDFs, in [0, 1].
    pub statistic: f64,
    /// Asymptotic two-sided p-value, clamped into (0, 1].
    pub p_value: f64,
}

/// Fold assignment produced by [`stratified_folds`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StratifiedSplit {
    pub n_bins: usize,
    pub n_folds: usize,
    pub seed: u64,
    /// Fold index per example, parallel to the input labels.
    pub assignment: Vec<usize>,
}

impl StratifiedSplit {
    /// Example indices assigned to `fold`, in input order.
    pub fn fold_indices(&self, fold: usize) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, &f)| f == fold)
            .map(|(i, _)| i)
            .collect()
    }
}

fn kahan_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut c = 0.0;
    for v in values {
        let y = v - c;
        let t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    sum
}

/// Pearson product-moment correlation of a paired sample.
///
/// Errors with [`Error::UndefinedCorrelation`] when either variable has
/// zero variance.
pub fn pearson(sample: &PairedSample) -> Result<f64> {
    let n = sample.len() as f64;
    let mean_x = kahan_sum(sample.x.iter().copied()) / n;
    let mean_y = kahan_sum(sample.y.iter().copied()) / n;
    let sxy = kahan_sum(
        sample
            .x
            .iter()
            .zip(&sample.y)
            .map(|(x, y)| (x - mean_x) * (y - mean_y)),
    );
    let sxx = kahan_sum(sample.x.iter().map(|x| (x - mean_x) * (x - mean_x)));
    let syy = kahan_sum(sample.y.iter().map(|y| (y - mean_y) * (y - mean_y)));
    if sxx <= 0.0 || syy <= 0.0 {
        return Err(Error::UndefinedCorrelation(
            "a variable has zero variance".into(),
        ));
    }
    Ok(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Spearman rank correlation of a paired sample.
///
/// Tie-free samples go through the closed form on integer ranks; samples
/// with ties fall back to Pearson over average ranks.
pub fn spearman(sample: &PairedSample) -> Result<f64> {
    let rx = RankVector::of(&sample.x);
    let ry = RankVector::of(&sample.y);
    if has_ties(&sample.x) || has_ties(&sample.y) {
        let ranked = PairedSample::new(rx.ranks.clone(), ry.ranks.clone())?;
        return pearson(&ranked);
    }
    let n = sample.len() as f64;
    let d2 = kahan_sum(rx.differences(&ry).into_iter().map(|d| d * d));
    Ok(1.0 - 6.0 * d2 / (n * (n * n - 1.0)))
}

fn has_ties(values: &[f64]) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Average ranks (1-based); tied values receive the mean of the ranks
/// they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // ranks i+1 ..= j+1 share their average
        let avg = (i + 1 + j + 1) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Two-sample Kolmogorov-Smirnov test.
///
/// The statistic is the exact supremum gap between the empirical CDFs,
/// evaluated over all pooled sample points. The p-value is the asymptotic
/// Kolmogorov series `2 * sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2)`
/// with `lambda = D * sqrt(m*n/(m+n))`, truncated once terms drop below
/// 1e-18.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<KsResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::validation("KS test requires non-empty samples"));
    }
    if !x.iter().chain(y.iter()).all(|v| v.is_finite()) {
        return Err(Error::validation("KS test samples must be finite"));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(f64::total_cmp);
    ys.sort_by(f64::total_cmp);

    let m = xs.len();
    let n = ys.len();
    let mut i = 0;
    let mut j = 0;
    let mut d: f64 = 0.0;
    while i < m || j < n {
        // next distinct pooled value
        let v = match (xs.get(i), ys.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => break,
        };
        while i < m && xs[i] == v {
            i += 1;
        }
        while j < n && ys[j] == v {
            j += 1;
        }
        let gap = (i as f64 / m as f64 - j as f64 / n as f64).abs();
        if gap > d {
            d = gap;
        }
    }

    let en = (m as f64 * n as f64) / (m + n) as f64;
    let lambda = d * en.sqrt();
    Ok(KsResult {
        statistic: d,
        p_value: kolmogorov_survival(lambda),
    })
}

/// Asymptotic survival function of the Kolmogorov distribution.
fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100_000u64 {
        let term = (-2.0 * (k * k) as f64 * lambda * lambda).exp();
        sum += sign * term;
        sign = -sign;
        if term < 1e-18 {
            break;
        }
    }
    (2.0 * sum).clamp(1e-300, 1.0)
}

/// Stratified K-fold assignment by equal-width label bins over [0, 5].
///
/// Within each bin the examples are shuffled by `seed` and dealt
/// round-robin onto the folds; the dealing pointer carries across bins so
/// overall fold sizes also stay within one of each other.
pub fn stratified_folds(
    labels: &[f64],
    n_bins: usize,
    n_folds: usize,
    seed: u64,
) -> Result<StratifiedSplit> {
    if n_bins < 1 {
        return Err(Error::validation("n_bins must be at least 1"));
    }
    if n_folds < 2 {
        return Err(Error::validation("n_folds must be at least 2"));
    }
    if labels.len() < n_folds {
        return Err(Error::validation(format!(
            "cannot deal {} examples onto {} folds",
            labels.len(),
            n_folds
        )));
    }
    for &l in labels {
        if !l.is_finite() || !(0.0..=5.0).contains(&l) {
            return Err(Error::validation(format!(
                "label {l} outside [0, 5] cannot be binned"
            )));
        }
    }

    let mut bins: Vec<Vec<usize>> = vec![Vec::new(); n_bins];
    for (idx, &l) in labels.iter().enumerate() {
        let b = ((l / 5.0 * n_bins as f64).floor() as usize).min(n_bins - 1);
        bins[b].push(idx);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![0usize; labels.len()];
    let mut next_fold = 0usize;
    for bin in &mut bins {
        bin.shuffle(&mut rng);
        for &idx in bin.iter() {
            assignment[idx] = next_fold;
            next_fold = (next_fold + 1) % n_folds;
        }
    }

    Ok(StratifiedSplit {
        n_bins,
        n_folds,
        seed,
        assignment,
    })
}
