//! Numeric primitives shared by every layer: feature vectors, exemplars,
//! single-step weight adjustment and the row-vs-classifier error.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Divisor floor for exemplar components close to zero.
pub const EPS: f64 = 1e-9;

/// Value every classifier's weighted exemplar is adjusted to.
pub const DEFAULT_TARGET: f64 = 1.0;

/// Opaque category token. Ordering is lexicographic on the token and is
/// used to break ties between equally good classifiers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CategoryId(String);

impl CategoryId {
    pub fn new(token: impl Into<String>) -> Self {
        CategoryId(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.0)
    }
}

impl From<&str> for CategoryId {
    fn from(s: &str) -> Self {
        CategoryId(s.to_owned())
    }
}

impl From<String> for CategoryId {
    fn from(s: String) -> Self {
        CategoryId(s)
    }
}

/// Ordered list of finite reals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct FeatureVector(Vec<f64>);

impl FeatureVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(FeatureVector(values))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for FeatureVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for FeatureVector {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        FeatureVector::new(values)
    }
}

impl From<FeatureVector> for Vec<f64> {
    fn from(v: FeatureVector) -> Self {
        v.0
    }
}

/// One observation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DataRow {
    pub row_id: usize,
    pub features: FeatureVector,
    pub category: CategoryId,
    pub output_value: Option<f64>,
}

/// A per-category classifier: the exemplar of its training batch plus the
/// weights that map that exemplar onto `target`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CategoryClassifier {
    pub category: CategoryId,
    pub exemplar: FeatureVector,
    pub weights: FeatureVector,
    pub target: f64,
    pub train_count: usize,
}

impl CategoryClassifier {
    /// Builds a classifier from a non-empty training batch.
    pub fn train<'a, I>(category: CategoryId, rows: I, target: f64) -> Result<Self>
    where
        I: IntoIterator<Item = &'a FeatureVector>,
    {
        let mut count = 0;
        let exemplar = compute_exemplar(rows.into_iter().inspect(|_| count += 1))?;
        let weights = compute_weights(&exemplar, target)?;
        Ok(CategoryClassifier {
            category,
            exemplar,
            weights,
            target,
            train_count: count,
        })
    }

    pub fn dim(&self) -> usize {
        self.exemplar.len()
    }

    pub fn error(&self, row: &[f64]) -> Result<f64> {
        row_error(row, self)
    }
}

/// Per-component arithmetic mean of a batch of feature vectors.
///
/// Uses a running mean so that a batch of identical rows reproduces the row
/// bit for bit.
pub fn compute_exemplar<'a, I>(rows: I) -> Result<FeatureVector>
where
    I: IntoIterator<Item = &'a FeatureVector>,
{
    let mut iter = rows.into_iter();
    let first = iter.next().ok_or(Error::EmptyBatch)?;
    let mut mean = first.as_slice().to_vec();
    let mut n = 1usize;
    for row in iter {
        if row.len() != mean.len() {
            return Err(Error::RaggedRows {
                expected: mean.len(),
                got: row.len(),
            });
        }
        n += 1;
        let k = n as f64;
        for (m, &x) in mean.iter_mut().zip(row.iter()) {
            *m += (x - *m) / k;
        }
    }
    FeatureVector::new(mean)
}

/// Single-step adjustment: `weights[i] = target / max(exemplar[i], EPS)`.
pub fn compute_weights(exemplar: &[f64], target: f64) -> Result<FeatureVector> {
    if !target.is_finite() || target <= 0.0 {
        return Err(Error::InvalidTarget(target));
    }
    FeatureVector::new(exemplar.iter().map(|&e| target / e.max(EPS)).collect())
}

/// Mean absolute deviation of the weighted row from the classifier's target:
/// `mean_i |row[i] * weights[i] - target|`.
///
/// Evaluated as `target * mean_i |row[i] / max(exemplar[i], EPS) - 1|`, which
/// is the same quantity but is exactly zero on the exemplar itself and scales
/// monotonically with the target.
pub fn row_error(row: &[f64], classifier: &CategoryClassifier) -> Result<f64> {
    let exemplar = classifier.exemplar.as_slice();
    if row.len() != exemplar.len() {
        return Err(Error::DimensionMismatch {
            expected: exemplar.len(),
            got: row.len(),
        });
    }
    if row.is_empty() {
        return Ok(0.0);
    }
    let sum: f64 = row
        .iter()
        .zip(exemplar)
        .map(|(&x, &e)| (x / e.max(EPS) - 1.0).abs())
        .sum();
    Ok(classifier.target * (sum / row.len() as f64))
}

/// Index of the classifier with the smallest error for `row`. Equal errors
/// go to the lowest category identifier.
pub fn best_match<C>(classifiers: &[C], row: &[f64]) -> Result<usize>
where
    C: AsRef<CategoryClassifier>,
{
    let mut best: Option<(usize, f64)> = None;
    for (i, c) in classifiers.iter().enumerate() {
        let err = c.as_ref().error(row)?;
        best = match best {
            None => Some((i, err)),
            Some((j, e)) => {
                let cj = &classifiers[j].as_ref().category;
                if err < e || (err == e && c.as_ref().category < *cj) {
                    Some((i, err))
                } else {
                    Some((j, e))
                }
            }
        };
    }
    best.map(|(i, _)| i).ok_or(Error::UntrainedModel)
}

impl AsRef<CategoryClassifier> for CategoryClassifier {
    fn as_ref(&self) -> &CategoryClassifier {
        self
    }
}
