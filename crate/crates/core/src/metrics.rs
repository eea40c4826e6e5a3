//! Variance as the cohesion measure: plain and grouped variance, the
//! variance-drop information gain, and before/after clustering reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::Dataset;
use crate::recluster::ClusterSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceKind {
    /// Divide by N.
    #[default]
    Population,
    /// Divide by N - 1; a single value has variance 0.
    Sample,
}

/// How per-group variances are averaged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupWeighting {
    #[default]
    Unweighted,
    RowCount,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarianceOptions {
    #[serde(default)]
    pub kind: VarianceKind,
    #[serde(default)]
    pub weighting: GroupWeighting,
}

/// Population variance (mean squared deviation from the mean).
pub fn variance(values: &[f64]) -> Result<f64> {
    variance_of(values, VarianceKind::Population)
}

pub fn variance_of(values: &[f64], kind: VarianceKind) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyGroup);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|x| (x - mean) * (x - mean)).sum();
    Ok(match kind {
        VarianceKind::Population => ss / n,
        VarianceKind::Sample if values.len() > 1 => ss / (n - 1.0),
        VarianceKind::Sample => 0.0,
    })
}

/// Average of the per-group variances over the non-empty groups.
pub fn grouped_variance(groups: &[Vec<f64>], opts: &VarianceOptions) -> Result<f64> {
    let mut total = 0.0;
    let mut weight = 0.0;
    for g in groups.iter().filter(|g| !g.is_empty()) {
        let w = match opts.weighting {
            GroupWeighting::Unweighted => 1.0,
            GroupWeighting::RowCount => g.len() as f64,
        };
        total += w * variance_of(g, opts.kind)?;
        weight += w;
    }
    if weight == 0.0 {
        return Err(Error::DegenerateClustering);
    }
    Ok(total / weight)
}

/// Drop in variance from splitting `parent` into `subsets`:
/// `variance(parent) - sum(variance(subset))`. With `weighted`, each subset
/// variance is scaled by its share of the rows, which gives the classical
/// within-group reduction. Empty subsets are ignored. May be negative.
pub fn information_gain(parent: &[f64], subsets: &[Vec<f64>], weighted: bool) -> Result<f64> {
    let whole = variance(parent)?;
    let n = parent.len() as f64;
    let mut parts = 0.0;
    for s in subsets.iter().filter(|s| !s.is_empty()) {
        let v = variance(s)?;
        parts += if weighted { v * s.len() as f64 / n } else { v };
    }
    Ok(whole - parts)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VarianceReport {
    pub column_name: String,
    pub variance_before: f64,
    pub variance_after: f64,
    pub groups_before: usize,
    pub groups_after: usize,
    /// `variance_after / variance_before`, when the latter is positive.
    pub reduction_ratio: Option<f64>,
}

/// One report per column, comparing grouped variance under `before` and
/// `after`.
pub fn build_variance_report(
    dataset: &Dataset,
    before: &ClusterSet,
    after: &ClusterSet,
    columns: &[String],
    opts: &VarianceOptions,
) -> Result<Vec<VarianceReport>> {
    columns
        .iter()
        .map(|col| {
            let gb = before.column_groups(dataset, col)?;
            let ga = after.column_groups(dataset, col)?;
            let vb = grouped_variance(&gb, opts)?;
            let va = grouped_variance(&ga, opts)?;
            Ok(VarianceReport {
                column_name: col.clone(),
                variance_before: vb,
                variance_after: va,
                groups_before: gb.len(),
                groups_after: ga.len(),
                reduction_ratio: (vb > 0.0).then(|| va / vb),
            })
        })
        .collect()
}

/// Aligned plain-text table: one column per report, rows for the before and
/// after variance and their ratio.
pub fn render_table(reports: &[VarianceReport]) -> String {
    let labels = ["", "Variance Before", "Variance After", "After/Before"];
    let mut cells: Vec<[String; 4]> = Vec::new();
    for r in reports {
        cells.push([
            r.column_name.clone(),
            format!("{:.4}", r.variance_before),
            format!("{:.4}", r.variance_after),
            r.reduction_ratio.map_or("-".to_string(), |x| format!("{x:.3}")),
        ]);
    }
    let lw = labels.iter().map(|l| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = cells
        .iter()
        .map(|c| c.iter().map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, label) in labels.iter().enumerate() {
        let _ = write!(out, "{label:<lw$}");
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(out, "  {:>w$}", c[i], w = *w);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variance_examples() {
        assert_eq!(variance(&[5.0, 5.0, 5.0]).unwrap(), 0.0);
        assert!((variance(&[1.0, 2.0, 3.0]).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!(matches!(variance(&[]), Err(Error::EmptyGroup)));
        assert_eq!(variance_of(&[1.0, 2.0, 3.0], VarianceKind::Sample).unwrap(), 1.0);
        assert_eq!(variance_of(&[4.0], VarianceKind::Sample).unwrap(), 0.0);
    }

    #[test]
    fn grouped_examples() {
        let col = vec![1.0, 4.0, 2.0, 8.0];
        let opts = VarianceOptions::default();
        assert_eq!(grouped_variance(std::slice::from_ref(&col), &opts).unwrap(), variance(&col).unwrap());
        let singles: Vec<Vec<f64>> = col.iter().map(|&x| vec![x]).collect();
        assert_eq!(grouped_variance(&singles, &opts).unwrap(), 0.0);
        assert!(matches!(
            grouped_variance(&[vec![], vec![]], &opts),
            Err(Error::DegenerateClustering)
        ));
    }

    #[test]
    fn grouped_weighting() {
        let groups = vec![vec![0.0, 2.0], vec![5.0, 5.0, 5.0, 5.0]];
        let unweighted = grouped_variance(&groups, &VarianceOptions::default()).unwrap();
        assert_eq!(unweighted, 0.5);
        let weighted = grouped_variance(
            &groups,
            &VarianceOptions {
                weighting: GroupWeighting::RowCount,
                ..Default::default()
            },
        )
        .unwrap();
        assert!((weighted - 2.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn information_gain_examples() {
        let g = information_gain(&[1.0, 2.0, 3.0, 4.0], &[vec![1.0, 2.0], vec![3.0, 4.0]], false).unwrap();
        assert!((g - 0.75).abs() < 1e-15);
        let p = [1.0, 5.0, 2.0];
        assert_eq!(information_gain(&p, &[p.to_vec()], false).unwrap(), 0.0);
        let g = information_gain(&[1.0, 2.0, 3.0], &[vec![1.0], vec![2.0], vec![3.0]], false).unwrap();
        assert!((g - 2.0 / 3.0).abs() < 1e-15);
        let g = information_gain(&[1.0, 2.0, 3.0, 4.0], &[vec![1.0, 2.0], vec![], vec![3.0, 4.0]], true).unwrap();
        assert!((g - 1.0).abs() < 1e-15);
    }

    #[test]
    fn table_layout() {
        let t = render_table(&[VarianceReport {
            column_name: "month".into(),
            variance_before: 1.32,
            variance_after: 0.35,
            groups_before: 36,
            groups_after: 20,
            reduction_ratio: Some(0.35 / 1.32),
        }]);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("Variance Before") && lines[1].ends_with("1.3200"));
        assert!(lines[3].ends_with("0.265"));
    }
}
