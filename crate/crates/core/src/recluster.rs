//! Secondary clustering and the recursive reclustering loop.
//!
//! The secondary clusters are the row populations of each base tree, keyed
//! by the tree's category. Reclustering then treats every cluster as a new
//! batch: fresh exemplar, fresh weights, and every row re-assigned to the
//! best fit. Keys stay attached to their originating category even when the
//! members no longer belong to it.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::Dataset;
use crate::model::{CategoryClassifier, CategoryId, DataRow, DEFAULT_TARGET};
use crate::tree::{assign_rows, Forest};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterSet {
    pub clusters: BTreeMap<CategoryId, Vec<usize>>,
    pub generation: usize,
    pub changes_from_previous: usize,
    /// Keys removed because their cluster was empty at the start of an
    /// iteration.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped_keys: Vec<CategoryId>,
}

impl ClusterSet {
    /// Rows grouped by their labelled category.
    pub fn from_categories(dataset: &Dataset) -> Self {
        ClusterSet {
            clusters: dataset.category_groups(),
            generation: 0,
            changes_from_previous: 0,
            dropped_keys: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn row_count(&self) -> usize {
        self.clusters.values().map(Vec::len).sum()
    }

    /// Cluster key of every row id.
    pub fn membership(&self) -> BTreeMap<usize, &CategoryId> {
        self.clusters
            .iter()
            .flat_map(|(k, ids)| ids.iter().map(move |&id| (id, k)))
            .collect()
    }

    /// Member rows that carry the cluster's own category label, per key.
    pub fn own_row_counts(&self, dataset: &Dataset) -> BTreeMap<CategoryId, usize> {
        self.clusters
            .iter()
            .map(|(k, ids)| {
                let own = ids.iter().filter(|&&id| dataset.rows[id].category == *k).count();
                (k.clone(), own)
            })
            .collect()
    }

    /// Non-empty clusters that hold none of their originating category's rows.
    pub fn clusters_without_own_rows(&self, dataset: &Dataset) -> Vec<CategoryId> {
        self.own_row_counts(dataset)
            .into_iter()
            .filter(|(k, own)| *own == 0 && !self.clusters[k].is_empty())
            .map(|(k, _)| k)
            .collect()
    }

    /// Whether the clusters partition `0..n`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for &id in self.clusters.values().flatten() {
            if id >= n || seen[id] {
                return false;
            }
            seen[id] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// Member row values for a dataset column, one list per non-empty cluster.
    pub fn column_groups(&self, dataset: &Dataset, column: &str) -> Result<Vec<Vec<f64>>> {
        let values = dataset
            .column(column)
            .ok_or_else(|| Error::Schema(format!("unknown column {column:?}")))?;
        Ok(self
            .clusters
            .values()
            .filter(|ids| !ids.is_empty())
            .map(|ids| ids.iter().map(|&id| values[id]).collect())
            .collect())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Plain-text listing: a header per cluster followed by its member rows
    /// as they appeared in the input file.
    pub fn listing(&self, dataset: &Dataset, noun: &str) -> String {
        let mut out = String::new();
        for (key, ids) in &self.clusters {
            let _ = writeln!(out, "Rows clustered for {noun} {}", key_label(key));
            out.push('\n');
            let _ = writeln!(out, "{}", dataset.header().join(", "));
            out.push('\n');
            for &id in ids {
                let _ = writeln!(out, "{}", dataset.record(id).join(","));
            }
            out.push('\n');
        }
        out
    }
}

fn key_label(key: &CategoryId) -> String {
    let parts: Vec<&str> = key.as_str().split(',').collect();
    if parts.len() > 1 {
        format!("({})", parts.join(", "))
    } else {
        key.to_string()
    }
}

/// Clusters formed by the base-layer population of every tree.
pub fn secondary_clusters(forest: &Forest, dataset: &Dataset) -> ClusterSet {
    let clusters: BTreeMap<CategoryId, Vec<usize>> = forest
        .trees
        .iter()
        .map(|t| (t.category().clone(), t.assigned_rows.clone()))
        .collect();
    let moved = clusters
        .iter()
        .map(|(k, ids)| ids.iter().filter(|&&id| dataset.rows[id].category != *k).count())
        .sum();
    ClusterSet {
        clusters,
        generation: 0,
        changes_from_previous: moved,
        dropped_keys: Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReclusterConfig {
    pub max_iters: usize,
    pub min_changes: usize,
    pub target: f64,
}

impl Default for ReclusterConfig {
    fn default() -> Self {
        ReclusterConfig {
            max_iters: 1,
            min_changes: 1,
            target: DEFAULT_TARGET,
        }
    }
}

/// Rebuilds exemplars from the current clusters and re-assigns every row,
/// until fewer than `min_changes` rows move or `max_iters` passes have run.
pub fn recursive_recluster(
    clusters: &ClusterSet,
    dataset: &Dataset,
    config: &ReclusterConfig,
) -> Result<ClusterSet> {
    if !clusters.is_partition_of(dataset.len()) {
        return Err(Error::Schema("clusters do not partition the dataset rows".into()));
    }
    let rows: Vec<&DataRow> = dataset.rows.iter().collect();
    let mut current = clusters.clone();

    for _ in 0..config.max_iters {
        let mut dropped = current.dropped_keys.clone();
        let mut layer = Vec::new();
        for (key, ids) in &current.clusters {
            if ids.is_empty() {
                dropped.push(key.clone());
                continue;
            }
            layer.push(CategoryClassifier::train(
                key.clone(),
                ids.iter().map(|&id| &dataset.rows[id].features),
                config.target,
            )?);
        }
        if layer.is_empty() {
            return Err(Error::DegenerateClustering);
        }

        let assignment = assign_rows(&layer, &rows)?;
        let previous = current.membership();
        let next: BTreeMap<CategoryId, Vec<usize>> = layer
            .into_iter()
            .map(|c| c.category)
            .zip(assignment)
            .collect();
        let changes = next
            .iter()
            .map(|(k, ids)| ids.iter().filter(|id| previous.get(id) != Some(&k)).count())
            .sum();

        current = ClusterSet {
            clusters: next,
            generation: current.generation + 1,
            changes_from_previous: changes,
            dropped_keys: dropped,
        };
        if changes < config.min_changes {
            break;
        }
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::FeatureVector;
    use crate::tree::BuildConfig;

    fn dataset(points: &[(&str, f64, f64)]) -> Dataset {
        let rows = points
            .iter()
            .enumerate()
            .map(|(i, &(c, x, y))| DataRow {
                row_id: i,
                features: FeatureVector::new(vec![x, y]).unwrap(),
                category: c.into(),
                output_value: Some(i as f64),
            })
            .collect();
        Dataset::from_rows(rows, vec!["x".into(), "y".into()]).unwrap()
    }

    fn blobs() -> Dataset {
        dataset(&[
            ("A", 0.10, 0.12),
            ("A", 0.12, 0.10),
            ("A", 0.11, 0.11),
            ("B", 0.90, 0.88),
            ("B", 0.88, 0.90),
            ("B", 0.89, 0.91),
        ])
    }

    #[test]
    fn no_movement_reproduces_the_labels() {
        let ds = blobs();
        let forest = Forest::train(&ds, &BuildConfig::default()).unwrap();
        let sc = secondary_clusters(&forest, &ds);
        assert_eq!(sc.clusters, ClusterSet::from_categories(&ds).clusters);
        assert_eq!(sc.changes_from_previous, 0);
        assert_eq!(sc.row_count(), ds.len());
    }

    #[test]
    fn zero_iterations_is_identity() {
        let ds = blobs();
        let cs = ClusterSet::from_categories(&ds);
        let cfg = ReclusterConfig {
            max_iters: 0,
            ..ReclusterConfig::default()
        };
        assert_eq!(recursive_recluster(&cs, &ds, &cfg).unwrap(), cs);
    }

    #[test]
    fn fixed_point_takes_one_pass() {
        let ds = blobs();
        let cs = ClusterSet::from_categories(&ds);
        let cfg = ReclusterConfig {
            max_iters: 5,
            ..ReclusterConfig::default()
        };
        let out = recursive_recluster(&cs, &ds, &cfg).unwrap();
        assert_eq!(out.clusters, cs.clusters);
        assert_eq!(out.generation, 1);
        assert_eq!(out.changes_from_previous, 0);
    }

    #[test]
    fn empty_clusters_are_dropped_and_recorded() {
        let ds = blobs();
        let mut cs = ClusterSet::from_categories(&ds);
        cs.clusters.insert("Z".into(), vec![]);
        let out = recursive_recluster(&cs, &ds, &ReclusterConfig::default()).unwrap();
        assert!(!out.clusters.contains_key(&CategoryId::from("Z")));
        assert_eq!(out.dropped_keys, vec![CategoryId::from("Z")]);
    }

    #[test]
    fn all_empty_is_degenerate() {
        let ds = dataset(&[]);
        let mut cs = ClusterSet::from_categories(&ds);
        cs.clusters.insert("A".into(), vec![]);
        assert!(matches!(
            recursive_recluster(&cs, &ds, &ReclusterConfig::default()),
            Err(Error::DegenerateClustering)
        ));
    }

    #[test]
    fn rejects_non_partition() {
        let ds = blobs();
        let mut cs = ClusterSet::from_categories(&ds);
        cs.clusters.get_mut(&CategoryId::from("A")).unwrap().push(3);
        assert!(recursive_recluster(&cs, &ds, &ReclusterConfig::default()).is_err());
    }

    #[test]
    fn listing_layout() {
        let ds = blobs();
        let cs = ClusterSet::from_categories(&ds);
        let text = cs.listing(&ds, "Sector");
        assert!(text.starts_with("Rows clustered for Sector A\n\nx, y, category\n\n0.1,0.12,A\n"));
        assert_eq!(key_label(&"1,2".into()), "(1, 2)");
    }

    #[test]
    fn own_row_diagnostic() {
        let ds = blobs();
        let mut cs = ClusterSet::from_categories(&ds);
        cs.clusters.insert("A".into(), vec![3, 4, 5]);
        cs.clusters.insert("B".into(), vec![0, 1, 2]);
        assert_eq!(cs.clusters_without_own_rows(&ds).len(), 2);
    }
}
