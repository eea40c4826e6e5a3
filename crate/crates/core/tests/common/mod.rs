#![allow(dead_code)]

//! Shared fixtures and brute-force oracles. The oracles recompute every
//! quantity from its definition and never call into the crate's numeric
//! code.

use std::collections::BTreeMap;

use category_trees::{CategoryId, DataRow, Dataset, FeatureVector, Forest, TreeNode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EPS: f64 = 1e-9;

pub fn dataset(points: Vec<(String, Vec<f64>)>) -> Dataset {
    let dim = points.first().map_or(0, |p| p.1.len());
    let rows = points
        .into_iter()
        .enumerate()
        .map(|(i, (c, f))| DataRow {
            row_id: i,
            features: FeatureVector::new(f).unwrap(),
            category: CategoryId::new(c),
            output_value: None,
        })
        .collect();
    Dataset::from_rows(rows, (0..dim).map(|i| format!("f{i}")).collect()).unwrap()
}

/// Gaussian-ish blobs (uniform box noise) centred on well separated points
/// inside the unit cube.
pub fn blobs(seed: u64, centres: &[(&str, &[f64])], per_blob: usize, spread: f64) -> Dataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for _ in 0..per_blob {
        for (c, centre) in centres {
            let f = centre
                .iter()
                .map(|&m| m + rng.random_range(-spread..spread))
                .collect();
            points.push((c.to_string(), f));
        }
    }
    dataset(points)
}

pub fn two_blobs(seed: u64, per_blob: usize) -> Dataset {
    blobs(seed, &[("A", &[0.2, 0.25]), ("B", &[0.8, 0.75])], per_blob, 0.05)
}

/// Random labelled rows with features in [0.05, 1].
pub fn arb_points(max_rows: usize, max_cats: usize, max_dim: usize) -> impl Strategy<Value = Vec<(String, Vec<f64>)>> {
    (1..=max_dim, 1..=max_cats).prop_flat_map(move |(dim, cats)| {
        prop::collection::vec(
            (
                (0..cats).prop_map(|c| format!("c{c}")),
                prop::collection::vec(0.05f64..1.0, dim),
            ),
            1..=max_rows,
        )
    })
}

pub fn oracle_mean(rows: &[&[f64]]) -> Vec<f64> {
    let dim = rows[0].len();
    let mut sum = vec![0.0; dim];
    for r in rows {
        for i in 0..dim {
            sum[i] += r[i];
        }
    }
    sum.into_iter().map(|s| s / rows.len() as f64).collect()
}

/// `mean_i |row[i] * target / max(exemplar[i], EPS) - target|`, written out
/// in the weighted form.
pub fn oracle_error(row: &[f64], exemplar: &[f64], target: f64) -> f64 {
    let mut total = 0.0;
    for i in 0..row.len() {
        let w = target / exemplar[i].max(EPS);
        total += (row[i] * w - target).abs();
    }
    total / row.len() as f64
}

/// Index of the smallest error among `(key, exemplar)` pairs; ties go to the
/// smallest key.
pub fn oracle_argmin(row: &[f64], candidates: &[(String, Vec<f64>)], target: f64) -> usize {
    let mut best = 0;
    for i in 1..candidates.len() {
        let ei = oracle_error(row, &candidates[i].1, target);
        let eb = oracle_error(row, &candidates[best].1, target);
        if ei < eb || (ei == eb && candidates[i].0 < candidates[best].0) {
            best = i;
        }
    }
    best
}

pub fn oracle_variance(values: &[f64]) -> f64 {
    // Pairwise form: 1/(2 n^2) * sum_ij (x_i - x_j)^2.
    let n = values.len() as f64;
    let mut s = 0.0;
    for a in values {
        for b in values {
            s += (a - b) * (a - b);
        }
    }
    s / (2.0 * n * n)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// Classifies by walking the forest's stored exemplars with the oracle
/// error.
pub fn oracle_descend(forest: &Forest, row: &[f64]) -> String {
    fn pick<'a>(nodes: &'a [TreeNode], row: &[f64]) -> &'a TreeNode {
        let cands: Vec<(String, Vec<f64>)> = nodes
            .iter()
            .map(|n| {
                (
                    n.classifier.category.to_string(),
                    n.classifier.exemplar.to_vec(),
                )
            })
            .collect();
        &nodes[oracle_argmin(row, &cands, nodes[0].classifier.target)]
    }
    let mut node = pick(&forest.trees, row);
    while !node.children.is_empty() {
        node = pick(&node.children, row);
    }
    node.classifier.category.to_string()
}

/// Lloyd-style loop over labels with the oracle error; returns the label
/// vector after every iteration.
pub fn oracle_recluster(
    points: &[Vec<f64>],
    initial: &[String],
    iters: usize,
    target: f64,
) -> Vec<Vec<String>> {
    let mut labels = initial.to_vec();
    let mut history = Vec::new();
    for _ in 0..iters {
        let mut members: BTreeMap<String, Vec<&[f64]>> = BTreeMap::new();
        for (p, l) in points.iter().zip(&labels) {
            members.entry(l.clone()).or_default().push(p);
        }
        let cands: Vec<(String, Vec<f64>)> = members
            .iter()
            .map(|(k, rows)| (k.clone(), oracle_mean(rows)))
            .collect();
        let next: Vec<String> = points
            .iter()
            .map(|p| cands[oracle_argmin(p, &cands, target)].0.clone())
            .collect();
        let moved = next.iter().zip(&labels).filter(|(a, b)| a != b).count();
        labels = next;
        history.push(labels.clone());
        if moved == 0 {
            break;
        }
    }
    history
}

/// Checks the partition and frequency-count invariants on every node.
pub fn check_tree_invariants(forest: &Forest, n_rows: usize, depth_cap: usize) -> Result<(), String> {
    let mut seen = vec![0usize; n_rows];
    for t in &forest.trees {
        for &id in &t.assigned_rows {
            seen[id] += 1;
        }
    }
    if seen.iter().any(|&c| c != 1) {
        return Err("base layer is not a partition".into());
    }
    for t in &forest.trees {
        for node in t.nodes() {
            if node.depth > depth_cap {
                return Err(format!("depth {} > cap {depth_cap}", node.depth));
            }
            if node.children.is_empty() {
                continue;
            }
            let mut union: Vec<usize> = node
                .children
                .iter()
                .flat_map(|c| c.assigned_rows.iter().copied())
                .collect();
            union.sort_unstable();
            let before = union.len();
            union.dedup();
            if union.len() != before {
                return Err("sibling sets overlap".into());
            }
            let mut parent = node.assigned_rows.clone();
            parent.sort_unstable();
            if union != parent {
                return Err("children do not cover the parent's rows".into());
            }
            for c in &node.children {
                if c.assigned_rows.len() > node.assigned_rows.len()
                    || c.classifier.train_count > node.assigned_rows.len()
                {
                    return Err("child count exceeds parent count".into());
                }
                if c.depth != node.depth + 1 {
                    return Err("child depth is not parent depth + 1".into());
                }
            }
        }
    }
    Ok(())
}
