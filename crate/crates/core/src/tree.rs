//! Category Trees.
//!
//! Every labelled category gets a base classifier trained on the mean of its
//! rows. Each row is then handed to whichever base classifier fits it best.
//! A base node whose rows span several categories grows a child layer with
//! one classifier per category present, trained only on that node's rows,
//! and the rows are re-assigned among the children. This repeats until a
//! node is pure, too small, or at the depth cap.
//!
//! Classification descends the same way: best base classifier, then best
//! child, until a leaf, whose category is the answer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{apply_normalization, ColumnRange, Dataset};
use crate::model::{best_match, CategoryClassifier, CategoryId, DataRow, DEFAULT_TARGET};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BuildConfig {
    pub target: f64,
    pub depth_cap: usize,
    pub min_branch_size: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            target: DEFAULT_TARGET,
            depth_cap: 10,
            min_branch_size: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeNode {
    pub classifier: CategoryClassifier,
    pub assigned_rows: Vec<usize>,
    pub depth: usize,
    pub children: Vec<TreeNode>,
}

impl AsRef<CategoryClassifier> for TreeNode {
    fn as_ref(&self) -> &CategoryClassifier {
        &self.classifier
    }
}

impl TreeNode {
    pub fn category(&self) -> &CategoryId {
        &self.classifier.category
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// All nodes of this subtree in pre-order.
    pub fn nodes(&self) -> Vec<&TreeNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            out.push(n);
            stack.extend(n.children.iter().rev());
        }
        out
    }

    pub fn max_depth(&self) -> usize {
        self.nodes().iter().map(|n| n.depth).max().unwrap_or(0)
    }
}

/// One base tree per labelled category.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Forest {
    pub config: BuildConfig,
    pub feature_names: Vec<String>,
    /// Training normalisation, applied to unseen rows before classification.
    pub normalization: Option<Vec<ColumnRange>>,
    pub trees: Vec<TreeNode>,
}

/// Trains one classifier per category from that category's rows.
pub fn train_base_layer(dataset: &Dataset, config: &BuildConfig) -> Result<Vec<CategoryClassifier>> {
    if dataset.is_empty() {
        return Err(Error::EmptyBatch);
    }
    let mut batches: BTreeMap<&CategoryId, Vec<&DataRow>> =
        dataset.categories.iter().map(|c| (c, Vec::new())).collect();
    for row in &dataset.rows {
        batches.entry(&row.category).or_default().push(row);
    }
    batches
        .into_iter()
        .map(|(cat, rows)| {
            CategoryClassifier::train(cat.clone(), rows.iter().map(|r| &r.features), config.target)
        })
        .collect()
}

/// Hands every row to the classifier with the smallest error. The result is
/// aligned with `classifiers` and holds row ids in input order.
pub fn assign_rows<C>(classifiers: &[C], rows: &[&DataRow]) -> Result<Vec<Vec<usize>>>
where
    C: AsRef<CategoryClassifier>,
{
    if classifiers.is_empty() {
        return Err(Error::UntrainedModel);
    }
    let mut out = vec![Vec::new(); classifiers.len()];
    for row in rows {
        let i = best_match(classifiers, &row.features)?;
        out[i].push(row.row_id);
    }
    Ok(out)
}

/// Grows the tree under `base` from the rows it won at the parent layer.
pub fn build_tree(base: CategoryClassifier, assigned: &[&DataRow], config: &BuildConfig) -> Result<TreeNode> {
    build_node(base, assigned, 0, config)
}

fn build_node(
    classifier: CategoryClassifier,
    assigned: &[&DataRow],
    depth: usize,
    config: &BuildConfig,
) -> Result<TreeNode> {
    let mut node = TreeNode {
        classifier,
        assigned_rows: assigned.iter().map(|r| r.row_id).collect(),
        depth,
        children: Vec::new(),
    };

    let mut by_category: BTreeMap<&CategoryId, Vec<&DataRow>> = BTreeMap::new();
    for row in assigned {
        by_category.entry(&row.category).or_default().push(*row);
    }
    if by_category.len() < 2 || depth >= config.depth_cap || assigned.len() < config.min_branch_size {
        return Ok(node);
    }

    let layer = by_category
        .iter()
        .map(|(cat, rows)| {
            CategoryClassifier::train((*cat).clone(), rows.iter().map(|r| &r.features), config.target)
        })
        .collect::<Result<Vec<_>>>()?;
    let assignment = assign_rows(&layer, assigned)?;

    let lookup: BTreeMap<usize, &DataRow> = assigned.iter().map(|r| (r.row_id, *r)).collect();
    let occupied: Vec<(CategoryClassifier, Vec<&DataRow>)> = layer
        .into_iter()
        .zip(assignment)
        .filter(|(_, ids)| !ids.is_empty())
        .map(|(c, ids)| (c, ids.iter().map(|id| lookup[id]).collect()))
        .collect();

    // Every row landed on one child: the next layer would repeat this one.
    if occupied.len() < 2 {
        return Ok(node);
    }
    for (child, rows) in occupied {
        node.children.push(build_node(child, &rows, depth + 1, config)?);
    }
    Ok(node)
}

impl Forest {
    pub fn train(dataset: &Dataset, config: &BuildConfig) -> Result<Self> {
        let base = train_base_layer(dataset, config)?;
        let rows: Vec<&DataRow> = dataset.rows.iter().collect();
        let assignment = assign_rows(&base, &rows)?;
        let trees = base
            .into_iter()
            .zip(assignment)
            .map(|(classifier, ids)| {
                let subset: Vec<&DataRow> = ids.iter().map(|&id| &dataset.rows[id]).collect();
                build_tree(classifier, &subset, config)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Forest {
            config: *config,
            feature_names: dataset.feature_names.clone(),
            normalization: dataset.normalization.clone(),
            trees,
        })
    }

    /// Category of the leaf reached by descending from the best base tree.
    /// `row` must already be in the training feature space.
    pub fn classify(&self, row: &[f64]) -> Result<CategoryId> {
        Ok(self.descend(row)?.category().clone())
    }

    /// Normalises a raw feature vector the way training data was, then
    /// classifies it.
    pub fn classify_raw(&self, raw: &[f64]) -> Result<CategoryId> {
        if raw.len() != self.feature_names.len() {
            return Err(Error::DimensionMismatch {
                expected: self.feature_names.len(),
                got: raw.len(),
            });
        }
        self.classify(&apply_normalization(self.normalization.as_deref(), raw))
    }

    /// Leaf node reached by `row`.
    pub fn descend(&self, row: &[f64]) -> Result<&TreeNode> {
        if self.trees.is_empty() {
            return Err(Error::UntrainedModel);
        }
        let mut node = &self.trees[best_match(&self.trees, row)?];
        while !node.children.is_empty() {
            node = &node.children[best_match(&node.children, row)?];
        }
        Ok(node)
    }

    pub fn categories(&self) -> impl Iterator<Item = &CategoryId> {
        self.trees.iter().map(|t| t.category())
    }

    pub fn nodes(&self) -> impl Iterator<Item = &TreeNode> {
        self.trees.iter().flat_map(|t| t.nodes())
    }

    pub fn node_count(&self) -> usize {
        self.nodes().count()
    }

    pub fn max_depth(&self) -> usize {
        self.trees.iter().map(|t| t.max_depth()).max().unwrap_or(0)
    }

    /// Rows whose base-layer tree belongs to a different category than
    /// their label.
    pub fn foreign_assignment_count(&self, dataset: &Dataset) -> usize {
        self.trees
            .iter()
            .map(|t| {
                t.assigned_rows
                    .iter()
                    .filter(|&&id| dataset.rows[id].category != *t.category())
                    .count()
            })
            .sum()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
