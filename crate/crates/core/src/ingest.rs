//! CSV ingestion: missing-value removal, ordinal encodings, min-max
//! normalisation and category labelling from one or more columns.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CategoryId, DataRow, FeatureVector};

const MONTHS: [&str; 12] = [
    "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec",
];
const WEEKDAYS: [&str; 7] = ["mon", "tue", "wed", "thu", "fri", "sat", "sun"];

/// Month abbreviation to its ordinal, `jan = 1` through `dec = 12`.
pub fn encode_month(token: &str) -> Result<f64> {
    ordinal(&MONTHS, token).ok_or_else(|| Error::Encoding {
        column: "month".into(),
        token: token.into(),
    })
}

/// Weekday abbreviation to its ordinal, `mon = 1` through `sun = 7`.
pub fn encode_weekday(token: &str) -> Result<f64> {
    ordinal(&WEEKDAYS, token).ok_or_else(|| Error::Encoding {
        column: "day".into(),
        token: token.into(),
    })
}

fn ordinal(table: &[&str], token: &str) -> Option<f64> {
    let t = token.trim().to_ascii_lowercase();
    table.iter().position(|m| *m == t).map(|i| (i + 1) as f64)
}

/// Ordinal encoding for a categorical column.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "EncodingRepr", into = "EncodingRepr")]
pub enum Encoding {
    Month,
    Weekday,
    Table(BTreeMap<String, f64>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum EncodingRepr {
    Named(String),
    Table(BTreeMap<String, f64>),
}

impl TryFrom<EncodingRepr> for Encoding {
    type Error = Error;

    fn try_from(repr: EncodingRepr) -> Result<Self> {
        match repr {
            EncodingRepr::Named(name) => match name.as_str() {
                "month" => Ok(Encoding::Month),
                "weekday" => Ok(Encoding::Weekday),
                other => Err(Error::Config(format!("unknown built-in encoding {other:?}"))),
            },
            EncodingRepr::Table(t) => Ok(Encoding::Table(t)),
        }
    }
}

impl From<Encoding> for EncodingRepr {
    fn from(e: Encoding) -> Self {
        match e {
            Encoding::Month => EncodingRepr::Named("month".into()),
            Encoding::Weekday => EncodingRepr::Named("weekday".into()),
            Encoding::Table(t) => EncodingRepr::Table(t),
        }
    }
}

impl Encoding {
    pub fn encode(&self, column: &str, token: &str) -> Result<f64> {
        let err = || Error::Encoding {
            column: column.into(),
            token: token.into(),
        };
        match self {
            Encoding::Month => ordinal(&MONTHS, token).ok_or_else(err),
            Encoding::Weekday => ordinal(&WEEKDAYS, token).ok_or_else(err),
            Encoding::Table(t) => t.get(token.trim()).copied().ok_or_else(err),
        }
    }

    fn validate(&self, column: &str) -> Result<()> {
        if let Encoding::Table(t) = self {
            let mut seen: Vec<f64> = Vec::with_capacity(t.len());
            for &v in t.values() {
                if !v.is_finite() || seen.contains(&v) {
                    return Err(Error::Schema(format!(
                        "encoding for {column:?} must map tokens to distinct finite values"
                    )));
                }
                seen.push(v);
            }
        }
        Ok(())
    }
}

/// Field separator of the input file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Delimiter {
    #[default]
    Comma,
    Semicolon,
    Tab,
    /// Any run of spaces or tabs.
    Whitespace,
}

fn default_true() -> bool {
    true
}

fn default_missing() -> Vec<String> {
    ["", "NA", "?", "."].iter().map(|s| s.to_string()).collect()
}

/// Declarative description of how to turn a CSV file into a [`Dataset`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetSpec {
    pub path: PathBuf,
    pub category_columns: Vec<String>,
    pub feature_columns: Vec<String>,
    #[serde(default)]
    pub output_column: Option<String>,
    #[serde(default)]
    pub encodings: BTreeMap<String, Encoding>,
    #[serde(default = "default_true")]
    pub normalize: bool,
    #[serde(default)]
    pub delimiter: Delimiter,
    /// Column names for a headerless file. When absent the first record is
    /// the header.
    #[serde(default)]
    pub columns: Option<Vec<String>>,
    #[serde(default = "default_missing")]
    pub missing_tokens: Vec<String>,
}

impl DatasetSpec {
    pub fn new(path: impl Into<PathBuf>, category_columns: &[&str], feature_columns: &[&str]) -> Self {
        DatasetSpec {
            path: path.into(),
            category_columns: category_columns.iter().map(|s| s.to_string()).collect(),
            feature_columns: feature_columns.iter().map(|s| s.to_string()).collect(),
            output_column: None,
            encodings: BTreeMap::new(),
            normalize: true,
            delimiter: Delimiter::Comma,
            columns: None,
            missing_tokens: default_missing(),
        }
    }

    /// Forest-fires layout: grid cell `(X, Y)` as category, fire month as
    /// the output column, the eight sensor and fire-index readings as features.
    pub fn forest_fires(path: impl Into<PathBuf>) -> Self {
        let mut spec = DatasetSpec::new(
            path,
            &["X", "Y"],
            &["FFMC", "DMC", "DC", "ISI", "temp", "RH", "wind", "rain"],
        );
        spec.output_column = Some("month".into());
        spec.encodings.insert("month".into(), Encoding::Month);
        spec.encodings.insert("day".into(), Encoding::Weekday);
        spec
    }

    /// El Nino buoy layout: buoy as category, winds, humidity and the two
    /// temperatures as features.
    pub fn el_nino(path: impl Into<PathBuf>) -> Self {
        DatasetSpec::new(
            path,
            &["buoy"],
            &["zon_winds", "mer_winds", "humidity", "air_temp", "ss_temp"],
        )
    }

    fn validate(&self) -> Result<()> {
        if self.category_columns.is_empty() {
            return Err(Error::Schema("at least one category column is required".into()));
        }
        if self.feature_columns.is_empty() {
            return Err(Error::Schema("at least one feature column is required".into()));
        }
        let mut seen = BTreeSet::new();
        let all = self
            .category_columns
            .iter()
            .chain(&self.feature_columns)
            .chain(self.output_column.iter());
        for name in all {
            if !seen.insert(name.as_str()) {
                return Err(Error::Schema(format!("column {name:?} selected more than once")));
            }
        }
        for (column, enc) in &self.encodings {
            enc.validate(column)?;
        }
        Ok(())
    }
}

/// Min and max of one feature column over the retained rows.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColumnRange {
    pub min: f64,
    pub max: f64,
}

impl ColumnRange {
    pub fn of(column: &[f64]) -> Option<Self> {
        let mut it = column.iter().copied();
        let first = it.next()?;
        let (min, max) = it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x)));
        Some(ColumnRange { min, max })
    }

    /// `(x - min) / (max - min)`, or 0 for a constant column.
    pub fn apply(&self, x: f64) -> f64 {
        let span = self.max - self.min;
        if span > 0.0 {
            (x - self.min) / span
        } else {
            0.0
        }
    }
}

/// Min-max scales a column into `[0, 1]`. Constant columns map to 0.
pub fn minmax_normalize(column: &[f64]) -> Vec<f64> {
    match ColumnRange::of(column) {
        Some(r) => column.iter().map(|&x| r.apply(x)).collect(),
        None => Vec::new(),
    }
}

/// In-memory dataset after ingestion.
#[derive(Clone, Debug)]
pub struct Dataset {
    pub rows: Vec<DataRow>,
    pub categories: Vec<CategoryId>,
    pub feature_names: Vec<String>,
    pub output_name: Option<String>,
    pub dropped_count: usize,
    /// Per-feature ranges used for normalisation, if it was applied.
    pub normalization: Option<Vec<ColumnRange>>,
    raw_columns: BTreeMap<String, Vec<f64>>,
    header: Vec<String>,
    records: Vec<Vec<String>>,
}

impl Dataset {
    /// Builds a dataset directly from rows. Row ids are reassigned to the
    /// row positions; raw columns are the features as given.
    pub fn from_rows(mut rows: Vec<DataRow>, feature_names: Vec<String>) -> Result<Self> {
        let dim = feature_names.len();
        let mut raw_columns: BTreeMap<String, Vec<f64>> = feature_names
            .iter()
            .map(|n| (n.clone(), Vec::with_capacity(rows.len())))
            .collect();
        let has_output = rows.iter().any(|r| r.output_value.is_some());
        let mut output = Vec::new();
        for (i, row) in rows.iter_mut().enumerate() {
            if row.features.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.features.len(),
                });
            }
            row.row_id = i;
            for (name, &x) in feature_names.iter().zip(row.features.iter()) {
                raw_columns.get_mut(name).expect("column").push(x);
            }
            if has_output {
                output.push(row.output_value.unwrap_or(f64::NAN));
            }
        }
        let output_name = if has_output {
            raw_columns.insert("output".into(), output);
            Some("output".to_string())
        } else {
            None
        };
        let categories = rows
            .iter()
            .map(|r| r.category.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut header = feature_names.clone();
        header.push("category".into());
        let records = rows
            .iter()
            .map(|r| {
                let mut rec: Vec<String> = r.features.iter().map(|x| x.to_string()).collect();
                rec.push(r.category.to_string());
                rec
            })
            .collect();
        Ok(Dataset {
            rows,
            categories,
            feature_names,
            output_name,
            dropped_count: 0,
            normalization: None,
            raw_columns,
            header,
            records,
        })
    }

    /// Dataset restricted to the given rows (in the given order), with row
    /// ids renumbered. Normalisation ranges are carried over unchanged.
    pub fn subset(&self, row_ids: &[usize]) -> Dataset {
        let rows: Vec<DataRow> = row_ids
            .iter()
            .enumerate()
            .map(|(i, &id)| DataRow {
                row_id: i,
                ..self.rows[id].clone()
            })
            .collect();
        let raw_columns = self
            .raw_columns
            .iter()
            .map(|(k, v)| (k.clone(), row_ids.iter().map(|&id| v[id]).collect()))
            .collect();
        let categories = rows
            .iter()
            .map(|r| r.category.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Dataset {
            rows,
            categories,
            feature_names: self.feature_names.clone(),
            output_name: self.output_name.clone(),
            dropped_count: 0,
            normalization: self.normalization.clone(),
            raw_columns,
            header: self.header.clone(),
            records: row_ids.iter().map(|&id| self.records[id].clone()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.feature_names.len()
    }

    /// Raw (pre-normalisation) values of a feature or output column, in
    /// row order.
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.raw_columns.get(name).map(|v| v.as_slice())
    }

    pub fn column_names(&self) -> impl Iterator<Item = &str> {
        self.raw_columns.keys().map(|s| s.as_str())
    }

    /// Source header, in input-column order.
    pub fn header(&self) -> &[String] {
        &self.header
    }

    /// Source record of a retained row, in input-column order.
    pub fn record(&self, row_id: usize) -> &[String] {
        &self.records[row_id]
    }

    /// Row ids grouped by labelled category.
    pub fn category_groups(&self) -> BTreeMap<CategoryId, Vec<usize>> {
        let mut groups: BTreeMap<CategoryId, Vec<usize>> =
            self.categories.iter().map(|c| (c.clone(), Vec::new())).collect();
        for row in &self.rows {
            groups.entry(row.category.clone()).or_default().push(row.row_id);
        }
        groups
    }

    /// Applies the training normalisation to an unseen feature vector.
    pub fn normalize_features(&self, values: &[f64]) -> Vec<f64> {
        apply_normalization(self.normalization.as_deref(), values)
    }
}

pub(crate) fn apply_normalization(ranges: Option<&[ColumnRange]>, values: &[f64]) -> Vec<f64> {
    match ranges {
        Some(ranges) => values
            .iter()
            .zip(ranges)
            .map(|(&x, r)| r.apply(x))
            .collect(),
        None => values.to_vec(),
    }
}

fn read_records(spec: &DatasetSpec) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    let text = std::fs::read_to_string(&spec.path).map_err(|e| Error::io(&spec.path, e))?;
    let mut records: Vec<Vec<String>> = Vec::new();
    match spec.delimiter {
        Delimiter::Whitespace => {
            for line in text.lines() {
                if line.trim().is_empty() {
                    continue;
                }
                records.push(line.split_whitespace().map(str::to_owned).collect());
            }
        }
        ref d => {
            let delim = match d {
                Delimiter::Comma => b',',
                Delimiter::Semicolon => b';',
                Delimiter::Tab => b'\t',
                Delimiter::Whitespace => unreachable!(),
            };
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .delimiter(delim)
                .flexible(true)
                .trim(csv::Trim::All)
                .from_reader(text.as_bytes());
            for rec in reader.records() {
                let rec = rec?;
                if rec.iter().all(|f| f.is_empty()) {
                    continue;
                }
                records.push(rec.iter().map(str::to_owned).collect());
            }
        }
    }
    let header = match &spec.columns {
        Some(cols) => cols.clone(),
        None => {
            if records.is_empty() {
                return Err(Error::Schema(format!("{}: missing header row", spec.path.display())));
            }
            records.remove(0)
        }
    };
    Ok((header, records))
}

fn column_index(header: &[String], name: &str) -> Result<usize> {
    header
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| Error::Schema(format!("unknown column {name:?}")))
}

/// Loads, cleans, encodes and (optionally) normalises a dataset.
pub fn load_dataset(spec: &DatasetSpec) -> Result<Dataset> {
    spec.validate()?;
    let (header, records) = read_records(spec)?;

    let cat_idx = spec
        .category_columns
        .iter()
        .map(|c| column_index(&header, c))
        .collect::<Result<Vec<_>>>()?;
    let feat_idx = spec
        .feature_columns
        .iter()
        .map(|c| column_index(&header, c))
        .collect::<Result<Vec<_>>>()?;
    let out_idx = spec
        .output_column
        .as_deref()
        .map(|c| column_index(&header, c))
        .transpose()?;

    let is_missing = |s: &str| spec.missing_tokens.iter().any(|m| m == s.trim());
    let numeric = |name: &str, token: &str| -> Result<Option<f64>> {
        if is_missing(token) {
            return Ok(None);
        }
        match spec.encodings.get(name) {
            Some(enc) => enc.encode(name, token).map(Some),
            None => Ok(token.trim().parse::<f64>().ok().filter(|x| x.is_finite())),
        }
    };

    let mut kept_records = Vec::new();
    let mut categories_raw = Vec::new();
    let mut features_raw: Vec<Vec<f64>> = Vec::new();
    let mut outputs = Vec::new();
    let mut dropped = 0usize;

    'rows: for rec in records {
        let field = |i: usize| rec.get(i).map(String::as_str).unwrap_or("");
        let mut cat_parts = Vec::with_capacity(cat_idx.len());
        for &i in &cat_idx {
            let v = field(i);
            if is_missing(v) {
                dropped += 1;
                continue 'rows;
            }
            cat_parts.push(v.trim().to_owned());
        }
        let mut feats = Vec::with_capacity(feat_idx.len());
        for (name, &i) in spec.feature_columns.iter().zip(&feat_idx) {
            match numeric(name, field(i))? {
                Some(x) => feats.push(x),
                None => {
                    dropped += 1;
                    continue 'rows;
                }
            }
        }
        let out = match (out_idx, spec.output_column.as_deref()) {
            (Some(i), Some(name)) => match numeric(name, field(i))? {
                Some(x) => Some(x),
                None => {
                    dropped += 1;
                    continue 'rows;
                }
            },
            _ => None,
        };
        categories_raw.push(CategoryId::new(cat_parts.join(",")));
        features_raw.push(feats);
        outputs.push(out);
        kept_records.push(rec);
    }

    let dim = feat_idx.len();
    let mut raw_columns: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for (j, name) in spec.feature_columns.iter().enumerate() {
        raw_columns.insert(name.clone(), features_raw.iter().map(|f| f[j]).collect());
    }
    if let Some(name) = &spec.output_column {
        raw_columns.insert(name.clone(), outputs.iter().map(|o| o.expect("output")).collect());
    }

    let normalization = if spec.normalize && !features_raw.is_empty() {
        Some(
            spec.feature_columns
                .iter()
                .map(|n| ColumnRange::of(&raw_columns[n]).expect("non-empty"))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };

    let mut rows = Vec::with_capacity(features_raw.len());
    for (row_id, ((feats, category), output_value)) in features_raw
        .into_iter()
        .zip(categories_raw)
        .zip(outputs)
        .enumerate()
    {
        debug_assert_eq!(feats.len(), dim);
        let values = apply_normalization(normalization.as_deref(), &feats);
        rows.push(DataRow {
            row_id,
            features: FeatureVector::new(values)?,
            category,
            output_value,
        });
    }

    let categories = rows
        .iter()
        .map(|r| r.category.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    Ok(Dataset {
        rows,
        categories,
        feature_names: spec.feature_columns.clone(),
        output_name: spec.output_column.clone(),
        dropped_count: dropped,
        normalization,
        raw_columns,
        header,
        records: kept_records,
    })
}

/// Reads feature vectors for classification from a CSV file with a header
/// naming (at least) the given feature columns. Rows keep file order.
pub fn read_feature_rows(path: &Path, feature_names: &[String]) -> Result<Vec<Vec<f64>>> {
    let spec = DatasetSpec {
        path: path.to_path_buf(),
        category_columns: vec![],
        feature_columns: feature_names.to_vec(),
        output_column: None,
        encodings: BTreeMap::new(),
        normalize: false,
        delimiter: Delimiter::Comma,
        columns: None,
        missing_tokens: vec![],
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let (header, records) = read_records(&spec)?;
    let idx = feature_names
        .iter()
        .map(|c| column_index(&header, c))
        .collect::<Result<Vec<_>>>()?;
    records
        .iter()
        .map(|rec| {
            idx.iter()
                .zip(feature_names)
                .map(|(&i, name)| {
                    let tok = rec.get(i).map(String::as_str).unwrap_or("");
                    tok.parse::<f64>()
                        .ok()
                        .filter(|x| x.is_finite())
                        .ok_or_else(|| Error::Schema(format!("bad value {tok:?} in column {name:?}")))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_tmp(contents: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        f
    }

    #[test]
    fn month_ordinals() {
        assert_eq!(encode_month("jan").unwrap(), 1.0);
        assert_eq!(encode_month("dec").unwrap(), 12.0);
        assert_eq!(encode_month("aug").unwrap(), 8.0);
        assert_eq!(encode_month("AUG").unwrap(), 8.0);
        assert!(matches!(encode_month("foo"), Err(Error::Encoding { .. })));
    }

    #[test]
    fn minmax_examples() {
        assert_eq!(minmax_normalize(&[2.0, 4.0, 6.0]), vec![0.0, 0.5, 1.0]);
        assert_eq!(minmax_normalize(&[5.0, 5.0]), vec![0.0, 0.0]);
        assert!(minmax_normalize(&[]).is_empty());
    }

    #[test]
    fn drops_rows_with_missing_fields() {
        let f = write_tmp("a,b,c\n1,2,x\n3,,y\n5,6,x\n");
        let ds = load_dataset(&DatasetSpec::new(f.path(), &["c"], &["a", "b"])).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.dropped_count, 1);
        assert_eq!(ds.categories, vec![CategoryId::from("x")]);
        assert_eq!(ds.record(1), &["5", "6", "x"]);
        assert_eq!(ds.column("a").unwrap(), &[1.0, 5.0]);
        assert_eq!(ds.rows[1].features.as_slice(), &[1.0, 1.0]);
    }

    #[test]
    fn unparseable_numbers_are_dropped() {
        let f = write_tmp("a,c\n1,x\nabc,y\n2,y\n");
        let ds = load_dataset(&DatasetSpec::new(f.path(), &["c"], &["a"])).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.dropped_count, 1);
    }

    #[test]
    fn schema_and_encoding_errors() {
        let f = write_tmp("a,m,c\n1,jan,x\n2,foo,y\n");
        let spec = DatasetSpec::new(f.path(), &["c"], &["nope"]);
        assert!(matches!(load_dataset(&spec), Err(Error::Schema(_))));

        let mut spec = DatasetSpec::new(f.path(), &["c"], &["a"]);
        spec.output_column = Some("m".into());
        spec.encodings.insert("m".into(), Encoding::Month);
        match load_dataset(&spec) {
            Err(Error::Encoding { token, .. }) => assert_eq!(token, "foo"),
            other => panic!("expected encoding error, got {other:?}"),
        }

        let spec = DatasetSpec::new("/definitely/not/here.csv", &["c"], &["a"]);
        assert!(matches!(load_dataset(&spec), Err(Error::Io { .. })));

        let spec = DatasetSpec::new(f.path(), &["c"], &["c"]);
        assert!(matches!(load_dataset(&spec), Err(Error::Schema(_))));
    }

    #[test]
    fn encoding_tables_must_be_injective() {
        let f = write_tmp("a,c\n1,x\n");
        let mut spec = DatasetSpec::new(f.path(), &["c"], &["a"]);
        spec.encodings.insert(
            "a".into(),
            Encoding::Table([("p".to_string(), 1.0), ("q".to_string(), 1.0)].into()),
        );
        assert!(matches!(load_dataset(&spec), Err(Error::Schema(_))));
    }

    #[test]
    fn whitespace_headerless_input() {
        let f = write_tmp("1  0.5   2.0\n2 .  3.0\n 1 0.7 4.0\n");
        let mut spec = DatasetSpec::new(f.path(), &["buoy"], &["u", "v"]);
        spec.delimiter = Delimiter::Whitespace;
        spec.columns = Some(vec!["buoy".into(), "u".into(), "v".into()]);
        spec.normalize = false;
        let ds = load_dataset(&spec).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.dropped_count, 1);
        assert_eq!(ds.rows[1].features.as_slice(), &[0.7, 4.0]);
    }

    #[test]
    fn multi_column_category_tokens() {
        let f = write_tmp("X,Y,v\n1,2,0.1\n1,3,0.2\n1,2,0.3\n");
        let ds = load_dataset(&DatasetSpec::new(f.path(), &["X", "Y"], &["v"])).unwrap();
        assert_eq!(ds.categories, vec![CategoryId::from("1,2"), CategoryId::from("1,3")]);
        assert_eq!(ds.category_groups()[&CategoryId::from("1,2")], vec![0, 2]);
    }

    #[test]
    fn encoding_config_forms() {
        let spec: DatasetSpec = toml::from_str(
            r#"
            path = "x.csv"
            category_columns = ["c"]
            feature_columns = ["a"]
            [encodings]
            month = "month"
            size = { small = 1.0, large = 2.0 }
            "#,
        )
        .unwrap();
        assert_eq!(spec.encodings["month"], Encoding::Month);
        assert!(matches!(spec.encodings["size"], Encoding::Table(_)));
        assert!(spec.normalize);
    }
}
