//! Delimited dataset files and the embedded strawberry fixture.
//!
//! One row per cluster: an integer level for each declared factor, then the
//! K category counts. The header row is mandatory. Factors are expanded to
//! indicator columns with level 1 as the reference.

use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{Cluster, Dataset};

const STRAWBERRY_CSV: &str = include_str!("../data/strawberry.csv");

/// Factor names and level counts, in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSchema {
    pub factors: Vec<(String, usize)>,
}

impl FactorSchema {
    pub fn new<S: Into<String>>(factors: impl IntoIterator<Item = (S, usize)>) -> Self {
        Self {
            factors: factors.into_iter().map(|(n, l)| (n.into(), l)).collect(),
        }
    }

    /// Three male parents, four female parents, four blocks.
    pub fn strawberry() -> Self {
        Self::new([("male", 3), ("female", 4), ("block", 4)])
    }

    /// Indicator column labels: first letter of the factor plus the level.
    pub fn indicator_names(&self) -> Vec<String> {
        self.factors
            .iter()
            .flat_map(|(name, levels)| {
                let initial = name.chars().next().unwrap_or('x');
                (2..=*levels).map(move |l| format!("{initial}{l}"))
            })
            .collect()
    }

    pub fn n_indicators(&self) -> usize {
        self.factors.iter().map(|(_, l)| l - 1).sum()
    }

    /// Reference-coded indicators for one row of levels (1-based).
    pub fn encode(&self, levels: &[usize]) -> Vec<f64> {
        let mut x = Vec::with_capacity(self.n_indicators());
        for ((_, n), &level) in self.factors.iter().zip(levels) {
            for l in 2..=*n {
                x.push(if level == l { 1.0 } else { 0.0 });
            }
        }
        x
    }

    /// Inverse of [`encode`](Self::encode).
    pub fn decode(&self, x: &[f64]) -> Result<Vec<usize>> {
        let mut levels = Vec::with_capacity(self.factors.len());
        let mut at = 0;
        for (name, n) in &self.factors {
            let block = &x[at..at + n - 1];
            at += n - 1;
            let hot: Vec<usize> = block
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == 1.0)
                .map(|(i, _)| i + 2)
                .collect();
            if block.iter().any(|&v| v != 0.0 && v != 1.0) || hot.len() > 1 {
                return Err(Error::InvalidArgument(format!(
                    "covariates are not a reference coding of factor {name}"
                )));
            }
            levels.push(hot.first().copied().unwrap_or(1));
        }
        Ok(levels)
    }

    /// Full-factorial covariate rows, last factor varying fastest.
    pub fn full_factorial(&self) -> Vec<Vec<usize>> {
        let mut rows = vec![Vec::new()];
        for (_, n) in &self.factors {
            rows = rows
                .into_iter()
                .flat_map(|r| {
                    (1..=*n).map(move |l| {
                        let mut r = r.clone();
                        r.push(l);
                        r
                    })
                })
                .collect();
        }
        rows
    }
}

fn split_fields(line: &str) -> Vec<&str> {
    if line.contains(',') {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

/// Parses dataset text under a factor schema.
pub fn parse_dataset(text: &str, schema: &FactorSchema) -> Result<Dataset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header row".into(),
    })?;
    let header = split_fields(header);
    let nf = schema.factors.len();
    if header.iter().any(|h| h.parse::<f64>().is_ok()) {
        return Err(Error::Parse {
            line: header_line,
            message: "missing header row (first row is numeric)".into(),
        });
    }
    if header.len() < nf + 2 {
        return Err(Error::Parse {
            line: header_line,
            message: format!(
                "header has {} columns; need {nf} factor columns and at least 2 count columns",
                header.len()
            ),
        });
    }
    let k = header.len() - nf;

    let mut clusters = Vec::new();
    for (line_no, line) in lines {
        let fields = split_fields(line);
        if fields.len() != header.len() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected {} fields, found {}", header.len(), fields.len()),
            });
        }
        let mut levels = Vec::with_capacity(nf);
        for (j, (name, n)) in schema.factors.iter().enumerate() {
            let level: usize = fields[j].parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("factor {name}: '{}' is not a level number", fields[j]),
            })?;
            if level < 1 || level > *n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("factor {name}: unknown level {level} (declared 1..={n})"),
                });
            }
            levels.push(level);
        }
        let mut counts = Vec::with_capacity(k);
        for f in &fields[nf..] {
            let v: i64 = f.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("count '{f}' is not an integer"),
            })?;
            if v < 0 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("negative count {v}"),
                });
            }
            counts.push(v as u32);
        }
        let cluster = Cluster::new(schema.encode(&levels), counts).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        clusters.push(cluster);
    }
    if clusters.is_empty() {
        return Err(Error::Parse {
            line: header_line,
            message: "no data rows after the header".into(),
        });
    }
    Dataset::new(clusters)?.with_covariate_names(schema.indicator_names())
}

pub fn load_dataset(path: impl AsRef<Path>, schema: &FactorSchema) -> Result<Dataset> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    parse_dataset(&text, schema)
}

/// Writes a dataset back out in the file format `parse_dataset` reads.
pub fn render_dataset(data: &Dataset, schema: &FactorSchema) -> Result<String> {
    let mut out: Vec<String> = schema.factors.iter().map(|(n, _)| n.clone()).collect();
    out.extend((1..=data.categories()).map(|k| format!("y{k}")));
    let mut text = out.join(",");
    text.push('\n');
    for c in data.clusters() {
        let levels = schema.decode(c.covariates())?;
        let row: Vec<String> = levels
            .iter()
            .map(|l| l.to_string())
            .chain(c.counts().iter().map(|y| y.to_string()))
            .collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    Ok(text)
}

/// The 48-plot strawberry fungus-resistance experiment.
pub fn strawberry() -> Dataset {
    parse_dataset(STRAWBERRY_CSV, &FactorSchema::strawberry()).expect("embedded fixture parses")
}

/// Resolves a builtin fixture name.
pub fn builtin(name: &str) -> Option<(Dataset, FactorSchema)> {
    match name {
        "strawberry" => Some((strawberry(), FactorSchema::strawberry())),
        _ => None,
    }
}
