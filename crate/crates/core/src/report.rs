//! Rendering of fits, goodness-of-fit statistics, simulation summaries and
//! reference comparisons as an aligned text table, long-format CSV, or JSON.
//!
//! Text output rounds to three decimals. CSV and JSON keep full precision;
//! JSON numbers round-trip exactly and non-finite values become `null`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::Error;
use crate::estimation::FitResult;
use crate::gof::{Chi2Test, GofReport};
use crate::simulation::{ModelSummary, ParameterSummary, SimulationSummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" | "table" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}' (text, csv, json)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(v) if v.is_finite() => {
                let s = format!("{v:.3}");
                if s == "-0.000" { "0.000".into() } else { s }
            }
            Cell::Num(_) | Cell::Empty => "-".into(),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(v) if v.is_finite() => format!("{v:?}"),
            Cell::Num(_) | Cell::Empty => String::new(),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => csv_field(s),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => json_number(*v),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

/// A titled grid of labelled rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<Cell>)>,
}

impl Section {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, label: impl Into<String>, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push((label.into(), cells));
    }
}

/// Ordered sections plus top-level metadata.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub meta: Vec<(String, Cell)>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn meta(&mut self, key: &str, value: impl Into<Cell>) {
        self.meta.push((key.to_string(), value.into()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }

    fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "{k}: {}", v.text());
        }
        for s in &self.sections {
            if !out.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "[{}]", s.name);
            let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new()).chain(s.columns.clone()).collect()];
            for (label, cells) in &s.rows {
                grid.push(std::iter::once(label.clone()).chain(cells.iter().map(Cell::text)).collect());
            }
            let widths: Vec<usize> = (0..grid[0].len())
                .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
                .collect();
            for r in &grid {
                let line: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .enumerate()
                    .map(|(j, (c, &w))| if j == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
                    .collect();
                let _ = writeln!(out, "{}", line.join("  ").trim_end());
            }
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("section,row,column,value\n");
        for (k, v) in &self.meta {
            let _ = writeln!(out, "meta,{},,{}", csv_field(k), v.csv());
        }
        for s in &self.sections {
            for (label, cells) in &s.rows {
                for (col, cell) in s.columns.iter().zip(cells) {
                    let _ = writeln!(out, "{},{},{},{}", csv_field(&s.name), csv_field(label), csv_field(col), cell.csv());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        for (k, v) in &self.meta {
            root.insert(k.clone(), v.json());
        }
        for s in &self.sections {
            let mut rows = Map::new();
            for (label, cells) in &s.rows {
                let row: Map<String, Value> = s.columns.iter().cloned().zip(cells.iter().map(Cell::json)).collect();
                rows.insert(label.clone(), Value::Object(row));
            }
            root.insert(s.name.clone(), Value::Object(rows));
        }
        Value::Object(root)
    }

    /// Inverse of [`to_json`](Self::to_json); non-finite numbers come back as
    /// [`Cell::Empty`].
    pub fn from_json(v: &Value) -> Option<Self> {
        fn cell(v: &Value) -> Option<Cell> {
            Some(match v {
                Value::Null => Cell::Empty,
                Value::String(s) => Cell::Text(s.clone()),
                Value::Number(n) if n.is_f64() => Cell::Num(n.as_f64()?),
                Value::Number(n) => Cell::Int(n.as_i64()?),
                _ => return None,
            })
        }
        let mut r = Report::default();
        for (k, v) in v.as_object()? {
            match v {
                Value::Object(rows) => {
                    let mut section = Section { name: k.clone(), columns: Vec::new(), rows: Vec::new() };
                    for (label, row) in rows {
                        let row = row.as_object()?;
                        if section.columns.is_empty() {
                            section.columns = row.keys().cloned().collect();
                        }
                        let cells = row.values().map(cell).collect::<Option<Vec<_>>>()?;
                        section.rows.push((label.clone(), cells));
                    }
                    r.sections.push(section);
                }
                other => r.meta.push((k.clone(), cell(other)?)),
            }
        }
        Some(r)
    }
}

fn model_label(fit: &FitResult) -> String {
    format!("{}/{}", fit.link.short_name(), fit.structure.short_name())
}

fn chi2_cells(t: &Chi2Test) -> Vec<Cell> {
    vec![t.statistic.into(), t.df.into(), t.p_value.into()]
}

/// Coefficients of one fit, plus its goodness-of-fit statistics if given.
pub fn fit_report(dataset: &str, fit: &FitResult, gof: Option<&GofReport>) -> Report {
    let mut r = Report::default();
    r.meta("dataset", dataset);
    r.meta("link", fit.link.label());
    r.meta("random_effects", fit.structure.short_name());
    r.meta("loglik", fit.loglik);
    r.meta("converged", if fit.converged { "yes" } else { "no" });
    r.meta("iterations", fit.iterations);
    if fit.structure != crate::model::ReStructure::None {
        r.meta("quadrature_order", fit.quadrature_order);
    }
    if fit.boundary {
        r.meta("boundary", "variance component at zero");
    }
    if let Some(note) = &fit.covariance_note {
        r.meta("covariance", note.as_str());
    }
    let mut coef = Section::new("coefficients", &["estimate", "se", "p_value", "lci", "uci"]);
    for c in &fit.coefficients {
        coef.row(&c.name, vec![c.estimate.into(), c.se.into(), c.p_value.into(), c.lci.into(), c.uci.into()]);
    }
    r.sections.push(coef);
    if let Some(g) = gof {
        r.sections.push(gof_section(std::slice::from_ref(&(model_label(fit), g.clone()))));
    }
    r
}

fn gof_section(rows: &[(String, GofReport)]) -> Section {
    let mut s = Section::new(
        "goodness_of_fit",
        &["chi2", "chi2_df", "chi2_p", "c", "c_df", "c_p", "aic", "icc", "icc_se", "icc_lci", "icc_uci"],
    );
    for (label, g) in rows {
        let mut cells = chi2_cells(&g.chi2);
        cells.extend(chi2_cells(&g.c));
        cells.push(g.aic.into());
        match &g.icc {
            Some(i) => cells.extend([i.value.into(), i.se.into(), i.lci.into(), i.uci.into()]),
            None => cells.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]),
        }
        s.row(label, cells);
    }
    s
}

/// Goodness-of-fit comparison across several fits of one dataset.
pub fn gof_comparison(dataset: &str, rows: &[(&FitResult, GofReport)]) -> Report {
    let mut r = Report::default();
    r.meta("dataset", dataset);
    let labelled: Vec<(String, GofReport)> = rows.iter().map(|(f, g)| (model_label(f), g.clone())).collect();
    r.sections.push(gof_section(&labelled));
    let mut ll = Section::new("loglik", &["loglik", "parameters", "converged"]);
    for (f, _) in rows {
        ll.row(model_label(f), vec![f.loglik.into(), f.n_params().into(), (if f.converged { "yes" } else { "no" }).into()]);
    }
    r.sections.push(ll);
    r
}

fn parameter_cells(p: &ParameterSummary) -> Vec<Cell> {
    vec![p.truth.into(), p.mean.into(), p.sd.into(), p.lci.into(), p.uci.into()]
}

fn model_key(m: &ModelSummary) -> String {
    format!("{}/{}", m.link.short_name(), m.structure.short_name())
}

/// Per-model parameter recovery and averaged fit statistics.
pub fn simulation_report(s: &SimulationSummary) -> Report {
    let mut r = Report::default();
    r.meta("generator", s.generator.label());
    r.meta("replications", s.replications);
    r.meta("cluster_size", s.cluster_size as usize);
    r.meta("seed", Cell::Text(s.seed.to_string()));
    match s.truth.re {
        crate::model::RandomEffectSpec::None => {}
        crate::model::RandomEffectSpec::Univariate { sigma } => r.meta("sigma", sigma),
        crate::model::RandomEffectSpec::Bivariate { sigma1, sigma2, rho } => {
            r.meta("sigma1", sigma1);
            r.meta("sigma2", sigma2);
            r.meta("rho", rho);
        }
    }
    let mut stats = Section::new(
        "fit_statistics",
        &["used", "excluded", "chi2", "chi2_df", "chi2_p", "c", "c_df", "c_p", "aic"],
    );
    for m in &s.models {
        let key = model_key(m);
        let mut sec = Section::new(format!("estimates {key}"), &["truth", "mean", "sd", "lci", "uci"]);
        for p in m.parameters.iter().chain(&m.icc) {
            sec.row(&p.name, parameter_cells(p));
        }
        r.sections.push(sec);
        stats.row(
            key,
            vec![
                m.used.into(),
                m.excluded.into(),
                m.mean_chi2.into(),
                m.chi2_df.into(),
                m.mean_chi2_p.into(),
                m.mean_c.into(),
                m.c_df.into(),
                m.mean_c_p.into(),
                m.mean_aic.into(),
            ],
        );
    }
    r.sections.push(stats);
    r
}

/// One reproduced quantity next to its reference value.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub model: String,
    pub quantity: String,
    pub ours: f64,
    pub reference: Option<f64>,
}

pub fn comparison_report(table: u32, meta: Vec<(String, Cell)>, rows: &[Comparison]) -> Report {
    let mut r = Report { meta, sections: Vec::new() };
    r.meta.insert(0, ("table".into(), Cell::Int(table as i64)));
    let mut models: Vec<&str> = Vec::new();
    for c in rows {
        if !models.contains(&c.model.as_str()) {
            models.push(&c.model);
        }
    }
    for m in models {
        let mut sec = Section::new(m, &["ours", "reference", "delta"]);
        for c in rows.iter().filter(|c| c.model == m) {
            let delta = c.reference.map(|p| c.ours - p);
            sec.row(&c.quantity, vec![c.ours.into(), c.reference.into(), delta.into()]);
        }
        r.sections.push(sec);
    }
    r
}
