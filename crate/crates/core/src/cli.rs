//! Command-line surface: `fit`, `gof`, `simulate` and `reproduce`.
//!
//! Every command returns its rendered output; the binary prints it, or a
//! single `error: <kind>: <message>` line and a nonzero status.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::estimation::{fit, fit_intercept_model, FitOptions, FitResult};
use crate::gof::{fit_icc, gof_report};
use crate::io::{builtin, load_dataset, FactorSchema};
use crate::model::{Dataset, LinkFamily, RandomEffectSpec, ReStructure};
use crate::published::{parse_table_id, reference_table, Column, ReferenceTable, Source};
use crate::report::{comparison_report, fit_report, gof_comparison, simulation_report, Cell, Comparison, Format};
use crate::simulation::{run_study, SimulationDesign};

pub const DEFAULT_SEED: u64 = 20_260_101;
pub const ENV_QUAD_ORDER: &str = "ORDMIX_QUAD_ORDER";
pub const ENV_THREADS: &str = "ORDMIX_THREADS";

#[derive(Debug, Parser)]
#[command(name = "ordmix", version, about = "Clustered ordinal regression with random effects")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit one model and print its coefficients.
    Fit(FitArgs),
    /// Fit a model and its intercept-only twin; print χ², C, AIC and ICC.
    Gof(FitArgs),
    /// Run a seeded replication study.
    Simulate(SimulateArgs),
    /// Rerun the configuration behind a reference table (table2 .. table25)
    /// and print it next to the published values.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// Dataset file, or the name of a builtin fixture.
    #[arg(long, default_value = "strawberry")]
    pub data: String,
    /// Factor declaration for a dataset file, e.g. `male:3,female:4,block:4`.
    #[arg(long)]
    pub factors: Option<String>,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Quadrature points (per axis for two random effects).
    #[arg(long)]
    pub order: Option<usize>,
    /// Output format: text, csv or json.
    #[arg(long, default_value = "text")]
    pub format: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// po, acl or crl; `gof` accepts `all`.
    #[arg(long, default_value = "po")]
    pub link: String,
    /// none, one or two; `gof` accepts `all`.
    #[arg(long = "re", default_value = "none")]
    pub re: String,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value = "po")]
    pub generator: String,
    /// Standard deviation of a univariate random effect.
    #[arg(long, conflicts_with_all = ["sigma1", "sigma2", "rho"])]
    pub sigma: Option<f64>,
    #[arg(long, requires_all = ["sigma2", "rho"])]
    pub sigma1: Option<f64>,
    #[arg(long, requires_all = ["sigma1", "rho"])]
    pub sigma2: Option<f64>,
    #[arg(long, requires_all = ["sigma1", "sigma2"])]
    pub rho: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub replications: usize,
    #[arg(long, default_value_t = 10)]
    pub cluster_size: u32,
    /// Models fitted to every replicate, e.g. `po:none,po:one,crl:one`.
    /// Defaults to every link with and without a univariate effect.
    #[arg(long)]
    pub fits: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// table2 .. table25
    pub table: String,
    /// Replications for simulated scenarios.
    #[arg(long, default_value_t = 100)]
    pub replications: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}

fn link_arg(s: &str) -> Result<LinkFamily> {
    LinkFamily::from_short_name(s).ok_or_else(|| Error::InvalidArgument(format!("unknown link '{s}' (po, acl, crl)")))
}

fn re_arg(s: &str) -> Result<ReStructure> {
    ReStructure::from_short_name(s)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown random-effect structure '{s}' (none, one, two)")))
}

fn links_arg(s: &str) -> Result<Vec<LinkFamily>> {
    if s == "all" { Ok(LinkFamily::ALL.to_vec()) } else { Ok(vec![link_arg(s)?]) }
}

fn structures_arg(s: &str) -> Result<Vec<ReStructure>> {
    if s == "all" {
        Ok(vec![ReStructure::None, ReStructure::Univariate, ReStructure::Bivariate])
    } else {
        Ok(vec![re_arg(s)?])
    }
}

pub fn parse_factors(spec: &str) -> Result<FactorSchema> {
    let factors = spec
        .split(',')
        .map(|part| {
            let (name, levels) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidArgument(format!("factor '{part}' must be name:levels")))?;
            let levels: usize = levels
                .trim()
                .parse()
                .ok()
                .filter(|&l| l >= 1)
                .ok_or_else(|| Error::InvalidArgument(format!("factor '{part}' needs a positive level count")))?;
            Ok((name.trim().to_string(), levels))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FactorSchema { factors })
}

fn parse_fit_list(spec: &str) -> Result<Vec<(LinkFamily, ReStructure)>> {
    spec.split(',')
        .map(|part| {
            let (l, r) = part
                .split_once(':')
                .ok_or_else(|| Error::InvalidArgument(format!("fit '{part}' must be link:re, e.g. po:one")))?;
            Ok((link_arg(l.trim())?, re_arg(r.trim())?))
        })
        .collect()
}

fn load(args: &DataArgs) -> Result<Dataset> {
    if args.factors.is_none() {
        if let Some((d, _)) = builtin(&args.data) {
            return Ok(d);
        }
    }
    let schema = match &args.factors {
        Some(f) => parse_factors(f)?,
        None => FactorSchema::strawberry(),
    };
    load_dataset(&args.data, &schema)
}

fn env_order() -> Result<Option<usize>> {
    match std::env::var(ENV_QUAD_ORDER) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("{ENV_QUAD_ORDER}='{v}' is not a positive integer"))),
        Err(_) => Ok(None),
    }
}

fn fit_options(common: &CommonArgs) -> Result<FitOptions> {
    Ok(FitOptions {
        quadrature_order: match common.order {
            Some(o) => Some(o),
            None => env_order()?,
        },
        seed: Some(common.seed),
        ..FitOptions::default()
    })
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(ENV_THREADS) {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("{ENV_THREADS}='{v}' is not a positive integer")))?;
        // A second call in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn run_fit(args: &FitArgs) -> Result<String> {
    let format: Format = args.common.format.parse()?;
    let data = load(&args.data)?;
    let f = fit(&data, link_arg(&args.link)?, re_arg(&args.re)?, &fit_options(&args.common)?)?;
    Ok(fit_report(&args.data.data, &f, None).render(format))
}

fn fit_with_gof(data: &Dataset, link: LinkFamily, s: ReStructure, opts: &FitOptions) -> Result<(FitResult, crate::gof::GofReport)> {
    let full = fit(data, link, s, opts)?;
    let intercept = fit_intercept_model(data, link, s, opts)?;
    let g = gof_report(data, &full, &intercept)?;
    Ok((full, g))
}

fn run_gof(args: &FitArgs) -> Result<String> {
    let format: Format = args.common.format.parse()?;
    let data = load(&args.data)?;
    let opts = fit_options(&args.common)?;
    let mut rows = Vec::new();
    for link in links_arg(&args.link)? {
        for s in structures_arg(&args.re)? {
            if s == ReStructure::Bivariate && data.categories() != 3 {
                continue;
            }
            rows.push(fit_with_gof(&data, link, s, &opts)?);
        }
    }
    if let [(f, g)] = rows.as_slice() {
        return Ok(fit_report(&args.data.data, f, Some(g)).render(format));
    }
    let refs: Vec<(&FitResult, _)> = rows.iter().map(|(f, g)| (f, g.clone())).collect();
    Ok(gof_comparison(&args.data.data, &refs).render(format))
}

fn run_simulate(args: &SimulateArgs) -> Result<String> {
    let format: Format = args.common.format.parse()?;
    let generator = link_arg(&args.generator)?;
    let re = match (args.sigma, args.sigma1, args.sigma2, args.rho) {
        (Some(sigma), ..) => RandomEffectSpec::Univariate { sigma },
        (None, Some(sigma1), Some(sigma2), Some(rho)) => RandomEffectSpec::Bivariate { sigma1, sigma2, rho },
        _ => RandomEffectSpec::None,
    };
    let mut design = SimulationDesign::strawberry_like(generator, 0.0, args.common.seed);
    design.truth = SimulationDesign::default_truth(re);
    design.replications = args.replications;
    design.cluster_size = args.cluster_size;
    design.quadrature_order = fit_options(&args.common)?.quadrature_order;
    design.fits = match &args.fits {
        Some(spec) => parse_fit_list(spec)?,
        None => LinkFamily::ALL
            .iter()
            .flat_map(|&l| [(l, ReStructure::None), (l, ReStructure::Univariate)])
            .collect(),
    };
    Ok(simulation_report(&run_study(&design)?).render(format))
}

fn push_entry_comparisons(out: &mut Vec<Comparison>, model: &str, name: &str, ours: [f64; 4], col: &Column) {
    let reference = col.entry(name);
    let fields = ["", ".spread", ".lci", ".uci"];
    let refs = [
        reference.map(|e| e.estimate),
        reference.and_then(|e| e.spread),
        reference.and_then(|e| e.lci),
        reference.and_then(|e| e.uci),
    ];
    for ((f, v), r) in fields.iter().zip(ours).zip(refs) {
        out.push(Comparison { model: model.into(), quantity: format!("{name}{f}"), ours: v, reference: r });
    }
}

fn push_stat(out: &mut Vec<Comparison>, model: &str, quantity: &str, ours: f64, reference: f64) {
    out.push(Comparison { model: model.into(), quantity: quantity.into(), ours, reference: Some(reference) });
}

fn reproduce_strawberry(table: &ReferenceTable, opts: &FitOptions) -> Result<Vec<Comparison>> {
    let data = crate::io::strawberry();
    let mut out = Vec::new();
    for col in &table.columns {
        let (f, g) = fit_with_gof(&data, table.link, col.structure, opts)?;
        let model = format!("{}/{}", f.link.short_name(), f.structure.short_name());
        for c in &f.coefficients {
            push_entry_comparisons(&mut out, &model, &c.name, [c.estimate, c.se, c.lci, c.uci], col);
        }
        if let Some(i) = fit_icc(&f) {
            push_entry_comparisons(&mut out, &model, "icc", [i.value, i.se, i.lci, i.uci], col);
        }
        push_stat(&mut out, &model, "chi2", g.chi2.statistic, col.chi2);
        push_stat(&mut out, &model, "chi2_p", g.chi2.p_value, col.chi2_p);
        push_stat(&mut out, &model, "c", g.c.statistic, col.c);
        push_stat(&mut out, &model, "c_p", g.c.p_value, col.c_p);
        push_stat(&mut out, &model, "aic", g.aic, col.aic);
    }
    Ok(out)
}

fn reproduce_simulated(
    table: &ReferenceTable,
    generator: LinkFamily,
    sigma: f64,
    replications: usize,
    common: &CommonArgs,
) -> Result<Vec<Comparison>> {
    let mut design = SimulationDesign::strawberry_like(generator, sigma, common.seed);
    design.replications = replications;
    design.quadrature_order = fit_options(common)?.quadrature_order;
    design.fits = table.columns.iter().map(|c| (table.link, c.structure)).collect();
    let summary = run_study(&design)?;
    let mut out = Vec::new();
    for (m, col) in summary.models.iter().zip(&table.columns) {
        let model = format!("{}/{}", m.link.short_name(), m.structure.short_name());
        for p in m.parameters.iter().chain(&m.icc) {
            let nan = f64::NAN;
            push_entry_comparisons(
                &mut out,
                &model,
                &p.name,
                [p.mean, p.sd.unwrap_or(nan), p.lci.unwrap_or(nan), p.uci.unwrap_or(nan)],
                col,
            );
        }
        push_stat(&mut out, &model, "chi2", m.mean_chi2, col.chi2);
        push_stat(&mut out, &model, "chi2_p", m.mean_chi2_p, col.chi2_p);
        push_stat(&mut out, &model, "c", m.mean_c, col.c);
        push_stat(&mut out, &model, "c_p", m.mean_c_p, col.c_p);
        push_stat(&mut out, &model, "aic", m.mean_aic, col.aic);
    }
    Ok(out)
}

fn run_reproduce(args: &ReproduceArgs) -> Result<String> {
    let format: Format = args.common.format.parse()?;
    let number = parse_table_id(&args.table)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown table '{}' (table2 .. table25)", args.table)))?;
    let table = reference_table(number).expect("id validated");
    let mut meta: Vec<(String, Cell)> = vec![("link".into(), Cell::Text(table.link.label().into()))];
    let rows = match table.source {
        Source::Strawberry => {
            meta.push(("dataset".into(), Cell::Text("strawberry".into())));
            reproduce_strawberry(&table, &fit_options(&args.common)?)?
        }
        Source::Simulated { generator, sigma } => {
            meta.push(("generator".into(), Cell::Text(generator.label().into())));
            meta.push(("sigma".into(), Cell::Num(sigma)));
            meta.push(("replications".into(), Cell::Int(args.replications as i64)));
            meta.push(("seed".into(), Cell::Text(args.common.seed.to_string())));
            reproduce_simulated(&table, generator, sigma, args.replications, &args.common)?
        }
    };
    Ok(comparison_report(number, meta, &rows).render(format))
}

pub fn execute(cli: &Cli) -> Result<String> {
    configure_threads()?;
    match &cli.command {
        Command::Fit(a) => run_fit(a),
        Command::Gof(a) => run_gof(a),
        Command::Simulate(a) => run_simulate(a),
        Command::Reproduce(a) => run_reproduce(a),
    }
}

/// Parses arguments and runs; returns stdout text and the exit status.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (e.to_string(), 0),
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
                    (error_line(&Error::InvalidArgument(first)), 2)
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => (out, 0),
        Err(e) => (error_line(&e), 1),
    }
}

/// `error: <kind>: <message>` on one line.
pub fn error_line(e: &Error) -> String {
    let msg = e.detail().replace('\n', " ");
    format!("error: {}: {msg}", e.kind())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> String {
        let (out, code) = run(std::iter::once("ordmix").chain(args.iter().copied()));
        assert_eq!(code, 0, "{out}");
        out
    }

    #[test]
    fn fit_builtin_json() {
        let out = ok(&["fit", "--link", "po", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let c1 = v["coefficients"]["c1"]["estimate"].as_f64().unwrap();
        assert!((c1 - -2.171).abs() < 0.01);
    }

    #[test]
    fn bad_link_is_one_line() {
        let (out, code) = run(["ordmix", "fit", "--link", "probit"]);
        assert_ne!(code, 0);
        assert_eq!(out.lines().count(), 1);
        assert!(out.starts_with("error: invalid-argument:"), "{out}");
    }

    #[test]
    fn clap_errors_are_one_line() {
        let (out, code) = run(["ordmix", "fit", "--bogus"]);
        assert_eq!(code, 2);
        assert_eq!(out.lines().count(), 1, "{out}");
        let (out, code) = run(["ordmix", "reproduce", "table99"]);
        assert_eq!(code, 1);
        assert!(out.contains("unknown table"));
    }

    #[test]
    fn missing_file_reports_io() {
        let (out, code) = run(["ordmix", "fit", "--data", "/nonexistent/file.csv"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("error: io:"), "{out}");
    }

    #[test]
    fn factor_and_fit_lists() {
        let s = parse_factors("a:2, b:3").unwrap();
        assert_eq!(s.factors, vec![("a".to_string(), 2), ("b".to_string(), 3)]);
        assert!(parse_factors("a").is_err());
        assert_eq!(
            parse_fit_list("po:none,crl:one").unwrap(),
            vec![(LinkFamily::ProportionalOdds, ReStructure::None), (LinkFamily::ContinuationRatio, ReStructure::Univariate)]
        );
        assert!(parse_fit_list("po:three").is_err());
    }

    #[test]
    fn small_simulation_runs() {
        let out = ok(&["simulate", "--sigma", "0.6", "--replications", "2", "--fits", "crl:none", "--format", "csv"]);
        assert!(out.starts_with("section,row,column,value\n"));
        assert!(out.contains("estimates crl/none,c1,mean,"));
    }
}
