//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use nalgebra::DMatrix;
use ordmix::cli::DEFAULT_SEED;
use ordmix::estimation::{fit, fit_intercept_model, FitOptions, FitResult};
use ordmix::gof::{icc_value, pearson_chi2, GofReport};
use ordmix::io::strawberry;
use ordmix::model::log_odds;
use ordmix::optim::central_hessian;
use ordmix::published::{reference_table, Column, Source};
use ordmix::quadrature::{bivariate_rule, gauss_hermite};
use ordmix::simulation::{run_study, SimulationDesign, SimulationSummary};
use ordmix::special::chi_squared_survival;
use ordmix::{
    category_probabilities, conditional_cluster_loglik, gof, linear_predictors, marginal_cluster_loglik, Dataset,
    FixedEffects, LinkFamily, ParameterVector, RandomEffectSpec, ReStructure,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

const TOL_HOMOGENEOUS: f64 = 0.01;
const TOL_CHI2_HOMOGENEOUS: f64 = 0.5;
const TOL_C: f64 = 0.5;
const TOL_AIC_HOMOGENEOUS: f64 = 1.0;
const TOL_RE_ESTIMATE: f64 = 0.03;
const TOL_RE_SE: f64 = 0.02;
const TOL_AIC_RE: f64 = 1.5;
const TOL_ICC: f64 = 0.01;
const TOL_BIVARIATE_COMPONENT: f64 = 0.05;
const TOL_CHI2_RE: f64 = 8.0;
const TOL_SIMULATION_MEAN: f64 = 0.10;
const TOL_SIMULATION_SD: f64 = 0.10;
const GAP_SMALL_SIGMA: f64 = 20.0;
const GAP_LARGE_SIGMA: f64 = 100.0;
const TOL_ROUND_TRIP: f64 = 1e-10;
const ROUND_TRIP_DRAWS: usize = 10_000;
const TOL_QUADRATURE: f64 = 1e-10;
const MC_DRAWS: usize = 1_000_000;
const MC_SE_MULTIPLE: f64 = 3.0;
const TOL_HESSIAN: f64 = 1e-6;
const TOL_CHI2_SURVIVAL: f64 = 1e-10;

type Outcome = (bool, String);

struct StrawberryFits {
    data: Dataset,
    fits: BTreeMap<(u32, ReStructure), (FitResult, GofReport)>,
}

fn link_of_table(n: u32) -> LinkFamily {
    reference_table(n).unwrap().link
}

fn strawberry_fits() -> StrawberryFits {
    let data = strawberry();
    let opts = FitOptions::default();
    let mut fits = BTreeMap::new();
    for (table, structures) in [
        (2, &[ReStructure::None, ReStructure::Univariate][..]),
        (3, &[ReStructure::None, ReStructure::Univariate][..]),
        (4, &[ReStructure::None, ReStructure::Univariate][..]),
        (5, &[ReStructure::Bivariate][..]),
        (6, &[ReStructure::Bivariate][..]),
        (7, &[ReStructure::Bivariate][..]),
    ] {
        for &s in structures {
            let link = link_of_table(table);
            let full = fit(&data, link, s, &opts).expect("fit");
            let intercept = fit_intercept_model(&data, link, s, &opts).expect("intercept fit");
            let g = gof::gof_report(&data, &full, &intercept).expect("gof");
            fits.insert((table, s), (full, g));
        }
    }
    StrawberryFits { data, fits }
}

/// Largest |ours − published| over estimates and SEs of one column.
fn column_deltas(f: &FitResult, col: &Column) -> (f64, f64, Vec<String>) {
    let (mut de, mut ds) = (0.0f64, 0.0f64);
    let mut missing = Vec::new();
    for e in col.entries.iter().filter(|e| e.name != "icc") {
        match f.coefficient(e.name) {
            Some(c) => {
                de = de.max((c.estimate - e.estimate).abs());
                if let Some(se) = e.spread {
                    ds = ds.max((c.se - se).abs());
                }
            }
            None => missing.push(e.name.to_string()),
        }
    }
    (de, ds, missing)
}

fn criterion_homogeneous(s: &StrawberryFits, tables: &[u32]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for &t in tables {
        let col = reference_table(t).unwrap().column(ReStructure::None).unwrap().clone();
        let (f, _) = &s.fits[&(t, ReStructure::None)];
        let (de, ds, missing) = column_deltas(f, &col);
        ok &= de <= TOL_HOMOGENEOUS && ds <= TOL_HOMOGENEOUS && missing.is_empty() && f.converged;
        parts.push(format!("table {t}: max|Δest| {de:.4}, max|Δse| {ds:.4}"));
    }
    (ok, format!("{} (tol {TOL_HOMOGENEOUS})", parts.join("; ")))
}

fn criterion_homogeneous_gof(s: &StrawberryFits) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for t in [2, 3, 4] {
        let col = reference_table(t).unwrap().column(ReStructure::None).unwrap().clone();
        let (_, g) = &s.fits[&(t, ReStructure::None)];
        ok &= (g.chi2.statistic - col.chi2).abs() <= TOL_CHI2_HOMOGENEOUS && g.chi2.df == 86;
        ok &= (g.c.statistic - col.c).abs() <= TOL_C && g.c.df == 8;
        ok &= (g.aic - col.aic).abs() <= TOL_AIC_HOMOGENEOUS;
        parts.push(format!(
            "{}: chi2 {:.2} (df {}) vs {}, C {:.2} (df {}) vs {}, AIC {:.2} vs {}",
            link_of_table(t).short_name(),
            g.chi2.statistic,
            g.chi2.df,
            col.chi2,
            g.c.statistic,
            g.c.df,
            col.c,
            g.aic,
            col.aic
        ));
    }
    (ok, parts.join("; "))
}

fn criterion_univariate(s: &StrawberryFits) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for t in [2, 3, 4] {
        let col = reference_table(t).unwrap().column(ReStructure::Univariate).unwrap().clone();
        let (f, g) = &s.fits[&(t, ReStructure::Univariate)];
        let (de, ds, missing) = column_deltas(f, &col);
        let icc = g.icc.expect("icc");
        let published_icc = col.entry("icc").unwrap();
        let di = (icc.value - published_icc.estimate).abs();
        let dis = (icc.se - published_icc.spread.unwrap()).abs();
        ok &= de <= TOL_RE_ESTIMATE && ds <= TOL_RE_SE && missing.is_empty() && f.converged;
        ok &= (g.aic - col.aic).abs() <= TOL_AIC_RE;
        ok &= di <= TOL_ICC && dis <= TOL_ICC;
        parts.push(format!(
            "{}: max|Δest| {de:.4}, max|Δse| {ds:.4}, AIC {:.2}, ICC {:.4} (se {:.4})",
            link_of_table(t).short_name(),
            g.aic,
            icc.value,
            icc.se
        ));
    }
    (ok, format!("{} (tol est {TOL_RE_ESTIMATE}, se {TOL_RE_SE}, AIC {TOL_AIC_RE}, ICC {TOL_ICC})", parts.join("; ")))
}

fn criterion_bivariate(s: &StrawberryFits) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for t in [5, 6, 7] {
        let col = reference_table(t).unwrap().column(ReStructure::Bivariate).unwrap().clone();
        let (f, _) = &s.fits[&(t, ReStructure::Bivariate)];
        let mut d = 0.0f64;
        for name in ["sigma1", "sigma2", "rho"] {
            d = d.max((f.coefficient(name).unwrap().estimate - col.entry(name).unwrap().estimate).abs());
        }
        let icc = icc_value(&f.estimates.re).unwrap();
        let di = (icc - col.entry("icc").unwrap().estimate).abs();
        ok &= d <= TOL_BIVARIATE_COMPONENT && di <= TOL_ICC && f.converged;
        parts.push(format!("table {t}: max|Δ(σ1,σ2,ρ)| {d:.4}, ICC {icc:.4}"));
    }
    (ok, format!("{} (tol {TOL_BIVARIATE_COMPONENT}, ICC {TOL_ICC})", parts.join("; ")))
}

fn criterion_re_chi2(s: &StrawberryFits) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (t, st) in [
        (2, ReStructure::Univariate),
        (3, ReStructure::Univariate),
        (4, ReStructure::Univariate),
        (5, ReStructure::Bivariate),
        (6, ReStructure::Bivariate),
        (7, ReStructure::Bivariate),
    ] {
        let col = reference_table(t).unwrap().column(st).unwrap().clone();
        let (f, _) = &s.fits[&(t, st)];
        let chi = pearson_chi2(&s.data, f).unwrap().statistic;
        ok &= (chi - col.chi2).abs() <= TOL_CHI2_RE;
        parts.push(format!("{}/{} {chi:.2} vs {}", f.link.short_name(), st.short_name(), col.chi2));
    }
    (ok, format!("posterior-mode fitted counts: {} (tol {TOL_CHI2_RE})", parts.join(", ")))
}

struct Studies {
    by_design: BTreeMap<(LinkFamily, u32), SimulationSummary>,
}

fn sigma_key(sigma: f64) -> u32 {
    (sigma * 10.0).round() as u32
}

fn run_studies() -> Studies {
    let mut by_design = BTreeMap::new();
    for generator in LinkFamily::ALL {
        for sigma in [0.6, 1.5] {
            let mut d = SimulationDesign::strawberry_like(generator, sigma, DEFAULT_SEED);
            d.fits = LinkFamily::ALL
                .iter()
                .flat_map(|&l| [(l, ReStructure::None), (l, ReStructure::Univariate)])
                .collect();
            by_design.insert((generator, sigma_key(sigma)), run_study(&d).expect("study"));
        }
    }
    Studies { by_design }
}

fn criterion_table8(st: &Studies) -> Outcome {
    let table = reference_table(8).unwrap();
    let summary = &st.by_design[&(LinkFamily::ProportionalOdds, sigma_key(0.6))];
    let mut ok = true;
    let mut failures = Vec::new();
    let (mut dm, mut dsd) = (0.0f64, 0.0f64);
    for col in &table.columns {
        let m = summary.model(LinkFamily::ProportionalOdds, col.structure).unwrap();
        for e in col.entries.iter().filter(|e| e.name != "icc") {
            let p = m.parameter(e.name).unwrap();
            let d_mean = (p.mean - e.estimate).abs();
            let d_sd = (p.sd.unwrap() - e.spread.unwrap()).abs();
            dm = dm.max(d_mean);
            dsd = dsd.max(d_sd);
            if d_mean > TOL_SIMULATION_MEAN || d_sd > TOL_SIMULATION_SD {
                ok = false;
                failures.push(format!(
                    "{}/{} mean {:.3} vs {:.3}, sd {:.3} vs {:.3}",
                    col.structure.short_name(),
                    e.name,
                    p.mean,
                    e.estimate,
                    p.sd.unwrap(),
                    e.spread.unwrap()
                ));
            }
        }
    }
    let mut detail = format!("max|Δmean| {dm:.3}, max|Δsd| {dsd:.3} (tol {TOL_SIMULATION_MEAN}, {TOL_SIMULATION_SD})");
    if !failures.is_empty() {
        detail.push_str(&format!("; outside: {}", failures.join("; ")));
    }
    (ok, detail)
}

fn gap(st: &Studies, generator: LinkFamily, sigma: f64, link: LinkFamily) -> f64 {
    let s = &st.by_design[&(generator, sigma_key(sigma))];
    s.model(link, ReStructure::None).unwrap().mean_chi2 - s.model(link, ReStructure::Univariate).unwrap().mean_chi2
}

fn criterion_gaps(st: &Studies) -> Outcome {
    let mut ok = true;
    let (mut min_small, mut min_large) = (f64::INFINITY, f64::INFINITY);
    for n in 8..=25 {
        let t = reference_table(n).unwrap();
        let Source::Simulated { generator, sigma } = t.source else { unreachable!() };
        let g = gap(st, generator, sigma, t.link);
        if sigma < 1.0 {
            ok &= g > GAP_SMALL_SIGMA;
            min_small = min_small.min(g);
        } else {
            ok &= g > GAP_LARGE_SIGMA;
            min_large = min_large.min(g);
        }
    }
    (ok, format!("18 scenarios: min gap {min_small:.1} at σ=0.6 (> {GAP_SMALL_SIGMA}), {min_large:.1} at σ=1.5 (> {GAP_LARGE_SIGMA})"))
}

fn criterion_monotone(st: &Studies) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for generator in LinkFamily::ALL {
        for link in LinkFamily::ALL {
            let (a, b) = (gap(st, generator, 0.6, link), gap(st, generator, 1.5, link));
            ok &= b > a;
            parts.push(format!("{}→{} {a:.1}<{b:.1}", generator.short_name(), link.short_name()));
        }
    }
    (ok, parts.join(", "))
}

/// Supplementary property: every nonzero true slope keeps its sign in the
/// mean estimate of every generator/fitted pair and both structures.
fn criterion_signs(st: &Studies) -> Outcome {
    let truth = SimulationDesign::default_truth(RandomEffectSpec::None);
    let names = ordmix::io::FactorSchema::strawberry().indicator_names();
    let mut wrong = Vec::new();
    let mut checked = 0;
    for ((generator, sigma), s) in &st.by_design {
        for m in &s.models {
            for (name, &beta) in names.iter().zip(&truth.fixed.slopes) {
                checked += 1;
                let mean = m.parameter(name).unwrap().mean;
                if mean.signum() != beta.signum() {
                    wrong.push(format!(
                        "{}σ{}→{}/{} {name} {mean:.3}",
                        generator.short_name(),
                        *sigma as f64 / 10.0,
                        m.link.short_name(),
                        m.structure.short_name()
                    ));
                }
            }
        }
    }
    (wrong.is_empty(), format!("{checked} slope means checked; wrong sign: {}", if wrong.is_empty() { "none".into() } else { wrong.join(", ") }))
}

fn criterion_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst = 0.0f64;
    for link in LinkFamily::ALL {
        for _ in 0..ROUND_TRIP_DRAWS {
            let km1 = rng.random_range(1..=5);
            let mut d: Vec<f64> = (0..km1).map(|_| rng.random_range(-8.0..8.0)).collect();
            if link == LinkFamily::ProportionalOdds {
                d.sort_by(f64::total_cmp);
                for i in 1..d.len() {
                    d[i] = d[i].max(d[i - 1] + 1e-3);
                }
            }
            let p = category_probabilities(link, &d).unwrap();
            let back = log_odds(link, p.as_slice());
            for (a, b) in d.iter().zip(&back) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    (worst < TOL_ROUND_TRIP, format!("3 links × {ROUND_TRIP_DRAWS} draws, δ ∈ [−8, 8]: max error {worst:.2e} (tol {TOL_ROUND_TRIP:e})"))
}

fn double_factorial(m: u32) -> f64 {
    (1..m).step_by(2).map(f64::from).product()
}

fn criterion_quadrature() -> Outcome {
    let mut worst = 0.0f64;
    for order in 2..=40usize {
        let r = gauss_hermite(order).unwrap();
        for m in 0..=(2 * order as u32 - 1) {
            let terms = r.nodes().iter().zip(r.weights()).map(|(t, w)| w * t.powi(m as i32));
            let (got, scale) = terms.fold((0.0, 0.0), |(s, a), v: f64| (s + v, a + v.abs()));
            let want = if m % 2 == 1 { 0.0 } else { double_factorial(m) };
            // Odd moments cancel to zero; measure against the absolute moment.
            worst = worst.max((got - want).abs() / scale.max(1.0));
        }
    }
    let mut worst2 = 0.0f64;
    for order in [2, 5, 12, 20] {
        for (s1, s2, rho) in [(0.6, 0.7, 0.9), (1.5, 0.4, -0.3), (1.0, 1.0, 0.0)] {
            let r = bivariate_rule(order, s1, s2, rho).unwrap();
            let e = |f: &dyn Fn(f64, f64) -> f64| -> f64 {
                r.nodes().iter().zip(r.weights()).map(|(&(a, b), w)| w * f(a, b)).sum()
            };
            for (got, want) in [
                (e(&|a, _| a * a), s1 * s1),
                (e(&|_, b| b * b), s2 * s2),
                (e(&|a, b| a * b), rho * s1 * s2),
                (e(&|a, _| a), 0.0),
                (e(&|_, b| b), 0.0),
            ] {
                worst2 = worst2.max((got - want).abs());
            }
        }
    }
    (
        worst < TOL_QUADRATURE && worst2 < TOL_QUADRATURE,
        format!(
            "1-D moments 0..2n−1, orders 2..40: max rel error {worst:.2e}; 2-D covariance: max error {worst2:.2e} (tol {TOL_QUADRATURE:e})"
        ),
    )
}

fn criterion_monte_carlo() -> Outcome {
    let data = strawberry();
    // Parameters at the published PO univariate strawberry fit.
    let col = reference_table(2).unwrap().column(ReStructure::Univariate).unwrap().clone();
    let value = |n: &str| col.entry(n).unwrap().estimate;
    let sigma = value("sigma");
    let params = ParameterVector::new(
        FixedEffects::new(
            vec![value("c1"), value("c2")],
            data.covariate_names().iter().map(|n| value(n)).collect(),
        ),
        RandomEffectSpec::Univariate { sigma },
    );
    let links = [
        LinkFamily::ProportionalOdds,
        LinkFamily::AdjacentCategories,
        LinkFamily::ContinuationRatio,
        LinkFamily::ProportionalOdds,
        LinkFamily::ContinuationRatio,
    ];
    let rule = gauss_hermite(30).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut ok = true;
    let mut worst = 0.0f64;
    for (&idx, &link) in [0usize, 13, 22, 35, 47].iter().zip(&links) {
        let c = &data.clusters()[idx];
        let exact = marginal_cluster_loglik(c, &params, link, &rule).unwrap().exp();
        let (mut s, mut s2) = (0.0, 0.0);
        for _ in 0..MC_DRAWS {
            let z: f64 = rng.sample(StandardNormal);
            let eps = [sigma * z; 2];
            let delta = linear_predictors(&params.fixed, c.covariates(), &eps).unwrap();
            let p = category_probabilities(link, &delta).unwrap();
            let l = conditional_cluster_loglik(c, &p).exp();
            s += l;
            s2 += l * l;
        }
        let n = MC_DRAWS as f64;
        let mean = s / n;
        let se = ((s2 / n - mean * mean) / (n - 1.0)).sqrt();
        let z = (exact - mean).abs() / se;
        worst = worst.max(z);
        ok &= z <= MC_SE_MULTIPLE;
    }
    (ok, format!("5 clusters × {MC_DRAWS} draws: max |quadrature − MC| = {worst:.2} MC SE (tol {MC_SE_MULTIPLE})"))
}

fn criterion_hessian_and_survival() -> Outcome {
    let mut worst = 0.0f64;
    let cases: Vec<(DMatrix<f64>, Vec<f64>, Vec<f64>)> = vec![
        (DMatrix::from_element(1, 1, -1.0), vec![0.0], vec![0.0]),
        (DMatrix::from_diagonal(&nalgebra::dvector![-2.0, -4.0]), vec![0.0, 0.0], vec![0.7, -1.3]),
        (
            DMatrix::from_row_slice(3, 3, &[4.0, 1.0, -0.5, 1.0, 3.0, 0.2, -0.5, 0.2, 2.0]),
            vec![1.0, -2.0, 0.5],
            vec![0.3, -1.2, 2.5],
        ),
        (
            DMatrix::from_row_slice(2, 2, &[9.0, -4.0, -4.0, 5.0]),
            vec![0.0, 3.0],
            vec![-4.0, 7.5],
        ),
        (DMatrix::from_diagonal_element(5, 5, 0.01), vec![1.0; 5], vec![10.0, -5.0, 0.0, 1e-3, 3.0]),
    ];
    for (a, b, at) in &cases {
        let mut f = |x: &[f64]| {
            let v = nalgebra::DVector::from_column_slice(x);
            0.5 * v.dot(&(a * &v)) + v.iter().zip(b).map(|(x, b)| x * b).sum::<f64>() + 7.0
        };
        let h = central_hessian(&mut f, at);
        worst = worst.max((h - a).abs().max());
    }
    let mut worst_q = 0.0f64;
    for x in [0.0, 0.01, 0.5, 1.0, 2.0, 3.7, 10.0, 25.0, 60.0, 150.0] {
        worst_q = worst_q.max((chi_squared_survival(x, 2) - (-x / 2.0).exp()).abs());
    }
    (
        worst < TOL_HESSIAN && worst_q < TOL_CHI2_SURVIVAL,
        format!("Hessian on 5 quadratics: max error {worst:.2e} (tol {TOL_HESSIAN:e}); χ²₂ survival max error {worst_q:.2e} (tol {TOL_CHI2_SURVIVAL:e})"),
    )
}

fn criterion_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ordmix");
    let args = [
        "simulate",
        "--generator",
        "po",
        "--sigma",
        "0.6",
        "--replications",
        "100",
        "--seed",
        "4242",
        "--fits",
        "po:none,po:one",
        "--format",
        "json",
    ];
    let run = |threads: &str| {
        let out = Command::new(bin).args(args).env("ORDMIX_THREADS", threads).output().expect("binary runs");
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let a = run("1");
    let b = run("4");
    (
        a == b && !a.is_empty(),
        format!("two `simulate` runs (1 and 4 worker threads): {} bytes, identical = {}", a.len(), a == b),
    )
}

fn check(results: &mut Vec<(&'static str, &'static str, bool)>, id: &'static str, name: &'static str, f: impl FnOnce() -> Outcome) {
    let (ok, detail) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(o) => o,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        }
    };
    println!("{} {id:>2} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    results.push((id, name, ok));
}

fn main() {
    let mut results = Vec::new();
    let fits = catch_unwind(strawberry_fits).ok();
    let with_fits = |f: fn(&StrawberryFits) -> Outcome| {
        let fits = &fits;
        move || match fits {
            Some(s) => f(s),
            None => (false, "strawberry fits failed".into()),
        }
    };
    check(&mut results, "1", "PO homogeneous estimates and SEs", with_fits(|s| criterion_homogeneous(s, &[2])));
    check(&mut results, "2", "ACL and CR homogeneous estimates and SEs", with_fits(|s| criterion_homogeneous(s, &[3, 4])));
    check(&mut results, "3", "homogeneous chi2, C, AIC", with_fits(criterion_homogeneous_gof));
    check(&mut results, "4", "univariate random-effect fits", with_fits(criterion_univariate));
    check(&mut results, "5", "bivariate random-effect fits", with_fits(criterion_bivariate));
    check(&mut results, "6", "random-effect chi2", with_fits(criterion_re_chi2));

    let studies = catch_unwind(run_studies).ok();
    let with_studies = |f: fn(&Studies) -> Outcome| {
        let studies = &studies;
        move || match studies {
            Some(s) => f(s),
            None => (false, "simulation studies failed".into()),
        }
    };
    check(&mut results, "7", "PO σ=0.6 scenario means and SDs", with_studies(criterion_table8));
    check(&mut results, "8", "chi2 gap per scenario", with_studies(criterion_gaps));
    check(&mut results, "9", "chi2 gap increases with σ", with_studies(criterion_monotone));

    check(&mut results, "9b", "slope signs recovered in every scenario", with_studies(criterion_signs));

    check(&mut results, "10", "probability round trip", criterion_round_trip);
    check(&mut results, "11", "quadrature exactness", criterion_quadrature);
    check(&mut results, "12", "marginal likelihood vs Monte Carlo", criterion_monte_carlo);
    check(&mut results, "13", "numerical Hessian and chi2 survival", criterion_hessian_and_survival);
    check(&mut results, "14", "simulate determinism", criterion_determinism);

    let failed: Vec<&str> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    println!(
        "acceptance: {} passed, {} failed{}",
        results.len() - failed.len(),
        failed.len(),
        if failed.is_empty() { String::new() } else { format!(" ({failed:?})") }
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
