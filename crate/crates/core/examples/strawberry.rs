//! Fits every link and random-effect structure to the strawberry data and
//! prints coefficients and goodness of fit.

use ordmix::gof::gof_report;
use ordmix::io::strawberry;
use ordmix::report::{fit_report, Format};
use ordmix::{fit, fit_intercept_model, FitOptions, LinkFamily, ReStructure};

fn main() -> ordmix::Result<()> {
    let data = strawberry();
    let opts = FitOptions::default();
    for structure in [ReStructure::None, ReStructure::Univariate, ReStructure::Bivariate] {
        for link in LinkFamily::ALL {
            let full = fit(&data, link, structure, &opts)?;
            let intercept = fit_intercept_model(&data, link, structure, &opts)?;
            let g = gof_report(&data, &full, &intercept)?;
            println!("{}", fit_report("strawberry", &full, Some(&g)).render(Format::Text));
        }
    }
    Ok(())
}
