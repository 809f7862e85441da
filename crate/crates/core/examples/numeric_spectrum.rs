//! Finite differences, Sturm bisection and Richardson extrapolation against
//! the analytic levels `4(n + alpha + 5/2)`.

use qes_calogero::poly::{rat, to_f64};
use qes_calogero::spectral::{spectrum_report, GridSpec};
use qes_calogero::susy::{analytic_energy, make_params, PotentialSpec, Sector};

fn main() -> qes_calogero::Result<()> {
    let params = make_params(rat(1, 1))?;
    let analytic: Vec<_> = (0..6).map(|n| analytic_energy(&params, Sector::Minus, n)).collect();
    let coarse = GridSpec::radial(12.0, 4000)?;
    let fine = GridSpec::radial(12.0, 8000)?;

    for (name, pot) in [
        ("V-", PotentialSpec::v_minus(&params)),
        ("V+", PotentialSpec::v_plus(&params)),
    ] {
        let report = spectrum_report(&pot, &analytic, &coarse, &fine)?;
        println!("{name}: n  analytic  fine-grid  extrapolated  rel.error");
        for (n, a) in report.analytic.iter().enumerate() {
            println!(
                "    {n}  {:>8}  {:.10}  {:.12}  {:.2e}",
                to_f64(a),
                report.numeric[n],
                report.numeric_extrapolated[n],
                report.rel_errors[n]
            );
        }
    }
    Ok(())
}
