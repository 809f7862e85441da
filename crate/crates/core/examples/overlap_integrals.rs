//! Adaptive Gauss-Legendre overlaps of the exceptional eigenfunctions.

use qes_calogero::poly::rat;
use qes_calogero::spectral::integrate;
use qes_calogero::susy::{chi_minus, chi_minus_literal_prefactor, make_params};

fn main() -> qes_calogero::Result<()> {
    let params = make_params(rat(2, 1))?;
    let waves = (0..4).map(|n| chi_minus(&params, n)).collect::<Result<Vec<_>, _>>()?;
    for (i, a) in waves.iter().enumerate() {
        let row: Vec<String> = waves
            .iter()
            .map(|b| integrate(|r| a.eval(r) * b.eval(r), 0.0, 16.0, 1e-12).map(|v| format!("{v:>10.2e}")))
            .collect::<Result<_, _>>()?;
        println!("n = {i}: {}", row.join(" "));
    }
    let lit = chi_minus_literal_prefactor(&params, 0)?;
    let norm = integrate(|r| lit.eval(r).powi(2), 0.0, 16.0, 1e-12)?;
    println!("norm with the textbook prefactor: {norm:.12}");
    Ok(())
}
