//! The m = 1 potential from the point canonical transformation against V-.

use qes_calogero::pct::{compare_v1_vminus, pct_energy, pct_wavefunction, PctSpec};
use qes_calogero::poly::rat;
use qes_calogero::susy::{chi_minus, make_params};

fn main() -> qes_calogero::Result<()> {
    let radii: Vec<f64> = (0..200).map(|i| 0.1 + 9.9 * i as f64 / 199.0).collect();
    for alpha in [rat(1, 2), rat(1, 1), rat(2, 1)] {
        let cmp = compare_v1_vminus(&alpha, &radii)?;
        println!(
            "alpha = {alpha}: V- - V1 = {:.14} (expected {}), spread {:.1e}",
            cmp.constant, cmp.expected_constant, cmp.max_deviation
        );
        let spec = PctSpec::matching(&alpha)?;
        let params = make_params(alpha)?;
        for n in 0..3 {
            let ratio = chi_minus(&params, n)?.ratio_to(&pct_wavefunction(&spec, n)?);
            println!("   n = {n}: E_pct = {}, chi-/chi_pct = {ratio:?}", pct_energy(&spec, n));
        }
    }
    Ok(())
}
