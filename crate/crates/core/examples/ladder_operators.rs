//! Exact eigenfunctions of both partners and the ladder operators linking
//! them, checked as identities between rational functions.

use qes_calogero::poly::rat;
use qes_calogero::susy::{
    analytic_energy, apply_ladder, chi_minus, chi_plus, make_params, minus_sector_residual,
    residual_vanishes, LadderDirection, Sector,
};

fn main() -> qes_calogero::Result<()> {
    let params = make_params(rat(1, 2))?;
    for n in 0..4 {
        let plus = chi_plus(&params, n);
        let minus = chi_minus(&params, n)?;
        let e = analytic_energy(&params, Sector::Plus, n);

        let lowered = apply_ladder(&params, LadderDirection::Minus, &plus)?;
        let residual = minus_sector_residual(&params, &minus, n)?;
        println!("n = {n}, E = {e}");
        println!("  chi-  = r^{} e^(-r^2/2) ({}) / ({})", minus.power(), minus.num(), minus.den());
        println!("  A- chi+ proportional to chi-: {}", lowered.proportional_to(&minus));
        println!("  -chi'' + (V- - E) chi == 0:   {}", residual_vanishes(&residual));
        println!("  nodes of chi-: {}", minus.node_count());
    }
    Ok(())
}
