//! The superpotential, its two partner potentials, and why supersymmetry is
//! broken for this family.

use qes_calogero::poly::rat;
use qes_calogero::susy::{
    classify_susy, factorized_potential, make_params, partner_potential, superpotential, Sector,
};

fn main() -> qes_calogero::Result<()> {
    let params = make_params(rat(1, 1))?;
    println!("alpha = {}, g1 = {}", params.alpha(), params.g1());
    println!("W(1) = {:.16} (25/7 = {:.16})", superpotential(&params, 1.0)?, 25.0 / 7.0);

    println!("{:>6} {:>22} {:>22} {:>10}", "r", "V-(r)", "W^2 - W'", "diff");
    for r in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let v = partner_potential(&params, Sector::Minus, r)?;
        let f = factorized_potential(&params, Sector::Minus, r)?;
        println!("{r:>6} {v:>22.15e} {f:>22.15e} {:>10.1e}", v - f);
    }

    let phase = classify_susy(&params);
    println!("phase: {:?}", phase.value);
    println!("{}", phase.evidence);
    Ok(())
}
