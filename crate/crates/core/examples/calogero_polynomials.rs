//! Symmetric translation-invariant polynomials solving the Calogero
//! condition, over the rationals or over Q(t) when `a` is irrational.

use qes_calogero::manybody::{reduction_constants, solve_pkq, AngularPoly};
use qes_calogero::poly::rat;

fn main() -> qes_calogero::Result<()> {
    for (n, g) in [(3, rat(0, 1)), (4, rat(4, 1)), (4, rat(1, 1))] {
        let c = reduction_constants(n, &g)?;
        println!("N = {n}, g = {g}: a = {:.6}, b = {:.6}", c.a.value, c.b.value);
        for k in 0..=4 {
            let sol = solve_pkq(n, k, &c)?;
            print!("  k = {k}: {} candidates, dimension {}", sol.candidates, sol.dimension);
            if let Some(p) = sol.basis.first() {
                match p {
                    AngularPoly::Rational(m) if m.len() <= 12 => print!("  P = {m}"),
                    AngularPoly::Symbolic(m, _) => print!("  ({} terms, coefficients in t)", m.len()),
                    _ => {}
                }
            }
            println!();
        }
    }
    Ok(())
}
