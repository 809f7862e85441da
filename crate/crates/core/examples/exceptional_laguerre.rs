//! Classical and X1 exceptional Laguerre polynomials in exact arithmetic.
//!
//! Run with `cargo run --example exceptional_laguerre`.

use qes_calogero::poly::sturm::count_positive_roots;
use qes_calogero::poly::{exceptional_laguerre, laguerre, rat, ExceptionalLaguerreSpec, LaguerreSpec};

fn main() -> qes_calogero::Result<()> {
    for n in 0..4 {
        let p = laguerre(&LaguerreSpec::new(n, rat(3, 2)));
        println!("L_{n}^(3/2)(x) = {p}");
    }

    let k = rat(5, 2);
    for n in 1..5 {
        let p = exceptional_laguerre(&ExceptionalLaguerreSpec::new(n, 1, k.clone()))?;
        println!(
            "L^(5/2)_({n},1)(x) = {p}    positive roots: {}",
            count_positive_roots(&p)
        );
    }

    let quad = exceptional_laguerre(&ExceptionalLaguerreSpec::new(2, 1, k))?;
    println!("value at x = 1: {}", quad.eval(&rat(1, 1)));
    Ok(())
}
