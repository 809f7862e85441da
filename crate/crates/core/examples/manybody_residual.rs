//! Assembles many-body eigenfunctions and checks `H psi = E psi` by finite
//! differences at sampled points of the ordered sector.

use qes_calogero::manybody::{
    assemble_baseline, assemble_eigenfunction, residual_check, sample_sector_points, solve_pkq,
    ManyBodySpec, DEFAULT_FD_STEP, DEFAULT_MIN_GAP,
};
use qes_calogero::poly::rat;

fn main() -> qes_calogero::Result<()> {
    for (n_particles, g) in [(2, rat(0, 1)), (3, rat(4, 1))] {
        let spec = ManyBodySpec::new(n_particles, g, 0, rat(1, 1))?;
        let p = solve_pkq(n_particles, 0, &spec.constants)?.basis.remove(0);
        for n in 0..3 {
            let qes = assemble_eigenfunction(&spec, n, p.clone())?;
            let base = assemble_baseline(&spec, n, p.clone())?;
            let pts = sample_sector_points(&qes, 20, 11, DEFAULT_MIN_GAP)?;
            let rq = residual_check(&qes, &pts, DEFAULT_FD_STEP)?;
            let pts = sample_sector_points(&base, 20, 11, DEFAULT_MIN_GAP)?;
            let rb = residual_check(&base, &pts, DEFAULT_FD_STEP)?;
            println!(
                "N = {n_particles}, g = {}, n = {n}: E = {:>4} residual {:.1e} | U = r^2: E = {:.4} residual {:.1e}",
                spec.g, qes.energy.value, rq.max_rel_residual, base.energy.value, rb.max_rel_residual
            );
        }
    }
    Ok(())
}
