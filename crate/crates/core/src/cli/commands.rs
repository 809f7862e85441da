use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use super::csv::CsvTable;
use super::{resolve, CliError, Command, Format, RunConfig};
use crate::manybody::{
    assemble_baseline, assemble_eigenfunction, residual_check, sample_sector_points, solve_pkq,
    AngularPoly, ManyBodySpec, ResidualReport, DEFAULT_FD_STEP, DEFAULT_MIN_GAP,
    MAX_RESIDUAL_PARTICLES,
};
use crate::pct::{compare_v1_vminus, expected_shift, pct_wavefunction, v1_value, PctSpec};
use crate::poly::rational::{format_rational, int, rat, to_f64, Rational};
use crate::poly::{RatFunc, RationalPoly};
use crate::spectral::{
    discretize, eigenvector, integrate, lowest_eigenvalues, spectrum_report, GridSpec, SpectrumReport,
};
use crate::susy::{
    analytic_energy, apply_ladder, chi_minus, chi_minus_exceptional, chi_minus_literal_prefactor,
    chi_plus, chi_plus_literal_prefactor, classify_susy, factorized_potential, make_params,
    minus_sector_residual, partner_potential, residual_vanishes, LadderDirection, PotentialSpec,
    QuasiPolyWave, Sector, SuperPotentialParams, SusyPhaseValue,
};

/// Relative tolerance on numeric eigenvalues.
pub const SPECTRUM_TOL: f64 = 1e-6;
/// Tolerance on overlap integrals.
pub const OVERLAP_TOL: f64 = 1e-8;
/// Absolute tolerance on `V- - V1` being constant.
pub const SHIFT_TOL: f64 = 1e-11;
/// Relative tolerance on the many-body local energy.
pub const RESIDUAL_TOL: f64 = 1e-5;
/// Points sampled by `manybody`.
pub const RESIDUAL_POINTS: usize = 20;

/// What a command produced: text for stdout and the verdict.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub fn dispatch(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Spectrum(a) => cmd_spectrum(&resolve(a)?),
        Command::Verify(a) => cmd_verify(&resolve(a)?),
        Command::Pkq(a) => cmd_pkq(&resolve(a)?),
        Command::Manybody(a) => cmd_manybody(&resolve(a)?),
        Command::Dump(a) => cmd_dump(&resolve(a)?),
    }
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

/// `make_params`, or the detuned variant when the hidden hook is set.
fn params_for(cfg: &RunConfig) -> Result<SuperPotentialParams, CliError> {
    Ok(match cfg.detune_factor() {
        Some(f) => SuperPotentialParams::detuned(cfg.alpha.clone(), f)?,
        None => make_params(cfg.alpha.clone())?,
    })
}

fn ensure_dir(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| failed(format!("cannot create {}: {e}", dir.display())))
}

/// Writes `<name>.json` (and the CSV tables when `--format csv`) into `--out`
/// if given, and chooses what goes to stdout.
fn emit(cfg: &RunConfig, name: &str, report: &Value, tables: &[(String, CsvTable)]) -> Result<String, CliError> {
    let pretty = serde_json::to_string_pretty(report).map_err(failed)?;
    if let Some(dir) = &cfg.out {
        ensure_dir(dir)?;
        fs::write(dir.join(format!("{name}.json")), &pretty).map_err(failed)?;
        if cfg.format == Format::Csv {
            for (file, t) in tables {
                t.write(&dir.join(file))?;
            }
        }
    }
    Ok(match cfg.format {
        Format::Json => pretty,
        Format::Csv => tables.iter().map(|(_, t)| t.render()).collect::<Vec<_>>().join("\n"),
    })
}

fn grids(cfg: &RunConfig) -> Result<(GridSpec, GridSpec), CliError> {
    Ok((
        GridSpec::radial(cfg.r_max, cfg.grid_points)?,
        GridSpec::radial(cfg.r_max, 2 * cfg.grid_points)?,
    ))
}

fn analytic_levels(params: &SuperPotentialParams, sector: Sector, n_max: u32) -> Vec<Rational> {
    (0..=n_max).map(|n| analytic_energy(params, sector, n)).collect()
}

/// Both partner spectra against `4(n + alpha + 5/2)`, `n = 0..=n_max`.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let params = params_for(cfg)?;
    let (coarse, fine) = grids(cfg)?;
    let run = |sector: Sector| -> Result<SpectrumReport, CliError> {
        let pot = match sector {
            Sector::Plus => PotentialSpec::v_plus(&params),
            Sector::Minus => PotentialSpec::v_minus(&params),
        };
        Ok(spectrum_report(&pot, &analytic_levels(&params, sector, cfg.n_max), &coarse, &fine)?)
    };
    let (plus, minus) = rayon::join(|| run(Sector::Plus), || run(Sector::Minus));
    let (plus, minus) = (plus?, minus?);
    let iso: f64 = plus
        .numeric_extrapolated
        .iter()
        .zip(&minus.numeric_extrapolated)
        .map(|(a, b)| (a - b).abs() / b.abs())
        .fold(0.0, f64::max);
    let mut failures = Vec::new();
    for (name, r) in [("v_plus", &plus), ("v_minus", &minus)] {
        if !(r.max_rel_error() <= SPECTRUM_TOL) {
            failures.push(format!("{name}: max relative error {:e} > {SPECTRUM_TOL:e}", r.max_rel_error()));
        }
    }
    if !(iso <= SPECTRUM_TOL) {
        failures.push(format!("partner spectra differ by {iso:e}"));
    }
    let report = json!({
        "command": "spectrum",
        "config": cfg,
        "tolerance": SPECTRUM_TOL,
        "v_plus": plus,
        "v_minus": minus,
        "isospectral_max_rel_diff": iso,
        "passed": failures.is_empty(),
    });
    let mut table = CsvTable::new(&[
        "n", "analytic", "numeric_plus", "extrapolated_plus", "rel_error_plus",
        "numeric_minus", "extrapolated_minus", "rel_error_minus",
    ])
    .comment(format!("spectrum alpha={} r_max={} grid_points={}", format_rational(&cfg.alpha), cfg.r_max, cfg.grid_points));
    for i in 0..plus.analytic.len() {
        table.push(vec![
            i as f64,
            to_f64(&plus.analytic[i]),
            plus.numeric[i],
            plus.numeric_extrapolated[i],
            plus.rel_errors[i],
            minus.numeric[i],
            minus.numeric_extrapolated[i],
            minus.rel_errors[i],
        ]);
    }
    let stdout = emit(cfg, "spectrum", &report, &[("spectrum.csv".into(), table)])?;
    Ok(Outcome { stdout, passed: failures.is_empty(), failures })
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    detail: Value,
}

fn check(name: &'static str, result: Result<(bool, Value), CliError>) -> Check {
    match result {
        Ok((passed, detail)) => Check { name, passed, detail },
        Err(e) => Check { name, passed: false, detail: json!({ "error": e.to_string() }) },
    }
}

fn overlap(a: &QuasiPolyWave, b: &QuasiPolyWave) -> Result<f64, CliError> {
    Ok(integrate(|r| a.eval(r) * b.eval(r), 0.0, 16.0, 1e-12)?)
}

/// The invariant suite. Detuning (hidden hook) affects the potential and the
/// superpotential; the reference wavefunctions stay on the constraint.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = params_for(cfg)?;
    let exact = make_params(cfg.alpha.clone())?;
    let alpha = cfg.alpha.clone();
    let n_max = cfg.n_max;
    let mut checks = Vec::new();

    checks.push(check("factorization", (|| {
        let mut worst: f64 = 0.0;
        for i in 0..100 {
            let r = 0.05 + 9.95 * i as f64 / 99.0;
            for s in [Sector::Plus, Sector::Minus] {
                let v = partner_potential(&p, s, r)?;
                let f = factorized_potential(&p, s, r)?;
                worst = worst.max((v - f).abs() / (1.0 + v.abs()));
            }
        }
        Ok((worst <= 1e-11, json!({ "max_rel_deviation": worst, "tolerance": 1e-11 })))
    })()));

    checks.push(check("exceptional_identity", (|| {
        for n in 0..=n_max {
            chi_minus(&p, n)?;
        }
        Ok((true, json!({ "levels": n_max + 1 })))
    })()));

    checks.push(check("ladder", (|| {
        for n in 0..=n_max {
            let up = chi_plus(&p, n);
            let e = analytic_energy(&p, Sector::Plus, n);
            let down = apply_ladder(&p, LadderDirection::Minus, &up)?;
            let down = down.with_scale(down.scale().times_sqrt(&e.recip()));
            if !down.same_function(&chi_minus(&p, n)?) {
                return Ok((false, json!({ "first_failure": n, "identity": "A- chi+ = sqrt(E) chi-" })));
            }
            let twice = apply_ladder(&p, LadderDirection::Plus, &apply_ladder(&p, LadderDirection::Minus, &up)?)?;
            if !twice.same_function(&up.with_scale(up.scale().times(&e))) {
                return Ok((false, json!({ "first_failure": n, "identity": "A+ A- chi+ = E chi+" })));
            }
        }
        Ok((true, json!({ "levels": n_max + 1 })))
    })()));

    checks.push(check("schrodinger_residual", (|| {
        for n in 0..=n_max {
            let w = chi_minus(&exact, n)?;
            if !residual_vanishes(&minus_sector_residual(&p, &w, n)?) {
                return Ok((false, json!({ "first_nonzero": n })));
            }
        }
        Ok((true, json!({ "levels": n_max + 1 })))
    })()));

    checks.push(check("orthonormality", (|| {
        let top = n_max.min(5);
        let waves = (0..=top).map(|n| chi_minus(&exact, n)).collect::<Result<Vec<_>, _>>()?;
        let mut norms = Vec::new();
        let mut worst_diag: f64 = 0.0;
        let mut worst_off: f64 = 0.0;
        for i in 0..waves.len() {
            for j in 0..=i {
                let o = overlap(&waves[i], &waves[j])?;
                if i == j {
                    norms.push(o);
                    worst_diag = worst_diag.max((o - 1.0).abs());
                } else {
                    worst_off = worst_off.max(o.abs());
                }
            }
        }
        let lit_minus = chi_minus_literal_prefactor(&exact, 0)?;
        let lit_plus = chi_plus_literal_prefactor(&exact, 0);
        Ok((
            worst_diag <= OVERLAP_TOL && worst_off <= OVERLAP_TOL,
            json!({
                "norms": norms,
                "max_norm_deviation": worst_diag,
                "max_off_diagonal": worst_off,
                "literal_prefactor_norm_minus": overlap(&lit_minus, &lit_minus)?,
                "literal_prefactor_norm_plus": overlap(&lit_plus, &lit_plus)?,
            }),
        ))
    })()));

    checks.push(check("broken_susy", (|| {
        let phase = classify_susy(&exact);
        Ok((phase.value == SusyPhaseValue::Broken, serde_json::to_value(&phase).map_err(failed)?))
    })()));

    checks.push(check("pct_equivalence", (|| {
        let radii: Vec<f64> = (0..200).map(|i| 0.1 + 9.9 * i as f64 / 199.0).collect();
        let cmp = compare_v1_vminus(&alpha, &radii)?;
        let shift_ok = cmp.max_deviation <= SHIFT_TOL
            && (cmp.constant - to_f64(&expected_shift(&alpha))).abs() <= SHIFT_TOL;
        let spec = PctSpec::matching(&alpha)?;
        let mut ratios = Vec::new();
        for n in 0..=n_max {
            let a = chi_minus(&exact, n)?;
            let b = pct_wavefunction(&spec, n)?;
            ratios.push(a.ratio_to(&b));
        }
        let prop_ok = ratios.iter().all(Option::is_some);
        Ok((shift_ok && prop_ok, json!({ "comparison": cmp, "wavefunction_ratios": ratios })))
    })()));

    let (num, den) = chi_minus_exceptional(&alpha, 0);
    let lhs = RatFunc::new(num, den);
    let rhs = RatFunc::new(
        RationalPoly::new(vec![&alpha + rat(5, 2), int(1)]),
        RationalPoly::new(vec![&alpha + rat(3, 2), int(1)]),
    );
    checks.push(check("ground_state_simplification", Ok((lhs == rhs, json!({ "ratio": lhs.to_string() })))));

    let failures: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.name.to_string()).collect();
    let report = json!({
        "command": "verify",
        "config": cfg,
        "checks": checks,
        "passed": failures.is_empty(),
    });
    let mut table = CsvTable::new(&["index", "passed"]).comment("verify: one row per check, names in order:");
    for (i, c) in checks.iter().enumerate() {
        table = table.comment(format!("{i} {}", c.name));
    }
    for (i, c) in checks.iter().enumerate() {
        table.push(vec![i as f64, if c.passed { 1.0 } else { 0.0 }]);
    }
    let stdout = emit(cfg, "verify", &report, &[("verify.csv".into(), table)])?;
    Ok(Outcome { stdout, passed: failures.is_empty(), failures })
}

/// Basis of `P_{k,q}` for `(N, k, g)`.
pub fn cmd_pkq(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = ManyBodySpec::new(cfg.n_particles, cfg.g.clone(), cfg.k, cfg.alpha.clone())?;
    let sol = solve_pkq(cfg.n_particles, cfg.k, &spec.constants)?;
    let report = json!({
        "command": "pkq",
        "config": cfg,
        "constants": spec.constants,
        "solution": sol,
        "note": "dimension is the null space over the power-sum candidates; r^2-divisible solutions are included",
    });
    let mut cols: Vec<String> = vec!["q".into()];
    cols.extend((1..=cfg.n_particles).map(|i| format!("e{i}")));
    cols.push("coeff".into());
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut table = CsvTable::new(&col_refs).comment(format!(
        "P_(k,q) for N={} k={} g={}; dimension {}",
        cfg.n_particles,
        cfg.k,
        format_rational(&cfg.g),
        sol.dimension
    ));
    for (q, p) in sol.basis.iter().enumerate() {
        let rows: Vec<(Vec<u32>, f64)> = match p {
            AngularPoly::Rational(m) => m.terms().iter().map(|(e, c)| (e.clone(), to_f64(c))).collect(),
            AngularPoly::Symbolic(m, t) => m.terms().iter().map(|(e, c)| (e.clone(), c.eval_f64(*t))).collect(),
        };
        for (e, c) in rows {
            let mut row = vec![(q + 1) as f64];
            row.extend(e.iter().map(|&v| v as f64));
            row.push(c);
            table.push(row);
        }
    }
    let stdout = emit(cfg, "pkq", &report, &[("pkq.csv".into(), table)])?;
    Ok(Outcome { stdout, passed: true, failures: vec![] })
}

/// Local-energy residuals of the QES eigenfunction and of the `U = r^2`
/// baseline at the same sampled points.
pub fn cmd_manybody(cfg: &RunConfig) -> Result<Outcome, CliError> {
    if cfg.n_particles > MAX_RESIDUAL_PARTICLES {
        return Err(CliError::Invalid(format!(
            "N = {} exceeds {MAX_RESIDUAL_PARTICLES}: each point costs 4N + 1 evaluations per \
             coordinate sweep and the polynomial search grows combinatorially",
            cfg.n_particles
        )));
    }
    let spec = ManyBodySpec::new(cfg.n_particles, cfg.g.clone(), cfg.k, cfg.alpha.clone())?;
    let sol = solve_pkq(cfg.n_particles, cfg.k, &spec.constants)?;
    let p = sol.basis.first().cloned().ok_or_else(|| {
        CliError::Invalid(format!("no P_(k,q) exists for N = {} and k = {}", cfg.n_particles, cfg.k))
    })?;
    let qes = assemble_eigenfunction(&spec, cfg.n, p.clone())?;
    let base = assemble_baseline(&spec, cfg.n, p)?;
    let points = sample_sector_points(&qes, RESIDUAL_POINTS, cfg.seed, DEFAULT_MIN_GAP)?;
    let base_points = sample_sector_points(&base, RESIDUAL_POINTS, cfg.seed, DEFAULT_MIN_GAP)?;
    let (rq, rb) = rayon::join(
        || residual_check(&qes, &points, DEFAULT_FD_STEP),
        || residual_check(&base, &base_points, DEFAULT_FD_STEP),
    );
    let (rq, rb): (ResidualReport, ResidualReport) = (rq?, rb?);
    let mut failures = Vec::new();
    for (name, r) in [("qes", &rq), ("baseline", &rb)] {
        if !(r.max_rel_residual <= RESIDUAL_TOL) {
            failures.push(format!("{name}: max residual {:e} > {RESIDUAL_TOL:e}", r.max_rel_residual));
        }
    }
    let report = json!({
        "command": "manybody",
        "config": cfg,
        "constants": spec.constants,
        "l": spec.l(),
        "E": qes.energy,
        "baseline_E": base.energy,
        "origin_exponent": qes.origin_exponent(),
        "pkq_dimension": sol.dimension,
        "tolerance": RESIDUAL_TOL,
        "qes": rq,
        "baseline": rb,
        "passed": failures.is_empty(),
    });
    let mut cols: Vec<String> = (1..=cfg.n_particles).map(|i| format!("x{i}")).collect();
    cols.extend(["psi", "H_psi_over_psi", "E", "rel_residual"].map(String::from));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut tables = Vec::new();
    for (name, r) in [("qes", &rq), ("baseline", &rb)] {
        let mut t = CsvTable::new(&col_refs).comment(format!("manybody {name} residuals"));
        for p in &r.points {
            let mut row = p.point.clone();
            row.extend([p.psi, p.h_psi_over_psi, p.energy, p.rel_residual]);
            t.push(row);
        }
        tables.push((format!("manybody_{name}.csv"), t));
    }
    let stdout = emit(cfg, "manybody", &report, &tables)?;
    Ok(Outcome { stdout, passed: failures.is_empty(), failures })
}

fn level_table(
    pot: &PotentialSpec,
    grid: &GridSpec,
    analytic: &[QuasiPolyWave],
    label: &str,
) -> Result<Vec<(String, CsvTable)>, CliError> {
    let t = discretize(pot, grid)?;
    let eig = lowest_eigenvalues(&t, analytic.len())?;
    let nodes = grid.nodes();
    let h = grid.step();
    let mut out = Vec::new();
    for (n, (lambda, wave)) in eig.iter().zip(analytic).enumerate() {
        let v = eigenvector(&t, *lambda)?;
        let exact: Vec<f64> = nodes.iter().map(|&r| wave.eval(r)).collect();
        let norm = (v.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
        let dot: f64 = v.iter().zip(&exact).map(|(a, b)| a * b).sum();
        let sign = if dot < 0.0 { -1.0 } else { 1.0 };
        let mut table = CsvTable::new(&["r", "V", "psi_numeric", "psi_analytic"])
            .comment(format!("{label} level n={n}, numeric eigenvalue {lambda:.16e}, unit L2 norm"));
        for (i, &r) in nodes.iter().enumerate() {
            table.push(vec![r, pot.eval(r), sign * v[i] / norm, exact[i]]);
        }
        out.push((format!("{label}_n{n}.csv"), table));
    }
    Ok(out)
}

/// CSV files: the potentials and, per level, numeric and analytic
/// eigenfunctions of both partners. Needs `--out`.
pub fn cmd_dump(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let dir: PathBuf = cfg.out.clone().ok_or_else(|| CliError::Invalid("dump needs --out <dir>".into()))?;
    let params = params_for(cfg)?;
    let exact = make_params(cfg.alpha.clone())?;
    let grid = GridSpec::radial(cfg.r_max, cfg.grid_points)?;
    let l = to_f64(&cfg.alpha) + 1.0;
    let plus = PotentialSpec::v_plus(&params);
    let minus = PotentialSpec::v_minus(&params);
    let mut pots = CsvTable::new(&["r", "v_plus", "v_minus", "v1"])
        .comment(format!("potentials alpha={} (v1 with l = alpha + 1)", format_rational(&cfg.alpha)));
    let mut vmin = (f64::INFINITY, 0.0);
    for r in grid.nodes() {
        let vm = minus.eval(r);
        if vm < vmin.0 {
            vmin = (vm, r);
        }
        pots.push(vec![r, plus.eval(r), vm, v1_value(l, r)]);
    }
    let chi_m = (0..=cfg.n_max).map(|n| chi_minus(&exact, n)).collect::<Result<Vec<_>, _>>()?;
    let chi_p: Vec<QuasiPolyWave> = (0..=cfg.n_max).map(|n| chi_plus(&exact, n)).collect();
    let (tm, tp) = rayon::join(
        || level_table(&minus, &grid, &chi_m, "chi_minus"),
        || level_table(&plus, &grid, &chi_p, "chi_plus"),
    );
    let mut tables = vec![("potentials.csv".to_string(), pots)];
    tables.extend(tm?);
    tables.extend(tp?);
    ensure_dir(&dir)?;
    for (f, t) in &tables {
        t.write(&dir.join(f))?;
    }
    let ground_min = grid.nodes().iter().map(|&r| chi_m[0].eval(r)).fold(f64::INFINITY, f64::min);
    let passed = ground_min > 0.0;
    let report = json!({
        "command": "dump",
        "config": cfg,
        "files": tables.iter().map(|(f, _)| f.clone()).collect::<Vec<_>>(),
        "v_minus_min": { "value": vmin.0, "r": vmin.1 },
        "chi_minus_ground_min": ground_min,
        "passed": passed,
    });
    let pretty = serde_json::to_string_pretty(&report).map_err(failed)?;
    fs::write(dir.join("dump.json"), &pretty).map_err(failed)?;
    let failures = if passed { vec![] } else { vec!["ground state not positive on the grid".into()] };
    Ok(Outcome { stdout: pretty, passed, failures })
}
