//! Command-line front end of the `qes` binary.
//!
//! Every subcommand takes the same configuration flags; an optional
//! `key = value` file supplies defaults and explicit flags override it.
//! Exit status: 0 when all checks pass, 1 when a check fails or a run
//! cannot complete, 2 for invalid input.

pub mod commands;
pub mod csv;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;

use crate::error::Error;
use crate::manybody::reduction_constants;
use crate::poly::rational::{format_rational, parse_rational, rat, Rational};

pub use csv::{fmt_f64, CsvTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qes", version, about = "Exact and numerical checks of a QES Calogero extension")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Numeric vs analytic spectra of both partner potentials.
    Spectrum(ConfigArgs),
    /// Full invariant suite; nonzero exit lists failing checks.
    Verify(ConfigArgs),
    /// Basis of the symmetric polynomials P_{k,q} and their count.
    Pkq(ConfigArgs),
    /// Finite-difference residual of many-body eigenfunctions.
    Manybody(ConfigArgs),
    /// Potentials and wavefunctions on a grid, as CSV.
    Dump(ConfigArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Raw flags. Everything is optional so the config file can fill gaps.
#[derive(Args, Debug, Default, Clone)]
pub struct ConfigArgs {
    /// Radial parameter alpha > 0 (fraction or decimal).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Particle count N >= 2.
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n_particles: Option<String>,
    /// Pair coupling g >= -1/2.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
    /// Degree k of P_{k,q}.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Radial quantum number for `manybody`.
    #[arg(long = "n", allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Highest level index (inclusive).
    #[arg(long = "n-max", allow_hyphen_values = true)]
    pub n_max: Option<String>,
    #[arg(long = "r-max", allow_hyphen_values = true)]
    pub r_max: Option<String>,
    /// Interior points of the coarse grid; the fine grid has twice as many.
    #[arg(long = "grid-points", allow_hyphen_values = true)]
    pub grid_points: Option<String>,
    /// Seed of the many-body point sampler.
    #[arg(long, allow_hyphen_values = true)]
    pub seed: Option<String>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// `key = value` file of defaults.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Multiply g1 by this factor (test hook).
    #[arg(long = "detune-g1", hide = true, allow_hyphen_values = true)]
    pub detune_g1: Option<String>,
}

/// Fully resolved and validated configuration, embedded in every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    #[serde(with = "crate::poly::rational::serde_string")]
    pub alpha: Rational,
    #[serde(rename = "N")]
    pub n_particles: usize,
    #[serde(with = "crate::poly::rational::serde_string")]
    pub g: Rational,
    pub k: u32,
    pub n: u32,
    pub n_max: u32,
    pub r_max: f64,
    pub grid_points: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detune_g1: Option<String>,
}

impl RunConfig {
    pub fn detune_factor(&self) -> Option<Rational> {
        self.detune_g1.as_deref().map(|s| parse_rational(s).expect("validated at parse time"))
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: Rational::from_integer(1.into()),
            n_particles: 3,
            g: Rational::from_integer(0.into()),
            k: 0,
            n: 0,
            n_max: 5,
            r_max: crate::spectral::DEFAULT_R_MAX,
            grid_points: crate::spectral::DEFAULT_POINTS,
            seed: 7,
            out: None,
            format: Format::Json,
            detune_g1: None,
        }
    }
}

/// A failure with its exit status.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Invalid(_) => EXIT_INVALID,
            Self::Failed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Invalid(m) => write!(f, "invalid input: {m}"),
            Self::Failed(m) => write!(f, "{m}"),
        }
    }
}

/// Library errors about parameters are input problems; the rest are failures.
impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Domain(_) | Error::Parse(_) => Self::Invalid(e.to_string()),
            _ => Self::Failed(e.to_string()),
        }
    }
}

/// Parses a `key = value` file; `#` starts a comment. Keys may use `-` or `_`.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Invalid(format!("config line {}: expected key = value", i + 1)))?;
        let key = k.trim().replace('-', "_");
        let key = if key.eq_ignore_ascii_case("n_particles") { "N".to_string() } else { key };
        map.insert(key, v.trim().to_string());
    }
    Ok(map)
}

const CONFIG_KEYS: &[&str] =
    &["alpha", "N", "g", "k", "n", "n_max", "r_max", "grid_points", "seed", "out", "format", "detune_g1"];

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    v.parse::<T>().map_err(|e| CliError::Invalid(format!("--{key} = {v:?}: {e}")))
}

fn parse_q(key: &str, v: &str) -> Result<Rational, CliError> {
    parse_rational(v).map_err(|e| CliError::Invalid(format!("--{key} = {v:?}: {e}")))
}

/// Merges flags over the config file over defaults, then validates.
pub fn resolve(args: &ConfigArgs) -> Result<RunConfig, CliError> {
    let file = match &args.config {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", p.display())))?;
            parse_config_file(&text)?
        }
        None => BTreeMap::new(),
    };
    if let Some(bad) = file.keys().find(|k| !CONFIG_KEYS.contains(&k.as_str())) {
        return Err(CliError::Invalid(format!("unknown config key {bad:?}")));
    }
    let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| file.get(key).cloned());
    let mut c = RunConfig::default();
    if let Some(v) = pick(&args.alpha, "alpha") {
        c.alpha = parse_q("alpha", &v)?;
    }
    if let Some(v) = pick(&args.n_particles, "N") {
        c.n_particles = parse_num("N", &v)?;
    }
    if let Some(v) = pick(&args.g, "g") {
        c.g = parse_q("g", &v)?;
    }
    if let Some(v) = pick(&args.k, "k") {
        c.k = parse_num("k", &v)?;
    }
    if let Some(v) = pick(&args.n, "n") {
        c.n = parse_num("n", &v)?;
    }
    if let Some(v) = pick(&args.n_max, "n_max") {
        c.n_max = parse_num("n-max", &v)?;
    }
    if let Some(v) = pick(&args.r_max, "r_max") {
        c.r_max = parse_num("r-max", &v)?;
    }
    if let Some(v) = pick(&args.grid_points, "grid_points") {
        c.grid_points = parse_num("grid-points", &v)?;
    }
    if let Some(v) = pick(&args.seed, "seed") {
        c.seed = parse_num("seed", &v)?;
    }
    c.out = args.out.clone().or_else(|| file.get("out").map(PathBuf::from));
    c.format = match (args.format, file.get("format")) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::from_str(s, true).map_err(|e| CliError::Invalid(format!("format: {e}")))?,
        (None, None) => Format::Json,
    };
    c.detune_g1 = pick(&args.detune_g1, "detune_g1");
    validate(&c)?;
    Ok(c)
}

fn validate(c: &RunConfig) -> Result<(), CliError> {
    let bad = |m: String| Err(CliError::Invalid(m));
    if !c.alpha.is_positive() {
        return bad(format!("alpha must be > 0, got {}", format_rational(&c.alpha)));
    }
    if c.g < rat(-1, 2) {
        return bad(format!("g must be >= -1/2, got {}", format_rational(&c.g)));
    }
    if c.n_particles < 2 {
        return bad(format!("N must be >= 2, got {}", c.n_particles));
    }
    reduction_constants(c.n_particles, &c.g)?;
    if !(c.r_max.is_finite() && c.r_max > 0.0) {
        return bad(format!("r-max must be positive, got {}", c.r_max));
    }
    if c.grid_points < 3 {
        return bad(format!("grid-points must be >= 3, got {}", c.grid_points));
    }
    if (c.n_max as usize) >= c.grid_points {
        return bad("n-max must be below the number of grid points".into());
    }
    if let Some(d) = &c.detune_g1 {
        let f = parse_q("detune-g1", d)?;
        if !f.is_positive() {
            return bad("detune-g1 must be positive".into());
        }
    }
    Ok(())
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status. Diagnostics go to stderr, reports to stdout.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match commands::dispatch(&cli.command) {
        Ok(outcome) => {
            if !outcome.stdout.is_empty() {
                println!("{}", outcome.stdout);
            }
            if outcome.passed {
                EXIT_OK
            } else {
                for f in &outcome.failures {
                    eprintln!("FAILED: {f}");
                }
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(list: &[&str]) -> ConfigArgs {
        let mut full = vec!["qes", "spectrum"];
        full.extend_from_slice(list);
        match Cli::try_parse_from(full).unwrap().command {
            Command::Spectrum(a) => a,
            _ => unreachable!(),
        }
    }

    #[test]
    fn negative_values_reach_validation() {
        let a = args(&["--alpha", "-1"]);
        assert_eq!(a.alpha.as_deref(), Some("-1"));
        let err = resolve(&a).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_INVALID);
        assert!(resolve(&args(&["--g", "-3/4"])).is_err());
        assert!(resolve(&args(&["--g", "-1/2"])).is_ok());
        assert!(resolve(&args(&["--N", "1"])).is_err());
    }

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        fs::write(&path, "# sweep\nalpha = 3/2\nn-max = 2\nN = 4 # inline\n").unwrap();
        let p = path.to_str().unwrap();
        let c = resolve(&args(&["--config", p, "--n-max", "3"])).unwrap();
        assert_eq!(c.alpha, rat(3, 2));
        assert_eq!(c.n_max, 3);
        assert_eq!(c.n_particles, 4);
        fs::write(&path, "colour = red\n").unwrap();
        assert!(resolve(&args(&["--config", p])).is_err());
    }

    #[test]
    fn decimal_alpha_is_exact() {
        assert_eq!(resolve(&args(&["--alpha", "0.5"])).unwrap().alpha, rat(1, 2));
    }
}
