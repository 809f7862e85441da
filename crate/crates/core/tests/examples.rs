//! Every example must run to completion. `cargo test` builds them into
//! `target/<profile>/examples`, next to this binary's `deps` directory.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 10] = [
    "exceptional_laguerre",
    "partner_potentials",
    "ladder_operators",
    "numeric_spectrum",
    "overlap_integrals",
    "pct_equivalence",
    "calogero_polynomials",
    "manybody_residual",
    "conditional_solvability",
    "command_line",
];

fn example_path(name: &str) -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let path = exe.parent()?.parent()?.join("examples").join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
    path.exists().then_some(path)
}

#[test]
fn all_examples_run() {
    let listed: Vec<_> = std::fs::read_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/examples"))
        .unwrap()
        .map(|e| e.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    assert_eq!(listed.len(), EXAMPLES.len(), "example list out of date: {listed:?}");
    for name in EXAMPLES {
        let Some(path) = example_path(name) else {
            panic!("example {name} was not built; run through `cargo test`");
        };
        let out = Command::new(&path).output().unwrap();
        assert!(out.status.success(), "{name} failed:\n{}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stdout.is_empty(), "{name} printed nothing");
    }
}
