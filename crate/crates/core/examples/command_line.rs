//! Drives the `qes` front end in-process, the same code path as the binary.

use qes_calogero::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("qes-command-line-example");
    let out = dir.to_string_lossy().to_string();
    let runs: [&[&str]; 4] = [
        &["qes", "verify", "--alpha", "3/2", "--n-max", "3", "--out", &out],
        &["qes", "pkq", "--N", "3", "--k", "3", "--out", &out],
        &["qes", "spectrum", "--alpha", "-1"],
        &["qes", "manybody", "--N", "5"],
    ];
    for args in runs {
        let code = run(args.iter().copied());
        eprintln!("{:?} -> exit {code}", &args[1..]);
    }
    eprintln!("reports written to {}", dir.display());
}
