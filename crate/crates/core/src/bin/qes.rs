fn main() {
    std::process::exit(qes_calogero::cli::run(std::env::args_os()));
}
