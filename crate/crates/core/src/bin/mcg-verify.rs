fn main() {
    std::process::exit(mcg_involutions::cli::run(std::env::args_os()));
}
