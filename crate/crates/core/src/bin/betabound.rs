fn main() {
    std::process::exit(betabound::cli::run(std::env::args_os()));
}
