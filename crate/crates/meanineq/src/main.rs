fn main() {
    std::process::exit(meanineq::cli::cli_run(std::env::args_os()));
}
