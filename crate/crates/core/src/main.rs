fn main() {
    std::process::exit(inner_analytic::cli::run(std::env::args_os()));
}
