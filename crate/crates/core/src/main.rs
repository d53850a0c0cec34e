fn main() {
    std::process::exit(common_eig::cli::run_cli(std::env::args_os()));
}
