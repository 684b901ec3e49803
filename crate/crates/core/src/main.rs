fn main() {
    std::process::exit(sympow::cli::run(std::env::args_os()));
}
