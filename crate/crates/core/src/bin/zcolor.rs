fn main() {
    std::process::exit(zcolor::cli::run(std::env::args_os()));
}
