fn main() {
    std::process::exit(spindefect::cli::run(std::env::args_os()));
}
