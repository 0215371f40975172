fn main() {
    std::process::exit(epit::cli::run(std::env::args_os()));
}
