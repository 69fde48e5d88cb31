fn main() {
    std::process::exit(ramsey_forge::cli::main_with_args(std::env::args_os()));
}
