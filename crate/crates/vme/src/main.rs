fn main() {
    std::process::exit(vme::cli::main_with_args(std::env::args_os()));
}
