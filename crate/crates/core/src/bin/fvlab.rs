fn main() {
    std::process::exit(fvlab::cli::main_with_args(std::env::args_os()));
}
