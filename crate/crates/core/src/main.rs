fn main() {
    std::process::exit(dscop::cli::main_with_args(std::env::args_os()));
}
