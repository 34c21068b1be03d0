fn main() {
    std::process::exit(seshadri::cli::main_with_args(std::env::args_os()));
}
