fn main() {
    std::process::exit(autotower::cli::main_with_args(std::env::args_os()));
}
