fn main() {
    std::process::exit(tridisk::cli::main_with_args(std::env::args_os()));
}
