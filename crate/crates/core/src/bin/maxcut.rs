fn main() {
    std::process::exit(maxcut_grover::cli::run(std::env::args_os()));
}
