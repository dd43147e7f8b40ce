fn main() {
    std::process::exit(induced_cli::main_with(std::env::args_os()) as i32);
}
