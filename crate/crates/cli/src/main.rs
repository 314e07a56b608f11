fn main() {
    std::process::exit(liegeo::commands::main_with_args(std::env::args_os()));
}
