fn main() {
    std::process::exit(wem_cli::run(std::env::args_os()));
}
