fn main() {
    std::process::exit(nakayama_ext::cli::run(std::env::args_os()));
}
