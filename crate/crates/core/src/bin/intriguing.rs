fn main() {
    std::process::exit(intriguing::cli::run(std::env::args_os()));
}
