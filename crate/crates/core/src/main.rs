fn main() {
    std::process::exit(pmtopo::cli::run(std::env::args_os()));
}
