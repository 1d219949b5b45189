fn main() {
    std::process::exit(detdiv::cli::run(std::env::args_os()));
}
