fn main() {
    std::process::exit(bohr_core::cli::run(std::env::args_os()));
}
