fn main() {
    std::process::exit(extremal_spectra::cli::run_from_env());
}
