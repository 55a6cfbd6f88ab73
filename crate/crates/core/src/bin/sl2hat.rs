fn main() {
    std::process::exit(affine_crystals::cli::run(std::env::args_os()));
}
