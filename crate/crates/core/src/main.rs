fn main() {
    std::process::exit(areal_mahler::cli::dispatch(std::env::args_os()));
}
