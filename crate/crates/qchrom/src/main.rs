fn main() {
    std::process::exit(qchrom::harness::cli(std::env::args().collect()));
}
