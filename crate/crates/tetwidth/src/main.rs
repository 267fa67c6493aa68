fn main() {
    std::process::exit(tetwidth::cli::main());
}
