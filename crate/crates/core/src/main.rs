fn main() {
    std::process::exit(csmall::cli::main_entry());
}
