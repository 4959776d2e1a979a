fn main() {
    std::process::exit(geomgraph::cli::main_entry());
}
