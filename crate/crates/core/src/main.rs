fn main() {
    let code = stablerep::cli::main();
    std::process::exit(code);
}
