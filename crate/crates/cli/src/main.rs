fn main() {
    std::process::exit(chorddia_cli::run(std::env::args_os()));
}
