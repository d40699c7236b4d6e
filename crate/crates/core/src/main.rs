fn main() {
    std::process::exit(chevkern::cli::run(std::env::args_os()));
}
