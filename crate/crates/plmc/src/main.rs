fn main() {
    std::process::exit(plmc::run(std::env::args_os()));
}
