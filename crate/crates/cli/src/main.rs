fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = conet::run(&args);
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
