fn main() {
    let out = ybx::cli::run(std::env::args_os());
    if out.code == 2 {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    std::process::exit(out.code);
}
