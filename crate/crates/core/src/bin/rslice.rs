use std::process::ExitCode;

fn main() -> ExitCode {
    let out = reductive_slices::cli::run(std::env::args_os(), &mut std::io::stdin());
    print!("{}", out.stdout);
    ExitCode::from(out.code as u8)
}
