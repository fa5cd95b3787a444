use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let pretty = args.iter().any(|a| a == "--pretty");
    let outcome = braidkit_cli::run(args);
    println!("{}", outcome.render(pretty));
    ExitCode::from(outcome.code as u8)
}
