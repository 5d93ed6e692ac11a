use std::process::ExitCode;

use superbgg_cli::{execute, parse_command, CliError};

fn run() -> Result<i32, CliError> {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let command = parse_command(&argv)?;
    let report = execute(&command)?;
    let text = report.render(command.params.format);
    match &command.params.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if report.pass == Some(false) {
        if let Some(r) = report.json.get("residual") {
            eprintln!("residual: {r}");
        }
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Help(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
