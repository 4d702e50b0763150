mod commands;
mod config;
mod output;

use clap::Parser;

fn main() {
    // clap itself exits with code 2 on usage errors
    let cli = config::Cli::parse();
    match commands::run(&cli) {
        Ok((content, code)) => {
            if let Err(message) = commands::emit_result(&cli, &content) {
                eprintln!("error: {message}");
                std::process::exit(2);
            }
            std::process::exit(code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
