use clap::Parser;
use lexsect_cli::{run, write_report, Cli, EXIT_INTERNAL};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    if let Some(report) = &outcome.report {
        if let Err(e) = write_report(report, cli.command.args().output.as_deref()) {
            eprintln!("lexsect: cannot write report: {e}");
            std::process::exit(EXIT_INTERNAL);
        }
    }
    if let Some(message) = &outcome.message {
        eprintln!("lexsect: {message}");
    }
    std::process::exit(outcome.code);
}
