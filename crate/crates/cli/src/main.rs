use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qschur_cli::args::Cli;
use qschur_cli::cache::Cache;
use qschur_cli::commands::{run, Context};
use qschur_cli::{CliError, Status};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Status::Usage as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cache = match &cli.cache_dir {
        Some(dir) => match Cache::open(dir) {
            Ok(c) => c,
            Err(e) => return fail(&e),
        },
        None => Cache::disabled(),
    };
    let ctx = Context {
        format: cli.format,
        cache,
        jobs: cli.jobs,
    };
    match run(&cli.command, &ctx) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.status as u8)
        }
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("qschur: {e}");
    ExitCode::from(e.status() as u8)
}
