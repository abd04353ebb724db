mod args;
mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use tensor_growth::report::Format;
use tensor_growth::verify::{run_all, run_criterion};
use tensor_growth::{Error, Result};

use args::{Cli, Command, FormatArg};

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Domain(_) => 2,
        Error::Resource(_) => 3,
        Error::Internal(_) => 4,
    }
}

fn report_error(kind: &str, code: u8, message: &str) {
    let body = serde_json::json!({ "error": { "kind": kind, "code": code, "message": message } });
    eprintln!("{body}");
}

fn emit(cli: &Cli, bytes: &[u8]) -> Result<()> {
    let io_err = |e: io::Error| Error::resource(format!("cannot write report: {e}"));
    match &cli.output {
        Some(path) => {
            let mut f = BufWriter::new(File::create(path).map_err(io_err)?);
            f.write_all(bytes).map_err(io_err)?;
            f.flush().map_err(io_err)
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes).map_err(io_err)?;
            out.flush().map_err(io_err)
        }
    }
}

/// Returns `Ok(false)` when `verify` ran but some criterion failed.
fn run(cli: &Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Error::domain("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
    }
    let table = match &cli.command {
        Command::Bn { family, regime, m, n, nmax } => commands::bn(*family, regime, *m, *n, *nmax)?,
        Command::Decompose { n, regime } => commands::decompose(*n, regime)?,
        Command::Tilting { m, regime, character } => commands::tilting(*m, regime, *character)?,
        Command::Oracle { n, m, p } => commands::oracle(*n, *m, *p)?,
        Command::Asymptotics { kind, n, m, p, s, emin, emax } => {
            commands::asymptotics(*kind, n, *m, *p, s, *emin, *emax)?
        }
        Command::Delta { regime, nmax, window, series } => commands::delta(regime, *nmax, window, *series)?,
        Command::Counterexample { m } => commands::counterexample(*m)?,
        Command::Verify { criterion } => {
            let results = match criterion {
                Some(k) => vec![run_criterion(*k)?],
                None => run_all(),
            };
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!("{r}\n"));
            }
            let passed = results.iter().filter(|r| r.passed).count();
            text.push_str(&format!("{passed}/{} criteria passed\n", results.len()));
            emit(cli, text.as_bytes())?;
            return Ok(passed == results.len());
        }
    };
    let format = match cli.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    emit(cli, table.render(format)?.as_bytes())?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let message = e.render().to_string();
            report_error("domain", 2, message.trim_end());
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            let code = exit_code(&err);
            report_error(err.kind(), code, &err.to_string());
            ExitCode::from(code)
        }
    }
}
