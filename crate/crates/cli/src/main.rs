use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use groth_cli::{run, thread_count, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = thread_count(cli.threads).and_then(|threads| {
        if let Some(t) = threads {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| groth_cli::CliError::Usage(format!("--threads: {e}")))?;
        }
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        run(&cli, &mut lock)?;
        lock.flush()?;
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("groth: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
