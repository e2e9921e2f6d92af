use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use proprep_cli::{run, Cli};

const BUDGET_HINT: &str = "raise a limit with --budget-subsets, --budget-partition-voters, \
--budget-branch-nodes, --budget-constant-r or --budget-seconds, or pick another solver with --solver";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            for line in &out.stderr {
                eprintln!("{line}");
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            if code == 3 {
                eprintln!("hint: {BUDGET_HINT}");
            }
            ExitCode::from(code)
        }
    }
}
