use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gaplab::config::Overrides;
use gaplab::run::run_file;

/// Spectral gap experiments driven by a JSON configuration.
#[derive(Parser)]
#[command(name = "gaplab", version)]
struct Cli {
    /// Command to run; overrides the `command` field of the configuration.
    command: Option<String>,
    #[arg(long)]
    config: PathBuf,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// Truncation size N.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    max_period: Option<usize>,
    #[arg(long, env = "GAPLAB_THREADS")]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("{}", serde_json::json!({"error": "threads", "message": e.to_string()}));
            return ExitCode::from(2);
        }
    }
    let overrides = Overrides { command: cli.command, seed: cli.seed, n: cli.n, max_period: cli.max_period };
    match run_file(&cli.config, &cli.out, &overrides) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
