//! Runs a JSON experiment configuration through the library entry point.
//!
//!     cargo run --example run_config -- configs/sweep.json /tmp/out

use std::path::PathBuf;

use gaplab::config::Overrides;
use gaplab::run::run_file;

fn main() {
    let mut args = std::env::args().skip(1);
    let config = PathBuf::from(args.next().unwrap_or_else(|| "configs/sweep.json".into()));
    let out = args.next().map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    match run_file(&config, &out, &Overrides::default()) {
        Ok(paths) => {
            for p in paths {
                println!("{}", p.display());
                print!("{}", std::fs::read_to_string(&p).unwrap_or_default());
            }
        }
        Err(e) => {
            eprintln!("{}", e.diagnostic());
            std::process::exit(e.exit_code());
        }
    }
}
