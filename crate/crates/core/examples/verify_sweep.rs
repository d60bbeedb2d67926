//! Library-level sweep over every identity, printed as a table.
//!
//! ```bash
//! cargo run --release -p hookcontent --example verify_sweep -- 10 4
//! ```

use hookcontent::verify::{run_sweep, SweepConfig, Workers};

fn main() -> Result<(), hookcontent::Error> {
    let mut args = std::env::args().skip(1);
    let n_max = args
        .next()
        .map_or(8, |s| s.parse().expect("n_max is an integer"));
    let workers = args.next().map_or(Ok(Workers::Auto), |s| s.parse())?;

    let config = SweepConfig {
        n_max,
        trial_count: 50,
        workers,
        ..SweepConfig::default()
    };
    let report = run_sweep(&config)?;
    print!("{}", report.to_table());
    std::process::exit(report.exit_code());
}
