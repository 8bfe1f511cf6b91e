//! Evaluation and ranking times at fixed move numbers of the bundled games.

use std::path::Path;

use seds::bench;
use seds::solver::SolverConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/data/pro"));
    let profile = bench::timing_profile(dir, &SolverConfig::default(), &[10, 30, 100, 130, 200, 300])?;
    bench::write_timing_csv(std::io::stdout(), &profile)?;
    Ok(())
}
