//! Move-prediction statistics over a directory of SGF records: where the
//! recorded move lands in the ranking, against a random ranker.
//!
//! ```not_rust
//! cargo run --release --example benchmark_corpus -- [sgf-dir] [out-dir]
//! ```

use std::fs::File;
use std::path::PathBuf;

use seds::bench::{self, MoveFilter, Ranker};
use seds::solver::SolverConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let dir = args
        .next()
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/pro")));
    let out = args.next();

    let (records, failed) = bench::load_corpus(&dir)?;
    println!("{} records ({failed} unreadable)", records.len());
    let filter = MoveFilter::only(30..=100);
    let seds = bench::run_records(&records, &Ranker::Seds(SolverConfig::default()), &filter);
    let random = bench::run_records(&records, &Ranker::Random { seed: 1 }, &filter);

    let (r, baseline) = (seds.combined().survival(), random.combined().survival());
    println!("{} positions, moves 30 to 100", seds.positions_counted());
    println!("   x   R(x)  random");
    for x in [0, 50, 70, 80, 90, 95, 99] {
        println!("  {x:>2} {:>6.1} {:>7.1}", r.at(x), baseline.at(x));
    }

    if let Some(out) = out {
        std::fs::create_dir_all(&out)?;
        bench::write_histogram_csv(File::create(out.join("histogram.csv"))?, &seds)?;
        bench::write_survival_csv(File::create(out.join("survival.csv"))?, &seds)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}
