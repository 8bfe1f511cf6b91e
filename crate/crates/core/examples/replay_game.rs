//! Walk through a recorded game, re-solving incrementally after every
//! move, and report how much work each move caused.
//!
//! ```not_rust
//! cargo run --example replay_game -- [path/to/game.sgf]
//! ```

use std::path::PathBuf;

use seds::analysis::score;
use seds::sgf::{parse_sgf, Replayer};
use seds::solver::{evaluate, resolve_incremental, SolverConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args_os().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/data/pro/1846-shusaku-inseki.sgf"))
    });
    let record = parse_sgf(&std::fs::read(&path)?)?;
    println!("{}: {} moves on {}x{}", path.display(), record.moves.len(), record.board_size, record.board_size);

    let config = SolverConfig::default();
    let mut replayer = Replayer::new(&record)?;
    let (mut state, _) = evaluate(replayer.board(), &config);
    while let Some(delta) = replayer.advance()? {
        let (next, stats) = resolve_incremental(replayer.board(), &state, &delta, &config);
        state = next;
        let n = replayer.played();
        if n % 25 == 0 {
            let net = score(replayer.board(), &state).net;
            println!("move {n:>3}: {:>5} updates, net {net:+7.1}", stats.sweeps);
        }
    }
    Ok(())
}
