//! One-ply move ranking: every legal move is played, the position is
//! re-solved incrementally and the moves are ordered by the resulting score.

use seds::analysis::{percentile_of, rank_moves, rank_moves_parallel};
use seds::goboard::Color;
use seds::positions;
use seds::solver::SolverConfig;

fn main() {
    let p = positions::mutual_atari();
    let config = SolverConfig::default();

    for mover in [Color::Black, Color::White] {
        let ranking = rank_moves(&p.board, mover, &config);
        println!("{mover} to play, {} legal moves", ranking.len());
        for e in ranking.entries.iter().take(5) {
            println!(
                "  {:<3} {:+8.3}  percentile {}",
                e.coord.to_vertex(9),
                e.score,
                percentile_of(&ranking, e.coord).unwrap()
            );
        }
        assert_eq!(ranking, rank_moves_parallel(&p.board, mover, &config));
    }
    println!("\nthe parallel ranking matched the sequential one exactly");
}
