//! Solve a 19x19 middle-game position and print the ownership map, the
//! weakest blocks and the expected score.
//!
//! ```not_rust
//! cargo run --example evaluate_position
//! ```

use seds::analysis::score;
use seds::goboard::{Color, Coord};
use seds::positions;
use seds::solver::{evaluate, SolverConfig};

fn main() {
    let p = positions::full_board();
    let board = &p.board;
    let (state, stats) = evaluate(board, &SolverConfig::default());

    println!("{} blocks, {} empty points", board.block_count(), board.empty_count());
    println!("{} updates, converged: {}\n", stats.sweeps, stats.converged);

    // One character per point: X/O for stones, then ownership in five steps
    // from Black (#) to White (.).
    let shades = ['#', '+', '-', ',', '.'];
    for row in 0..board.size() {
        let line: String = (0..board.size())
            .map(|col| {
                let c = Coord::new(col as u8, row as u8);
                match board.color_at(c) {
                    Some(Color::Black) => 'X',
                    Some(Color::White) => 'O',
                    None => shades[((state.w(c).unwrap() * 4.0).round() as usize).min(4)],
                }
            })
            .collect();
        println!("{:>2} {line}", board.size() - row);
    }

    let mut blocks: Vec<_> = board
        .blocks()
        .map(|b| (state.s(b.id()).unwrap(), b))
        .collect();
    blocks.sort_by(|a, b| a.0.total_cmp(&b.0));
    println!("\nweakest blocks:");
    for (s, b) in blocks.iter().take(6) {
        let stones: Vec<String> = b.stones().map(|c| c.to_vertex(board.size())).collect();
        println!("  {:<5} s = {s:.3}  {}", b.color().to_string(), stones.join(" "));
    }

    let sc = score(board, &state);
    println!(
        "\nexpected area: Black {:.1}, White {:.1}, net {:+.1}",
        sc.black_total, sc.white_total, sc.net
    );
}
