//! Quadrupole and dipole indicators over a solved position. A large
//! quadrupole marks points where the two colours meet crosswise.

use seds::analysis::{dipole_indicator, quadrupole_indicator};
use seds::positions;
use seds::solver::{evaluate, SolverConfig};

fn main() {
    let board = &positions::full_board().board;
    let (state, _) = evaluate(board, &SolverConfig::default());

    let mut points: Vec<_> = board
        .empty_points()
        .map(|c| (quadrupole_indicator(board, &state, c).unwrap(), c))
        .collect();
    points.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));

    println!("point  quadrupole  dipole (dx, dy)   |dipole|");
    for (q, c) in points.iter().take(10) {
        let d = dipole_indicator(board, &state, *c).unwrap();
        println!(
            "{:<6} {q:>10.3}  ({:+.3}, {:+.3})  {:>8.3}",
            c.to_vertex(board.size()),
            d.dx,
            d.dy,
            d.magnitude()
        );
    }
}
