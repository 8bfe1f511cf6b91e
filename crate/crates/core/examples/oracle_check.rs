//! Compare the worklist solver against plain synchronous iteration on
//! random 9x9 positions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use seds::positions::random_position;
use seds::solver::{solve, solve_dense_oracle, SedsState, SolverConfig};

fn main() {
    let config = SolverConfig {
        stop_value: 1e-5,
        max_iter: 1000,
        ..Default::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut deviations = Vec::new();
    for _ in 0..200 {
        let board = random_position(9, rng.gen_range(10..=40), &mut rng);
        let mut fast = SedsState::init(&board);
        let stats = solve(&board, &mut fast, &config);
        match solve_dense_oracle(&board, &SedsState::init(&board), &config) {
            Ok(dense) => deviations.push((fast.max_deviation(&dense), stats.sweeps)),
            Err(e) => println!("dense iteration gave up: {e}"),
        }
    }
    deviations.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = deviations.len();
    println!("{n} positions compared");
    for q in [0.5, 0.9, 0.99, 1.0] {
        let (d, sweeps) = deviations[((n as f64 * q) as usize).min(n - 1)];
        println!("  quantile {q:<4}: deviation {d:.2e} ({sweeps} updates)");
    }
}
