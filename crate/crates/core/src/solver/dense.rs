//! Synchronous (Jacobi) iteration over every unit; a slow, independent
//! reference for the worklist solver.

use super::rules::{point_value, update_block};
use super::{AtariAdjustment, SedsState, SolveError, SolverConfig};
use crate::goboard::Board;

pub const DENSE_SWEEP_CAP: usize = 10_000;

/// One synchronous sweep: every unclamped unit is recomputed from `state`.
pub fn dense_sweep(board: &Board, state: &SedsState, adjustment: AtariAdjustment) -> SedsState {
    let mut next = state.clone();
    for i in 0..board.size() * board.size() {
        if board.cell(i).is_none() {
            next.w_mut()[i] = point_value(board, state, i).expect("every neighbour feeds one side");
        }
    }
    for b in board.blocks() {
        if !state.clamped_at(b.id()) {
            next.s_mut()[b.id().0 as usize] = update_block(board, state, b.id(), adjustment);
        }
    }
    next
}

/// Sweeps until no value moves by `stop_value / 10` or more.
pub fn solve_dense_oracle(board: &Board, state: &SedsState, config: &SolverConfig) -> Result<SedsState, SolveError> {
    let tolerance = config.stop_value / 10.0;
    let mut current = state.clone();
    let mut residual = f64::INFINITY;
    for _ in 0..DENSE_SWEEP_CAP {
        let next = dense_sweep(board, &current, config.atari_adjustment);
        residual = next.max_deviation(&current);
        current = next;
        if residual < tolerance {
            return Ok(current);
        }
    }
    Err(SolveError::NoConvergence {
        sweeps: DENSE_SWEEP_CAP,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goboard::Color;

    #[test]
    fn empty_board_is_a_fixed_point() {
        let board = Board::new(7).unwrap();
        let st = SedsState::init(&board);
        let out = solve_dense_oracle(&board, &st, &SolverConfig::default()).unwrap();
        assert!(out.points().all(|(_, w)| w == 0.5));
    }

    #[test]
    fn extreme_white_is_unchanged() {
        let board = Board::build_position(
            9,
            &crate::goboard::vertices("c3 c4 d5", 9),
            &crate::goboard::vertices("e5 f5 e6", 9),
        )
        .unwrap();
        let st = SedsState::extreme(&board, Color::White);
        assert_eq!(dense_sweep(&board, &st, AtariAdjustment::MultiLibertyOnly), st);
    }
}
