//! Local update rules.
//!
//! A neighbour contributes to the chance that the point has a finally
//! white (`wc`) or finally black (`bc`) neighbour:
//!
//! | neighbour              | wc      | bc      |
//! |------------------------|---------|---------|
//! | empty point with `w`   | `w`     | `1 - w` |
//! | white block with `s`   | `s`     | `1 - s` |
//! | black block with `s`   | `1 - s` | `s`     |
//!
//! and `w̄ = 1 - Π(1 - wc)`, `b̄ = 1 - Π(1 - bc)`, `w = w̄ / (w̄ + b̄)`.

use serde::{Deserialize, Serialize};

use super::{AtariAdjustment, SedsState, SolveError};
use crate::goboard::{Board, BlockId, Color, Coord, RawUnit};

/// Probabilities that at least one neighbour of a point ends up white/black.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BarValues {
    pub w_bar: f64,
    pub b_bar: f64,
}

#[inline]
pub(crate) fn bar_values_at(board: &Board, state: &SedsState, index: usize) -> BarValues {
    let mut no_white = 1.0;
    let mut no_black = 1.0;
    board.for_each_point_neighbour(index, |unit| {
        let (wc, bc) = match unit {
            RawUnit::Point(n) => {
                let w = state.w_at(n);
                (w, 1.0 - w)
            }
            RawUnit::Block(id) => {
                let s = state.s_at(id);
                match board.block(id).unwrap().color() {
                    Color::White => (s, 1.0 - s),
                    Color::Black => (1.0 - s, s),
                }
            }
        };
        no_white *= 1.0 - wc;
        no_black *= 1.0 - bc;
    });
    BarValues {
        w_bar: 1.0 - no_white,
        b_bar: 1.0 - no_black,
    }
}

/// Bar values of an empty point under `state`.
pub fn bar_values(board: &Board, state: &SedsState, point: Coord) -> BarValues {
    assert!(board.is_empty_at(point), "{point} is not an empty point");
    bar_values_at(board, state, point.index(board.size()))
}

/// `w = w̄ / (w̄ + b̄)`.
pub fn update_point(bar: BarValues) -> Result<f64, SolveError> {
    let total = bar.w_bar + bar.b_bar;
    if total <= 0.0 {
        return Err(SolveError::DegenerateBars);
    }
    Ok(bar.w_bar / total)
}

#[inline]
pub(crate) fn point_value(board: &Board, state: &SedsState, index: usize) -> Result<f64, SolveError> {
    update_point(bar_values_at(board, state, index))
}

/// Survival of a block: one minus the chance that all touching opponent
/// blocks live and every liberty ends up with the opponent.
pub fn update_block(board: &Board, state: &SedsState, id: BlockId, adjustment: AtariAdjustment) -> f64 {
    let block = board.block(id).expect("update_block on a live block");
    let mut product = 1.0;
    for &k in block.adjacent_blocks() {
        product *= state.s_at(k);
    }
    let opponent_owns = |w: f64| match block.color() {
        Color::Black => w,
        Color::White => 1.0 - w,
    };
    let liberties = block.liberty_set();
    let adjust = match adjustment {
        AtariAdjustment::Off => false,
        AtariAdjustment::Always => true,
        AtariAdjustment::MultiLibertyOnly => liberties.len() >= 2,
    };
    // the first smallest factor is replaced by 1.0
    let skip = if adjust {
        liberties
            .iter()
            .min_by(|&a, &b| opponent_owns(state.w_at(a)).total_cmp(&opponent_owns(state.w_at(b))))
    } else {
        None
    };
    for i in liberties.iter() {
        if Some(i) != skip {
            product *= opponent_owns(state.w_at(i));
        }
    }
    1.0 - product
}
