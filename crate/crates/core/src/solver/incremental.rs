use super::worklist::run;
use super::{SedsState, SolveStats, SolverConfig};
use crate::goboard::{Board, MoveDelta, RawUnit, Unit};

/// Re-solves after one move, starting from the solved pre-move state and
/// touching only the area the move affects.
///
/// Points that became empty through a capture start at 0.5. The block
/// holding the new stone inherits the smallest survival value among the
/// blocks it merged (1.0 for a lone stone). Only the changed units and their
/// neighbours are seeded.
pub fn resolve_incremental(
    board_after: &Board,
    prev: &SedsState,
    delta: &MoveDelta,
    config: &SolverConfig,
) -> (SedsState, SolveStats) {
    let size = board_after.size();
    if delta.is_empty() {
        return (prev.clone(), SolveStats::new(size, board_after.block_id_bound()));
    }

    let mut state = SedsState::init(board_after);
    for i in 0..size * size {
        if board_after.cell(i).is_none() {
            let old = prev.w_at(i);
            if !old.is_nan() {
                state.w_mut()[i] = old;
            }
        }
    }
    for b in board_after.blocks() {
        let id = b.id();
        if state.clamped_at(id) {
            continue;
        }
        let inherited = if Some(id) == delta.placed_block {
            delta
                .merged
                .iter()
                .filter_map(|&m| prev.s(m))
                .fold(1.0, f64::min)
        } else {
            prev.s(id).unwrap_or(1.0)
        };
        state.s_mut()[id.0 as usize] = inherited;
    }

    let mut seeds: Vec<RawUnit> = Vec::new();
    for unit in delta.changed_units() {
        let raw = match unit {
            Unit::Point(c) => RawUnit::Point(c.index(size)),
            Unit::Block(id) => RawUnit::Block(id),
        };
        seeds.push(raw);
        match raw {
            RawUnit::Point(i) => board_after.for_each_point_neighbour(i, |n| seeds.push(n)),
            RawUnit::Block(id) => {
                if let Some(block) = board_after.block(id) {
                    seeds.extend(block.liberty_set().iter().map(RawUnit::Point));
                    seeds.extend(block.adjacent_blocks().iter().map(|&a| RawUnit::Block(a)));
                }
            }
        }
    }
    let stats = run(board_after, &mut state, config, seeds);
    (state, stats)
}
