use std::collections::VecDeque;

use super::rules::{point_value, update_block};
use super::{SedsState, SolveStats, SolverConfig};
use crate::goboard::{Board, RawUnit};

/// Gauss–Seidel worklist iteration to a fixed point, in place.
///
/// Every empty point (row-major) and then every unclamped block (by id) is
/// queued once. A popped unit is recomputed from the current values of its
/// neighbours; if it moved by `stop_value` or more, its neighbours are queued
/// again unless they already used up `max_iter` updates.
pub fn solve(board: &Board, state: &mut SedsState, config: &SolverConfig) -> SolveStats {
    let size = board.size();
    let points = (0..size * size)
        .filter(|&i| board.cell(i).is_none())
        .map(RawUnit::Point);
    let blocks = board
        .blocks()
        .filter(|b| !state.clamped_at(b.id()))
        .map(|b| RawUnit::Block(b.id()));
    let seeds: Vec<RawUnit> = points.chain(blocks).collect();
    run(board, state, config, seeds)
}

struct Queue {
    items: VecDeque<RawUnit>,
    point_queued: Vec<bool>,
    block_queued: Vec<bool>,
}

impl Queue {
    fn push(&mut self, unit: RawUnit) {
        let flag = match unit {
            RawUnit::Point(i) => &mut self.point_queued[i],
            RawUnit::Block(id) => &mut self.block_queued[id.0 as usize],
        };
        if !*flag {
            *flag = true;
            self.items.push_back(unit);
        }
    }

    fn pop(&mut self) -> Option<RawUnit> {
        let unit = self.items.pop_front()?;
        match unit {
            RawUnit::Point(i) => self.point_queued[i] = false,
            RawUnit::Block(id) => self.block_queued[id.0 as usize] = false,
        }
        Some(unit)
    }
}

/// Runs the worklist from the given seeds; clamped blocks among them are
/// ignored.
pub(crate) fn run(
    board: &Board,
    state: &mut SedsState,
    config: &SolverConfig,
    seeds: impl IntoIterator<Item = RawUnit>,
) -> SolveStats {
    let size = board.size();
    let mut stats = SolveStats::new(size, board.block_id_bound());
    let mut queue = Queue {
        items: VecDeque::new(),
        point_queued: vec![false; size * size],
        block_queued: vec![false; board.block_id_bound()],
    };
    for unit in seeds {
        if let RawUnit::Block(id) = unit {
            if state.clamped_at(id) {
                continue;
            }
        }
        queue.push(unit);
    }

    let mut neighbours: Vec<RawUnit> = Vec::with_capacity(16);
    while let Some(unit) = queue.pop() {
        stats.sweeps += 1;
        let change = match unit {
            RawUnit::Point(i) => {
                let v = point_value(board, state, i).expect("every neighbour feeds one side");
                *stats.point_count_mut(i) += 1;
                let old = std::mem::replace(&mut state.w_mut()[i], v);
                (v - old).abs()
            }
            RawUnit::Block(id) => {
                let v = update_block(board, state, id, config.atari_adjustment);
                *stats.block_count_mut(id) += 1;
                let old = std::mem::replace(&mut state.s_mut()[id.0 as usize], v);
                (v - old).abs()
            }
        };
        if change < config.stop_value {
            continue;
        }

        neighbours.clear();
        match unit {
            RawUnit::Point(i) => board.for_each_point_neighbour(i, |n| neighbours.push(n)),
            RawUnit::Block(id) => {
                let block = board.block(id).unwrap();
                neighbours.extend(block.liberty_set().iter().map(RawUnit::Point));
                neighbours.extend(block.adjacent_blocks().iter().map(|&a| RawUnit::Block(a)));
            }
        }
        for &n in &neighbours {
            let count = match n {
                RawUnit::Point(j) => stats.point_iterations_at(j),
                RawUnit::Block(b) => {
                    if state.clamped_at(b) {
                        continue;
                    }
                    stats.block_iterations(b)
                }
            };
            if count < config.max_iter {
                queue.push(n);
            } else {
                stats.converged = false;
            }
        }
    }
    stats
}
