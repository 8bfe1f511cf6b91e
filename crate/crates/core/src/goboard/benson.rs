//! Unconditional (pass-alive) life by the vital-region fixpoint.
//!
//! For one colour, a region is a maximal connected set of intersections
//! not occupied by that colour. A region is vital to a block when every
//! empty point of the region is a liberty of the block. Starting from all
//! blocks and all regions, blocks with fewer than two vital regions are
//! dropped, then regions bordering a dropped block are dropped, until
//! nothing changes. The surviving blocks can never be captured even if
//! their owner passes forever.

use std::collections::BTreeSet;

use super::{Board, BlockId, Color, PointSet};

/// Ids of all blocks of either colour that are pass-alive.
pub fn benson_alive(board: &Board) -> BTreeSet<BlockId> {
    let mut out: BTreeSet<BlockId> = alive_for(board, Color::Black).collect();
    out.extend(alive_for(board, Color::White));
    out
}

fn alive_for(board: &Board, color: Color) -> impl Iterator<Item = BlockId> {
    let bound = board.block_id_bound();
    let mut alive = vec![false; bound];
    let mut own = PointSet::new();
    let mut remaining = 0usize;
    for b in board.blocks().filter(|b| b.color() == color) {
        alive[b.id().0 as usize] = true;
        own.union_with(&b.stones);
        remaining += 1;
    }
    if remaining == 0 {
        return Vec::new().into_iter();
    }

    // Flood-fill the regions. Region r borders the blocks
    // `border[offsets[r]..offsets[r + 1]]`; `vital_to` pairs a block with
    // each region vital to it.
    let n = board.size() * board.size();
    let mut visited = own;
    let mut stack = Vec::with_capacity(n);
    let mut border: Vec<BlockId> = Vec::new();
    let mut offsets = vec![0usize];
    let mut last_region = vec![usize::MAX; bound];
    let mut vital_to: Vec<(BlockId, usize)> = Vec::new();
    for start in 0..n {
        if visited.contains(start) {
            continue;
        }
        let region = offsets.len() - 1;
        let mut empties = PointSet::new();
        stack.push(start);
        visited.insert(start);
        while let Some(i) = stack.pop() {
            if board.cell(i).is_none() {
                empties.insert(i);
            }
            for &nb in board.grid_index_neighbours(i) {
                let nb = nb as usize;
                if own.contains(nb) {
                    let id = board.cell(nb).unwrap();
                    if last_region[id.0 as usize] != region {
                        last_region[id.0 as usize] = region;
                        border.push(id);
                    }
                } else if visited.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        if !empties.is_empty() {
            for &id in &border[offsets[region]..] {
                if empties.is_subset(&board.block(id).unwrap().liberties) {
                    vital_to.push((id, region));
                }
            }
        }
        offsets.push(border.len());
    }

    let regions = offsets.len() - 1;
    let mut healthy = vec![true; regions];
    let mut vital_count = vec![0u32; bound];
    loop {
        vital_count.iter_mut().for_each(|c| *c = 0);
        for &(id, r) in &vital_to {
            if healthy[r] {
                vital_count[id.0 as usize] += 1;
            }
        }
        let mut changed = false;
        for (a, &count) in alive.iter_mut().zip(&vital_count) {
            if *a && count < 2 {
                *a = false;
                remaining -= 1;
                changed = true;
            }
        }
        for (r, h) in healthy.iter_mut().enumerate() {
            if *h && border[offsets[r]..offsets[r + 1]].iter().any(|b| !alive[b.0 as usize]) {
                *h = false;
                changed = true;
            }
        }
        if !changed || remaining == 0 {
            break;
        }
    }
    (0..bound)
        .filter(|&i| alive[i])
        .map(|i| BlockId(i as u32))
        .collect::<Vec<_>>()
        .into_iter()
}
