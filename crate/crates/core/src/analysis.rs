//! Decisions drawn from a solved state: the expected score, a one-ply
//! ranking of every legal move, where the solver had to work hard, and the
//! local multipole indicators of the influence field.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::goboard::{BlockId, Board, Color, Coord, Unit};
use crate::solver::{evaluate, resolve_incremental, SedsState, SolveStats, SolverConfig};

/// Expected final area of each side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Score {
    pub black_total: f64,
    pub white_total: f64,
    /// `black_total - white_total`.
    pub net: f64,
}

impl Score {
    /// Net score seen by `color`.
    pub fn for_color(&self, color: Color) -> f64 {
        match color {
            Color::Black => self.net,
            Color::White => -self.net,
        }
    }
}

/// Sums point ownership and block survival weighted by block size. A dead
/// block's stones count for the opponent, so the totals add up to the
/// board area.
pub fn score(board: &Board, state: &SedsState) -> Score {
    let mut black = 0.0;
    let mut white = 0.0;
    for (_, w) in state.points() {
        black += 1.0 - w;
        white += w;
    }
    for b in board.blocks() {
        let s = state.s(b.id()).expect("state matches board");
        let n = b.stone_count() as f64;
        match b.color() {
            Color::Black => {
                black += s * n;
                white += (1.0 - s) * n;
            }
            Color::White => {
                white += s * n;
                black += (1.0 - s) * n;
            }
        }
    }
    Score {
        black_total: black,
        white_total: white,
        net: black - white,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankedMove {
    pub coord: Coord,
    /// Net score after the move, from the mover's side.
    pub score: f64,
}

/// Legal moves ordered best first; equal scores fall back to row-major
/// order of the coordinates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveRanking {
    pub mover: Color,
    pub entries: Vec<RankedMove>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{0} is not among the ranked moves")]
    UnknownMove(Coord),
}

impl MoveRanking {
    fn from_scores(mover: Color, mut entries: Vec<RankedMove>) -> MoveRanking {
        entries.sort_by(|a, b| b.score.total_cmp(&a.score).then(a.coord.cmp(&b.coord)));
        MoveRanking { mover, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, coord: Coord) -> Option<usize> {
        self.entries.iter().position(|e| e.coord == coord)
    }

    /// Share of the ranked moves placed after `coord`, in percent.
    pub fn percentile(&self, coord: Coord) -> Option<f64> {
        let k = self.position(coord)?;
        let after = self.entries.len() - 1 - k;
        Some(100.0 * after as f64 / self.entries.len() as f64)
    }
}

/// Bucket `0..=99` of a move: 99 for the best move of a long list, 0 for
/// the worst.
pub fn percentile_of(ranking: &MoveRanking, coord: Coord) -> Result<u8, AnalysisError> {
    let k = ranking.position(coord).ok_or(AnalysisError::UnknownMove(coord))?;
    let n = ranking.entries.len();
    let after = n - 1 - k;
    Ok((100 * after / n) as u8)
}

/// How candidate moves are spread over threads.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Sequential,
    /// One task per candidate on the rayon pool.
    Parallel,
}

/// Ranks every legal move of `mover` by re-solving after it.
pub fn rank_moves(board: &Board, mover: Color, config: &SolverConfig) -> MoveRanking {
    let (parent, _) = evaluate(board, config);
    rank_moves_from(board, &parent, mover, config, Execution::Sequential)
}

/// [`rank_moves`] with candidates evaluated concurrently. The result is
/// bit-identical to the sequential one.
pub fn rank_moves_parallel(board: &Board, mover: Color, config: &SolverConfig) -> MoveRanking {
    let (parent, _) = evaluate(board, config);
    rank_moves_from(board, &parent, mover, config, Execution::Parallel)
}

/// Ranks from an already solved parent state.
pub fn rank_moves_from(
    board: &Board,
    parent: &SedsState,
    mover: Color,
    config: &SolverConfig,
    execution: Execution,
) -> MoveRanking {
    let moves = board.legal_moves(mover);
    let one = |&coord: &Coord| {
        let (after, delta) = board
            .apply_move(coord, mover)
            .expect("legal_moves only returns legal moves");
        let (state, _) = resolve_incremental(&after, parent, &delta, config);
        RankedMove {
            coord,
            score: score(&after, &state).for_color(mover),
        }
    };
    let entries: Vec<RankedMove> = match execution {
        Execution::Sequential => moves.iter().map(one).collect(),
        Execution::Parallel => moves.par_iter().map(one).collect(),
    };
    MoveRanking::from_scores(mover, entries)
}

/// Update counts of one solve laid out on the board.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstabilityMap {
    pub size: usize,
    /// Per intersection, row-major: the point's own count, or the block's
    /// count on a stone.
    pub counts: Vec<u32>,
    /// Per intersection: for an empty point the maximum over the point and
    /// its adjacent blocks, for a stone its block's count.
    pub aggregate: Vec<u32>,
    pub blocks: Vec<(BlockId, u32)>,
}

impl InstabilityMap {
    pub fn new(board: &Board, stats: &SolveStats) -> InstabilityMap {
        let size = board.size();
        let mut counts = vec![0; size * size];
        let mut aggregate = vec![0; size * size];
        for row in 0..size {
            for col in 0..size {
                let c = Coord::new(col as u8, row as u8);
                let i = row * size + col;
                match board.block_at(c) {
                    Some(b) => {
                        counts[i] = stats.block_iterations(b.id());
                        aggregate[i] = counts[i];
                    }
                    None => {
                        counts[i] = stats.point_iterations(c);
                        aggregate[i] = board
                            .point_neighbours(c)
                            .into_iter()
                            .filter_map(|u| match u {
                                Unit::Block(id) => Some(stats.block_iterations(id)),
                                Unit::Point(_) => None,
                            })
                            .fold(counts[i], u32::max);
                    }
                }
            }
        }
        let blocks = board
            .blocks()
            .map(|b| (b.id(), stats.block_iterations(b.id())))
            .collect();
        InstabilityMap {
            size,
            counts,
            aggregate,
            blocks,
        }
    }

    pub fn aggregate_at(&self, coord: Coord) -> u32 {
        self.aggregate[coord.row as usize * self.size + coord.col as usize]
    }
}

/// Black-weighted values of the four orthogonal neighbours of a point.
/// A point counts `1 - w`, a black block `s`, a white block `1 - s`, and
/// an off-board side 0.5.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Neighbourhood {
    pub north: f64,
    pub south: f64,
    pub west: f64,
    pub east: f64,
}

impl Neighbourhood {
    pub fn of(board: &Board, state: &SedsState, point: Coord) -> Option<Neighbourhood> {
        if !board.is_empty_at(point) {
            return None;
        }
        let value = |dc: i32, dr: i32| -> f64 {
            let col = point.col as i32 + dc;
            let row = point.row as i32 + dr;
            let size = board.size() as i32;
            if col < 0 || row < 0 || col >= size || row >= size {
                return 0.5;
            }
            let c = Coord::new(col as u8, row as u8);
            match board.block_at(c) {
                None => 1.0 - state.w(c).expect("state matches board"),
                Some(b) => {
                    let s = state.s(b.id()).expect("state matches board");
                    match b.color() {
                        Color::Black => s,
                        Color::White => 1.0 - s,
                    }
                }
            }
        };
        Some(Neighbourhood {
            north: value(0, -1),
            south: value(0, 1),
            west: value(-1, 0),
            east: value(1, 0),
        })
    }

    /// `|A + D - B - C|` with A, D north and south, B, C west and east.
    pub fn quadrupole(&self) -> f64 {
        (self.north + self.south - self.west - self.east).abs()
    }

    pub fn dipole(&self) -> Dipole {
        Dipole {
            dx: self.east - self.west,
            dy: self.north - self.south,
        }
    }
}

/// Direction of steepest rise of Black's influence.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Dipole {
    pub dx: f64,
    pub dy: f64,
}

impl Dipole {
    pub fn magnitude(&self) -> f64 {
        self.dx.hypot(self.dy)
    }
}

/// Large where Black and White meet crosswise, flagging cut points. `None`
/// on a stone.
pub fn quadrupole_indicator(board: &Board, state: &SedsState, point: Coord) -> Option<f64> {
    Neighbourhood::of(board, state, point).map(|n| n.quadrupole())
}

pub fn dipole_indicator(board: &Board, state: &SedsState, point: Coord) -> Option<Dipole> {
    Neighbourhood::of(board, state, point).map(|n| n.dipole())
}
