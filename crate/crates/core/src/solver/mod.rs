//! The dynamical system over points and blocks.
//!
//! Each empty point carries `w`, the probability that White finally owns
//! it (`b = 1 - w` is derived). Each block carries `s`, the probability that
//! it survives. The solver iterates the local update rules in place from a
//! worklist until every change falls below `stop_value`.

mod dense;
mod incremental;
mod rules;
mod worklist;

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::goboard::{Board, BlockId, Color, Coord, Unit};

pub use dense::{dense_sweep, solve_dense_oracle, DENSE_SWEEP_CAP};
pub use incremental::resolve_incremental;
pub use rules::{bar_values, update_block, update_point, BarValues};
pub use worklist::solve;

/// How the capture product treats the liberty the capturing move fills last.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtariAdjustment {
    /// Raise the smallest liberty factor to 1.0 only for blocks with two or
    /// more liberties.
    #[default]
    MultiLibertyOnly,
    /// Raise it for every block.
    Always,
    Off,
}

impl FromStr for AtariAdjustment {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "multi_liberty_only" | "multi" => Ok(AtariAdjustment::MultiLibertyOnly),
            "always" => Ok(AtariAdjustment::Always),
            "off" | "none" => Ok(AtariAdjustment::Off),
            other => Err(format!("unknown atari adjustment `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Smallest change of a value that re-enqueues its neighbours.
    pub stop_value: f64,
    /// Cap on the number of updates of any single point or block.
    pub max_iter: u32,
    pub atari_adjustment: AtariAdjustment,
}

pub const DEFAULT_STOP_VALUE: f64 = 1e-3;
pub const DEFAULT_MAX_ITER: u32 = 5;

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            stop_value: DEFAULT_STOP_VALUE,
            max_iter: DEFAULT_MAX_ITER,
            atari_adjustment: AtariAdjustment::MultiLibertyOnly,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("stop_value must be finite and > 0, got {0}")]
    StopValue(f64),
    #[error("max_iter must be >= 1")]
    MaxIter,
}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.stop_value.is_finite() && self.stop_value > 0.0) {
            return Err(ConfigError::StopValue(self.stop_value));
        }
        if self.max_iter == 0 {
            return Err(ConfigError::MaxIter);
        }
        Ok(())
    }

    /// A configuration converging far past anything the defaults resolve;
    /// used where fixed-point values rather than speed matter.
    pub fn tight() -> Self {
        SolverConfig {
            stop_value: 1e-9,
            max_iter: 100_000,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("both bar values are zero")]
    DegenerateBars,
    #[error("dense iteration did not settle after {sweeps} sweeps (last change {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}

/// Values of all dynamical variables for one board.
///
/// Stored densely: `w` per intersection (NaN on stones) and `s` per block
/// id (NaN for ids no longer on the board). Equality is bitwise.
#[derive(Clone, Debug)]
pub struct SedsState {
    size: usize,
    w: Vec<f64>,
    s: Vec<f64>,
    clamped: Vec<bool>,
}

impl SedsState {
    /// Every `w` at 0.5, every `s` at 1.0; statically alive blocks are
    /// clamped and never updated.
    pub fn init(board: &Board) -> SedsState {
        let size = board.size();
        let mut w = vec![f64::NAN; size * size];
        for c in board.empty_points() {
            w[c.index(size)] = 0.5;
        }
        let bound = board.block_id_bound();
        let mut s = vec![f64::NAN; bound];
        let mut clamped = vec![false; bound];
        for b in board.blocks() {
            s[b.id().0 as usize] = 1.0;
            clamped[b.id().0 as usize] = b.is_statically_alive();
        }
        SedsState { size, w, s, clamped }
    }

    /// One of the two extreme assignments: every point owned by `winner`,
    /// every `winner` block alive, every other block dead. No block is
    /// clamped.
    pub fn extreme(board: &Board, winner: Color) -> SedsState {
        let mut st = SedsState::init(board);
        let w = if winner == Color::White { 1.0 } else { 0.0 };
        for c in board.empty_points() {
            st.w[c.index(st.size)] = w;
        }
        for b in board.blocks() {
            let i = b.id().0 as usize;
            st.s[i] = if b.color() == winner { 1.0 } else { 0.0 };
            st.clamped[i] = false;
        }
        st
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// White ownership of an empty point.
    pub fn w(&self, coord: Coord) -> Option<f64> {
        if !coord.in_bounds(self.size) {
            return None;
        }
        let v = self.w[coord.index(self.size)];
        (!v.is_nan()).then_some(v)
    }

    /// Black ownership, `1 - w`.
    pub fn b(&self, coord: Coord) -> Option<f64> {
        self.w(coord).map(|w| 1.0 - w)
    }

    pub fn s(&self, id: BlockId) -> Option<f64> {
        self.s.get(id.0 as usize).copied().filter(|v| !v.is_nan())
    }

    pub fn value(&self, unit: Unit) -> Option<f64> {
        match unit {
            Unit::Point(c) => self.w(c),
            Unit::Block(id) => self.s(id),
        }
    }

    pub fn is_clamped(&self, id: BlockId) -> bool {
        self.clamped.get(id.0 as usize).copied().unwrap_or(false)
    }

    /// Pins a block's survival value; the solvers leave it untouched.
    pub fn clamp(&mut self, id: BlockId, value: f64) {
        let i = id.0 as usize;
        assert!(i < self.s.len() && !self.s[i].is_nan(), "unknown block {id}");
        self.s[i] = value;
        self.clamped[i] = true;
    }

    pub fn set_w(&mut self, coord: Coord, value: f64) {
        let i = coord.index(self.size);
        assert!(!self.w[i].is_nan(), "{coord} is not an empty point");
        self.w[i] = value;
    }

    pub fn set_s(&mut self, id: BlockId, value: f64) {
        let i = id.0 as usize;
        assert!(i < self.s.len() && !self.s[i].is_nan(), "unknown block {id}");
        self.s[i] = value;
    }

    /// Point values in row-major order.
    pub fn points(&self) -> impl Iterator<Item = (Coord, f64)> + '_ {
        self.w
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_nan())
            .map(|(i, &v)| (Coord::from_index(i, self.size), v))
    }

    /// Block values in id order.
    pub fn blocks(&self) -> impl Iterator<Item = (BlockId, f64)> + '_ {
        self.s
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_nan())
            .map(|(i, &v)| (BlockId(i as u32), v))
    }

    pub fn point_count(&self) -> usize {
        self.w.iter().filter(|v| !v.is_nan()).count()
    }

    pub fn block_count(&self) -> usize {
        self.s.iter().filter(|v| !v.is_nan()).count()
    }

    /// Number of variables counting `w` and `b` separately: `2 * points + blocks`.
    pub fn relation_count(&self) -> usize {
        2 * self.point_count() + self.block_count()
    }

    /// Largest absolute difference over units present in both states.
    pub fn max_deviation(&self, other: &SedsState) -> f64 {
        let pw = self
            .w
            .iter()
            .zip(&other.w)
            .filter(|(a, b)| !a.is_nan() && !b.is_nan())
            .map(|(a, b)| (a - b).abs());
        let bs = self
            .s
            .iter()
            .zip(&other.s)
            .filter(|(a, b)| !a.is_nan() && !b.is_nan())
            .map(|(a, b)| (a - b).abs());
        pw.chain(bs).fold(0.0, f64::max)
    }

    #[inline]
    pub(crate) fn w_at(&self, index: usize) -> f64 {
        self.w[index]
    }

    #[inline]
    pub(crate) fn s_at(&self, id: BlockId) -> f64 {
        self.s[id.0 as usize]
    }

    #[inline]
    pub(crate) fn clamped_at(&self, id: BlockId) -> bool {
        self.clamped[id.0 as usize]
    }

    #[inline]
    pub(crate) fn w_mut(&mut self) -> &mut [f64] {
        &mut self.w
    }

    #[inline]
    pub(crate) fn s_mut(&mut self) -> &mut [f64] {
        &mut self.s
    }
}

impl PartialEq for SedsState {
    fn eq(&self, other: &Self) -> bool {
        let bits = |a: &[f64], b: &[f64]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits());
        self.size == other.size && self.clamped == other.clamped && bits(&self.w, &other.w) && bits(&self.s, &other.s)
    }
}

/// Per-unit update counts of one solver run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveStats {
    size: usize,
    point_iterations: Vec<u32>,
    block_iterations: Vec<u32>,
    /// Total worklist pops; equals the sum of all counts.
    pub sweeps: u64,
    /// False when some unit still changing by `stop_value` or more could
    /// not re-enqueue a neighbour that had reached `max_iter`.
    pub converged: bool,
}

impl SolveStats {
    pub(crate) fn new(size: usize, block_bound: usize) -> Self {
        SolveStats {
            size,
            point_iterations: vec![0; size * size],
            block_iterations: vec![0; block_bound],
            sweeps: 0,
            converged: true,
        }
    }

    pub fn point_iterations(&self, coord: Coord) -> u32 {
        if coord.in_bounds(self.size) {
            self.point_iterations[coord.index(self.size)]
        } else {
            0
        }
    }

    pub fn block_iterations(&self, id: BlockId) -> u32 {
        self.block_iterations.get(id.0 as usize).copied().unwrap_or(0)
    }

    pub fn iterations(&self, unit: Unit) -> u32 {
        match unit {
            Unit::Point(c) => self.point_iterations(c),
            Unit::Block(id) => self.block_iterations(id),
        }
    }

    pub fn max_iterations(&self) -> u32 {
        self.point_iterations
            .iter()
            .chain(&self.block_iterations)
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn total_iterations(&self) -> u64 {
        self.point_iterations
            .iter()
            .chain(&self.block_iterations)
            .map(|&c| c as u64)
            .sum()
    }

    #[inline]
    pub(crate) fn point_iterations_at(&self, index: usize) -> u32 {
        self.point_iterations[index]
    }

    #[inline]
    pub(crate) fn point_count_mut(&mut self, index: usize) -> &mut u32 {
        &mut self.point_iterations[index]
    }

    #[inline]
    pub(crate) fn block_count_mut(&mut self, id: BlockId) -> &mut u32 {
        &mut self.block_iterations[id.0 as usize]
    }
}

/// Initial state plus a worklist solve.
pub fn evaluate(board: &Board, config: &SolverConfig) -> (SedsState, SolveStats) {
    let mut state = SedsState::init(board);
    let stats = solve(board, &mut state, config);
    (state, stats)
}
