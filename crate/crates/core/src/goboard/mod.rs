//! Go board with incrementally maintained blocks, liberties and the
//! point/block neighbourhood graph the evaluator iterates over.
//!
//! A *unit* is either an empty intersection (a point) or a block. Every
//! relation of the evaluation is between a unit and the units directly
//! adjacent to it, so the board exposes exactly that graph.

mod benson;
mod coord;
mod pointset;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use benson::benson_alive;
pub use coord::{Color, Coord, MAX_SIZE};
pub use pointset::PointSet;

/// Identifier of a block. Ids are never reused within one board history,
/// so a value keyed by id stays valid for blocks a move did not touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BlockId(pub u32);

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A node of the neighbourhood graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unit {
    Point(Coord),
    Block(BlockId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    id: BlockId,
    color: Color,
    size: u8,
    stones: PointSet,
    liberties: PointSet,
    adjacent: Vec<BlockId>,
    statically_alive: bool,
}

impl Block {
    pub fn id(&self) -> BlockId {
        self.id
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn stones(&self) -> impl Iterator<Item = Coord> + '_ {
        let size = self.size as usize;
        self.stones.iter().map(move |i| Coord::from_index(i, size))
    }

    pub fn stone_count(&self) -> usize {
        self.stones.len()
    }

    pub fn liberties(&self) -> impl Iterator<Item = Coord> + '_ {
        let size = self.size as usize;
        self.liberties.iter().map(move |i| Coord::from_index(i, size))
    }

    pub fn liberty_count(&self) -> usize {
        self.liberties.len()
    }

    /// Blocks touching this one, in id order. These are always opponent
    /// blocks since touching friendly stones belong to the same block.
    pub fn adjacent_blocks(&self) -> &[BlockId] {
        &self.adjacent
    }

    pub fn is_statically_alive(&self) -> bool {
        self.statically_alive
    }

    pub fn contains(&self, coord: Coord) -> bool {
        coord.in_bounds(self.size as usize) && self.stones.contains(coord.index(self.size as usize))
    }

    pub(crate) fn liberty_set(&self) -> &PointSet {
        &self.liberties
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("board size {0} outside 2..=25")]
    BadSize(usize),
    #[error("coordinate {0} is off the board")]
    BadCoord(Coord),
    #[error("two stones placed on {0}")]
    OverlappingStones(Coord),
    #[error("block containing {0} has no liberties")]
    ZeroLibertyBlock(Coord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IllegalReason {
    OffBoard,
    Occupied,
    Suicide,
    Ko,
}

impl fmt::Display for IllegalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IllegalReason::OffBoard => "off board",
            IllegalReason::Occupied => "occupied",
            IllegalReason::Suicide => "suicide",
            IllegalReason::Ko => "ko recapture",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("illegal move for {color} at {coord}: {reason}")]
pub struct IllegalMove {
    pub coord: Coord,
    pub color: Color,
    pub reason: IllegalReason,
}

/// What a move changed, expressed against the board after the move.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveDelta {
    pub coord: Option<Coord>,
    /// Block now containing the played stone.
    pub placed_block: Option<BlockId>,
    /// Friendly blocks absorbed into `placed_block`.
    pub merged: Vec<BlockId>,
    pub captured: Vec<BlockId>,
    pub captured_stones: Vec<Coord>,
    /// Empty points whose neighbour list changed, including newly empty ones.
    pub changed_points: Vec<Coord>,
    /// Live blocks whose neighbour list or static-life flag changed.
    pub changed_blocks: Vec<BlockId>,
}

impl MoveDelta {
    pub fn is_empty(&self) -> bool {
        self.coord.is_none() && self.changed_points.is_empty() && self.changed_blocks.is_empty()
    }

    pub fn changed_units(&self) -> impl Iterator<Item = Unit> + '_ {
        self.changed_points
            .iter()
            .map(|&c| Unit::Point(c))
            .chain(self.changed_blocks.iter().map(|&b| Unit::Block(b)))
    }
}

#[derive(Debug)]
struct Adjacency {
    neighbours: Vec<[u16; 4]>,
    counts: Vec<u8>,
}

impl Adjacency {
    fn new(size: usize) -> Self {
        let mut neighbours = vec![[0u16; 4]; size * size];
        let mut counts = vec![0u8; size * size];
        for row in 0..size {
            for col in 0..size {
                let i = row * size + col;
                let mut push = |n: usize| {
                    neighbours[i][counts[i] as usize] = n as u16;
                    counts[i] += 1;
                };
                // north, west, east, south
                if row > 0 {
                    push(i - size);
                }
                if col > 0 {
                    push(i - 1);
                }
                if col + 1 < size {
                    push(i + 1);
                }
                if row + 1 < size {
                    push(i + size);
                }
            }
        }
        Adjacency { neighbours, counts }
    }

    #[inline]
    fn of(&self, i: usize) -> &[u16] {
        &self.neighbours[i][..self.counts[i] as usize]
    }
}

/// A rest position: every block on it has at least one liberty.
#[derive(Clone)]
pub struct Board {
    size: usize,
    adjacency: Arc<Adjacency>,
    grid: Vec<Option<BlockId>>,
    blocks: Vec<Option<Block>>,
    /// Point the given colour may not play on the next move.
    ko: Option<(usize, Color)>,
}

impl Board {
    pub fn new(size: usize) -> Result<Board, BoardError> {
        if !(2..=MAX_SIZE).contains(&size) {
            return Err(BoardError::BadSize(size));
        }
        Ok(Board {
            size,
            adjacency: Arc::new(Adjacency::new(size)),
            grid: vec![None; size * size],
            blocks: Vec::new(),
            ko: None,
        })
    }

    /// Builds a position from stone lists, grouping stones into blocks and
    /// marking statically alive blocks.
    pub fn build_position(size: usize, black: &[Coord], white: &[Coord]) -> Result<Board, BoardError> {
        let mut board = Board::new(size)?;
        let mut colors: Vec<Option<Color>> = vec![None; size * size];
        for (&c, color) in black
            .iter()
            .map(|c| (c, Color::Black))
            .chain(white.iter().map(|c| (c, Color::White)))
        {
            if !c.in_bounds(size) {
                return Err(BoardError::BadCoord(c));
            }
            let i = c.index(size);
            if colors[i].is_some() {
                return Err(BoardError::OverlappingStones(c));
            }
            colors[i] = Some(color);
        }

        for start in 0..size * size {
            let Some(color) = colors[start] else { continue };
            if board.grid[start].is_some() {
                continue;
            }
            let id = BlockId(board.blocks.len() as u32);
            let mut stones = PointSet::new();
            let mut liberties = PointSet::new();
            let mut stack = vec![start];
            stones.insert(start);
            board.grid[start] = Some(id);
            while let Some(i) = stack.pop() {
                for &n in board.adjacency.of(i) {
                    let n = n as usize;
                    match colors[n] {
                        None => {
                            liberties.insert(n);
                        }
                        Some(c) if c == color && stones.insert(n) => {
                            board.grid[n] = Some(id);
                            stack.push(n);
                        }
                        _ => {}
                    }
                }
            }
            if liberties.is_empty() {
                return Err(BoardError::ZeroLibertyBlock(Coord::from_index(start, size)));
            }
            board.blocks.push(Some(Block {
                id,
                color,
                size: size as u8,
                stones,
                liberties,
                adjacent: Vec::new(),
                statically_alive: false,
            }));
        }

        for slot in 0..board.blocks.len() {
            let adjacent = board.adjacent_ids_of(board.blocks[slot].as_ref().unwrap().stones);
            board.blocks[slot].as_mut().unwrap().adjacent = adjacent;
        }
        board.refresh_static_life();
        Ok(board)
    }

    fn adjacent_ids_of(&self, stones: PointSet) -> Vec<BlockId> {
        let mut ids = BTreeSet::new();
        for s in stones.iter() {
            let own = self.grid[s];
            for &n in self.adjacency.of(s) {
                if let Some(id) = self.grid[n as usize] {
                    if Some(id) != own {
                        ids.insert(id);
                    }
                }
            }
        }
        ids.into_iter().collect()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn color_at(&self, coord: Coord) -> Option<Color> {
        self.block_at(coord).map(|b| b.color)
    }

    pub fn is_empty_at(&self, coord: Coord) -> bool {
        coord.in_bounds(self.size) && self.grid[coord.index(self.size)].is_none()
    }

    pub fn block_at(&self, coord: Coord) -> Option<&Block> {
        if !coord.in_bounds(self.size) {
            return None;
        }
        self.grid[coord.index(self.size)].and_then(|id| self.block(id))
    }

    pub fn block(&self, id: BlockId) -> Option<&Block> {
        self.blocks.get(id.0 as usize).and_then(|b| b.as_ref())
    }

    /// Live blocks in id order.
    pub fn blocks(&self) -> impl Iterator<Item = &Block> + '_ {
        self.blocks.iter().flatten()
    }

    pub fn block_count(&self) -> usize {
        self.blocks().count()
    }

    /// Upper bound (exclusive) on block ids issued so far.
    pub fn block_id_bound(&self) -> usize {
        self.blocks.len()
    }

    /// Empty intersections in row-major order.
    pub fn empty_points(&self) -> impl Iterator<Item = Coord> + '_ {
        let size = self.size;
        self.grid
            .iter()
            .enumerate()
            .filter(|(_, cell)| cell.is_none())
            .map(move |(i, _)| Coord::from_index(i, size))
    }

    pub fn empty_count(&self) -> usize {
        self.grid.iter().filter(|c| c.is_none()).count()
    }

    pub fn stones(&self, color: Color) -> Vec<Coord> {
        let mut out: Vec<Coord> = self
            .blocks()
            .filter(|b| b.color == color)
            .flat_map(|b| b.stones())
            .collect();
        out.sort();
        out
    }

    pub fn ko_point(&self) -> Option<Coord> {
        self.ko.map(|(i, _)| Coord::from_index(i, self.size))
    }

    /// Forbids `color` to play at the empty point `coord` on the next move,
    /// as after a ko capture.
    pub fn set_ko(&mut self, coord: Coord, color: Color) -> Result<(), BoardError> {
        if !self.is_empty_at(coord) {
            return Err(BoardError::BadCoord(coord));
        }
        self.ko = Some((coord.index(self.size), color));
        Ok(())
    }

    /// Orthogonal neighbours of an intersection (2 in corners, 3 on edges).
    pub fn adjacent_coords(&self, coord: Coord) -> impl Iterator<Item = Coord> + '_ {
        let size = self.size;
        self.adjacency
            .of(coord.index(size))
            .iter()
            .map(move |&n| Coord::from_index(n as usize, size))
    }

    /// Units adjacent to an intersection: empty neighbours as points and
    /// each touching block once.
    pub fn point_neighbours(&self, coord: Coord) -> Vec<Unit> {
        let mut out = Vec::with_capacity(4);
        self.for_each_point_neighbour(coord.index(self.size), |u| match u {
            RawUnit::Point(i) => out.push(Unit::Point(Coord::from_index(i, self.size))),
            RawUnit::Block(id) => out.push(Unit::Block(id)),
        });
        out
    }

    /// Liberties as points followed by adjacent blocks.
    pub fn block_neighbours(&self, id: BlockId) -> Vec<Unit> {
        match self.block(id) {
            None => Vec::new(),
            Some(b) => b
                .liberties()
                .map(Unit::Point)
                .chain(b.adjacent.iter().map(|&a| Unit::Block(a)))
                .collect(),
        }
    }

    #[inline]
    pub(crate) fn for_each_point_neighbour(&self, index: usize, mut f: impl FnMut(RawUnit)) {
        let mut seen: [Option<BlockId>; 4] = [None; 4];
        let mut nseen = 0;
        for &n in self.adjacency.of(index) {
            let n = n as usize;
            match self.grid[n] {
                None => f(RawUnit::Point(n)),
                Some(id) => {
                    if !seen[..nseen].contains(&Some(id)) {
                        seen[nseen] = Some(id);
                        nseen += 1;
                        f(RawUnit::Block(id));
                    }
                }
            }
        }
    }

    #[inline]
    pub(crate) fn grid_index_neighbours(&self, index: usize) -> &[u16] {
        self.adjacency.of(index)
    }

    #[inline]
    pub(crate) fn cell(&self, index: usize) -> Option<BlockId> {
        self.grid[index]
    }

    pub fn is_legal(&self, coord: Coord, color: Color) -> Result<(), IllegalReason> {
        if !coord.in_bounds(self.size) {
            return Err(IllegalReason::OffBoard);
        }
        let p = coord.index(self.size);
        if self.grid[p].is_some() {
            return Err(IllegalReason::Occupied);
        }
        if self.ko == Some((p, color)) {
            return Err(IllegalReason::Ko);
        }
        for &n in self.adjacency.of(p) {
            match self.grid[n as usize] {
                None => return Ok(()),
                Some(id) => {
                    let b = self.block(id).expect("grid points at live block");
                    let libs = b.liberties.len();
                    if (b.color == color && libs > 1) || (b.color != color && libs == 1) {
                        return Ok(());
                    }
                }
            }
        }
        Err(IllegalReason::Suicide)
    }

    /// Every legal move for `color`, row-major.
    pub fn legal_moves(&self, color: Color) -> Vec<Coord> {
        self.empty_points()
            .filter(|&c| self.is_legal(c, color).is_ok())
            .collect()
    }

    /// Plays a move in place. On error the board is unchanged.
    pub fn play(&mut self, coord: Coord, color: Color) -> Result<MoveDelta, IllegalMove> {
        self.is_legal(coord, color)
            .map_err(|reason| IllegalMove { coord, color, reason })?;
        let size = self.size;
        let p = coord.index(size);

        let mut friendly: Vec<BlockId> = Vec::new();
        let mut enemy: Vec<BlockId> = Vec::new();
        let mut libs = PointSet::new();
        for &n in self.adjacency.of(p) {
            let n = n as usize;
            match self.grid[n] {
                None => {
                    libs.insert(n);
                }
                Some(id) => {
                    let list = if self.blocks[id.0 as usize].as_ref().unwrap().color == color {
                        &mut friendly
                    } else {
                        &mut enemy
                    };
                    if !list.contains(&id) {
                        list.push(id);
                    }
                }
            }
        }
        friendly.sort();
        enemy.sort();
        let captured: Vec<BlockId> = enemy
            .iter()
            .copied()
            .filter(|id| self.blocks[id.0 as usize].as_ref().unwrap().liberties.len() == 1)
            .collect();

        self.ko = None;
        let new_id = BlockId(self.blocks.len() as u32);
        let mut stones = PointSet::new();
        stones.insert(p);
        let mut adjacent: BTreeSet<BlockId> = enemy.iter().copied().collect();
        for f in &friendly {
            let b = self.blocks[f.0 as usize].take().unwrap();
            stones.union_with(&b.stones);
            libs.union_with(&b.liberties);
            adjacent.extend(b.adjacent.iter().copied());
        }
        libs.remove(p);
        for s in stones.iter() {
            self.grid[s] = Some(new_id);
        }
        for &a in &adjacent {
            let b = self.blocks[a.0 as usize].as_mut().unwrap();
            b.liberties.remove(p);
            b.adjacent.retain(|x| !friendly.contains(x));
            if let Err(pos) = b.adjacent.binary_search(&new_id) {
                b.adjacent.insert(pos, new_id);
            }
        }
        self.blocks.push(Some(Block {
            id: new_id,
            color,
            size: size as u8,
            stones,
            liberties: libs,
            adjacent: Vec::new(),
            statically_alive: false,
        }));

        let mut captured_points = PointSet::new();
        let mut changed_blocks: BTreeSet<BlockId> = adjacent.iter().copied().collect();
        changed_blocks.insert(new_id);
        for &c in &captured {
            let b = self.blocks[c.0 as usize].take().unwrap();
            changed_blocks.remove(&c);
            adjacent.remove(&c);
            for s in b.stones.iter() {
                self.grid[s] = None;
                captured_points.insert(s);
            }
            for &a in &b.adjacent {
                if let Some(ab) = self.blocks[a.0 as usize].as_mut() {
                    ab.adjacent.retain(|&x| x != c);
                    changed_blocks.insert(a);
                }
            }
            for s in b.stones.iter() {
                for &n in self.adjacency.of(s) {
                    if let Some(id) = self.grid[n as usize] {
                        self.blocks[id.0 as usize].as_mut().unwrap().liberties.insert(s);
                    }
                }
            }
        }
        self.blocks[new_id.0 as usize].as_mut().unwrap().adjacent = adjacent.into_iter().collect();

        let placed = self.blocks[new_id.0 as usize].as_ref().unwrap();
        if captured_points.len() == 1 && placed.stones.len() == 1 && placed.liberties.len() == 1 {
            let k = captured_points.iter().next().unwrap();
            self.ko = Some((k, color.opposite()));
        }

        let mut changed_points = placed.liberties;
        changed_points.union_with(&captured_points);
        for s in captured_points.iter() {
            for &n in self.adjacency.of(s) {
                if self.grid[n as usize].is_none() {
                    changed_points.insert(n as usize);
                }
            }
        }
        changed_blocks.extend(self.refresh_static_life());

        let mut captured_stones: Vec<Coord> =
            captured_points.iter().map(|i| Coord::from_index(i, size)).collect();
        captured_stones.sort();
        Ok(MoveDelta {
            coord: Some(coord),
            placed_block: Some(new_id),
            merged: friendly,
            captured,
            captured_stones,
            changed_points: changed_points.iter().map(|i| Coord::from_index(i, size)).collect(),
            changed_blocks: changed_blocks
                .into_iter()
                .filter(|id| self.block(*id).is_some())
                .collect(),
        })
    }

    /// A pass only lifts a pending ko restriction.
    pub fn pass(&mut self) {
        self.ko = None;
    }

    /// Copy-on-write form of [`Board::play`].
    pub fn apply_move(&self, coord: Coord, color: Color) -> Result<(Board, MoveDelta), IllegalMove> {
        let mut next = self.clone();
        let delta = next.play(coord, color)?;
        Ok((next, delta))
    }

    /// Recomputes static life; returns ids whose flag flipped.
    fn refresh_static_life(&mut self) -> Vec<BlockId> {
        let alive = benson_alive(self);
        let mut flipped = Vec::new();
        for b in self.blocks.iter_mut().flatten() {
            let now = alive.contains(&b.id);
            if now != b.statically_alive {
                b.statically_alive = now;
                flipped.push(b.id);
            }
        }
        flipped
    }

    /// Same position with every stone's colour exchanged; block ids are kept.
    pub fn with_colors_swapped(&self) -> Board {
        let mut b = self.clone();
        for block in b.blocks.iter_mut().flatten() {
            block.color = block.color.opposite();
        }
        b.ko = b.ko.map(|(i, c)| (i, c.opposite()));
        b
    }
}

impl fmt::Debug for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Board {}x{}", self.size, self.size)?;
        for row in 0..self.size {
            for col in 0..self.size {
                let c = Coord::new(col as u8, row as u8);
                let ch = match self.color_at(c) {
                    Some(Color::Black) => 'X',
                    Some(Color::White) => 'O',
                    None => '.',
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RawUnit {
    Point(usize),
    Block(BlockId),
}

/// Parses whitespace- or comma-separated vertices such as `"d4 q16"`.
pub fn vertices(list: &str, size: usize) -> Vec<Coord> {
    list.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|v| Coord::from_vertex(v, size).unwrap_or_else(|| panic!("bad vertex {v}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &str, size: usize) -> Coord {
        Coord::from_vertex(v, size).unwrap()
    }

    #[test]
    fn empty_board() {
        let b = Board::build_position(9, &[], &[]).unwrap();
        assert_eq!(b.block_count(), 0);
        assert_eq!(b.empty_count(), 81);
        assert_eq!(b.legal_moves(Color::Black).len(), 81);
        assert!(benson_alive(&b).is_empty());
    }

    #[test]
    fn edge_and_corner_degree() {
        let b = Board::new(9).unwrap();
        assert_eq!(b.point_neighbours(Coord::new(0, 0)).len(), 2);
        assert_eq!(b.point_neighbours(Coord::new(4, 0)).len(), 3);
        assert_eq!(b.point_neighbours(Coord::new(4, 4)).len(), 4);
    }

    #[test]
    fn build_errors() {
        let a = Coord::new(1, 1);
        assert_eq!(
            Board::build_position(9, &[a], &[a]).unwrap_err(),
            BoardError::OverlappingStones(a)
        );
        assert_eq!(
            Board::build_position(9, &[Coord::new(9, 0)], &[]).unwrap_err(),
            BoardError::BadCoord(Coord::new(9, 0))
        );
        // black corner stone surrounded by white
        let err = Board::build_position(9, &[Coord::new(0, 0)], &[Coord::new(1, 0), Coord::new(0, 1)])
            .unwrap_err();
        assert_eq!(err, BoardError::ZeroLibertyBlock(Coord::new(0, 0)));
        assert_eq!(Board::new(1).unwrap_err(), BoardError::BadSize(1));
        assert_eq!(Board::new(26).unwrap_err(), BoardError::BadSize(26));
    }

    #[test]
    fn single_stone_capture_sets_ko() {
        // black at e5 surrounded progressively by white
        let mut b = Board::new(9).unwrap();
        let centre = c("e5", 9);
        b.play(centre, Color::Black).unwrap();
        assert_eq!(b.block_at(centre).unwrap().liberty_count(), 4);
        for v in ["e6", "d5", "f5"] {
            b.play(c(v, 9), Color::White).unwrap();
        }
        assert_eq!(b.block_at(centre).unwrap().liberty_count(), 1);
        let d = b.play(c("e4", 9), Color::White).unwrap();
        assert_eq!(d.captured_stones, vec![centre]);
        assert!(b.is_empty_at(centre));
        // capturer has 3 liberties, so no ko
        assert_eq!(b.ko_point(), None);
    }

    #[test]
    fn ko_forbids_immediate_recapture() {
        // classic ko shape on 5x5:
        // . X O . .
        // X O . O .
        // . X O . .
        let mut b = Board::build_position(
            5,
            &vertices("b5 a4 b3", 5),
            &vertices("c5 b4 d4 c3", 5),
        )
        .unwrap();
        let d = b.play(c("c4", 5), Color::Black).unwrap();
        assert_eq!(d.captured_stones, vec![c("b4", 5)]);
        assert_eq!(b.ko_point(), Some(c("b4", 5)));
        assert_eq!(b.is_legal(c("b4", 5), Color::White), Err(IllegalReason::Ko));
        assert!(!b.legal_moves(Color::White).contains(&c("b4", 5)));
        // black may fill the ko itself
        assert!(b.is_legal(c("b4", 5), Color::Black).is_ok());
        // any other move clears it
        b.play(c("e1", 5), Color::White).unwrap();
        assert_eq!(b.ko_point(), None);
    }

    #[test]
    fn suicide_is_illegal() {
        let b = Board::build_position(9, &[], &vertices("a2 b1", 9)).unwrap();
        assert_eq!(b.is_legal(c("a1", 9), Color::Black), Err(IllegalReason::Suicide));
        let mut b2 = b.clone();
        let err = b2.play(c("a1", 9), Color::Black).unwrap_err();
        assert_eq!(err.reason, IllegalReason::Suicide);
        assert_eq!(b2.empty_count(), b.empty_count());
        assert!(b.is_legal(c("a1", 9), Color::White).is_ok());
        assert_eq!(b.is_legal(c("a2", 9), Color::White), Err(IllegalReason::Occupied));
    }

    #[test]
    fn merging_blocks() {
        let mut b = Board::build_position(9, &vertices("c3 e3", 9), &vertices("d4", 9)).unwrap();
        let left = b.block_at(c("c3", 9)).unwrap().id();
        let right = b.block_at(c("e3", 9)).unwrap().id();
        let d = b.play(c("d3", 9), Color::Black).unwrap();
        assert_eq!(d.merged, vec![left, right]);
        let merged = b.block_at(c("d3", 9)).unwrap();
        assert_eq!(merged.stone_count(), 3);
        assert_eq!(merged.liberty_count(), 7);
        assert!(b.block(left).is_none());
        let white = b.block_at(c("d4", 9)).unwrap();
        assert_eq!(white.adjacent_blocks(), &[merged.id()]);
        assert_eq!(white.liberty_count(), 3);
    }
}
