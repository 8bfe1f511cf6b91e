//! Small reference positions with known evaluations.
//!
//! Some of them only make sense when the surrounding blocks are treated as
//! alive; those blocks are listed as clamps and [`Position::initial_state`]
//! pins them at 1.0.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::goboard::{vertices, BlockId, Board, Color, Coord};
use crate::solver::SedsState;

#[derive(Clone, Debug)]
pub struct Position {
    pub board: Board,
    clamped: Vec<BlockId>,
}

impl Position {
    fn new(size: usize, black: &str, white: &str, clamp_at: &str) -> Position {
        let board = Board::build_position(size, &vertices(black, size), &vertices(white, size))
            .expect("reference position is realizable");
        let mut clamped: Vec<BlockId> = vertices(clamp_at, size)
            .into_iter()
            .map(|c| board.block_at(c).expect("clamp names a stone").id())
            .collect();
        clamped.sort();
        clamped.dedup();
        Position { board, clamped }
    }

    /// Blocks held alive regardless of the rules.
    pub fn clamped(&self) -> &[BlockId] {
        &self.clamped
    }

    /// The usual initial state with the clamps applied.
    pub fn initial_state(&self) -> SedsState {
        let mut st = SedsState::init(&self.board);
        for &id in &self.clamped {
            st.clamp(id, 1.0);
        }
        st
    }

    /// Parses a vertex such as `"d1"` on this board.
    pub fn at(&self, vertex: &str) -> Coord {
        Coord::from_vertex(vertex, self.board.size()).unwrap_or_else(|| panic!("bad vertex {vertex}"))
    }

    /// Id of the block holding the stone at `vertex`.
    pub fn block(&self, vertex: &str) -> BlockId {
        self.board
            .block_at(self.at(vertex))
            .unwrap_or_else(|| panic!("no stone at {vertex}"))
            .id()
    }
}

/// Three points between two white walls with a black stone at each end;
/// all four blocks are alive. The middle point is g7.
pub fn three_points() -> Position {
    Position::new(9, "e7 j7", "f6 g6 h6 f8 g8 h8", "e7 j7 f6 f8")
}

/// The same shape stretched to five points, d7 to h7, with every block
/// alive. The ownership at e7 solves `4w^3 - 2w^2 - 7w + 4 = 0`.
pub fn five_points() -> Position {
    Position::new(9, "c7 j7", "d6 e6 f6 g6 h6 d8 e8 f8 g8 h8", "c7 j7 d6 d8")
}

/// Two inner blocks, white c1-c2 and black d2-e2-e1, in a capturing race
/// over the single point d1. The rest of the board is filled by one black
/// and one white block, each statically alive with single-point eyes, so
/// only the race is open. Its interior fixed point has `w(d1) = 1/2` and
/// both inner blocks at survival 2/3.
///
/// ```text
///   A B C D E F G H J
/// 9 X X X X O O O O O
/// 8 X . X X O O . O O
/// 7 X X X X O O O O O
/// 6 X . X X O O . O O
/// 5 X X X X O O O O O
/// 4 X X X X O O O O O
/// 3 . X X O O O O O O
/// 2 X X O X X O O . O
/// 1 . X O . X O . O O
/// ```
pub fn mutual_atari() -> Position {
    Position::new(
        9,
        "a9 b9 c9 d9 a8 c8 d8 a7 b7 c7 d7 a6 c6 d6 a5 b5 c5 d5 a4 b4 c4 d4 b3 c3 a2 b2 d2 e2 b1 e1",
        "e9 f9 g9 h9 j9 e8 f8 h8 j8 e7 f7 g7 h7 j7 e6 f6 h6 j6 e5 f5 g5 h5 j5 e4 f4 g4 h4 j4 \
         d3 e3 f3 g3 h3 j3 c2 f2 g2 j2 c1 f1 h1 j1",
        "",
    )
}

/// A semeai in the lower-left corner: black a2-b1-b2-b3 with three
/// liberties against white c3-d1-d2-d3 with two. The outer blocks through
/// d5 and e4 are held alive. Black should come out clearly alive and white
/// close to even.
pub fn corner_semeai() -> Position {
    Position::new(
        9,
        "a2 b1 b2 b3 c4 d4 e1 e2 e3 e4",
        "a3 a4 b4 b5 c5 d5 d1 d2 d3 c3",
        "d5 e4",
    )
}

/// A 19x19 middle-game position with 55 blocks and 217 empty points.
pub fn full_board() -> Position {
    Position::new(
        19,
        "a15 b3 b12 b13 b16 b18 c2 c5 c7 c12 c14 c15 c16 c17 c19 d1 d11 d16 d18 e2 e11 e12 e13 \
         e16 f5 f7 f12 f16 f17 g2 g3 g5 g7 g10 g12 g13 g14 h8 h10 h11 h12 h15 j8 j14 j16 j17 k3 \
         k12 l15 l16 l17 m9 m14 m17 m18 n14 n17 o4 p4 p13 p14 q4 q7 q12 q17 r3 r7 r12 r13 r15 r16 s3 s14",
        "d12 d13 d14 c13 d15 e15 f15 f14 g15 g16 g17 m15 m16 n15 o15 o14 o13 c10 c11 d10 b11 \
         e10 f10 f11 g11 h18 j18 k18 k17 l18 b4 b14 b15 c4 d2 d3 d5 d7 d17 e4 e5 e7 e17 e18 e19 \
         f18 g9 h3 h5 h6 j7 j13 k13 l13 l14 m11 m13 n6 p6 p16 p17 p18 q5 q13 q14 r4 r5 r6 r14 s7 s8",
        "",
    )
}

/// A white group on the upper-left edge whose blocks are all statically
/// alive, surrounded by black.
pub fn edge_life() -> Position {
    Position::new(
        19,
        "a13 b13 b16 b17 b18 c13 c15 c16 c18 d13 d15 d17 d18 e13 e15 e16 e17 f13 g13 g14 g15 g16 \
         g17 g18 g19",
        "a14 b14 b15 c14 d14 e14 f14 f15 f16 f17 f18 f19 e18 a16 a17 a18 b19 c19 d19",
        "",
    )
}

/// Plays uniformly random legal moves, alternating colours and starting
/// with Black, until `stones` stones are on the board. Gives up after
/// `4 * size * size` moves and returns what it has.
pub fn random_position<R: Rng + ?Sized>(size: usize, stones: usize, rng: &mut R) -> Board {
    let mut board = Board::new(size).expect("valid size");
    let mut color = Color::Black;
    for _ in 0..4 * size * size {
        if board.empty_count() + stones <= size * size {
            break;
        }
        let moves = board.legal_moves(color);
        match moves.choose(rng) {
            Some(&c) => {
                board.play(c, color).expect("legal");
            }
            None => board.pass(),
        }
        color = color.opposite();
    }
    board
}

/// A random legal game of `moves` moves; passes only when no legal move
/// is left.
pub fn random_game<R: Rng + ?Sized>(size: usize, moves: usize, rng: &mut R) -> Vec<(Color, Option<Coord>)> {
    let mut board = Board::new(size).expect("valid size");
    let mut color = Color::Black;
    let mut out = Vec::with_capacity(moves);
    for _ in 0..moves {
        let legal = board.legal_moves(color);
        match legal.choose(rng) {
            Some(&c) => {
                board.play(c, color).expect("legal");
                out.push((color, Some(c)));
            }
            None => {
                board.pass();
                out.push((color, None));
            }
        }
        color = color.opposite();
    }
    out
}
