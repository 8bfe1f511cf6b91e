use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Column letters used by vertex notation such as `q16`; `i` is skipped.
const VERTEX_LETTERS: &[u8] = b"abcdefghjklmnopqrstuvwxyz";

/// Largest supported board edge.
pub const MAX_SIZE: usize = 25;

/// An intersection, 0-based, with row 0 at the top edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub col: u8,
    pub row: u8,
}

impl Coord {
    pub const fn new(col: u8, row: u8) -> Self {
        Coord { col, row }
    }

    pub fn in_bounds(self, size: usize) -> bool {
        (self.col as usize) < size && (self.row as usize) < size
    }

    pub(crate) fn index(self, size: usize) -> usize {
        self.row as usize * size + self.col as usize
    }

    pub(crate) fn from_index(index: usize, size: usize) -> Self {
        Coord::new((index % size) as u8, (index / size) as u8)
    }

    /// Parses vertex notation (`d1`, `Q16`): a column letter without `i`
    /// followed by the row counted from the bottom edge.
    pub fn from_vertex(vertex: &str, size: usize) -> Option<Coord> {
        let vertex = vertex.trim().to_ascii_lowercase();
        let mut chars = vertex.bytes();
        let letter = chars.next()?;
        let col = VERTEX_LETTERS.iter().position(|&l| l == letter)?;
        let number: usize = vertex.get(1..)?.parse().ok()?;
        if col >= size || number == 0 || number > size {
            return None;
        }
        Some(Coord::new(col as u8, (size - number) as u8))
    }

    pub fn to_vertex(self, size: usize) -> String {
        format!(
            "{}{}",
            VERTEX_LETTERS[self.col as usize] as char,
            size - self.row as usize
        )
    }
}

/// Row-major order: top row first, then left to right.
impl Ord for Coord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.row, self.col).cmp(&(other.row, other.col))
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.col, self.row)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}
