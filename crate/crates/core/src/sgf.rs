//! SGF game records: the main line of the first game tree, and replay of
//! it onto a [`Board`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::goboard::{Board, BoardError, Color, Coord, IllegalReason, MoveDelta, MAX_SIZE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordedMove {
    pub color: Color,
    /// `None` for a pass.
    pub coord: Option<Coord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameRecord {
    pub board_size: usize,
    pub setup_black: Vec<Coord>,
    pub setup_white: Vec<Coord>,
    pub moves: Vec<RecordedMove>,
    /// Every other property of the main line, values in order of appearance.
    pub metadata: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SgfError {
    #[error("SGF syntax error at byte {0}")]
    SyntaxError(usize),
    #[error("unsupported board size {0}")]
    UnsupportedSize(String),
    #[error("bad value `{value}` for property {property}")]
    BadValue { property: String, value: String },
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

type Node = Vec<(String, Vec<String>)>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<(), SgfError> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(SgfError::SyntaxError(self.pos))
        }
    }

    fn value(&mut self) -> Result<String, SgfError> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        loop {
            match self.bytes.get(self.pos) {
                None => return Err(SgfError::SyntaxError(self.pos)),
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                Some(b'\\') => {
                    match self.bytes.get(self.pos + 1) {
                        None => return Err(SgfError::SyntaxError(self.pos)),
                        Some(&c) => out.push(c),
                    }
                    self.pos += 2;
                }
                Some(&c) => {
                    out.push(c);
                    self.pos += 1;
                }
            }
        }
        Ok(String::from_utf8_lossy(&out).into_owned())
    }

    fn node(&mut self) -> Result<Node, SgfError> {
        self.expect(b';')?;
        let mut props = Vec::new();
        while let Some(c) = self.peek() {
            if !c.is_ascii_alphabetic() {
                break;
            }
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            // old files spell ids with lowercase letters, e.g. `CoPyright`
            let id: String = self.bytes[start..self.pos]
                .iter()
                .filter(|b| b.is_ascii_uppercase())
                .map(|&b| b as char)
                .collect();
            let mut values = Vec::new();
            while self.peek() == Some(b'[') {
                values.push(self.value()?);
            }
            if values.is_empty() {
                return Err(SgfError::SyntaxError(self.pos));
            }
            props.push((id, values));
        }
        Ok(props)
    }

    /// Reads a game tree, keeping the nodes of its first line only.
    fn tree(&mut self, keep: bool, out: &mut Vec<Node>) -> Result<(), SgfError> {
        self.expect(b'(')?;
        let mut first_child = true;
        loop {
            match self.peek() {
                Some(b';') => {
                    let node = self.node()?;
                    if keep && first_child {
                        out.push(node);
                    }
                }
                Some(b'(') => {
                    self.tree(keep && first_child, out)?;
                    first_child = false;
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(());
                }
                _ => return Err(SgfError::SyntaxError(self.pos)),
            }
        }
    }
}

fn decode_point(property: &str, value: &str, size: usize) -> Result<Option<Coord>, SgfError> {
    let bad = || SgfError::BadValue {
        property: property.to_string(),
        value: value.to_string(),
    };
    if value.is_empty() || (value == "tt" && size <= 19) {
        return Ok(None);
    }
    let b = value.as_bytes();
    if b.len() != 2 {
        return Err(bad());
    }
    let axis = |c: u8| match c {
        b'a'..=b'z' => Some(c - b'a'),
        b'A'..=b'Z' => Some(c - b'A' + 26),
        _ => None,
    };
    let (col, row) = (axis(b[0]).ok_or_else(bad)?, axis(b[1]).ok_or_else(bad)?);
    let c = Coord::new(col, row);
    if !c.in_bounds(size) {
        return Err(bad());
    }
    Ok(Some(c))
}

fn decode_points(property: &str, value: &str, size: usize, out: &mut Vec<Coord>) -> Result<(), SgfError> {
    match value.split_once(':') {
        None => out.extend(decode_point(property, value, size)?),
        Some((a, b)) => {
            let bad = || SgfError::BadValue {
                property: property.to_string(),
                value: value.to_string(),
            };
            let a = decode_point(property, a, size)?.ok_or_else(bad)?;
            let b = decode_point(property, b, size)?.ok_or_else(bad)?;
            for row in a.row.min(b.row)..=a.row.max(b.row) {
                for col in a.col.min(b.col)..=a.col.max(b.col) {
                    out.push(Coord::new(col, row));
                }
            }
        }
    }
    Ok(())
}

fn parse_size(value: &str) -> Result<usize, SgfError> {
    let unsupported = || SgfError::UnsupportedSize(value.to_string());
    let (a, b) = value.split_once(':').unwrap_or((value, value));
    let (a, b): (usize, usize) = (
        a.trim().parse().map_err(|_| unsupported())?,
        b.trim().parse().map_err(|_| unsupported())?,
    );
    if a != b || !(2..=MAX_SIZE).contains(&a) {
        return Err(unsupported());
    }
    Ok(a)
}

/// Parses the main line of the first game tree.
pub fn parse_sgf(bytes: &[u8]) -> Result<GameRecord, SgfError> {
    let bytes = bytes.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(bytes);
    let start = bytes
        .iter()
        .position(|&b| b == b'(')
        .ok_or(SgfError::SyntaxError(0))?;
    let mut parser = Parser { bytes, pos: start };
    let mut nodes = Vec::new();
    parser.tree(true, &mut nodes)?;

    let mut size = 19;
    for (id, values) in nodes.first().into_iter().flatten() {
        if id == "SZ" {
            size = parse_size(&values[0])?;
        }
    }

    let mut record = GameRecord {
        board_size: size,
        setup_black: Vec::new(),
        setup_white: Vec::new(),
        moves: Vec::new(),
        metadata: BTreeMap::new(),
    };
    for (n, node) in nodes.into_iter().enumerate() {
        for (id, values) in node {
            match id.as_str() {
                "SZ" if n == 0 => {}
                "AB" if n == 0 => {
                    for v in &values {
                        decode_points(&id, v, size, &mut record.setup_black)?;
                    }
                }
                "AW" if n == 0 => {
                    for v in &values {
                        decode_points(&id, v, size, &mut record.setup_white)?;
                    }
                }
                "B" | "W" => {
                    let color = if id == "B" { Color::Black } else { Color::White };
                    record.moves.push(RecordedMove {
                        color,
                        coord: decode_point(&id, &values[0], size)?,
                    });
                }
                _ => record.metadata.entry(id).or_default().extend(values),
            }
        }
    }
    Ok(record)
}

fn encode_point(c: Coord) -> String {
    let axis = |v: u8| if v < 26 { (b'a' + v) as char } else { (b'A' + v - 26) as char };
    format!("{}{}", axis(c.col), axis(c.row))
}

fn escape(value: &str) -> String {
    value.replace('\\', "\\\\").replace(']', "\\]")
}

/// Writes a record as a single-line-per-node SGF.
pub fn emit(record: &GameRecord) -> String {
    let mut out = String::from("(;");
    write!(out, "SZ[{}]", record.board_size).unwrap();
    for (id, values) in &record.metadata {
        out.push_str(id);
        for v in values {
            write!(out, "[{}]", escape(v)).unwrap();
        }
    }
    for (id, stones) in [("AB", &record.setup_black), ("AW", &record.setup_white)] {
        if !stones.is_empty() {
            out.push_str(id);
            for &c in stones {
                write!(out, "[{}]", encode_point(c)).unwrap();
            }
        }
    }
    for m in &record.moves {
        let id = match m.color {
            Color::Black => 'B',
            Color::White => 'W',
        };
        let v = m.coord.map(encode_point).unwrap_or_default();
        write!(out, "\n;{id}[{v}]").unwrap();
    }
    out.push_str(")\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("setup stones do not form a position: {0}")]
    Setup(#[from] BoardError),
    #[error("recorded move {index} is illegal: {reason}")]
    IllegalRecordedMove { index: usize, reason: IllegalReason },
    #[error("asked for {upto} moves, record has {len}")]
    OutOfRange { upto: usize, len: usize },
}

/// Steps through a record one move at a time.
#[derive(Clone, Debug)]
pub struct Replayer<'a> {
    record: &'a GameRecord,
    board: Board,
    played: usize,
}

impl<'a> Replayer<'a> {
    pub fn new(record: &'a GameRecord) -> Result<Self, ReplayError> {
        let board = Board::build_position(record.board_size, &record.setup_black, &record.setup_white)?;
        Ok(Replayer {
            record,
            board,
            played: 0,
        })
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    /// Number of moves applied so far.
    pub fn played(&self) -> usize {
        self.played
    }

    pub fn next_move(&self) -> Option<&'a RecordedMove> {
        self.record.moves.get(self.played)
    }

    /// Applies the next move; `Ok(None)` at the end of the record. A pass
    /// yields an empty delta.
    pub fn advance(&mut self) -> Result<Option<MoveDelta>, ReplayError> {
        let Some(m) = self.next_move() else { return Ok(None) };
        let delta = match m.coord {
            None => {
                self.board.pass();
                MoveDelta::default()
            }
            Some(c) => self.board.play(c, m.color).map_err(|e| ReplayError::IllegalRecordedMove {
                index: self.played,
                reason: e.reason,
            })?,
        };
        self.played += 1;
        Ok(Some(delta))
    }
}

/// Position after the setup stones and the first `upto` moves.
pub fn replay(record: &GameRecord, upto: usize) -> Result<Board, ReplayError> {
    if upto > record.moves.len() {
        return Err(ReplayError::OutOfRange {
            upto,
            len: record.moves.len(),
        });
    }
    let mut r = Replayer::new(record)?;
    while r.played() < upto {
        r.advance()?;
    }
    Ok(r.board)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_records() {
        let r = parse_sgf(b"(;FF[4]SZ[9];B[ee])").unwrap();
        assert_eq!(r.board_size, 9);
        assert_eq!(
            r.moves,
            vec![RecordedMove {
                color: Color::Black,
                coord: Some(Coord::new(4, 4))
            }]
        );
        assert_eq!(r.metadata["FF"], vec!["4"]);

        let r = parse_sgf(b"(;SZ[19]AB[dd][pd];W[qq])").unwrap();
        assert_eq!(r.setup_black, vec![Coord::new(3, 3), Coord::new(15, 3)]);
        assert_eq!(r.moves.len(), 1);
        assert_eq!(r.moves[0].color, Color::White);

        let r = parse_sgf(b"(;SZ[19];B[tt];W[])").unwrap();
        assert_eq!(r.moves[0].coord, None);
        assert_eq!(r.moves[1].coord, None);
    }

    #[test]
    fn tt_is_a_point_on_large_boards() {
        let r = parse_sgf(b"(;SZ[21];B[tt])").unwrap();
        assert_eq!(r.moves[0].coord, Some(Coord::new(19, 19)));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_sgf(b"(;SZ[26])"), Err(SgfError::UnsupportedSize("26".into())));
        assert!(matches!(parse_sgf(b"(;SZ[9];B[ee]"), Err(SgfError::SyntaxError(_))));
        assert!(matches!(parse_sgf(b"no tree here"), Err(SgfError::SyntaxError(0))));
        assert!(matches!(parse_sgf(b"(;SZ[9];B[zz])"), Err(SgfError::BadValue { .. })));
    }

    #[test]
    fn variations_and_escapes() {
        let r = parse_sgf(b"(;C[a \\] b];B[aa](;W[bb];B[cc])(;W[dd]))").unwrap();
        assert_eq!(r.metadata["C"], vec!["a ] b"]);
        let coords: Vec<_> = r.moves.iter().map(|m| m.coord.unwrap()).collect();
        assert_eq!(coords, vec![Coord::new(0, 0), Coord::new(1, 1), Coord::new(2, 2)]);
    }

    #[test]
    fn compressed_point_lists() {
        let r = parse_sgf(b"(;SZ[9]AW[aa:bb])").unwrap();
        assert_eq!(r.setup_white.len(), 4);
    }

    #[test]
    fn corner_capture_replay() {
        // white a1 is captured by black a2 and b1
        let r = parse_sgf(b"(;SZ[9];W[ai];B[ah];W[ee];B[bi])").unwrap();
        let board = replay(&r, 4).unwrap();
        assert!(board.is_empty_at(Coord::new(0, 8)));
        assert_eq!(board.stones(Color::Black).len(), 2);
        assert_eq!(replay(&r, 0).unwrap().empty_count(), 81);
    }

    #[test]
    fn illegal_record_reports_index() {
        let r = parse_sgf(b"(;SZ[9];B[aa];W[aa])").unwrap();
        assert_eq!(
            replay(&r, 2).unwrap_err(),
            ReplayError::IllegalRecordedMove {
                index: 1,
                reason: IllegalReason::Occupied
            }
        );
    }
}
