use std::path::Path;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seds::goboard::{Color, Coord};
use seds::positions::random_game;
use seds::sgf::{emit, parse_sgf, replay, GameRecord, RecordedMove, ReplayError, Replayer, SgfError};

fn corpus() -> Vec<(String, Vec<u8>)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/pro");
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "sgf"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), std::fs::read(&p).unwrap()))
        .collect()
}

type Scanned = Vec<(bool, Option<(usize, usize)>)>;

/// Main line by a plain scan: follow the first branch at every fork and
/// stop at the first closing parenthesis. Returns the size, the setup
/// stones and the moves, each as `(is_black, Some((col, row)))`.
fn scan_main_line(bytes: &[u8]) -> (usize, Scanned, Scanned) {
    let text = String::from_utf8_lossy(bytes);
    let chars: Vec<char> = text.chars().collect();
    let mut size = 19;
    let mut setup = Vec::new();
    let mut moves = Vec::new();
    let mut ident = String::new();
    let mut last_ident = String::new();
    let mut i = 0;
    let mut opened = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            '(' => opened += 1,
            ')' if opened > 0 => break,
            '[' => {
                if !ident.is_empty() {
                    last_ident = std::mem::take(&mut ident);
                }
                let mut value = String::new();
                i += 1;
                while chars[i] != ']' {
                    if chars[i] == '\\' {
                        i += 1;
                    }
                    value.push(chars[i]);
                    i += 1;
                }
                match last_ident.as_str() {
                    "SZ" => size = value.trim().parse().unwrap(),
                    "AB" | "AW" => {
                        let v = value.as_bytes();
                        setup.push((last_ident == "AB", Some(((v[0] - b'a') as usize, (v[1] - b'a') as usize))));
                    }
                    "B" | "W" => {
                        let v: Vec<u8> = value.bytes().collect();
                        let point = if v.len() == 2 && !(size <= 19 && value == "tt") {
                            Some(((v[0] - b'a') as usize, (v[1] - b'a') as usize))
                        } else {
                            None
                        };
                        moves.push((last_ident == "B", point));
                    }
                    _ => {}
                }
            }
            c if c.is_ascii_uppercase() => ident.push(c),
            ';' => ident.clear(),
            _ => {}
        }
        i += 1;
    }
    (size, setup, moves)
}

/// A deliberately naive replayer on a plain grid. Returns the stones left
/// on the board and the number of captured stones.
fn naive_replay(size: usize, setup: &Scanned, moves: &Scanned) -> (usize, usize) {
    let mut grid = vec![0i8; size * size];
    for &(black, point) in setup {
        let (c, r) = point.unwrap();
        grid[r * size + c] = if black { 1 } else { -1 };
    }
    let mut captured = 0;
    let neighbours = |p: usize| {
        let (c, r) = (p % size, p / size);
        let mut v = Vec::new();
        if c > 0 {
            v.push(p - 1);
        }
        if c + 1 < size {
            v.push(p + 1);
        }
        if r > 0 {
            v.push(p - size);
        }
        if r + 1 < size {
            v.push(p + size);
        }
        v
    };
    let group = |grid: &[i8], start: usize| {
        let mut seen = vec![start];
        let mut k = 0;
        let mut libs = 0;
        while k < seen.len() {
            for n in neighbours(seen[k]) {
                if grid[n] == 0 {
                    libs += 1;
                } else if grid[n] == grid[start] && !seen.contains(&n) {
                    seen.push(n);
                }
            }
            k += 1;
        }
        (seen, libs)
    };
    for &(black, point) in moves {
        let Some((c, r)) = point else { continue };
        let p = r * size + c;
        let me = if black { 1 } else { -1 };
        grid[p] = me;
        for n in neighbours(p) {
            if grid[n] == -me {
                let (stones, libs) = group(&grid, n);
                if libs == 0 {
                    captured += stones.len();
                    for s in stones {
                        grid[s] = 0;
                    }
                }
            }
        }
    }
    (grid.iter().filter(|&&x| x != 0).count(), captured)
}

#[test]
fn parse_examples() {
    let r = parse_sgf(b"(;FF[4]SZ[9];B[ee])").unwrap();
    assert_eq!(r.board_size, 9);
    assert_eq!(r.moves, vec![RecordedMove { color: Color::Black, coord: Some(Coord::new(4, 4)) }]);

    let r = parse_sgf(b"(;SZ[19]AB[dd][pd];W[qq])").unwrap();
    assert_eq!((r.setup_black.len(), r.moves.len()), (2, 1));
    assert_eq!(r.moves[0], RecordedMove { color: Color::White, coord: Some(Coord::new(16, 16)) });

    let r = parse_sgf(b"(;SZ[19];B[tt])").unwrap();
    assert_eq!(r.moves, vec![RecordedMove { color: Color::Black, coord: None }]);

    let r = parse_sgf(b"(;GM[1]PB[Honinbo Shusaku]RE[B+2];B[pd])").unwrap();
    assert_eq!(r.board_size, 19);
    assert_eq!(r.metadata["PB"], vec!["Honinbo Shusaku"]);
}

#[test]
fn parse_errors() {
    assert_eq!(parse_sgf(b"(;SZ[30];B[aa])"), Err(SgfError::UnsupportedSize("30".into())));
    assert!(matches!(parse_sgf(b"(;B[aa]"), Err(SgfError::SyntaxError(_))));
    assert!(matches!(parse_sgf(b""), Err(SgfError::SyntaxError(0))));
}

#[test]
fn passes_agree_with_a_plain_scan_of_the_corpus() {
    for (name, bytes) in corpus() {
        let record = parse_sgf(&bytes).unwrap();
        let (size, setup, scanned) = scan_main_line(&bytes);
        assert_eq!(setup.len(), record.setup_black.len() + record.setup_white.len(), "{name}");
        assert_eq!(record.board_size, size, "{name}");
        assert_eq!(record.moves.len(), scanned.len(), "{name}");
        for (m, (black, point)) in record.moves.iter().zip(&scanned) {
            assert_eq!(m.color == Color::Black, *black, "{name}");
            assert_eq!(m.coord.map(|c| (c.col as usize, c.row as usize)), *point, "{name}");
        }
    }
}

#[test]
fn replaying_nothing_gives_an_empty_board() {
    let r = parse_sgf(b"(;SZ[13];B[dd];W[jj])").unwrap();
    assert_eq!(replay(&r, 0).unwrap().empty_count(), 169);
    assert_eq!(replay(&r, 3).unwrap_err(), ReplayError::OutOfRange { upto: 3, len: 2 });
}

#[test]
fn a_corner_capture_removes_the_stone() {
    // White takes the corner, Black surrounds it from a2 and b1.
    let r = parse_sgf(b"(;SZ[9];W[ai];B[ah];W[ee];B[bi])").unwrap();
    let board = replay(&r, 4).unwrap();
    let a1 = Coord::from_vertex("a1", 9).unwrap();
    assert!(board.is_empty_at(a1));
    assert_eq!(board.stones(Color::White), vec![Coord::from_vertex("e5", 9).unwrap()]);
    assert!(replay(&r, 3).unwrap().color_at(a1) == Some(Color::White));
}

#[test]
fn stone_counts_match_a_naive_replayer() {
    for (name, bytes) in corpus() {
        let record = parse_sgf(&bytes).unwrap();
        let (size, setup, scanned) = scan_main_line(&bytes);
        let (left, captured) = naive_replay(size, &setup, &scanned);
        let board = replay(&record, record.moves.len()).unwrap();
        let on_board = board.stones(Color::Black).len() + board.stones(Color::White).len();
        assert_eq!(on_board, left, "{name}");
        let placed = record.moves.iter().filter(|m| m.coord.is_some()).count();
        assert_eq!(on_board, setup.len() + placed - captured, "{name}");
    }
}

#[test]
fn each_move_adds_one_stone_and_removes_the_captures() {
    for (name, bytes) in corpus() {
        let record = parse_sgf(&bytes).unwrap();
        let mut r = Replayer::new(&record).unwrap();
        let mut prev = r.board().clone();
        while let Some(m) = r.next_move().copied() {
            let delta = r.advance().unwrap().unwrap();
            let next = r.board();
            let mut changed = Vec::new();
            for row in 0..next.size() {
                for col in 0..next.size() {
                    let c = Coord::new(col as u8, row as u8);
                    if prev.color_at(c) != next.color_at(c) {
                        changed.push(c);
                    }
                }
            }
            match m.coord {
                None => assert!(changed.is_empty(), "{name}"),
                Some(at) => {
                    assert_eq!(next.color_at(at), Some(m.color), "{name}");
                    let mut gone: Vec<Coord> = changed.into_iter().filter(|&c| c != at).collect();
                    gone.sort();
                    let mut captured = delta.captured_stones.clone();
                    captured.sort();
                    assert_eq!(gone, captured, "{name}");
                    assert!(gone.iter().all(|&c| prev.color_at(c) == Some(m.color.opposite())));
                }
            }
            prev = next.clone();
        }
    }
}

#[test]
fn corpus_files_round_trip() {
    for (name, bytes) in corpus() {
        let record = parse_sgf(&bytes).unwrap();
        assert_eq!(parse_sgf(emit(&record).as_bytes()).unwrap(), record, "{name}");
    }
}

fn record_strategy() -> impl Strategy<Value = GameRecord> {
    (any::<u64>(), 0usize..120, prop::sample::select(vec![9usize, 13, 19])).prop_map(|(seed, moves, size)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let game = random_game(size, moves, &mut rng);
        let mut metadata = std::collections::BTreeMap::new();
        metadata.insert("C".to_string(), vec![format!("seed {seed} [x] \\ y")]);
        metadata.insert("KM".to_string(), vec!["6.5".to_string()]);
        GameRecord {
            board_size: size,
            setup_black: Vec::new(),
            setup_white: Vec::new(),
            moves: game.into_iter().map(|(color, coord)| RecordedMove { color, coord }).collect(),
            metadata,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn emitted_records_reparse_equal(record in record_strategy()) {
        let text = emit(&record);
        prop_assert_eq!(parse_sgf(text.as_bytes()).unwrap(), record.clone());
        prop_assert!(replay(&record, record.moves.len()).is_ok());
    }
}
