//! Move-prediction statistics and timing over a directory of SGF records.
//!
//! For every position of every game the recorded move is located in the
//! ranking of all legal moves. Its percentile bucket is counted separately
//! for each move number (1-based). `P(x)` is the share of recorded moves in
//! bucket `x` and `R(x)` the share in buckets `x..=99`.

use std::collections::{BTreeMap, BTreeSet};
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{percentile_of, rank_moves, rank_moves_from, Execution, MoveRanking, RankedMove};
use crate::goboard::Board;
use crate::sgf::{parse_sgf, replay, GameRecord, RecordedMove, ReplayError, Replayer};
use crate::solver::{evaluate, resolve_incremental, SolverConfig};

pub const BUCKETS: usize = 100;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("no SGF file in {0} could be parsed")]
    EmptyCorpus(PathBuf),
    #[error("cannot read corpus: {0}")]
    Io(#[from] io::Error),
    #[error("invalid solver configuration: {0}")]
    Config(#[from] crate::solver::ConfigError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictError {
    #[error("move {0} is a pass")]
    Pass(usize),
    #[error("recorded move {0} is not legal here")]
    ProMoveIllegal(usize),
    #[error("move index {0} is past the end of the record")]
    OutOfRange(usize),
    #[error(transparent)]
    Replay(#[from] ReplayError),
}

/// How candidate moves are ordered.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Ranker {
    Seds(SolverConfig),
    /// A seeded random permutation of the legal moves; a baseline for the
    /// harness itself.
    Random { seed: u64 },
}

impl Ranker {
    fn rank(&self, board: &Board, m: &RecordedMove, stream: u64) -> MoveRanking {
        match self {
            Ranker::Seds(config) => rank_moves(board, m.color, config),
            Ranker::Random { seed } => {
                let mut moves = board.legal_moves(m.color);
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(stream);
                moves.shuffle(&mut rng);
                let n = moves.len();
                let entries = moves
                    .into_iter()
                    .enumerate()
                    .map(|(k, coord)| RankedMove {
                        coord,
                        score: (n - k) as f64,
                    })
                    .collect();
                MoveRanking {
                    mover: m.color,
                    entries,
                }
            }
        }
    }
}

fn bucket_of(board: &Board, m: &RecordedMove, index: usize, ranker: &Ranker, stream: u64) -> Result<u8, PredictError> {
    let coord = m.coord.ok_or(PredictError::Pass(index))?;
    if board.is_legal(coord, m.color).is_err() {
        return Err(PredictError::ProMoveIllegal(index));
    }
    let ranking = ranker.rank(board, m, stream);
    Ok(percentile_of(&ranking, coord).expect("legal move is ranked"))
}

/// Percentile bucket of the recorded move `move_index` (0-based).
pub fn predict_rank(record: &GameRecord, move_index: usize, config: &SolverConfig) -> Result<u8, PredictError> {
    let m = record.moves.get(move_index).ok_or(PredictError::OutOfRange(move_index))?;
    if m.coord.is_none() {
        return Err(PredictError::Pass(move_index));
    }
    let board = replay(record, move_index)?;
    bucket_of(&board, m, move_index, &Ranker::Seds(*config), 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionHistogram {
    pub move_number: usize,
    pub buckets: Vec<u64>,
    pub positions_counted: u64,
}

impl PredictionHistogram {
    pub fn new(move_number: usize) -> Self {
        PredictionHistogram {
            move_number,
            buckets: vec![0; BUCKETS],
            positions_counted: 0,
        }
    }

    pub fn record(&mut self, bucket: u8) {
        self.buckets[bucket as usize] += 1;
        self.positions_counted += 1;
    }

    pub fn merge(&mut self, other: &PredictionHistogram) {
        for (a, b) in self.buckets.iter_mut().zip(&other.buckets) {
            *a += b;
        }
        self.positions_counted += other.positions_counted;
    }

    /// `P(x)` in percent; all zero when nothing was counted.
    pub fn density(&self) -> Vec<f64> {
        let n = self.positions_counted.max(1) as f64;
        self.buckets.iter().map(|&c| 100.0 * c as f64 / n).collect()
    }

    pub fn survival(&self) -> SurvivalCurve {
        SurvivalCurve::from_density(&self.density())
    }
}

/// `R(x) = P(x) + P(x+1) + ... + P(99)` in percent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurvivalCurve {
    pub values: Vec<f64>,
}

impl SurvivalCurve {
    /// Sums from the top bucket down, so the sum for any `x` taken in that
    /// order reproduces `values[x]` bit for bit.
    pub fn from_density(p: &[f64]) -> SurvivalCurve {
        let mut values = vec![0.0; p.len()];
        let mut acc = 0.0;
        for x in (0..p.len()).rev() {
            acc += p[x];
            values[x] = acc;
        }
        SurvivalCurve { values }
    }

    pub fn at(&self, x: usize) -> f64 {
        self.values[x]
    }
}

/// Which move numbers (1-based) to include; empty means all.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveFilter(BTreeSet<usize>);

impl MoveFilter {
    pub fn all() -> Self {
        MoveFilter(BTreeSet::new())
    }

    pub fn only(numbers: impl IntoIterator<Item = usize>) -> Self {
        MoveFilter(numbers.into_iter().collect())
    }

    pub fn accepts(&self, move_number: usize) -> bool {
        self.0.is_empty() || self.0.contains(&move_number)
    }

    fn last(&self) -> Option<usize> {
        self.0.iter().next_back().copied()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub histograms: BTreeMap<usize, PredictionHistogram>,
    pub files_parsed: usize,
    pub files_failed: usize,
    pub skipped_pass: u64,
    pub skipped_illegal: u64,
    /// Games cut short by a recorded move our rules reject.
    pub replay_aborted: usize,
}

impl CorpusStats {
    /// All move numbers pooled.
    pub fn combined(&self) -> PredictionHistogram {
        let mut total = PredictionHistogram::new(0);
        for h in self.histograms.values() {
            total.merge(h);
        }
        total
    }

    pub fn positions_counted(&self) -> u64 {
        self.histograms.values().map(|h| h.positions_counted).sum()
    }
}

#[derive(Default)]
struct GameTally {
    buckets: Vec<(usize, u8)>,
    skipped_pass: u64,
    skipped_illegal: u64,
    aborted: bool,
}

fn tally_game(record: &GameRecord, ranker: &Ranker, filter: &MoveFilter, game: u64) -> GameTally {
    let mut t = GameTally::default();
    let mut r = match Replayer::new(record) {
        Ok(r) => r,
        Err(_) => {
            t.aborted = true;
            return t;
        }
    };
    let last = filter.last().unwrap_or(usize::MAX);
    while let Some(m) = r.next_move() {
        let index = r.played();
        let number = index + 1;
        if number > last {
            break;
        }
        if filter.accepts(number) {
            let stream = (game << 16) | index as u64;
            match bucket_of(r.board(), m, index, ranker, stream) {
                Ok(b) => t.buckets.push((number, b)),
                Err(PredictError::Pass(_)) => t.skipped_pass += 1,
                Err(_) => t.skipped_illegal += 1,
            }
        }
        if r.advance().is_err() {
            t.aborted = true;
            break;
        }
    }
    t
}

/// SGF files of a directory, sorted by name.
pub fn corpus_files(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("sgf")))
        .collect();
    files.sort();
    Ok(files)
}

/// Parses every SGF of `dir`; unreadable files are logged and counted.
pub fn load_corpus(dir: &Path) -> Result<(Vec<GameRecord>, usize), BenchError> {
    let mut records = Vec::new();
    let mut failed = 0;
    for path in corpus_files(dir)? {
        match std::fs::read(&path).map_err(|e| e.to_string()).and_then(|b| parse_sgf(&b).map_err(|e| e.to_string())) {
            Ok(r) => records.push(r),
            Err(e) => {
                log::warn!("skipping {}: {e}", path.display());
                failed += 1;
            }
        }
    }
    if records.is_empty() {
        return Err(BenchError::EmptyCorpus(dir.to_path_buf()));
    }
    Ok((records, failed))
}

/// Collects prediction histograms over already parsed records. Games are
/// processed in parallel; the result does not depend on scheduling.
pub fn run_records(records: &[GameRecord], ranker: &Ranker, filter: &MoveFilter) -> CorpusStats {
    let tallies: Vec<GameTally> = records
        .par_iter()
        .enumerate()
        .map(|(g, r)| tally_game(r, ranker, filter, g as u64))
        .collect();
    let mut stats = CorpusStats {
        files_parsed: records.len(),
        ..Default::default()
    };
    for t in tallies {
        for (number, bucket) in t.buckets {
            stats
                .histograms
                .entry(number)
                .or_insert_with(|| PredictionHistogram::new(number))
                .record(bucket);
        }
        stats.skipped_pass += t.skipped_pass;
        stats.skipped_illegal += t.skipped_illegal;
        stats.replay_aborted += t.aborted as usize;
    }
    stats
}

/// [`run_records`] over the SGF files of a directory.
pub fn run_corpus(dir: &Path, config: &SolverConfig, filter: &MoveFilter) -> Result<CorpusStats, BenchError> {
    config.validate()?;
    let (records, failed) = load_corpus(dir)?;
    let mut stats = run_records(&records, &Ranker::Seds(*config), filter);
    stats.files_failed = failed;
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimingRow {
    pub move_number: usize,
    pub samples: usize,
    /// Mean over positions of the fastest time to play the recorded move
    /// and re-solve incrementally.
    pub eval_us: f64,
    /// Mean over positions of the fastest time to solve the position and
    /// rank every legal move.
    pub rank_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TimingProfile {
    pub rows: Vec<TimingRow>,
}

/// Each position is timed this many times and the fastest run kept, which
/// filters out scheduler noise.
const REPEATS: u32 = 7;
/// Incremental evaluations per timed run; one alone is too short to time.
const EVAL_BATCH: u32 = 20;

fn fastest_secs(mut run: impl FnMut()) -> f64 {
    (0..REPEATS)
        .map(|_| {
            let start = Instant::now();
            run();
            start.elapsed().as_secs_f64()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Wall-clock profile at the given move numbers over parsed records. The
/// position measured at move number `m` is the one the `m`-th move is
/// played in.
pub fn timing_records(records: &[GameRecord], config: &SolverConfig, move_numbers: &[usize]) -> TimingProfile {
    let mut rows = Vec::new();
    for &number in move_numbers {
        let mut eval_total = 0.0;
        let mut rank_total = 0.0;
        let mut samples = 0;
        for record in records {
            let Some(m) = record.moves.get(number.wrapping_sub(1)) else { continue };
            let Some(coord) = m.coord else { continue };
            let Ok(board) = replay(record, number - 1) else { continue };
            if board.is_legal(coord, m.color).is_err() {
                continue;
            }
            let (parent, _) = evaluate(&board, config);

            eval_total += fastest_secs(|| {
                for _ in 0..EVAL_BATCH {
                    let (after, delta) = board.apply_move(coord, m.color).unwrap();
                    std::hint::black_box(resolve_incremental(&after, &parent, &delta, config));
                }
            }) * 1e6
                / EVAL_BATCH as f64;
            rank_total += fastest_secs(|| {
                let (parent, _) = evaluate(&board, config);
                std::hint::black_box(rank_moves_from(&board, &parent, m.color, config, Execution::Sequential));
            }) * 1e3;
            samples += 1;
        }
        if samples > 0 {
            rows.push(TimingRow {
                move_number: number,
                samples,
                eval_us: eval_total / samples as f64,
                rank_ms: rank_total / samples as f64,
            });
        }
    }
    TimingProfile { rows }
}

pub fn timing_profile(dir: &Path, config: &SolverConfig, move_numbers: &[usize]) -> Result<TimingProfile, BenchError> {
    config.validate()?;
    if move_numbers.is_empty() {
        return Ok(TimingProfile::default());
    }
    let (records, _) = load_corpus(dir)?;
    Ok(timing_records(&records, config, move_numbers))
}

pub fn write_histogram_csv<W: io::Write>(out: W, stats: &CorpusStats) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["move_number", "bucket", "count"])?;
    for h in stats.histograms.values() {
        for (bucket, count) in h.buckets.iter().enumerate() {
            w.write_record([h.move_number.to_string(), bucket.to_string(), count.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_survival_csv<W: io::Write>(out: W, stats: &CorpusStats) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["move_number", "x", "R"])?;
    for h in stats.histograms.values() {
        for (x, r) in h.survival().values.iter().enumerate() {
            w.write_record([h.move_number.to_string(), x.to_string(), r.to_string()])?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_timing_csv<W: io::Write>(out: W, profile: &TimingProfile) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["move_number", "eval_us", "rank_ms"])?;
    for r in &profile.rows {
        w.write_record([
            r.move_number.to_string(),
            format!("{:.3}", r.eval_us),
            format!("{:.3}", r.rank_ms),
        ])?;
    }
    w.flush()?;
    Ok(())
}
