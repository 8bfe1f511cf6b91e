//! Command-line front end. Exit status: 0 on success, 1 for bad input,
//! 2 for an internal failure.

use std::fs::File;
use std::io::{self, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seds::analysis::{percentile_of, rank_moves, score};
use seds::bench::{self, BenchError, MoveFilter};
use seds::goboard::{Board, Color};
use seds::positions::random_position;
use seds::sgf::{parse_sgf, replay, GameRecord};
use seds::solver::{
    evaluate, solve, solve_dense_oracle, AtariAdjustment, SedsState, SolverConfig, DEFAULT_MAX_ITER,
    DEFAULT_STOP_VALUE,
};

#[derive(Parser)]
#[command(name = "seds", version, about = "Static evaluation of Go positions by fixed-point iteration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SolverArgs {
    #[arg(long, env = "SEDS_STOP_VALUE", default_value_t = DEFAULT_STOP_VALUE)]
    stop_value: f64,
    #[arg(long, env = "SEDS_MAX_ITER", default_value_t = DEFAULT_MAX_ITER)]
    max_iter: u32,
    #[arg(long, default_value = "multi_liberty_only")]
    atari_adjustment: AtariAdjustment,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig, Failure> {
        let config = SolverConfig {
            stop_value: self.stop_value,
            max_iter: self.max_iter,
            atari_adjustment: self.atari_adjustment,
        };
        config.validate().map_err(|e| Failure::Input(e.to_string()))?;
        Ok(config)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print ownership and block survival of a game position.
    Eval {
        sgf: PathBuf,
        /// Number of recorded moves to play first.
        #[arg(long = "move", default_value_t = 0)]
        move_number: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Rank every legal move of the side to play.
    Rank {
        sgf: PathBuf,
        #[arg(long = "move", default_value_t = 0)]
        move_number: usize,
        #[arg(long)]
        top: Option<usize>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Prediction statistics of recorded moves over a directory of SGFs.
    Bench {
        dir: PathBuf,
        /// Move numbers to include, e.g. `30,40,50`; all when omitted.
        #[arg(long, value_delimiter = ',')]
        moves: Vec<usize>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Mean evaluation and ranking time at the given move numbers, as CSV.
    Timing {
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "10,30,100,130,200,300")]
        moves: Vec<usize>,
        /// Also write timing.csv into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Compare the worklist solver with dense iteration on random positions.
    OracleCheck {
        #[arg(long, default_value_t = 50)]
        positions: usize,
        #[arg(long, default_value_t = 9)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1e-5)]
        stop_value: f64,
        #[arg(long, default_value_t = 1000)]
        max_iter: u32,
        /// Largest deviation accepted.
        #[arg(long, default_value_t = 1e-3)]
        tolerance: f64,
    },
    /// Run the HTTP evaluation service.
    Serve {
        #[arg(long, env = "SEDS_PORT", default_value_t = seds::service::DEFAULT_PORT)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<BenchError> for Failure {
    fn from(e: BenchError) -> Self {
        match e {
            BenchError::EmptyCorpus(_) | BenchError::Config(_) => Failure::Input(e.to_string()),
            BenchError::Io(_) => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn load_record(path: &Path) -> Result<GameRecord, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_sgf(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn position(path: &Path, move_number: usize) -> Result<(GameRecord, Board), Failure> {
    let record = load_record(path)?;
    let board = replay(&record, move_number).map_err(|e| Failure::Input(e.to_string()))?;
    Ok((record, board))
}

/// Colour of the recorded move after `played` moves, else the side that
/// did not play last.
fn side_to_move(record: &GameRecord, played: usize) -> Color {
    match record.moves.get(played) {
        Some(m) => m.color,
        None => match played.checked_sub(1).and_then(|i| record.moves.get(i)) {
            Some(m) => m.color.opposite(),
            None if record.setup_black.is_empty() => Color::Black,
            None => Color::White,
        },
    }
}

fn print_state(out: &mut impl Write, board: &Board, state: &SedsState) -> io::Result<()> {
    let size = board.size();
    writeln!(out, "ownership (w, 1 = White; stones shown as X / O)")?;
    for row in 0..size {
        let mut line = String::new();
        for col in 0..size {
            let c = seds::goboard::Coord::new(col as u8, row as u8);
            match board.color_at(c) {
                Some(Color::Black) => line.push_str("    X"),
                Some(Color::White) => line.push_str("    O"),
                None => line.push_str(&format!(" {:.2}", state.w(c).unwrap())),
            }
        }
        writeln!(out, "{:>2} {line}", size - row)?;
    }
    writeln!(out, "blocks")?;
    for b in board.blocks() {
        let stones: Vec<String> = b.stones().map(|c| c.to_vertex(size)).collect();
        writeln!(
            out,
            "  {:<5} s={:.4}{} {}",
            b.color().to_string(),
            state.s(b.id()).unwrap(),
            if b.is_statically_alive() { " (static)" } else { "" },
            stones.join(" ")
        )?;
    }
    let sc = score(board, state);
    writeln!(
        out,
        "score: black {:.2} white {:.2} net {:+.2}",
        sc.black_total, sc.white_total, sc.net
    )
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Failure::Internal(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Eval { sgf, move_number, solver } => {
            let config = solver.config()?;
            let (_, board) = position(&sgf, move_number)?;
            let (state, stats) = evaluate(&board, &config);
            print_state(&mut out, &board, &state)?;
            writeln!(out, "sweeps {} converged {}", stats.sweeps, stats.converged)?;
        }
        Command::Rank { sgf, move_number, top, solver } => {
            let config = solver.config()?;
            let (record, board) = position(&sgf, move_number)?;
            let mover = side_to_move(&record, move_number);
            let ranking = rank_moves(&board, mover, &config);
            writeln!(out, "{mover} to play, {} legal moves", ranking.len())?;
            for (k, e) in ranking.entries.iter().take(top.unwrap_or(usize::MAX)).enumerate() {
                let pct = percentile_of(&ranking, e.coord).expect("ranked");
                writeln!(out, "{:>4} {:<4} {:+9.3} {:>3}", k + 1, e.coord.to_vertex(board.size()), e.score, pct)?;
            }
        }
        Command::Bench { dir, moves, out: out_dir, jobs, solver } => {
            let config = solver.config()?;
            let filter = MoveFilter::only(moves);
            let stats = with_jobs(jobs, || bench::run_corpus(&dir, &config, &filter))??;
            std::fs::create_dir_all(&out_dir)?;
            bench::write_histogram_csv(File::create(out_dir.join("histogram.csv"))?, &stats)?;
            bench::write_survival_csv(File::create(out_dir.join("survival.csv"))?, &stats)?;
            let all = stats.combined();
            let r = all.survival();
            writeln!(
                out,
                "{} files ({} unreadable), {} positions, {} passes and {} illegal records skipped",
                stats.files_parsed,
                stats.files_failed,
                all.positions_counted,
                stats.skipped_pass,
                stats.skipped_illegal
            )?;
            if all.positions_counted > 0 {
                writeln!(out, "R(50) {:.1}  R(80) {:.1}  R(90) {:.1}", r.at(50), r.at(80), r.at(90))?;
            }
            writeln!(out, "wrote {}", out_dir.display())?;
        }
        Command::Timing { dir, moves, out: out_dir, solver } => {
            let config = solver.config()?;
            let profile = bench::timing_profile(&dir, &config, &moves)?;
            bench::write_timing_csv(&mut out, &profile)?;
            if let Some(d) = out_dir {
                std::fs::create_dir_all(&d)?;
                bench::write_timing_csv(File::create(d.join("timing.csv"))?, &profile)?;
            }
        }
        Command::OracleCheck { positions, size, seed, stop_value, max_iter, tolerance } => {
            let config = SolverConfig {
                stop_value,
                max_iter,
                ..Default::default()
            };
            config.validate().map_err(|e| Failure::Input(e.to_string()))?;
            if !(2..=seds::goboard::MAX_SIZE).contains(&size) {
                return Err(Failure::Input(format!("board size {size} outside 2..=25")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let area = size * size;
            let mut worst: f64 = 0.0;
            for k in 0..positions {
                let stones = area / 8 + k % (area / 3).max(1);
                let board = random_position(size, stones, &mut rng);
                let mut fast = SedsState::init(&board);
                solve(&board, &mut fast, &config);
                let dense = solve_dense_oracle(&board, &SedsState::init(&board), &config)
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                worst = worst.max(fast.max_deviation(&dense));
            }
            writeln!(out, "positions {positions} size {size} seed {seed}: max deviation {worst:.3e}")?;
            if worst >= tolerance {
                return Err(Failure::Internal(format!("deviation {worst:.3e} exceeds {tolerance:e}")));
            }
        }
        Command::Serve { port, host } => {
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(seds::service::serve(SocketAddr::new(host, port)))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
