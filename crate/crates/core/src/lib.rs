//! Static evaluation of Go positions as the fixed point of a sparse
//! dynamical system over empty points and blocks.
//!
//! ```
//! use seds::goboard::{vertices, Board};
//! use seds::solver::{evaluate, SolverConfig};
//! use seds::analysis::score;
//!
//! let board = Board::build_position(9, &vertices("c3 d4", 9), &vertices("f6", 9)).unwrap();
//! let (state, _) = evaluate(&board, &SolverConfig::default());
//! assert!(score(&board, &state).net > 0.0);
//! ```

pub mod analysis;
pub mod bench;
pub mod goboard;
pub mod positions;
pub mod service;
pub mod sgf;
pub mod solver;
