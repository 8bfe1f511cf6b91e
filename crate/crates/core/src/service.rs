//! Stateless JSON-over-HTTP API. Every request carries the whole position.
//!
//! * `POST /api/evaluate` solves a position.
//! * `POST /api/rank` ranks every legal move of `mover`.
//! * `GET /api/health` reports the version and default configuration.

use std::net::SocketAddr;

use axum::extract::rejection::JsonRejection;
use axum::extract::DefaultBodyLimit;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::cors::CorsLayer;

use crate::analysis::{percentile_of, rank_moves_from, score, Execution, InstabilityMap, Score};
use crate::goboard::{Board, BoardError, Color, Coord};
use crate::solver::{evaluate, AtariAdjustment, SolverConfig};

pub const DEFAULT_PORT: u16 = 8642;
pub const BODY_LIMIT: usize = 64 * 1024;

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    pub stop_value: Option<f64>,
    pub max_iter: Option<u32>,
    pub atari_adjustment: Option<AtariAdjustment>,
}

impl ConfigOverrides {
    pub fn apply(&self, base: SolverConfig) -> SolverConfig {
        SolverConfig {
            stop_value: self.stop_value.unwrap_or(base.stop_value),
            max_iter: self.max_iter.unwrap_or(base.max_iter),
            atari_adjustment: self.atari_adjustment.unwrap_or(base.atari_adjustment),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositionPayload {
    pub size: usize,
    #[serde(default)]
    pub black: Vec<Coord>,
    #[serde(default)]
    pub white: Vec<Coord>,
    #[serde(default)]
    pub mover: Option<Color>,
    /// Point the mover may not play because it would retake a ko.
    #[serde(default)]
    pub ko: Option<Coord>,
    #[serde(default)]
    pub config: ConfigOverrides,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointEntry {
    pub coord: Coord,
    pub w: f64,
    pub iterations: u32,
    /// Largest update count over the point and its adjacent blocks.
    pub instability: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub id: u32,
    pub color: Color,
    pub stones: Vec<Coord>,
    pub s: f64,
    pub statically_alive: bool,
    pub iterations: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvaluationPayload {
    pub size: usize,
    pub points: Vec<PointEntry>,
    pub blocks: Vec<BlockEntry>,
    pub score: Score,
    pub sweeps: u64,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MoveEntry {
    pub coord: Coord,
    pub score: f64,
    pub percentile: u8,
    /// Instability of the point before the move.
    pub instability: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankingPayload {
    pub mover: Color,
    pub moves: Vec<MoveEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HealthPayload {
    pub status: String,
    pub version: String,
    pub default_config: SolverConfig,
}

/// An error with its HTTP status and a machine-readable `reason`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ServiceError {
    #[serde(skip)]
    pub status: u16,
    pub reason: String,
    pub message: String,
}

impl ServiceError {
    fn new(status: StatusCode, reason: &str, message: impl Into<String>) -> Self {
        ServiceError {
            status: status.as_u16(),
            reason: reason.to_string(),
            message: message.into(),
        }
    }
}

impl From<BoardError> for ServiceError {
    fn from(e: BoardError) -> Self {
        let reason = match e {
            BoardError::BadSize(_) => "BadSize",
            BoardError::BadCoord(_) => "BadCoord",
            BoardError::OverlappingStones(_) => "OverlappingStones",
            BoardError::ZeroLibertyBlock(_) => "ZeroLibertyBlock",
        };
        ServiceError::new(StatusCode::BAD_REQUEST, reason, e.to_string())
    }
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self)).into_response()
    }
}

fn prepare(payload: &PositionPayload) -> Result<(Board, SolverConfig), ServiceError> {
    let config = payload.config.apply(SolverConfig::default());
    config
        .validate()
        .map_err(|e| ServiceError::new(StatusCode::UNPROCESSABLE_ENTITY, "ConfigOutOfRange", e.to_string()))?;
    let mut board = Board::build_position(payload.size, &payload.black, &payload.white)?;
    if let Some(ko) = payload.ko {
        let mover = payload.mover.ok_or_else(|| {
            ServiceError::new(StatusCode::UNPROCESSABLE_ENTITY, "MissingMover", "a ko point needs a mover")
        })?;
        board.set_ko(ko, mover)?;
    }
    Ok((board, config))
}

pub fn handle_evaluate(payload: &PositionPayload) -> Result<EvaluationPayload, ServiceError> {
    let (board, config) = prepare(payload)?;
    let (state, stats) = evaluate(&board, &config);
    let instability = InstabilityMap::new(&board, &stats);
    let points = state
        .points()
        .map(|(coord, w)| PointEntry {
            coord,
            w,
            iterations: stats.point_iterations(coord),
            instability: instability.aggregate_at(coord),
        })
        .collect();
    let blocks = board
        .blocks()
        .map(|b| BlockEntry {
            id: b.id().0,
            color: b.color(),
            stones: b.stones().collect(),
            s: state.s(b.id()).expect("state matches board"),
            statically_alive: b.is_statically_alive(),
            iterations: stats.block_iterations(b.id()),
        })
        .collect();
    Ok(EvaluationPayload {
        size: board.size(),
        points,
        blocks,
        score: score(&board, &state),
        sweeps: stats.sweeps,
        converged: stats.converged,
    })
}

pub fn handle_rank(payload: &PositionPayload) -> Result<RankingPayload, ServiceError> {
    let mover = payload
        .mover
        .ok_or_else(|| ServiceError::new(StatusCode::UNPROCESSABLE_ENTITY, "MissingMover", "rank needs a mover"))?;
    let (board, config) = prepare(payload)?;
    let (parent, stats) = evaluate(&board, &config);
    let instability = InstabilityMap::new(&board, &stats);
    let ranking = rank_moves_from(&board, &parent, mover, &config, Execution::Sequential);
    let moves = ranking
        .entries
        .iter()
        .map(|e| MoveEntry {
            coord: e.coord,
            score: e.score,
            percentile: percentile_of(&ranking, e.coord).expect("entry is ranked"),
            instability: instability.aggregate_at(e.coord),
        })
        .collect();
    Ok(RankingPayload { mover, moves })
}

fn parse_body(body: Result<Json<PositionPayload>, JsonRejection>) -> Result<PositionPayload, ServiceError> {
    body.map(|Json(p)| p).map_err(|e| {
        let status = if e.status() == StatusCode::PAYLOAD_TOO_LARGE {
            StatusCode::PAYLOAD_TOO_LARGE
        } else {
            StatusCode::BAD_REQUEST
        };
        ServiceError::new(status, "BadRequest", e.body_text())
    })
}

async fn evaluate_route(body: Result<Json<PositionPayload>, JsonRejection>) -> Result<Json<EvaluationPayload>, ServiceError> {
    let payload = parse_body(body)?;
    tokio::task::spawn_blocking(move || handle_evaluate(&payload))
        .await
        .map_err(|e| ServiceError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string()))?
        .map(Json)
}

async fn rank_route(body: Result<Json<PositionPayload>, JsonRejection>) -> Result<Json<RankingPayload>, ServiceError> {
    let payload = parse_body(body)?;
    tokio::task::spawn_blocking(move || handle_rank(&payload))
        .await
        .map_err(|e| ServiceError::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string()))?
        .map(Json)
}

async fn health_route() -> Json<HealthPayload> {
    Json(HealthPayload {
        status: "ok".to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        default_config: SolverConfig::default(),
    })
}

pub fn router() -> Router {
    Router::new()
        .route("/api/evaluate", post(evaluate_route))
        .route("/api/rank", post(rank_route))
        .route("/api/health", get(health_route))
        .layer(DefaultBodyLimit::max(BODY_LIMIT))
        .layer(CorsLayer::permissive())
}

/// Serves until Ctrl-C.
pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router())
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
