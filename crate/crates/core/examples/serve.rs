//! The JSON API. Without arguments, answers one evaluate and one rank
//! request in-process; with `--listen` it serves on the default port until
//! Ctrl-C.
//!
//! ```not_rust
//! cargo run --example serve -- --listen
//! curl -s localhost:8642/api/evaluate -d '{"size":9,"black":[{"col":4,"row":4}]}' \
//!      -H 'content-type: application/json'
//! ```

use seds::goboard::{vertices, Color};
use seds::service::{handle_evaluate, handle_rank, serve, PositionPayload, DEFAULT_PORT};

#[tokio::main]
async fn main() -> Result<(), Box<dyn std::error::Error>> {
    if std::env::args().any(|a| a == "--listen") {
        env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
        serve(([127, 0, 0, 1], DEFAULT_PORT).into()).await?;
        return Ok(());
    }

    let payload = PositionPayload {
        size: 9,
        black: vertices("c3 d4 e3", 9),
        white: vertices("f6 g5", 9),
        mover: Some(Color::White),
        ko: None,
        config: Default::default(),
    };
    println!("request:  {}", serde_json::to_string(&payload)?);
    let eval = handle_evaluate(&payload).map_err(|e| e.message)?;
    println!("evaluate: net {:+.2} after {} updates", eval.score.net, eval.sweeps);
    let ranking = handle_rank(&payload).map_err(|e| e.message)?;
    let top: Vec<String> = ranking
        .moves
        .iter()
        .take(3)
        .map(|m| format!("{} ({:+.2})", m.coord.to_vertex(9), m.score))
        .collect();
    println!("rank:     {}", top.join(", "));
    Ok(())
}
