//! The small reference positions and where the dynamics settle on them.

use seds::goboard::Color;
use seds::positions;
use seds::solver::{bar_values, dense_sweep, solve, update_point, AtariAdjustment, SedsState, SolverConfig};

fn main() {
    let tight = SolverConfig::tight();

    let p = positions::three_points();
    let bar = bar_values(&p.board, &p.initial_state(), p.at("g7"));
    println!(
        "three points, first update of g7: {:.6} (w_bar {}, b_bar {})",
        update_point(bar).unwrap(),
        bar.w_bar,
        bar.b_bar
    );

    let p = positions::five_points();
    let mut st = p.initial_state();
    solve(&p.board, &mut st, &tight);
    println!("five points, fixed point at e7: {:.6}", st.w(p.at("e7")).unwrap());

    let p = positions::mutual_atari();
    let mut st = p.initial_state();
    solve(&p.board, &mut st, &tight);
    println!(
        "mutual atari: w(d1) {:.6}, s(c1) {:.6}, s(d2) {:.6}",
        st.w(p.at("d1")).unwrap(),
        st.s(p.block("c1")).unwrap(),
        st.s(p.block("d2")).unwrap()
    );

    let p = positions::corner_semeai();
    let mut st = p.initial_state();
    solve(&p.board, &mut st, &SolverConfig::default());
    println!(
        "corner semeai: black {:.3}, white {:.3}",
        st.s(p.block("b2")).unwrap(),
        st.s(p.block("d2")).unwrap()
    );

    // Total domination by either side is always a fixed point as well.
    let board = &positions::full_board().board;
    for winner in [Color::White, Color::Black] {
        let extreme = SedsState::extreme(board, winner);
        let moved = dense_sweep(board, &extreme, AtariAdjustment::MultiLibertyOnly) != extreme;
        println!("all-{winner} assignment moves under one sweep: {moved}");
    }
}
