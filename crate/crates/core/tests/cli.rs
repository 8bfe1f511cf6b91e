use std::path::PathBuf;
use std::process::{Command, Output};

fn seds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seds"))
        .args(args)
        .env_remove("SEDS_STOP_VALUE")
        .env_remove("SEDS_MAX_ITER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/pro")
}

fn game() -> String {
    corpus().join("1846-shusaku-inseki.sgf").to_string_lossy().into_owned()
}

#[test]
fn oracle_check_passes_on_small_boards() {
    let o = seds(&["oracle-check", "--positions", "5", "--size", "9", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let worst: f64 = text.trim().rsplit(' ').next().unwrap().parse().unwrap();
    assert!(worst < 1e-3, "{text}");
}

#[test]
fn bench_on_an_empty_directory_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = seds(&["bench", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no SGF file"));
}

#[test]
fn timing_prints_one_row_per_move_number() {
    let o = seds(&["timing", corpus().to_str().unwrap(), "--moves", "10,30,100,130,200,300"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("move_number,eval_us,rank_ms"));
    let numbers: Vec<&str> = lines.map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(numbers, ["10", "30", "100", "130", "200", "300"]);
}

#[test]
fn eval_and_rank_read_a_game() {
    let o = seds(&["eval", &game(), "--move", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("score: black"));

    let o = seds(&["rank", &game(), "--move", "40", "--top", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("black to play") || text.starts_with("white to play"), "{text}");
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn bench_writes_its_csv_files() {
    let out = tempfile::tempdir().unwrap();
    let o = seds(&[
        "bench",
        corpus().to_str().unwrap(),
        "--moves",
        "20,21",
        "--out",
        out.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let hist = std::fs::read_to_string(out.path().join("histogram.csv")).unwrap();
    assert_eq!(hist.lines().count(), 1 + 2 * 100);
    let surv = std::fs::read_to_string(out.path().join("survival.csv")).unwrap();
    assert!(surv.starts_with("move_number,x,R\n20,0,100"));
}

#[test]
fn usage_and_input_errors_exit_with_one() {
    assert_eq!(seds(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(seds(&["oracle-check", "--size", "40"]).status.code(), Some(1));
    assert_eq!(seds(&["eval", "/nonexistent.sgf"]).status.code(), Some(1));
    assert_eq!(seds(&["eval", &game(), "--move", "100000"]).status.code(), Some(1));
    assert_eq!(seds(&["eval", &game(), "--stop-value", "-1"]).status.code(), Some(1));
    assert_eq!(seds(&["--help"]).status.code(), Some(0));
}
