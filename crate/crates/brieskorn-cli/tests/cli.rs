use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use brieskorn_cli::record::RecordDto;

const BIN: &str = env!("CARGO_BIN_EXE_brieskorn");

fn run_in(cache: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env("BRIESKORN_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), args)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["classify", "2,3"])), 1);
    assert_eq!(code(&run(&["classify", "2,x,5"])), 1);
    assert_eq!(code(&run(&["classify", "2,3,7"])), 1);
    assert_eq!(code(&run(&["search", "--dim", "4"])), 1);
    assert_eq!(code(&run(&["bp", "--order", "9"])), 1);
    assert_eq!(code(&run(&["bp", "--order", "4"])), 1);
    assert_eq!(code(&run(&["bp", "--status", "8"])), 1);
    assert_eq!(code(&run(&["bp"])), 1);
    assert_eq!(code(&run(&["bp", "--order", "8", "--status", "10"])), 1);

    let breach = run(&["search", "--dim", "5", "--max-product", "119"]);
    assert_eq!(code(&breach), 2);
    let err = String::from_utf8(breach.stderr).unwrap();
    assert!(err.contains("120"), "stderr names the product: {err}");
}

#[test]
fn bp_orders_and_statuses() {
    for (dim, expected) in [(8, "28"), (12, "992"), (16, "8128"), (20, "261632")] {
        let out = run(&["bp", "--order", &dim.to_string()]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).trim(), expected, "order at dim {dim}");
    }
    for (dim, expected) in [(6, "trivial"), (10, "order_two"), (18, "order_two"), (30, "trivial"), (126, "unknown")] {
        let out = run(&["bp", "--status", &dim.to_string()]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).trim(), expected, "status at dim {dim}");
    }
}

#[test]
fn classify_text_output() {
    let out = run(&["classify", "2,3,7,35", "2,2,2,3,5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("a=(2,3,7,35) dim=5"));
    assert!(text.contains("class=standard bp_group=trivial"));
    assert!(text.contains("moduli_real_dim=10"));
    assert!(text.contains("einstein=certified"));
    assert!(text.contains("a=(2,2,2,3,5) dim=7"));
    assert!(text.contains("class=1 order=28 tau=8"));
    assert!(text.contains("einstein=not_certified"));
}

#[test]
fn classify_sorts_input() {
    let sorted = run(&["classify", "2,3,7,35"]);
    let shuffled = run(&["classify", "35,7,3,2"]);
    assert_eq!(stdout(&sorted), stdout(&shuffled));
}

#[test]
fn classify_json_round_trips() {
    let out = run(&["classify", "2,3,7,35", "2,2,2,2,2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let parsed: Vec<RecordDto> = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.len(), 2);
    assert_eq!(parsed[0].a, vec![2, 3, 7, 35]);
    let reprinted = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(reprinted, text);
}

#[test]
fn search_csv_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dim5.csv");
    let out = run_in(
        dir.path(),
        &["search", "--dim", "5", "--format", "csv", "--out", path.to_str().unwrap()],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim 5: 68 certified spherical links"));

    let text = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 69);
    assert_eq!(
        lines[0],
        "a,dim,topology_type,bp_group,label,tau,fano,klt,uniqueness,moduli_real_dim"
    );
    assert!(lines.contains(&"2 3 7 35,5,kervaire,trivial,standard,,true,true,true,10"));
}

#[test]
fn search_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["search", "--dim", "5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut count = 0;
    for line in text.lines() {
        let dto: RecordDto = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&dto).unwrap(), line);
        assert_eq!(dto.dim, 5);
        count += 1;
    }
    assert_eq!(count, 68);
}

#[test]
fn cache_reruns_are_byte_identical_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache_file = dir.path().join("census-dim5-capnone-prod100000000.jsonl");

    let first = run_in(dir.path(), &["search", "--dim", "5"]);
    assert_eq!(code(&first), 0);
    let bytes = fs::read(&cache_file).expect("cache written");

    let second = run_in(dir.path(), &["search", "--dim", "5"]);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(fs::read(&cache_file).unwrap(), bytes);

    // Drop the last record; if the next run reads 67 records, the cache
    // was trusted rather than recomputed.
    let text = String::from_utf8(bytes.clone()).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines.pop();
    fs::write(&cache_file, lines.join("\n") + "\n").unwrap();
    let doctored = run_in(dir.path(), &["search", "--dim", "5"]);
    assert!(stdout(&doctored).contains("dim 5: 67 certified spherical links"));

    // Metadata mismatch forces a recompute and rewrites the file.
    let text = String::from_utf8(bytes.clone()).unwrap();
    let swapped = text.replacen("\"schema_version\":1", "\"schema_version\":0", 1);
    assert_ne!(swapped, text);
    fs::write(&cache_file, swapped).unwrap();
    let recomputed = run_in(dir.path(), &["search", "--dim", "5"]);
    assert!(stdout(&recomputed).contains("dim 5: 68 certified spherical links"));
    assert_eq!(fs::read(&cache_file).unwrap(), bytes);
}

#[test]
fn cache_distinguishes_specs() {
    let dir = tempfile::tempdir().unwrap();
    run_in(dir.path(), &["search", "--dim", "5"]);
    run_in(dir.path(), &["search", "--dim", "5", "--max-last-entry", "20"]);
    assert!(dir.path().join("census-dim5-capnone-prod100000000.jsonl").exists());
    assert!(dir.path().join("census-dim5-cap20-prod100000000.jsonl").exists());
}

#[test]
fn broken_pipe_exits_quietly() {
    use std::io::Read;
    use std::process::Stdio;

    // Enough output to overflow the pipe buffer after the reader hangs up.
    let vectors = vec!["2,3,7,35"; 600];
    let mut child = Command::new(BIN)
        .arg("classify")
        .args(&vectors)
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut head = [0u8; 16];
    child.stdout.as_mut().unwrap().read_exact(&mut head).unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    let mut err = String::new();
    child.stderr.as_mut().unwrap().read_to_string(&mut err).unwrap();
    assert!(status.success(), "stderr: {err}");
    assert!(err.is_empty(), "stderr: {err}");
}

#[test]
fn capped_dim7_search_is_deterministic_across_jobs() {
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let args = ["search", "--dim", "7", "--max-last-entry", "12", "--format", "csv"];
    let single = run_in(dir1.path(), &[&args[..], &["--jobs", "1"]].concat());
    let multi = run_in(dir2.path(), &[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(code(&single), 0);
    assert_eq!(stdout(&single), stdout(&multi));
    assert!(stdout(&single).lines().count() > 1);
}
