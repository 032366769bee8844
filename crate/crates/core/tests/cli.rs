use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use numex::manifest::read_manifest;

fn numex(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_numex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    let text = stdin.to_string();
    // a writer thread keeps large inputs from deadlocking on a full pipe
    let writer = std::thread::spawn(move || input.write_all(text.as_bytes()));
    let out = child.wait_with_output().unwrap();
    writer.join().unwrap().unwrap();
    out
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn normalize_reads_stdin_line_by_line() {
    let out = numex(&["normalize", "--locale", "en"], "in nineteen forty-five\nno numbers here\n\nat 4pm\n");
    assert_eq!(stdout(&out), "in 1945\nno numbers here\n\nat 16:00\n");
}

#[test]
fn normalize_empty_input() {
    assert_eq!(stdout(&numex(&["normalize", "--locale", "de"], "")), "");
}

#[test]
fn normalize_keeps_period_phrase_on_request() {
    let out = numex(&["normalize", "--locale", "en", "--keep-period-phrases"], "at quarter to eight in the evening\n");
    assert_eq!(stdout(&out), "at 19:45 in the evening\n");
}

#[test]
fn normalize_streams_many_lines() {
    let input: String = (0..10_000).map(|i| format!("line {i} has two thousand pieces\n")).collect();
    let text = stdout(&numex(&["normalize", "--locale", "en"], &input));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10_000);
    assert_eq!(lines[9_999], "line 9999 has 2,000 pieces");
}

#[test]
fn verbalize_then_normalize() {
    let spoken = stdout(&numex(&["verbalize", "--locale", "de"], "Das kostet 1.000,50€.\n"));
    assert_eq!(spoken, "Das kostet eintausend Euro und fünfzig Cent.\n");
    assert_eq!(stdout(&numex(&["normalize", "--locale", "de"], &spoken)), "Das kostet 1.000,50€.\n");
}

#[test]
fn missing_locale_is_a_usage_error() {
    let out = numex(&["normalize"], "x\n");
    assert!(!out.status.success());
}

#[test]
fn missing_input_file_exits_2() {
    let out = numex(&["normalize", "--locale", "en", "--input", "/nonexistent/in.txt"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("numex: "));
}

#[test]
fn extract_lists_offsets() {
    let out = stdout(&numex(&["extract"], "Größe 2,000 pieces at 19:45\n"));
    assert_eq!(out, "1\t6\t11\tquantity\t2,000\n1\t22\t27\ttimestamp\t19:45\n");
}

#[test]
fn gen_eval_and_split() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("m.jsonl");
    let gen = |seed: &str| {
        numex(
            &["gen", "--locale", "en", "--type", "year", "--count", "20", "--batches", "3", "--timestamps", "--seed", seed, "--out", path_str(&manifest)],
            "",
        )
    };
    stdout(&gen("7"));
    let first = fs::read_to_string(&manifest).unwrap();
    fs::remove_file(&manifest).unwrap();
    stdout(&gen("7"));
    assert_eq!(fs::read_to_string(&manifest).unwrap(), first, "same seed, same manifest");
    let records = read_manifest(&manifest).unwrap();
    assert!(records.len() >= 100);

    let hyps = dir.path().join("hyp.txt");
    let lines: String = records.iter().map(|r| format!("{}\n", r.formatted)).collect();
    fs::write(&hyps, &lines).unwrap();
    let table = stdout(&numex(&["eval", "--manifest", path_str(&manifest), "--hypotheses", path_str(&hyps)], ""));
    let cells: Vec<&str> = table.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(cells, ["0.0", "100.0", "100.0", "-", "-", "100.0"]);

    let tsv = stdout(&numex(
        &["eval", "--manifest", path_str(&manifest), "--hypotheses", path_str(&hyps), "--format", "tsv"],
        "",
    ));
    let report = numex::eval::parse_tsv(&tsv).unwrap();
    assert_eq!(numex::eval::render_tsv(&report), tsv);

    // one hypothesis short
    let short: String = lines.lines().skip(1).map(|l| format!("{l}\n")).collect();
    fs::write(&hyps, short).unwrap();
    let out = numex(&["eval", "--manifest", path_str(&manifest), "--hypotheses", path_str(&hyps)], "");
    assert_eq!(out.status.code(), Some(2));

    let split_dir = dir.path().join("splits");
    let stats = stdout(&numex(&["split", "--manifest", path_str(&manifest), "--out-dir", path_str(&split_dir), "--seed", "3"], ""));
    assert!(stats.starts_with("Set"));
    let total: usize =
        ["train", "dev", "test"].iter().map(|n| read_manifest(split_dir.join(format!("{n}.jsonl"))).unwrap().len()).sum();
    assert_eq!(total, records.len());
}

#[test]
fn guard_reverts_drifting_lines() {
    let dir = tempfile::tempdir().unwrap();
    let (orig, seg, log) = (dir.path().join("o"), dir.path().join("s"), dir.path().join("log"));
    fs::write(&orig, "the bus leaves at five past seven\na b c d\na b c d e\n").unwrap();
    fs::write(&seg, "the bus leaves at 7:05\na b x y\nv w x y e\n").unwrap();
    let args = ["guard", "--original", path_str(&orig), "--segmented", path_str(&seg), "--log", path_str(&log)];
    let out = stdout(&numex(&args, ""));
    assert_eq!(out, "the bus leaves at 7:05\na b x y\na b c d e\n");
    let decisions: Vec<String> = fs::read_to_string(&log).unwrap().lines().map(|l| l.split('\t').take(2).collect::<Vec<_>>().join(" ")).collect();
    assert_eq!(decisions, ["1 kept", "2 kept", "3 reverted"]);

    let strict = stdout(&numex(&["guard", "--original", path_str(&orig), "--segmented", path_str(&orig), "--threshold", "0"], ""));
    assert_eq!(strict, fs::read_to_string(&orig).unwrap());

    let bad = numex(&["guard", "--original", path_str(&orig), "--segmented", path_str(&seg), "--threshold", "1.5"], "");
    assert_eq!(bad.status.code(), Some(2));
}
