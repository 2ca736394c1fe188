mod common;

use std::fs;

use common::{fixture, mutrel, read_series, run, snapshot, summary};

#[test]
fn score_micro_corpus() {
    let out = tempfile::tempdir().unwrap();
    let corpus = fixture("micro_corpus.jsonl");
    let res = run(&["score", "--corpus", corpus.to_str().unwrap(), "--query", "alpha beta"], out.path());
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let scores = fs::read_to_string(out.path().join("scores.csv")).unwrap();
    assert_eq!(
        scores,
        "id,raw_f,raw_q,f,q\n\
         d1,3,0.597253156409,0.75,1\n\
         d2,1,0.34657359028,0.25,0.580279210852\n\
         d3,4,0.402359478109,1,0.673683301278\n"
    );
    let s = summary(out.path());
    assert_eq!(s["documents"], 3);
    assert_eq!(s["query_terms"], 2);
    assert_eq!(s["zero_score_documents"], 0);
    assert!(out.path().join("manifest.json").exists());
}

#[test]
fn score_query_matching_nothing_fails() {
    let out = tempfile::tempdir().unwrap();
    let corpus = fixture("micro_corpus.jsonl");
    let res = run(&["score", "--corpus", corpus.to_str().unwrap(), "--query", "military"], out.path());
    assert!(!res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("query matches nothing"));
    assert!(!out.path().join("manifest.json").exists());
}

#[test]
fn score_single_document() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("one.jsonl");
    fs::write(&corpus, "{\"id\":\"solo\",\"text\":\"military parade, military band\"}\n").unwrap();
    let out = dir.path().join("out");
    let res = run(&["score", "--corpus", corpus.to_str().unwrap(), "--query", "military"], &out);
    assert!(res.status.success());
    let scores = fs::read_to_string(out.join("scores.csv")).unwrap();
    assert!(scores.ends_with("solo,2,0.274653072167,1,1\n"), "{scores}");
}

#[test]
fn score_reports_ingestion_line() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("bad.jsonl");
    fs::write(&corpus, "{\"id\":\"a\",\"text\":\"x\"}\n{oops\n").unwrap();
    let res = run(&["score", "--corpus", corpus.to_str().unwrap(), "--query", "x"], &dir.path().join("o"));
    assert!(!res.status.success());
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains("line 2") && err.contains("bad.jsonl"), "{err}");
}

#[test]
fn synth_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["synth", "--kind", "fgn", "--h", "0.8", "--len", "8192", "--seed", "7"];
    assert!(run(&args, a.path()).status.success());
    assert!(run(&args, b.path()).status.success());
    assert_eq!(snapshot(a.path()), snapshot(b.path()));
    assert_eq!(read_series(&a.path().join("series.csv")).len(), 8192);
}

#[test]
fn synth_linear() {
    let out = tempfile::tempdir().unwrap();
    let res = run(&["synth", "--kind", "linear", "--slope", "2", "--intercept", "1", "--len", "3"], out.path());
    assert!(res.status.success());
    assert_eq!(fs::read_to_string(out.path().join("series.csv")).unwrap(), "value\n3\n5\n7\n");
}

#[test]
fn synth_rejects_bad_h() {
    let out = tempfile::tempdir().unwrap();
    let res = run(&["synth", "--kind", "fgn", "--h", "1.2", "--len", "8192"], out.path());
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("--h"));
    let res = run(&["synth", "--kind", "fgn", "--len", "8192"], out.path());
    assert_eq!(res.status.code(), Some(2));
    assert!(!out.path().join("series.csv").exists());
}

#[test]
fn analyze_series_recovers_hurst() {
    let dir = tempfile::tempdir().unwrap();
    let synth_out = dir.path().join("synth");
    assert!(run(&["synth", "--kind", "fgn", "--h", "0.8", "--len", "8192", "--seed", "3"], &synth_out)
        .status
        .success());
    let out = dir.path().join("analysis");
    let series = synth_out.join("series.csv");
    let res = run(&["analyze", "--series", series.to_str().unwrap()], &out);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    for f in ["sequence.csv", "dfa.csv", "hurst_pointwise.csv", "hurst_rs.csv", "poincare.csv", "summary.json", "manifest.json"] {
        assert!(out.join(f).exists(), "missing {f}");
    }
    let s = summary(&out);
    let h = s["hurst"]["h"].as_f64().unwrap();
    let d = s["hurst"]["fractal_dim"].as_f64().unwrap();
    assert!((h - 0.8).abs() < 0.08, "h {h}");
    assert!((h + d - 2.0).abs() < 1e-11);
    assert_eq!(s["occupancy"]["scaling"], "minmax");
    assert!(s["zipf"].is_null() && s["zipf_error"].is_string());
    assert_eq!(s["n"], 8192);
    let dfa = fs::read_to_string(out.join("dfa.csv")).unwrap();
    assert!(dfa.starts_with("n,d\n4,"));
}

fn scores_fixture(dir: &std::path::Path) -> std::path::PathBuf {
    // 200 documents with varying counts of "military" and lengths; a few unmatched
    let corpus = dir.join("news.jsonl");
    let mut lines = String::new();
    for i in 0..200u64 {
        let hits = (i * 7919 + 13) % 9;
        let filler = 3 + (i * 104729) % 40;
        let mut words = vec!["military"; hits as usize];
        words.extend(std::iter::repeat_n("report", filler as usize));
        lines.push_str(&format!("{{\"id\":\"n{i}\",\"text\":\"{}\"}}\n", words.join(" ")));
    }
    fs::write(&corpus, lines).unwrap();
    let out = dir.join("score");
    assert!(run(&["score", "--corpus", corpus.to_str().unwrap(), "--query", "military"], &out)
        .status
        .success());
    out.join("scores.csv")
}

#[test]
fn analyze_scores_self_ranked_is_sorted() {
    let dir = tempfile::tempdir().unwrap();
    let scores = scores_fixture(dir.path());
    let out = dir.path().join("qq");
    let res = run(
        &["analyze", "--scores", scores.to_str().unwrap(), "--ranked-by", "q", "--read-off", "q"],
        &out,
    );
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let seq = read_series(&out.join("sequence.csv"));
    assert!(seq.windows(2).all(|w| w[0] >= w[1]));
    assert!(seq.iter().all(|&v| v > 0.0 && v <= 1.0));
    let s = summary(&out);
    assert_eq!(s["occupancy"]["scaling"], "none");
    assert!(s["zipf"]["n_used"].as_u64().unwrap() >= 4);

    // zero-score rows excluded by default, kept on request
    let with_zero = dir.path().join("qq0");
    assert!(run(
        &["analyze", "--scores", scores.to_str().unwrap(), "--include-zero-scores"],
        &with_zero
    )
    .status
    .success());
    assert!(read_series(&with_zero.join("sequence.csv")).len() > seq.len());
}

#[test]
fn analyze_reverse_series() {
    let dir = tempfile::tempdir().unwrap();
    let scores = scores_fixture(dir.path());
    let out = dir.path().join("fq");
    let res = run(
        &["analyze", "--scores", scores.to_str().unwrap(), "--ranked-by", "f", "--read-off", "q"],
        &out,
    );
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let seq = read_series(&out.join("sequence.csv"));
    assert!(seq.contains(&1.0));
    assert!(!seq.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn analyze_constant_series_names_estimator() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("flat.csv");
    fs::write(&series, format!("value\n{}", "0.5\n".repeat(100))).unwrap();
    let res = run(&["analyze", "--series", series.to_str().unwrap()], &dir.path().join("o"));
    assert!(!res.status.success());
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains("dfa") && err.contains("zero fluctuation"), "{err}");
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("from-env");
    let res = mutrel()
        .env("MUTREL_OUT", &target)
        .args(["synth", "--kind", "white", "--len", "10"])
        .output()
        .unwrap();
    assert!(res.status.success());
    assert_eq!(read_series(&target.join("series.csv")).len(), 10);
}

#[test]
fn replay_reproduces_analysis() {
    let dir = tempfile::tempdir().unwrap();
    let synth_out = dir.path().join("s");
    assert!(run(&["synth", "--kind", "white", "--len", "512", "--seed", "9"], &synth_out).status.success());
    let first = dir.path().join("a1");
    let series = synth_out.join("series.csv");
    assert!(run(&["analyze", "--series", series.to_str().unwrap(), "--grid", "8"], &first).status.success());
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(first.join("manifest.json")).unwrap()).unwrap();
    assert!(manifest["run"]["dfa_windows"].is_array());
    assert_eq!(manifest["run"]["grid"], 8);

    let second = dir.path().join("a2");
    let m = first.join("manifest.json");
    assert!(run(&["replay", "--manifest", m.to_str().unwrap()], &second).status.success());
    assert_eq!(snapshot(&first), snapshot(&second));
}
