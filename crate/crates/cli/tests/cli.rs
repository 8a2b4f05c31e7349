use std::path::PathBuf;
use std::process::{Command, Output};

fn closurelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closurelab"))
        .args(args)
        .env_remove("CLOSURELAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("closurelab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn kappa_of(lang: &str) -> usize {
    let out = closurelab(&["kappa", lang]);
    assert!(out.status.success(), "{out:?}");
    stdout(&out).trim().parse().unwrap()
}

#[test]
fn kappa_of_down_word() {
    let out = closurelab(&["kappa", "down:abc"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "5\n");
    assert_eq!(kappa_of("down:-"), 2);
    assert_eq!(kappa_of("sre:a?b?"), 4);
}

#[test]
fn explicit_alphabet() {
    assert_eq!(kappa_of("up:a"), 2);
    let out = closurelab(&["kappa", "--alphabet", "abc", "up:ab"]);
    assert_eq!(stdout(&out), "3\n");
    let out = closurelab(&["--alphabet", "a", "kappa", "down:ab"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn root_output_feeds_back_in() {
    let out = closurelab(&["root", "--k", "2", "up:ab"]);
    assert!(out.status.success());
    let path = scratch("root.txt");
    std::fs::write(&path, out.stdout).unwrap();
    assert!(kappa_of(path.to_str().unwrap()) >= 4);
    let star = closurelab(&["root", "--star", "up:ab"]);
    assert!(stdout(&star).starts_with("# kappa: "));
}

#[test]
fn closure_and_quotient_of_a_file() {
    let path = scratch("word.txt");
    std::fs::write(
        &path,
        "alphabet: a b\nstates: 3\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let down = closurelab(&["closure", "--down", p]);
    assert!(stdout(&down).starts_with("# kappa: 4\n"));
    let up = closurelab(&["closure", "--up", p]);
    assert!(stdout(&up).starts_with("# kappa: 3\n"));
    let q = closurelab(&["quotient", "--by", "a", p]);
    assert!(stdout(&q).starts_with("# kappa: 3\n"));
    let same = closurelab(&["quotient", "--by", "-", p]);
    assert!(stdout(&same).starts_with("# kappa: 4\n"));
    assert_eq!(
        closurelab(&["quotient", "--by", "c", p]).status.code(),
        Some(2)
    );
    assert_eq!(closurelab(&["closure", p]).status.code(), Some(2));
}

#[test]
fn substitution() {
    let out = closurelab(&["subst", "--map", "a=down:cd", "down:ab"]);
    let text = stdout(&out);
    assert!(text.starts_with("# kappa: 5\nalphabet: b c d\n"), "{text}");
    let bad = closurelab(&["subst", "--map", "a", "down:ab"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sre_modes() {
    assert_eq!(stdout(&closurelab(&["sre", "a?b? + a?"])), "a?b?\n");
    let res = stdout(&closurelab(&["sre", "--residuals", "a?b?"]));
    assert_eq!(res.lines().count(), 4);
    let dfa = stdout(&closurelab(&["sre", "--to-dfa", "[ab]*"]));
    assert!(dfa.starts_with("# kappa: 1\n"));
    assert_eq!(closurelab(&["sre", "a!"]).status.code(), Some(2));
}

#[test]
fn alpha_and_divset() {
    let out = closurelab(&["alpha", "--max-n", "6", "--jobs", "2"]);
    assert!(out.status.success());
    let alphas: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(alphas, ["2", "3", "3", "4", "5", "5"]);
    let unpruned = closurelab(&["alpha", "--max-n", "5", "--no-prune"]);
    assert!(unpruned.status.success());
    let out = closurelab(&["divset", "--n", "4"]);
    let sizes: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(sizes, ["size 2", "size 4", "size 9", "size 21"]);
}

#[test]
fn verify_writes_reports() {
    let json = scratch("wn.json");
    let csv = scratch("wn.csv");
    let out = closurelab(&[
        "verify",
        "sqrt-down-Wn",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS: 5 rows, 0 failed"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["suite"], "sqrt-down-Wn");
    assert_eq!(report["pass"], true);
    assert_eq!(report["rows"].as_array().unwrap().len(), 5);
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(csv_text.lines().count(), 6);
    assert_eq!(closurelab(&["verify", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let run = |seed: &str, name: &str| {
        let path = scratch(name);
        let out = closurelab(&[
            "verify",
            "closure-axioms",
            "--seed",
            seed,
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let mut v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        v["seconds"] = serde_json::Value::Null;
        v
    };
    let a = run("3", "a.json");
    assert_eq!(a, run("3", "b.json"));
    assert_eq!(a["seed"], 3);
}

#[test]
fn dot_export() {
    let path = scratch("ab.dot");
    let out = closurelab(&["dot", "down:ab", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("doublecircle").count(), 3);
}
