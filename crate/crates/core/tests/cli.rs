use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-lr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeff_fixture() {
    let o = bin(&["coeff", "--space", "B:n=7", "--lambda", "5,3,1", "--mu", "5,2", "--nu", "6,5,4,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
    let o = bin(&[
        "coeff", "--space", "B:n=7", "--lambda", "5,3,1", "--mu", "5,2", "--nu", "6,5,4,1",
        "--convention", "standard", "--format", "json",
    ]);
    assert_eq!(
        stdout(&o),
        "{\"space\":\"B:n=7\",\"lambda\":[5,3,1],\"mu\":[5,2],\"nu\":[6,5,4,1],\"coeff\":4}\n"
    );
}

#[test]
fn product_and_pieri() {
    let o = bin(&["product", "--space", "A:k=2,m=2", "--lambda", "1", "--mu", "1"]);
    assert_eq!(stdout(&o), "s[2] + s[1,1]\n");
    let o = bin(&["product", "--space", "B:n=3", "--lambda", "2", "--mu", "2"]);
    assert_eq!(stdout(&o), "2*s[3,1]\n");
    let o = bin(&["pieri", "--space", "B:n=3", "--p", "2", "--lambda", "1"]);
    assert_eq!(stdout(&o), "s[3] + s[2,1]\n");
    let o = bin(&["product", "--space", "C:n=2", "--lambda", "1", "--mu", "1"]);
    assert_eq!(stdout(&o), "2*s[2]\n");
}

#[test]
fn argument_errors_exit_two() {
    let o = bin(&["coeff", "--space", "B:n=4", "--lambda", "3,3", "--mu", "1", "--nu", "3,3,1"]);
    assert_eq!(o.status.code(), Some(2));
    for args in [
        &["coeff", "--space", "B:n=4", "--lambda", "2,x", "--mu", "1", "--nu", "1"][..],
        &["coeff", "--space", "E:n=4", "--lambda", "1", "--mu", "1", "--nu", "2"],
        &["pieri", "--space", "A:k=2,m=2", "--p", "3", "--lambda", "1"],
        &["product", "--space", "A:k=2,m=2", "--lambda", "3", "--mu", "1"],
        &["frobnicate"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = bin(&["coeff", "--space", "B:n=4", "--lambda", "2,x", "--mu", "1", "--nu", "1"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("2,x"));
}

#[test]
fn verify_passes() {
    let o = bin(&["verify", "--space", "C:n=3", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
    let o = bin(&["verify", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn table_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("schubert-lr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b3.jsonl");
    let o = bin(&["table", "--space", "B:n=3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = schubert_lr::cli::parse_table(&text).unwrap();
    assert_eq!(schubert_lr::cli::format_table(&parsed), text);
    assert!(parsed.iter().all(|(s, r)| s.is_some() && r.coeff > 0));
    std::fs::remove_dir_all(&dir).unwrap();

    let d = bin(&["table", "--space", "D:n=4"]);
    let b = bin(&["table", "--space", "B:n=3"]);
    assert_eq!(d.stdout, b.stdout);
}

#[test]
fn traces() {
    let o = bin(&["trace", "--space", "A:k=3,m=3", "--mode", "a", "--lambda", "2,1", "--mu", "1", "--p", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["crossing_violations"], 0);
    }
    let o = bin(&["trace", "--space", "B:n=4", "--mode", "shifted", "--lambda", "1", "--mu", "1", "--p", "2", "--limit", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("NW:")).count(), 2);
    let o = bin(&["trace", "--space", "B:n=4", "--mode", "a", "--lambda", "1", "--mu", "1", "--p", "1"]);
    assert_eq!(o.status.code(), Some(2));
}
