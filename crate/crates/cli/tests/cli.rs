use std::process::{Command, Output};

fn freeband(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freeband"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = freeband(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn equality() {
    assert_eq!(stdout(&["eq", "abab", "ab"]), "true\n");
    assert_eq!(stdout(&["eq", "ab", "ba"]), "false\n");
    assert_eq!(
        freeband(&["eq", "ab", "ba", "--exit-status"]).status.code(),
        Some(1)
    );
    assert_eq!(
        freeband(&["eq", "ab", "abab", "--exit-status"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn least_words_and_products() {
    assert_eq!(stdout(&["min", "aabbaabb"]), "ab\n");
    assert_eq!(stdout(&["min", ""]), "\n");
    assert_eq!(stdout(&["mul", "ab", "ba"]), "aba\n");
    assert_eq!(
        stdout(&["mul", "eaec", "bcacbcd"]),
        stdout(&["min", "eaecbcacbcd"])
    );
}

#[test]
fn integer_letters() {
    assert_eq!(stdout(&["--ints", "min", "0,1,0,1,300"]), "0,1,300\n");
    assert_eq!(stdout(&["min", "--ints", "70,70"]), "70\n");
    assert_eq!(stdout(&["--ints", "eq", "1,2,1,2", "1,2"]), "true\n");
}

#[test]
fn bad_input_exits_with_2() {
    for args in [
        vec!["min", "ab!"],
        vec!["--ints", "min", "1,x"],
        vec!["--ints", "min", "99999999999"],
        vec!["eq", "a"],
        vec!["frobnicate"],
        vec!["transducer", "ab", "--format", "png"],
        vec!["bench", "--suite", "nope", "--out", "x.dat"],
    ] {
        let out = freeband(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn transducer_output() {
    let fbt = stdout(&["transducer", "eaec", "--minimal"]);
    assert!(fbt.starts_with("FBT 1 6 0 "));
    assert_eq!(fbt.lines().count(), 7);
    assert_eq!(stdout(&["transducer", "eaec", "--minimal"]), fbt);
    let raw = stdout(&["transducer", "abac"]);
    assert!(raw.starts_with("FBT 1 7 0 3\n"));
    let dot = stdout(&["transducer", "ab", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("label=\"0|b\""));
}

#[test]
fn enumeration() {
    assert_eq!(stdout(&["enum", "0"]), "0\n");
    assert_eq!(stdout(&["enum", "2"]), "6\n");
    assert_eq!(stdout(&["enum", "3"]), "159\n");
    assert_eq!(
        freeband(&["enum", "3", "--max", "10"]).status.code(),
        Some(1)
    );
}

#[test]
fn bench_writes_rows() {
    let dir = std::env::temp_dir().join(format!("freeband-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("interval.dat");
    let path = out.to_str().unwrap();
    stdout(&[
        "bench", "--suite", "interval", "--out", path, "--scale", "0.01", "--seed", "9",
    ]);
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<(f64, f64)> = text
        .lines()
        .map(|l| {
            let (x, t) = l.split_once('\t').unwrap();
            (x.parse().unwrap(), t.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 10 * 2);
    assert!(rows.iter().all(|&(x, t)| x > 0.0 && t >= 0.0));
    // x values depend only on the grid, so reruns agree on them
    stdout(&[
        "bench", "--suite", "interval", "--out", path, "--scale", "0.01", "--seed", "9",
    ]);
    let again = std::fs::read_to_string(&out).unwrap();
    let xs = |s: &str| {
        s.lines()
            .map(|l| l.split('\t').next().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(xs(&text), xs(&again));
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        freeband(&["bench", "--suite", "equal", "--out", path, "--scale", "0"])
            .status
            .code(),
        Some(2)
    );
}
