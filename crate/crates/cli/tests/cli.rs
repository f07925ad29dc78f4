use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pnwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pnwords"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pnwords"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // The command may exit before reading its input (e.g. a bad index file).
    let _ = child.stdin.take().unwrap().write_all(input.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_owned).collect()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn column(o: &Output, idx: usize) -> Vec<i64> {
    lines(o)
        .iter()
        .map(|l| l.split('\t').nth(idx).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn generate_builtins() {
    let o = pnwords(&["generate", "fibonacci", "-n", "34"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "0100101001001010010100100101001001");
    let o = pnwords(&["generate", "thue-morse", "-n", "32"]);
    assert_eq!(stdout(&o).trim(), "01101001100101101001011001101001");
    let o = pnwords(&[
        "generate",
        "mechanical",
        "--upper",
        "--slope",
        "(-1+1*sqrt(5))/2",
        "-n",
        "1",
    ]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = pnwords(&["generate", "lemma3", "-n", "10"]);
    assert_eq!(stdout(&o).trim(), "1111111000");
    assert_eq!(
        stdout(&pnwords(&["generate", "aperiodic", "-n", "10"])),
        stdout(&o)
    );
}

#[test]
fn check_verdicts() {
    let o = pnwords(&["check", "--word", "11100110101"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "NORMAL"));
    let o = pnwords(&["check", "--word", "11100110110"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("VIOLATION"), "{}", stdout(&o));
    let o = pnwords(&["check", "fibonacci", "--prepend-ones", "1", "-n", "10000"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "NORMAL"));
    let o = pnwords(&["check", "fibonacci", "-n", "100"]);
    assert_eq!(code(&o), 1);
    let o = pnwords(&["check", "--zero", "--word", "0001"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn pnf_outputs() {
    let o = pnwords(&["pnf", "fibonacci", "-n", "20"]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), ["10100101001001010010", "00100101001001010010"]);
    let o = pnwords(&["pnf", "thue-morse", "-n", "21"]);
    assert_eq!(
        lines(&o),
        [
            format!("1{}", "10".repeat(10)),
            format!("0{}", "01".repeat(10))
        ]
    );
    let o = pnwords(&["pnf", "--word", "1111"]);
    assert_eq!(lines(&o), ["1111", "1111"]);
    assert!(o.stderr.is_empty());
    let o = pnwords(&["pnf", "fibonacci", "-n", "20", "--window", "10"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn abelian_tables() {
    let o = pnwords(&["abelian", "paperfolding", "-n", "2048", "--range", "1..20"]);
    assert_eq!(column(&o, 0), (1..=20).collect::<Vec<_>>());
    assert_eq!(
        column(&o, 1),
        [2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5]
    );
    let o = pnwords(&["abelian", "--word", "0000", "--range", "1..4"]);
    assert_eq!(column(&o, 1), [1, 1, 1, 1]);
    let o = pnwords(&["abelian", "thue-morse", "-n", "2048", "--range", "1..8"]);
    assert_eq!(column(&o, 1), [2, 3, 2, 3, 2, 3, 2, 3]);
    assert_eq!(
        code(&pnwords(&["abelian", "--word", "0000", "--range", "1..5"])),
        2
    );
}

#[test]
fn density_outputs() {
    assert_eq!(
        stdout(&pnwords(&["density", "--word", "1110000"])).trim(),
        "3/7 7 3"
    );
    assert_eq!(
        stdout(&pnwords(&["density", "--period", "1,10"])).trim(),
        "1/2"
    );
    assert_eq!(
        stdout(&pnwords(&["density", "--period", "0,1"])).trim(),
        "0/1"
    );
    assert_eq!(
        stdout(&pnwords(&["density", "--word", "1"])).trim(),
        "1/1 1 1"
    );
}

#[test]
fn index_build_and_query() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.pnji");
    let p = path.to_str().unwrap();
    let o = pnwords(&["index", "build", "fibonacci", "-n", "20", "-o", p]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));

    let o = with_stdin(
        &["index", "query", "--index", p],
        "3 2\n2 3\n0 0\n15 10\n\n",
    );
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), ["yes", "no", "no", "no"]);

    let o = with_stdin(&["index", "query", "--index", p, "--strict"], "3 2\n");
    assert_eq!(code(&o), 0);
    let o = with_stdin(&["index", "query", "--index", p, "--strict"], "3 2\n0 0\n");
    assert_eq!(code(&o), 1);
    assert_eq!(lines(&o), ["yes", "no"]);

    let o = with_stdin(&["index", "query", "--index", p], "3 x\n");
    assert_eq!(code(&o), 3);
}

#[test]
fn index_format_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.pnji");
    let p = path.to_str().unwrap();
    assert_eq!(
        code(&pnwords(&["index", "build", "--word", "1101001", "-o", p])),
        0
    );
    let bytes = std::fs::read(&path).unwrap();

    std::fs::write(&path, &bytes[..bytes.len() - 3]).unwrap();
    assert_eq!(
        code(&with_stdin(&["index", "query", "--index", p], "1 1\n")),
        3
    );

    let mut bad = bytes.clone();
    bad[0] ^= 0xff;
    std::fs::write(&path, &bad).unwrap();
    assert_eq!(
        code(&with_stdin(&["index", "query", "--index", p], "1 1\n")),
        3
    );

    let missing = dir.path().join("absent.pnji");
    let o = with_stdin(
        &["index", "query", "--index", missing.to_str().unwrap()],
        "1 1\n",
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn word_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    std::fs::write(&path, "11100110101\n").unwrap();
    let o = pnwords(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "NORMAL"));
    let missing = dir.path().join("nope.txt");
    assert_eq!(
        code(&pnwords(&["check", "--file", missing.to_str().unwrap()])),
        3
    );
    std::fs::write(&path, "10x1").unwrap();
    assert_eq!(
        code(&pnwords(&["check", "--file", path.to_str().unwrap()])),
        3
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "no-such-word", "-n", "5"][..],
        &[
            "generate",
            "mechanical",
            "--slope",
            "(0+1*sqrt(4))/2",
            "-n",
            "5",
        ],
        &["generate", "mechanical", "--slope", "banana", "-n", "5"],
        &["generate", "fibonacci"],
        &["check", "--word", "1021"],
        &["check"],
        &["density", "--period", "10"],
        &["density", "--period", "1,"],
        &["abelian", "--word", "0101", "--range", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&pnwords(args)), 2, "{args:?}");
    }
}

#[test]
fn plotdata_rows() {
    let o = pnwords(&["plotdata", "fibonacci", "-n", "5", "--pnf"]);
    let rows = lines(&o);
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0], "0\t0\t0\t0");
    let last: Vec<i64> = rows[5].split('\t').map(|x| x.parse().unwrap()).collect();
    assert_eq!((last[0], last[1], last[3]), (5, -1, -3));

    let o = pnwords(&["plotdata", "thue-morse", "-n", "40", "--pnf"]);
    // 1(10)^ω climbs to 1 and then steps 2,1,2,1,…; its symbols alternate 1,0.
    let pnf1_y = column(&o, 2);
    let pnf0_y = column(&o, 3);
    for n in 1..=40 {
        let want = if n % 2 == 1 { 1 } else { 2 };
        assert_eq!((pnf1_y[n], pnf0_y[n]), (want, -want), "n={n}");
    }

    let o = pnwords(&["plotdata", "--word", "110"]);
    assert_eq!(lines(&o), ["0\t0", "1\t1", "2\t2", "3\t1"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["pnf", "champernowne", "-n", "300"][..],
        &["plotdata", "paperfolding", "-n", "200", "--pnf"],
        &["generate", "lazy-flipext-omega", "-n", "500"],
    ] {
        let (a, b) = (pnwords(args), pnwords(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}
