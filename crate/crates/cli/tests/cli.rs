use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn spart(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spart")).args(args).arg("--out").arg(dir).arg("--quiet").output().expect("spawn spart")
}

fn read(dir: &Path, name: &str) -> String {
    fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Data rows of a table file as `column -> value` lookups.
fn rows(text: &str) -> Vec<Vec<(String, String)>> {
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    let header: Vec<String> = lines.next().unwrap().split(',').map(String::from).collect();
    lines.map(|l| header.iter().cloned().zip(l.split(',').map(String::from)).collect()).collect()
}

fn field<'a>(row: &'a [(String, String)], key: &str) -> &'a str {
    &row.iter().find(|(k, _)| k == key).unwrap_or_else(|| panic!("no column {key}")).1
}

#[test]
fn constants_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = spart(dir.path(), &["constants", "--format", "csv"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = read(dir.path(), "constants_constants.csv");
    assert!(text.starts_with("# config-hash: "));
    let table = rows(&text);
    let get = |name: &str| -> f64 {
        let row = table.iter().find(|r| field(r, "name") == name).unwrap();
        field(row, "value").parse().unwrap()
    };
    assert!((get("nu_pl") - 0.691).abs() < 1e-3);
    assert!((get("nu_hex") - 0.677).abs() < 2e-3);
    assert!((get("two_over_pi") - 2.0 / std::f64::consts::PI).abs() < 1e-12);
    assert_eq!(get("chain_holds"), 1.0);
}

#[test]
fn square_one_three_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let out = spart(dir.path(), &["nodal", "--m", "1", "--n", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = rows(&read(dir.path(), "nodal_summary.csv"));
    assert_eq!(field(&summary[0], "max_mu"), "4");
    let over_pi: f64 = field(&summary[0], "argmax_over_pi").parse().unwrap();
    assert!((over_pi - 0.75).abs() < 1e-9, "{over_pi}");
    let svg = read(dir.path(), "nodal_argmax.svg");
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn same_config_same_bytes() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["partition", "--domain", "unit-square", "--k", "2", "--h", "0.05", "--seed", "3"];
    for d in [&a, &b] {
        let out = spart(d.path(), &args);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() >= 7, "{names:?}");
    for n in names {
        let x = fs::read(a.path().join(&n)).unwrap();
        let y = fs::read(b.path().join(&n)).unwrap();
        assert!(x == y, "{n:?} differs between runs");
    }
}

#[test]
fn hash_tracks_config_not_output_dir() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    spart(a.path(), &["spectrum", "--n-max", "10"]);
    spart(b.path(), &["spectrum", "--n-max", "11"]);
    let first = |d: &Path| read(d, "spectrum_eigenvalues.csv").lines().next().unwrap().to_string();
    assert_ne!(first(a.path()), first(b.path()));
    let c = tempfile::tempdir().unwrap();
    spart(c.path(), &["spectrum", "--n-max", "10"]);
    assert_eq!(read(a.path(), "spectrum_eigenvalues.csv"), read(c.path(), "spectrum_eigenvalues.csv"));
}

#[test]
fn exit_codes_by_family() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| spart(dir.path(), args).status.code();
    assert_eq!(code(&["no-such-command"]), Some(1));
    assert_eq!(code(&["solve", "--domain", "disk radius=-1"]), Some(1));
    assert_eq!(code(&["nodal", "--domain", "unit-disk"]), Some(1));
    assert_eq!(code(&["solve", "--h", "0.3", "--n-max", "1000"]), Some(2));
    assert_eq!(code(&["bipartite", "--checkpoint", "/nonexistent/checkpoint"]), Some(1));
    assert_eq!(code(&["constants", "--format", "csv"]), Some(0));
}

#[test]
fn partition_checkpoint_feeds_other_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = spart(dir.path(), &["partition", "--domain", "unit-square", "--k", "3", "--h", "0.04"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let cp = dir.path().join("partition_checkpoint.txt");
    let cp = cp.to_str().unwrap();

    let out = spart(dir.path(), &["bipartite", "--checkpoint", cp, "--eps", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let s = rows(&read(dir.path(), "bipartite_summary.csv"));
    assert_eq!(field(&s[0], "approximation_bipartite"), "true");
    let before: f64 = field(&s[0], "lambda_original").parse().unwrap();
    let after: f64 = field(&s[0], "lambda_approximation").parse().unwrap();
    assert!(after >= before);

    let out = spart(dir.path(), &["ab", "--check", cp]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = rows(&read(dir.path(), "ab-check_characterization.csv"));
    let left: f64 = field(&r[0], "left").parse().unwrap();
    assert!(left <= 0.03, "relative energy gap {left}");
}

#[test]
fn bounds_reports_are_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let out = spart(dir.path(), &["bounds", "--domain", "unit-hexagon"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for r in rows(&read(dir.path(), "bounds_reports.csv")) {
        let (l, rt, s): (f64, f64, f64) =
            (field(&r, "left").parse().unwrap(), field(&r, "right").parse().unwrap(), field(&r, "slack").parse().unwrap());
        assert!((rt - l - s).abs() <= 1e-12 * (1.0 + s.abs()), "{}", field(&r, "name"));
    }
}
