use std::io::Write;
use std::process::{Command, Output, Stdio};

use liegeo::file::parse;
use liegeo::report::Report;

fn liegeo(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_liegeo"))
        .args(args)
        .env_remove("LIEGEO_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn catalog(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["catalog"];
    full.extend_from_slice(args);
    let out = liegeo(&full, b"");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn json(out: &Output) -> Report {
    Report::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn even_span_of_l6_is_totally_geodesic() {
    let file = catalog(&["Ln", "6"]);
    let out = liegeo(&["tg", "-", "--subalgebra", "even", "--invariance"], &file);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: pass"), "{text}");
}

#[test]
fn inline_subalgebra_and_witness() {
    let file = catalog(&["Ln", "4"]);
    let out = liegeo(&["--json", "tg", "-", "--subalgebra", "0,0,1,0;0,0,0,1"], &file);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert!(r.details.contains_key("witness"));
}

#[test]
fn dim6_search_is_empty() {
    let file = catalog(&["dim6"]);
    for k in ["3", "4"] {
        let out = liegeo(&["--json", "search-tg", "-", "--dim", k, "--budget", "2000"], &file);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json(&out).details["count"], 0);
    }
}

#[test]
fn solv_exp_y_is_not_geodesic() {
    let file = catalog(&["solv_exp"]);
    let out = liegeo(&["geodesics", "-", "--vector", "0,1,0"], &file);
    assert_eq!(out.status.code(), Some(1));
    let out = liegeo(&["geodesics", "-", "--vector", "1,0,0"], &file);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn numeric_geodesic_converges() {
    let file = catalog(&["sl2"]);
    let out = liegeo(&["--json", "geodesics", "-", "--numeric", "--seed", "7"], &file);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let residual: f64 = r.details["residual"].as_str().unwrap().parse().unwrap();
    assert!(residual <= 1e-10);
}

#[test]
fn vergne_of_irregular_example() {
    let file = catalog(&["irreg6"]);
    let out = liegeo(&["--json", "vergne", "-"], &file);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r.details["alpha"], "1");
    assert_eq!(r.details["regularity"], "irregular relative to computed basis");
}

#[test]
fn bad_input_exits_2() {
    let out = liegeo(&["check", "-"], br#"{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[7,"1"]]}]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("brackets[0].coeffs[0][0]"));
    assert_eq!(liegeo(&["check", "-"], b"{").status.code(), Some(2));
    assert_eq!(liegeo(&["catalog", "Ln", "2"], b"").status.code(), Some(2));
    let file = catalog(&["so3"]);
    assert_eq!(liegeo(&["vergne", "-"], &file).status.code(), Some(2));
    assert_eq!(liegeo(&["tg", "-", "--subalgebra", "1,0,0;0,1,0"], &file).status.code(), Some(2));
}

#[test]
fn jacobi_failure() {
    let broken = br#"{"dim":3,"brackets":[{"i":1,"j":2,"coeffs":[[3,"1"]]},{"i":2,"j":3,"coeffs":[[2,"1"]]}]}"#;
    let out = liegeo(&["--json", "check", "-"], broken);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out).details["jacobi"], "fails");
    assert_eq!(liegeo(&["geodesics", "-", "--vector", "1,0,0"], broken).status.code(), Some(2));
}

#[test]
fn catalog_output_round_trips() {
    for args in [&["LC", "2", "-1/3", "5"][..], &["cd2f", "7"], &["irreg6"], &["heis6_2center"]] {
        let text = catalog(args);
        let file = parse(&text).unwrap();
        assert_eq!(file.to_json().as_bytes(), &text[..]);
        let out = liegeo(&["--json", "check", "-"], &text);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}

#[test]
fn output_file_option() {
    let dir = std::env::temp_dir().join(format!("liegeo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h3.json");
    let out = liegeo(&["catalog", "heis3", "-o", path.to_str().unwrap()], b"");
    assert_eq!(out.status.code(), Some(0));
    let out = liegeo(&["check", path.to_str().unwrap()], b"");
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn quick_suite_subset() {
    let out = liegeo(&["--json", "verify-paper", "--level", "quick", "--only", "2,4,11"], b"");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out).details["criteria"].as_array().unwrap().len(), 3);
}
