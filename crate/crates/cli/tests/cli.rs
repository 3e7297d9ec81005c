use angleworks::PiNumber;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_angleworks")).args(args).output().expect("binary runs")
}

fn first_line(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().lines().next().unwrap().to_string()
}

#[test]
fn angle_examples() {
    assert_eq!(first_line(&["angles", "--family", "beta", "--n", "4", "--k", "1", "--beta", "-1"]), "1/8");
    assert_eq!(first_line(&["angles", "--family", "beta", "--n", "3", "--k", "1", "--beta", "5"]), "1/2");
    assert_eq!(first_line(&["angles", "--family", "betaprime", "--n", "4", "--k", "2", "--beta", "5/2"]), "6/5");
    assert_eq!(
        first_line(&["angles", "--family", "beta", "--n", "5", "--k", "1", "--beta", "-2/2"]),
        "539/288 * pi^-2 - 1/6"
    );
    let out = run(&["angles", "--family", "beta", "--n", "4", "--beta", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap().split(", ").count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("# provenance: "));
}

#[test]
fn fvector_examples() {
    assert_eq!(
        first_line(&["fvector", "--model", "voronoi", "--d", "3"]),
        "96/35 * pi^2, 144/35 * pi^2, 2 + 48/35 * pi^2"
    );
    assert_eq!(first_line(&["fvector", "--model", "poisson", "--d", "3", "--alpha", "2"]), "12, 30, 20");
    assert_eq!(first_line(&["fvector", "--model", "voronoi", "--d", "2"]), "6, 6");
    assert_eq!(first_line(&["fvector", "--model", "zerocell", "--d", "2"]), "1/2 * pi^2, 1/2 * pi^2");
    assert_eq!(
        first_line(&["fvector", "--model", "beta", "--d", "2", "--n", "4", "--beta", "0"]),
        "-35/12 * pi^-2 + 4, -35/12 * pi^-2 + 4"
    );
}

const GAMMA_5_3: f64 = 0.902_745_292_950_934;

#[test]
fn reitzner_examples() {
    assert_eq!(first_line(&["reitzner", "--surface", "sphere", "--d", "4", "--k", "0"]), "1");
    let ball = first_line(&["reitzner", "--surface", "ball", "--d", "2", "--k", "0"]);
    // Gamma(5/3) = (2/3) Gamma(2/3)
    let rs = 2.0 * GAMMA_5_3 * (2.0f64 / 3.0).cbrt() * std::f64::consts::PI.powf(2.0 / 3.0);
    assert!((ball.parse::<f64>().unwrap() - rs).abs() < 1e-12 * rs, "{ball}");
}

#[test]
fn decimal_and_non_half_integer_beta_use_quadrature() {
    let out = run(&["angles", "--family", "beta", "--n", "4", "--k", "1", "--beta", "0.0"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("numeric"));
    let v: f64 = String::from_utf8(out.stdout).unwrap().lines().next().unwrap().parse().unwrap();
    assert!((v - 401.0 / 2560.0).abs() < 1e-10);
    let out = run(&["angles", "--family", "beta", "--n", "4", "--k", "1", "--beta", "1/3"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a half-integer"));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# provenance: numeric"));
    // --numeric forces quadrature without a notice
    let out = run(&["angles", "--family", "beta", "--n", "4", "--k", "1", "--beta", "0", "--numeric"]);
    assert!(out.status.success() && out.stderr.is_empty());
}

#[test]
fn bad_flags_exit_2() {
    for args in [
        vec!["angles", "--family", "beta", "--n", "4", "--k", "7", "--beta", "0"],
        vec!["angles", "--family", "beta", "--n", "4", "--beta", "-3"],
        vec!["angles", "--family", "betaprime", "--n", "4", "--beta", "1"],
        vec!["angles", "--family", "beta", "--n", "4", "--beta", "x"],
        vec!["angles", "--family", "beta", "--n", "4", "--beta", "1/0"],
        vec!["angles", "--family", "gamma", "--n", "4", "--beta", "1"],
        vec!["fvector", "--model", "beta", "--d", "2"],
        vec!["fvector", "--model", "poisson", "--d", "2"],
        vec!["fvector", "--model", "poisson", "--d", "0", "--alpha", "1"],
        vec!["reitzner", "--surface", "sphere", "--d", "3", "--k", "3"],
        vec!["verify", "--suite", "relations", "--max-n", "40"],
        vec!["verify", "--suite", "nope"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.starts_with("error:"), "{args:?}: {err}");
    }
}

#[test]
fn json_values_round_trip() {
    let out = run(&["fvector", "--model", "voronoi", "--d", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "fvector");
    assert_eq!(v["d"], 3);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    for e in entries {
        let x = PiNumber::from_json(&e["value"]).unwrap();
        let t: PiNumber = e["text"].as_str().unwrap().parse().unwrap();
        assert_eq!(x, t);
        assert_eq!(x.to_string(), e["text"].as_str().unwrap());
        assert!(e["decimal"].is_string() && e["route"].is_string() && e["l"].is_u64());
    }
    let out = run(&["angles", "--family", "beta", "--n", "5", "--beta", "0.25", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for e in v["entries"].as_array().unwrap() {
        assert!(e["value"].is_null());
        assert!(e["abs_error"].as_f64().unwrap() <= 1e-10);
        assert_eq!(e["provenance"], "numeric");
    }
}

#[test]
fn csv_and_latex_carry_the_same_decimals() {
    let args = ["angles", "--family", "beta", "--n", "5", "--beta", "-1", "--digits", "20"];
    let csv = String::from_utf8(run(&[&args[..], &["--format", "csv"]].concat()).stdout).unwrap();
    let tex = String::from_utf8(run(&[&args[..], &["--format", "latex"]].concat()).stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "k,value,decimal,provenance");
    let mut n = 0;
    for line in lines {
        let dec = line.split(',').nth(2).unwrap();
        assert_eq!(dec.split('.').nth(1).unwrap().len(), 20);
        assert!(tex.contains(&format!("& {dec} &")), "{dec} missing from latex");
        n += 1;
    }
    assert_eq!(n, 5);
    assert!(tex.starts_with("\\begin{tabular}") && tex.contains("\\frac{539}{288}\\pi^{-2}"));
}

#[test]
fn invocations_are_reproducible() {
    for args in [
        vec!["angles", "--family", "beta", "--n", "6", "--beta", "1/2", "--format", "json"],
        vec!["verify", "--suite", "montecarlo", "--seed", "7", "--trials", "1500"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout);
    }
    let a = run(&["verify", "--suite", "montecarlo", "--seed", "7", "--trials", "1500"]);
    let one = Command::new(env!("CARGO_BIN_EXE_angleworks"))
        .args(["verify", "--suite", "montecarlo", "--seed", "7", "--trials", "1500"])
        .env("ANGLEWORKS_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, one.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().contains("z = "));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "relations", "--max-n", "6"],
        vec!["verify", "--suite", "crosscheck", "--max-n", "6"],
        vec!["verify", "--suite", "montecarlo", "--seed", "42", "--trials", "20000"],
    ] {
        let out = run(&args);
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{text}");
        assert!(text.lines().all(|l| l.starts_with("PASS ") || l.starts_with("# ")));
        assert!(text.trim_end().ends_with("0 failed"));
    }
}

#[test]
fn timing_goes_to_stderr_only() {
    let a = run(&["--timing", "fvector", "--model", "voronoi", "--d", "2"]);
    let b = run(&["fvector", "--model", "voronoi", "--d", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("# time:"));
    assert!(b.stderr.is_empty());
}
