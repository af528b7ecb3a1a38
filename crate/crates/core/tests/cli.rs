use std::io::Write;

use jordan_lift::cli::commands::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jordan-lift").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn pres(name: &str) -> String {
    format!("{}/presentations/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn nf_of_conjugated_a1() {
    let (code, out, _) = call(&["nf", "family:wujor", "g*a1*g_inv"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "a1 - g + 1");
}

#[test]
fn nf_agrees_between_file_and_family() {
    let (c1, from_file, _) = call(&["nf", &pres("u.pres"), "a2 a1 a2"]);
    let (c2, from_family, _) = call(&["nf", "family:u", "a2 a1 a2"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(from_file, from_family);
}

#[test]
fn nf_with_param_override() {
    let (code, zero, _) = call(&["nf", "family:u", "a2 a1", "--param", "lambda=0"]);
    assert_eq!(code, 0);
    let (_, two, _) = call(&["nf", "family:u", "a2 a1", "--param", "lambda=2"]);
    assert_ne!(zero, two);
    let (bad, _, err) = call(&["nf", "family:u", "a2 a1", "--param", "mu=2"]);
    assert_eq!(bad, 2, "{err}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(call(&["nf", "family:wujor", "a3"]).0, 2);
    assert_eq!(call(&["nf", "family:nope", "a1"]).0, 2);
    assert_eq!(call(&["growth", "family:jordan_plane", "--maxlen", "3"]).0, 2);
    assert_eq!(call(&["verify", "everything"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn parse_error_reports_line_and_column() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "[group]\nnames = g\n[generators]\na1 = skew(g, 1)\n[relations]\ng a1 - a1 g - ) \n").unwrap();
    let (code, _, err) = call(&["nf", f.path().to_str().unwrap(), "a1"]);
    assert_eq!(code, 2);
    assert!(err.contains(":6:"), "{err}");
}

#[test]
fn custom_file_round_trip() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // the Jordan plane written out by hand
    write!(
        f,
        "[generators]\nx1 = skew(1, 1)\nx2 = skew(1, 1)\n[precedence]\nx2 > x1\n[relations]\nx2 x1 - x1 x2 + 1/2 x1^2\n"
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, err) = call(&["nf", path, "x2 x1"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out.trim(), "x1 x2 - 1/2 x1 x1");
    let (code, out, _) = call(&["growth", path, "--maxlen", "20"]);
    assert_eq!(code, 0);
    assert!(out.contains("21"), "{out}");
}

#[test]
fn complete_prints_certificate() {
    let (code, out, _) = call(&["complete", &pres("wujor_bare.pres")]);
    assert_eq!(code, 0);
    assert!(out.contains("exhaustive"), "{out}");
}

#[test]
fn json_report_is_deterministic_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let sub = ["--only", "c07", "--only", "c11.nf"];
    for p in [&a, &b] {
        let mut args = vec!["verify", "all", "--no-timing", "--json", p.to_str().unwrap()];
        args.extend(sub);
        assert_eq!(call(&args).0, 0);
    }
    let ja = std::fs::read(&a).unwrap();
    assert_eq!(ja, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ms"].is_null()));
}

#[test]
fn verdicts_do_not_depend_on_seed() {
    let verdicts = |seed: &str| {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("r.json");
        let code = call(&["verify", "paper", "--seed", seed, "--only", "c11", "--json", p.to_str().unwrap()]).0;
        let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&p).unwrap()).unwrap();
        let statuses: Vec<(String, String)> = v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["id"].as_str().unwrap().to_string(), c["status"].as_str().unwrap().to_string()))
            .collect();
        (code, statuses)
    };
    assert_eq!(verdicts("7"), verdicts("8"));
}
