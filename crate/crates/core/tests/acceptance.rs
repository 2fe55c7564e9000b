//! Acceptance criteria 1–10.
//!
//! The criteria run sequentially in one test so that their runtimes are
//! measured without competing test threads. Each prints one PASS/FAIL line.
//! Besides each criterion's own verdict, the test re-checks the headline
//! numbers through the public API and the `areal-mahler` binary.

use std::process::Command;
use std::time::Instant;

use areal_mahler::arithmetic::{family_values, BuiltinFamily};
use areal_mahler::find_roots;
use areal_mahler::multivariate::{default_mv_config, mv_areal_quadrature, MultiPoly};
use areal_mahler::verify::{self, CriterionResult, DEFAULT_SEED};
use areal_mahler::zeros::angular_discrepancy;

const BIN: &str = env!("CARGO_BIN_EXE_areal-mahler");

fn run_bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN)
        .args(args)
        .env_remove("AREAL_MAHLER_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid JSON")
}

/// Runtime limit of each criterion in seconds (none for 7 and 8).
fn runtime_limit(id: u32) -> Option<f64> {
    match id {
        1 => Some(1.0),
        2 => Some(30.0),
        3 => Some(10.0),
        4 => Some(20.0),
        5 => Some(120.0),
        6 => Some(300.0),
        9 => Some(30.0),
        _ => None,
    }
}

struct Line {
    id: u32,
    name: String,
    passed: bool,
    summary: String,
}

/// Combines a criterion's verdict, its runtime limit and extra checks.
fn judge(r: &CriterionResult, extra: Result<(), String>) -> Line {
    let mut problems = Vec::new();
    if !r.passed {
        problems.push(format!("criterion reported failure: {}", r.observed));
    }
    if let Some(limit) = runtime_limit(r.id) {
        if r.elapsed_secs > limit {
            problems.push(format!("runtime {:.2}s exceeds {limit}s", r.elapsed_secs));
        }
    }
    if let Err(e) = extra {
        problems.push(e);
    }
    let passed = problems.is_empty();
    let summary = if passed {
        format!("{} ({:.2}s)", r.observed, r.elapsed_secs)
    } else {
        problems.join("; ")
    };
    for d in &r.details {
        println!("      {d}");
    }
    Line {
        id: r.id,
        name: r.name.clone(),
        passed,
        summary,
    }
}

fn report(line: &Line) {
    println!(
        "{} criterion {:>2}: {} — {}",
        if line.passed { "PASS" } else { "FAIL" },
        line.id,
        line.name,
        line.summary
    );
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn extra_1() -> Result<(), String> {
    let start = Instant::now();
    let (code, out, err) = run_bin(&["measure", "--poly", "1,1,0,-1,-1,-1,-1,-1,0,1,1", "--json"]);
    let elapsed = start.elapsed().as_secs_f64();
    ensure(code == 0, || format!("measure exited {code}: {err}"))?;
    let m = json(&out)["mahler"].as_f64().unwrap_or(f64::NAN);
    ensure((m - 1.176_280_8).abs() <= 1e-6, || {
        format!("measure reports mahler {m}")
    })?;
    ensure(elapsed < 1.0, || format!("measure took {elapsed:.2}s"))
}

fn extra_3() -> Result<(), String> {
    for n in [10usize, 100, 1000] {
        let v = family_values(BuiltinFamily::NznMinus1, n).map_err(|e| e.to_string())?;
        let nf = n as f64;
        // closed forms: M = n, areal = n · exp(½ · n · (n^{-2/n} − 1))
        let areal = nf * (0.5 * nf * (nf.powf(-2.0 / nf) - 1.0)).exp();
        ensure((v.mahler - nf).abs() <= 1e-8 * nf, || {
            format!("n = {n}: mahler {}", v.mahler)
        })?;
        ensure((v.areal - areal).abs() <= 1e-8 * areal, || {
            format!("n = {n}: areal {} vs {areal}", v.areal)
        })?;
    }
    Ok(())
}

fn extra_4() -> Result<(), String> {
    let p: MultiPoly = "1 0 : 1\n0 1 : 1"
        .parse()
        .map_err(|e: areal_mahler::Error| e.to_string())?;
    let q = mv_areal_quadrature(&p, &default_mv_config()).map_err(|e| e.to_string())?;
    ensure((q - (-0.25f64).exp()).abs() <= 1e-3, || format!("quadrature gives {q}"))
}

fn extra_8() -> Result<(), String> {
    for n in [16usize, 64, 256] {
        let roots = find_roots(&BuiltinFamily::NznMinus1.poly(n).to_complex()).map_err(|e| e.to_string())?;
        let radius = (n as f64).powf(-1.0 / n as f64);
        let worst = roots
            .roots()
            .iter()
            .map(|z| (z.norm() - radius).abs())
            .fold(0.0, f64::max);
        ensure(worst <= 1e-8, || format!("n = {n}: modulus error {worst:.2e}"))?;
        let disc = angular_discrepancy(roots.roots());
        ensure(disc <= 2.0 / n as f64, || format!("n = {n}: discrepancy {disc}"))?;
    }
    Ok(())
}

fn criterion_10() -> Line {
    let start = Instant::now();
    let (code, out, err) = run_bin(&["verify", "--quiet", "--json"]);
    let elapsed = start.elapsed().as_secs_f64();
    let check = || -> Result<String, String> {
        ensure(code == 0, || format!("verify exited {code}: {err}"))?;
        let v = json(&out);
        let criteria = v["criteria"].as_array().cloned().unwrap_or_default();
        let ids: Vec<u64> = criteria.iter().filter_map(|c| c["id"].as_u64()).collect();
        ensure(ids == (1..=9).collect::<Vec<u64>>(), || {
            format!("verify reported criteria {ids:?}")
        })?;
        ensure(
            criteria.iter().all(|c| c["passed"] == true) && v["passed"] == true,
            || "verify JSON contains a failure".into(),
        )?;
        Ok(format!("verify exited 0 with criteria 1–9 passed ({elapsed:.1}s)"))
    };
    let (passed, summary) = match check() {
        Ok(s) => (true, s),
        Err(e) => (false, e),
    };
    Line {
        id: 10,
        name: "verify aggregates 1–9".into(),
        passed,
        summary,
    }
}

#[test]
fn acceptance_criteria() {
    let seed = DEFAULT_SEED;
    let mut lines = Vec::new();
    let mut record = |line: Line| {
        report(&line);
        lines.push(line);
    };
    record(judge(&verify::criterion_1(), extra_1()));
    record(judge(&verify::criterion_2(seed), Ok(())));
    record(judge(&verify::criterion_3(), extra_3()));
    record(judge(&verify::criterion_4(seed), extra_4()));
    record(judge(&verify::criterion_5(seed), Ok(())));
    record(judge(&verify::criterion_6(), Ok(())));
    record(judge(&verify::criterion_7(), Ok(())));
    record(judge(&verify::criterion_8(seed), extra_8()));
    record(judge(&verify::criterion_9(), Ok(())));
    record(criterion_10());
    let failed: Vec<u32> = lines.iter().filter(|l| !l.passed).map(|l| l.id).collect();
    println!(
        "{}/{} acceptance criteria passed",
        lines.len() - failed.len(),
        lines.len()
    );
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn cli_documented_examples() {
    let (code, out, _) = run_bin(&["measure", "--poly", "-1,0,0,0,4", "--json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert!((v["mahler"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert!((v["areal"].as_f64().unwrap() - 4.0 / std::f64::consts::E).abs() < 1e-12);

    let (code, _, err) = run_bin(&["measure", "--poly", ""]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn json_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("p.txt");
    std::fs::write(&spec, "0 0 : 1\n1 0 : 1\n0 1 : 1\n").unwrap();
    let spec = spec.to_str().unwrap();
    let commands: [&[&str]; 4] = [
        &["measure", "--poly", "1+2i,-3,0.5,4", "--oracle", "--p", "1.5", "--json"],
        &[
            "mv",
            "--poly-spec",
            spec,
            "--quad-nodes",
            "64",
            "--mc-samples",
            "20000",
            "--seed",
            "9",
            "--json",
        ],
        &["approx", "--stream", "gap", "--p", "1.5", "--N", "4,8", "--json"],
        &["zeros", "--family", "recip", "--n-list", "8,32", "--json"],
    ];
    for args in commands {
        let (c1, a, e1) = run_bin(args);
        let (c2, b, _) = run_bin(args);
        assert_eq!((c1, c2), (0, 0), "{args:?}: {e1}");
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn seed_environment_variable_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("p.txt");
    std::fs::write(&spec, "0 0 : 1\n1 0 : 1\n0 1 : 1\n").unwrap();
    let spec = spec.to_str().unwrap();
    let args = [
        "mv",
        "--poly-spec",
        spec,
        "--quad-nodes",
        "64",
        "--mc-samples",
        "5000",
        "--json",
    ];
    let seed_of = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(BIN);
        cmd.args(args).env_remove("AREAL_MAHLER_SEED");
        if let Some(e) = env {
            cmd.env("AREAL_MAHLER_SEED", e);
        }
        if let Some(f) = flag {
            cmd.args(["--seed", f]);
        }
        let out = cmd.output().unwrap();
        assert!(out.status.success());
        json(&String::from_utf8(out.stdout).unwrap())["areal_mc"]["seed"]
            .as_u64()
            .unwrap()
    };
    assert_eq!(seed_of(None, None), DEFAULT_SEED);
    assert_eq!(seed_of(Some("17"), None), 17);
    assert_eq!(seed_of(Some("17"), Some("23")), 23);
}
