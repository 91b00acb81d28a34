use std::process::Command;

use eisenstein::export::{export, Format};
use eisenstein::scalars::int;
use eisenstein::series::{Fault, SigmaKind};
use eisenstein::verify::{registry, run_all, run_check, run_checks, Params};
use eisenstein::SeriesCatalog;

fn small() -> Params {
    Params {
        order: 8,
        nmax: 8,
        table_max: 30,
        mmax: 8,
    }
}

fn signed_fault(s: u32, n: u64) -> SeriesCatalog {
    SeriesCatalog::with_fault(Fault {
        kind: SigmaKind::Signed,
        s,
        n,
        delta: int(1),
    })
}

#[test]
fn faults_are_localized() {
    let params = Params {
        order: 16,
        nmax: 16,
        ..Params::default()
    };
    let catalog = signed_fault(3, 5);
    for id in ["T5", "T314", "KS-DE(3)"] {
        let report = run_check(id, &catalog, &params).unwrap();
        assert!(!report.passed(), "{id} should fail");
        assert_eq!(report.first_discrepancy.unwrap().n, 5, "{id}");
    }
    for id in ["RAM-DE", "SIGMA3-CLASSICAL", "JACOBI"] {
        assert!(run_check(id, &catalog, &params).unwrap().passed(), "{id}");
    }
    // the reference table stops at n = 4, so it needs a fault inside its range
    let report = run_check("TABLE2", &signed_fault(3, 2), &params).unwrap();
    assert_eq!(report.first_discrepancy.unwrap().n, 2);
}

#[test]
fn classical_fault_hits_level_one_checks() {
    let catalog = SeriesCatalog::with_fault(Fault {
        kind: SigmaKind::Classical,
        s: 3,
        n: 4,
        delta: int(1),
    });
    let report = run_check("SIGMA3-CLASSICAL", &catalog, &small()).unwrap();
    assert_eq!(report.first_discrepancy.unwrap().n, 4);
    assert!(!run_check("RAM-DE", &catalog, &small()).unwrap().passed());
}

#[test]
fn everything_passes_at_small_order() {
    for report in run_all(&small(), false) {
        assert!(report.passed(), "{}", report.summary());
        assert_eq!(report.first_discrepancy, None);
    }
}

#[test]
fn everything_passes_at_default_order() {
    let reports = run_all(&Params::default(), true);
    assert_eq!(reports.len(), registry().len());
    for report in reports {
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn parallel_matches_sequential() {
    let strip = |mut v: Vec<eisenstein::verify::CheckReport>| {
        v.iter_mut().for_each(|r| r.elapsed_ms = 0);
        v
    };
    let seq = strip(run_checks(
        &registry(),
        &SeriesCatalog::new(),
        &small(),
        false,
    ));
    let par = strip(run_checks(
        &registry(),
        &SeriesCatalog::new(),
        &small(),
        true,
    ));
    assert_eq!(seq, par);
    let ids: Vec<_> = seq.iter().map(|r| r.id.as_str()).collect();
    let ks: Vec<_> = ids.iter().filter(|i| i.starts_with("KS-DE")).collect();
    assert_eq!(ks[0], &"KS-DE(2)");
    assert_eq!(ks[10], &"KS-DE(12)");
}

#[test]
fn exports() {
    assert_eq!(
        export("E2star", 3, Format::Json).unwrap(),
        r#"{"name":"E2star","order":3,"coefficients":["1","8","-8","32"]}"#
    );
    assert_eq!(
        export("theta3", 4, Format::Csv).unwrap(),
        "n,value\n0,1\n1,2\n2,0\n3,0\n4,2\n"
    );
    let tau = export("tau", 10, Format::Csv).unwrap();
    assert!(tau.contains("\n1,1\n2,-24\n3,252\n4,-1472\n"));
    assert!(tau.ends_with("10,-115920\n"));
}

fn cli(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eisenstein"))
        .args(args)
        .output()
        .unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_verify_export_list() {
    let (ok, text) = cli(&[
        "verify",
        "KS-DE m=3",
        "--order",
        "16",
        "--json",
        "--no-timing",
    ]);
    assert!(ok);
    assert_eq!(text, "{\"id\":\"KS-DE(3)\",\"order\":16,\"status\":\"pass\",\"first_discrepancy\":null,\"elapsed_ms\":0}\n");

    let args = [
        "verify",
        "all",
        "--order",
        "8",
        "--nmax",
        "8",
        "--table-max",
        "30",
        "--mmax",
        "8",
        "--json",
        "--no-timing",
    ];
    let (ok, first) = cli(&args);
    assert!(ok);
    let (_, second) = cli(&[&args[..], &["--parallel"]].concat());
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), registry().len());

    let (ok, text) = cli(&["export", "E2star", "--order", "3", "--format", "json"]);
    assert!(ok);
    assert_eq!(
        text.trim_end(),
        r#"{"name":"E2star","order":3,"coefficients":["1","8","-8","32"]}"#
    );

    let (ok, text) = cli(&["list"]);
    assert!(ok && text.contains("TABLE2"));

    assert!(!cli(&["verify", "NOPE"]).0);
    assert!(!cli(&["export", "nope", "--order", "3"]).0);
}
