//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use modtop::suite::{glue_hi_instances, round_trip_instances, run_suite, Report};

const SEED: u64 = 0;

fn suite(id: &str, size: usize) -> Vec<Report> {
    run_suite(id, Some(size), SEED).unwrap_or_else(|e| panic!("suite {id}: {e}"))
}

/// All reports pass with nonzero coverage; their summaries form the detail.
fn all_pass(reports: &[Report]) -> (bool, String) {
    let ok = !reports.is_empty() && reports.iter().all(Report::passed);
    let detail = reports
        .iter()
        .map(|r| format!("{} instances / {} covered", r.instances, r.coverage))
        .collect::<Vec<_>>()
        .join("; ");
    let first_bad = reports.iter().find(|r| !r.passed()).map(|r| format!(" first problem: {r}"));
    (ok, detail + &first_bad.unwrap_or_default())
}

fn criterion_1() -> (bool, String) {
    all_pass(&suite("cycle-scheme", 4))
}

fn criterion_2() -> (bool, String) {
    all_pass(&suite("alexandrov-hi", 5))
}

fn criterion_3() -> (bool, String) {
    let reports = suite("td-four", 4);
    let counted = reports[0].note.as_deref() == Some("[1, 4, 29, 355]");
    let (ok, detail) = all_pass(&reports);
    (ok && counted, format!("counts {:?}; {detail}", reports[0].note))
}

fn criterion_4() -> (bool, String) {
    all_pass(&suite("cycle-hi", 4))
}

fn criterion_5() -> (bool, String) {
    all_pass(&suite("open-irresolvable", 4))
}

fn criterion_6() -> (bool, String) {
    all_pass(&suite("loeb-scattered", 4))
}

fn criterion_7() -> (bool, String) {
    all_pass(&suite("indiscrete-pair", 2))
}

fn criterion_8() -> (bool, String) {
    let reports = suite("glue-dmorphism", 4);
    // 4180 transitive frames on at most 4 points, 50 formulas each
    let sized = reports[0].instances == 4180 && reports[1].instances == 4180 * 50;
    let (ok, detail) = all_pass(&reports);
    (ok && sized, detail)
}

fn criterion_9() -> (bool, String) {
    let r = glue_hi_instances(3, 2, 200, SEED).expect("glue-hi");
    let ok = r.passed() && r.instances == 200 && r.coverage == 200;
    (ok, format!("{r}"))
}

fn criterion_10() -> (bool, String) {
    all_pass(&suite("serial-c1-m", 4))
}

fn criterion_11() -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_modtop"))
        .args(["suite", "run", "crowded-td", "--max-size", "5", "--json"])
        .output()
        .expect("run modtop");
    let code = out.status.code();
    let reports: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(e) => return (false, format!("bad json: {e}")),
    };
    let rows = reports.as_array().cloned().unwrap_or_default();
    let vacuous = !rows.is_empty()
        && rows.iter().all(|r| r["verdict"] == "VACUOUS" && r["coverage"] == 0 && r["instances"] == 7331);
    (
        code == Some(0) && vacuous,
        format!("exit {code:?}, {} reports, all VACUOUS with coverage 0 over 7331 spaces: {vacuous}", rows.len()),
    )
}

fn criterion_12() -> (bool, String) {
    let r = round_trip_instances(8, 10_000, SEED);
    (r.passed() && r.instances == 10_000, format!("{r}"))
}

type Criterion = (&'static str, fn() -> (bool, String));

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("cycle scheme C_n vs circumference, transitive frames <= 4", criterion_1),
        ("circumference vs Alexandrov (n+1)-HI, preorders <= 5", criterion_2),
        ("4 d-valid iff T_D, 355 spaces on 4 points", criterion_3),
        ("C_n d-valid iff C-valid iff (n+1)-HI, spaces <= 4", criterion_4),
        ("OI iff starred M d-valid, spaces <= 4", criterion_5),
        ("Loeb d-valid iff scattered, spaces <= 4", criterion_6),
        ("indiscrete pair flags", criterion_7),
        ("glued d-morphism and validity transfer, frames <= 4", criterion_8),
        ("gluing 2-HI cluster spaces stays 2-HI, 200 instances", criterion_9),
        ("D and C_1 give M, transitive frames <= 4", criterion_10),
        ("crowded T_D suite reports VACUOUS and exits 0", criterion_11),
        ("parse/print round trip, 10000 formulas", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        let secs = start.elapsed().as_secs_f64();
        println!("{} criterion {}: {name} [{secs:.2}s] {detail}", if ok { "PASS" } else { "FAIL" }, i + 1);
        failed += !ok as usize;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
