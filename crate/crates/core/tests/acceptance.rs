//! Acceptance report: one PASS/FAIL line per criterion, each read literally.
//!
//! Four criteria fail as stated because the source data they rest on is
//! wrong or miscounted. For those the exact computed outcome is pinned, so
//! this target exits non-zero if anything other than the documented
//! shortfall changes. The literal assertions live in `literal_criteria.rs`.

use std::process::ExitCode;
use std::time::Instant;

use wordrep::claims::{self, ClaimOptions};
use wordrep::family::Assets;

/// Facts pinned for a criterion that fails as stated.
fn documented_shortfall(id: u32, assets: &Assets) -> Option<Result<(), String>> {
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    Some(match id {
        1 => {
            let seven = claims::census_row(7);
            let connected = seven.non_representable.iter().filter(|g| g.connected).count();
            check(
                seven.classes == 1044 && seven.non_representable.len() == 26 && connected == 25,
                "expected 26 non-representable 7-vertex classes, 25 connected",
            )
        }
        3 => {
            let outcomes = claims::transcript_outcomes(assets).map_err(|e| e.to_string());
            outcomes.and_then(|o| {
                let rejected: Vec<(&str, Vec<&str>)> = o
                    .iter()
                    .filter(|t| !t.accepted)
                    .map(|t| (t.name.as_str(), t.failures.iter().map(|f| f.split(' ').next().unwrap()).collect()))
                    .collect();
                let all_mutants_rejected = o.iter().all(|t| t.mutations_rejected == t.mutations);
                check(
                    rejected == vec![("B3", vec!["1:7", "2:6"]), ("B7", vec!["1:2", "3:1"])] && all_mutants_rejected,
                    "expected exactly B3 (terminals 1:7, 2:6) and B7 (steps 1:2, 3:1) rejected, every mutant rejected",
                )
            })
        }
        4 => {
            let outcome = |n| claims::orientation_outcome(assets, n).map_err(|e| e.to_string());
            (|| {
                let (a1, a2, a4, a5) = (outcome("A1")?, outcome("A2")?, outcome("A4")?, outcome("A5")?);
                check(
                    a1.semi_transitive
                        && a4.semi_transitive
                        && !a2.complete
                        && a2.completions == Some(vec![vec![(2, 10), (3, 10)]])
                        && a5.shortcut == Some(vec![1, 9, 7, 3])
                        && a5.one_arc_repairs == vec![(9, 7)],
                    "expected A1, A4 semi-transitive; A2 with one completion; A5 repaired only by reversing 9->7",
                )
            })()
        }
        8 => {
            let claim = claims::deletion_cases(assets);
            check(
                claim.summary.starts_with("219/220")
                    && claim.details.iter().any(|d| d.starts_with("line 146 `6--8.10--13.16.17.19`: no forbidden")),
                "expected only line 146 (`6--8.10--13.16.17.19`) to lack a forbidden pattern",
            )
        }
        _ => return None,
    })
}

fn main() -> ExitCode {
    let assets = Assets::bundled();
    let opts = ClaimOptions::default();
    let mut unexpected = 0;
    for id in 1..=10 {
        let start = Instant::now();
        let claim = claims::run_claim(id, &assets, &opts);
        let verdict = if claim.passed { "PASS" } else { "FAIL" };
        println!("[{id}] {verdict} {}: {} ({:.1?})", claim.title, claim.summary, start.elapsed());
        for d in &claim.details {
            println!("      {d}");
        }
        match (claim.passed, documented_shortfall(id, &assets)) {
            (true, None) => {}
            (false, Some(Ok(()))) => println!("      documented shortfall; computed facts unchanged"),
            (false, Some(Err(why))) | (true, Some(Err(why))) => {
                println!("      UNEXPECTED: {why}");
                unexpected += 1;
            }
            (true, Some(Ok(()))) => {
                println!("      UNEXPECTED: passes although a shortfall is documented");
                unexpected += 1;
            }
            (false, None) => {
                println!("      UNEXPECTED: failure");
                unexpected += 1;
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria deviate from the documented outcome");
        ExitCode::FAILURE
    }
}
