// Recompute every expected value in the bundled corpus.
//
// cargo run --release --example corpus_verification

use matroid_workbench::corpus::{verify_corpus, Corpus, VerifyOptions};
use matroid_workbench::{Result, WorkbenchError};

pub fn run_example() -> Result<()> {
    let corpus = Corpus::builtin();
    let report = verify_corpus(&corpus, &VerifyOptions::default());
    for entry in &report.entries {
        let status = if entry.passed { "ok" } else { "FAILED" };
        println!("{:<12} {status} ({} checks)", entry.name, entry.checks.len());
        for check in entry.checks.iter().filter(|c| !c.passed) {
            println!("    {:?}: {}", check.quantity, check.detail.as_deref().unwrap_or(""));
        }
    }
    if report.all_passed {
        Ok(())
    } else {
        Err(WorkbenchError::InternalInvariantViolation("corpus mismatch".into()))
    }
}

#[allow(dead_code)]
fn main() {
    run_example().expect("corpus verification");
}
