//! Acceptance sweep: prints one pass/fail line per criterion and exits
//! nonzero if any criterion fails.

use hypermat::check::run_all;

fn main() {
    let reports = run_all(&[3, 4, 5, 6]);
    let mut failed = false;
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} {} ({} checks, {} ms)",
            r.id, r.title, r.checks, r.elapsed_ms
        );
        for f in r.failures.iter().take(10) {
            println!("    {f}");
        }
        failed |= !r.passed;
    }
    if failed {
        std::process::exit(1);
    }
}
