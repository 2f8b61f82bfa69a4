//! Run the acceptance criteria at n = 3 and print a summary.

use hypermat::check::run_all;

fn main() {
    for r in run_all(&[3]) {
        println!(
            "{} {:<40} {}",
            r.id,
            r.title,
            if r.passed { "pass" } else { "fail" }
        );
    }
}
