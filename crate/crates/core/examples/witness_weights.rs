//! Check every witness weight at n = 5 against all simple modules.

use hypermat::characters::{witness_check, witness_weights};

fn main() {
    for (s, t) in witness_weights(5, 2).unwrap() {
        let r = witness_check(s, &t).unwrap();
        let own = r.verdicts.iter().find(|v| v.simple == r.simple).unwrap();
        println!("{s:>4} {t}  {:?} via {}", r.status, own.verdict.provenance);
    }
}
