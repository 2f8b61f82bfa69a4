//! Local cohomology ledgers, Lyubeznik numbers and intersection cohomology.

use hypermat::homology::{ih_dims, local_cohomology, lyubeznik, Support};
use hypermat::orbits::Orbit;

fn main() {
    let n = 5;
    let ledger = local_cohomology(Support::Closure(Orbit(5)), n).unwrap();
    for (j, pieces) in &ledger.entries {
        let names: Vec<String> = pieces.iter().map(|p| p.to_string()).collect();
        println!("H^{j}: {}", names.join(" + "));
    }
    print!("{}", lyubeznik(Orbit(7), 4).unwrap().to_tsv());
    println!("IH(O1) at n = {n}: {:?}", ih_dims(Orbit(1), n).unwrap());
}
