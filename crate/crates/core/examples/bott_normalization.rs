//! Bott's algorithm on single weights and on triples.

use hypermat::weights::{bott_normalize, triple_normalize, TripleWeight, Weight};

fn main() {
    for r in 3..=8 {
        let lam = Weight::from([-1, -1, -2]).plus_on(r, &[0, 2]);
        println!("{lam} -> {:?}", bott_normalize(&lam));
    }
    let t = TripleWeight::new([0, 2], [0, 2], [1, 0, 0]);
    println!("{t} -> {:?}", triple_normalize(&t));
}
